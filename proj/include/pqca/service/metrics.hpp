#pragma once

#include <atomic>
#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace pqca::service {

/// Latency samples in milliseconds, keyed by operation name.
class Metrics {
  public:
    void record(std::string_view operation, double milliseconds);
    [[nodiscard]] std::map<std::string, std::vector<double>> snapshot() const;
    [[nodiscard]] std::vector<double> samples(std::string_view operation) const;
    void clear();

  private:
    mutable std::mutex mutex_;
    std::map<std::string, std::vector<double>, std::less<>> samples_;
};

/// Number of requests currently accepted but not finished, and its peak.
class InFlightGauge {
  public:
    void enter() noexcept;
    void leave() noexcept;
    [[nodiscard]] std::size_t current() const noexcept { return current_.load(); }
    [[nodiscard]] std::size_t peak() const noexcept { return peak_.load(); }
    void reset_peak() noexcept { peak_.store(current_.load()); }

  private:
    std::atomic<std::size_t> current_{0};
    std::atomic<std::size_t> peak_{0};
};

}  // namespace pqca::service
