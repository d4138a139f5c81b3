#pragma once

#include <atomic>
#include <chrono>
#include <memory>

namespace pqca {

using Timestamp = std::chrono::sys_seconds;

inline std::int64_t to_unix(Timestamp t) noexcept { return t.time_since_epoch().count(); }
inline Timestamp from_unix(std::int64_t seconds) noexcept { return Timestamp{std::chrono::seconds{seconds}}; }

class Clock {
  public:
    virtual ~Clock() = default;
    [[nodiscard]] virtual Timestamp now() const = 0;
};

class SystemClock final : public Clock {
  public:
    [[nodiscard]] Timestamp now() const override {
        return std::chrono::time_point_cast<std::chrono::seconds>(std::chrono::system_clock::now());
    }
};

// Test clock; only moves when told to.
class ManualClock final : public Clock {
  public:
    explicit ManualClock(Timestamp start) : now_(to_unix(start)) {}

    [[nodiscard]] Timestamp now() const override { return from_unix(now_.load()); }
    void set(Timestamp t) { now_.store(to_unix(t)); }
    void advance(std::chrono::seconds by) { now_.fetch_add(by.count()); }

  private:
    std::atomic<std::int64_t> now_;
};

inline std::shared_ptr<Clock> system_clock() { return std::make_shared<SystemClock>(); }

}  // namespace pqca
