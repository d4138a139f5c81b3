#include "pqca/service/metrics.hpp"

namespace pqca::service {

void Metrics::record(std::string_view operation, double milliseconds) {
    std::lock_guard lock(mutex_);
    auto it = samples_.find(operation);
    if (it == samples_.end()) {
        it = samples_.emplace(std::string(operation), std::vector<double>{}).first;
    }
    it->second.push_back(milliseconds);
}

std::map<std::string, std::vector<double>> Metrics::snapshot() const {
    std::lock_guard lock(mutex_);
    return {samples_.begin(), samples_.end()};
}

std::vector<double> Metrics::samples(std::string_view operation) const {
    std::lock_guard lock(mutex_);
    auto it = samples_.find(operation);
    return it == samples_.end() ? std::vector<double>{} : it->second;
}

void Metrics::clear() {
    std::lock_guard lock(mutex_);
    samples_.clear();
}

void InFlightGauge::enter() noexcept {
    const auto now = current_.fetch_add(1) + 1;
    auto seen = peak_.load();
    while (now > seen && !peak_.compare_exchange_weak(seen, now)) {
    }
}

void InFlightGauge::leave() noexcept { current_.fetch_sub(1); }

}  // namespace pqca::service
