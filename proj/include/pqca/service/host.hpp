#pragma once

#include "pqca/service/ca_service.hpp"
#include "pqca/service/metrics.hpp"

#include <condition_variable>
#include <memory>
#include <mutex>
#include <thread>

namespace pqca::service {

/// Serves a CaService over HTTP: the six public POST endpoints plus
/// GET /health, and when configured an administrative listener guarded by
/// a bearer token. A background thread sweeps lapsed upload windows.
class ServiceHost {
  public:
    explicit ServiceHost(std::shared_ptr<CaService> service);
    ~ServiceHost();
    ServiceHost(const ServiceHost &) = delete;
    ServiceHost &operator=(const ServiceHost &) = delete;

    /// Binds both listeners (port 0 picks a free port) and starts serving.
    /// Throws std::runtime_error if a bind fails.
    void start();
    void stop();

    [[nodiscard]] int port() const noexcept { return port_; }
    [[nodiscard]] int admin_port() const noexcept { return admin_port_; }
    [[nodiscard]] Address address() const;
    [[nodiscard]] Address admin_address() const;

    /// Connections accepted but not yet answered, queued ones included.
    [[nodiscard]] InFlightGauge &gauge() noexcept { return gauge_; }
    [[nodiscard]] CaService &service() noexcept { return *service_; }

  private:
    struct Servers;

    std::shared_ptr<CaService> service_;
    std::unique_ptr<Servers> servers_;
    InFlightGauge gauge_;
    int port_ = 0;
    int admin_port_ = 0;

    std::thread public_thread_;
    std::thread admin_thread_;
    std::thread sweeper_;
    std::mutex sweeper_mutex_;
    std::condition_variable sweeper_wake_;
    bool stopping_ = false;
};

}  // namespace pqca::service
