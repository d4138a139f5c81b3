#include "pqca/service/host.hpp"

#include "pqca/crypto/algorithm.hpp"

#include "httplib.h"

namespace pqca::service {

namespace {

// Counts a connection from the moment it is accepted, so requests waiting
// for a worker are in flight too.
class GaugedQueue final : public httplib::TaskQueue {
  public:
    GaugedQueue(std::size_t threads, InFlightGauge &gauge) : pool_(threads), gauge_(gauge) {}

    bool enqueue(std::function<void()> fn) override {
        gauge_.enter();
        const bool queued = pool_.enqueue([this, fn = std::move(fn)] {
            struct Leave {
                InFlightGauge &gauge;
                ~Leave() { gauge.leave(); }
            } leave{gauge_};
            fn();
        });
        if (!queued) {
            gauge_.leave();
        }
        return queued;
    }

    void shutdown() override { pool_.shutdown(); }

  private:
    httplib::ThreadPool pool_;
    InFlightGauge &gauge_;
};

void send(httplib::Response &res, const Reply &reply) {
    res.status = reply.status;
    res.set_content(reply.body.dump(), "application/json");
}

Json parse_body(const httplib::Request &req) {
    auto body = Json::parse(req.body, nullptr, false);
    return body.is_object() ? body : Json();
}

std::optional<std::string> field(const Json &body, const char *key) {
    if (!body.is_object() || !body.contains(key) || !body[key].is_string()) {
        return std::nullopt;
    }
    return body[key].get<std::string>();
}

int bind(httplib::Server &server, const Address &address) {
    if (address.port == 0) {
        const int port = server.bind_to_any_port(address.host);
        if (port < 0) {
            throw std::runtime_error("cannot bind " + address.host);
        }
        return port;
    }
    if (!server.bind_to_port(address.host, address.port)) {
        throw std::runtime_error("cannot bind " + address.to_string());
    }
    return address.port;
}

}  // namespace

struct ServiceHost::Servers {
    httplib::Server public_server;
    httplib::Server admin_server;
    bool admin_enabled = false;
};

ServiceHost::ServiceHost(std::shared_ptr<CaService> service)
    : service_(std::move(service)), servers_(std::make_unique<Servers>()) {
    auto &server = servers_->public_server;
    const auto threads = std::max<std::size_t>(1, service_->config().worker_threads);
    server.new_task_queue = [this, threads] { return new GaugedQueue(threads, gauge_); };
    server.set_keep_alive_max_count(1);

    for (const char *path : {"/enroll", "/certify/login", "/certify/download", "/certify/upload", "/verify/login",
                             "/verify/check"}) {
        server.Post(path, [this](const httplib::Request &req, httplib::Response &res) {
            send(res, service_->handle(req.path, req.body));
        });
    }
    server.Get("/health", [this](const httplib::Request &, httplib::Response &res) {
        send(res, {200,
                   {{"status", "ok"},
                    {"role", to_string(service_->role())},
                    {"signing_algorithm", service_->signing_algorithm()}}});
    });

    auto &admin = servers_->admin_server;
    servers_->admin_enabled = !service_->config().admin_listen.empty();
    admin.set_pre_routing_handler([this](const httplib::Request &req, httplib::Response &res) {
        if (req.get_header_value("Authorization") != "Bearer " + service_->config().admin_token) {
            send(res, error_reply(401, "unauthorized"));
            return httplib::Server::HandlerResponse::Handled;
        }
        return httplib::Server::HandlerResponse::Unhandled;
    });
    admin.Post("/admin/set-algorithm", [this](const httplib::Request &req, httplib::Response &res) {
        const auto name = field(parse_body(req), "name");
        if (!name) {
            return send(res, error_reply(400, "malformed", "missing name"));
        }
        try {
            service_->set_signing_algorithm(*name);
        } catch (const crypto::unknown_algorithm &e) {
            return send(res, error_reply(400, "unknown-algorithm", e.what()));
        } catch (const std::exception &e) {
            return send(res, error_reply(502, "upstream-failure", e.what()));
        }
        send(res, {200, {{"signing_algorithm", service_->signing_algorithm()}}});
    });
    admin.Post("/admin/unblacklist", [this](const httplib::Request &req, httplib::Response &res) {
        const auto id = field(parse_body(req), "entity_id");
        if (!id) {
            return send(res, error_reply(400, "malformed", "missing entity_id"));
        }
        try {
            service_->unblacklist(*id);
        } catch (const store::missing_row &e) {
            return send(res, error_reply(404, "unknown-entity", e.what()));
        }
        send(res, {200, {{"status", "enrolled"}}});
    });
    admin.Post("/admin/register-ica", [this](const httplib::Request &req, httplib::Response &res) {
        const auto body = parse_body(req);
        const auto id = field(body, "entity_id");
        const auto credentials = field(body, "credentials");
        if (!id || !credentials) {
            return send(res, error_reply(400, "malformed", "need entity_id and credentials"));
        }
        try {
            service_->register_ica(*id, *credentials);
        } catch (const store::duplicate_key &e) {
            return send(res, error_reply(409, "duplicate", e.what()));
        } catch (const std::exception &e) {
            return send(res, error_reply(400, "refused", e.what()));
        }
        send(res, {200, {{"status", "registered"}}});
    });
    admin.Post("/admin/recertify", [this](const httplib::Request &, httplib::Response &res) {
        if (service_->role() != ServiceRole::intermediate) {
            return send(res, error_reply(400, "refused", "only an intermediate re-certifies"));
        }
        try {
            service_->recertify();
        } catch (const std::exception &e) {
            return send(res, error_reply(502, "upstream-failure", e.what()));
        }
        send(res, {200, {{"signing_algorithm", service_->signing_algorithm()},
                         {"issuer_algorithm", service_->current_identity().certificate.signature_algorithm}}});
    });
    admin.Get("/admin/status", [this](const httplib::Request &, httplib::Response &res) {
        Json anchors = Json::array();
        for (const auto &root : service_->trust_anchors()) {
            anchors.push_back({{"serial", root.serial}, {"algorithm", root.subject_key_algorithm}});
        }
        send(res, {200,
                   {{"role", to_string(service_->role())},
                    {"signing_algorithm", service_->signing_algorithm()},
                    {"trust_anchors", anchors},
                    {"in_flight_peak", gauge_.peak()}}});
    });
}

ServiceHost::~ServiceHost() { stop(); }

Address ServiceHost::address() const { return {parse_address(service_->config().listen).host, port_}; }

Address ServiceHost::admin_address() const {
    return {parse_address(service_->config().admin_listen).host, admin_port_};
}

void ServiceHost::start() {
    port_ = bind(servers_->public_server, parse_address(service_->config().listen));
    if (servers_->admin_enabled) {
        admin_port_ = bind(servers_->admin_server, parse_address(service_->config().admin_listen));
        admin_thread_ = std::thread([this] { servers_->admin_server.listen_after_bind(); });
        servers_->admin_server.wait_until_ready();
    }
    public_thread_ = std::thread([this] { servers_->public_server.listen_after_bind(); });
    servers_->public_server.wait_until_ready();

    stopping_ = false;
    sweeper_ = std::thread([this] {
        std::unique_lock lock(sweeper_mutex_);
        while (!sweeper_wake_.wait_for(lock, std::chrono::seconds{1}, [this] { return stopping_; })) {
            lock.unlock();
            try {
                service_->sweep();
            } catch (const std::exception &) {
                // Retried on the next tick.
            }
            lock.lock();
        }
    });
}

void ServiceHost::stop() {
    {
        std::lock_guard lock(sweeper_mutex_);
        stopping_ = true;
    }
    sweeper_wake_.notify_all();
    if (sweeper_.joinable()) {
        sweeper_.join();
    }
    servers_->public_server.stop();
    servers_->admin_server.stop();
    if (public_thread_.joinable()) {
        public_thread_.join();
    }
    if (admin_thread_.joinable()) {
        admin_thread_.join();
    }
}

}  // namespace pqca::service
