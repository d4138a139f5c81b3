#pragma once

#include "pqca/service/wire.hpp"
#include "pqca/store/credentials.hpp"

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pqca::service {

enum class ServiceRole { root, intermediate };

std::string_view to_string(ServiceRole role) noexcept;

class config_error : public std::runtime_error {
  public:
    config_error(std::string key, const std::string &message)
        : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
    [[nodiscard]] const std::string &key() const noexcept { return key_; }

  private:
    std::string key_;
};

/// Service configuration. JSON keys match the member names, with the
/// durations suffixed `_seconds` and the paths named `store`, `allowlist`
/// and `trust_anchors`.
struct ServiceConfig {
    ServiceRole role = ServiceRole::root;
    // host:port of the root; required iff intermediate.
    std::string upstream;
    std::string signing_algorithm = "rsa2048-sha256";
    std::chrono::seconds token_ttl{300};
    std::chrono::seconds upload_window{60};
    std::chrono::seconds verify_cache_ttl{30};
    std::string allowlist;
    std::string store = ":memory:";
    std::string listen = "127.0.0.1:8080";
    // Empty disables the administrative listener.
    std::string admin_listen;
    std::string admin_token;
    // Identity of an intermediate at its upstream root.
    std::string entity_id;
    std::string credentials;
    std::string common_name = "pqca-root";
    std::string organization = "pqca";
    // Optional PEM bundle of roots an intermediate trusts up front.
    std::string trust_anchors;
    // Intermediate only: false requires EEs to be pre-registered.
    bool open_enrollment = true;
    std::size_t worker_threads = 8;
    store::DigestParams credential_digest;

    /// Throws config_error naming the offending key.
    void validate() const;

    static ServiceConfig from_json(const Json &json);
    static ServiceConfig load(const std::string &path);
};

/// Reads "entity_id credentials" pairs, one per line; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> read_allowlist(const std::string &path);

}  // namespace pqca::service
