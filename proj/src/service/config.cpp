#include "pqca/service/config.hpp"

#include "pqca/crypto/algorithm.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pqca::service {

std::string_view to_string(ServiceRole role) noexcept { return role == ServiceRole::root ? "root" : "intermediate"; }

void ServiceConfig::validate() const {
    if (!crypto::is_registered(signing_algorithm)) {
        throw config_error("signing_algorithm", "unknown algorithm '" + signing_algorithm + "'");
    }
    if (role == ServiceRole::intermediate) {
        if (upstream.empty()) {
            throw config_error("upstream", "an intermediate CA needs an upstream root address");
        }
        if (entity_id.empty()) {
            throw config_error("entity_id", "an intermediate CA needs its registered entity id");
        }
    } else if (!upstream.empty()) {
        throw config_error("upstream", "a root CA has no upstream");
    }
    const std::pair<const char *, const std::string *> addresses[] = {
        {"upstream", &upstream}, {"listen", &listen}, {"admin_listen", &admin_listen}};
    for (const auto &[key, value] : addresses) {
        if (value->empty()) {
            continue;
        }
        try {
            parse_address(*value);
        } catch (const std::invalid_argument &e) {
            throw config_error(key, e.what());
        }
    }
    if (listen.empty()) {
        throw config_error("listen", "missing listen address");
    }
    if (!admin_listen.empty() && admin_token.empty()) {
        throw config_error("admin_token", "the admin listener needs a bearer token");
    }
    if (token_ttl.count() <= 0) {
        throw config_error("token_ttl_seconds", "must be positive");
    }
    if (upload_window.count() <= 0) {
        throw config_error("upload_window_seconds", "must be positive");
    }
    if (verify_cache_ttl.count() < 0) {
        throw config_error("verify_cache_ttl_seconds", "must not be negative");
    }
    if (worker_threads == 0) {
        throw config_error("worker_threads", "must be at least 1");
    }
    if (credential_digest.hash != "sha256" && credential_digest.hash != "sha512") {
        throw config_error("credential_hash", "expected sha256 or sha512");
    }
    if (credential_digest.iterations < 1) {
        throw config_error("credential_iterations", "must be positive");
    }
}

namespace {

template <typename T>
T field(const Json &json, const char *key, T fallback) {
    if (!json.contains(key)) {
        return fallback;
    }
    try {
        return json.at(key).get<T>();
    } catch (const Json::exception &) {
        throw config_error(key, "wrong type");
    }
}

}  // namespace

ServiceConfig ServiceConfig::from_json(const Json &json) {
    if (!json.is_object()) {
        throw config_error("<root>", "configuration must be a JSON object");
    }
    static const std::set<std::string> known{
        "role",        "upstream",         "signing_algorithm", "token_ttl_seconds", "upload_window_seconds",
        "verify_cache_ttl_seconds", "allowlist", "store",       "listen",            "admin_listen",
        "admin_token", "entity_id",        "credentials",       "common_name",       "organization",
        "trust_anchors", "open_enrollment", "worker_threads",   "credential_hash",   "credential_iterations"};
    for (const auto &item : json.items()) {
        if (!known.count(item.key())) {
            throw config_error(item.key(), "unknown configuration key");
        }
    }

    ServiceConfig config;
    const auto role = field<std::string>(json, "role", "root");
    if (role == "root") {
        config.role = ServiceRole::root;
    } else if (role == "intermediate") {
        config.role = ServiceRole::intermediate;
    } else {
        throw config_error("role", "expected root or intermediate, got '" + role + "'");
    }
    config.upstream = field<std::string>(json, "upstream", config.upstream);
    config.signing_algorithm = field<std::string>(json, "signing_algorithm", config.signing_algorithm);
    config.token_ttl = std::chrono::seconds{field<std::int64_t>(json, "token_ttl_seconds", config.token_ttl.count())};
    config.upload_window =
        std::chrono::seconds{field<std::int64_t>(json, "upload_window_seconds", config.upload_window.count())};
    config.verify_cache_ttl =
        std::chrono::seconds{field<std::int64_t>(json, "verify_cache_ttl_seconds", config.verify_cache_ttl.count())};
    config.allowlist = field<std::string>(json, "allowlist", config.allowlist);
    config.store = field<std::string>(json, "store", config.store);
    config.listen = field<std::string>(json, "listen", config.listen);
    config.admin_listen = field<std::string>(json, "admin_listen", config.admin_listen);
    config.admin_token = field<std::string>(json, "admin_token", config.admin_token);
    config.entity_id = field<std::string>(json, "entity_id", config.entity_id);
    config.credentials = field<std::string>(json, "credentials", config.credentials);
    config.common_name = field<std::string>(json, "common_name",
                                            config.role == ServiceRole::root ? config.common_name : config.entity_id);
    config.organization = field<std::string>(json, "organization", config.organization);
    config.trust_anchors = field<std::string>(json, "trust_anchors", config.trust_anchors);
    config.open_enrollment = field<bool>(json, "open_enrollment", config.open_enrollment);
    const auto workers = field<std::int64_t>(json, "worker_threads", static_cast<std::int64_t>(config.worker_threads));
    if (workers < 1) {
        throw config_error("worker_threads", "must be at least 1");
    }
    config.worker_threads = static_cast<std::size_t>(workers);
    config.credential_digest.hash = field<std::string>(json, "credential_hash", config.credential_digest.hash);
    config.credential_digest.iterations =
        field<int>(json, "credential_iterations", config.credential_digest.iterations);
    config.validate();
    return config;
}

ServiceConfig ServiceConfig::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("<file>", "cannot read " + path);
    }
    const Json json = Json::parse(in, nullptr, false);
    if (json.is_discarded()) {
        throw config_error("<file>", path + " is not valid JSON");
    }
    return from_json(json);
}

std::vector<std::pair<std::string, std::string>> read_allowlist(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("allowlist", "cannot read " + path);
    }
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string id, credentials, extra;
        if (!(fields >> id)) {
            continue;
        }
        if (!(fields >> credentials) || (fields >> extra)) {
            throw config_error("allowlist", path + ":" + std::to_string(number) + ": expected '<entity_id> <credentials>'");
        }
        entries.emplace_back(std::move(id), std::move(credentials));
    }
    return entries;
}

}  // namespace pqca::service
