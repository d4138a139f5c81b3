#pragma once

#include "pqca/auth/token_store.hpp"
#include "pqca/cert/certificate.hpp"
#include "pqca/common/clock.hpp"
#include "pqca/service/config.hpp"
#include "pqca/service/metrics.hpp"
#include "pqca/service/wire.hpp"
#include "pqca/store/store.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pqca::service {

/// How an intermediate reaches its root. The HTTP implementation is the
/// normal one; tests substitute in-process or failing transports.
class Upstream {
  public:
    virtual ~Upstream() = default;
    virtual Reply post(std::string_view path, const Json &body) = 0;
};

class HttpUpstream final : public Upstream {
  public:
    explicit HttpUpstream(Address root) : root_(std::move(root)) {}
    Reply post(std::string_view path, const Json &body) override { return post_json(root_, path, body); }

  private:
    Address root_;
};

class upstream_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A certificate plus the key that signs with it. For a root the chain is
/// just the certificate; for an intermediate it runs up to its root.
struct SigningIdentity {
    std::string id;
    cert::Certificate certificate;
    crypto::KeyPair key;
    cert::CertificateChain chain;
    std::vector<std::string> chain_pem;
};

/// Operation names recorded in Metrics.
namespace op {
inline constexpr std::string_view ica_download = "ica_download";
inline constexpr std::string_view ica_upload = "ica_upload";
inline constexpr std::string_view ica_verify = "ica_verify";
inline constexpr std::string_view root_sign = "root_sign";
inline constexpr std::string_view root_verify = "root_verify";
inline constexpr std::string_view ica_sign = "ica_sign";
inline constexpr std::string_view ica_check = "ica_check";
}  // namespace op

/// Certificate authority for one layer of the hierarchy. The same class
/// serves as the root (clients are intermediates) and as an intermediate
/// (clients are end entities, issuing certificate obtained from the root).
///
/// Handlers take the decoded JSON request body and return status + body;
/// HTTP transport lives in ServiceHost.
class CaService {
  public:
    CaService(ServiceConfig config, std::shared_ptr<store::Store> store, std::shared_ptr<const Clock> clock,
              std::unique_ptr<Upstream> upstream = nullptr);

    Reply enroll(const Json &request);
    Reply certify_login(const Json &request);
    Reply certify_download(const Json &request);
    Reply certify_upload(const Json &request);
    Reply verify_login(const Json &request);
    Reply verify_check(const Json &request);

    /// Routes a POST by path; malformed JSON yields 400, unknown paths 404.
    Reply handle(std::string_view path, std::string_view body);

    /// Switches to a fresh key under `name`. A root adds a new self-signed
    /// anchor and keeps the old ones trusted; an intermediate re-certifies
    /// with its root. Throws crypto::unknown_algorithm (state unchanged).
    void set_signing_algorithm(std::string_view name);
    [[nodiscard]] std::string signing_algorithm() const;

    /// Root only: adds an intermediate to the allowlist. Throws store::duplicate_key.
    void register_ica(std::string_view entity_id, std::string_view credentials);
    /// Intermediate with closed enrollment: pre-registers an end entity.
    void register_end_entity(std::string_view entity_id, std::string_view credentials);
    /// Administrative reset of a blacklisted entity. Throws store::missing_row.
    void unblacklist(std::string_view entity_id);

    /// Blacklists entities whose upload window lapsed; returns their ids.
    std::vector<std::string> sweep();

    /// Intermediate only: obtains a certificate from the root unless a
    /// valid one is held. Throws upstream_error.
    void ensure_certified();
    /// Intermediate only: obtains a new certificate even if one is held.
    void recertify();

    [[nodiscard]] std::vector<cert::Certificate> trust_anchors() const;
    /// Root: current anchor. Intermediate: its own certificate (throws if none).
    [[nodiscard]] SigningIdentity current_identity() const;

    [[nodiscard]] ServiceRole role() const noexcept { return config_.role; }
    [[nodiscard]] const ServiceConfig &config() const noexcept { return config_; }
    [[nodiscard]] Metrics &metrics() noexcept { return metrics_; }
    [[nodiscard]] store::Store &store() noexcept { return *store_; }
    [[nodiscard]] Timestamp now() const { return clock_->now(); }

  private:
    struct Authorized {
        store::EntityRecord entity;
    };

    Reply login(const Json &request, auth::Scope scope);
    // Returns the token owner or an error reply.
    std::variant<Authorized, Reply> authorize(const Json &request, auth::Scope scope);

    void load_identities();
    SigningIdentity create_root_anchor(const std::string &algorithm);
    void certify_upstream(const std::string &algorithm);
    void validate_own_chain(const SigningIdentity &identity);
    std::optional<SigningIdentity> identity_for(const store::EntityRecord &entity) const;
    void add_trust_anchor(const cert::Certificate &root);

    ServiceConfig config_;
    std::shared_ptr<store::Store> store_;
    std::shared_ptr<const Clock> clock_;
    std::unique_ptr<Upstream> upstream_;
    auth::TokenStore tokens_;
    Metrics metrics_;

    mutable std::shared_mutex state_mutex_;
    std::string signing_algorithm_;
    // Root: every anchor ever created, current one last.
    std::vector<SigningIdentity> identities_;
    std::vector<cert::Certificate> trust_anchors_;

    std::mutex certify_mutex_;
    std::mutex verify_cache_mutex_;
    std::string verified_identity_;
    Timestamp verified_until_{};
};

}  // namespace pqca::service
