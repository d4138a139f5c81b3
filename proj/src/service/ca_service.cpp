#include "pqca/service/ca_service.hpp"

#include "pqca/cert/chain.hpp"
#include "pqca/cert/pem.hpp"
#include "pqca/store/credentials.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace pqca::service {

namespace {

using store::EntityRecord;
using store::EntityRole;
using store::EntityStatus;

std::optional<std::string> string_field(const Json &json, const char *key) {
    if (!json.is_object() || !json.contains(key) || !json[key].is_string()) {
        return std::nullopt;
    }
    return json[key].get<std::string>();
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

std::string_view token_error_code(auth::token_error::Kind kind) {
    switch (kind) {
    case auth::token_error::Kind::unknown:
        return "unknown-token";
    case auth::token_error::Kind::wrong_scope:
        return "wrong-scope";
    case auth::token_error::Kind::expired:
        return "expired-token";
    }
    return "invalid-token";
}

void require(const Reply &reply, std::string_view step) {
    if (!reply.ok()) {
        throw upstream_error("upstream " + std::string(step) + " failed with status " + std::to_string(reply.status) +
                             (reply.error().empty() ? "" : " (" + reply.error() + ")"));
    }
}

std::string join(const std::vector<std::string> &parts) {
    std::string out;
    for (const auto &p : parts) {
        out += p;
    }
    return out;
}

std::vector<std::string> split_pem_bundle(const std::vector<cert::Certificate> &certs) {
    std::vector<std::string> out;
    for (const auto &c : certs) {
        out.push_back(cert::encode_pem(c));
    }
    return out;
}

std::string new_identity_id(std::string_view prefix) { return std::string(prefix) + "-" + to_hex(random_bytes(6)); }

}  // namespace

CaService::CaService(ServiceConfig config, std::shared_ptr<store::Store> store, std::shared_ptr<const Clock> clock,
                     std::unique_ptr<Upstream> upstream)
    : config_(std::move(config)), store_(std::move(store)), clock_(std::move(clock)), upstream_(std::move(upstream)),
      tokens_(*store_, config_.token_ttl), signing_algorithm_(config_.signing_algorithm) {
    config_.validate();
    if (config_.role == ServiceRole::intermediate && !upstream_) {
        upstream_ = std::make_unique<HttpUpstream>(parse_address(config_.upstream));
    }
    if (!config_.trust_anchors.empty()) {
        std::ifstream in(config_.trust_anchors);
        if (!in) {
            throw config_error("trust_anchors", "cannot read " + config_.trust_anchors);
        }
        std::stringstream text;
        text << in.rdbuf();
        for (auto &root : cert::decode_certificate_bundle(text.str())) {
            add_trust_anchor(root);
        }
    }
    if (!config_.allowlist.empty()) {
        for (const auto &[id, credentials] : read_allowlist(config_.allowlist)) {
            if (store_->get_entity(id)) {
                continue;
            }
            if (config_.role == ServiceRole::root) {
                register_ica(id, credentials);
            } else {
                register_end_entity(id, credentials);
            }
        }
    }
    load_identities();
}

// ---- identities -------------------------------------------------------------

void CaService::add_trust_anchor(const cert::Certificate &root) {
    if (std::find(trust_anchors_.begin(), trust_anchors_.end(), root) == trust_anchors_.end()) {
        trust_anchors_.push_back(root);
    }
}

void CaService::load_identities() {
    std::unique_lock lock(state_mutex_);
    std::optional<SigningIdentity> current;
    for (const auto &record : store_->list_anchors()) {
        SigningIdentity identity;
        identity.id = record.anchor_id;
        identity.chain = record.chain_pem.empty() ? cert::decode_certificate_bundle(record.pem)
                                                  : cert::decode_certificate_bundle(record.chain_pem);
        if (identity.chain.empty()) {
            throw store::store_error("anchor " + record.anchor_id + " has no certificate");
        }
        identity.certificate = identity.chain.front();
        identity.key = crypto::KeyPair{record.algorithm, identity.certificate.subject_public_key, record.secret_key};
        identity.chain_pem = split_pem_bundle(identity.chain);
        add_trust_anchor(identity.chain.back());
        if (record.is_current) {
            current = std::move(identity);
        } else {
            identities_.push_back(std::move(identity));
        }
    }
    if (current) {
        signing_algorithm_ = current->key.algorithm;
        identities_.push_back(std::move(*current));
    }
    if (config_.role == ServiceRole::root && identities_.empty()) {
        identities_.push_back(create_root_anchor(config_.signing_algorithm));
        add_trust_anchor(identities_.back().certificate);
    }
}

SigningIdentity CaService::create_root_anchor(const std::string &algorithm) {
    const auto now = clock_->now();
    auto key = crypto::generate_keypair(algorithm);
    auto root = cert::self_signed_root({config_.common_name, config_.organization, cert::Role::root}, key,
                                       cert::Validity::starting_at(now, cert::default_validity::root),
                                       identities_.size() + 1);
    const auto pem = cert::encode_pem(root);
    SigningIdentity identity{new_identity_id("root"), root, std::move(key), {root}, {pem}};
    store_->put_anchor({identity.id, pem, algorithm, now, identity.key.secret_key, "", true});
    return identity;
}

std::optional<SigningIdentity> CaService::identity_for(const EntityRecord &entity) const {
    std::shared_lock lock(state_mutex_);
    if (identities_.empty()) {
        return std::nullopt;
    }
    for (const auto &identity : identities_) {
        if (identity.id == entity.anchor_id) {
            return identity;
        }
    }
    return identities_.back();
}

SigningIdentity CaService::current_identity() const {
    std::shared_lock lock(state_mutex_);
    if (identities_.empty()) {
        throw upstream_error("no signing certificate held yet");
    }
    return identities_.back();
}

std::vector<cert::Certificate> CaService::trust_anchors() const {
    std::shared_lock lock(state_mutex_);
    return trust_anchors_;
}

std::string CaService::signing_algorithm() const {
    std::shared_lock lock(state_mutex_);
    return signing_algorithm_;
}

void CaService::set_signing_algorithm(std::string_view name) {
    const auto &spec = crypto::algorithm_info(name);
    if (config_.role == ServiceRole::root) {
        std::unique_lock lock(state_mutex_);
        identities_.push_back(create_root_anchor(spec.name));
        add_trust_anchor(identities_.back().certificate);
        signing_algorithm_ = spec.name;
        return;
    }
    std::lock_guard certify(certify_mutex_);
    certify_upstream(spec.name);
}

// ---- intermediate upstream workflow ----------------------------------------

void CaService::ensure_certified() {
    if (config_.role != ServiceRole::intermediate) {
        return;
    }
    std::lock_guard certify(certify_mutex_);
    {
        std::shared_lock lock(state_mutex_);
        if (!identities_.empty() && identities_.back().certificate.validity.contains(clock_->now())) {
            return;
        }
    }
    certify_upstream(signing_algorithm());
}

void CaService::recertify() {
    if (config_.role != ServiceRole::intermediate) {
        throw std::logic_error("only an intermediate CA re-certifies");
    }
    std::lock_guard certify(certify_mutex_);
    certify_upstream(signing_algorithm());
}

void CaService::certify_upstream(const std::string &algorithm) {
    auto key = crypto::generate_keypair(algorithm);
    const Json identity_body{{"entity_id", config_.entity_id}, {"credentials", config_.credentials}};

    require(upstream_->post("/enroll", {{"entity_id", config_.entity_id},
                                        {"common_name", config_.common_name},
                                        {"organization", config_.organization},
                                        {"credentials", config_.credentials}}),
            "enroll");
    auto login = upstream_->post("/certify/login", identity_body);
    require(login, "certify/login");
    const auto token = string_field(login.body, "token");
    if (!token) {
        throw upstream_error("certify/login returned no token");
    }

    const auto csr = cert::build_csr({config_.entity_id, config_.organization, cert::Role::intermediate}, key);
    auto started = std::chrono::steady_clock::now();
    auto download = upstream_->post("/certify/download", {{"token", *token}, {"csr_pem", cert::encode_pem(csr)}});
    metrics_.record(op::ica_download, elapsed_ms(started));
    require(download, "certify/download");

    const auto certificate_pem = string_field(download.body, "certificate_pem");
    if (!certificate_pem || !download.body.contains("chain_pem") || !download.body["chain_pem"].is_array()) {
        throw upstream_error("certify/download returned an incomplete bundle");
    }
    cert::CertificateChain chain;
    std::vector<std::string> chain_pem;
    try {
        for (const auto &item : download.body["chain_pem"]) {
            chain_pem.push_back(item.get<std::string>());
            chain.push_back(cert::decode_certificate_pem(chain_pem.back()));
        }
    } catch (const std::exception &e) {
        throw upstream_error(std::string("certify/download returned an undecodable chain: ") + e.what());
    }
    if (chain.empty() || chain.front() != cert::decode_certificate_pem(*certificate_pem) ||
        chain.front().subject_public_key != key.public_key) {
        throw upstream_error("certify/download returned a certificate for a different key");
    }

    auto anchors = trust_anchors();
    if (config_.trust_anchors.empty()) {
        anchors.push_back(chain.back());
    }
    const auto report = cert::verify_chain(chain, anchors, clock_->now());
    if (!report.valid()) {
        throw upstream_error("root delivered an invalid chain: " + report.reason());
    }

    started = std::chrono::steady_clock::now();
    auto upload = upstream_->post("/certify/upload", {{"token", *token}, {"certificate_pem", *certificate_pem}});
    metrics_.record(op::ica_upload, elapsed_ms(started));
    require(upload, "certify/upload");

    SigningIdentity identity{new_identity_id("ica"), chain.front(), std::move(key), chain, chain_pem};
    store_->put_anchor({identity.id, *certificate_pem, algorithm, clock_->now(), identity.key.secret_key,
                        join(chain_pem), true});
    {
        std::unique_lock lock(state_mutex_);
        add_trust_anchor(chain.back());
        identities_.push_back(std::move(identity));
        signing_algorithm_ = algorithm;
    }
    std::lock_guard cache(verify_cache_mutex_);
    verified_identity_.clear();
}

void CaService::validate_own_chain(const SigningIdentity &identity) {
    std::lock_guard cache(verify_cache_mutex_);
    if (verified_identity_ == identity.id && clock_->now() < verified_until_) {
        return;
    }
    const auto started = std::chrono::steady_clock::now();
    auto login = upstream_->post("/verify/login", {{"entity_id", config_.entity_id}, {"credentials", config_.credentials}});
    require(login, "verify/login");
    const auto token = string_field(login.body, "token");
    if (!token) {
        throw upstream_error("verify/login returned no token");
    }
    auto check = upstream_->post("/verify/check", {{"token", *token}, {"chain_pem", identity.chain_pem}});
    metrics_.record(op::ica_verify, elapsed_ms(started));
    require(check, "verify/check");
    if (!check.body.value("valid", false)) {
        throw upstream_error("root rejected this CA's chain: " + check.body.value("reason", std::string("no reason")));
    }
    verified_identity_ = identity.id;
    verified_until_ = clock_->now() + config_.verify_cache_ttl;
}

// ---- administration ---------------------------------------------------------

void CaService::register_ica(std::string_view entity_id, std::string_view credentials) {
    if (config_.role != ServiceRole::root) {
        throw std::logic_error("intermediates are registered at the root");
    }
    if (entity_id.empty() || credentials.empty()) {
        throw std::invalid_argument("entity id and credentials are required");
    }
    EntityRecord record;
    record.entity_id = std::string(entity_id);
    record.credentials_digest = store::digest_credentials(credentials, config_.credential_digest);
    record.role = EntityRole::intermediate;
    record.status = EntityStatus::registered;
    record.common_name = record.entity_id;
    store_->put_entity(std::move(record));
}

void CaService::register_end_entity(std::string_view entity_id, std::string_view credentials) {
    if (config_.role != ServiceRole::intermediate) {
        throw std::logic_error("end entities are registered at an intermediate");
    }
    EntityRecord record;
    record.entity_id = std::string(entity_id);
    record.credentials_digest = store::digest_credentials(credentials, config_.credential_digest);
    record.role = EntityRole::end_entity;
    record.status = EntityStatus::registered;
    record.common_name = record.entity_id;
    store_->put_entity(std::move(record));
}

void CaService::unblacklist(std::string_view entity_id) {
    store_->transaction([&] {
        auto entity = store_->get_entity(entity_id);
        if (!entity) {
            throw store::missing_row("no such entity: " + std::string(entity_id));
        }
        if (entity->status == EntityStatus::blacklisted) {
            entity->status = EntityStatus::enrolled;
        }
        entity->pending_upload_deadline.reset();
        store_->update_entity(*entity);
    });
}

std::vector<std::string> CaService::sweep() { return store_->sweep_expired(clock_->now()); }

// ---- endpoints ---------------------------------------------------------------

Reply CaService::handle(std::string_view path, std::string_view body) {
    const Json request = Json::parse(body, nullptr, false);
    if (request.is_discarded() || !request.is_object()) {
        return error_reply(400, "malformed", "request body must be a JSON object");
    }
    try {
        if (path == "/enroll") return enroll(request);
        if (path == "/certify/login") return certify_login(request);
        if (path == "/certify/download") return certify_download(request);
        if (path == "/certify/upload") return certify_upload(request);
        if (path == "/verify/login") return verify_login(request);
        if (path == "/verify/check") return verify_check(request);
    } catch (const std::exception &e) {
        return error_reply(500, "internal", e.what());
    }
    return error_reply(404, "not-found", path);
}

Reply CaService::enroll(const Json &request) {
    const auto entity_id = string_field(request, "entity_id");
    const auto credentials = string_field(request, "credentials");
    const auto common_name = string_field(request, "common_name");
    const auto organization = string_field(request, "organization");
    if (!entity_id || entity_id->empty() || !credentials || !common_name || !organization) {
        return error_reply(400, "malformed", "enroll needs entity_id, common_name, organization, credentials");
    }
    const auto expected_role =
        config_.role == ServiceRole::root ? EntityRole::intermediate : EntityRole::end_entity;

    auto existing = store_->get_entity(*entity_id);
    if (!existing) {
        if (config_.role == ServiceRole::root || !config_.open_enrollment) {
            return error_reply(403, "not-registered");
        }
    } else {
        if (existing->role != expected_role) {
            return error_reply(403, "not-registered");
        }
        if (existing->status == EntityStatus::blacklisted) {
            return error_reply(403, "blacklisted");
        }
        if (!store::check_credentials(existing->credentials_digest, *credentials)) {
            return error_reply(401, "bad-credentials");
        }
    }

    if (config_.role == ServiceRole::intermediate) {
        try {
            ensure_certified();
        } catch (const std::exception &e) {
            return error_reply(502, "upstream-failure", e.what());
        }
    }

    std::string new_digest;
    if (!existing) {
        new_digest = store::digest_credentials(*credentials, config_.credential_digest);
    }
    const std::string anchor_id = config_.role == ServiceRole::root ? current_identity().id : std::string();

    std::optional<Reply> refused;
    store_->transaction([&] {
        auto entity = store_->get_entity(*entity_id);
        if (!entity) {
            EntityRecord record;
            record.entity_id = *entity_id;
            record.credentials_digest = new_digest;
            record.role = expected_role;
            record.status = EntityStatus::enrolled;
            record.common_name = *common_name;
            record.organization = *organization;
            store_->put_entity(std::move(record));
            return;
        }
        // Re-check under the transaction: the entity may have changed since.
        if (entity->status == EntityStatus::blacklisted) {
            refused = error_reply(403, "blacklisted");
            return;
        }
        if (!existing) {
            refused = error_reply(409, "concurrent-enrollment");
            return;
        }
        entity->status = EntityStatus::enrolled;
        entity->anchor_id = anchor_id;
        entity->common_name = *common_name;
        entity->organization = *organization;
        store_->update_entity(*entity);
    });
    if (refused) {
        return *refused;
    }
    return {200, {{"status", "enrolled"}}};
}

Reply CaService::login(const Json &request, auth::Scope scope) {
    const auto entity_id = string_field(request, "entity_id");
    const auto credentials = string_field(request, "credentials");
    if (!entity_id || !credentials) {
        return error_reply(400, "malformed", "login needs entity_id and credentials");
    }
    const auto entity = store_->get_entity(*entity_id);
    if (!entity) {
        return error_reply(403, "not-registered");
    }
    if (entity->status == EntityStatus::blacklisted) {
        return error_reply(403, "blacklisted");
    }
    if (!store::check_credentials(entity->credentials_digest, *credentials)) {
        return error_reply(401, "bad-credentials");
    }
    if (entity->status == EntityStatus::registered) {
        return error_reply(403, "not-enrolled");
    }
    const auto token = tokens_.issue(*entity_id, scope, clock_->now());
    return {200, {{"token", token.token_id}, {"expires_at", to_unix(token.expires_at)}}};
}

Reply CaService::certify_login(const Json &request) { return login(request, auth::Scope::certify); }

Reply CaService::verify_login(const Json &request) { return login(request, auth::Scope::verify); }

std::variant<CaService::Authorized, Reply> CaService::authorize(const Json &request, auth::Scope scope) {
    const auto token = string_field(request, "token");
    if (!token) {
        return error_reply(401, "missing-token");
    }
    std::string entity_id;
    try {
        entity_id = tokens_.validate(*token, scope, clock_->now());
    } catch (const auth::token_error &e) {
        if (e.kind() == auth::token_error::Kind::unknown) {
            // The root serves registered intermediates only; a token it never
            // issued names nobody it knows.
            if (config_.role == ServiceRole::root) {
                return error_reply(403, "not-registered");
            }
            return error_reply(401, token_error_code(e.kind()), e.what());
        }
        // A blacklisted owner is refused whatever state the token is in.
        const auto record = store_->find_token(*token);
        const auto owner = record ? store_->get_entity(record->token.entity_id) : std::nullopt;
        if (owner && owner->status == EntityStatus::blacklisted) {
            return error_reply(403, "blacklisted");
        }
        return error_reply(401, token_error_code(e.kind()), e.what());
    }
    auto entity = store_->get_entity(entity_id);
    if (!entity) {
        return error_reply(403, "not-registered");
    }
    if (entity->status == EntityStatus::blacklisted) {
        return error_reply(403, "blacklisted");
    }
    return Authorized{std::move(*entity)};
}

Reply CaService::certify_download(const Json &request) {
    auto auth = authorize(request, auth::Scope::certify);
    if (auto *reply = std::get_if<Reply>(&auth)) {
        return *reply;
    }
    const auto entity = std::get<Authorized>(std::move(auth)).entity;

    const auto csr_pem = string_field(request, "csr_pem");
    if (!csr_pem) {
        return error_reply(400, "malformed", "missing csr_pem");
    }
    cert::CertificateSigningRequest csr;
    try {
        csr = cert::decode_csr_pem(*csr_pem);
    } catch (const cert::cert_error &e) {
        return error_reply(400, "malformed-csr", e.what());
    }
    if (!csr.proof_verifies()) {
        return error_reply(400, "proof-failure");
    }
    const auto expected_role =
        config_.role == ServiceRole::root ? cert::Role::intermediate : cert::Role::end_entity;
    if (csr.subject.role != expected_role || csr.subject.common_name != entity.entity_id) {
        return error_reply(400, "subject-mismatch", "CSR subject must be the token owner with role " +
                                                         std::string(cert::to_string(expected_role)));
    }

    std::optional<SigningIdentity> issuer;
    std::string lineage;
    if (config_.role == ServiceRole::root) {
        issuer = identity_for(entity);
        lineage = entity.entity_id;
    } else {
        try {
            ensure_certified();
            issuer = current_identity();
            validate_own_chain(*issuer);
        } catch (const std::exception &e) {
            return error_reply(502, "upstream-failure", e.what());
        }
        lineage = config_.entity_id;
    }

    const auto now = clock_->now();
    std::uint64_t serial = store_->next_serial(lineage);
    if (config_.role == ServiceRole::root) {
        serial |= static_cast<std::uint64_t>(entity.lineage_number) << 32;
    }
    cert::Certificate issued;
    try {
        const auto started = std::chrono::steady_clock::now();
        issued = cert::issue_certificate(issuer->certificate, issuer->key, csr,
                                         cert::Validity::starting_at(now, cert::default_validity_for(expected_role)),
                                         serial, [&](std::uint64_t s) { return !store_->get_certificate(lineage, s); });
        metrics_.record(config_.role == ServiceRole::root ? op::root_sign : op::ica_sign, elapsed_ms(started));
    } catch (const cert::cert_error &e) {
        return error_reply(400, "issuance-refused", e.what());
    }
    if (!issued.signed_by(issuer->certificate.subject_public_key)) {
        return error_reply(500, "self-check-failed");
    }
    const auto pem = cert::encode_pem(issued);

    bool blocked = false;
    store_->transaction([&] {
        auto current = store_->get_entity(entity.entity_id);
        if (!current || current->status == EntityStatus::blacklisted) {
            blocked = true;
            return;
        }
        store_->put_certificate({lineage, serial, entity.entity_id, pem, now, false});
        current->pending_upload_deadline = now + config_.upload_window;
        store_->update_entity(*current);
    });
    if (blocked) {
        return error_reply(403, "blacklisted");
    }

    Json chain = Json::array({pem});
    for (const auto &link : issuer->chain_pem) {
        chain.push_back(link);
    }
    return {200, {{"certificate_pem", pem}, {"chain_pem", std::move(chain)}}};
}

Reply CaService::certify_upload(const Json &request) {
    auto auth = authorize(request, auth::Scope::certify);
    if (auto *reply = std::get_if<Reply>(&auth)) {
        return *reply;
    }
    const auto entity_id = std::get<Authorized>(auth).entity.entity_id;
    const auto pem = string_field(request, "certificate_pem");
    if (!pem) {
        return error_reply(400, "malformed", "missing certificate_pem");
    }

    std::optional<Reply> refused;
    store_->transaction([&] {
        auto entity = store_->get_entity(entity_id);
        if (!entity || entity->status == EntityStatus::blacklisted) {
            refused = error_reply(403, "blacklisted");
            return;
        }
        const auto pending = store_->find_pending_upload(entity_id, *pem);
        if (!pending) {
            refused = error_reply(409, "upload-mismatch", "no pending issuance matches this certificate");
            return;
        }
        store_->mark_uploaded(pending->lineage_id, pending->serial);
        entity->status = EntityStatus::certified;
        entity->pending_upload_deadline.reset();
        store_->update_entity(*entity);
    });
    if (refused) {
        return *refused;
    }
    return {200, {{"status", "acknowledged"}}};
}

Reply CaService::verify_check(const Json &request) {
    auto auth = authorize(request, auth::Scope::verify);
    if (auto *reply = std::get_if<Reply>(&auth)) {
        return *reply;
    }
    if (!request.contains("chain_pem") || !request["chain_pem"].is_array() || request["chain_pem"].empty()) {
        return error_reply(400, "malformed", "chain_pem must be a non-empty array");
    }
    cert::CertificateChain chain;
    for (const auto &item : request["chain_pem"]) {
        if (!item.is_string()) {
            return error_reply(400, "malformed", "chain_pem entries must be strings");
        }
        try {
            chain.push_back(cert::decode_certificate_pem(item.get<std::string>()));
        } catch (const cert::cert_error &e) {
            return error_reply(400, "malformed-pem", e.what());
        }
    }

    const auto anchors = trust_anchors();
    const auto started = std::chrono::steady_clock::now();
    const auto report = cert::verify_chain(chain, anchors, clock_->now());
    metrics_.record(config_.role == ServiceRole::root ? op::root_verify : op::ica_check, elapsed_ms(started));
    if (!report.valid()) {
        return {200, {{"valid", false}, {"reason", report.reason()}}};
    }
    const auto subject = store_->get_entity(chain.front().subject.common_name);
    if (!subject || subject->status == EntityStatus::blacklisted) {
        return {200, {{"valid", false}, {"reason", "not entitled"}}};
    }
    return {200, {{"valid", true}}};
}

}  // namespace pqca::service
