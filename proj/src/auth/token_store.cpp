#include "pqca/auth/token_store.hpp"

#include "pqca/common/bytes.hpp"

namespace pqca::auth {

std::string_view to_string(Scope scope) noexcept { return scope == Scope::certify ? "certify" : "verify"; }

std::optional<Scope> scope_from_string(std::string_view text) noexcept {
    if (text == "certify") {
        return Scope::certify;
    }
    if (text == "verify") {
        return Scope::verify;
    }
    return std::nullopt;
}

void MemoryTokenRepository::insert_token(const SessionToken &token) {
    std::lock_guard lock(mutex_);
    if (!tokens_.emplace(token.token_id, TokenRecord{token, false}).second) {
        throw std::logic_error("token id collision");
    }
}

std::optional<TokenRecord> MemoryTokenRepository::find_token(std::string_view token_id) {
    std::lock_guard lock(mutex_);
    auto it = tokens_.find(std::string(token_id));
    if (it == tokens_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void MemoryTokenRepository::mark_token_expired(std::string_view token_id) {
    std::lock_guard lock(mutex_);
    if (auto it = tokens_.find(std::string(token_id)); it != tokens_.end()) {
        it->second.expired = true;
    }
}

TokenStore::TokenStore(TokenRepository &repository, std::chrono::seconds ttl) : repository_(repository), ttl_(ttl) {
    if (ttl_.count() <= 0) {
        throw std::invalid_argument("token TTL must be positive");
    }
}

SessionToken TokenStore::issue(std::string_view entity_id, Scope scope, Timestamp now) {
    SessionToken token{base64url_encode(random_bytes(token_entropy_bytes)), std::string(entity_id), scope, now,
                       now + ttl_};
    repository_.insert_token(token);
    return token;
}

std::string TokenStore::validate(std::string_view token_id, Scope scope, Timestamp now) {
    auto record = repository_.find_token(token_id);
    if (!record) {
        throw token_error(token_error::Kind::unknown, "unknown token");
    }
    if (record->token.scope != scope) {
        throw token_error(token_error::Kind::wrong_scope, "token is scoped to " +
                                                              std::string(to_string(record->token.scope)) +
                                                              ", not " + std::string(to_string(scope)));
    }
    if (record->expired || now >= record->token.expires_at) {
        if (!record->expired) {
            repository_.mark_token_expired(token_id);
        }
        throw token_error(token_error::Kind::expired, "token expired");
    }
    return record->token.entity_id;
}

}  // namespace pqca::auth
