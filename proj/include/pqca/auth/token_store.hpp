#pragma once

#include "pqca/common/clock.hpp"

#include <chrono>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

namespace pqca::auth {

enum class Scope { certify, verify };

std::string_view to_string(Scope scope) noexcept;
std::optional<Scope> scope_from_string(std::string_view text) noexcept;

struct SessionToken {
    std::string token_id;
    std::string entity_id;
    Scope scope = Scope::certify;
    Timestamp issued_at{};
    Timestamp expires_at{};
};

struct TokenRecord {
    SessionToken token;
    // Latched once a validation has failed for expiry.
    bool expired = false;
};

/// Storage seam for tokens; persistence implements it for durable stores.
class TokenRepository {
  public:
    virtual ~TokenRepository() = default;
    virtual void insert_token(const SessionToken &token) = 0;
    [[nodiscard]] virtual std::optional<TokenRecord> find_token(std::string_view token_id) = 0;
    virtual void mark_token_expired(std::string_view token_id) = 0;
};

class MemoryTokenRepository final : public TokenRepository {
  public:
    void insert_token(const SessionToken &token) override;
    std::optional<TokenRecord> find_token(std::string_view token_id) override;
    void mark_token_expired(std::string_view token_id) override;

  private:
    std::mutex mutex_;
    std::unordered_map<std::string, TokenRecord> tokens_;
};

class token_error : public std::runtime_error {
  public:
    enum class Kind { unknown, wrong_scope, expired };

    token_error(Kind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {}
    [[nodiscard]] Kind kind() const noexcept { return kind_; }

  private:
    Kind kind_;
};

inline constexpr std::chrono::seconds default_token_ttl{300};
// 256 bits of randomness, base64url without padding.
inline constexpr std::size_t token_entropy_bytes = 32;

/// Issues and validates timed, service-scoped bearer tokens.
class TokenStore {
  public:
    explicit TokenStore(TokenRepository &repository, std::chrono::seconds ttl = default_token_ttl);

    SessionToken issue(std::string_view entity_id, Scope scope, Timestamp now);

    /// Returns the owning entity. A token is valid strictly before its
    /// expiry and only for the scope it was issued for. Throws token_error.
    std::string validate(std::string_view token_id, Scope scope, Timestamp now);

    [[nodiscard]] std::chrono::seconds ttl() const noexcept { return ttl_; }

  private:
    TokenRepository &repository_;
    std::chrono::seconds ttl_;
};

}  // namespace pqca::auth
