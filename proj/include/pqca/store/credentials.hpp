#pragma once

#include <string>
#include <string_view>

namespace pqca::store {

struct DigestParams {
    // "sha256" or "sha512".
    std::string hash = "sha256";
    int iterations = 4096;
};

/// Salted PBKDF2 digest, "pbkdf2-<hash>$<iterations>$<salt b64>$<digest b64>".
std::string digest_credentials(std::string_view secret, const DigestParams &params = {});

/// Constant-time comparison against a digest produced by digest_credentials.
[[nodiscard]] bool check_credentials(std::string_view digest, std::string_view secret);

}  // namespace pqca::store
