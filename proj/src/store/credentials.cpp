#include "pqca/store/credentials.hpp"

#include "pqca/common/bytes.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>

#include <stdexcept>
#include <vector>

namespace pqca::store {

namespace {

constexpr std::size_t salt_bytes = 16;

const EVP_MD *digest_by_name(std::string_view name) {
    if (name == "sha256") {
        return EVP_sha256();
    }
    if (name == "sha512") {
        return EVP_sha512();
    }
    return nullptr;
}

Bytes pbkdf2(std::string_view secret, ByteView salt, int iterations, const EVP_MD *md) {
    Bytes out(static_cast<std::size_t>(EVP_MD_get_size(md)));
    if (PKCS5_PBKDF2_HMAC(secret.data(), static_cast<int>(secret.size()), salt.data(), static_cast<int>(salt.size()),
                          iterations, md, static_cast<int>(out.size()), out.data()) != 1) {
        throw std::runtime_error("PBKDF2 failed");
    }
    return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == sep) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

}  // namespace

std::string digest_credentials(std::string_view secret, const DigestParams &params) {
    const EVP_MD *md = digest_by_name(params.hash);
    if (md == nullptr || params.iterations < 1) {
        throw std::invalid_argument("unsupported credential digest parameters");
    }
    const Bytes salt = random_bytes(salt_bytes);
    return "pbkdf2-" + params.hash + "$" + std::to_string(params.iterations) + "$" + base64_encode(salt) + "$" +
           base64_encode(pbkdf2(secret, salt, params.iterations, md));
}

bool check_credentials(std::string_view digest, std::string_view secret) {
    const auto parts = split(digest, '$');
    if (parts.size() != 4 || !parts[0].starts_with("pbkdf2-")) {
        return false;
    }
    const EVP_MD *md = digest_by_name(parts[0].substr(7));
    if (md == nullptr) {
        return false;
    }
    try {
        const int iterations = std::stoi(std::string(parts[1]));
        const Bytes salt = base64_decode(parts[2]);
        const Bytes expected = base64_decode(parts[3]);
        if (iterations < 1) {
            return false;
        }
        const Bytes actual = pbkdf2(secret, salt, iterations, md);
        return actual.size() == expected.size() && CRYPTO_memcmp(actual.data(), expected.data(), actual.size()) == 0;
    } catch (const std::exception &) {
        return false;
    }
}

}  // namespace pqca::store
