#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pqca::crypto {

enum class Family { rsa_sha256, falcon, dilithium, sphincs_plus };

std::string_view to_string(Family family) noexcept;

/// Registry metadata for one signature algorithm.
///
/// For the post-quantum entries the sizes are the published parameter-set
/// sizes. `signature_bytes` is exact for every entry except Falcon, where
/// it is the upper bound of the variable-length compressed encoding.
struct AlgorithmSpec {
    std::string name;
    Family family;
    int claimed_nist_level;
    std::size_t public_key_bytes;
    std::size_t secret_key_bytes;
    std::size_t signature_bytes;

    [[nodiscard]] bool is_post_quantum() const noexcept { return family != Family::rsa_sha256; }
    [[nodiscard]] bool fixed_signature_length() const noexcept { return family != Family::falcon; }
};

class crypto_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class unknown_algorithm : public crypto_error {
  public:
    explicit unknown_algorithm(std::string_view name)
        : crypto_error("unknown algorithm: " + std::string(name)) {}
};

class malformed_key : public crypto_error {
    using crypto_error::crypto_error;
};

class provider_failure : public crypto_error {
    using crypto_error::crypto_error;
};

inline constexpr std::string_view classical_baseline = "rsa2048-sha256";

/// All registered algorithms: the seven PQC schemes followed by the classical baseline.
const std::vector<AlgorithmSpec> &list_algorithms();

/// Case-sensitive lookup. Throws unknown_algorithm.
const AlgorithmSpec &algorithm_info(std::string_view name);

[[nodiscard]] bool is_registered(std::string_view name) noexcept;

}  // namespace pqca::crypto
