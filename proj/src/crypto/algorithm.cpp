#include "pqca/crypto/algorithm.hpp"

#include <algorithm>

namespace pqca::crypto {

std::string_view to_string(Family family) noexcept {
    switch (family) {
    case Family::rsa_sha256:
        return "RSA-SHA256";
    case Family::falcon:
        return "Falcon";
    case Family::dilithium:
        return "Dilithium";
    case Family::sphincs_plus:
        return "SPHINCS+";
    }
    return "?";
}

const std::vector<AlgorithmSpec> &list_algorithms() {
    // RSA sizes: DER SubjectPublicKeyInfo, PKCS#1 private key upper bound,
    // modulus-sized signature. Its level is nominal; RSA has no PQC level.
    static const std::vector<AlgorithmSpec> registry{
        {"falcon512", Family::falcon, 1, 897, 1281, 752},
        {"falcon1024", Family::falcon, 5, 1793, 2305, 1462},
        {"Dilithium2", Family::dilithium, 2, 1312, 2528, 2420},
        {"Dilithium3", Family::dilithium, 3, 1952, 4000, 3293},
        {"Dilithium5", Family::dilithium, 5, 2592, 4864, 4595},
        {"SPHINCS+-SHA2-128f-simple", Family::sphincs_plus, 1, 32, 64, 17088},
        {"SPHINCS+-SHA2-192f-simple", Family::sphincs_plus, 3, 48, 96, 35664},
        {std::string(classical_baseline), Family::rsa_sha256, 1, 294, 1194, 256},
    };
    return registry;
}

const AlgorithmSpec &algorithm_info(std::string_view name) {
    const auto &all = list_algorithms();
    auto it = std::find_if(all.begin(), all.end(), [&](const AlgorithmSpec &spec) { return spec.name == name; });
    if (it == all.end()) {
        throw unknown_algorithm(name);
    }
    return *it;
}

bool is_registered(std::string_view name) noexcept {
    const auto &all = list_algorithms();
    return std::any_of(all.begin(), all.end(), [&](const AlgorithmSpec &spec) { return spec.name == name; });
}

}  // namespace pqca::crypto
