#pragma once

#include "pqca/common/bytes.hpp"
#include "pqca/crypto/provider.hpp"

#include <map>
#include <mutex>
#include <random>
#include <string>

namespace pqca::test_support {

inline Bytes random_message(std::mt19937_64 &rng, std::size_t max_len = 512) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> byte(0, 255);
    Bytes m(len(rng));
    for (auto &b : m) {
        b = static_cast<std::uint8_t>(byte(rng));
    }
    return m;
}

// RSA keygen dominates test time; reuse one key per algorithm where
// freshness does not matter.
inline const crypto::KeyPair &cached_keypair(const std::string &algorithm, int slot = 0) {
    static std::mutex mutex;
    static std::map<std::pair<std::string, int>, crypto::KeyPair> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(algorithm, slot);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, crypto::generate_keypair(algorithm)).first;
    }
    return it->second;
}

inline std::vector<std::string> algorithm_names() {
    std::vector<std::string> names;
    for (const auto &spec : crypto::list_algorithms()) {
        names.push_back(spec.name);
    }
    return names;
}

}  // namespace pqca::test_support
