#pragma once

#include "pqca/common/bytes.hpp"
#include "pqca/crypto/algorithm.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace pqca::crypto {

struct KeyPair {
    std::string algorithm;
    Bytes public_key;
    // Never leaves the process through a wire-facing operation.
    Bytes secret_key;
};

struct Signature {
    std::string algorithm;
    Bytes bytes;

    bool operator==(const Signature &) const = default;
};

KeyPair generate_keypair(std::string_view name);

/// Throws unknown_algorithm, or malformed_key when `secret_key` was not
/// produced for `name`.
Signature sign(std::string_view name, ByteView secret_key, ByteView message);

/// Returns false for any invalid, truncated or foreign signature and for
/// public keys that do not parse. Only an unregistered `name` throws.
bool verify(std::string_view name, ByteView public_key, ByteView message, const Signature &signature);

/// Per-thread counts of sign/verify/keygen calls, split by algorithm class.
struct OperationCounters {
    std::uint64_t classical = 0;
    std::uint64_t post_quantum = 0;
};

OperationCounters thread_operation_counters() noexcept;

}  // namespace pqca::crypto
