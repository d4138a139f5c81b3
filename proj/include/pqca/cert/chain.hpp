#pragma once

#include "pqca/cert/certificate.hpp"

#include <cstddef>
#include <span>
#include <string>

namespace pqca::cert {

enum class ChainFailure { none, empty, linkage, role, signature, expired, not_yet_valid, untrusted_root };

std::string_view to_string(ChainFailure failure) noexcept;

struct VerificationReport {
    ChainFailure failure = ChainFailure::none;
    // Chain position of the offending certificate.
    std::size_t index = 0;

    [[nodiscard]] bool valid() const noexcept { return failure == ChainFailure::none; }
    [[nodiscard]] std::string reason() const { return std::string(to_string(failure)); }
};

/// Checks, in order: issuer/subject linkage (anchor last and self-issued),
/// role monotonicity and depth, signatures, validity windows at `at_time`,
/// and membership of the last certificate in `trust_anchors`. Reports the
/// first failing check; never throws on bad input.
VerificationReport verify_chain(std::span<const Certificate> chain, std::span<const Certificate> trust_anchors,
                                Timestamp at_time);

inline constexpr std::size_t max_chain_depth = 3;

}  // namespace pqca::cert
