#include "pqca/cert/chain.hpp"

#include <algorithm>

namespace pqca::cert {

std::string_view to_string(ChainFailure failure) noexcept {
    switch (failure) {
    case ChainFailure::none:
        return "";
    case ChainFailure::empty:
        return "empty chain";
    case ChainFailure::linkage:
        return "linkage";
    case ChainFailure::role:
        return "role";
    case ChainFailure::signature:
        return "signature";
    case ChainFailure::expired:
        return "expired";
    case ChainFailure::not_yet_valid:
        return "not yet valid";
    case ChainFailure::untrusted_root:
        return "untrusted root";
    }
    return "?";
}

VerificationReport verify_chain(std::span<const Certificate> chain, std::span<const Certificate> trust_anchors,
                                Timestamp at_time) {
    if (chain.empty()) {
        return {ChainFailure::empty, 0};
    }
    const std::size_t last = chain.size() - 1;

    for (std::size_t i = 0; i < last; ++i) {
        if (chain[i].issuer != chain[i + 1].subject || chain[i].is_self_issued()) {
            return {ChainFailure::linkage, i};
        }
    }
    if (!chain[last].is_self_issued()) {
        return {ChainFailure::linkage, last};
    }

    if (chain.size() > max_chain_depth || chain[last].subject.role != Role::root) {
        return {ChainFailure::role, last};
    }
    for (std::size_t i = 0; i < last; ++i) {
        if (!may_issue(chain[i + 1].subject.role, chain[i].subject.role)) {
            return {ChainFailure::role, i};
        }
    }

    for (std::size_t i = 0; i <= last; ++i) {
        const auto &issuer = chain[std::min(i + 1, last)];
        if (chain[i].signature_algorithm != issuer.subject_key_algorithm ||
            !chain[i].signed_by(issuer.subject_public_key)) {
            return {ChainFailure::signature, i};
        }
    }

    for (std::size_t i = 0; i <= last; ++i) {
        if (at_time < chain[i].validity.not_before) {
            return {ChainFailure::not_yet_valid, i};
        }
        if (at_time > chain[i].validity.not_after) {
            return {ChainFailure::expired, i};
        }
    }

    const bool trusted = std::any_of(trust_anchors.begin(), trust_anchors.end(),
                                     [&](const Certificate &anchor) { return anchor == chain[last]; });
    if (!trusted) {
        return {ChainFailure::untrusted_root, last};
    }
    return {};
}

}  // namespace pqca::cert
