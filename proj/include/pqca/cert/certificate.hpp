#pragma once

#include "pqca/common/bytes.hpp"
#include "pqca/common/clock.hpp"
#include "pqca/crypto/provider.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pqca::cert {

enum class Role : std::uint8_t { root = 1, intermediate = 2, end_entity = 3 };

std::string_view to_string(Role role) noexcept;

/// True when a certificate of role `issuer` may sign one of role `subject`:
/// root -> {root, intermediate}, intermediate -> end-entity, end-entity -> nothing.
[[nodiscard]] bool may_issue(Role issuer, Role subject) noexcept;

struct DistinguishedName {
    std::string common_name;
    std::string organization;
    Role role = Role::end_entity;

    bool operator==(const DistinguishedName &) const = default;
};

struct Validity {
    Timestamp not_before{};
    Timestamp not_after{};

    [[nodiscard]] bool contains(Timestamp t) const noexcept { return t >= not_before && t <= not_after; }

    static Validity starting_at(Timestamp start, std::chrono::seconds length) { return {start, start + length}; }

    bool operator==(const Validity &) const = default;
};

namespace default_validity {
inline constexpr std::chrono::seconds root{std::chrono::days{3650}};
inline constexpr std::chrono::seconds intermediate{std::chrono::days{365}};
inline constexpr std::chrono::seconds end_entity{std::chrono::days{30}};
}  // namespace default_validity

std::chrono::seconds default_validity_for(Role role) noexcept;

struct CertificateSigningRequest {
    DistinguishedName subject;
    std::string key_algorithm;
    Bytes public_key;
    crypto::Signature proof_signature;

    /// Canonical bytes covered by the proof-of-possession signature.
    [[nodiscard]] Bytes body() const;
    [[nodiscard]] bool proof_verifies() const;

    bool operator==(const CertificateSigningRequest &) const = default;
};

struct Certificate {
    std::uint64_t serial = 0;
    DistinguishedName subject;
    DistinguishedName issuer;
    std::string subject_key_algorithm;
    Bytes subject_public_key;
    std::string signature_algorithm;
    Validity validity;
    crypto::Signature signature;

    /// Canonical to-be-signed bytes.
    [[nodiscard]] Bytes tbs() const;
    [[nodiscard]] bool is_self_issued() const noexcept { return subject == issuer; }
    /// Checks this certificate's signature under `issuer_public_key`.
    [[nodiscard]] bool signed_by(ByteView issuer_public_key) const;

    bool operator==(const Certificate &) const = default;
};

/// Leaf first, trust anchor last.
using CertificateChain = std::vector<Certificate>;

class cert_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class role_violation : public cert_error {
    using cert_error::cert_error;
};
class proof_failure : public cert_error {
    using cert_error::cert_error;
};
class duplicate_serial : public cert_error {
    using cert_error::cert_error;
};
class key_mismatch : public cert_error {
    using cert_error::cert_error;
};
class malformed_encoding : public cert_error {
    using cert_error::cert_error;
};

CertificateSigningRequest build_csr(const DistinguishedName &subject, const crypto::KeyPair &keypair);

Certificate self_signed_root(const DistinguishedName &subject, const crypto::KeyPair &keypair, const Validity &validity,
                             std::uint64_t serial = 1);

/// Returns false when `serial` has already been used by the issuer.
using SerialClaim = std::function<bool(std::uint64_t)>;

/// Signs `csr` with `issuer_key`; the resulting signature algorithm is the
/// issuer's, which may differ from the CSR's key algorithm.
Certificate issue_certificate(const Certificate &issuer_cert, const crypto::KeyPair &issuer_key,
                              const CertificateSigningRequest &csr, const Validity &validity, std::uint64_t serial,
                              const SerialClaim &claim_serial);

}  // namespace pqca::cert
