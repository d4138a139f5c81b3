#include "pqca/cert/certificate.hpp"

#include "pqca/cert/encoding.hpp"

namespace pqca::cert {

std::string_view to_string(Role role) noexcept {
    switch (role) {
    case Role::root:
        return "root";
    case Role::intermediate:
        return "intermediate";
    case Role::end_entity:
        return "end-entity";
    }
    return "?";
}

bool may_issue(Role issuer, Role subject) noexcept {
    switch (issuer) {
    case Role::root:
        return subject == Role::root || subject == Role::intermediate;
    case Role::intermediate:
        return subject == Role::end_entity;
    case Role::end_entity:
        return false;
    }
    return false;
}

std::chrono::seconds default_validity_for(Role role) noexcept {
    switch (role) {
    case Role::root:
        return default_validity::root;
    case Role::intermediate:
        return default_validity::intermediate;
    case Role::end_entity:
        return default_validity::end_entity;
    }
    return default_validity::end_entity;
}

Bytes CertificateSigningRequest::body() const { return encode_csr_body(*this); }

bool CertificateSigningRequest::proof_verifies() const {
    if (!crypto::is_registered(key_algorithm)) {
        return false;
    }
    return crypto::verify(key_algorithm, public_key, body(), proof_signature);
}

Bytes Certificate::tbs() const { return encode_tbs(*this); }

bool Certificate::signed_by(ByteView issuer_public_key) const {
    if (!crypto::is_registered(signature_algorithm) || signature.algorithm != signature_algorithm) {
        return false;
    }
    return crypto::verify(signature_algorithm, issuer_public_key, tbs(), signature);
}

CertificateSigningRequest build_csr(const DistinguishedName &subject, const crypto::KeyPair &keypair) {
    if (subject.common_name.empty()) {
        throw cert_error("CSR subject needs a common name");
    }
    CertificateSigningRequest csr{subject, keypair.algorithm, keypair.public_key, {}};
    csr.proof_signature = crypto::sign(keypair.algorithm, keypair.secret_key, csr.body());
    return csr;
}

Certificate self_signed_root(const DistinguishedName &subject, const crypto::KeyPair &keypair,
                             const Validity &validity, std::uint64_t serial) {
    if (subject.role != Role::root) {
        throw role_violation("self-signed certificates are only issued for the root role, got " +
                             std::string(to_string(subject.role)));
    }
    if (subject.common_name.empty()) {
        throw cert_error("root subject needs a common name");
    }
    if (validity.not_before >= validity.not_after) {
        throw cert_error("validity window is empty");
    }
    Certificate cert;
    cert.serial = serial;
    cert.subject = subject;
    cert.issuer = subject;
    cert.subject_key_algorithm = keypair.algorithm;
    cert.subject_public_key = keypair.public_key;
    cert.signature_algorithm = keypair.algorithm;
    cert.validity = validity;
    cert.signature = crypto::sign(keypair.algorithm, keypair.secret_key, cert.tbs());
    return cert;
}

Certificate issue_certificate(const Certificate &issuer_cert, const crypto::KeyPair &issuer_key,
                              const CertificateSigningRequest &csr, const Validity &validity, std::uint64_t serial,
                              const SerialClaim &claim_serial) {
    if (issuer_key.algorithm != issuer_cert.subject_key_algorithm ||
        issuer_key.public_key != issuer_cert.subject_public_key) {
        throw key_mismatch("issuer key does not belong to the issuer certificate");
    }
    if (!may_issue(issuer_cert.subject.role, csr.subject.role)) {
        throw role_violation(std::string(to_string(issuer_cert.subject.role)) + " may not issue a " +
                             std::string(to_string(csr.subject.role)) + " certificate");
    }
    if (!csr.proof_verifies()) {
        throw proof_failure("CSR proof of possession does not verify");
    }
    if (validity.not_before >= validity.not_after) {
        throw cert_error("validity window is empty");
    }
    if (claim_serial && !claim_serial(serial)) {
        throw duplicate_serial("serial " + std::to_string(serial) + " already issued by " +
                               issuer_cert.subject.common_name);
    }
    Certificate cert;
    cert.serial = serial;
    cert.subject = csr.subject;
    cert.issuer = issuer_cert.subject;
    cert.subject_key_algorithm = csr.key_algorithm;
    cert.subject_public_key = csr.public_key;
    cert.signature_algorithm = issuer_key.algorithm;
    cert.validity = validity;
    cert.signature = crypto::sign(issuer_key.algorithm, issuer_key.secret_key, cert.tbs());
    return cert;
}

}  // namespace pqca::cert
