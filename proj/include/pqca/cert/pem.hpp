#pragma once

#include "pqca/cert/certificate.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pqca::cert {

inline constexpr std::string_view certificate_label = "CERTIFICATE";
inline constexpr std::string_view csr_label = "CERTIFICATE REQUEST";

class malformed_pem : public cert_error {
    using cert_error::cert_error;
};

/// Generic framing: BEGIN/END lines around base64 wrapped at 64 columns.
std::string pem_wrap(std::string_view label, ByteView der);

struct PemBlock {
    std::string label;
    Bytes der;
};

/// Parses every block in `text`. Throws malformed_pem.
std::vector<PemBlock> pem_blocks(std::string_view text);

std::string encode_pem(const Certificate &cert);
std::string encode_pem(const CertificateSigningRequest &csr);

using PemObject = std::variant<Certificate, CertificateSigningRequest>;

/// Exactly one block is expected. Throws malformed_pem, including when the
/// body does not decode.
PemObject decode_pem(std::string_view text);
Certificate decode_certificate_pem(std::string_view text);
CertificateSigningRequest decode_csr_pem(std::string_view text);

/// Zero or more CERTIFICATE blocks, in order.
std::vector<Certificate> decode_certificate_bundle(std::string_view text);

}  // namespace pqca::cert
