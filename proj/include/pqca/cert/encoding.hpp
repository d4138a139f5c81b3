#pragma once

// Canonical binary encoding of certificates and CSRs. Layout is documented
// in docs/encoding.md; every length is explicit and decoding is strict.

#include "pqca/cert/certificate.hpp"

namespace pqca::cert {

Bytes encode_tbs(const Certificate &cert);
Bytes encode_csr_body(const CertificateSigningRequest &csr);

Bytes encode(const Certificate &cert);
Bytes encode(const CertificateSigningRequest &csr);

/// Throws malformed_encoding unless the whole input is consumed.
Certificate decode_certificate(ByteView data);
CertificateSigningRequest decode_csr(ByteView data);

}  // namespace pqca::cert
