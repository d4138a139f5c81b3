#include "pqca/cert/encoding.hpp"

#include <array>
#include <cstring>
#include <limits>

namespace pqca::cert {

namespace {

constexpr std::uint8_t format_version = 1;
constexpr std::string_view tbs_magic = "PQCA-TBS";
constexpr std::string_view cert_magic = "PQCA-CRT";
constexpr std::string_view csr_body_magic = "PQCA-CSR";
constexpr std::string_view csr_magic = "PQCA-REQ";

class Writer {
  public:
    void raw(std::string_view text) { out_.insert(out_.end(), text.begin(), text.end()); }
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u32(std::uint32_t v) {
        for (int shift = 24; shift >= 0; shift -= 8) {
            out_.push_back(static_cast<std::uint8_t>(v >> shift));
        }
    }
    void u64(std::uint64_t v) {
        for (int shift = 56; shift >= 0; shift -= 8) {
            out_.push_back(static_cast<std::uint8_t>(v >> shift));
        }
    }
    void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
    void blob(ByteView data) {
        if (data.size() > std::numeric_limits<std::uint32_t>::max()) {
            throw malformed_encoding("field too long");
        }
        u32(static_cast<std::uint32_t>(data.size()));
        out_.insert(out_.end(), data.begin(), data.end());
    }
    void str(std::string_view text) { blob(as_bytes(text)); }
    void name(const DistinguishedName &dn) {
        str(dn.common_name);
        str(dn.organization);
        u8(static_cast<std::uint8_t>(dn.role));
    }
    Bytes take() { return std::move(out_); }

  private:
    Bytes out_;
};

class Reader {
  public:
    explicit Reader(ByteView data) : data_(data) {}

    void expect(std::string_view magic) {
        auto got = take(magic.size());
        if (std::memcmp(got.data(), magic.data(), magic.size()) != 0) {
            throw malformed_encoding("bad magic, expected " + std::string(magic));
        }
        if (u8() != format_version) {
            throw malformed_encoding("unsupported format version");
        }
    }
    std::uint8_t u8() { return take(1)[0]; }
    std::uint32_t u32() {
        auto b = take(4);
        return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) | (std::uint32_t{b[2]} << 8) | b[3];
    }
    std::uint64_t u64() {
        auto b = take(8);
        std::uint64_t v = 0;
        for (auto byte : b) {
            v = (v << 8) | byte;
        }
        return v;
    }
    std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
    ByteView blob() { return take(u32()); }
    Bytes bytes() {
        auto view = blob();
        return {view.begin(), view.end()};
    }
    std::string str() {
        auto view = blob();
        return {reinterpret_cast<const char *>(view.data()), view.size()};
    }
    DistinguishedName name() {
        DistinguishedName dn;
        dn.common_name = str();
        dn.organization = str();
        const auto role = u8();
        if (role < 1 || role > 3) {
            throw malformed_encoding("unknown role tag");
        }
        dn.role = static_cast<Role>(role);
        if (dn.common_name.empty()) {
            throw malformed_encoding("empty common name");
        }
        return dn;
    }
    void finish() const {
        if (pos_ != data_.size()) {
            throw malformed_encoding("trailing bytes");
        }
    }

  private:
    ByteView take(std::size_t n) {
        if (n > data_.size() - pos_) {
            throw malformed_encoding("truncated input");
        }
        auto view = data_.subspan(pos_, n);
        pos_ += n;
        return view;
    }

    ByteView data_;
    std::size_t pos_ = 0;
};

}  // namespace

Bytes encode_tbs(const Certificate &cert) {
    Writer w;
    w.raw(tbs_magic);
    w.u8(format_version);
    w.u64(cert.serial);
    w.name(cert.subject);
    w.name(cert.issuer);
    w.i64(to_unix(cert.validity.not_before));
    w.i64(to_unix(cert.validity.not_after));
    w.str(cert.subject_key_algorithm);
    w.blob(cert.subject_public_key);
    w.str(cert.signature_algorithm);
    return w.take();
}

Bytes encode_csr_body(const CertificateSigningRequest &csr) {
    Writer w;
    w.raw(csr_body_magic);
    w.u8(format_version);
    w.name(csr.subject);
    w.str(csr.key_algorithm);
    w.blob(csr.public_key);
    return w.take();
}

Bytes encode(const Certificate &cert) {
    Writer w;
    w.raw(cert_magic);
    w.u8(format_version);
    w.blob(encode_tbs(cert));
    w.blob(cert.signature.bytes);
    return w.take();
}

Bytes encode(const CertificateSigningRequest &csr) {
    Writer w;
    w.raw(csr_magic);
    w.u8(format_version);
    w.blob(encode_csr_body(csr));
    w.blob(csr.proof_signature.bytes);
    return w.take();
}

Certificate decode_certificate(ByteView data) {
    Reader outer(data);
    outer.expect(cert_magic);
    Reader tbs(outer.blob());
    Certificate cert;
    cert.signature.bytes = outer.bytes();
    outer.finish();

    tbs.expect(tbs_magic);
    cert.serial = tbs.u64();
    cert.subject = tbs.name();
    cert.issuer = tbs.name();
    cert.validity.not_before = from_unix(tbs.i64());
    cert.validity.not_after = from_unix(tbs.i64());
    cert.subject_key_algorithm = tbs.str();
    cert.subject_public_key = tbs.bytes();
    cert.signature_algorithm = tbs.str();
    tbs.finish();

    if (cert.validity.not_before >= cert.validity.not_after) {
        throw malformed_encoding("empty validity window");
    }
    cert.signature.algorithm = cert.signature_algorithm;
    return cert;
}

CertificateSigningRequest decode_csr(ByteView data) {
    Reader outer(data);
    outer.expect(csr_magic);
    Reader body(outer.blob());
    CertificateSigningRequest csr;
    csr.proof_signature.bytes = outer.bytes();
    outer.finish();

    body.expect(csr_body_magic);
    csr.subject = body.name();
    csr.key_algorithm = body.str();
    csr.public_key = body.bytes();
    body.finish();

    csr.proof_signature.algorithm = csr.key_algorithm;
    return csr;
}

}  // namespace pqca::cert
