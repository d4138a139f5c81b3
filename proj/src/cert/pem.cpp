#include "pqca/cert/pem.hpp"

#include "pqca/cert/encoding.hpp"

namespace pqca::cert {

namespace {

constexpr std::string_view begin_prefix = "-----BEGIN ";
constexpr std::string_view end_prefix = "-----END ";
constexpr std::string_view dashes = "-----";
constexpr std::size_t line_width = 64;

std::string_view trim_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

std::string_view label_of(std::string_view line, std::string_view prefix) {
    if (!line.starts_with(prefix) || !line.ends_with(dashes) || line.size() < prefix.size() + dashes.size()) {
        return {};
    }
    return line.substr(prefix.size(), line.size() - prefix.size() - dashes.size());
}

}  // namespace

std::string pem_wrap(std::string_view label, ByteView der) {
    const std::string body = base64_encode(der);
    std::string out;
    out.reserve(body.size() + body.size() / line_width + 2 * label.size() + 40);
    out.append(begin_prefix).append(label).append(dashes).push_back('\n');
    for (std::size_t i = 0; i < body.size(); i += line_width) {
        out.append(body, i, line_width).push_back('\n');
    }
    out.append(end_prefix).append(label).append(dashes).push_back('\n');
    return out;
}

std::vector<PemBlock> pem_blocks(std::string_view text) {
    std::vector<PemBlock> blocks;
    std::string_view label;
    std::string body;
    bool inside = false;
    bool saw_short_line = false;

    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        auto line = trim_cr(text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
        pos = eol == std::string_view::npos ? text.size() : eol + 1;

        if (!inside) {
            if (line.empty()) {
                continue;
            }
            label = label_of(line, begin_prefix);
            if (label.empty()) {
                throw malformed_pem("expected a BEGIN line");
            }
            inside = true;
            saw_short_line = false;
            body.clear();
            continue;
        }
        if (line.starts_with(end_prefix)) {
            if (label_of(line, end_prefix) != label) {
                throw malformed_pem("END label does not match BEGIN label " + std::string(label));
            }
            try {
                blocks.push_back({std::string(label), base64_decode(body)});
            } catch (const std::invalid_argument &e) {
                throw malformed_pem(std::string("bad base64 body: ") + e.what());
            }
            inside = false;
            continue;
        }
        if (line.size() > line_width || line.empty() || saw_short_line) {
            throw malformed_pem("base64 body lines must be wrapped at 64 characters");
        }
        saw_short_line = line.size() < line_width;
        body.append(line);
    }
    if (inside) {
        throw malformed_pem("missing END line for " + std::string(label));
    }
    return blocks;
}

std::string encode_pem(const Certificate &cert) { return pem_wrap(certificate_label, encode(cert)); }

std::string encode_pem(const CertificateSigningRequest &csr) { return pem_wrap(csr_label, encode(csr)); }

PemObject decode_pem(std::string_view text) {
    auto blocks = pem_blocks(text);
    if (blocks.size() != 1) {
        throw malformed_pem("expected exactly one PEM block, found " + std::to_string(blocks.size()));
    }
    try {
        if (blocks[0].label == certificate_label) {
            return decode_certificate(blocks[0].der);
        }
        if (blocks[0].label == csr_label) {
            return decode_csr(blocks[0].der);
        }
    } catch (const malformed_encoding &e) {
        throw malformed_pem(std::string("undecodable body: ") + e.what());
    }
    throw malformed_pem("unsupported PEM label " + blocks[0].label);
}

Certificate decode_certificate_pem(std::string_view text) {
    auto object = decode_pem(text);
    if (auto *cert = std::get_if<Certificate>(&object)) {
        return std::move(*cert);
    }
    throw malformed_pem("expected a CERTIFICATE block");
}

CertificateSigningRequest decode_csr_pem(std::string_view text) {
    auto object = decode_pem(text);
    if (auto *csr = std::get_if<CertificateSigningRequest>(&object)) {
        return std::move(*csr);
    }
    throw malformed_pem("expected a CERTIFICATE REQUEST block");
}

std::vector<Certificate> decode_certificate_bundle(std::string_view text) {
    std::vector<Certificate> certs;
    for (auto &block : pem_blocks(text)) {
        if (block.label != certificate_label) {
            throw malformed_pem("unexpected PEM label in bundle: " + block.label);
        }
        try {
            certs.push_back(decode_certificate(block.der));
        } catch (const malformed_encoding &e) {
            throw malformed_pem(std::string("undecodable body: ") + e.what());
        }
    }
    return certs;
}

}  // namespace pqca::cert
