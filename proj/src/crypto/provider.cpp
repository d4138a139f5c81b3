#include "pqca/crypto/provider.hpp"

#include <oqs/oqs.h>
#include <openssl/err.h>
#include <openssl/evp.h>
#include <openssl/rsa.h>
#include <openssl/x509.h>

#include <memory>
#include <mutex>

namespace pqca::crypto {

namespace {

thread_local OperationCounters counters;

void count(const AlgorithmSpec &spec) noexcept {
    if (spec.is_post_quantum()) {
        ++counters.post_quantum;
    } else {
        ++counters.classical;
    }
}

// ---- liboqs ---------------------------------------------------------------

const char *oqs_method(std::string_view name) {
    if (name == "falcon512") return OQS_SIG_alg_falcon_512;
    if (name == "falcon1024") return OQS_SIG_alg_falcon_1024;
    if (name == "Dilithium2") return OQS_SIG_alg_dilithium_2;
    if (name == "Dilithium3") return OQS_SIG_alg_dilithium_3;
    if (name == "Dilithium5") return OQS_SIG_alg_dilithium_5;
    if (name == "SPHINCS+-SHA2-128f-simple") return OQS_SIG_alg_sphincs_sha2_128f_simple;
    if (name == "SPHINCS+-SHA2-192f-simple") return OQS_SIG_alg_sphincs_sha2_192f_simple;
    return nullptr;
}

struct OqsSigDeleter {
    void operator()(OQS_SIG *sig) const { OQS_SIG_free(sig); }
};
using OqsSigPtr = std::unique_ptr<OQS_SIG, OqsSigDeleter>;

OqsSigPtr open_oqs(std::string_view name) {
    static std::once_flag init;
    std::call_once(init, [] { OQS_init(); });
    const char *method = oqs_method(name);
    OqsSigPtr sig{method ? OQS_SIG_new(method) : nullptr};
    if (!sig) {
        throw provider_failure("liboqs does not provide " + std::string(name));
    }
    return sig;
}

KeyPair oqs_keypair(const AlgorithmSpec &spec) {
    auto sig = open_oqs(spec.name);
    KeyPair kp{spec.name, Bytes(sig->length_public_key), Bytes(sig->length_secret_key)};
    if (OQS_SIG_keypair(sig.get(), kp.public_key.data(), kp.secret_key.data()) != OQS_SUCCESS) {
        throw provider_failure("keypair generation failed for " + spec.name);
    }
    return kp;
}

Signature oqs_sign(const AlgorithmSpec &spec, ByteView secret_key, ByteView message) {
    auto sig = open_oqs(spec.name);
    if (secret_key.size() != sig->length_secret_key) {
        throw malformed_key(spec.name + ": secret key has " + std::to_string(secret_key.size()) + " bytes, expected " +
                            std::to_string(sig->length_secret_key));
    }
    Signature out{spec.name, Bytes(sig->length_signature)};
    std::size_t length = 0;
    if (OQS_SIG_sign(sig.get(), out.bytes.data(), &length, message.data(), message.size(), secret_key.data()) !=
        OQS_SUCCESS) {
        throw provider_failure("signing failed for " + spec.name);
    }
    out.bytes.resize(length);
    return out;
}

bool oqs_verify(const AlgorithmSpec &spec, ByteView public_key, ByteView message, ByteView signature) {
    auto sig = open_oqs(spec.name);
    if (public_key.size() != sig->length_public_key || signature.size() > sig->length_signature ||
        signature.empty()) {
        return false;
    }
    if (spec.fixed_signature_length() && signature.size() != sig->length_signature) {
        return false;
    }
    return OQS_SIG_verify(sig.get(), message.data(), message.size(), signature.data(), signature.size(),
                          public_key.data()) == OQS_SUCCESS;
}

// ---- OpenSSL RSA ----------------------------------------------------------

struct PkeyDeleter {
    void operator()(EVP_PKEY *key) const { EVP_PKEY_free(key); }
};
struct MdCtxDeleter {
    void operator()(EVP_MD_CTX *ctx) const { EVP_MD_CTX_free(ctx); }
};
using PkeyPtr = std::unique_ptr<EVP_PKEY, PkeyDeleter>;
using MdCtxPtr = std::unique_ptr<EVP_MD_CTX, MdCtxDeleter>;

template <typename Encoder>
Bytes der_encode(EVP_PKEY *key, Encoder encode) {
    const int length = encode(key, nullptr);
    if (length <= 0) {
        throw provider_failure("DER encoding of RSA key failed");
    }
    Bytes out(static_cast<std::size_t>(length));
    unsigned char *cursor = out.data();
    encode(key, &cursor);
    return out;
}

KeyPair rsa_keypair(const AlgorithmSpec &spec) {
    PkeyPtr key{EVP_PKEY_Q_keygen(nullptr, nullptr, "RSA", static_cast<std::size_t>(2048))};
    if (!key) {
        ERR_clear_error();
        throw provider_failure("RSA-2048 key generation failed");
    }
    return KeyPair{spec.name, der_encode(key.get(), [](EVP_PKEY *k, unsigned char **p) { return i2d_PUBKEY(k, p); }),
                   der_encode(key.get(), [](EVP_PKEY *k, unsigned char **p) { return i2d_PrivateKey(k, p); })};
}

Signature rsa_sign(const AlgorithmSpec &spec, ByteView secret_key, ByteView message) {
    const unsigned char *cursor = secret_key.data();
    PkeyPtr key{d2i_PrivateKey(EVP_PKEY_RSA, nullptr, &cursor, static_cast<long>(secret_key.size()))};
    if (!key || cursor != secret_key.data() + secret_key.size() || EVP_PKEY_get_bits(key.get()) != 2048) {
        ERR_clear_error();
        throw malformed_key(spec.name + ": secret key is not an RSA-2048 private key");
    }
    MdCtxPtr ctx{EVP_MD_CTX_new()};
    std::size_t length = 0;
    if (!ctx || EVP_DigestSignInit(ctx.get(), nullptr, EVP_sha256(), nullptr, key.get()) != 1 ||
        EVP_DigestSign(ctx.get(), nullptr, &length, message.data(), message.size()) != 1) {
        ERR_clear_error();
        throw provider_failure("RSA signing setup failed");
    }
    Signature out{spec.name, Bytes(length)};
    if (EVP_DigestSign(ctx.get(), out.bytes.data(), &length, message.data(), message.size()) != 1) {
        ERR_clear_error();
        throw provider_failure("RSA signing failed");
    }
    out.bytes.resize(length);
    return out;
}

bool rsa_verify(ByteView public_key, ByteView message, ByteView signature) {
    const unsigned char *cursor = public_key.data();
    PkeyPtr key{d2i_PUBKEY(nullptr, &cursor, static_cast<long>(public_key.size()))};
    if (!key || cursor != public_key.data() + public_key.size() || EVP_PKEY_get_base_id(key.get()) != EVP_PKEY_RSA) {
        ERR_clear_error();
        return false;
    }
    MdCtxPtr ctx{EVP_MD_CTX_new()};
    if (!ctx || EVP_DigestVerifyInit(ctx.get(), nullptr, EVP_sha256(), nullptr, key.get()) != 1) {
        ERR_clear_error();
        return false;
    }
    const bool ok =
        EVP_DigestVerify(ctx.get(), signature.data(), signature.size(), message.data(), message.size()) == 1;
    ERR_clear_error();
    return ok;
}

}  // namespace

KeyPair generate_keypair(std::string_view name) {
    const auto &spec = algorithm_info(name);
    count(spec);
    return spec.is_post_quantum() ? oqs_keypair(spec) : rsa_keypair(spec);
}

Signature sign(std::string_view name, ByteView secret_key, ByteView message) {
    const auto &spec = algorithm_info(name);
    count(spec);
    return spec.is_post_quantum() ? oqs_sign(spec, secret_key, message) : rsa_sign(spec, secret_key, message);
}

bool verify(std::string_view name, ByteView public_key, ByteView message, const Signature &signature) {
    const auto &spec = algorithm_info(name);
    if (signature.algorithm != spec.name) {
        return false;
    }
    count(spec);
    return spec.is_post_quantum() ? oqs_verify(spec, public_key, message, signature.bytes)
                                  : rsa_verify(public_key, message, signature.bytes);
}

OperationCounters thread_operation_counters() noexcept { return counters; }

}  // namespace pqca::crypto
