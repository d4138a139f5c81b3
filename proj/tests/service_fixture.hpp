#pragma once

#include "pqca/cert/pem.hpp"
#include "pqca/service/ca_service.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <memory>
#include <string>

namespace pqca::test_support {

// Routes an intermediate's upstream calls straight into a root service.
class LocalUpstream final : public service::Upstream {
  public:
    explicit LocalUpstream(std::shared_ptr<service::CaService> root) : root_(std::move(root)) {}

    service::Reply post(std::string_view path, const service::Json &body) override {
        ++calls;
        if (down) {
            return service::error_reply(0, "transport", "root unreachable");
        }
        return root_->handle(path, body.dump());
    }

    std::atomic<bool> down{false};
    std::atomic<int> calls{0};

  private:
    std::shared_ptr<service::CaService> root_;
};

inline service::ServiceConfig root_config(const std::string &algorithm) {
    service::ServiceConfig config;
    config.role = service::ServiceRole::root;
    config.signing_algorithm = algorithm;
    config.common_name = "test-root";
    config.credential_digest.iterations = 1000;
    return config;
}

inline service::ServiceConfig ica_config(const std::string &id, const std::string &algorithm) {
    service::ServiceConfig config;
    config.role = service::ServiceRole::intermediate;
    config.upstream = "127.0.0.1:1";
    config.entity_id = id;
    config.credentials = id + "-secret";
    config.common_name = id;
    config.signing_algorithm = algorithm;
    config.credential_digest.iterations = 1000;
    return config;
}

// Root plus one intermediate wired together in process, on a manual clock.
struct Hierarchy {
    explicit Hierarchy(const std::string &root_algorithm = "rsa2048-sha256",
                       const std::string &ica_algorithm = "rsa2048-sha256",
                       service::ServiceConfig ica_overrides = ica_config("ica-1", "rsa2048-sha256")) {
        root = std::make_shared<service::CaService>(root_config(root_algorithm),
                                                    std::make_shared<store::Store>(":memory:"), clock);
        ica_overrides.signing_algorithm = ica_algorithm;
        root->register_ica(ica_overrides.entity_id, ica_overrides.credentials);
        auto link = std::make_unique<LocalUpstream>(root);
        upstream = link.get();
        ica = std::make_shared<service::CaService>(ica_overrides, std::make_shared<store::Store>(":memory:"), clock,
                                                   std::move(link));
    }

    std::shared_ptr<ManualClock> clock = std::make_shared<ManualClock>(from_unix(1'750'000'000));
    std::shared_ptr<service::CaService> root;
    std::shared_ptr<service::CaService> ica;
    LocalUpstream *upstream = nullptr;
};

struct Issued {
    crypto::KeyPair key;
    std::string token;
    std::string certificate_pem;
    std::vector<std::string> chain_pem;
    cert::CertificateChain chain;
};

inline service::Json identity(const std::string &id, const std::string &credentials) {
    return {{"entity_id", id}, {"credentials", credentials}};
}

inline service::Json enrollment(const std::string &id, const std::string &credentials) {
    return {{"entity_id", id}, {"common_name", id}, {"organization", "acme"}, {"credentials", credentials}};
}

inline std::string csr_pem(const std::string &id, cert::Role role, const crypto::KeyPair &key) {
    return cert::encode_pem(cert::build_csr({id, "acme", role}, key));
}

// Runs enroll, login and download against `ca`; upload only if asked.
inline Issued issue(service::CaService &ca, const std::string &id, const crypto::KeyPair &key, bool upload = true,
                    cert::Role role = cert::Role::end_entity) {
    Issued out;
    out.key = key;
    const std::string credentials = id + "-pw";
    auto reply = ca.enroll(enrollment(id, credentials));
    EXPECT_EQ(reply.status, 200) << reply.body.dump();
    reply = ca.certify_login(identity(id, credentials));
    EXPECT_EQ(reply.status, 200) << reply.body.dump();
    out.token = reply.body.value("token", "");
    reply = ca.certify_download({{"token", out.token}, {"csr_pem", csr_pem(id, role, key)}});
    EXPECT_EQ(reply.status, 200) << reply.body.dump();
    if (reply.status != 200) {
        return out;
    }
    out.certificate_pem = reply.body["certificate_pem"].get<std::string>();
    for (const auto &pem : reply.body["chain_pem"]) {
        out.chain_pem.push_back(pem.get<std::string>());
        out.chain.push_back(cert::decode_certificate_pem(out.chain_pem.back()));
    }
    if (upload) {
        reply = ca.certify_upload({{"token", out.token}, {"certificate_pem", out.certificate_pem}});
        EXPECT_EQ(reply.status, 200) << reply.body.dump();
    }
    return out;
}

inline service::Reply check(service::CaService &ca, const std::string &id, const std::vector<std::string> &chain) {
    auto login = ca.verify_login(identity(id, id + "-pw"));
    EXPECT_EQ(login.status, 200) << login.body.dump();
    return ca.verify_check({{"token", login.body.value("token", "")}, {"chain_pem", chain}});
}

}  // namespace pqca::test_support
