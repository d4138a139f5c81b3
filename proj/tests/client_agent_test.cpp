#include "pqca/cert/chain.hpp"
#include "pqca/cert/encoding.hpp"
#include "pqca/client/agent.hpp"
#include "pqca/service/host.hpp"
#include "service_fixture.hpp"
#include "test_support.hpp"

#include "httplib.h"

#include <thread>

namespace pqca {
namespace {

using namespace test_support;
using service::Json;

const std::string rsa = "rsa2048-sha256";

// Root and one intermediate on loopback HTTP.
struct LiveHierarchy {
    explicit LiveHierarchy(const std::string &root_algorithm = "falcon512", const std::string &ica_algorithm = rsa) {
        auto rc = root_config(root_algorithm);
        rc.listen = "127.0.0.1:0";
        root = std::make_shared<service::CaService>(rc, std::make_shared<store::Store>(":memory:"), system_clock());
        root_host = std::make_unique<service::ServiceHost>(root);
        root_host->start();
        root->register_ica("ica-1", "ica-1-secret");

        auto ic = ica_config("ica-1", ica_algorithm);
        ic.upstream = root_host->address().to_string();
        ic.listen = "127.0.0.1:0";
        ica = std::make_shared<service::CaService>(ic, std::make_shared<store::Store>(":memory:"), system_clock());
        ica_host = std::make_unique<service::ServiceHost>(ica);
        ica_host->start();
    }

    client::ClientProfile profile(const std::string &id, const std::string &algorithm = rsa) const {
        client::ClientProfile p;
        p.entity_id = id;
        p.credentials = id + "-pw";
        p.key_algorithm = algorithm;
        p.ica_address = ica_host->address();
        if (algorithm == rsa) {
            p.key = cached_keypair(rsa);
        }
        return p;
    }

    std::shared_ptr<service::CaService> root;
    std::unique_ptr<service::ServiceHost> root_host;
    std::shared_ptr<service::CaService> ica;
    std::unique_ptr<service::ServiceHost> ica_host;
};

TEST(ClientAgentTest, IssuanceReturnsVerifiableChain) {
    LiveHierarchy h;
    client::ClientAgent agent(h.profile("alice"));
    const auto result = agent.run_issuance();
    ASSERT_EQ(result.chain.size(), 3u);
    EXPECT_EQ(result.certificate.subject.common_name, "alice");
    EXPECT_EQ(result.certificate.subject_public_key, result.key.public_key);
    EXPECT_TRUE(cert::verify_chain(result.chain, h.root->trust_anchors(), system_clock()->now()).valid());
    EXPECT_EQ(result.upload_attempts, 1);
    ASSERT_EQ(result.timings.size(), 4u);
    EXPECT_EQ(result.timings[0].step, client::Step::enroll);
    EXPECT_EQ(result.timings[3].step, client::Step::certify_upload);
    EXPECT_EQ(h.ica->store().get_entity("alice")->status, store::EntityStatus::certified);
    EXPECT_EQ(cert::decode_certificate_bundle(result.chain_bundle()), result.chain);
}

TEST(ClientAgentTest, ClassicalClientDoesNoPostQuantumWork) {
    LiveHierarchy h("SPHINCS+-SHA2-128f-simple", rsa);
    auto profile = h.profile("alice");
    profile.key.reset();
    client::ClientAgent agent(profile);
    const auto before = crypto::thread_operation_counters();
    const auto result = agent.run_issuance();
    const auto verdict = agent.run_verify(result.chain_pem);
    const auto after = crypto::thread_operation_counters();
    EXPECT_TRUE(verdict.valid);
    EXPECT_EQ(after.post_quantum, before.post_quantum);
    EXPECT_GT(after.classical, before.classical);
    EXPECT_EQ(result.chain[1].signature_algorithm, "SPHINCS+-SHA2-128f-simple");
}

TEST(ClientAgentTest, LocalVerificationIsOptIn) {
    LiveHierarchy h;
    auto profile = h.profile("alice");
    profile.verify_locally = true;
    profile.trust_anchors = h.root->trust_anchors();
    client::ClientAgent agent(profile);
    const auto before = crypto::thread_operation_counters();
    agent.run_issuance();
    EXPECT_GT(crypto::thread_operation_counters().post_quantum, before.post_quantum);
}

TEST(ClientAgentTest, LocalVerificationRejectsForeignRoot) {
    LiveHierarchy h;
    auto profile = h.profile("alice");
    profile.verify_locally = true;
    const auto other = cert::self_signed_root({"other", "x", cert::Role::root}, cached_keypair(rsa, 3),
                                              cert::Validity::starting_at(system_clock()->now(), std::chrono::days{1}));
    profile.trust_anchors = {other};
    client::ClientAgent agent(profile);
    try {
        agent.run_issuance();
        FAIL() << "expected local verification failure";
    } catch (const client::agent_error &e) {
        EXPECT_EQ(e.step(), client::Step::local_verify);
    }
}

TEST(ClientAgentTest, PostQuantumClientKey) {
    LiveHierarchy h("Dilithium2", "falcon512");
    client::ClientAgent agent(h.profile("pq", "Dilithium3"));
    const auto result = agent.run_issuance();
    EXPECT_EQ(result.certificate.subject_key_algorithm, "Dilithium3");
    EXPECT_EQ(result.certificate.signature_algorithm, "falcon512");
    EXPECT_TRUE(agent.run_verify(result.chain_pem).valid);
}

TEST(ClientAgentTest, TamperedChainIsInvalid) {
    LiveHierarchy h;
    client::ClientAgent agent(h.profile("alice"));
    const auto result = agent.run_issuance();
    auto der = cert::encode(result.chain[0]);
    der.back() ^= 0x01;  // last signature byte; still decodes
    auto chain = result.chain_pem;
    chain[0] = cert::pem_wrap(cert::certificate_label, der);
    const auto verdict = agent.run_verify(chain);
    EXPECT_FALSE(verdict.valid);
    EXPECT_FALSE(verdict.reason.empty());
}

TEST(ClientAgentTest, CertifyTokenOnVerifyCheckIs401) {
    LiveHierarchy h;
    client::ClientAgent agent(h.profile("alice"));
    const auto result = agent.run_issuance();
    try {
        agent.check_with_token(result.certify_token, result.chain_pem);
        FAIL() << "expected 401";
    } catch (const client::agent_error &e) {
        EXPECT_EQ(e.status(), 401);
        EXPECT_EQ(e.step(), client::Step::verify_check);
        EXPECT_NE(std::string(e.what()).find("wrong-scope"), std::string::npos);
    }
}

TEST(ClientAgentTest, UnreachableIntermediateFailsAtEnroll) {
    client::ClientProfile profile;
    profile.entity_id = "alice";
    profile.ica_address = {"127.0.0.1", 1};
    profile.key = cached_keypair(rsa);
    client::ClientAgent agent(profile);
    try {
        agent.run_issuance();
        FAIL() << "expected failure";
    } catch (const client::agent_error &e) {
        EXPECT_EQ(e.step(), client::Step::enroll);
        EXPECT_EQ(e.status(), 0);
    }
}

TEST(ClientAgentTest, RejectsBadProfile) {
    client::ClientProfile profile;
    EXPECT_THROW(client::ClientAgent{profile}, std::invalid_argument);
    profile.entity_id = "x";
    profile.key_algorithm = "rsa4096";
    EXPECT_THROW(client::ClientAgent{profile}, crypto::unknown_algorithm);
}

// Serves an in-process intermediate but fails the first `failures` uploads.
class FlakyIntermediate {
  public:
    FlakyIntermediate(int failures, int status) : failures_(failures), status_(status) {
        server_.Post(".*", [this](const httplib::Request &req, httplib::Response &res) {
            if (req.path == "/certify/upload" && uploads_++ < failures_) {
                res.status = status_;
                res.set_content(R"({"error":"unavailable"})", "application/json");
                return;
            }
            const auto reply = h_.ica->handle(req.path, req.body);
            res.status = reply.status;
            res.set_content(reply.body.dump(), "application/json");
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~FlakyIntermediate() {
        server_.stop();
        thread_.join();
    }

    service::Address address() const { return {"127.0.0.1", port_}; }
    int uploads() const { return uploads_; }

  private:
    Hierarchy h_;
    int failures_;
    int status_;
    std::atomic<int> uploads_{0};
    httplib::Server server_;
    int port_ = 0;
    std::thread thread_;
};

client::ClientProfile flaky_profile(const FlakyIntermediate &ica) {
    client::ClientProfile profile;
    profile.entity_id = "alice";
    profile.credentials = "pw";
    profile.ica_address = ica.address();
    profile.key = cached_keypair(rsa);
    return profile;
}

TEST(ClientAgentTest, UploadIsRetried) {
    FlakyIntermediate ica(2, 503);
    client::ClientAgent agent(flaky_profile(ica), {3, std::chrono::milliseconds{10}});
    const auto result = agent.run_issuance();
    EXPECT_EQ(result.upload_attempts, 3);
    EXPECT_EQ(ica.uploads(), 3);
}

TEST(ClientAgentTest, UploadGivesUpAfterThreeAttempts) {
    FlakyIntermediate ica(10, 503);
    client::ClientAgent agent(flaky_profile(ica), {3, std::chrono::milliseconds{10}});
    try {
        agent.run_issuance();
        FAIL() << "expected failure";
    } catch (const client::agent_error &e) {
        EXPECT_EQ(e.step(), client::Step::certify_upload);
        EXPECT_EQ(e.status(), 503);
        EXPECT_NE(std::string(e.what()).find("blacklisted"), std::string::npos);
    }
    EXPECT_EQ(ica.uploads(), 3);
}

TEST(ClientAgentTest, ClientErrorsAreNotRetried) {
    FlakyIntermediate ica(10, 409);
    client::ClientAgent agent(flaky_profile(ica), {3, std::chrono::milliseconds{10}});
    EXPECT_THROW(agent.run_issuance(), client::agent_error);
    EXPECT_EQ(ica.uploads(), 1);
}

}  // namespace
}  // namespace pqca
