#include "pqca/cert/chain.hpp"
#include "pqca/cert/encoding.hpp"
#include "service_fixture.hpp"
#include "test_support.hpp"

#include <filesystem>
#include <set>
#include <thread>

namespace pqca {
namespace {

using namespace test_support;
using service::Json;

const std::string rsa = "rsa2048-sha256";

TEST(CaServiceTest, EndEntityChainReachesRootAnchor) {
    Hierarchy h("Dilithium2", rsa);
    const auto issued = issue(*h.ica, "alice", cached_keypair(rsa));
    ASSERT_EQ(issued.chain.size(), 3u);
    EXPECT_EQ(issued.chain[0].subject.common_name, "alice");
    EXPECT_EQ(issued.chain[1].subject.common_name, "ica-1");
    EXPECT_EQ(issued.chain[1].signature_algorithm, "Dilithium2");
    EXPECT_EQ(issued.chain[0].signature_algorithm, rsa);
    EXPECT_TRUE(cert::verify_chain(issued.chain, h.root->trust_anchors(), h.clock->now()).valid());

    const auto reply = check(*h.ica, "alice", issued.chain_pem);
    ASSERT_EQ(reply.status, 200);
    EXPECT_TRUE(reply.body["valid"].get<bool>()) << reply.body.dump();

    const auto entity = h.ica->store().get_entity("alice");
    ASSERT_TRUE(entity);
    EXPECT_EQ(entity->status, store::EntityStatus::certified);
    EXPECT_FALSE(entity->pending_upload_deadline);
}

TEST(CaServiceTest, FalconRootBundleVerifiesAgainstReturnedRoot) {
    auto clock = std::make_shared<ManualClock>(from_unix(1'750'000'000));
    service::CaService root(root_config("falcon512"), std::make_shared<store::Store>(":memory:"), clock);
    root.register_ica("ica-1", "ica-1-pw");
    const auto issued = issue(root, "ica-1", cached_keypair(rsa), true, cert::Role::intermediate);
    ASSERT_EQ(issued.chain.size(), 2u);
    EXPECT_EQ(issued.chain[0].signature_algorithm, "falcon512");
    EXPECT_EQ(issued.chain[1].subject.role, cert::Role::root);
    const cert::CertificateChain anchors{issued.chain[1]};
    EXPECT_TRUE(cert::verify_chain(issued.chain, anchors, clock->now()).valid());
    EXPECT_EQ(root.store().get_entity("ica-1")->status, store::EntityStatus::certified);
}

TEST(CaServiceTest, IntermediateIsCertifiedOnlyOnce) {
    Hierarchy h;
    issue(*h.ica, "a", cached_keypair(rsa));
    const int calls = h.upstream->calls;
    issue(*h.ica, "b", cached_keypair(rsa, 1));
    // Only the cached self-validation may reach the root again, never a re-certification.
    EXPECT_LE(h.upstream->calls - calls, 2);
    EXPECT_EQ(h.root->store().list_certificates().size(), 1u);
}

TEST(CaServiceTest, RootRefusesUnlistedIdentityWithoutCreatingState) {
    Hierarchy h;
    const auto before = h.root->store().list_entities().size();
    auto reply = h.root->enroll(enrollment("mallory", "pw"));
    EXPECT_EQ(reply.status, 403);
    reply = h.root->certify_login(identity("mallory", "pw"));
    EXPECT_EQ(reply.status, 403);
    EXPECT_EQ(h.root->store().list_entities().size(), before);
    EXPECT_FALSE(h.root->store().get_entity("mallory"));
}

TEST(CaServiceTest, RootRefusesForeignTokensAs403) {
    Hierarchy h;
    const auto entities = h.root->store().list_entities().size();
    const auto tokens = h.root->store().token_count();
    const auto csr = csr_pem("mallory", cert::Role::intermediate, cached_keypair(rsa));
    EXPECT_EQ(h.root->certify_download({{"token", "forged"}, {"csr_pem", csr}}).status, 403);
    EXPECT_EQ(h.root->certify_upload({{"token", "forged"}, {"certificate_pem", "x"}}).status, 403);
    EXPECT_EQ(h.root->store().list_entities().size(), entities);
    EXPECT_EQ(h.root->store().token_count(), tokens);
    EXPECT_TRUE(h.root->store().list_certificates().empty());
}

TEST(CaServiceTest, BlacklistOutranksTokenExpiry) {
    Hierarchy h;
    const auto alice = issue(*h.ica, "alice", cached_keypair(rsa), false);
    h.clock->advance(std::chrono::seconds{400});
    h.ica->sweep();
    const auto reply = h.ica->certify_upload({{"token", alice.token}, {"certificate_pem", alice.certificate_pem}});
    EXPECT_EQ(reply.status, 403);
    EXPECT_EQ(reply.error(), "blacklisted");
}

TEST(CaServiceTest, BadCredentialsAre401) {
    Hierarchy h;
    issue(*h.ica, "alice", cached_keypair(rsa));
    EXPECT_EQ(h.ica->certify_login(identity("alice", "wrong")).status, 401);
    EXPECT_EQ(h.ica->verify_login(identity("alice", "wrong")).status, 401);
    EXPECT_EQ(h.ica->enroll(enrollment("alice", "wrong")).status, 401);
    EXPECT_EQ(h.root->enroll(enrollment("ica-1", "wrong")).status, 401);
}

TEST(CaServiceTest, LoginBeforeEnrollIsRefused) {
    Hierarchy h;
    EXPECT_EQ(h.root->certify_login(identity("ica-1", "ica-1-secret")).status, 403);
}

TEST(CaServiceTest, MalformedRequestsAre400) {
    Hierarchy h;
    EXPECT_EQ(h.ica->enroll({{"entity_id", "x"}}).status, 400);
    EXPECT_EQ(h.ica->certify_login({{"entity_id", 5}}).status, 400);
    EXPECT_EQ(h.ica->handle("/enroll", "{not json").status, 400);
    EXPECT_EQ(h.ica->handle("/enroll", "[1,2]").status, 400);
    EXPECT_EQ(h.ica->handle("/nope", "{}").status, 404);

    const auto issued = issue(*h.ica, "alice", cached_keypair(rsa), false);
    EXPECT_EQ(h.ica->certify_download({{"token", issued.token}}).status, 400);
    EXPECT_EQ(h.ica->certify_download({{"token", issued.token}, {"csr_pem", "garbage"}}).status, 400);
    EXPECT_EQ(h.ica->certify_upload({{"token", issued.token}}).status, 400);
}

TEST(CaServiceTest, CsrMustMatchTokenOwnerAndLayer) {
    Hierarchy h;
    const auto issued = issue(*h.ica, "alice", cached_keypair(rsa), false);
    const auto &key = cached_keypair(rsa, 1);
    auto reply = h.ica->certify_download({{"token", issued.token}, {"csr_pem", csr_pem("bob", cert::Role::end_entity, key)}});
    EXPECT_EQ(reply.status, 400);
    reply = h.ica->certify_download(
        {{"token", issued.token}, {"csr_pem", csr_pem("alice", cert::Role::intermediate, key)}});
    EXPECT_EQ(reply.status, 400);
}

TEST(CaServiceTest, ForgedProofOfPossessionIs400) {
    Hierarchy h;
    const auto issued = issue(*h.ica, "alice", cached_keypair(rsa), false);
    auto csr = cert::build_csr({"alice", "acme", cert::Role::end_entity}, cached_keypair(rsa, 1));
    csr.public_key = cached_keypair(rsa, 2).public_key;
    const auto reply = h.ica->certify_download({{"token", issued.token}, {"csr_pem", cert::encode_pem(csr)}});
    EXPECT_EQ(reply.status, 400);
    EXPECT_EQ(reply.error(), "proof-failure");
}

TEST(CaServiceTest, TokenFailuresAre401) {
    Hierarchy h;
    const auto issued = issue(*h.ica, "alice", cached_keypair(rsa), false);
    const auto csr = csr_pem("alice", cert::Role::end_entity, cached_keypair(rsa));

    EXPECT_EQ(h.ica->certify_download({{"csr_pem", csr}}).status, 401);
    auto reply = h.ica->certify_download({{"token", "not-a-token"}, {"csr_pem", csr}});
    EXPECT_EQ(reply.status, 401);
    EXPECT_EQ(reply.error(), "unknown-token");

    const auto verify_token = h.ica->verify_login(identity("alice", "alice-pw")).body["token"].get<std::string>();
    reply = h.ica->certify_download({{"token", verify_token}, {"csr_pem", csr}});
    EXPECT_EQ(reply.status, 401);
    EXPECT_EQ(reply.error(), "wrong-scope");
    reply = h.ica->certify_upload({{"token", verify_token}, {"certificate_pem", issued.certificate_pem}});
    EXPECT_EQ(reply.status, 401);
    reply = h.ica->verify_check({{"token", issued.token}, {"chain_pem", issued.chain_pem}});
    EXPECT_EQ(reply.status, 401);
    EXPECT_EQ(reply.error(), "wrong-scope");
}

TEST(CaServiceTest, ExpiredCertifyTokenIs401OnDownloadAndUpload) {
    Hierarchy h;
    const auto issued = issue(*h.ica, "alice", cached_keypair(rsa), false);
    h.clock->advance(std::chrono::seconds{301});
    auto reply = h.ica->certify_upload({{"token", issued.token}, {"certificate_pem", issued.certificate_pem}});
    EXPECT_EQ(reply.status, 401);
    EXPECT_EQ(reply.error(), "expired-token");
    reply = h.ica->certify_download(
        {{"token", issued.token}, {"csr_pem", csr_pem("alice", cert::Role::end_entity, cached_keypair(rsa))}});
    EXPECT_EQ(reply.status, 401);
    EXPECT_EQ(reply.error(), "expired-token");
}

TEST(CaServiceTest, UploadOfUnknownCertificateIs409) {
    Hierarchy h;
    const auto alice = issue(*h.ica, "alice", cached_keypair(rsa), false);
    const auto bob = issue(*h.ica, "bob", cached_keypair(rsa, 1), false);
    const auto deadline = h.ica->store().get_entity("alice")->pending_upload_deadline;
    auto reply = h.ica->certify_upload({{"token", alice.token}, {"certificate_pem", bob.certificate_pem}});
    EXPECT_EQ(reply.status, 409);
    EXPECT_EQ(h.ica->store().get_entity("alice")->pending_upload_deadline, deadline);
    reply = h.ica->certify_upload({{"token", alice.token}, {"certificate_pem", alice.certificate_pem}});
    EXPECT_EQ(reply.status, 200);
    // A second upload of the same certificate has nothing pending.
    reply = h.ica->certify_upload({{"token", alice.token}, {"certificate_pem", alice.certificate_pem}});
    EXPECT_EQ(reply.status, 409);
}

TEST(CaServiceTest, MissedUploadWindowBlacklistsOnlyThatEntity) {
    Hierarchy h;
    issue(*h.ica, "alice", cached_keypair(rsa), false);
    const auto bob = issue(*h.ica, "bob", cached_keypair(rsa, 1));
    h.clock->advance(std::chrono::seconds{61});
    EXPECT_EQ(h.ica->sweep(), std::vector<std::string>{"alice"});

    EXPECT_EQ(h.ica->enroll(enrollment("alice", "alice-pw")).status, 403);
    EXPECT_EQ(h.ica->certify_login(identity("alice", "alice-pw")).status, 403);
    EXPECT_EQ(h.ica->verify_login(identity("alice", "alice-pw")).status, 403);

    EXPECT_EQ(h.ica->certify_login(identity("bob", "bob-pw")).status, 200);
    const auto reply = check(*h.ica, "bob", bob.chain_pem);
    EXPECT_TRUE(reply.body["valid"].get<bool>());

    h.ica->unblacklist("alice");
    EXPECT_EQ(h.ica->certify_login(identity("alice", "alice-pw")).status, 200);
    EXPECT_THROW(h.ica->unblacklist("nobody"), store::missing_row);
}

TEST(CaServiceTest, UploadInsideWindowAvoidsBlacklist) {
    Hierarchy h;
    issue(*h.ica, "alice", cached_keypair(rsa));
    h.clock->advance(std::chrono::seconds{3600});
    EXPECT_TRUE(h.ica->sweep().empty());
}

TEST(CaServiceTest, BlacklistedTokenOwnerIs403) {
    Hierarchy h;
    const auto alice = issue(*h.ica, "alice", cached_keypair(rsa), false);
    h.clock->advance(std::chrono::seconds{61});
    h.ica->sweep();
    const auto reply = h.ica->certify_upload({{"token", alice.token}, {"certificate_pem", alice.certificate_pem}});
    EXPECT_EQ(reply.status, 403);
}

TEST(CaServiceTest, BlacklistedEntityChainIsNotEntitled) {
    Hierarchy h;
    const auto alice = issue(*h.ica, "alice", cached_keypair(rsa));
    issue(*h.ica, "carol", cached_keypair(rsa, 2));
    // Alice renews but never acknowledges the new certificate.
    issue(*h.ica, "alice", cached_keypair(rsa, 1), false);
    h.clock->advance(std::chrono::seconds{61});
    h.ica->sweep();
    const auto reply = check(*h.ica, "carol", alice.chain_pem);
    EXPECT_FALSE(reply.body["valid"].get<bool>());
    EXPECT_EQ(reply.body["reason"], "not entitled");
}

TEST(CaServiceTest, BlacklistedEntityIsRefusedOnAllSixEndpoints) {
    Hierarchy h;
    const auto alice = issue(*h.ica, "alice", cached_keypair(rsa), false);
    const auto verify_token = h.ica->verify_login(identity("alice", "alice-pw")).body["token"].get<std::string>();
    h.clock->advance(std::chrono::seconds{61});
    h.ica->sweep();
    const auto csr = csr_pem("alice", cert::Role::end_entity, cached_keypair(rsa));
    EXPECT_EQ(h.ica->enroll(enrollment("alice", "alice-pw")).status, 403);
    EXPECT_EQ(h.ica->certify_login(identity("alice", "alice-pw")).status, 403);
    EXPECT_EQ(h.ica->certify_download({{"token", alice.token}, {"csr_pem", csr}}).status, 403);
    EXPECT_EQ(h.ica->certify_upload({{"token", alice.token}, {"certificate_pem", alice.certificate_pem}}).status, 403);
    EXPECT_EQ(h.ica->verify_login(identity("alice", "alice-pw")).status, 403);
    EXPECT_EQ(h.ica->verify_check({{"token", verify_token}, {"chain_pem", alice.chain_pem}}).status, 403);
}

TEST(CaServiceTest, RootReportsBlacklistedIntermediateAsNotEntitled) {
    auto clock = std::make_shared<ManualClock>(from_unix(1'750'000'000));
    service::CaService root(root_config("Dilithium2"), std::make_shared<store::Store>(":memory:"), clock);
    root.register_ica("ica-1", "ica-1-pw");
    root.register_ica("ica-2", "ica-2-pw");
    const auto first = issue(root, "ica-1", cached_keypair(rsa), true, cert::Role::intermediate);
    issue(root, "ica-2", cached_keypair(rsa, 1), true, cert::Role::intermediate);
    EXPECT_TRUE(check(root, "ica-2", first.chain_pem).body["valid"].get<bool>());

    // ica-1 renews and never acknowledges.
    issue(root, "ica-1", cached_keypair(rsa, 2), false, cert::Role::intermediate);
    clock->advance(std::chrono::seconds{61});
    EXPECT_EQ(root.sweep(), std::vector<std::string>{"ica-1"});
    const auto reply = check(root, "ica-2", first.chain_pem);
    EXPECT_FALSE(reply.body["valid"].get<bool>());
    EXPECT_EQ(reply.body["reason"], "not entitled");
}

TEST(CaServiceTest, ExpiredLeafIsReported) {
    Hierarchy h;
    const auto alice = issue(*h.ica, "alice", cached_keypair(rsa));
    h.clock->advance(cert::default_validity::end_entity + std::chrono::seconds{1});
    const auto reply = check(*h.ica, "alice", alice.chain_pem);
    EXPECT_FALSE(reply.body["valid"].get<bool>());
    EXPECT_EQ(reply.body["reason"], "expired");
}

TEST(CaServiceTest, IssuanceLedgerMatchesResponses) {
    Hierarchy h;
    int downloads = 0, uploads = 0;
    for (int i = 0; i < 6; ++i) {
        const bool upload = i % 2 == 0;
        const auto r = issue(*h.ica, "ee-" + std::to_string(i), cached_keypair(rsa, i % 3), upload);
        downloads += !r.chain.empty();
        uploads += upload;
    }
    const auto rows = h.ica->store().list_certificates();
    EXPECT_EQ(static_cast<int>(rows.size()), downloads);
    EXPECT_EQ(std::count_if(rows.begin(), rows.end(), [](const auto &r) { return r.uploaded; }), uploads);
    for (const auto &row : rows) {
        const auto c = cert::decode_certificate_pem(row.pem);
        EXPECT_TRUE(c.signed_by(h.ica->current_identity().certificate.subject_public_key));
    }
}

TEST(CaServiceTest, TamperedChainIsReportedInvalid) {
    Hierarchy h("falcon512", rsa);
    auto issued = issue(*h.ica, "alice", cached_keypair(rsa));
    auto der = cert::encode(issued.chain[1]);
    der[der.size() / 2] ^= 0x01;
    auto chain = issued.chain_pem;
    chain[1] = cert::pem_wrap(cert::certificate_label, der);
    const auto reply = check(*h.ica, "alice", chain);
    ASSERT_EQ(reply.status, 200);
    EXPECT_FALSE(reply.body["valid"].get<bool>());
    EXPECT_FALSE(reply.body.value("reason", "").empty());
}

TEST(CaServiceTest, UnparseableChainIs400) {
    Hierarchy h;
    const auto issued = issue(*h.ica, "alice", cached_keypair(rsa));
    const auto token = h.ica->verify_login(identity("alice", "alice-pw")).body["token"].get<std::string>();
    EXPECT_EQ(h.ica->verify_check({{"token", token}, {"chain_pem", {"garbage"}}}).status, 400);
    EXPECT_EQ(h.ica->verify_check({{"token", token}, {"chain_pem", Json::array()}}).status, 400);
    EXPECT_EQ(h.ica->verify_check({{"token", token}, {"chain_pem", issued.chain_pem[0]}}).status, 400);
}

TEST(CaServiceTest, UnreachableRootMeans502AndNoIssuance) {
    auto config = ica_config("ica-1", rsa);
    config.verify_cache_ttl = std::chrono::seconds{0};
    Hierarchy h(rsa, rsa, config);
    issue(*h.ica, "alice", cached_keypair(rsa));
    const auto issued_before = h.ica->store().list_certificates().size();

    const auto login = h.ica->certify_login(identity("alice", "alice-pw"));
    h.upstream->down = true;
    const auto reply = h.ica->certify_download(
        {{"token", login.body["token"]}, {"csr_pem", csr_pem("alice", cert::Role::end_entity, cached_keypair(rsa))}});
    EXPECT_EQ(reply.status, 502);
    EXPECT_EQ(h.ica->store().list_certificates().size(), issued_before);
}

TEST(CaServiceTest, UncertifiedIntermediateWithDeadRootIs502) {
    Hierarchy h;
    h.upstream->down = true;
    EXPECT_EQ(h.ica->enroll(enrollment("alice", "alice-pw")).status, 502);
    EXPECT_FALSE(h.ica->store().get_entity("alice"));
}

TEST(CaServiceTest, RootRejectingIntermediateChainMeans502) {
    Hierarchy h;
    issue(*h.ica, "alice", cached_keypair(rsa));
    // The root blacklists the intermediate; its self-validation then fails.
    auto entity = h.root->store().get_entity("ica-1");
    entity->status = store::EntityStatus::blacklisted;
    h.root->store().update_entity(*entity);
    h.clock->advance(std::chrono::seconds{31});
    const auto login = h.ica->certify_login(identity("alice", "alice-pw"));
    const auto reply = h.ica->certify_download(
        {{"token", login.body["token"]}, {"csr_pem", csr_pem("alice", cert::Role::end_entity, cached_keypair(rsa))}});
    EXPECT_EQ(reply.status, 502);
}

TEST(CaServiceTest, AlgorithmSwitchKeepsOldChainsValid) {
    Hierarchy h(rsa, rsa);
    const auto before = issue(*h.ica, "alice", cached_keypair(rsa));
    EXPECT_EQ(before.chain[1].signature_algorithm, rsa);

    h.root->set_signing_algorithm("Dilithium3");
    EXPECT_EQ(h.root->signing_algorithm(), "Dilithium3");
    EXPECT_EQ(h.root->trust_anchors().size(), 2u);
    h.ica->recertify();
    const auto after = issue(*h.ica, "bob", cached_keypair(rsa, 1));
    EXPECT_EQ(after.chain[1].signature_algorithm, "Dilithium3");
    EXPECT_EQ(after.chain[2].subject_key_algorithm, "Dilithium3");

    EXPECT_TRUE(check(*h.ica, "alice", before.chain_pem).body["valid"].get<bool>());
    EXPECT_TRUE(check(*h.ica, "bob", after.chain_pem).body["valid"].get<bool>());
    EXPECT_THROW(h.root->set_signing_algorithm("dilithium3"), crypto::unknown_algorithm);
    EXPECT_EQ(h.root->signing_algorithm(), "Dilithium3");
}

TEST(CaServiceTest, IntermediateAlgorithmSwitchReissuesItsCertificate) {
    Hierarchy h("falcon512", rsa);
    issue(*h.ica, "alice", cached_keypair(rsa));
    h.ica->set_signing_algorithm("Dilithium2");
    const auto issued = issue(*h.ica, "bob", cached_keypair(rsa, 1));
    EXPECT_EQ(issued.chain[0].signature_algorithm, "Dilithium2");
    EXPECT_EQ(issued.chain[1].subject_key_algorithm, "Dilithium2");
}

TEST(CaServiceTest, RootSerialsAreUniquePerAnchorAcrossIntermediates) {
    auto clock = std::make_shared<ManualClock>(from_unix(1'750'000'000));
    auto root =
        std::make_shared<service::CaService>(root_config(rsa), std::make_shared<store::Store>(":memory:"), clock);
    std::set<std::uint64_t> serials;
    for (int i = 0; i < 3; ++i) {
        const std::string id = "ica-" + std::to_string(i);
        root->register_ica(id, id + "-pw");
        for (int round = 0; round < 2; ++round) {
            const auto issued = issue(*root, id, cached_keypair(rsa, i), true, cert::Role::intermediate);
            ASSERT_EQ(issued.chain.size(), 2u);
            EXPECT_TRUE(serials.insert(issued.chain[0].serial).second);
        }
    }
    EXPECT_EQ(serials.size(), 6u);
}

TEST(CaServiceTest, RootStatePersistsAcrossRestart) {
    const auto path = std::filesystem::temp_directory_path() / ("pqca-root-" + to_hex(random_bytes(4)) + ".db");
    auto clock = std::make_shared<ManualClock>(from_unix(1'750'000'000));
    cert::Certificate anchor;
    {
        auto root = std::make_shared<service::CaService>(root_config("falcon512"),
                                                         std::make_shared<store::Store>(path.string()), clock);
        root->register_ica("ica-1", "ica-1-pw");
        root->set_signing_algorithm("Dilithium2");
        anchor = root->current_identity().certificate;
    }
    {
        auto root = std::make_shared<service::CaService>(root_config("falcon512"),
                                                         std::make_shared<store::Store>(path.string()), clock);
        EXPECT_EQ(root->current_identity().certificate, anchor);
        EXPECT_EQ(root->signing_algorithm(), "Dilithium2");
        EXPECT_EQ(root->trust_anchors().size(), 2u);
        EXPECT_TRUE(root->store().get_entity("ica-1"));
        const auto issued = issue(*root, "ica-1", cached_keypair(rsa), true, cert::Role::intermediate);
        EXPECT_TRUE(cert::verify_chain(issued.chain, root->trust_anchors(), clock->now()).valid());
    }
    std::filesystem::remove(path);
    std::filesystem::remove(path.string() + "-wal");
    std::filesystem::remove(path.string() + "-shm");
}

TEST(CaServiceTest, ConcurrentIssuanceYieldsDistinctSerials) {
    Hierarchy h;
    constexpr int clients = 24;
    std::vector<Issued> results(clients);
    std::vector<std::thread> threads;
    for (int i = 0; i < clients; ++i) {
        threads.emplace_back([&, i] {
            results[i] = issue(*h.ica, "client-" + std::to_string(i), cached_keypair(rsa, i % 4));
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    std::set<std::uint64_t> serials;
    for (const auto &r : results) {
        ASSERT_EQ(r.chain.size(), 3u);
        serials.insert(r.chain[0].serial);
        EXPECT_TRUE(cert::verify_chain(r.chain, h.root->trust_anchors(), h.clock->now()).valid());
    }
    EXPECT_EQ(serials.size(), static_cast<std::size_t>(clients));
    EXPECT_EQ(h.root->store().list_certificates().size(), 1u);
}

TEST(CaServiceTest, ClosedEnrollmentNeedsRegistration) {
    auto config = ica_config("ica-1", rsa);
    config.open_enrollment = false;
    Hierarchy h(rsa, rsa, config);
    EXPECT_EQ(h.ica->enroll(enrollment("alice", "alice-pw")).status, 403);
    h.ica->register_end_entity("alice", "alice-pw");
    EXPECT_EQ(h.ica->enroll(enrollment("alice", "alice-pw")).status, 200);
}

TEST(CaServiceTest, MetricsRecordEachLayer) {
    Hierarchy h("Dilithium2", rsa);
    const auto issued = issue(*h.ica, "alice", cached_keypair(rsa));
    check(*h.ica, "alice", issued.chain_pem);
    for (auto name : {service::op::ica_download, service::op::ica_upload, service::op::ica_verify,
                      service::op::ica_sign, service::op::ica_check}) {
        EXPECT_FALSE(h.ica->metrics().samples(name).empty()) << name;
    }
    for (auto name : {service::op::root_sign, service::op::root_verify}) {
        EXPECT_FALSE(h.root->metrics().samples(name).empty()) << name;
    }
}

}  // namespace
}  // namespace pqca
