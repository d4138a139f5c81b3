#include "pqca/cert/chain.hpp"
#include "pqca/service/host.hpp"
#include "service_fixture.hpp"
#include "test_support.hpp"

#include "httplib.h"

#include <thread>

namespace pqca {
namespace {

using namespace test_support;
using service::Json;

struct LiveRoot {
    LiveRoot() {
        auto config = root_config("rsa2048-sha256");
        config.listen = "127.0.0.1:0";
        config.admin_listen = "127.0.0.1:0";
        config.admin_token = "sesame";
        config.worker_threads = 2;
        service = std::make_shared<service::CaService>(config, std::make_shared<store::Store>(":memory:"),
                                                       system_clock());
        host = std::make_unique<service::ServiceHost>(service);
        host->start();
    }

    service::Reply admin(const std::string &path, const Json &body, const std::string &token = "sesame") {
        return service::post_json(host->admin_address(), path, body, std::chrono::seconds{60}, token);
    }

    std::shared_ptr<service::CaService> service;
    std::unique_ptr<service::ServiceHost> host;
};

TEST(ServiceHostTest, HealthAndPublicRoutes) {
    LiveRoot root;
    httplib::Client client("127.0.0.1", root.host->port());
    auto health = client.Get("/health");
    ASSERT_TRUE(health);
    EXPECT_EQ(health->status, 200);
    EXPECT_EQ(Json::parse(health->body)["role"], "root");

    auto reply = service::post_json(root.host->address(), "/enroll", enrollment("nobody", "pw"));
    EXPECT_EQ(reply.status, 403);
    reply = service::post_json(root.host->address(), "/certify/login", {{"entity_id", 1}});
    EXPECT_EQ(reply.status, 400);
    auto raw = client.Post("/enroll", "{broken", "application/json");
    ASSERT_TRUE(raw);
    EXPECT_EQ(raw->status, 400);
}

TEST(ServiceHostTest, AdminRoutesAreNotOnThePublicListener) {
    LiveRoot root;
    const auto reply =
        service::post_json(root.host->address(), "/admin/set-algorithm", {{"name", "Dilithium3"}}, std::chrono::seconds{10}, "sesame");
    EXPECT_EQ(reply.status, 404);
    EXPECT_EQ(root.service->signing_algorithm(), "rsa2048-sha256");
}

TEST(ServiceHostTest, AdminNeedsTheBearerToken) {
    LiveRoot root;
    EXPECT_EQ(root.admin("/admin/set-algorithm", {{"name", "Dilithium3"}}, "wrong").status, 401);
    EXPECT_EQ(root.admin("/admin/set-algorithm", {{"name", "Dilithium3"}}, "").status, 401);
    EXPECT_EQ(root.service->signing_algorithm(), "rsa2048-sha256");
}

TEST(ServiceHostTest, AdminCommands) {
    LiveRoot root;
    auto reply = root.admin("/admin/set-algorithm", {{"name", "Dilithium3"}});
    EXPECT_EQ(reply.status, 200);
    EXPECT_EQ(root.service->signing_algorithm(), "Dilithium3");
    EXPECT_EQ(root.admin("/admin/set-algorithm", {{"name", "nope"}}).status, 400);
    EXPECT_EQ(root.service->signing_algorithm(), "Dilithium3");

    EXPECT_EQ(root.admin("/admin/register-ica", {{"entity_id", "ica-7"}, {"credentials", "pw"}}).status, 200);
    EXPECT_EQ(root.admin("/admin/register-ica", {{"entity_id", "ica-7"}, {"credentials", "pw"}}).status, 409);
    EXPECT_EQ(service::post_json(root.host->address(), "/enroll", enrollment("ica-7", "pw")).status, 200);

    EXPECT_EQ(root.admin("/admin/unblacklist", {{"entity_id", "ghost"}}).status, 404);
    EXPECT_EQ(root.admin("/admin/unblacklist", {{"entity_id", "ica-7"}}).status, 200);

    httplib::Client client("127.0.0.1", root.host->admin_port());
    client.set_bearer_token_auth("sesame");
    auto status = client.Get("/admin/status");
    ASSERT_TRUE(status);
    EXPECT_EQ(Json::parse(status->body)["trust_anchors"].size(), 2u);
}

TEST(ServiceHostTest, GaugeCountsQueuedConnections) {
    LiveRoot root;
    root.service->register_ica("ica-1", "pw");
    constexpr int clients = 12;
    std::vector<std::thread> threads;
    root.host->gauge().reset_peak();
    for (int i = 0; i < clients; ++i) {
        threads.emplace_back([&] { service::post_json(root.host->address(), "/certify/login", identity("ica-1", "pw")); });
    }
    for (auto &t : threads) {
        t.join();
    }
    // Two workers; logins hash credentials, so connections pile up behind them.
    EXPECT_GE(root.host->gauge().peak(), 2u);
    // A worker may still be closing its connection after the reply went out.
    for (int i = 0; i < 100 && root.host->gauge().current() != 0; ++i) {
        std::this_thread::sleep_for(std::chrono::milliseconds{10});
    }
    EXPECT_EQ(root.host->gauge().current(), 0u);
}

TEST(ServiceHostTest, SweeperBlacklistsInTheBackground) {
    auto config = root_config("rsa2048-sha256");
    config.listen = "127.0.0.1:0";
    config.upload_window = std::chrono::seconds{1};
    auto clock = std::make_shared<ManualClock>(from_unix(1'750'000'000));
    auto service = std::make_shared<service::CaService>(config, std::make_shared<store::Store>(":memory:"), clock);
    service->register_ica("ica-1", "ica-1-pw");
    issue(*service, "ica-1", cached_keypair("rsa2048-sha256"), false, cert::Role::intermediate);
    service::ServiceHost host(service);
    host.start();
    clock->advance(std::chrono::seconds{5});
    for (int i = 0; i < 50 && service->store().get_entity("ica-1")->status != store::EntityStatus::blacklisted; ++i) {
        std::this_thread::sleep_for(std::chrono::milliseconds{100});
    }
    EXPECT_EQ(service->store().get_entity("ica-1")->status, store::EntityStatus::blacklisted);
    host.stop();
}

TEST(ServiceHostTest, IntermediateOverHttp) {
    LiveRoot root;
    root.service->register_ica("ica-1", "ica-1-secret");
    auto config = ica_config("ica-1", "rsa2048-sha256");
    config.upstream = root.host->address().to_string();
    config.listen = "127.0.0.1:0";
    auto ica = std::make_shared<service::CaService>(config, std::make_shared<store::Store>(":memory:"), system_clock());
    service::ServiceHost host(ica);
    host.start();
    const auto addr = host.address();
    ASSERT_EQ(service::post_json(addr, "/enroll", enrollment("ee", "ee-pw")).status, 200);
    auto login = service::post_json(addr, "/certify/login", identity("ee", "ee-pw"));
    ASSERT_EQ(login.status, 200);
    auto bundle = service::post_json(
        addr, "/certify/download",
        {{"token", login.body["token"]}, {"csr_pem", csr_pem("ee", cert::Role::end_entity, cached_keypair("rsa2048-sha256"))}});
    ASSERT_EQ(bundle.status, 200) << bundle.body.dump();
    EXPECT_EQ(bundle.body["chain_pem"].size(), 3u);
    auto upload = service::post_json(
        addr, "/certify/upload", {{"token", login.body["token"]}, {"certificate_pem", bundle.body["certificate_pem"]}});
    EXPECT_EQ(upload.status, 200);
    EXPECT_EQ(upload.body["status"], "acknowledged");
    host.stop();
}

TEST(ServiceHostTest, DeadUpstreamIs502) {
    auto config = ica_config("ica-1", "rsa2048-sha256");
    config.upstream = "127.0.0.1:1";
    config.listen = "127.0.0.1:0";
    auto ica = std::make_shared<service::CaService>(config, std::make_shared<store::Store>(":memory:"), system_clock());
    service::ServiceHost host(ica);
    host.start();
    EXPECT_EQ(service::post_json(host.address(), "/enroll", enrollment("ee", "pw")).status, 502);
}

}  // namespace
}  // namespace pqca
