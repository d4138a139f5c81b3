#include "pqca/service/config.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace pqca::service {
namespace {

std::string failing_key(const Json &json) {
    try {
        ServiceConfig::from_json(json);
    } catch (const config_error &e) {
        return e.key();
    }
    return "";
}

std::filesystem::path temp_file(const std::string &name, const std::string &content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

TEST(ServiceConfigTest, DefaultsDescribeARsaRoot) {
    const auto config = ServiceConfig::from_json(Json::object());
    EXPECT_EQ(config.role, ServiceRole::root);
    EXPECT_EQ(config.signing_algorithm, "rsa2048-sha256");
    EXPECT_EQ(config.token_ttl, std::chrono::seconds{300});
    EXPECT_EQ(config.upload_window, std::chrono::seconds{60});
    EXPECT_EQ(config.verify_cache_ttl, std::chrono::seconds{30});
    EXPECT_TRUE(config.admin_listen.empty());
}

TEST(ServiceConfigTest, ReadsEveryKey) {
    const auto config = ServiceConfig::from_json({{"role", "intermediate"},
                                                  {"upstream", "10.0.0.1:9000"},
                                                  {"signing_algorithm", "falcon1024"},
                                                  {"token_ttl_seconds", 10},
                                                  {"upload_window_seconds", 20},
                                                  {"verify_cache_ttl_seconds", 0},
                                                  {"store", "/tmp/x.db"},
                                                  {"listen", "0.0.0.0:1"},
                                                  {"admin_listen", "127.0.0.1:2"},
                                                  {"admin_token", "t"},
                                                  {"entity_id", "ica-9"},
                                                  {"credentials", "pw"},
                                                  {"organization", "org"},
                                                  {"open_enrollment", false},
                                                  {"worker_threads", 3},
                                                  {"credential_hash", "sha512"},
                                                  {"credential_iterations", 10}});
    EXPECT_EQ(config.role, ServiceRole::intermediate);
    EXPECT_EQ(config.signing_algorithm, "falcon1024");
    EXPECT_EQ(config.token_ttl.count(), 10);
    EXPECT_EQ(config.upload_window.count(), 20);
    EXPECT_EQ(config.verify_cache_ttl.count(), 0);
    EXPECT_EQ(config.common_name, "ica-9");
    EXPECT_FALSE(config.open_enrollment);
    EXPECT_EQ(config.worker_threads, 3u);
    EXPECT_EQ(config.credential_digest.hash, "sha512");
}

TEST(ServiceConfigTest, RefusalNamesTheBadKey) {
    EXPECT_EQ(failing_key({{"signing_algorithm", "Falcon512"}}), "signing_algorithm");
    EXPECT_EQ(failing_key({{"role", "intermediate"}, {"entity_id", "i"}}), "upstream");
    EXPECT_EQ(failing_key({{"role", "intermediate"}, {"upstream", "h:1"}}), "entity_id");
    EXPECT_EQ(failing_key({{"upstream", "h:1"}}), "upstream");
    EXPECT_EQ(failing_key({{"role", "leaf"}}), "role");
    EXPECT_EQ(failing_key({{"listen", "nohost"}}), "listen");
    EXPECT_EQ(failing_key({{"admin_listen", "127.0.0.1:5"}}), "admin_token");
    EXPECT_EQ(failing_key({{"token_ttl_seconds", 0}}), "token_ttl_seconds");
    EXPECT_EQ(failing_key({{"token_ttl_seconds", "long"}}), "token_ttl_seconds");
    EXPECT_EQ(failing_key({{"worker_threads", 0}}), "worker_threads");
    EXPECT_EQ(failing_key({{"credential_hash", "md5"}}), "credential_hash");
    EXPECT_EQ(failing_key({{"colour", "blue"}}), "colour");
}

TEST(ServiceConfigTest, LoadsFromFile) {
    const auto path = temp_file("pqca-config-test.json", R"({"signing_algorithm": "Dilithium3"})");
    EXPECT_EQ(ServiceConfig::load(path.string()).signing_algorithm, "Dilithium3");
    const auto bad = temp_file("pqca-config-bad.json", "{oops");
    EXPECT_THROW(ServiceConfig::load(bad.string()), config_error);
    EXPECT_THROW(ServiceConfig::load("/nonexistent/config.json"), config_error);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
}

TEST(ServiceConfigTest, AllowlistSkipsCommentsAndRejectsJunk) {
    const auto path = temp_file("pqca-allow.txt", "# intermediates\nica-1 s1\n\n  ica-2   s2 # second\n");
    const auto entries = read_allowlist(path.string());
    ASSERT_EQ(entries.size(), 2u);
    EXPECT_EQ(entries[1], std::make_pair(std::string("ica-2"), std::string("s2")));
    const auto bad = temp_file("pqca-allow-bad.txt", "ica-1\n");
    EXPECT_THROW(read_allowlist(bad.string()), config_error);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
}

TEST(ServiceConfigTest, AddressParsing) {
    const auto a = parse_address("127.0.0.1:8080");
    EXPECT_EQ(a.host, "127.0.0.1");
    EXPECT_EQ(a.port, 8080);
    EXPECT_EQ(a.to_string(), "127.0.0.1:8080");
    EXPECT_THROW(parse_address("localhost"), std::invalid_argument);
    EXPECT_THROW(parse_address("h:99999"), std::invalid_argument);
    EXPECT_THROW(parse_address("h:12x"), std::invalid_argument);
    EXPECT_THROW(parse_address(":80"), std::invalid_argument);
}

}  // namespace
}  // namespace pqca::service
