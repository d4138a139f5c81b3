#include "pqca/cert/pem.hpp"
#include "pqca/crypto/algorithm.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <spawn.h>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

extern char **environ;

namespace pqca {
namespace {

namespace fs = std::filesystem;

struct Run {
    int exit_code;
    std::string output;
};

Run run(const std::string &command) {
    FILE *pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) {
        return {-1, ""};
    }
    std::string output;
    std::array<char, 4096> buffer{};
    while (auto n = fread(buffer.data(), 1, buffer.size(), pipe)) {
        output.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

// A `ca serve` child process; stdout is read line by line.
class Server {
  public:
    explicit Server(const fs::path &config) {
        int fds[2];
        if (pipe(fds) != 0) {
            throw std::runtime_error("pipe");
        }
        posix_spawn_file_actions_t actions;
        posix_spawn_file_actions_init(&actions);
        posix_spawn_file_actions_adddup2(&actions, fds[1], STDOUT_FILENO);
        posix_spawn_file_actions_addclose(&actions, fds[0]);
        std::string bin = CA_BIN, serve = "serve", flag = "--config", path = config.string();
        char *argv[] = {bin.data(), serve.data(), flag.data(), path.data(), nullptr};
        if (posix_spawn(&pid_, bin.c_str(), &actions, nullptr, argv, environ) != 0) {
            throw std::runtime_error("spawn");
        }
        posix_spawn_file_actions_destroy(&actions);
        close(fds[1]);
        out_ = fdopen(fds[0], "r");
    }
    ~Server() { stop(); }

    std::string line() {
        char buffer[512];
        return fgets(buffer, sizeof buffer, out_) ? std::string(buffer) : std::string();
    }

    int stop() {
        if (pid_ <= 0) {
            return exit_code_;
        }
        kill(pid_, SIGTERM);
        int status = 0;
        waitpid(pid_, &status, 0);
        pid_ = 0;
        fclose(out_);
        exit_code_ = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return exit_code_;
    }

  private:
    pid_t pid_ = 0;
    FILE *out_ = nullptr;
    int exit_code_ = -1;
};

std::string address_in(const std::string &line) {
    std::smatch match;
    std::regex pattern(R"((127\.0\.0\.1:\d+))");
    return std::regex_search(line, match, pattern) ? match[1].str() : std::string();
}

class OpsCliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir = fs::temp_directory_path() / ("pqca-ops-" + std::to_string(getpid()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    fs::path write(const std::string &name, const std::string &content) {
        auto path = dir / name;
        std::ofstream(path) << content;
        return path;
    }

    std::string ca(const std::string &args) { return std::string(CA_BIN) + " " + args; }
    std::string client(const std::string &args) { return std::string(CLIENT_BIN) + " " + args; }

    fs::path dir;
};

TEST_F(OpsCliTest, ServeRefusesBadConfigNamingTheKey) {
    auto result = run(ca("serve --config " + write("bad.json", R"({"signing_algorithm": "rsa1024"})").string()));
    EXPECT_NE(result.exit_code, 0);
    EXPECT_NE(result.output.find("signing_algorithm"), std::string::npos) << result.output;

    result = run(ca("serve --config " + write("ica.json", R"({"role": "intermediate", "entity_id": "i"})").string()));
    EXPECT_NE(result.exit_code, 0);
    EXPECT_NE(result.output.find("upstream"), std::string::npos) << result.output;
}

TEST_F(OpsCliTest, RegisterIsRefusedTwice) {
    const auto store = (dir / "root.db").string();
    EXPECT_EQ(run(ca("register-ica --store " + store + " --id ica-1 --credentials s")).exit_code, 0);
    EXPECT_NE(run(ca("register-ica --store " + store + " --id ica-1 --credentials s")).exit_code, 0);
    EXPECT_NE(run(ca("unblacklist --store " + store + " --id ghost")).exit_code, 0);
    EXPECT_EQ(run(ca("unblacklist --store " + store + " --id ica-1")).exit_code, 0);
    EXPECT_NE(run(ca("list-certs")).exit_code, 0);
}

TEST_F(OpsCliTest, EndToEnd) {
    const auto root_config = write("root.json", R"({"store": ")" + (dir / "root.db").string() +
                                                    R"(", "listen": "127.0.0.1:0", "admin_listen": "127.0.0.1:0",
                                                       "admin_token": "sesame"})");
    ASSERT_EQ(run(ca("register-ica --config " + root_config.string() + " --id ica-1 --credentials s")).exit_code, 0);

    Server root(root_config);
    const auto root_address = address_in(root.line());
    const auto admin_address = address_in(root.line());
    ASSERT_FALSE(root_address.empty());
    ASSERT_FALSE(admin_address.empty());

    const auto ica_config = write("ica.json", R"({"role": "intermediate", "upstream": ")" + root_address +
                                                  R"(", "entity_id": "ica-1", "credentials": "s", "store": ")" +
                                                  (dir / "ica.db").string() + R"(", "listen": "127.0.0.1:0"})");
    Server ica(ica_config);
    const auto ica_address = address_in(ica.line());
    ASSERT_FALSE(ica_address.empty());
    EXPECT_NE(ica.line().find("certified"), std::string::npos);

    const auto chain = (dir / "alice.pem").string();
    auto result = run(client("issue --ica " + ica_address + " --id alice --key-alg rsa2048-sha256 --out " + chain));
    ASSERT_EQ(result.exit_code, 0) << result.output;
    result = run(client("verify --chain " + chain + " --ica " + ica_address + " --id alice"));
    EXPECT_EQ(result.exit_code, 0) << result.output;
    EXPECT_NE(result.output.find("valid"), std::string::npos);

    result = run(ca("set-algorithm --admin " + admin_address + " --token wrong --name Dilithium3"));
    EXPECT_NE(result.exit_code, 0);
    result = run(ca("set-algorithm --admin " + admin_address + " --token sesame --name Dilithium3"));
    EXPECT_EQ(result.exit_code, 0) << result.output;

    result = run(ca("list-certs --store " + (dir / "ica.db").string()));
    ASSERT_EQ(result.exit_code, 0);
    const auto certs = cert::decode_certificate_bundle(result.output);
    ASSERT_EQ(certs.size(), 1u);
    EXPECT_EQ(certs[0].subject.common_name, "alice");

    result = run(ca("list-certs --config " + root_config.string()));
    ASSERT_EQ(result.exit_code, 0);
    EXPECT_EQ(cert::decode_certificate_bundle(result.output).size(), 1u);

    EXPECT_EQ(ica.stop(), 0);
    EXPECT_EQ(root.stop(), 0);
}

}  // namespace
}  // namespace pqca
