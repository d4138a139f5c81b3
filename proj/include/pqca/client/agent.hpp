#pragma once

#include "pqca/cert/certificate.hpp"
#include "pqca/common/clock.hpp"
#include "pqca/crypto/algorithm.hpp"
#include "pqca/crypto/provider.hpp"
#include "pqca/service/wire.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pqca::client {

struct ClientProfile {
    std::string entity_id;
    std::string credentials;
    std::string key_algorithm{crypto::classical_baseline};
    service::Address ica_address;
    std::string organization = "pqca";
    // Runs verify_chain on the returned chain. Off by default so a client
    // with a classical key performs no post-quantum operation.
    bool verify_locally = false;
    // Anchors for local verification; empty trusts the chain's own root.
    std::vector<cert::Certificate> trust_anchors;
    // Use this key instead of generating one.
    std::optional<crypto::KeyPair> key;
};

struct AgentOptions {
    int upload_attempts = 3;
    std::chrono::milliseconds upload_retry_delay{1000};
    std::chrono::seconds request_timeout{120};
};

enum class Step { enroll, certify_login, certify_download, certify_upload, verify_login, verify_check, local_verify };

std::string_view to_string(Step step) noexcept;

/// A workflow step failed. status is the HTTP status (0: no response).
class agent_error : public std::runtime_error {
  public:
    agent_error(Step step, int status, const std::string &message)
        : std::runtime_error(std::string(to_string(step)) + ": " + message), step_(step), status_(status) {}
    [[nodiscard]] Step step() const noexcept { return step_; }
    [[nodiscard]] int status() const noexcept { return status_; }

  private:
    Step step_;
    int status_;
};

struct StepTiming {
    Step step;
    double ms;
};

struct IssuanceResult {
    crypto::KeyPair key;
    cert::Certificate certificate;
    cert::CertificateChain chain;
    std::string certificate_pem;
    std::vector<std::string> chain_pem;
    std::string certify_token;
    std::vector<StepTiming> timings;
    int upload_attempts = 0;

    /// Leaf first, concatenated.
    [[nodiscard]] std::string chain_bundle() const;
};

struct VerifyOutcome {
    bool valid = false;
    std::string reason;
};

/// Drives the end-entity side of the protocol against one intermediate.
class ClientAgent {
  public:
    explicit ClientAgent(ClientProfile profile, AgentOptions options = {});

    /// enroll, certify/login, certify/download, certify/upload. A failed
    /// upload is retried (upload_attempts) before giving up, since an
    /// unacknowledged issuance gets the entity blacklisted. Throws agent_error.
    IssuanceResult run_issuance();

    /// verify/login then verify/check. Throws agent_error on transport or
    /// protocol failure; an invalid chain is a normal outcome.
    VerifyOutcome run_verify(const std::vector<std::string> &chain_pem);

    std::string verify_login();
    VerifyOutcome check_with_token(const std::string &token, const std::vector<std::string> &chain_pem);

    [[nodiscard]] const ClientProfile &profile() const noexcept { return profile_; }

  private:
    service::Reply call(Step step, std::string_view path, const service::Json &body);

    ClientProfile profile_;
    AgentOptions options_;
};

}  // namespace pqca::client
