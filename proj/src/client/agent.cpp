#include "pqca/client/agent.hpp"

#include "pqca/cert/chain.hpp"
#include "pqca/cert/pem.hpp"

#include <thread>

namespace pqca::client {

using service::Json;
using service::Reply;

namespace {

std::string describe(const Reply &reply) {
    if (reply.status == 0) {
        return "no response (" + reply.body.value("detail", std::string("transport error")) + ")";
    }
    std::string text = "status " + std::to_string(reply.status);
    if (!reply.error().empty()) {
        text += " " + reply.error();
    }
    if (reply.body.contains("detail") && reply.body["detail"].is_string()) {
        text += ": " + reply.body["detail"].get<std::string>();
    }
    return text;
}

std::string string_field(const Reply &reply, Step step, const char *key) {
    if (!reply.body.contains(key) || !reply.body[key].is_string()) {
        throw agent_error(step, reply.status, std::string("response lacks ") + key);
    }
    return reply.body[key].get<std::string>();
}

}  // namespace

std::string_view to_string(Step step) noexcept {
    switch (step) {
    case Step::enroll:
        return "enroll";
    case Step::certify_login:
        return "certify/login";
    case Step::certify_download:
        return "certify/download";
    case Step::certify_upload:
        return "certify/upload";
    case Step::verify_login:
        return "verify/login";
    case Step::verify_check:
        return "verify/check";
    case Step::local_verify:
        return "local verify";
    }
    return "?";
}

std::string IssuanceResult::chain_bundle() const {
    std::string out;
    for (const auto &pem : chain_pem) {
        out += pem;
    }
    return out;
}

ClientAgent::ClientAgent(ClientProfile profile, AgentOptions options)
    : profile_(std::move(profile)), options_(options) {
    if (profile_.entity_id.empty()) {
        throw std::invalid_argument("client profile needs an entity id");
    }
    crypto::algorithm_info(profile_.key_algorithm);
}

Reply ClientAgent::call(Step step, std::string_view path, const Json &body) {
    auto reply = service::post_json(profile_.ica_address, path, body, options_.request_timeout);
    if (!reply.ok()) {
        throw agent_error(step, reply.status, describe(reply));
    }
    return reply;
}

IssuanceResult ClientAgent::run_issuance() {
    IssuanceResult result;
    auto timed = [&](Step step, std::string_view path, const Json &body) {
        const auto started = std::chrono::steady_clock::now();
        auto reply = call(step, path, body);
        result.timings.push_back(
            {step, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count()});
        return reply;
    };

    result.key = profile_.key ? *profile_.key : crypto::generate_keypair(profile_.key_algorithm);
    if (result.key.algorithm != profile_.key_algorithm) {
        throw std::invalid_argument("supplied key does not match the profile's key algorithm");
    }
    const Json identity{{"entity_id", profile_.entity_id}, {"credentials", profile_.credentials}};

    timed(Step::enroll, "/enroll",
          {{"entity_id", profile_.entity_id},
           {"common_name", profile_.entity_id},
           {"organization", profile_.organization},
           {"credentials", profile_.credentials}});
    result.certify_token =
        string_field(timed(Step::certify_login, "/certify/login", identity), Step::certify_login, "token");

    const auto csr = cert::build_csr({profile_.entity_id, profile_.organization, cert::Role::end_entity}, result.key);
    auto bundle = timed(Step::certify_download, "/certify/download",
                        {{"token", result.certify_token}, {"csr_pem", cert::encode_pem(csr)}});
    result.certificate_pem = string_field(bundle, Step::certify_download, "certificate_pem");
    if (!bundle.body.contains("chain_pem") || !bundle.body["chain_pem"].is_array()) {
        throw agent_error(Step::certify_download, bundle.status, "response lacks chain_pem");
    }
    try {
        for (const auto &item : bundle.body["chain_pem"]) {
            result.chain_pem.push_back(item.get<std::string>());
            result.chain.push_back(cert::decode_certificate_pem(result.chain_pem.back()));
        }
        result.certificate = cert::decode_certificate_pem(result.certificate_pem);
    } catch (const std::exception &e) {
        throw agent_error(Step::certify_download, bundle.status, std::string("undecodable bundle: ") + e.what());
    }
    if (result.chain.empty() || result.chain.front() != result.certificate ||
        result.certificate.subject_public_key != result.key.public_key) {
        throw agent_error(Step::certify_download, bundle.status, "issued certificate does not carry our key");
    }
    if (profile_.verify_locally) {
        auto anchors = profile_.trust_anchors;
        if (anchors.empty()) {
            anchors.push_back(result.chain.back());
        }
        const auto report = cert::verify_chain(result.chain, anchors, system_clock()->now());
        if (!report.valid()) {
            throw agent_error(Step::local_verify, 0, report.reason());
        }
    }

    const Json upload{{"token", result.certify_token}, {"certificate_pem", result.certificate_pem}};
    for (int attempt = 1;; ++attempt) {
        result.upload_attempts = attempt;
        try {
            timed(Step::certify_upload, "/certify/upload", upload);
            break;
        } catch (const agent_error &e) {
            // 4xx answers are final; only transport errors and 5xx are retried.
            const bool transient = e.status() == 0 || e.status() >= 500;
            if (!transient || attempt >= options_.upload_attempts) {
                throw agent_error(Step::certify_upload, e.status(),
                                  std::string(e.what()) + "; upload not acknowledged, entity may be blacklisted");
            }
            std::this_thread::sleep_for(options_.upload_retry_delay);
        }
    }
    return result;
}

std::string ClientAgent::verify_login() {
    return string_field(call(Step::verify_login, "/verify/login",
                             {{"entity_id", profile_.entity_id}, {"credentials", profile_.credentials}}),
                        Step::verify_login, "token");
}

VerifyOutcome ClientAgent::check_with_token(const std::string &token, const std::vector<std::string> &chain_pem) {
    auto reply = call(Step::verify_check, "/verify/check", {{"token", token}, {"chain_pem", chain_pem}});
    if (!reply.body.contains("valid") || !reply.body["valid"].is_boolean()) {
        throw agent_error(Step::verify_check, reply.status, "response lacks valid");
    }
    return {reply.body["valid"].get<bool>(), reply.body.value("reason", std::string())};
}

VerifyOutcome ClientAgent::run_verify(const std::vector<std::string> &chain_pem) {
    return check_with_token(verify_login(), chain_pem);
}

}  // namespace pqca::client
