// End-entity client: obtain a certificate from an intermediate, or have one verified.

#include "pqca/cert/pem.hpp"
#include "pqca/client/agent.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace pqca;

int main(int argc, char **argv) {
    CLI::App app{"Certificate client"};
    app.require_subcommand(1);

    std::string ica, entity_id, credentials, key_algorithm{crypto::classical_baseline}, organization = "pqca";
    std::string out_path, key_out, chain_path;
    bool verify_locally = false;

    auto *issue = app.add_subcommand("issue", "Enroll, obtain and acknowledge a certificate");
    issue->add_option("--ica", ica, "Intermediate CA host:port")->required();
    issue->add_option("--id", entity_id, "Entity id (also the certificate common name)")->required();
    issue->add_option("--key-alg", key_algorithm, "Key algorithm")->capture_default_str();
    issue->add_option("--credentials", credentials, "Shared secret (defaults to the entity id)");
    issue->add_option("--org", organization, "Organization")->capture_default_str();
    issue->add_option("--out", out_path, "Write the chain here instead of stdout");
    issue->add_option("--key-out", key_out, "Write the secret key (base64) here");
    issue->add_flag("--verify-locally", verify_locally, "Check the returned chain before acknowledging");

    auto *verify = app.add_subcommand("verify", "Ask the intermediate to verify a chain");
    verify->add_option("--chain", chain_path, "PEM bundle, leaf first")->required()->check(CLI::ExistingFile);
    verify->add_option("--ica", ica, "Intermediate CA host:port")->required();
    verify->add_option("--id", entity_id, "Enrolled entity id to log in as")->required();
    verify->add_option("--credentials", credentials, "Shared secret (defaults to the entity id)");

    CLI11_PARSE(app, argc, argv);
    if (credentials.empty()) {
        credentials = entity_id;
    }

    try {
        client::ClientProfile profile;
        profile.entity_id = entity_id;
        profile.credentials = credentials;
        profile.key_algorithm = key_algorithm;
        profile.ica_address = service::parse_address(ica);
        profile.organization = organization;
        profile.verify_locally = verify_locally;
        client::ClientAgent agent(profile);

        if (*issue) {
            const auto result = agent.run_issuance();
            if (out_path.empty()) {
                std::cout << result.chain_bundle();
            } else {
                std::ofstream(out_path) << result.chain_bundle();
                std::cerr << "chain written to " << out_path << "; serial " << result.certificate.serial << std::endl;
            }
            if (!key_out.empty()) {
                std::ofstream(key_out) << key_algorithm << "\n" << base64_encode(result.key.secret_key) << "\n";
            }
            return 0;
        }

        std::ifstream in(chain_path);
        std::stringstream text;
        text << in.rdbuf();
        std::vector<std::string> chain;
        for (const auto &c : cert::decode_certificate_bundle(text.str())) {
            chain.push_back(cert::encode_pem(c));
        }
        const auto outcome = agent.run_verify(chain);
        if (outcome.valid) {
            std::cout << "valid" << std::endl;
            return 0;
        }
        std::cout << "invalid: " << outcome.reason << std::endl;
        return 1;
    } catch (const client::agent_error &e) {
        std::cerr << "error at " << client::to_string(e.step()) << ": " << e.what() << std::endl;
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
}
