// Operator commands for the root and intermediate CA services.

#include "pqca/cert/pem.hpp"
#include "pqca/service/ca_service.hpp"
#include "pqca/service/host.hpp"
#include "pqca/store/credentials.hpp"

#include "CLI11.hpp"

#include <csignal>
#include <iostream>

using namespace pqca;

namespace {

int serve(const std::string &config_path, const std::string &role) {
    auto config = service::ServiceConfig::load(config_path);
    if (role == "root") {
        config.role = service::ServiceRole::root;
    } else if (role == "intermediate") {
        config.role = service::ServiceRole::intermediate;
    }
    config.validate();

    // Block the stop signals before any thread starts so only sigwait sees them.
    sigset_t stop_signals;
    sigemptyset(&stop_signals);
    sigaddset(&stop_signals, SIGINT);
    sigaddset(&stop_signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

    auto service = std::make_shared<service::CaService>(config, std::make_shared<store::Store>(config.store),
                                                        system_clock());
    service::ServiceHost host(service);
    host.start();
    std::cout << to_string(config.role) << " CA listening on " << host.address().to_string() << " ("
              << service->signing_algorithm() << ")" << std::endl;
    if (!config.admin_listen.empty()) {
        std::cout << "admin listener on " << host.admin_address().to_string() << std::endl;
    }
    if (config.role == service::ServiceRole::intermediate) {
        try {
            service->ensure_certified();
            std::cout << "certified by root as " << service->current_identity().certificate.subject.common_name
                      << std::endl;
        } catch (const std::exception &e) {
            std::cerr << "not yet certified (will retry on first enrollment): " << e.what() << std::endl;
        }
    }
    int signal = 0;
    sigwait(&stop_signals, &signal);
    std::cout << "stopping" << std::endl;
    host.stop();
    return 0;
}

std::shared_ptr<store::Store> open_store(const std::string &store_path, const std::string &config_path,
                                         store::DigestParams *digest = nullptr) {
    std::string path = store_path;
    if (!config_path.empty()) {
        const auto config = service::ServiceConfig::load(config_path);
        if (path.empty()) {
            path = config.store;
        }
        if (digest) {
            *digest = config.credential_digest;
        }
    }
    if (path.empty() || path == ":memory:") {
        throw std::invalid_argument("need a store file (--store or a --config naming one)");
    }
    return std::make_shared<store::Store>(path);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Certificate authority operator tool"};
    app.require_subcommand(1);

    std::string config_path, store_path, role, entity_id, credentials, admin, admin_token, algorithm;

    auto *serve_cmd = app.add_subcommand("serve", "Run a root or intermediate CA service");
    serve_cmd->add_option("--config", config_path, "JSON config file")->required();
    serve_cmd->add_option("--role", role, "Overrides the config role")->check(CLI::IsMember({"root", "intermediate"}));

    auto *register_cmd = app.add_subcommand("register-ica", "Allow an intermediate to enroll at the root");
    register_cmd->add_option("--store", store_path, "Root store file");
    register_cmd->add_option("--config", config_path, "Root config (store path and credential digest)");
    register_cmd->add_option("--id", entity_id, "Intermediate entity id")->required();
    register_cmd->add_option("--credentials", credentials, "Shared secret of the intermediate")->required();

    auto *algorithm_cmd = app.add_subcommand("set-algorithm", "Switch a running service's signing algorithm");
    algorithm_cmd->add_option("--admin", admin, "Admin listener host:port")->required();
    algorithm_cmd->add_option("--token", admin_token, "Admin bearer token")->required();
    algorithm_cmd->add_option("--name", algorithm, "Algorithm name")->required();

    auto *unblacklist_cmd = app.add_subcommand("unblacklist", "Restore a blacklisted entity");
    unblacklist_cmd->add_option("--store", store_path, "Store file");
    unblacklist_cmd->add_option("--config", config_path, "Service config naming the store");
    unblacklist_cmd->add_option("--id", entity_id, "Entity id")->required();

    auto *list_cmd = app.add_subcommand("list-certs", "Print every issued certificate as PEM");
    list_cmd->add_option("--store", store_path, "Store file");
    list_cmd->add_option("--config", config_path, "Service config naming the store");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*serve_cmd) {
            return serve(config_path, role);
        }
        if (*register_cmd) {
            store::DigestParams digest;
            auto store = open_store(store_path, config_path, &digest);
            store::EntityRecord record;
            record.entity_id = entity_id;
            record.credentials_digest = store::digest_credentials(credentials, digest);
            record.role = store::EntityRole::intermediate;
            record.status = store::EntityStatus::registered;
            record.common_name = entity_id;
            store->put_entity(std::move(record));
            std::cout << "registered " << entity_id << std::endl;
            return 0;
        }
        if (*algorithm_cmd) {
            const auto reply = service::post_json(service::parse_address(admin), "/admin/set-algorithm",
                                                  {{"name", algorithm}}, std::chrono::seconds{120}, admin_token);
            if (!reply.ok()) {
                std::cerr << "set-algorithm failed: status " << reply.status << " " << reply.body.dump() << std::endl;
                return 1;
            }
            std::cout << "signing algorithm now " << reply.body.value("signing_algorithm", algorithm) << std::endl;
            return 0;
        }
        if (*unblacklist_cmd) {
            auto store = open_store(store_path, config_path);
            store->transaction([&] {
                auto entity = store->get_entity(entity_id);
                if (!entity) {
                    throw store::missing_row("no such entity: " + entity_id);
                }
                if (entity->status == store::EntityStatus::blacklisted) {
                    entity->status = store::EntityStatus::enrolled;
                }
                entity->pending_upload_deadline.reset();
                store->update_entity(*entity);
            });
            std::cout << "unblacklisted " << entity_id << std::endl;
            return 0;
        }
        if (*list_cmd) {
            std::cout << open_store(store_path, config_path)->export_pem_bundle();
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}
