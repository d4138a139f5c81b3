// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.

#include "pqca/bench/harness.hpp"
#include "pqca/cert/chain.hpp"
#include "pqca/cert/encoding.hpp"
#include "pqca/cert/pem.hpp"
#include "pqca/client/agent.hpp"
#include "pqca/crypto/provider.hpp"
#include "pqca/service/host.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace pqca;
using service::Json;
using service::Reply;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

// Collects failed expectations instead of stopping at the first one.
class Checker {
  public:
    void expect(bool condition, const std::string &what) {
        if (!condition) {
            failures_.push_back(what);
        }
    }
    Verdict verdict(const std::string &on_success) const {
        if (failures_.empty()) {
            return {true, on_success};
        }
        std::string detail;
        for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) {
            detail += (i ? "; " : "") + failures_[i];
        }
        if (failures_.size() > 5) {
            detail += "; +" + std::to_string(failures_.size() - 5) + " more";
        }
        return {false, detail};
    }

  private:
    std::vector<std::string> failures_;
};

const std::string rsa{crypto::classical_baseline};

std::string status_of(const Reply &reply) {
    return std::to_string(reply.status) + (reply.error().empty() ? "" : " " + reply.error());
}

// Root and one intermediate on loopback HTTP sharing a manual clock.
struct LiveStack {
    LiveStack(const std::string &root_algorithm, const std::function<void(service::ServiceConfig &)> &tune_ica = {}) {
        service::ServiceConfig rc;
        rc.signing_algorithm = root_algorithm;
        rc.listen = "127.0.0.1:0";
        rc.admin_listen = "127.0.0.1:0";
        rc.admin_token = "root-admin";
        root = std::make_shared<service::CaService>(rc, std::make_shared<store::Store>(":memory:"), clock);
        root_host = std::make_unique<service::ServiceHost>(root);
        root_host->start();
        root->register_ica("ica-1", "ica-1-secret");

        service::ServiceConfig ic;
        ic.role = service::ServiceRole::intermediate;
        ic.upstream = root_host->address().to_string();
        ic.entity_id = "ica-1";
        ic.credentials = "ica-1-secret";
        ic.common_name = "ica-1";
        ic.listen = "127.0.0.1:0";
        ic.admin_listen = "127.0.0.1:0";
        ic.admin_token = "ica-admin";
        if (tune_ica) {
            tune_ica(ic);
        }
        ica = std::make_shared<service::CaService>(ic, std::make_shared<store::Store>(":memory:"), clock);
        ica_host = std::make_unique<service::ServiceHost>(ica);
        ica_host->start();
    }

    Reply to_ica(const std::string &path, const Json &body) { return service::post_json(ica_host->address(), path, body); }
    Reply to_root(const std::string &path, const Json &body) {
        return service::post_json(root_host->address(), path, body);
    }

    std::shared_ptr<ManualClock> clock = std::make_shared<ManualClock>(from_unix(1'760'000'000));
    std::shared_ptr<service::CaService> root;
    std::unique_ptr<service::ServiceHost> root_host;
    std::shared_ptr<service::CaService> ica;
    std::unique_ptr<service::ServiceHost> ica_host;
};

Json identity(const std::string &id) { return {{"entity_id", id}, {"credentials", id + "-pw"}}; }

Json enrollment(const std::string &id) {
    return {{"entity_id", id}, {"common_name", id}, {"organization", "acme"}, {"credentials", id + "-pw"}};
}

std::string csr_for(const std::string &id, cert::Role role) {
    return cert::encode_pem(cert::build_csr({id, "acme", role}, crypto::generate_keypair(rsa)));
}

struct Download {
    std::string token;
    std::string certificate_pem;
    std::vector<std::string> chain_pem;
    bool ok = false;
};

// enroll, certify/login and certify/download over HTTP, with no upload.
Download download(LiveStack &stack, const std::string &id, Checker &check) {
    Download out;
    auto reply = stack.to_ica("/enroll", enrollment(id));
    check.expect(reply.ok(), id + " enroll: " + status_of(reply));
    reply = stack.to_ica("/certify/login", identity(id));
    check.expect(reply.ok(), id + " certify/login: " + status_of(reply));
    out.token = reply.body.value("token", "");
    reply = stack.to_ica("/certify/download", {{"token", out.token}, {"csr_pem", csr_for(id, cert::Role::end_entity)}});
    check.expect(reply.ok(), id + " certify/download: " + status_of(reply));
    if (reply.ok()) {
        out.certificate_pem = reply.body["certificate_pem"];
        out.chain_pem = reply.body["chain_pem"].get<std::vector<std::string>>();
        out.ok = true;
    }
    return out;
}

client::ClientAgent agent_for(LiveStack &stack, const std::string &id) {
    client::ClientProfile profile;
    profile.entity_id = id;
    profile.credentials = id + "-pw";
    profile.ica_address = stack.ica_host->address();
    return client::ClientAgent(profile);
}

// ---- criteria -----------------------------------------------------------------

Verdict published_sizes() {
    struct Row {
        const char *name;
        std::size_t pk, sk, sig;
        bool exact_signature;
    };
    const Row rows[] = {{"falcon512", 897, 1281, 752, false},
                        {"falcon1024", 1793, 2305, 1462, false},
                        {"Dilithium2", 1312, 2528, 2420, true},
                        {"Dilithium3", 1952, 4000, 3293, true},
                        {"Dilithium5", 2592, 4864, 4595, true},
                        {"SPHINCS+-SHA2-128f-simple", 32, 64, 17088, true},
                        {"SPHINCS+-SHA2-192f-simple", 48, 96, 35664, true}};
    const auto started = std::chrono::steady_clock::now();
    Checker check;
    std::ostringstream falcon;
    for (const auto &row : rows) {
        const auto key = crypto::generate_keypair(row.name);
        check.expect(key.public_key.size() == row.pk, std::string(row.name) + " public key " +
                                                          std::to_string(key.public_key.size()));
        check.expect(key.secret_key.size() == row.sk, std::string(row.name) + " secret key " +
                                                          std::to_string(key.secret_key.size()));
        const auto &spec = crypto::algorithm_info(row.name);
        check.expect(spec.public_key_bytes == row.pk && spec.secret_key_bytes == row.sk &&
                         spec.signature_bytes == row.sig,
                     std::string(row.name) + " registry entry");
        std::size_t largest = 0;
        for (int i = 0; i < (row.exact_signature ? 2 : 25); ++i) {
            const auto message = random_bytes(64 + i);
            const auto sig = crypto::sign(row.name, key.secret_key, message);
            largest = std::max(largest, sig.bytes.size());
            check.expect(row.exact_signature ? sig.bytes.size() == row.sig : sig.bytes.size() <= row.sig,
                         std::string(row.name) + " signature " + std::to_string(sig.bytes.size()));
            check.expect(crypto::verify(row.name, key.public_key, message, sig), std::string(row.name) + " verify");
        }
        if (!row.exact_signature) {
            falcon << row.name << " max signature " << largest << "/" << row.sig << " ";
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    check.expect(seconds < 60, "took " + std::to_string(seconds) + " s");
    return check.verdict("7 algorithms match; " + falcon.str());
}

Verdict experiment_set(int set, int icas, int clients) {
    bench::ExperimentPlan plan = bench::ExperimentPlan::defaults(set);
    plan.icas = icas;
    plan.client_counts = {clients};
    plan.repetitions = 1;
    const auto report = bench::run_experiment(plan, &std::cerr);
    Checker check;
    check.expect(plan.algorithms.size() == 7, "expected 7 algorithms");
    check.expect(report.rows.size() == 7 * plan.algorithms.size(), "row count " + std::to_string(report.rows.size()));
    for (const auto &row : report.rows) {
        check.expect(row.samples > 0, row.algorithm + " " + std::string(bench::to_string(row.operation)) +
                                          " has no samples");
    }
    std::size_t issued = 0;
    for (const auto &o : report.outcomes) {
        const auto expected = static_cast<std::size_t>(icas * clients);
        check.expect(o.attempted == expected && o.all_succeeded(),
                     o.algorithm + ": issued " + std::to_string(o.issued) + "/" + std::to_string(expected) +
                         ", local " + std::to_string(o.verified_locally) + ", remote " +
                         std::to_string(o.verified_remotely) +
                         (o.failures.empty() ? "" : " (" + o.failures.front() + ")"));
        issued += o.issued;
    }
    std::ostringstream detail;
    detail << issued << " chains issued and verified twice across " << report.outcomes.size()
           << " algorithms, " << report.rows.size() << " rows";
    return check.verdict(detail.str());
}

Verdict sign_time_ordering() {
    const auto slow = bench::measure_primitive("SPHINCS+-SHA2-192f-simple", 20);
    const auto small = bench::measure_primitive("SPHINCS+-SHA2-128f-simple", 20);
    const auto falcon = bench::measure_primitive("falcon512", 20);
    const auto dilithium = bench::measure_primitive("Dilithium2", 20);
    Checker check;
    check.expect(slow.sign_mean_ms >= 5 * falcon.sign_mean_ms, "192f vs falcon512");
    check.expect(slow.sign_mean_ms >= 5 * dilithium.sign_mean_ms, "192f vs Dilithium2");
    check.expect(slow.verify_mean_ms < slow.sign_mean_ms, "192f verify not below sign");
    check.expect(small.verify_mean_ms < small.sign_mean_ms, "128f verify not below sign");
    std::ostringstream detail;
    detail.precision(3);
    detail << "sign ms: 192f " << slow.sign_mean_ms << ", falcon512 " << falcon.sign_mean_ms << ", Dilithium2 "
           << dilithium.sign_mean_ms << "; verify ms: 192f " << slow.verify_mean_ms << ", 128f "
           << small.verify_mean_ms << " (sign " << small.sign_mean_ms << ")";
    return check.verdict(detail.str());
}

Verdict replay_defense() {
    LiveStack stack(rsa, [](service::ServiceConfig &c) {
        c.token_ttl = std::chrono::seconds{300};
        c.upload_window = std::chrono::seconds{3600};
    });
    Checker check;
    const auto d = download(stack, "alice", check);
    stack.clock->advance(std::chrono::seconds{301});
    auto reply = stack.to_ica("/certify/upload", {{"token", d.token}, {"certificate_pem", d.certificate_pem}});
    check.expect(reply.status == 401, "expired upload: " + status_of(reply));
    reply = stack.to_ica("/certify/download", {{"token", d.token}, {"csr_pem", csr_for("alice", cert::Role::end_entity)}});
    check.expect(reply.status == 401, "expired download: " + status_of(reply));

    const auto verify_token = stack.to_ica("/verify/login", identity("alice")).body.value("token", "");
    check.expect(!verify_token.empty(), "verify/login failed");
    reply = stack.to_ica("/certify/download",
                         {{"token", verify_token}, {"csr_pem", csr_for("alice", cert::Role::end_entity)}});
    check.expect(reply.status == 401, "verify token on download: " + status_of(reply));
    reply = stack.to_ica("/certify/upload", {{"token", verify_token}, {"certificate_pem", d.certificate_pem}});
    check.expect(reply.status == 401, "verify token on upload: " + status_of(reply));
    return check.verdict("expired certify token and verify token both get 401 on download and upload");
}

Verdict blacklisting() {
    LiveStack stack(rsa);
    Checker check;
    download(stack, "alice", check);
    auto bob = agent_for(stack, "bob");
    const auto bob_chain = bob.run_issuance();
    stack.clock->advance(stack.ica->config().upload_window + std::chrono::seconds{1});
    const auto swept = stack.ica->sweep();
    const bool alice_listed = stack.ica->store().get_entity("alice")->status == store::EntityStatus::blacklisted;
    check.expect(alice_listed, "alice not blacklisted");
    check.expect(std::find(swept.begin(), swept.end(), "bob") == swept.end(), "bob swept");

    for (const char *path : {"/enroll", "/certify/login", "/verify/login"}) {
        const auto reply = stack.to_ica(path, std::string(path) == "/enroll" ? enrollment("alice") : identity("alice"));
        check.expect(reply.status == 403, std::string("alice ") + path + ": " + status_of(reply));
    }
    check.expect(stack.to_ica("/certify/login", identity("bob")).ok(), "bob certify/login refused");
    check.expect(bob.run_verify(bob_chain.chain_pem).valid, "bob's chain no longer verifies");
    auto carol = agent_for(stack, "carol");
    check.expect(carol.run_issuance().chain.size() == 3, "carol issuance");
    return check.verdict("alice refused with 403 on enroll and both logins; bob and carol unaffected");
}

Verdict root_access_control() {
    LiveStack stack(rsa);
    Checker check;
    auto &root_store = stack.root->store();
    const auto entities = root_store.list_entities().size();
    const auto certificates = root_store.list_certificates().size();
    const auto tokens = root_store.token_count();
    const auto anchors = root_store.list_anchors().size();

    for (const char *id : {"mallory", "ee-9"}) {
        auto reply = stack.to_root("/enroll", enrollment(id));
        check.expect(reply.status == 403, std::string(id) + " /enroll: " + status_of(reply));
        reply = stack.to_root("/certify/login", identity(id));
        check.expect(reply.status == 403, std::string(id) + " /certify/login: " + status_of(reply));
        reply = stack.to_root("/certify/download",
                              {{"token", "forged-" + std::string(id)}, {"csr_pem", csr_for(id, cert::Role::intermediate)}});
        check.expect(reply.status == 403, std::string(id) + " /certify/download: " + status_of(reply));
        reply = stack.to_root("/certify/upload", {{"token", "forged-" + std::string(id)}, {"certificate_pem", "x"}});
        check.expect(reply.status == 403, std::string(id) + " /certify/upload: " + status_of(reply));
    }
    check.expect(root_store.list_entities().size() == entities, "entity rows changed");
    check.expect(root_store.list_certificates().size() == certificates, "certificate rows changed");
    check.expect(root_store.token_count() == tokens, "token rows changed");
    check.expect(root_store.list_anchors().size() == anchors, "anchor rows changed");
    check.expect(!root_store.get_entity("mallory") && !root_store.get_entity("ee-9"), "entity created");
    return check.verdict("8 requests refused with 403, root store unchanged");
}

Verdict crypto_agility() {
    LiveStack stack(rsa);
    Checker check;
    auto alice = agent_for(stack, "alice");
    const auto before = alice.run_issuance();
    check.expect(before.chain[1].signature_algorithm == rsa, "initial ICA certificate not rsa-signed");
    const int root_port = stack.root_host->port();

    auto reply = service::post_json(stack.root_host->admin_address(), "/admin/set-algorithm", {{"name", "Dilithium3"}},
                                    std::chrono::seconds{60}, "root-admin");
    check.expect(reply.ok(), "admin set-algorithm: " + status_of(reply));
    reply = service::post_json(stack.ica_host->admin_address(), "/admin/recertify", Json::object(),
                               std::chrono::seconds{60}, "ica-admin");
    check.expect(reply.ok(), "ICA re-certification: " + status_of(reply));
    check.expect(stack.root_host->port() == root_port, "root restarted");

    const auto ica_cert = stack.ica->current_identity().certificate;
    check.expect(ica_cert.signature_algorithm == "Dilithium3", "new ICA certificate signed with " +
                                                                   ica_cert.signature_algorithm);
    auto bob = agent_for(stack, "bob");
    const auto after = bob.run_issuance();
    check.expect(after.chain[1].signature_algorithm == "Dilithium3", "bob's ICA link not Dilithium3");
    check.expect(alice.run_verify(before.chain_pem).valid, "pre-switch chain rejected by /verify/check");
    check.expect(bob.run_verify(after.chain_pem).valid, "post-switch chain rejected by /verify/check");

    // The root still accepts the intermediate's old certificate too.
    const auto token = stack.to_root("/verify/login", {{"entity_id", "ica-1"}, {"credentials", "ica-1-secret"}})
                           .body.value("token", "");
    const std::vector<std::string> old_link(before.chain_pem.begin() + 1, before.chain_pem.end());
    reply = stack.to_root("/verify/check", {{"token", token}, {"chain_pem", old_link}});
    check.expect(reply.ok() && reply.body.value("valid", false), "root rejects old ICA chain: " + reply.body.dump());
    return check.verdict("switched to Dilithium3 live; old and new chains both verify");
}

Verdict mixed_chain_matrix() {
    std::vector<std::string> names;
    for (const auto &spec : crypto::list_algorithms()) {
        names.push_back(spec.name);
    }
    std::map<std::string, crypto::KeyPair> root_keys, ica_keys;
    for (const auto &name : names) {
        root_keys.emplace(name, crypto::generate_keypair(name));
        ica_keys.emplace(name, crypto::generate_keypair(name));
    }
    const auto ee_key = crypto::generate_keypair(rsa);
    const auto now = system_clock()->now();
    std::mt19937_64 rng(20261015);

    Checker check;
    std::size_t pairs = 0, tampers = 0;
    std::uint64_t serial = 1;
    for (const auto &root_alg : names) {
        const auto root = cert::self_signed_root({"root-" + root_alg, "acme", cert::Role::root}, root_keys.at(root_alg),
                                                 cert::Validity::starting_at(now, cert::default_validity::root));
        for (const auto &ica_alg : names) {
            const auto ica = cert::issue_certificate(
                root, root_keys.at(root_alg), cert::build_csr({"ica", "acme", cert::Role::intermediate}, ica_keys.at(ica_alg)),
                cert::Validity::starting_at(now, cert::default_validity::intermediate), ++serial, {});
            const auto ee = cert::issue_certificate(
                ica, ica_keys.at(ica_alg), cert::build_csr({"ee", "acme", cert::Role::end_entity}, ee_key),
                cert::Validity::starting_at(now, cert::default_validity::end_entity), ++serial, {});
            const cert::CertificateChain chain{ee, ica, root};
            const cert::CertificateChain anchors{root};
            const auto report = cert::verify_chain(chain, anchors, now);
            check.expect(report.valid(), root_alg + "/" + ica_alg + ": " + report.reason());
            ++pairs;

            for (std::size_t member = 0; member < chain.size(); ++member) {
                auto der = cert::encode(chain[member]);
                std::uniform_int_distribution<std::size_t> at(0, der.size() - 1);
                std::uniform_int_distribution<int> flip(1, 255);
                der[at(rng)] ^= static_cast<std::uint8_t>(flip(rng));
                ++tampers;
                cert::Certificate tampered;
                try {
                    tampered = cert::decode_certificate(der);
                } catch (const cert::cert_error &) {
                    continue;  // rejected at decoding
                }
                auto copy = chain;
                copy[member] = tampered;
                check.expect(!cert::verify_chain(copy, anchors, now).valid(),
                             root_alg + "/" + ica_alg + ": tampered member " + std::to_string(member) + " accepted");
            }
        }
    }
    check.expect(pairs == 64, "ran " + std::to_string(pairs) + " pairs");
    return check.verdict(std::to_string(pairs) + " pairs verify, " + std::to_string(tampers) +
                         " single-byte tampers rejected");
}

Verdict concurrency_soundness() {
    bench::ExperimentPlan plan = bench::ExperimentPlan::defaults(1);
    plan.algorithms = {"falcon512"};
    plan.icas = 1;
    plan.client_counts = {100};
    plan.repetitions = 1;
    const auto report = bench::run_experiment(plan, &std::cerr);
    Checker check;
    if (report.outcomes.size() != 1) {
        return {false, "no outcome"};
    }
    const auto &o = report.outcomes.front();
    check.expect(o.issued == 100, "issued " + std::to_string(o.issued));
    check.expect(o.distinct_serials == 100, "distinct serials " + std::to_string(o.distinct_serials));
    check.expect(o.verified_locally == 100 && o.verified_remotely == 100,
                 "verified " + std::to_string(o.verified_locally) + "/" + std::to_string(o.verified_remotely));
    check.expect(o.server_errors == 0, std::to_string(o.server_errors) + " server errors");
    check.expect(o.concurrency_ok(), "peak in flight " + std::to_string(o.peak_in_flight));
    return check.verdict("100 distinct serials, 100 verified chains, 0 server errors, peak " +
                         std::to_string(o.peak_in_flight) + " in flight");
}

}  // namespace

int main(int argc, char **argv) {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"published key and signature sizes", published_sizes},
        {"set 1: PQC root, two rsa intermediates, 25 clients each", [] { return experiment_set(1, 2, 25); }},
        {"set 2: PQC root and intermediate, 50 clients", [] { return experiment_set(2, 1, 50); }},
        {"SPHINCS+ signing cost ordering", sign_time_ordering},
        {"expired and wrong-scope tokens refused", replay_defense},
        {"blacklisting after the upload window", blacklisting},
        {"root refuses identities outside the allowlist", root_access_control},
        {"runtime switch to Dilithium3", crypto_agility},
        {"64 mixed chains verify, tampering rejected", mixed_chain_matrix},
        {"100 concurrent clients against one intermediate", concurrency_soundness},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.insert(std::atoi(argv[i]));
    }

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int number = static_cast<int>(i + 1);
        if (!selected.empty() && !selected.count(number)) {
            continue;
        }
        const auto started = std::chrono::steady_clock::now();
        Verdict verdict;
        try {
            verdict = criteria[i].second();
        } catch (const std::exception &e) {
            verdict = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        failed += !verdict.pass;
        std::printf("%s criterion %2d: %s: %s (%.1f s)\n", verdict.pass ? "PASS" : "FAIL", number,
                    criteria[i].first.c_str(), verdict.detail.c_str(), seconds);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
