#include "pqca/bench/harness.hpp"

#include "pqca/cert/chain.hpp"
#include "pqca/client/agent.hpp"
#include "pqca/crypto/provider.hpp"
#include "pqca/service/host.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <latch>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace pqca::bench {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Client keys are not a measured quantity; a small pool keeps setup cheap.
constexpr std::size_t client_key_pool = 8;

struct Layer {
    std::shared_ptr<service::CaService> service;
    std::unique_ptr<service::ServiceHost> host;
};

Layer start_layer(service::ServiceConfig config) {
    Layer layer;
    config.listen = "127.0.0.1:0";
    layer.service = std::make_shared<service::CaService>(config, std::make_shared<store::Store>(":memory:"),
                                                         system_clock());
    layer.host = std::make_unique<service::ServiceHost>(layer.service);
    layer.host->start();
    return layer;
}

struct ClientResult {
    bool issued = false;
    bool verified_locally = false;
    bool verified_remotely = false;
    bool server_error = false;
    std::uint64_t serial = 0;
    std::optional<double> download_ms;
    std::optional<double> upload_ms;
    std::string failure;
};

ClientResult run_client(const std::string &id, const crypto::KeyPair &key, const service::Address &ica,
                        const std::vector<cert::Certificate> &anchors) {
    ClientResult result;
    client::ClientProfile profile;
    profile.entity_id = id;
    profile.credentials = id + "-pw";
    profile.key_algorithm = key.algorithm;
    profile.ica_address = ica;
    profile.key = key;
    try {
        client::ClientAgent agent(profile);
        const auto issued = agent.run_issuance();
        result.issued = true;
        result.serial = issued.certificate.serial;
        for (const auto &t : issued.timings) {
            if (t.step == client::Step::certify_download) {
                result.download_ms = t.ms;
            } else if (t.step == client::Step::certify_upload) {
                result.upload_ms = t.ms;
            }
        }
        const auto report = cert::verify_chain(issued.chain, anchors, system_clock()->now());
        result.verified_locally = report.valid();
        if (!report.valid()) {
            result.failure = id + ": local verify: " + report.reason();
        }
        const auto remote = agent.run_verify(issued.chain_pem);
        result.verified_remotely = remote.valid;
        if (!remote.valid) {
            result.failure = id + ": verify/check: " + remote.reason;
        }
    } catch (const client::agent_error &e) {
        result.server_error = e.status() == 0 || e.status() >= 500;
        result.failure = id + ": " + e.what();
    } catch (const std::exception &e) {
        result.failure = id + ": " + e.what();
    }
    return result;
}

std::string svg_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(Operation op) noexcept {
    switch (op) {
    case Operation::ica_download: return service::op::ica_download;
    case Operation::ica_upload: return service::op::ica_upload;
    case Operation::ica_verify: return service::op::ica_verify;
    case Operation::client_download: return "client_download";
    case Operation::client_upload: return "client_upload";
    case Operation::root_sign: return service::op::root_sign;
    case Operation::root_verify: return service::op::root_verify;
    }
    return "?";
}

ExperimentPlan ExperimentPlan::defaults(int experiment_set, bool full) {
    ExperimentPlan plan;
    plan.experiment_set = experiment_set;
    for (const auto &spec : crypto::list_algorithms()) {
        if (spec.is_post_quantum()) {
            plan.algorithms.push_back(spec.name);
        }
    }
    plan.icas = experiment_set == 2 ? 1 : 2;
    if (experiment_set == 2) {
        plan.client_counts = full ? std::vector<int>{50, 100, 200, 500, 1000} : std::vector<int>{50, 100};
    } else {
        plan.client_counts = full ? std::vector<int>{25, 50, 100, 250, 500} : std::vector<int>{25, 50};
    }
    return plan;
}

void ExperimentPlan::validate() const {
    if (experiment_set != 1 && experiment_set != 2) {
        throw std::invalid_argument("experiment set must be 1 or 2");
    }
    for (const auto &name : algorithms) {
        crypto::algorithm_info(name);
    }
    if (std::any_of(client_counts.begin(), client_counts.end(), [](int n) { return n <= 0; })) {
        throw std::invalid_argument("client counts must be positive");
    }
    if (icas <= 0) {
        throw std::invalid_argument("need at least one intermediate");
    }
    if (repetitions <= 0) {
        throw std::invalid_argument("repetitions must be positive");
    }
    if (worker_threads == 0) {
        throw std::invalid_argument("worker_threads must be positive");
    }
}

std::string ExperimentPlan::ica_algorithm(const std::string &algorithm) const {
    return experiment_set == 1 ? std::string(crypto::classical_baseline) : algorithm;
}

Stats summarize(const std::vector<double> &samples) {
    Stats stats;
    stats.n = samples.size();
    if (samples.empty()) {
        return stats;
    }
    stats.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
    if (samples.size() > 1) {
        double sq = 0;
        for (double s : samples) {
            sq += (s - stats.mean) * (s - stats.mean);
        }
        stats.stddev = std::sqrt(sq / static_cast<double>(samples.size() - 1));
    }
    return stats;
}

TimingReport run_experiment(const ExperimentPlan &plan, std::ostream *log) {
    plan.validate();
    TimingReport report;
    if (plan.algorithms.empty() || plan.client_counts.empty()) {
        return report;
    }
    std::vector<crypto::KeyPair> keys;
    for (std::size_t i = 0; i < client_key_pool; ++i) {
        keys.push_back(crypto::generate_keypair(std::string(crypto::classical_baseline)));
    }

    for (const auto &algorithm : plan.algorithms) {
        for (const int clients : plan.client_counts) {
            if (log) {
                *log << "set " << plan.experiment_set << " " << algorithm << " clients=" << clients << "\n"
                     << std::flush;
            }
            service::ServiceConfig root_config;
            root_config.role = service::ServiceRole::root;
            root_config.signing_algorithm = algorithm;
            root_config.worker_threads = plan.worker_threads;
            auto root = start_layer(root_config);

            std::vector<Layer> icas;
            for (int i = 0; i < plan.icas; ++i) {
                service::ServiceConfig config;
                config.role = service::ServiceRole::intermediate;
                config.entity_id = "ica-" + std::to_string(i + 1);
                config.credentials = config.entity_id + "-secret";
                config.common_name = config.entity_id;
                config.upstream = root.host->address().to_string();
                config.signing_algorithm = plan.ica_algorithm(algorithm);
                config.worker_threads = plan.worker_threads;
                root.service->register_ica(config.entity_id, config.credentials);
                icas.push_back(start_layer(config));
            }

            // Warmup: certify every intermediate and issue once, untimed.
            for (auto &ica : icas) {
                run_client("warmup", keys[0], ica.host->address(), root.service->trust_anchors());
            }
            root.service->metrics().clear();
            for (auto &ica : icas) {
                ica.service->metrics().clear();
            }

            RunOutcome outcome;
            outcome.algorithm = algorithm;
            outcome.client_count = clients;
            outcome.worker_limit = plan.worker_threads;
            std::set<std::pair<std::string, std::uint64_t>> serials;
            std::map<std::string, std::vector<double>> samples;

            for (int rep = 0; rep < plan.repetitions; ++rep) {
                for (auto &ica : icas) {
                    ica.service->recertify();
                    ica.host->gauge().reset_peak();
                }
                const auto anchors = root.service->trust_anchors();
                const std::size_t total = static_cast<std::size_t>(clients) * icas.size();
                std::vector<ClientResult> results(total);
                std::vector<std::thread> threads;
                std::latch start(static_cast<std::ptrdiff_t>(total) + 1);
                for (std::size_t i = 0; i < total; ++i) {
                    const auto &ica = icas[i % icas.size()];
                    const auto address = ica.host->address();
                    threads.emplace_back([&, i, address] {
                        const auto id = "client-" + std::to_string(rep) + "-" + std::to_string(i);
                        start.arrive_and_wait();
                        results[i] = run_client(id, keys[i % keys.size()], address, anchors);
                    });
                }
                const auto started = Clock::now();
                start.arrive_and_wait();
                for (auto &t : threads) {
                    t.join();
                }
                for (std::size_t i = 0; i < total; ++i) {
                    const auto &r = results[i];
                    ++outcome.attempted;
                    outcome.issued += r.issued;
                    outcome.verified_locally += r.verified_locally;
                    outcome.verified_remotely += r.verified_remotely;
                    outcome.server_errors += r.server_error;
                    if (r.issued) {
                        serials.emplace(icas[i % icas.size()].service->config().entity_id, r.serial);
                    }
                    if (r.download_ms) {
                        samples["client_download"].push_back(*r.download_ms);
                    }
                    if (r.upload_ms) {
                        samples["client_upload"].push_back(*r.upload_ms);
                    }
                    if (!r.failure.empty() && outcome.failures.size() < 20) {
                        outcome.failures.push_back(r.failure);
                    }
                }
                for (auto &ica : icas) {
                    outcome.peak_in_flight = std::max(outcome.peak_in_flight, ica.host->gauge().peak());
                }
                if (log) {
                    *log << "  repetition " << rep + 1 << ": " << total << " clients in " << ms_since(started)
                         << " ms\n"
                         << std::flush;
                }
            }
            outcome.distinct_serials = serials.size();

            for (auto &[name, values] : root.service->metrics().snapshot()) {
                auto &into = samples[name];
                into.insert(into.end(), values.begin(), values.end());
            }
            for (auto &ica : icas) {
                for (auto &[name, values] : ica.service->metrics().snapshot()) {
                    auto &into = samples[name];
                    into.insert(into.end(), values.begin(), values.end());
                }
            }
            for (const auto op : all_operations) {
                const auto stats = summarize(samples[std::string(to_string(op))]);
                report.rows.push_back(
                    {plan.experiment_set, algorithm, clients, op, stats.mean, stats.stddev, stats.n});
            }
            report.outcomes.push_back(std::move(outcome));

            for (auto &ica : icas) {
                ica.host->stop();
            }
            root.host->stop();
        }
    }
    return report;
}

void TimingReport::write_csv(std::ostream &out) const {
    out << csv_header << "\n";
    for (const auto &row : rows) {
        char mean[32];
        char stddev[32];
        std::snprintf(mean, sizeof mean, "%.4f", row.mean_ms);
        std::snprintf(stddev, sizeof stddev, "%.4f", row.stddev_ms);
        out << row.experiment_set << "," << row.algorithm << "," << row.client_count << "," << to_string(row.operation)
            << "," << mean << "," << stddev << "," << row.samples << "\n";
    }
}

void TimingReport::write_csv(const std::filesystem::path &path) const {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_csv(out);
}

const TimingRow *TimingReport::find(const std::string &algorithm, int client_count, Operation op) const {
    for (const auto &row : rows) {
        if (row.algorithm == algorithm && row.client_count == client_count && row.operation == op) {
            return &row;
        }
    }
    return nullptr;
}

std::string TimingReport::summary() const {
    std::ostringstream out;
    for (const auto &o : outcomes) {
        out << o.algorithm << " clients=" << o.client_count << ": issued " << o.issued << "/" << o.attempted
            << ", verified locally " << o.verified_locally << ", verified by CA " << o.verified_remotely
            << ", server errors " << o.server_errors << ", distinct serials " << o.distinct_serials
            << ", peak in flight " << o.peak_in_flight << " (workers " << o.worker_limit << ")\n";
        for (const auto &f : o.failures) {
            out << "  " << f << "\n";
        }
    }
    return out.str();
}

void TimingReport::write_plot_svg(const std::filesystem::path &path) const {
    std::vector<std::string> algorithms;
    std::vector<int> counts;
    double max_ms = 0;
    for (const auto &row : rows) {
        if (std::find(algorithms.begin(), algorithms.end(), row.algorithm) == algorithms.end()) {
            algorithms.push_back(row.algorithm);
        }
        if (std::find(counts.begin(), counts.end(), row.client_count) == counts.end()) {
            counts.push_back(row.client_count);
        }
        max_ms = std::max(max_ms, row.mean_ms);
    }
    if (max_ms <= 0) {
        max_ms = 1;
    }
    static const char *palette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                    "#59a14f", "#edc948", "#b07aa1", "#9c755f"};
    const double bar = 10;
    const double group = bar * static_cast<double>(algorithms.size()) + 20;
    const double panel_w = 80 + group * all_operations.size();
    const double panel_h = 300;
    const double height = 40 + panel_h * static_cast<double>(counts.size()) + 20 * algorithms.size();

    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << panel_w + 200 << "\" height=\"" << height
        << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (std::size_t p = 0; p < counts.size(); ++p) {
        const double top = 30 + panel_h * static_cast<double>(p);
        const double base = top + panel_h - 60;
        out << "<text x=\"10\" y=\"" << top << "\">mean latency (ms, max " << max_ms << "), " << counts[p]
            << " clients per ICA</text>\n";
        out << "<line x1=\"60\" y1=\"" << base << "\" x2=\"" << panel_w << "\" y2=\"" << base
            << "\" stroke=\"black\"/>\n";
        for (std::size_t o = 0; o < all_operations.size(); ++o) {
            const double gx = 70 + group * static_cast<double>(o);
            out << "<text x=\"" << gx << "\" y=\"" << base + 15 << "\">" << to_string(all_operations[o])
                << "</text>\n";
            for (std::size_t a = 0; a < algorithms.size(); ++a) {
                const auto *row = find(algorithms[a], counts[p], all_operations[o]);
                if (!row) {
                    continue;
                }
                const double h = (panel_h - 100) * row->mean_ms / max_ms;
                out << "<rect x=\"" << gx + bar * static_cast<double>(a) << "\" y=\"" << base - h
                    << "\" width=\"" << bar - 1 << "\" height=\"" << h << "\" fill=\"" << palette[a % 8]
                    << "\"><title>" << svg_escape(algorithms[a]) << " " << to_string(all_operations[o]) << ": "
                    << row->mean_ms << " ms</title></rect>\n";
            }
        }
    }
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
        const double y = 40 + panel_h * static_cast<double>(counts.size()) + 20 * static_cast<double>(a) - 20;
        out << "<rect x=\"" << panel_w + 10 << "\" y=\"" << y - 10 << "\" width=\"10\" height=\"10\" fill=\""
            << palette[a % 8] << "\"/><text x=\"" << panel_w + 25 << "\" y=\"" << y << "\">"
            << svg_escape(algorithms[a]) << "</text>\n";
    }
    out << "</svg>\n";
}

PrimitiveTiming measure_primitive(const std::string &algorithm, std::size_t repetitions) {
    if (repetitions == 0) {
        throw std::invalid_argument("repetitions must be positive");
    }
    crypto::algorithm_info(algorithm);
    PrimitiveTiming timing;
    timing.algorithm = algorithm;
    timing.repetitions = repetitions;
    std::vector<double> keygen, sign, verify;
    for (std::size_t i = 0; i < repetitions; ++i) {
        auto start = Clock::now();
        const auto key = crypto::generate_keypair(algorithm);
        keygen.push_back(ms_since(start));

        cert::Certificate body;
        body.serial = i + 1;
        body.subject = {"bench-ica", "pqca", cert::Role::intermediate};
        body.issuer = {"bench-root", "pqca", cert::Role::root};
        body.subject_key_algorithm = algorithm;
        body.subject_public_key = key.public_key;
        body.signature_algorithm = algorithm;
        body.validity = cert::Validity::starting_at(from_unix(1'700'000'000), cert::default_validity::intermediate);
        const Bytes message = body.tbs();

        start = Clock::now();
        const auto signature = crypto::sign(algorithm, key.secret_key, message);
        sign.push_back(ms_since(start));
        timing.public_key_bytes = key.public_key.size();
        timing.secret_key_bytes = key.secret_key.size();
        timing.signature_bytes = std::max(timing.signature_bytes, signature.bytes.size());
        start = Clock::now();
        if (!crypto::verify(algorithm, key.public_key, message, signature)) {
            throw std::runtime_error(algorithm + ": signature failed to verify");
        }
        verify.push_back(ms_since(start));
    }
    timing.keygen_mean_ms = summarize(keygen).mean;
    const auto s = summarize(sign);
    const auto v = summarize(verify);
    timing.sign_mean_ms = s.mean;
    timing.sign_stddev_ms = s.stddev;
    timing.verify_mean_ms = v.mean;
    timing.verify_stddev_ms = v.stddev;
    return timing;
}

}  // namespace pqca::bench
