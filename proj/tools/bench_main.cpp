// Drives the two experiment sets and writes the timing report.

#include "pqca/bench/harness.hpp"
#include "pqca/crypto/algorithm.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace pqca;

namespace {

std::vector<std::string> expand(const std::vector<std::string> &names) {
    if (names.empty() || (names.size() == 1 && names[0] == "all")) {
        std::vector<std::string> all;
        for (const auto &spec : crypto::list_algorithms()) {
            if (spec.is_post_quantum()) {
                all.push_back(spec.name);
            }
        }
        return all;
    }
    return names;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"PKI latency benchmark"};
    app.require_subcommand(1);

    int set = 1;
    int icas = 0;
    int repetitions = 3;
    std::size_t workers = 8;
    std::size_t primitive_reps = 50;
    std::vector<std::string> algorithms;
    std::vector<int> clients;
    std::string out = "report.csv";
    bool plot = false;
    bool full = false;

    auto *run = app.add_subcommand("run", "Run an experiment set");
    run->add_option("--set", set, "1: PQC at the root only, 2: PQC at root and intermediates")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    run->add_option("--algs", algorithms, "Comma-separated algorithms, or all")->delimiter(',');
    run->add_option("--clients", clients, "Comma-separated clients per intermediate")->delimiter(',');
    run->add_option("--icas", icas, "Number of intermediates (default 2 for set 1, 1 for set 2)");
    run->add_option("--repetitions", repetitions, "Measured rounds per configuration")->capture_default_str();
    run->add_option("--workers", workers, "Handler threads per service")->capture_default_str();
    run->add_option("--out", out, "CSV report path")->capture_default_str();
    run->add_flag("--plot", plot, "Also write an SVG bar chart next to the report");
    run->add_flag("--full", full, "Default to the full client sweep instead of the short one");

    auto *primitives = app.add_subcommand("primitives", "Time bare keygen/sign/verify");
    primitives->add_option("--algs", algorithms, "Comma-separated algorithms, or all")->delimiter(',');
    primitives->add_option("--reps", primitive_reps, "Repetitions")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*primitives) {
            std::cout << "algorithm,keygen_ms,sign_ms,verify_ms,public_key_bytes,secret_key_bytes,signature_bytes\n";
            for (const auto &name : expand(algorithms)) {
                const auto t = bench::measure_primitive(name, primitive_reps);
                std::cout << name << "," << t.keygen_mean_ms << "," << t.sign_mean_ms << "," << t.verify_mean_ms
                          << "," << t.public_key_bytes << "," << t.secret_key_bytes << "," << t.signature_bytes
                          << "\n";
            }
            return 0;
        }

        auto plan = bench::ExperimentPlan::defaults(set, full);
        plan.algorithms = expand(algorithms);
        if (run->count("--clients")) {
            plan.client_counts = clients;
        }
        if (icas > 0) {
            plan.icas = icas;
        }
        plan.repetitions = repetitions;
        plan.worker_threads = workers;

        const auto report = bench::run_experiment(plan, &std::cerr);
        report.write_csv(out);
        std::cout << report.summary();
        std::cout << "report written to " << out << std::endl;
        if (plot) {
            std::filesystem::path svg(out);
            svg.replace_extension(".svg");
            report.write_plot_svg(svg);
            std::cout << "plot written to " << svg.string() << std::endl;
        }
        for (const auto &o : report.outcomes) {
            if (!o.all_succeeded()) {
                return 1;
            }
        }
        return 0;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
}
