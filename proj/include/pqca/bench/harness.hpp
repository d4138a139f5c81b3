#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace pqca::bench {

// ica_* and client_* are wall-clock at the side that sends the request;
// root_* time the root's signature operation alone.
enum class Operation { ica_download, ica_upload, ica_verify, client_download, client_upload, root_sign, root_verify };

inline constexpr std::array<Operation, 7> all_operations{
    Operation::ica_download,  Operation::ica_upload, Operation::ica_verify, Operation::client_download,
    Operation::client_upload, Operation::root_sign,  Operation::root_verify};

std::string_view to_string(Operation op) noexcept;

/// What to run. Set 1 puts the algorithm under test at the root only, with
/// the intermediates on the classical baseline; set 2 uses it at both levels.
struct ExperimentPlan {
    int experiment_set = 1;
    std::vector<std::string> algorithms;
    std::vector<int> client_counts;  // per intermediate
    int icas = 2;
    int repetitions = 3;
    std::size_t worker_threads = 8;

    /// Set 1: two intermediates, 25 and 50 clients each. Set 2: one
    /// intermediate, 50 and 100 clients. `full` gives the long sweep
    /// (25..500 per intermediate, 50..1000 total). All seven PQC algorithms.
    static ExperimentPlan defaults(int experiment_set, bool full = false);
    /// Throws std::invalid_argument.
    void validate() const;
    [[nodiscard]] std::string ica_algorithm(const std::string &algorithm) const;
};

struct TimingRow {
    int experiment_set = 0;
    std::string algorithm;
    int client_count = 0;
    Operation operation = Operation::ica_download;
    double mean_ms = 0;
    double stddev_ms = 0;
    std::size_t samples = 0;
};

/// Correctness side of one (algorithm, client count) run.
struct RunOutcome {
    std::string algorithm;
    int client_count = 0;
    std::size_t attempted = 0;
    std::size_t issued = 0;
    std::size_t verified_locally = 0;
    std::size_t verified_remotely = 0;
    std::size_t server_errors = 0;  // 5xx or no response
    std::size_t distinct_serials = 0;
    std::size_t peak_in_flight = 0;
    std::size_t worker_limit = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool all_succeeded() const noexcept {
        return attempted > 0 && issued == attempted && verified_locally == attempted && verified_remotely == attempted;
    }
    /// Enough requests were in flight at once to occupy every worker.
    [[nodiscard]] bool concurrency_ok() const noexcept {
        return peak_in_flight >= std::min<std::size_t>(static_cast<std::size_t>(client_count), worker_limit);
    }
};

struct TimingReport {
    std::vector<TimingRow> rows;
    std::vector<RunOutcome> outcomes;

    static constexpr const char *csv_header =
        "experiment_set,algorithm,client_count,operation,mean_ms,stddev_ms,samples";

    void write_csv(std::ostream &out) const;
    void write_csv(const std::filesystem::path &path) const;
    [[nodiscard]] std::string summary() const;
    /// Grouped bar chart of mean latency per operation and algorithm, one
    /// panel per client count.
    void write_plot_svg(const std::filesystem::path &path) const;
    [[nodiscard]] const TimingRow *find(const std::string &algorithm, int client_count, Operation op) const;
};

/// Runs every (algorithm, client count) pair of the plan against a fresh
/// in-process root and intermediates on loopback HTTP. Progress lines go to
/// `log` if given. Failed issuances are counted in the outcome, never dropped.
TimingReport run_experiment(const ExperimentPlan &plan, std::ostream *log = nullptr);

struct PrimitiveTiming {
    std::string algorithm;
    std::size_t repetitions = 0;
    double keygen_mean_ms = 0;
    double sign_mean_ms = 0;
    double sign_stddev_ms = 0;
    double verify_mean_ms = 0;
    double verify_stddev_ms = 0;
    std::size_t public_key_bytes = 0;
    std::size_t secret_key_bytes = 0;
    std::size_t signature_bytes = 0;  // largest seen
};

/// Times keygen, sign and verify directly on the provider, over the body of
/// a certificate carrying the generated key. Throws std::invalid_argument if
/// repetitions is 0, crypto::unknown_algorithm for unregistered names.
PrimitiveTiming measure_primitive(const std::string &algorithm, std::size_t repetitions);

struct Stats {
    double mean = 0;
    double stddev = 0;
    std::size_t n = 0;
};
/// Mean and sample standard deviation (0 for fewer than two samples).
Stats summarize(const std::vector<double> &samples);

}  // namespace pqca::bench
