#include "pqca/bench/harness.hpp"
#include "pqca/crypto/algorithm.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace pqca::bench {
namespace {

TEST(BenchHarnessTest, OperationNames) {
    std::vector<std::string> names;
    for (auto op : all_operations) {
        names.emplace_back(to_string(op));
    }
    EXPECT_EQ(names, (std::vector<std::string>{"ica_download", "ica_upload", "ica_verify", "client_download",
                                               "client_upload", "root_sign", "root_verify"}));
}

TEST(BenchHarnessTest, DefaultPlans) {
    const auto one = ExperimentPlan::defaults(1);
    EXPECT_EQ(one.icas, 2);
    EXPECT_EQ(one.client_counts, (std::vector<int>{25, 50}));
    EXPECT_EQ(one.algorithms.size(), 7u);
    EXPECT_EQ(one.ica_algorithm("falcon512"), "rsa2048-sha256");
    EXPECT_EQ(one.repetitions, 3);

    const auto two = ExperimentPlan::defaults(2, true);
    EXPECT_EQ(two.icas, 1);
    EXPECT_EQ(two.client_counts, (std::vector<int>{50, 100, 200, 500, 1000}));
    EXPECT_EQ(two.ica_algorithm("falcon512"), "falcon512");
    EXPECT_EQ(ExperimentPlan::defaults(1, true).client_counts, (std::vector<int>{25, 50, 100, 250, 500}));
}

TEST(BenchHarnessTest, PlanValidation) {
    auto plan = ExperimentPlan::defaults(1);
    plan.experiment_set = 3;
    EXPECT_THROW(plan.validate(), std::invalid_argument);
    plan = ExperimentPlan::defaults(1);
    plan.algorithms = {"rot13"};
    EXPECT_THROW(plan.validate(), crypto::unknown_algorithm);
    plan = ExperimentPlan::defaults(1);
    plan.client_counts = {0};
    EXPECT_THROW(plan.validate(), std::invalid_argument);
    plan = ExperimentPlan::defaults(1);
    plan.repetitions = 0;
    EXPECT_THROW(plan.validate(), std::invalid_argument);
}

TEST(BenchHarnessTest, EmptyClientCountsGiveEmptyReport) {
    auto plan = ExperimentPlan::defaults(1);
    plan.client_counts.clear();
    const auto report = run_experiment(plan);
    EXPECT_TRUE(report.rows.empty());
    EXPECT_TRUE(report.outcomes.empty());
    std::ostringstream csv;
    report.write_csv(csv);
    EXPECT_EQ(csv.str(), std::string(TimingReport::csv_header) + "\n");
}

TEST(BenchHarnessTest, SmallRunFillsEveryRow) {
    ExperimentPlan plan;
    plan.experiment_set = 2;
    plan.algorithms = {"falcon512", "Dilithium2"};
    plan.client_counts = {3, 5};
    plan.icas = 1;
    plan.repetitions = 2;
    plan.worker_threads = 2;
    const auto report = run_experiment(plan);
    ASSERT_EQ(report.rows.size(), 2u * 2u * 7u);
    for (const auto &row : report.rows) {
        EXPECT_GT(row.samples, 0u) << row.algorithm << " " << to_string(row.operation);
        EXPECT_GE(row.mean_ms, 0.0);
        EXPECT_GE(row.stddev_ms, 0.0);
    }
    ASSERT_EQ(report.outcomes.size(), 4u);
    for (const auto &o : report.outcomes) {
        EXPECT_TRUE(o.all_succeeded()) << report.summary();
        EXPECT_EQ(o.attempted, static_cast<std::size_t>(o.client_count * plan.repetitions));
        EXPECT_EQ(o.distinct_serials, o.attempted);
        EXPECT_EQ(o.server_errors, 0u);
        EXPECT_TRUE(o.concurrency_ok()) << o.peak_in_flight;
    }
    // Conservation: one client_download sample per successful client.
    const auto *row = report.find("falcon512", 5, Operation::client_download);
    ASSERT_NE(row, nullptr);
    EXPECT_EQ(row->samples, 10u);
    row = report.find("Dilithium2", 3, Operation::root_sign);
    ASSERT_NE(row, nullptr);
    EXPECT_EQ(row->samples, 2u);  // one re-certification per repetition
}

TEST(BenchHarnessTest, CsvAndPlot) {
    TimingReport report;
    report.rows.push_back({1, "falcon512", 25, Operation::root_sign, 1.5, 0.25, 4});
    report.rows.push_back({1, "SPHINCS+-SHA2-192f-simple", 25, Operation::root_sign, 60, 2, 4});
    std::ostringstream csv;
    report.write_csv(csv);
    EXPECT_EQ(csv.str(),
              "experiment_set,algorithm,client_count,operation,mean_ms,stddev_ms,samples\n"
              "1,falcon512,25,root_sign,1.5000,0.2500,4\n"
              "1,SPHINCS+-SHA2-192f-simple,25,root_sign,60.0000,2.0000,4\n");

    const auto svg = std::filesystem::temp_directory_path() / "pqca-bench-plot.svg";
    report.write_plot_svg(svg);
    std::ifstream in(svg);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_NE(text.str().find("<svg"), std::string::npos);
    EXPECT_NE(text.str().find("SPHINCS+-SHA2-192f-simple"), std::string::npos);
    std::filesystem::remove(svg);
}

TEST(BenchHarnessTest, Summarize) {
    EXPECT_EQ(summarize({}).n, 0u);
    const auto one = summarize({4.0});
    EXPECT_DOUBLE_EQ(one.mean, 4.0);
    EXPECT_DOUBLE_EQ(one.stddev, 0.0);
    const auto s = summarize({2, 4, 4, 4, 5, 5, 7, 9});
    EXPECT_DOUBLE_EQ(s.mean, 5.0);
    EXPECT_NEAR(s.stddev, 2.138089935, 1e-9);
}

TEST(BenchHarnessTest, MeasurePrimitiveErrors) {
    EXPECT_THROW(measure_primitive("Dilithium2", 0), std::invalid_argument);
    EXPECT_THROW(measure_primitive("dilithium2", 5), crypto::unknown_algorithm);
}

TEST(BenchHarnessTest, MeasurePrimitiveSizesMatchRegistry) {
    const auto t = measure_primitive("Dilithium2", 5);
    EXPECT_EQ(t.public_key_bytes, 1312u);
    EXPECT_EQ(t.secret_key_bytes, 2528u);
    EXPECT_EQ(t.signature_bytes, 2420u);
    EXPECT_GT(t.sign_mean_ms, 0.0);
    EXPECT_GT(t.verify_mean_ms, 0.0);
}

TEST(BenchHarnessTest, SphincsSignsSlowerThanItVerifies) {
    for (const char *name : {"SPHINCS+-SHA2-128f-simple", "SPHINCS+-SHA2-192f-simple"}) {
        const auto t = measure_primitive(name, 10);
        EXPECT_GT(t.sign_mean_ms, t.verify_mean_ms) << name;
    }
}

}  // namespace
}  // namespace pqca::bench
