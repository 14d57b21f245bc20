#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "arbmatch/experiment.hpp"
#include "arbmatch/generators.hpp"
#include "arbmatch/lemma_check.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arbmatch;

namespace {

std::string csv_without_time(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  write_csv_header(out);
  for (auto r : records) {
    r.ms = 0;
    write_csv_row(out, r);
  }
  return out.str();
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("parse key = value text") {
    const auto cfg = parse_config(
        "# stars\n"
        "generator = stars\n"
        "k=1000\n"
        "s = 5\n"
        "estimator = logspace\n"
        "epsilon = 0.1\n"
        "trials = 100   \n"
        "ordering = centers-first\n");
    CHECK(cfg.generator.kind == GeneratorKind::Stars);
    CHECK(cfg.generator.k == 1000);
    CHECK(cfg.estimator.kind == EstimatorKind::Logspace);
    CHECK(cfg.estimator.epsilon == 0.1);
    CHECK(cfg.trials == 100);
    CHECK(cfg.ordering == OrderingPolicy::CentersFirst);
    CHECK(cfg.mu() == 3);
    CHECK(cfg.alpha() == 6.0);
  }

  TEST_CASE("invalid combinations are rejected") {
    CHECK_THROWS_AS(parse_config("estimator = alg2\nc = 2\nmu = 4\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("trials = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("colour = red\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("epsilon = 1.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("n = ten\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("just words\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/dir/config.txt"), IoError);
  }
}

TEST_SUITE("experiment") {
  TEST_CASE("empty graph gives value 0 and no ratio") {
    ExperimentConfig cfg;
    cfg.generator.kind = GeneratorKind::Empty;
    cfg.generator.n = 10;
    const auto records = run_experiment(cfg);
    REQUIRE(records.size() == 1);
    CHECK(*records[0].value == 0.0);
    CHECK(records[0].m_star == 0);
    CHECK_FALSE(records[0].ratio.has_value());
    CHECK_FALSE(records[0].fail);
  }

  TEST_CASE("identical configs produce identical CSV, regardless of workers") {
    ExperimentConfig cfg = parse_config("generator = forests\nn = 300\nc = 2\nestimator = alg2\ntrials = 6\nseed = 5\n");
    const auto a = run_experiment(cfg);
    cfg.workers = 3;
    std::vector<std::uint64_t> streamed;
    const auto b = run_experiment(cfg, [&](const TrialRecord& r) { streamed.push_back(r.seed); });
    CHECK(csv_without_time(a) == csv_without_time(b));
    CHECK(streamed == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});
    for (const auto& r : a) {
      REQUIRE(r.ratio.has_value());
      CHECK(*r.ratio == doctest::Approx(*r.value / static_cast<double>(r.m_star)));
    }
  }

  TEST_CASE("every estimator kind runs") {
    for (const char* kind : {"logspace", "alg4", "alg2", "alg1", "dynamic"}) {
      CAPTURE(kind);
      ExperimentConfig cfg = parse_config(std::string("generator = forests\nn = 80\nc = 1\nestimator = ") + kind +
                                          "\ntrials = 2\ndelete_fraction = 0.3\np = 0.5\n");
      const auto records = run_experiment(cfg);
      CHECK(records.size() == 2);
      for (const auto& r : records) CHECK(r.space_peak > 0);
    }
  }

  TEST_CASE("logspace on star forests stays inside the ratio window") {
    ExperimentConfig cfg = parse_config("generator = stars\nk = 1000\ns = 5\nestimator = logspace\nepsilon = 0.1\ntrials = 10\n");
    const auto records = run_experiment(cfg);
    const auto summary = summarize(cfg, records);
    CHECK(summary.trials == 10);
    CHECK(summary.fails == 0);
    CHECK(summary.success_fraction == 1.0);
    for (const auto& r : records) {
      CHECK(*r.ratio >= 1.0);
      CHECK(*r.ratio <= 28.5 * 1.3);
    }
  }
}

TEST_SUITE("csv") {
  TEST_CASE("row format") {
    std::ostringstream out;
    TrialRecord r;
    r.seed = 1;
    r.value = 3;
    r.m_star = 1;
    r.ratio = 3;
    r.space_peak = 12;
    r.ms = 0.5;
    write_csv_row(out, r);
    CHECK(out.str() == "1,3,1,3.0,12,0,0.500\n");

    TrialRecord fail;
    fail.seed = 4;
    fail.m_star = 2;
    fail.fail = true;
    std::ostringstream out2;
    write_csv_row(out2, fail);
    CHECK(out2.str() == "4,,2,,0,1,0.000\n");
  }

  TEST_CASE("zero records give a header-only file, and files round-trip") {
    const std::string path = "arbmatch_test_records.csv";
    emit_csv({}, path);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == "seed,value,m_star,ratio,space_peak,fail,ms\n");
    CHECK(parse_csv(text.str()).empty());

    std::vector<TrialRecord> records(3);
    records[0] = {7, 2.5, 2, 1.25, 40, false, 1.25};
    records[1] = {8, std::nullopt, 3, std::nullopt, 10, true, 0.0};
    records[2] = {9, 0.0, 0, std::nullopt, 1, false, 3.0};
    emit_csv(records, path);
    std::ifstream again(path);
    std::stringstream text2;
    text2 << again.rdbuf();
    const auto back = parse_csv(text2.str());
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(back[i].seed == records[i].seed);
      CHECK(back[i].value == records[i].value);
      CHECK(back[i].m_star == records[i].m_star);
      CHECK(back[i].ratio == records[i].ratio);
      CHECK(back[i].space_peak == records[i].space_peak);
      CHECK(back[i].fail == records[i].fail);
      CHECK(back[i].ms == doctest::Approx(records[i].ms));
    }
    std::remove(path.c_str());
    CHECK_THROWS_AS(emit_csv({}, "/nonexistent/dir/out.csv"), IoError);
    CHECK_THROWS_AS(parse_csv("seed,value\n"), ParseError);
  }
}

TEST_SUITE("lemma checks") {
  TEST_CASE("random tree, 20 orderings") {
    const Graph t = generate_random_tree(50, 3);
    const auto report = check_lemmas(t, 20, 3, 1);
    CHECK(report.forest);
    CHECK(report.passed());
    bool saw_forest_check = false;
    for (const auto& c : report.checks) {
      if (c.name == "forest_sandwich") {
        saw_forest_check = true;
        CHECK(c.instances == 20);
      }
    }
    CHECK(saw_forest_check);
  }

  TEST_CASE("union of 3 forests with mu = 7") {
    const auto report = check_lemmas(generate_union_of_forests(100, 3, 2), 5, 7, 1);
    CHECK(report.passed());
    CHECK(report.c == 3);
    // alpha = max{6, 4*3*8/(8-6)} = 48
    CHECK(report.alpha() == 48.0);
  }

  TEST_CASE("star K_{1,5} with mu = 3") {
    const auto report = check_lemmas(oracle::star(5), 10, 3, 4);
    CHECK(report.passed());
    CHECK(report.first_violation() == nullptr);
    CHECK(report.alpha() == 8.0);  // max{2, 4*1*4/(4-2)}
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(check_lemmas(Graph(4, {}), 1, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_lemmas(oracle::star(3), 1, 2, 1), std::invalid_argument);
  }
}
