// arbmatch command-line front end.
//
// Exit codes: 0 success, 1 violation or Fail, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "arbmatch/characterization.hpp"
#include "arbmatch/estimators.hpp"
#include "arbmatch/experiment.hpp"
#include "arbmatch/generators.hpp"
#include "arbmatch/lemma_check.hpp"
#include "arbmatch/matching.hpp"
#include "arbmatch/stream.hpp"
#include "json.hpp"

using namespace arbmatch;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

template <typename Enum>
Enum checked(std::optional<Enum> parsed, const std::string& what, const std::string& name) {
  if (!parsed) throw ConfigError("unknown " + what + " '" + name + "'");
  return *parsed;
}

struct GenerateArgs {
  std::string kind = "forests";
  std::size_t n = 100, k = 10, s = 5;
  unsigned c = 1;
  std::uint64_t seed = 1;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  GeneratorSpec spec;
  spec.kind = checked(parse_generator_kind(a.kind), "generator", a.kind);
  spec.n = a.n;
  spec.c = a.c;
  spec.k = a.k;
  spec.s = a.s;
  spec.seed_start = a.seed;
  write_output(a.out, serialize_graph(spec.generate(0)));
  return kOk;
}

struct OrderArgs {
  std::string graph;
  std::string policy = "random";
  std::uint64_t seed = 1;
  double delete_fraction = 0;
  std::string out;
};

int run_order(const OrderArgs& a) {
  const Graph g = parse_graph(read_file(a.graph));
  const EdgeStream s = a.delete_fraction > 0
                           ? generate_dynamic_stream(g, a.delete_fraction, a.seed)
                           : order_stream(g, checked(parse_ordering(a.policy), "ordering", a.policy), a.seed);
  write_output(a.out, serialize_stream(s));
  return kOk;
}

struct OracleArgs {
  std::string graph, stream;
  std::optional<std::size_t> mu;
  std::optional<double> alpha;
};

int run_oracle(const OracleArgs& a) {
  Graph g = [&] {
    if (!a.graph.empty()) return parse_graph(read_file(a.graph));
    if (!a.stream.empty()) return parse_stream(read_file(a.stream)).live_graph();
    throw ConfigError("oracle needs --graph or --stream");
  }();
  const unsigned c = g.c_declared().value_or(std::max(1u, degeneracy(g)));
  const std::size_t mu = a.mu.value_or(2 * c + 1);
  auto report = characterize(g, mu);

  nlohmann::ordered_json out;
  out["n"] = g.n();
  out["m"] = g.m();
  out["c"] = c;
  out["degeneracy"] = degeneracy(g);
  out["mu"] = mu;
  out["m_star"] = report.m_star;
  out["h_mu"] = report.h_mu;
  out["s_mu"] = report.s_mu;
  out["m_mu"] = report.m_mu;
  out["n_l"] = report.n_l;
  if (!a.stream.empty()) {
    const EdgeStream s = parse_stream(read_file(a.stream));
    const double alpha = a.alpha.value_or(6.0 * c);
    out["alpha"] = alpha;
    out["e_alpha"] = offline_alpha_good_set(s, alpha).size();
  }
  std::cout << out.dump(2) << '\n';
  return kOk;
}

struct EstimateArgs {
  std::string stream;
  std::string algorithm = "logspace";
  unsigned c = 1;
  std::optional<std::size_t> mu;
  std::optional<double> alpha, p;
  double epsilon = 0.5;
  std::uint64_t seed = 1;
  bool header = false;
};

int run_estimate(const EstimateArgs& a) {
  const EdgeStream s = parse_stream(read_file(a.stream));
  const auto kind = checked(parse_estimator_kind(a.algorithm), "estimator", a.algorithm);
  const std::size_t mu = a.mu.value_or(2 * a.c + 1);
  const auto start = std::chrono::steady_clock::now();
  Estimate e;
  switch (kind) {
    case EstimatorKind::Logspace:
      e = estimate_matching_logspace(s, a.c, a.epsilon, a.seed);
      break;
    case EstimatorKind::Alg4:
      e = alg4_estimate_e_alpha(s, a.alpha.value_or(6.0 * a.c), a.c, a.epsilon, a.seed);
      break;
    case EstimatorKind::Alg2:
      e = alg2_estimate(s, a.c, mu, a.epsilon, a.seed);
      break;
    case EstimatorKind::Alg1:
      e = alg1_estimate(s, VertexSampleParams{mu, a.p.value_or(1.0), a.c, a.epsilon}, a.seed);
      break;
    case EstimatorKind::Dynamic:
      e = dynamic_estimate(s, a.c, mu, a.epsilon, a.seed);
      break;
  }
  TrialRecord r;
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.seed = a.seed;
  r.value = e.value;
  r.fail = e.failed();
  r.space_peak = e.space_peak;
  r.m_star = maximum_matching_size(s.live_graph());
  if (r.value && r.m_star > 0) r.ratio = *r.value / static_cast<double>(r.m_star);
  if (a.header) write_csv_header(std::cout);
  write_csv_row(std::cout, r);
  return r.fail ? kViolation : kOk;
}

struct ExperimentArgs {
  std::string config, output;
  std::optional<std::size_t> workers;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  ExperimentConfig cfg = load_config(a.config);
  if (!a.output.empty()) cfg.output = a.output;
  if (a.workers) cfg.workers = *a.workers;
  cfg.validate();

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!cfg.output.empty() && cfg.output != "-") {
    file.open(cfg.output);
    if (!file) throw IoError("cannot write '" + cfg.output + "'");
    out = &file;
  }
  write_csv_header(*out);
  const auto records = run_experiment(cfg, [&](const TrialRecord& r) {
    write_csv_row(*out, r);
    out->flush();
  });
  if (!*out) throw IoError("write to '" + cfg.output + "' failed");

  const auto summary = summarize(cfg, records);
  std::cerr << "trials=" << summary.trials << " fails=" << summary.fails << " with_ratio=" << summary.with_ratio;
  if (summary.with_ratio > 0) {
    std::cerr << " ratio min=" << format_number(summary.min) << " median=" << format_number(summary.median)
              << " max=" << format_number(summary.max);
  }
  if (summary.lower_bound || summary.upper_bound) {
    std::cerr << " bounds=[" << (summary.lower_bound ? format_number(*summary.lower_bound) : "-") << ", "
              << (summary.upper_bound ? format_number(*summary.upper_bound) : "-")
              << "] success=" << format_number(summary.success_fraction);
  }
  std::cerr << '\n';
  return summary.fails > 0 ? kViolation : kOk;
}

struct LemmaArgs {
  std::string graph;
  std::size_t orderings = 20;
  std::optional<std::size_t> mu;
  std::uint64_t seed = 1;
};

int run_check_lemmas(const LemmaArgs& a) {
  const Graph g = parse_graph(read_file(a.graph));
  const Graph with_c = g.c_declared() ? g : g.with_arboricity(std::max(1u, degeneracy(g)));
  const unsigned c = *with_c.c_declared();
  const auto report = check_lemmas(with_c, a.orderings, a.mu.value_or(2 * c + 1), a.seed);
  std::cout << format_report(report);
  return report.passed() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching-size estimation for bounded-arboricity graph streams"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a graph file");
  generate->add_option("--kind", gen.kind, "forests | stars | tree | empty")->capture_default_str();
  generate->add_option("-n,--n", gen.n, "Vertex count (forests, tree, empty)")->capture_default_str();
  generate->add_option("-c,--c", gen.c, "Number of forests")->capture_default_str();
  generate->add_option("-k,--k", gen.k, "Number of stars")->capture_default_str();
  generate->add_option("-s,--s", gen.s, "Leaves per star")->capture_default_str();
  generate->add_option("--seed", gen.seed)->capture_default_str();
  generate->add_option("-o,--out", gen.out, "Output file (default stdout)");

  OrderArgs ord;
  auto* order = app.add_subcommand("order", "Turn a graph file into a stream file");
  order->add_option("graph", ord.graph, "Graph file")->required();
  order->add_option("--policy", ord.policy, "as-generated | random | star-by-star | leaves-last | centers-first")
      ->capture_default_str();
  order->add_option("--seed", ord.seed)->capture_default_str();
  order->add_option("--delete-fraction", ord.delete_fraction,
                    "Emit a dynamic stream with this share of inserted-then-deleted decoys")
      ->check(CLI::Range(0.0, 1.0));
  order->add_option("-o,--out", ord.out, "Output file (default stdout)");

  OracleArgs orc;
  auto* oracle = app.add_subcommand("oracle", "Exact characterization as JSON");
  oracle->add_option("--graph", orc.graph, "Graph file");
  oracle->add_option("--stream", orc.stream, "Stream file (adds the alpha-good edge count)");
  oracle->add_option("--mu", orc.mu, "Degree threshold (default 2c+1)");
  oracle->add_option("--alpha", orc.alpha, "Alpha-good threshold (default 6c)");

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "Run one estimator over a stream file");
  estimate->add_option("stream", est.stream, "Stream file")->required();
  estimate->add_option("-a,--algorithm", est.algorithm, "logspace | alg4 | alg2 | alg1 | dynamic")
      ->capture_default_str();
  estimate->add_option("-c,--c", est.c, "Arboricity bound")->capture_default_str();
  estimate->add_option("--mu", est.mu, "Degree threshold (default 2c+1)");
  estimate->add_option("--alpha", est.alpha, "Alpha-good threshold for alg4 (default 6c)");
  estimate->add_option("-p,--p", est.p, "Sampling probability for alg1 (default 1)");
  estimate->add_option("-e,--epsilon", est.epsilon)->capture_default_str();
  estimate->add_option("--seed", est.seed)->capture_default_str();
  estimate->add_flag("--header", est.header, "Print the CSV header first");

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "Run a config file, write CSV");
  experiment->add_option("config", exp.config, "key = value config file")->required();
  experiment->add_option("-o,--output", exp.output, "CSV path (overrides the config; '-' for stdout)");
  experiment->add_option("-j,--workers", exp.workers, "Worker threads");

  LemmaArgs lem;
  auto* lemmas = app.add_subcommand("check-lemmas", "Check the matching inequalities on a graph");
  lemmas->add_option("graph", lem.graph, "Graph file")->required();
  lemmas->add_option("--orderings", lem.orderings)->capture_default_str();
  lemmas->add_option("--mu", lem.mu, "Degree threshold (default 2c+1)");
  lemmas->add_option("--seed", lem.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*order) return run_order(ord);
    if (*oracle) return run_oracle(orc);
    if (*estimate) return run_estimate(est);
    if (*experiment) return run_experiment_cmd(exp);
    if (*lemmas) return run_check_lemmas(lem);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}
