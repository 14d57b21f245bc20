#include "arbmatch/lemma_check.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "arbmatch/generators.hpp"
#include "arbmatch/random.hpp"

namespace arbmatch {

namespace {

class Tally {
 public:
  LemmaCheck& get(const std::string& name) {
    for (auto& c : checks_) {
      if (c.name == name) return c;
    }
    LemmaCheck fresh;
    fresh.name = name;
    checks_.push_back(std::move(fresh));
    return checks_.back();
  }

  void record(const std::string& name, bool ok, const std::string& witness) {
    auto& check = get(name);
    ++check.instances;
    if (ok) return;
    if (check.violations++ == 0) check.first_witness = witness;
  }

  std::vector<LemmaCheck> take() { return std::move(checks_); }

 private:
  std::vector<LemmaCheck> checks_;
};

std::string witness(const CharacterizationReport& r, std::size_t ordering, const std::string& extra) {
  std::ostringstream out;
  out << "M*=" << r.m_star << " h_mu=" << r.h_mu << " s_mu=" << r.s_mu << " M_mu=" << r.m_mu
      << " n_L=" << r.n_l << " mu=" << r.mu;
  if (ordering > 0) out << " ordering=" << ordering;
  if (!extra.empty()) out << ' ' << extra;
  return out.str();
}

}  // namespace

bool LemmaReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed(); });
}

const LemmaCheck* LemmaReport::first_violation() const {
  for (const auto& c : checks) {
    if (!c.passed()) return &c;
  }
  return nullptr;
}

LemmaReport check_lemmas(const Graph& g, std::size_t orderings, std::size_t mu, std::uint64_t seed) {
  if (!g.c_declared()) throw std::invalid_argument("check_lemmas: graph has no declared arboricity");
  const std::size_t c = *g.c_declared();
  if (mu <= 2 * c) throw std::invalid_argument("check_lemmas: mu must exceed 2c");

  LemmaReport report;
  report.c = static_cast<unsigned>(c);
  report.orderings = orderings;
  report.forest = is_forest(g);
  report.characterization = characterize(g, mu);
  const auto& r = report.characterization;
  Tally tally;

  const std::size_t slack = mu - 2 * c + 1;  // mu - 2c + 1 > 0
  tally.record("high_degree_bound", r.h_mu * slack <= 2 * mu * r.m_star, witness(r, 0, ""));
  tally.record("sandwich_lower", r.m_star <= r.h_mu + r.m_mu, witness(r, 0, ""));
  tally.record("sandwich_upper", (r.h_mu + r.m_mu) * slack <= (2 * mu + slack) * r.m_star, witness(r, 0, ""));

  // alpha = max{mu - 1, 4c(mu+1)/(mu+1-2c)}
  const std::size_t frac_num = 4 * c * (mu + 1);
  const std::size_t frac_den = mu + 1 - 2 * c;
  if ((mu - 1) * frac_den >= frac_num) {
    report.alpha_num = mu - 1;
    report.alpha_den = 1;
  } else {
    report.alpha_num = frac_num;
    report.alpha_den = frac_den;
  }
  report.characterization.alpha = report.alpha();
  // An edge's later-neighbor counts are integers, so floor(alpha) is the
  // effective threshold.
  const double alpha_floor = static_cast<double>(report.alpha_num / report.alpha_den);
  const std::size_t lower_coef = mu + 1 - 2 * c;  // 2(mu+1) * (1/2 - c/(mu+1))

  for (std::size_t k = 1; k <= orderings; ++k) {
    const EdgeStream stream = order_stream(g, OrderingPolicy::UniformRandom, split_seed(seed, k));
    const std::size_t e_alpha = offline_alpha_good_set(stream, alpha_floor).size();
    if (k == 1) report.characterization.e_alpha = e_alpha;
    const std::string ea = "|E_alpha|=" + std::to_string(e_alpha);

    tally.record("good_edges_lower", lower_coef * r.m_star <= 2 * (mu + 1) * e_alpha, witness(r, k, ea));
    tally.record("good_edges_shallow", lower_coef * r.h_mu + 2 * (mu + 1) * r.s_mu <= 2 * (mu + 1) * e_alpha,
                 witness(r, k, ea));
    tally.record("good_edges_upper",
                 4 * e_alpha * report.alpha_den <= (5 * report.alpha_num + 8 * report.alpha_den) * r.m_star,
                 witness(r, k, ea));

    const std::size_t e_6c = offline_alpha_good_set(stream, 6.0 * static_cast<double>(c)).size();
    const std::string e6 = "|E_6c|=" + std::to_string(e_6c);
    tally.record("six_c_sandwich", r.m_star <= 3 * e_6c && 6 * e_6c <= (45 * c + 12) * r.m_star,
                 witness(r, k, e6));

    if (report.forest) {
      const std::size_t e_1 = offline_alpha_good_set(stream, 1.0).size();
      tally.record("forest_sandwich", r.m_star <= e_1 && e_1 <= 2 * r.m_star,
                   witness(r, k, "|E_1|=" + std::to_string(e_1)));
    }
  }
  report.checks = tally.take();
  return report;
}

std::string format_report(const LemmaReport& report) {
  std::ostringstream out;
  const auto& r = report.characterization;
  out << "c=" << report.c << " mu=" << r.mu << " alpha=" << report.alpha() << " M*=" << r.m_star
      << " h_mu=" << r.h_mu << " s_mu=" << r.s_mu << " M_mu=" << r.m_mu << " n_L=" << r.n_l
      << " orderings=" << report.orderings << (report.forest ? " forest" : "") << '\n';
  for (const auto& check : report.checks) {
    out << (check.passed() ? "PASS " : "FAIL ") << check.name << " (" << check.instances - check.violations
        << '/' << check.instances << ')';
    if (!check.passed()) out << " first violation: " << check.first_witness;
    out << '\n';
  }
  out << (report.passed() ? "all checks passed" : "violations found") << '\n';
  return out.str();
}

}  // namespace arbmatch
