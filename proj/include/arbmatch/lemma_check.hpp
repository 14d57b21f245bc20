#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arbmatch/characterization.hpp"
#include "arbmatch/graph.hpp"

namespace arbmatch {

struct LemmaCheck {
  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string first_witness;  // empty when no violation

  bool passed() const { return violations == 0; }
};

struct LemmaReport {
  CharacterizationReport characterization;
  unsigned c = 0;
  // alpha = max{mu - 1, 4c(mu+1)/(mu+1-2c)} as a fraction.
  std::size_t alpha_num = 0;
  std::size_t alpha_den = 1;
  std::size_t orderings = 0;
  bool forest = false;
  std::vector<LemmaCheck> checks;

  bool passed() const;
  const LemmaCheck* first_violation() const;
  double alpha() const { return static_cast<double>(alpha_num) / static_cast<double>(alpha_den); }
};

/// Evaluates the degree/matching inequalities on g and the alpha-good edge
/// inequalities on `orderings` random edge orders. Integer arithmetic
/// throughout. Requires g.c_declared() and mu > 2c (std::invalid_argument).
///
/// Checks:
///   high_degree_bound      h_mu <= 2mu/(mu-2c+1) * M*
///   sandwich_lower         M* <= h_mu + M_mu
///   sandwich_upper         h_mu + M_mu <= (2mu/(mu-2c+1) + 1) * M*
///   good_edges_lower       (1/2 - c/(mu+1)) * M* <= |E_alpha|
///   good_edges_shallow     (1/2 - c/(mu+1)) * h_mu + s_mu <= |E_alpha|
///   good_edges_upper       |E_alpha| <= (5 alpha/4 + 2) * M*
///   six_c_sandwich         M* <= 3|E_6c| <= (22.5c + 6) * M*
///   forest_sandwich        M* <= |E_1| <= 2M*   (forests only)
LemmaReport check_lemmas(const Graph& g, std::size_t orderings, std::size_t mu, std::uint64_t seed);

std::string format_report(const LemmaReport& report);

}  // namespace arbmatch
