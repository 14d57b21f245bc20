#include "arbmatch/characterization.hpp"

#include <stdexcept>

#include "arbmatch/matching.hpp"

namespace arbmatch {

CharacterizationReport characterize(const Graph& g, std::size_t mu) {
  if (mu < 1) throw std::invalid_argument("characterize: mu must be >= 1");
  CharacterizationReport report;
  report.mu = mu;
  report.m_star = maximum_matching_size(g);

  auto low = [&](Vertex v) { return g.degree(v) <= mu; };
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!low(v)) ++report.h_mu;
  }
  const Graph low_part = induced_subgraph(g, low);
  report.s_mu = low_part.m();
  report.m_mu = maximum_matching_size(low_part);
  for (Vertex v = 0; v < low_part.n(); ++v) {
    if (low_part.degree(v) > 0) ++report.n_l;
  }
  return report;
}

std::vector<std::size_t> offline_alpha_good_set(const EdgeStream& stream, double alpha) {
  stream.require_insert_only();
  // Walk backwards so later[x] is the number of edges at x after position i.
  std::vector<std::size_t> later(stream.n(), 0);
  std::vector<std::size_t> good;
  for (std::size_t i = stream.size(); i-- > 0;) {
    const auto& ev = stream[i];
    if (static_cast<double>(std::max(later[ev.u], later[ev.v])) <= alpha) good.push_back(i + 1);
    ++later[ev.u];
    ++later[ev.v];
  }
  return {good.rbegin(), good.rend()};
}

}  // namespace arbmatch
