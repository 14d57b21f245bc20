#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "arbmatch/graph.hpp"
#include "text_lines.hpp"

namespace arbmatch {

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << '\n';
  if (g.c_declared()) out << "# arboricity " << *g.c_declared() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  detail::LineReader reader(text);
  std::optional<std::size_t> n;
  std::optional<unsigned> c_declared;
  std::vector<Edge> edges;
  std::string_view line;
  while (reader.next(line)) {
    const std::size_t lineno = reader.line_number();
    auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0].starts_with('#')) {
      if (tokens.size() == 3 && tokens[0] == "#" && tokens[1] == "arboricity") {
        c_declared = detail::parse_uint<unsigned>(tokens[2], lineno);
      }
      continue;
    }
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "n") throw ParseError(lineno, "expected 'n <count>'");
      n = detail::parse_uint<std::size_t>(tokens[1], lineno);
      continue;
    }
    if (tokens.size() != 2) throw ParseError(lineno, "expected 'u v'");
    const auto a = detail::parse_uint<Vertex>(tokens[0], lineno);
    const auto b = detail::parse_uint<Vertex>(tokens[1], lineno);
    if (a >= *n || b >= *n) throw ParseError(lineno, "vertex out of range");
    if (a == b) throw ParseError(lineno, "self-loop");
    edges.push_back(make_edge(a, b));
  }
  if (!n) throw ParseError(reader.line_number(), "missing 'n <count>' header");
  try {
    return Graph(*n, std::move(edges), c_declared);
  } catch (const GraphError& err) {
    throw ParseError(0, err.what());
  }
}

}  // namespace arbmatch
