#include "arbmatch/stream.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "text_lines.hpp"

namespace arbmatch {

namespace {

StreamEvent make_event(EventKind kind, Vertex a, Vertex b) {
  const Edge e = make_edge(a, b);
  return {kind, e.u, e.v};
}

}  // namespace

StreamEvent StreamEvent::insert(Vertex a, Vertex b) { return make_event(EventKind::Insert, a, b); }
StreamEvent StreamEvent::erase(Vertex a, Vertex b) { return make_event(EventKind::Delete, a, b); }

StreamError::StreamError(std::size_t position, const std::string& what)
    : std::invalid_argument("event " + std::to_string(position) + ": " + what), position_(position) {}

EdgeStream::EdgeStream(std::size_t n, std::vector<StreamEvent> events,
                       std::optional<unsigned> c_declared)
    : n_(n), events_(std::move(events)), c_declared_(c_declared) {
  std::unordered_set<Edge, EdgeHash> live;
  for (std::size_t i = 0; i < events_.size(); ++i) {
    auto& ev = events_[i];
    if (ev.u >= n_ || ev.v >= n_) throw StreamError(i + 1, "vertex out of range");
    if (ev.u == ev.v) throw StreamError(i + 1, "self-loop");
    if (ev.u > ev.v) std::swap(ev.u, ev.v);
    if (ev.is_insert()) {
      if (!live.insert(ev.edge()).second) throw StreamError(i + 1, "insert of a live edge");
    } else {
      if (live.erase(ev.edge()) == 0) throw StreamError(i + 1, "delete of an edge that is not live");
      ++deletions_;
    }
  }
}

EdgeStream EdgeStream::from_edges(std::size_t n, const std::vector<Edge>& order,
                                  std::optional<unsigned> c_declared) {
  std::vector<StreamEvent> events;
  events.reserve(order.size());
  for (const auto& e : order) events.push_back(StreamEvent::insert(e.u, e.v));
  return EdgeStream(n, std::move(events), c_declared);
}

Graph EdgeStream::prefix_graph(std::size_t count) const {
  // Position of each edge's most recent insert, or erased.
  std::unordered_map<Edge, std::size_t, EdgeHash> live;
  for (std::size_t i = 0; i < count && i < events_.size(); ++i) {
    const auto& ev = events_[i];
    if (ev.is_insert()) {
      live[ev.edge()] = i;
    } else {
      live.erase(ev.edge());
    }
  }
  std::vector<std::pair<std::size_t, Edge>> ordered;
  ordered.reserve(live.size());
  for (const auto& [e, at] : live) ordered.emplace_back(at, e);
  std::sort(ordered.begin(), ordered.end());
  std::vector<Edge> edges;
  edges.reserve(ordered.size());
  for (const auto& [at, e] : ordered) edges.push_back(e);
  return Graph(n_, std::move(edges), c_declared_);
}

Graph EdgeStream::live_graph() const { return prefix_graph(events_.size()); }

void write_stream(std::ostream& out, const EdgeStream& s) {
  out << "n " << s.n() << '\n';
  for (const auto& ev : s) {
    out << (ev.is_insert() ? '+' : '-') << ' ' << ev.u << ' ' << ev.v << '\n';
  }
}

std::string serialize_stream(const EdgeStream& s) {
  std::ostringstream out;
  write_stream(out, s);
  return out.str();
}

EdgeStream parse_stream(std::string_view text) {
  detail::LineReader reader(text);
  std::optional<std::size_t> n;
  std::vector<StreamEvent> events;
  std::vector<std::size_t> event_lines;
  std::string_view line;
  while (reader.next(line)) {
    const std::size_t lineno = reader.line_number();
    if (line.starts_with('#')) continue;
    if (!n) {
      auto tokens = detail::split_ws(line);
      if (tokens.size() != 2 || tokens[0] != "n" || line != "n " + std::string(tokens[1])) {
        throw ParseError(lineno, "expected 'n <count>'");
      }
      n = detail::parse_uint<std::size_t>(tokens[1], lineno);
      continue;
    }
    if (line.size() < 5 || (line[0] != '+' && line[0] != '-') || line[1] != ' ') {
      throw ParseError(lineno, "expected '+ u v' or '- u v'");
    }
    const auto rest = line.substr(2);
    const auto space = rest.find(' ');
    if (space == std::string_view::npos) throw ParseError(lineno, "expected two vertex ids");
    const auto a = detail::parse_uint<Vertex>(rest.substr(0, space), lineno);
    const auto b = detail::parse_uint<Vertex>(rest.substr(space + 1), lineno);
    if (a >= b) throw ParseError(lineno, "endpoints must satisfy u < v");
    if (b >= *n) throw ParseError(lineno, "vertex out of range");
    events.push_back({line[0] == '+' ? EventKind::Insert : EventKind::Delete, a, b});
    event_lines.push_back(lineno);
  }
  if (!n) throw ParseError(reader.line_number(), "missing 'n <count>' header");
  try {
    return EdgeStream(*n, std::move(events));
  } catch (const StreamError& err) {
    throw ParseError(event_lines[err.position() - 1], err.what());
  }
}

}  // namespace arbmatch
