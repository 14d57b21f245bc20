#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arbmatch/graph.hpp"

namespace arbmatch {

enum class EventKind : std::uint8_t { Insert, Delete };

struct StreamEvent {
  EventKind kind = EventKind::Insert;
  Vertex u = 0;  // u < v
  Vertex v = 0;

  static StreamEvent insert(Vertex a, Vertex b);
  static StreamEvent erase(Vertex a, Vertex b);

  Edge edge() const { return {u, v}; }
  bool is_insert() const { return kind == EventKind::Insert; }

  friend bool operator==(const StreamEvent&, const StreamEvent&) = default;
};

/// An event sequence that breaks a live-edge invariant.
class StreamError : public std::invalid_argument {
 public:
  StreamError(std::size_t position, const std::string& what);
  /// 1-based position of the offending event.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Raised by insert-only consumers handed a stream that contains deletions.
class HasDeletions : public std::invalid_argument {
 public:
  HasDeletions() : std::invalid_argument("stream contains deletions") {}
};

/// Ordered, replayable sequence of edge insertions and deletions over the
/// vertex range [0, n).
///
/// Construction validates that every delete targets a live edge and that no
/// insert duplicates a live edge.
class EdgeStream {
 public:
  EdgeStream() = default;
  EdgeStream(std::size_t n, std::vector<StreamEvent> events,
             std::optional<unsigned> c_declared = std::nullopt);

  /// Insert-only stream of `order`, which must be edges of a simple graph.
  static EdgeStream from_edges(std::size_t n, const std::vector<Edge>& order,
                               std::optional<unsigned> c_declared = std::nullopt);

  std::size_t n() const { return n_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  const std::vector<StreamEvent>& events() const { return events_; }
  const StreamEvent& operator[](std::size_t i) const { return events_[i]; }
  auto begin() const { return events_.begin(); }
  auto end() const { return events_.end(); }
  std::optional<unsigned> c_declared() const { return c_declared_; }
  bool has_deletions() const { return deletions_ > 0; }
  std::size_t deletions() const { return deletions_; }

  /// Graph of edges live after the last event, in order of their final insert.
  Graph live_graph() const;
  /// Live graph after the first `count` events.
  Graph prefix_graph(std::size_t count) const;

  void require_insert_only() const {
    if (has_deletions()) throw HasDeletions();
  }

  /// Streams compare equal on (n, events); c_declared is metadata.
  friend bool operator==(const EdgeStream& a, const EdgeStream& b) {
    return a.n_ == b.n_ && a.events_ == b.events_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<StreamEvent> events_;
  std::optional<unsigned> c_declared_;
  std::size_t deletions_ = 0;
};

// Stream file format:
//   n <count>
//   + u v      (insert, u < v)
//   - u v      (delete, u < v)
// Single spaces, newline terminated; lines beginning with '#' are ignored.
std::string serialize_stream(const EdgeStream& s);
void write_stream(std::ostream& out, const EdgeStream& s);
/// Throws ParseError carrying the 1-based line number.
EdgeStream parse_stream(std::string_view text);

}  // namespace arbmatch
