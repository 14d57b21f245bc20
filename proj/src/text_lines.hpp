#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "arbmatch/graph.hpp"

namespace arbmatch::detail {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (offset_ >= text_.size()) return false;
    const auto end = text_.find('\n', offset_);
    const auto stop = end == std::string_view::npos ? text_.size() : end;
    line = text_.substr(offset_, stop - offset_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    offset_ = stop + 1;
    ++line_;
    return true;
  }

  std::size_t line_number() const { return line_; }

 private:
  std::string_view text_;
  std::size_t offset_ = 0;
  std::size_t line_ = 0;
};

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_uint(std::string_view token, std::size_t lineno) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(lineno, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace arbmatch::detail
