#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <string>

#include "arbmatch/experiment.hpp"
#include "text_lines.hpp"

namespace arbmatch {

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return std::to_string(value);
  return {buf.data(), ptr};
}

std::string format_ratio(double value) {
  std::string out = format_number(value);
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const TrialRecord& r) {
  std::array<char, 32> ms{};
  auto [ptr, ec] = std::to_chars(ms.data(), ms.data() + ms.size(), r.ms, std::chars_format::fixed, 3);
  out << r.seed << ',' << (r.value ? format_number(*r.value) : "") << ',' << r.m_star << ','
      << (r.ratio ? format_ratio(*r.ratio) : "") << ',' << r.space_peak << ',' << (r.fail ? 1 : 0)
      << ',' << std::string_view(ms.data(), ec == std::errc{} ? static_cast<std::size_t>(ptr - ms.data()) : 0)
      << '\n';
}

void emit_csv(const std::vector<TrialRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  write_csv_header(out);
  for (const auto& r : records) write_csv_row(out, r);
  if (!out) throw IoError("write to '" + path + "' failed");
}

namespace {

template <typename T>
T field(std::string_view token, std::size_t lineno) {
  T out{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(lineno, "bad field '" + std::string(token) + "'");
  }
  return out;
}

}  // namespace

std::vector<TrialRecord> parse_csv(std::string_view text) {
  detail::LineReader reader(text);
  std::string_view line;
  if (!reader.next(line) || line != kCsvHeader) throw ParseError(1, "missing CSV header");
  std::vector<TrialRecord> out;
  while (reader.next(line)) {
    const std::size_t lineno = reader.line_number();
    if (line.empty()) continue;
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cells.size() != 7) throw ParseError(lineno, "expected 7 fields");
    TrialRecord r;
    r.seed = field<std::uint64_t>(cells[0], lineno);
    if (!cells[1].empty()) r.value = field<double>(cells[1], lineno);
    r.m_star = field<std::size_t>(cells[2], lineno);
    if (!cells[3].empty()) r.ratio = field<double>(cells[3], lineno);
    r.space_peak = field<std::size_t>(cells[4], lineno);
    r.fail = field<int>(cells[5], lineno) != 0;
    r.ms = field<double>(cells[6], lineno);
    out.push_back(r);
  }
  return out;
}

}  // namespace arbmatch
