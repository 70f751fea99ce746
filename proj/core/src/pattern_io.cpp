#include "hyperlag/pattern_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hyperlag/error.hpp"

namespace hyperlag {
namespace {

std::vector<int> parse_ints(std::string_view line, std::size_t lineno) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc() || ptr != line.data() + end)
      throw ParseError(lineno, "expected an integer, got '" + std::string(line.substr(pos, end - pos)) + "'");
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

Pattern parse_pattern(std::string_view text) {
  int r = 0;
  int m = 0;
  bool have_header = false;
  std::size_t header_line = 0;
  std::vector<Multiset> edges;
  std::vector<std::size_t> edge_lines;

  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto values = parse_ints(line, lineno);
    if (!values.empty()) {
      if (!have_header) {
        if (values.size() != 2) throw ParseError(lineno, "header must be 'r m'");
        r = values[0];
        m = values[1];
        if (r < 2) throw ParseError(lineno, "uniformity r must be at least 2");
        if (m < 1) throw ParseError(lineno, "part count m must be at least 1");
        have_header = true;
        header_line = lineno;
      } else {
        if (values.size() != static_cast<std::size_t>(r))
          throw ParseError(lineno, "edge has " + std::to_string(values.size()) + " entries, expected " +
                                       std::to_string(r));
        for (std::size_t j = 0; j < values.size(); ++j) {
          if (values[j] < 1 || values[j] > m)
            throw ParseError(lineno, "index " + std::to_string(values[j]) + " outside [1, " +
                                         std::to_string(m) + "]");
          if (j > 0 && values[j] < values[j - 1])
            throw ParseError(lineno, "edge indices must be nondecreasing");
        }
        Multiset e(std::move(values));
        for (std::size_t j = 0; j < edges.size(); ++j)
          if (edges[j] == e)
            throw ParseError(lineno, "duplicate edge (first seen on line " + std::to_string(edge_lines[j]) + ")");
        edges.push_back(std::move(e));
        edge_lines.push_back(lineno);
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (!have_header) throw ParseError(lineno, "missing 'r m' header");
  try {
    return Pattern(r, m, std::move(edges));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(header_line, e.what());
  }
}

std::string serialize_pattern(const Pattern& p) {
  std::ostringstream out;
  out << p.r() << ' ' << p.m() << '\n';
  for (const auto& e : p.edges()) {
    bool first = true;
    for (int v : e.elements()) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Pattern read_pattern_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open pattern file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_pattern(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

}  // namespace hyperlag
