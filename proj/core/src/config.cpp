#include "hyperlag/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "hyperlag/error.hpp"

namespace hyperlag {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view v, std::size_t lineno, std::string_view key) {
  T out{};
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ParseError(lineno, "bad value '" + std::string(v) + "' for " + std::string(key));
  return out;
}

}  // namespace

OptimizerConfig parse_optimizer_config(std::string_view text, OptimizerConfig cfg) {
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ParseError(lineno, "expected key=value");
      const auto key = trim(line.substr(0, eq));
      const auto value = trim(line.substr(eq + 1));
      if (key == "restarts")
        cfg.restarts = parse_number<int>(value, lineno, key);
      else if (key == "max_iterations")
        cfg.max_iterations = parse_number<long>(value, lineno, key);
      else if (key == "step_tolerance")
        cfg.step_tolerance = parse_number<double>(value, lineno, key);
      else if (key == "seed")
        cfg.seed = parse_number<std::uint64_t>(value, lineno, key);
      else if (key == "minimality_threshold")
        cfg.minimality_threshold = parse_number<double>(value, lineno, key);
      else if (key == "threads")
        cfg.threads = parse_number<int>(value, lineno, key);
      else
        throw ParseError(lineno, "unknown key '" + std::string(key) + "'");
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  try {
    cfg.validate();
  } catch (const InputError& e) {
    throw ParseError(lineno, e.what());
  }
  return cfg;
}

OptimizerConfig read_optimizer_config(const std::filesystem::path& path, OptimizerConfig base) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_optimizer_config(buf.str(), base);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
}

}  // namespace hyperlag
