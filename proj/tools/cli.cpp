#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "hyperlag/blowup.hpp"
#include "hyperlag/certificate.hpp"
#include "hyperlag/closed_form.hpp"
#include "hyperlag/config.hpp"
#include "hyperlag/error.hpp"
#include "hyperlag/optimizer.hpp"
#include "hyperlag/pattern.hpp"
#include "hyperlag/pattern_io.hpp"
#include "hyperlag/report.hpp"
#include "hyperlag/tower.hpp"
#include "verify_suite.hpp"

namespace hyperlag::tools {
namespace {

std::string fmt(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string describe(const Pattern& p) {
  return "r=" + std::to_string(p.r()) + " m=" + std::to_string(p.m()) + " edges=" + std::to_string(p.edge_count());
}

// Writes text to path, or to out when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_text_file(path, text);
}

struct PatternArgs {
  int k = 1;
  int s = 1;
  int index = 1;
  std::string name;
  std::string input;
  std::string output;
  std::vector<int> parts;
  std::uint64_t edge_cap = kDefaultEdgeCap;
};

struct LagrangianArgs {
  std::string input;
  std::string config_file;
  std::string json_file;
  OptimizerConfig cfg;
  bool minimality = false;
  int density_n = 0;
};

struct TowerArgs {
  int k = 1;
  long precision = 0;
  int cap = kDefaultTowerCap;
  bool emit_poly = false;
  std::string output;
  std::string json_file;
};

struct VerifyArgs {
  VerifyOptions options;
  std::string json_file;
  bool timing = false;
};

void print_pattern_result(const Pattern& p, const PatternArgs& a, std::ostream& out) {
  emit(a.output, serialize_pattern(p), out);
  if (!a.output.empty()) out << "wrote " << a.output << " (" << describe(p) << ")\n";
}

int cmd_lagrangian(const LagrangianArgs& a, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  OptimizerConfig cfg;
  if (!a.config_file.empty()) cfg = read_optimizer_config(a.config_file, cfg);
  // Flags override the config file.
  if (sub.count("--restarts")) cfg.restarts = a.cfg.restarts;
  if (sub.count("--seed")) cfg.seed = a.cfg.seed;
  if (sub.count("--max-iterations")) cfg.max_iterations = a.cfg.max_iterations;
  if (sub.count("--step-tolerance")) cfg.step_tolerance = a.cfg.step_tolerance;
  if (sub.count("--threshold")) cfg.minimality_threshold = a.cfg.minimality_threshold;
  if (sub.count("--threads")) cfg.threads = a.cfg.threads;
  cfg.validate();

  const Pattern p = read_pattern_file(a.input);
  const LagrangePolynomial poly(p);

  std::optional<MinimalityReport> minimal;
  LagrangianResult res;
  if (a.minimality) {
    minimal = is_minimal(p, cfg);
    res = minimal->full;
  } else {
    res = lagrangian(p, cfg);
  }

  out << "pattern    " << a.input << " (" << describe(p) << ")\n";
  out << "lambda     " << fmt(res.value) << '\n';
  if (res.closed_form) {
    out << "certified  " << (res.certified ? "yes" : "no") << " (P_" << res.recognized_pk << " closed form "
        << fmt(*res.closed_form) << ", |diff| = " << sci(std::fabs(res.value - *res.closed_form)) << ")\n";
  } else {
    out << "certified  no (heuristic maximum)\n";
  }
  out << "argmax    ";
  for (double v : res.argmax.coords()) out << ' ' << fmt(v);
  out << '\n';
  out << "restarts   " << res.restarts_used << " (" << res.converged_restarts << " converged, best #"
      << res.best_restart << " after " << res.iterations << " iterations), seed " << cfg.seed << '\n';
  out << "kkt        " << sci(kkt_residual(poly, res.argmax)) << '\n';

  if (minimal) {
    out << "minimality threshold " << sci(minimal->threshold) << '\n';
    out << "  i  lambda(P-i)     margin\n";
    for (const auto& im : minimal->per_index) {
      char line[128];
      std::snprintf(line, sizeof line, "%3d  %-14s  %s%s\n", im.index, fmt(im.lambda_without).c_str(),
                    format_fixed6(im.margin).c_str(), im.converged ? "" : "  (not converged)");
      out << line;
    }
    if (minimal->is_minimal) {
      out << "minimal\n";
    } else {
      for (const auto& im : minimal->per_index)
        if (!(im.margin > minimal->threshold))
          out << "not minimal: margin(i=" << im.index << ") = " << format_fixed6(im.margin) << '\n';
    }
  }

  if (a.density_n > 0) {
    const auto sizes = round_part_sizes(res.argmax, a.density_n);
    const double d = blowup_density(p, res.argmax, a.density_n);
    out << "density    n=" << a.density_n << " parts=";
    for (std::size_t i = 0; i < sizes.size(); ++i) out << (i ? "," : "") << sizes[i];
    out << ": " << fmt(d) << " (gap to lambda " << sci(std::fabs(d - res.value)) << ")\n";
  }

  if (!a.json_file.empty()) write_text_file(a.json_file, (minimal ? to_json(*minimal) : to_json(res)) + "\n");

  if (res.converged_restarts == 0 && !poly.is_zero()) {
    err << "error: no restart converged within " << cfg.max_iterations << " iterations\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_tower(const TowerArgs& a, std::ostream& out, std::ostream& err) {
  const auto poly = tower_polynomial(a.k, a.cap);
  if (a.emit_poly && a.output.empty()) {
    out << poly.to_string() << '\n';
    return kExitOk;
  }
  if (!a.output.empty()) write_text_file(a.output, poly.to_string() + "\n");

  const long prec = a.precision > 0 ? a.precision : default_precision_bits(a.k);
  const auto cert = degree_certificate(a.k, poly, prec);
  out << "k               " << cert.k << '\n';
  out << "degree          " << cert.polynomial.degree() << " (claimed " << cert.claimed_degree << ")\n";
  out << "precision       " << cert.precision_bits << " bits\n";
  out << "mu_k            " << cert.root.to_string(30) << '\n';
  out << "residual bound  " << cert.residual_bound.to_string(6) << " (2^" << fmt(cert.residual_bound.log2_abs(), 2)
      << ", tolerance " << cert.tolerance.to_string(3) << ")\n";
  out << "eisenstein q=3  " << (cert.eisenstein.passed ? "pass" : "fail") << " (exception at "
      << to_string(cert.eisenstein.orientation) << ", leading mod 9 = " << cert.eisenstein.leading_mod_q2.get_str()
      << ", constant mod 9 = " << cert.eisenstein.constant_mod_q2.get_str() << ")\n";
  out << "divisibility    c.i " << (cert.divisibility.cond_i_holds ? "holds" : "fails") << ", c.ii "
      << (cert.divisibility.cond_ii_holds ? "holds" : "fails") << " (" << cert.divisibility.indices_examined
      << " indices)\n";
  out << "certificate     " << (cert.valid ? "valid" : "INVALID") << ", degree of mu_" << cert.k << " = "
      << cert.claimed_degree << '\n';
  for (const auto& f : cert.failures) out << "  failure: " << f << '\n';
  if (!cert.residual_bound.is_zero() && cert.residual_bound.log2_abs() > -32)
    err << "warning: residual bound " << cert.residual_bound.to_string(3)
        << " exceeds 2^-32; raise --precision\n";
  if (!a.json_file.empty()) write_text_file(a.json_file, to_json(cert) + "\n");
  return cert.valid ? kExitOk : kExitCheckFailed;
}

int cmd_verify_all(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report = run_verify_all(a.options);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (a.timing) report.wall_time_s = elapsed;
  out << format_table(report);
  if (!a.json_file.empty()) write_text_file(a.json_file, to_json(report));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", elapsed);
  err << "elapsed " << buf << " s\n";
  for (const auto& c : report.checks)
    if (!c.passed) err << "FAILED " << c.id << ": " << c.name << " (measured " << c.measured << ")\n";
  return report.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern Lagrangians, the P_k family and algebraic-degree certificates", "hyperlag"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  // pattern
  PatternArgs pa;
  auto* pattern = app.add_subcommand("pattern", "Build, transform and inspect pattern files");
  pattern->require_subcommand(1);
  auto* build = pattern->add_subcommand("build-pk", "Write the pattern P_k");
  build->add_option("--k", pa.k, "Level k >= 1")->required();
  build->add_option("-o,--output", pa.output, "Output file (default: stdout)");
  auto* named = pattern->add_subcommand("named", "Write a named pattern");
  named->add_option("name", pa.name, "fano | nonminimal-2graph | single-edge-<r>")->required();
  named->add_option("-o,--output", pa.output, "Output file (default: stdout)");
  auto* lift = pattern->add_subcommand("plus-s", "Lift a pattern to P+s");
  lift->add_option("--s", pa.s, "Number of fresh indices")->required();
  lift->add_option("input", pa.input, "Pattern file")->required();
  lift->add_option("-o,--output", pa.output, "Output file (default: stdout)");
  auto* drop = pattern->add_subcommand("remove-index", "Write P-i");
  drop->add_option("--i", pa.index, "Part to remove (1-based)")->required();
  drop->add_option("input", pa.input, "Pattern file")->required();
  drop->add_option("-o,--output", pa.output, "Output file (default: stdout)");
  auto* blow = pattern->add_subcommand("blowup", "Export the blowup hypergraph");
  blow->add_option("input", pa.input, "Pattern file")->required();
  blow->add_option("--parts", pa.parts, "Part sizes, comma separated")->required()->delimiter(',');
  blow->add_option("--edge-cap", pa.edge_cap, "Refuse blowups with more edges");
  blow->add_option("-o,--output", pa.output, "Output file (default: stdout)");
  auto* info = pattern->add_subcommand("info", "Print r, m and the edge count");
  info->add_option("input", pa.input, "Pattern file")->required();

  // lagrangian
  LagrangianArgs la;
  auto* lag = app.add_subcommand("lagrangian", "Maximize the Lagrange polynomial of a pattern");
  lag->add_option("input", la.input, "Pattern file")->required();
  lag->add_option("--restarts", la.cfg.restarts, "Random restarts (default 64)");
  lag->add_option("--seed", la.cfg.seed, "Restart seed (default 1)");
  lag->add_option("--max-iterations", la.cfg.max_iterations, "Iteration cap per restart");
  lag->add_option("--step-tolerance", la.cfg.step_tolerance, "Convergence threshold on the step");
  lag->add_option("--threshold", la.cfg.minimality_threshold, "Minimality margin threshold");
  lag->add_option("--threads", la.cfg.threads, "Worker threads for restarts");
  lag->add_option("--config", la.config_file, "key=value config file (flags take precedence)");
  lag->add_flag("--minimality", la.minimality, "Also compute lambda(P-i) margins");
  lag->add_option("--density-n", la.density_n, "Blowup density at n vertices using the argmax weights");
  lag->add_option("--json", la.json_file, "Write the structured result to a file");

  // tower
  TowerArgs ta;
  auto* tower = app.add_subcommand("tower", "Tower polynomial p_k and its degree certificate");
  tower->add_option("--k", ta.k, "Level k >= 1")->required();
  tower->add_option("--precision", ta.precision, "Bits for mu_k and the residual bound");
  tower->add_option("--cap", ta.cap, "Highest permitted level (default 12)");
  tower->add_flag("--emit-poly", ta.emit_poly, "Print p_k, constant term first");
  tower->add_option("-o,--output", ta.output, "Write p_k to a file");
  tower->add_option("--json", ta.json_file, "Write the certificate to a file");

  // verify-all
  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-all", "Run the full verification suite");
  verify->add_option("--k-max", va.options.k_max, "Largest P_k level (default 5)");
  verify->add_option("--seed", va.options.seed, "Seed for restarts and random instances");
  verify->add_option("--precision", va.options.precision_bits, "Minimum working precision in bits");
  verify->add_option("--threads", va.options.threads, "Worker threads for restarts");
  verify->add_option("--instances", va.options.property_instances, "Randomized property instances");
  verify->add_option("--json", va.json_file, "Write the report to a file");
  verify->add_flag("--timing", va.timing, "Include wall time in the JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (pattern->parsed()) {
      if (build->parsed()) print_pattern_result(build_pk(pa.k), pa, out);
      if (named->parsed()) print_pattern_result(named_pattern(pa.name), pa, out);
      if (lift->parsed()) print_pattern_result(plus_s(read_pattern_file(pa.input), pa.s), pa, out);
      if (drop->parsed()) print_pattern_result(remove_index(read_pattern_file(pa.input), pa.index), pa, out);
      if (blow->parsed()) {
        const auto h = blowup(read_pattern_file(pa.input), pa.parts, pa.edge_cap);
        emit(pa.output, serialize_hypergraph(h), out);
        if (!pa.output.empty())
          out << "wrote " << pa.output << " (n=" << h.n() << " r=" << h.r() << " edges=" << h.edge_count() << ")\n";
      }
      if (info->parsed()) out << describe(read_pattern_file(pa.input)) << '\n';
      return kExitOk;
    }
    if (lag->parsed()) return cmd_lagrangian(la, *lag, out, err);
    if (tower->parsed()) return cmd_tower(ta, out, err);
    if (verify->parsed()) {
      if (va.options.k_max < 1) throw InputError("--k-max must be at least 1");
      if (va.options.property_instances < 1) throw InputError("--instances must be positive");
      if (va.options.threads < 1) throw InputError("--threads must be positive");
      if (va.options.seed < 1) throw InputError("--seed must be positive");
      if (va.options.precision_bits < kMinPrecisionBits)
        throw InputError("--precision must be at least " + std::to_string(kMinPrecisionBits));
      return cmd_verify_all(va, out, err);
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitInputError;
}

}  // namespace hyperlag::tools
