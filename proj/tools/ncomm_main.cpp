// SPDX-License-Identifier: Apache-2.0
//
// ncomm: analyze the noise commutant structure of a Kraus channel, verify the
// computed structure operationally, and list the built-in channel families.
//
// Exit codes: 0 success, 1 input/validation error (or failed verification),
// 2 channel is not unital.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncomm/channel.hpp"
#include "ncomm/io.hpp"
#include "ncomm/noiseless.hpp"
#include "ncomm/structure.hpp"

namespace {

using namespace ncomm;

struct Options {
  std::string input;
  std::string builtin;
  std::vector<std::string> params;
  double tol_rank = ToleranceConfig{}.eps_rank;
  double tol_cluster = ToleranceConfig{}.eps_cluster;
  double tol_zero = ToleranceConfig{}.eps_zero;
  std::uint64_t seed = ToleranceConfig{}.seed;
  std::string format = "text";
  bool full = false;
  std::string strategy = "generic";
  std::string link_method = "corner";
  int threads = 1;
  int trials = 25;
  int repetitions = 5;
};

// Round-trip fidelity bound for a structurally exact noiseless component.
constexpr double kNoiselessPassBound = 1e-9;

ToleranceConfig make_tolerances(const Options& o) {
  ToleranceConfig tol;
  tol.eps_rank = o.tol_rank;
  tol.eps_cluster = o.tol_cluster;
  tol.eps_zero = o.tol_zero;
  tol.seed = o.seed;
  tol.validate();
  return tol;
}

FamilyStrategy parse_strategy(const std::string& s) {
  if (s == "recursive") return FamilyStrategy::always_recursive;
  if (s == "generic") return FamilyStrategy::randomized_generic;
  throw std::invalid_argument("unknown strategy '" + s + "' (expected recursive or generic)");
}

LinkMethod parse_link_method(const std::string& s) {
  if (s == "corner") return LinkMethod::corner;
  if (s == "subset") return LinkMethod::subset_enumeration;
  if (s == "signature") return LinkMethod::signature;
  throw std::invalid_argument("unknown link method '" + s + "' (expected corner, subset or signature)");
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& params) {
  std::map<std::string, std::string> out;
  for (const std::string& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size()) {
      throw std::invalid_argument("malformed --param '" + kv + "' (expected key=value)");
    }
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

double parse_real(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + " from '" + text + "'");
  }
}

int parse_integer(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + " from '" + text + "'");
  }
}

double require_p(const std::string& builtin, const std::string& arg,
                 const std::map<std::string, std::string>& params) {
  std::string text = arg;
  if (text.empty()) {
    const auto it = params.find("p");
    if (it == params.end()) {
      throw std::invalid_argument("builtin '" + builtin + "' needs a parameter: use '" + builtin +
                                  ":<p>' or --param p=<p>");
    }
    text = it->second;
  }
  return parse_real(text, "parameter p");
}

NamedChannel resolve_channel(const Options& o, const ToleranceConfig& tol) {
  if (!o.builtin.empty() && !o.input.empty()) {
    throw std::invalid_argument("give either an input file or --builtin, not both");
  }
  if (o.builtin.empty()) {
    if (o.input.empty()) throw std::invalid_argument("no channel given: pass a spec file or --builtin");
    return load_channel_spec(o.input, tol);
  }

  std::string name = o.builtin;
  std::string arg;
  if (const auto colon = name.find(':'); colon != std::string::npos) {
    arg = name.substr(colon + 1);
    name = name.substr(0, colon);
  }
  const auto params = parse_params(o.params);

  if (name == "collective") {
    std::string text = arg;
    if (text.empty()) {
      const auto it = params.find("n");
      if (it == params.end()) {
        throw std::invalid_argument("builtin 'collective' needs the qubit count: collective:<n> or --param n=<n>");
      }
      text = it->second;
    }
    const int n = parse_integer(text, "qubit count");
    if (n >= 1 && n <= 2) {
      std::fprintf(stderr, "note: collective:%d has no ampliated blocks; nothing useful can be stored\n", n);
    }
    return {build_collective(n, tol), "collective:" + std::to_string(n)};
  }
  if (name == "phase-damping") {
    const double p = require_p(name, arg, params);
    return {build_phase_damping(p), "phase-damping(p=" + std::to_string(p) + ")"};
  }
  if (name == "zz-damping") {
    const double p = require_p(name, arg, params);
    return {build_zz_damping(p), "zz-damping(p=" + std::to_string(p) + ")"};
  }
  if (name == "two-qubit-dephasing") {
    const double p = require_p(name, arg, params);
    return {build_two_qubit_dephasing(p), "two-qubit-dephasing(p=" + std::to_string(p) + ")"};
  }
  throw std::invalid_argument("unknown builtin '" + name + "'; see 'ncomm list-builtins'");
}

void print_text_report(const AnalysisReport& r) {
  std::printf("channel:    %s\n", r.channel_name.c_str());
  std::printf("dim:        %d    unital: %s\n", r.dim, r.unital ? "yes" : "no");
  std::printf("commutant dimension: %d\n", r.commutant_dim);
  std::printf("components (canonical order):\n");
  for (const auto& c : r.components) {
    std::printf("  n=%d  m=%d  central rank %d\n", c.n, c.m, c.rank_of_central);
  }
  std::printf("algebra:    %s\n", r.structure_algebra.c_str());
  std::printf("commutant:  %s\n", r.structure_commutant.c_str());
  std::printf("noiseless storage:\n");
  bool any = false;
  for (std::size_t k = 0; k < r.noiseless.size(); ++k) {
    const auto& nc = r.noiseless[k];
    if (nc.logical_dim < 2) continue;
    any = true;
    std::printf("  component %zu: logical dim %d, noisy cofactor %d (%s)\n", k, nc.logical_dim,
                nc.cofactor_dim, nc.kind.c_str());
  }
  if (!any) std::printf("  none (no commutant factor of dimension >= 2)\n");

  int passed = 0;
  double worst = 0.0;
  for (const auto& d : r.diagnostics) {
    if (d.pass) ++passed;
    worst = std::max(worst, d.residual);
  }
  std::printf("diagnostics: %d/%zu pass, max residual %.3e\n", passed, r.diagnostics.size(), worst);
}

void print_text_diagnostics(const AnalysisReport& r) {
  std::printf("channel:    %s\n", r.channel_name.c_str());
  std::printf("structure:  %s\n", r.structure_commutant.c_str());
  for (const auto& d : r.diagnostics) {
    std::printf("  [%s] %-55s residual %.3e\n", d.pass ? "PASS" : "FAIL", d.name.c_str(), d.residual);
  }
}

int run_analysis(const Options& o, bool with_noiseless_trials) {
  const ToleranceConfig tol = make_tolerances(o);
  const NamedChannel named = resolve_channel(o, tol);
  const WedderburnStructure st =
      analyze(named.channel, tol, parse_strategy(o.strategy), parse_link_method(o.link_method));

  std::vector<Diagnostic> diagnostics = verify_structure(named.channel, st, tol);
  if (with_noiseless_trials) {
    for (const auto& nc : noiseless_components(st)) {
      if (!nc.usable()) continue;
      const NoiselessReport rep = verify_noiseless(named.channel, nc, o.trials, o.repetitions, tol);
      Diagnostic d;
      d.name = "noiseless round trip, component " + std::to_string(nc.component_index) +
               " (logical dim " + std::to_string(nc.logical_dim) + ", " +
               std::to_string(rep.trials) + " trials)";
      d.residual = rep.max_trace_distance;
      d.pass = rep.max_trace_distance <= kNoiselessPassBound;
      diagnostics.push_back(std::move(d));
    }
  }

  bool all_pass = true;
  for (const auto& d : diagnostics) all_pass = all_pass && d.pass;

  const AnalysisReport report = build_report(named.name, named.channel, st, std::move(diagnostics),
                                             tol, o.full && o.format == "json");
  if (o.format == "json") {
    std::fputs(dump_json(report_json(report)).c_str(), stdout);
  } else if (with_noiseless_trials) {
    print_text_diagnostics(report);
    std::printf("result: %s\n", all_pass ? "all diagnostics pass" : "FAILURES detected");
  } else {
    print_text_report(report);
  }
  if (with_noiseless_trials && !all_pass) return 1;
  return 0;
}

int run_list_builtins() {
  // stable alphabetical order
  std::printf("%-22s %-26s %s\n", "builtin", "parameters", "description");
  std::printf("%-22s %-26s %s\n", "collective:n", "n: integer, n >= 1",
              "n-qubit collective rotation channel {exp(iX), exp(iY), exp(iZ)}/sqrt(3)");
  std::printf("%-22s %-26s %s\n", "phase-damping", "p: real, 0 < p < 1",
              "single-qubit phase damping {sqrt(1-p) I, sqrt(p) Z}");
  std::printf("%-22s %-26s %s\n", "two-qubit-dephasing", "p: real, 0 < p < 1",
              "independent dephasing on both qubits (four Kraus operators)");
  std::printf("%-22s %-26s %s\n", "zz-damping", "p: real, 0 < p < 1",
              "correlated dephasing {sqrt(1-p) I, sqrt(p) Z(x)Z}");
  return 0;
}

void add_common_options(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "channel spec JSON file");
  cmd->add_option("--builtin", o.builtin, "built-in channel, e.g. collective:3 or phase-damping");
  cmd->add_option("--param", o.params, "builtin parameter as key=value (e.g. p=0.25)");
  cmd->add_option("--tol-rank", o.tol_rank, "relative singular value cutoff for rank decisions");
  cmd->add_option("--tol-cluster", o.tol_cluster, "eigenvalue clustering width");
  cmd->add_option("--tol-zero", o.tol_zero, "matrix-norm zero test");
  cmd->add_option("--seed", o.seed, "seed for randomized strategies");
  cmd->add_option("--format", o.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--full", o.full, "include matrices in JSON output");
  cmd->add_option("--strategy", o.strategy, "minimal family strategy: generic or recursive")
      ->check(CLI::IsMember({"generic", "recursive"}));
  cmd->add_option("--link-method", o.link_method, "link detection: corner, subset or signature")
      ->check(CLI::IsMember({"corner", "subset", "signature"}));
  cmd->add_option("--threads", o.threads, "thread count hint for the linear algebra backend");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noise commutant structure toolkit"};
  app.require_subcommand(1);

  Options analyze_opts;
  CLI::App* cmd_analyze = app.add_subcommand(
      "analyze", "compute the commutant and its block structure for a channel");
  add_common_options(cmd_analyze, analyze_opts);

  Options verify_opts;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "re-derive every structural identity and run noiseless round trips");
  add_common_options(cmd_verify, verify_opts);
  cmd_verify->add_option("--trials", verify_opts.trials, "random round-trip trials per component")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--repetitions", verify_opts.repetitions,
                         "channel applications per round trip");

  CLI::App* cmd_list = app.add_subcommand("list-builtins", "list built-in channel families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_list->parsed()) return run_list_builtins();
    if (cmd_analyze->parsed()) {
      Eigen::setNbThreads(analyze_opts.threads);
      return run_analysis(analyze_opts, false);
    }
    Eigen::setNbThreads(verify_opts.threads);
    return run_analysis(verify_opts, true);
  } catch (const ncomm::NonUnitalChannelError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
