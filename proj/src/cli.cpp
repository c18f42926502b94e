#include "plethax/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "plethax/expansion.hpp"
#include "plethax/io.hpp"
#include "plethax/process.hpp"

namespace plethax {

std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("PLETHAX_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("PLETHAX_BUDGET is not a nonnegative integer: ") + raw);
  }
}

namespace {

struct ExpandArgs {
  std::string mu;
  int r = 0;
  int m = 0;
  std::string rho;
  std::string nu;
  std::string format = "plain";
};

struct SgnArgs {
  std::string outer;
  std::string inner;
  int r = 1;
  std::string format = "plain";
};

struct TraceArgs {
  std::string abacus;
  std::string mu;
  int n_beads = 0;
  bool canonical = false;
  std::string beta;
  int r = 1;
  std::string format = "plain";
};

struct VerifyArgs {
  std::string mu;
  int r = 1;
  int m = 1;
  int n_vars = 0;
  std::string mode = "symbolic";
  std::uint64_t seed = 0;
  std::size_t points = default_eval_points;
  std::string format = "plain";
};

int cmd_expand(const ExpandArgs& a, std::ostream& out) {
  const OutputFormat format = parse_format(a.format);
  const Partition mu = parse_partition(a.mu);
  SchurExpansion result;
  Json inputs{{"mu", to_json(mu)}};
  const bool iterated = !a.rho.empty() || !a.nu.empty();
  if (iterated) {
    if (a.r != 0 || a.m != 0) throw std::invalid_argument("use either --r/--m or --rho/--nu, not both");
    const Partition rho = parse_partition(a.rho);
    const Partition nu = parse_partition(a.nu);
    result = pmn_expand_iterated(mu, rho, nu);
    inputs["rho"] = to_json(rho);
    inputs["nu"] = to_json(nu);
  } else {
    if (a.r < 1 || a.m < 1) throw std::invalid_argument("--r and --m must both be at least 1");
    result = pmn_expand(mu, a.r, a.m);
    inputs["r"] = a.r;
    inputs["m"] = a.m;
  }
  switch (format) {
    case OutputFormat::plain: out << format_plain(result) << "\n"; break;
    case OutputFormat::latex: out << format_latex(result) << "\n"; break;
    case OutputFormat::json: out << make_record("expand", std::move(inputs), to_json(result)).dump(2) << "\n"; break;
  }
  return kExitOk;
}

int cmd_sgn(const SgnArgs& a, std::ostream& out) {
  const OutputFormat format = parse_format(a.format);
  if (a.r < 1) throw std::invalid_argument("--r must be at least 1");
  const SkewPartition skew(parse_partition(a.outer), parse_partition(a.inner));
  const auto chain = r_decompose(skew, a.r);
  const int sign = chain ? chain->sign() : 0;
  if (format == OutputFormat::json) {
    Json result{{"sign", sign}, {"chain", chain ? to_json(*chain) : Json(nullptr)}};
    out << make_record("sgn", {{"outer", to_json(skew.outer())}, {"inner", to_json(skew.inner())}, {"r", a.r}},
                       std::move(result))
               .dump(2)
        << "\n";
    return kExitOk;
  }
  if (format == OutputFormat::latex) {
    out << "\\operatorname{sgn}_{" << a.r << "}(" << skew.outer().to_string() << "/" << skew.inner().to_string()
        << ") = " << sign << "\n";
    return kExitOk;
  }
  out << (sign > 0 ? "+1" : sign < 0 ? "-1" : "0") << "\n";
  if (chain) out << format_chain(*chain);
  return kExitOk;
}

int cmd_trace(const TraceArgs& a, std::ostream& out) {
  const OutputFormat format = parse_format(a.format);
  if (format == OutputFormat::latex) throw std::invalid_argument("trace supports plain and json output");
  if (a.r < 1) throw std::invalid_argument("--r must be at least 1");
  const bool from_mu = a.canonical || a.n_beads != 0;
  if (from_mu == !a.abacus.empty())
    throw std::invalid_argument("give either --abacus or --mu/--N --canonical");
  const LabelledAbacus w = from_mu ? canonical_abacus(parse_partition(a.mu), a.n_beads) : parse_abacus(a.abacus);
  const Composition beta = parse_composition(a.beta);
  const ProcessTrace trace = run_process(w, beta, a.r);

  if (format == OutputFormat::json) {
    Json result{{"steps", trace_records(trace)}};
    if (trace.successful()) {
      result["psi"] = to_pairs_string(std::get<Successful>(trace.outcome).final_abacus);
    } else {
      const auto [w2, beta2] = epsilon(w, beta, a.r);
      result["epsilon"] = {{"abacus", to_pairs_string(w2)}, {"beta", beta2.entries()}};
    }
    out << make_record("trace", {{"abacus", to_pairs_string(w)}, {"beta", beta.entries()}, {"r", a.r}},
                       std::move(result))
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << format_trace(trace);
  if (trace.successful()) {
    out << "psi: " << to_pairs_string(std::get<Successful>(trace.outcome).final_abacus) << "\n";
  } else {
    const auto [w2, beta2] = epsilon(w, beta, a.r);
    out << "epsilon: abacus=" << to_pairs_string(w2) << " beta=" << beta2.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const OutputFormat format = parse_format(a.format);
  if (format == OutputFormat::latex) throw std::invalid_argument("verify supports plain and json output");
  if (a.r < 1 || a.m < 1) throw std::invalid_argument("--r and --m must both be at least 1");
  const Partition mu = parse_partition(a.mu);
  const std::size_t bound = default_variable_count(mu, a.r, a.m);
  const std::size_t n = a.n_vars == 0 ? bound : static_cast<std::size_t>(a.n_vars);
  if (a.n_vars < 0 || n < bound)
    throw std::invalid_argument("--N " + std::to_string(a.n_vars) + " is below |mu| + r*m = " + std::to_string(bound));
  Json inputs{{"mu", to_json(mu)}, {"r", a.r}, {"m", a.m}, {"N", n}, {"mode", a.mode}};

  bool pass = false;
  Json result;
  std::string line;
  if (a.mode == "process") {
    const auto report = verify_process_identity(mu, a.r, a.m, static_cast<int>(n), budget_from_env(default_pair_budget));
    pass = report.pass;
    result = {{"pass", pass},
              {"unsuccessful", report.unsuccessful},
              {"successful", report.successful},
              {"target_abaci", report.target_abaci},
              {"first_failure", report.first_failure}};
    line = std::string(pass ? "PASS" : "FAIL") + " process N=" + std::to_string(n) +
           " unsuccessful=" + std::to_string(report.unsuccessful) + " successful=" + std::to_string(report.successful);
    if (!pass) line += " first failure: " + report.first_failure;
  } else {
    OracleMode mode;
    if (a.mode == "symbolic")
      mode = OracleMode::symbolic;
    else if (a.mode == "modular")
      mode = OracleMode::modular;
    else
      throw std::invalid_argument("unknown mode '" + a.mode + "'");
    const auto report = verify_against_oracle(mu, a.r, a.m, n, mode, a.seed, a.points);
    pass = report.pass;
    result = {{"pass", pass},
              {"checks", report.checks},
              {"expansion_terms", report.expansion_terms},
              {"first_discrepancy", report.first_discrepancy}};
    line = std::string(pass ? "PASS" : "FAIL") + " " + a.mode + " N=" + std::to_string(n);
    if (mode == OracleMode::modular) {
      inputs["seed"] = a.seed;
      inputs["points"] = a.points;
      line += " seed=" + std::to_string(a.seed) + " points=" + std::to_string(report.checks);
    } else {
      line += " terms=" + std::to_string(report.checks);
    }
    line += " expansion_terms=" + std::to_string(report.expansion_terms);
    if (!pass) line += " first discrepancy: " + report.first_discrepancy;
  }
  if (format == OutputFormat::json)
    out << make_record("verify", std::move(inputs), std::move(result)).dump(2) << "\n";
  else
    out << line << "\n";
  return pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur expansions of s_mu * (p_r o h_m) via labelled abaci"};
  app.name("plethax");
  app.require_subcommand(1);
  const std::string formats = "Output format: plain, json or latex";

  ExpandArgs ea;
  auto* expand = app.add_subcommand("expand", "Schur expansion of s_mu * (p_r o h_m) or s_mu * (p_rho o h_nu)");
  expand->add_option("--mu", ea.mu, "Partition mu, comma separated (empty for the empty partition)");
  expand->add_option("--r", ea.r, "Power r");
  expand->add_option("--m", ea.m, "Degree m");
  expand->add_option("--rho", ea.rho, "Partition rho for p_rho o h_nu");
  expand->add_option("--nu", ea.nu, "Partition nu for p_rho o h_nu");
  expand->add_option("--format", ea.format, formats);

  SgnArgs sa;
  auto* sgn = app.add_subcommand("sgn", "sgn_r of a skew partition and its border-strip chain");
  sgn->add_option("--outer", sa.outer, "Outer partition")->required();
  sgn->add_option("--inner", sa.inner, "Inner partition");
  sgn->add_option("--r", sa.r, "Strip length r")->required();
  sgn->add_option("--format", sa.format, formats);

  TraceArgs ta;
  auto* trace = app.add_subcommand("trace", "Run the bead-moving process on an abacus and composition");
  trace->add_option("--abacus", ta.abacus, "Abacus as pos:label pairs, e.g. 1:4,3:2");
  trace->add_option("--mu", ta.mu, "Shape of the canonical abacus");
  trace->add_option("--N", ta.n_beads, "Number of beads of the canonical abacus");
  trace->add_flag("--canonical", ta.canonical, "Start from the canonical abacus of --mu with --N beads");
  trace->add_option("--beta", ta.beta, "Composition beta, one entry per bead")->required();
  trace->add_option("--r", ta.r, "Move length r")->required();
  trace->add_option("--format", ta.format, "Output format: plain or json");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the expansion against an independent oracle");
  verify->add_option("--mu", va.mu, "Partition mu");
  verify->add_option("--r", va.r, "Power r")->required();
  verify->add_option("--m", va.m, "Degree m")->required();
  verify->add_option("--N", va.n_vars, "Number of variables (default |mu| + r*m)");
  verify->add_option("--mode", va.mode, "symbolic, modular or process");
  verify->add_option("--seed", va.seed, "Seed for modular evaluation points");
  verify->add_option("--points", va.points, "Evaluation points in modular mode");
  verify->add_option("--format", va.format, "Output format: plain or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "plethax: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*expand) return cmd_expand(ea, out);
    if (*sgn) return cmd_sgn(sa, out);
    if (*trace) return cmd_trace(ta, out);
    return cmd_verify(va, out);
  } catch (const std::exception& e) {
    err << "plethax: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace plethax
