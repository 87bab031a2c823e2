#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "toyscatter/toyscatter.hpp"

namespace toyscatter::cli {

namespace {

/// A cross-method disagreement; exit code 1.
class Inconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceArgs {
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::optional<std::string> input;

  void attach(CLI::App* cmd) {
    cmd->add_option("--a", a, "Comma-separated type-A speeds (30,20 or 1/3,0.5)");
    cmd->add_option("--b", b, "Comma-separated type-B speeds");
    cmd->add_option("--input", input, "JSON instance file {\"a\": [...], \"b\": [...]}");
  }

  [[nodiscard]] Instance load() const {
    const bool inline_given = a.has_value() || b.has_value();
    if (inline_given && input) throw InvalidInput("give either --a/--b or --input, not both");
    if (input) {
      std::ifstream f(*input);
      if (!f) throw InvalidInput("cannot read instance file '" + *input + "'");
      const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
      return parse_instance(text);
    }
    if (!inline_given) throw InvalidInput("no instance given: use --a/--b or --input");
    return Instance(parse_speed_list(a.value_or("")), parse_speed_list(b.value_or("")));
  }
};

enum class Format { json, plain };

struct Common {
  std::string format = "json";

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "plain"}));
  }
  [[nodiscard]] Format fmt() const { return format == "plain" ? Format::plain : Format::json; }
};

void emit(std::ostream& out, const Json& j, Format fmt) {
  if (fmt == Format::json) {
    out << j.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    out << key << ' ' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  InstanceArgs instance;
  Common common;
  std::string method = "auto";
  std::optional<std::string> epsilon;
};

Json solve(const SolveArgs& args) {
  const Instance inst = args.instance.load();
  const GroupedInstance g = group(inst);
  std::string method = args.method;
  if (method == "auto") {
    const bool repeats = g.a_groups().size() != inst.m();
    method = repeats ? "series" : "distinct";
  }

  if (method == "recursive") {
    MethodReport rep{p_a_wins_recursive(inst), Method::recursive, {}, std::nullopt};
    return to_json(rep);
  }
  if (method == "distinct") return to_json(p_a_wins_distinct(inst));
  if (method == "series") return to_json(p_a_wins_series(g));
  if (method == "closed-form") return to_json(p_a_wins_closed_form(g));

  // epsilon
  const Rational eps = args.epsilon ? Rational::parse(*args.epsilon) : default_epsilon(g);
  const MethodReport approx = p_a_wins_epsilon(g, eps);
  const Rational reference = p_a_wins_series(g).value.value();
  Json j = to_json(approx);
  j["reference"] = reference.fraction();
  j["error"] = (approx.value.value() - reference).abs().decimal(kDecimalDigits);
  return j;
}

// ---------------------------------------------------------------- crosscheck

struct CrosscheckArgs {
  InstanceArgs instance;
  Common common;
  std::uint64_t trials = 200000;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  std::string policy = "frontmost";
  unsigned threads = 1;
};

Json method_row(std::string_view name, const Rational& value, bool agrees, std::string_view check) {
  Json row;
  row["method"] = std::string(name);
  row["value"] = value.fraction();
  row["decimal"] = value.decimal(kDecimalDigits);
  row["check"] = std::string(check);
  row["agrees"] = agrees;
  return row;
}

Json stochastic_row(std::string_view name, double estimate, double std_error, bool agrees) {
  Json row;
  row["method"] = std::string(name);
  row["estimate"] = estimate;
  row["stdError"] = std_error;
  row["check"] = "4-sigma";
  row["agrees"] = agrees;
  return row;
}

// Coupling bound: each collision's survival probability moves by at most
// half the largest relative speed shift, and a run has at most N - 1
// collisions, so |p_eps - p| <= N * (N eps / min speed).
Rational epsilon_tolerance(const Instance& inst, const Rational& eps) {
  Rational min_speed = inst.m() ? inst.a().front() : inst.b().front();
  for (const auto& s : inst.a()) min_speed = std::min(min_speed, s);
  for (const auto& s : inst.b()) min_speed = std::min(min_speed, s);
  const Rational n(static_cast<long>(inst.particle_count()));
  return n * n * eps / min_speed;
}

std::pair<Json, std::optional<std::string>> crosscheck(const CrosscheckArgs& args) {
  const Instance inst = args.instance.load();
  if (inst.m() == 0 || inst.n() == 0) throw InvalidInput("crosscheck needs particles on both sides");
  const GroupedInstance g = group(inst);
  const Policy policy = parse_policy(args.policy);

  Json rows = Json::array();
  std::optional<std::string> first_failure;
  auto note = [&](const Json& row) {
    if (!row["agrees"].get<bool>() && !first_failure) {
      first_failure = row["method"].get<std::string>() + " disagrees with the recursive value";
    }
    rows.push_back(row);
  };

  const Rational exact = p_a_wins_recursive(inst).value();
  note(method_row("recursive", exact, true, "reference"));

  const bool distinct_a = g.a_groups().size() == inst.m();
  const MethodReport residue = distinct_a ? p_a_wins_distinct(inst) : p_a_wins_series(g);
  note(method_row(method_name(residue.method), residue.value.value(), residue.value.value() == exact, "exact"));

  const Rational eps = default_epsilon(g);
  const Rational approx = p_a_wins_epsilon(g, eps).value.value();
  Json eps_row = method_row("epsilon", approx, (approx - exact).abs() <= epsilon_tolerance(inst, eps), "bound");
  eps_row["epsilon"] = eps.fraction();
  note(eps_row);

  const SimReport sim = simulate(inst, {.trials = args.trials, .seed = args.seed, .policy = policy, .threads = args.threads});
  note(stochastic_row("montecarlo", sim.estimate, sim.std_error, sim.agrees_with(exact)));

  const VolumeEstimate vol = estimate_volume(inst, args.samples, args.seed, args.threads);
  note(stochastic_row("hypervolume", vol.estimate, vol.std_error, vol.agrees_with(exact)));

  Json j;
  j["instance"] = to_json(inst);
  j["methods"] = std::move(rows);
  j["consistent"] = !first_failure.has_value();
  return {std::move(j), first_failure};
}

void emit_crosscheck(std::ostream& out, const Json& j, Format fmt) {
  if (fmt == Format::json) {
    out << j.dump() << '\n';
    return;
  }
  for (const auto& row : j["methods"]) {
    out << row["method"].get<std::string>() << ' ';
    if (row.contains("value")) {
      out << row["value"].get<std::string>() << ' ' << row["decimal"].get<std::string>();
    } else {
      out << row["estimate"].dump() << " +- " << row["stdError"].dump();
    }
    out << ' ' << (row["agrees"].get<bool>() ? "ok" : "MISMATCH") << '\n';
  }
  out << "consistent " << (j["consistent"].get<bool>() ? "yes" : "no") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and stochastic solvers for the one-dimensional annihilation model"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "toyscatter 0.1.0");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Exact P(A wins)");
  solve_args.instance.attach(solve_cmd);
  solve_args.common.attach(solve_cmd);
  solve_cmd->add_option("--method", solve_args.method, "Solver")
      ->check(CLI::IsMember({"auto", "recursive", "distinct", "series", "epsilon", "closed-form"}));
  solve_cmd->add_option("--epsilon", solve_args.epsilon, "Perturbation for --method epsilon (default: automatic)");

  InstanceArgs sim_instance;
  Common sim_common;
  SimConfig sim_cfg;
  std::string sim_policy = "frontmost";
  std::size_t permutations = 1;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of P(A wins)");
  sim_instance.attach(sim_cmd);
  sim_common.attach(sim_cmd);
  sim_cmd->add_option("--trials", sim_cfg.trials, "Number of trials")->capture_default_str();
  sim_cmd->add_option("--seed", sim_cfg.seed, "RNG seed")->capture_default_str();
  sim_cmd->add_option("--policy", sim_policy, "frontmost or random-adjacent")->capture_default_str();
  sim_cmd->add_option("--threads", sim_cfg.threads, "Worker threads (results do not depend on it)");
  sim_cmd->add_option("--permutations", permutations, "Also simulate this many reorderings of the instance");

  InstanceArgs vol_instance;
  Common vol_common;
  std::uint64_t vol_samples = 1000000;
  std::uint64_t vol_seed = 1;
  unsigned vol_threads = 1;
  auto* vol_cmd = app.add_subcommand("volume", "Hypercube-volume estimate of P(A wins)");
  vol_instance.attach(vol_cmd);
  vol_common.attach(vol_cmd);
  vol_cmd->add_option("--samples", vol_samples, "Number of sample points")->capture_default_str();
  vol_cmd->add_option("--seed", vol_seed, "RNG seed")->capture_default_str();
  vol_cmd->add_option("--threads", vol_threads, "Worker threads (results do not depend on it)");

  InstanceArgs rel_instance;
  Common rel_common;
  auto* rel_cmd = app.add_subcommand("relate", "Does group --a beat, match, or lose to group --b?");
  rel_instance.attach(rel_cmd);
  rel_common.attach(rel_cmd);

  std::string curve_speed = "1";
  std::size_t curve_points = 100;
  std::string curve_format = "plain";
  auto* curve_cmd = app.add_subcommand("curve", "Pairs (x, y) matched with one particle, as CSV");
  curve_cmd->add_option("--speed", curve_speed, "Speed of the single particle")->capture_default_str();
  curve_cmd->add_option("--points", curve_points, "Number of points")->capture_default_str();
  curve_cmd->add_option("--format", curve_format, "plain (CSV) or json")->check(CLI::IsMember({"json", "plain"}));

  std::string cyc_p;
  std::string cyc_q;
  std::string cyc_r;
  Common cyc_common;
  auto* cyc_cmd = app.add_subcommand("cycle", "Check whether P beats Q, Q beats R, and R beats P");
  cyc_cmd->add_option("--p", cyc_p, "Group P speeds")->required();
  cyc_cmd->add_option("--q", cyc_q, "Group Q speeds")->required();
  cyc_cmd->add_option("--r", cyc_r, "Group R speeds")->required();
  cyc_common.attach(cyc_cmd);

  CrosscheckArgs cc;
  auto* cc_cmd = app.add_subcommand("crosscheck", "Run every method and check that they agree");
  cc.instance.attach(cc_cmd);
  cc.common.attach(cc_cmd);
  cc_cmd->add_option("--trials", cc.trials, "Monte Carlo trials")->capture_default_str();
  cc_cmd->add_option("--samples", cc.samples, "Hypervolume samples")->capture_default_str();
  cc_cmd->add_option("--seed", cc.seed, "RNG seed")->capture_default_str();
  cc_cmd->add_option("--policy", cc.policy, "Monte Carlo policy")->capture_default_str();
  cc_cmd->add_option("--threads", cc.threads, "Worker threads");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      emit(out, solve(solve_args), solve_args.common.fmt());
    } else if (sim_cmd->parsed()) {
      sim_cfg.policy = parse_policy(sim_policy);
      const Instance inst = sim_instance.load();
      if (permutations <= 1) {
        emit(out, to_json(simulate(inst, sim_cfg)), sim_common.fmt());
      } else {
        Json arr = Json::array();
        for (const auto& rep : order_invariance_probe(inst, sim_cfg, permutations)) arr.push_back(to_json(rep));
        out << arr.dump() << '\n';
      }
    } else if (vol_cmd->parsed()) {
      emit(out, to_json(estimate_volume(vol_instance.load(), vol_samples, vol_seed, vol_threads)), vol_common.fmt());
    } else if (rel_cmd->parsed()) {
      const Instance inst = rel_instance.load();
      emit(out, to_json(relate(inst.a(), inst.b())), rel_common.fmt());
    } else if (curve_cmd->parsed()) {
      const Rational speed = Rational::parse(curve_speed);
      const auto pts = matching_curve_single_vs_pair(speed, curve_grid(speed, curve_points));
      if (curve_format == "json") {
        Json arr = Json::array();
        for (const auto& pt : pts) arr.push_back(Json{{"x", pt.x.fraction()}, {"y", pt.y.fraction()}});
        out << arr.dump() << '\n';
      } else {
        write_curve_csv(out, pts);
      }
    } else if (cyc_cmd->parsed()) {
      const auto w = verify_cycle(parse_speed_list(cyc_p), parse_speed_list(cyc_q), parse_speed_list(cyc_r));
      emit(out, to_json(w), cyc_common.fmt());
    } else if (cc_cmd->parsed()) {
      auto [report, failure] = crosscheck(cc);
      emit_crosscheck(out, report, cc.common.fmt());
      if (failure) throw Inconsistency(*failure);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Inconsistency& e) {
    err << "inconsistent: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInconsistent;
  }
  return kOk;
}

}  // namespace toyscatter::cli
