#ifndef SIGNCOUNT_CLI_HPP
#define SIGNCOUNT_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "signcount/format.hpp"
#include "signcount/optimality.hpp"
#include "signcount/oracle.hpp"
#include "signcount/polysys.hpp"
#include "signcount/sign.hpp"
#include "signcount/subgradient.hpp"
#include "signcount/transition.hpp"
#include "signcount/verify.hpp"

namespace signcount::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 42;

using Json = nlohmann::ordered_json;

inline const char *kHelpFooter = R"(Examples:
  eval --x=-24,-30,19,14,0                       c, t, l, norms, index sets, local class
  eval --x=1,0,-2 --xstar=0,5,0 --radius=0.1      subgradient membership and quotient probe
  eval --x=1,1 --d=0,-2 --ky=0.5 --kx=1           decoupled gap and qhat
  verify ft_inequality_n4                         exhaustive sweep (see verify --list)
  profile --x=-1,1,1,0,-1,0,0 --d=0,74,75,0,-40,-50,0 --kx=1
  enum --n=4 --format=csv                         81-row t table
  check-1d --c1=-4.8 --sigma=1 --grid=10000       one-dimensional condition check
  sphere --dim=2 --resolution=360                 lambda_2 surface CSV
  polysys --z=1,-1,1,-1 --format=plain            four-dimensional polynomial system
  feascheck --all                                 lattice feasibility for all 81 candidates
Exit codes: 0 success, 1 verification failure, 2 usage error.)";

inline Json vector_json(std::span<const double> v) {
  Json arr = Json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

inline std::vector<std::size_t> one_based(const std::vector<std::size_t> &idx) {
  std::vector<std::size_t> out;
  for (std::size_t i : idx) out.push_back(i + 1);
  return out;
}

inline SignVector parse_sign_vector(const std::string &text) {
  std::vector<int> entries;
  for (double v : parse_vector(text)) {
    if (v != -1.0 && v != 0.0 && v != 1.0) throw std::invalid_argument("sign vector entries must be -1, 0 or 1");
    entries.push_back(static_cast<int>(v));
  }
  return SignVector(std::move(entries));
}

struct Options {
  std::string topo = "circular";
  std::string out_path;
  std::string format;
  std::uint64_t seed = kDefaultSeed;

  // eval / profile
  std::string x, d, xstar;
  double k = 0.5;
  std::optional<double> ky, kx_gap, eps;
  double radius = 0.1;
  std::size_t samples = 4096;
  double kx = 1.0;
  double step = 1.0 / 200.0;

  // verify
  std::string oracle;
  bool list = false;

  // enum
  std::size_t n = 4;
  std::optional<int> slice;

  // check-1d
  double c1 = -4.8;
  double sigma = 1.0;
  std::size_t grid = 10000;
  double tol = 1e-6;
  bool full_interval = false;

  // sphere
  int dim = 2;
  std::optional<std::size_t> resolution;

  // polysys / feascheck
  std::string z;
  std::string mu;
  bool all = false;
};

inline Json eval_report(const Options &o) {
  const RealVector x = parse_vector(o.x);
  const Topology topo = parse_topology(o.topo);
  const SignVector s = SignVector::of(x);
  Json j;
  j["c"] = count_nonzero(x);
  j["t"] = sign_changes(s, topo);
  j["topology"] = to_string(topo);
  j["sign"] = s.entries();
  const IndexSets sets = index_sets(x);
  j["index_sets"] = {{"parallel", one_based(sets.parallel)}, {"orthogonal", one_based(sets.orthogonal)}};
  j["k"] = o.k;
  j["l"] = vector_json(transition_map(s, o.k, topo).values);
  j["norm_sq_l"] = norm_sq_l(s, o.k, topo);
  j["norm_sq_l_half"] = coupled_subgradient_value(x, topo);
  const TransitionCounts counts = transition_counts(s, topo);
  j["weak"] = counts.weak;
  j["flips"] = counts.flips;
  if (topo == Topology::Circular) j["hadamard_norm_sq"] = hadamard_norm_sq(x, o.k);
  if (count_nonzero(x) > 0) j["sign_minorant_gap"] = sign_minorant_gap(x);
  if (o.eps) j["smoothed_t"] = smoothed_sign_changes(x, SmoothingParams(*o.eps), topo);
  const LocalClass cls = classify_point(x, topo);
  j["local_class"] = to_string(cls.label);
  j["frechet"] = cls.frechet;
  j["reachable"] = cls.reachable.size();
  if (x.size() == 2) {
    Json hess;
    for (auto [branch, name] : {std::pair{HessianBranch::Plus, "plus"}, std::pair{HessianBranch::Minus, "minus"}}) {
      const Hessian2 h = hessian_l2(x, branch);
      const auto ev = eigenvalues(h);
      hess[name] = {{"matrix", {{h.a11, h.a12}, {h.a12, h.a22}}}, {"two_lambda", {2.0 * ev[0], 2.0 * ev[1]}}};
    }
    j["hessian"] = hess;
  }
  if (!o.xstar.empty()) {
    const RealVector xstar = parse_vector(o.xstar);
    j["is_subgradient_of_c"] = is_subgradient_of_c(x, xstar);
    const ProbeReport probe = frechet_inequality_probe(x, xstar, o.samples, o.radius, o.seed);
    j["probe"] = {{"radius", o.radius}, {"evaluated", probe.evaluated}, {"min_quotient", probe.min_quotient},
                  {"argmin", vector_json(probe.argmin)}};
  }
  if (o.ky || o.kx_gap) {
    if (!o.ky || !o.kx_gap) throw std::invalid_argument("--ky and --kx must be given together");
    const GapParams p(*o.ky, *o.kx_gap);
    const RealVector d = o.d.empty() ? RealVector(x.size(), 0.0) : parse_vector(o.d);
    const RealVector moved = add(x, d);
    j["ft_gap"] = ft_gap(x, d, p, topo);
    j["t_moved"] = sign_changes(moved, topo);
    j["qhat_gap"] = qhat_gap(x, p, topo);
  }
  return j;
}

inline void write_output(const Options &o, const std::string &text, std::ostream &out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file " + o.out_path);
  file << text;
}

inline std::string grid_csv(const GridTable &table, std::optional<int> slice) {
  std::string out;
  for (std::size_t i = 0; i < table.n; ++i) out += "z" + std::to_string(i + 1) + ",";
  out += "t\n";
  for (const auto &row : slice ? table.slice(*slice) : table.rows) {
    out += join_numbers(row.pattern.entries()) + "," + std::to_string(row.t) + "\n";
  }
  return out;
}

inline Json grid_summary(const GridTable &table) {
  Json j;
  j["n"] = table.n;
  j["topology"] = to_string(table.topology);
  j["rows"] = table.rows.size();
  Json hist = Json::object();
  for (auto [t, count] : table.histogram()) hist[std::to_string(t)] = count;
  j["histogram"] = hist;
  Json slices = Json::object();
  for (int z1 : {-1, 0, 1}) {
    Json h = Json::object();
    std::map<std::size_t, std::size_t> counts;
    for (const auto &row : table.slice(z1)) ++counts[row.t];
    for (auto [t, count] : counts) h[std::to_string(t)] = count;
    slices[std::to_string(z1)] = h;
  }
  j["slices"] = slices;
  Json sym = Json::object();
  for (std::size_t th = 0; th <= table.n; ++th) sym[std::to_string(th)] = center_symmetry_check(table, th);
  j["symmetric_above_threshold"] = sym;
  return j;
}

inline Json condition_json(const ConditionReport &r) {
  return {{"interval", {r.lo, r.hi}},
          {"grid_points", r.grid_points},
          {"tolerance", r.tolerance},
          {"min_residual", r.min_residual},
          {"argmin", r.argmin},
          {"violations", r.violations},
          {"pass", r.pass}};
}

/// Runs the command line; output goes to `out` (or --out), diagnostics to `err`.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Sign counting, sign change counting and their generalized subgradients", "signcount"};
  app.footer(kHelpFooter);
  app.require_subcommand(1);
  Options o;
  auto add_common = [&o](CLI::App *sub) {
    sub->add_option("--topo", o.topo, "circular or linear")->check(CLI::IsMember({"circular", "linear"}));
    sub->add_option("--out", o.out_path, "write output to this file");
  };

  CLI::App *eval = app.add_subcommand("eval", "c, t, l and related quantities for one vector");
  eval->add_option("--x", o.x, "comma-separated vector")->required();
  eval->add_option("--k", o.k, "transition parameter");
  eval->add_option("--xstar", o.xstar, "candidate subgradient of c");
  eval->add_option("--radius", o.radius, "probe radius")->check(CLI::PositiveNumber);
  eval->add_option("--samples", o.samples, "probe samples");
  eval->add_option("--d", o.d, "direction for the decoupled gap");
  eval->add_option("--ky", o.ky, "k_y, 0 < |k_y| <= 1/2");
  eval->add_option("--kx", o.kx_gap, "k_x, |k_x| >= 1/2");
  eval->add_option("--eps", o.eps, "smoothing epsilon");
  eval->add_option("--seed", o.seed, "probe seed");
  add_common(eval);

  CLI::App *verify = app.add_subcommand("verify", "run a named exhaustive oracle");
  verify->add_option("oracle", o.oracle, "oracle name");
  verify->add_flag("--list", o.list, "list oracle names");
  verify->add_option("--seed", o.seed, "seed for random sweeps");
  add_common(verify);

  CLI::App *profile = app.add_subcommand("profile", "k-profile of the decoupled gap as CSV `k,gap`");
  profile->add_option("--x", o.x, "base point")->required();
  profile->add_option("--d", o.d, "direction (default 0)");
  profile->add_option("--kx", o.kx, "k_x, |k_x| >= 1/2");
  profile->add_option("--step", o.step, "k step over (0, 1/2]");
  profile->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_common(profile);

  CLI::App *enumerate = app.add_subcommand("enum", "t over all 3^n sign patterns");
  enumerate->add_option("--n", o.n, "dimension in [2, 12]");
  enumerate->add_option("--slice", o.slice, "only rows with z1 equal to this value");
  enumerate->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"csv", "json"}));
  add_common(enumerate);

  CLI::App *check1d = app.add_subcommand("check-1d", "one-dimensional sufficient condition check");
  check1d->add_option("--c1", o.c1, "candidate minimizer");
  check1d->add_option("--sigma", o.sigma, "sigma >= 0")->check(CLI::NonNegativeNumber);
  check1d->add_option("--grid", o.grid, "grid points (>= 100)");
  check1d->add_option("--tol", o.tol, "tolerance");
  check1d->add_flag("--full-interval", o.full_interval, "also report [-2pi, 2pi]");
  check1d->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"csv", "json"}));
  add_common(check1d);

  CLI::App *sphere = app.add_subcommand("sphere", "2-D / 3-D multiplier surfaces as CSV");
  sphere->add_option("--dim", o.dim, "2 or 3")->check(CLI::IsMember({2, 3}));
  sphere->add_option("--resolution", o.resolution, "angles per axis (>= 16)");
  add_common(sphere);

  CLI::App *poly = app.add_subcommand("polysys", "four-dimensional polynomial system");
  poly->add_option("--z", o.z, "sign vector of dimension 4")->required();
  poly->add_option("--mu", o.mu, "integer multipliers to substitute");
  poly->add_option("--format", o.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
  add_common(poly);

  CLI::App *feas = app.add_subcommand("feascheck", "lattice-direction feasibility of the multiplier system");
  auto *zopt = feas->add_option("--z", o.z, "sign vector of dimension 4");
  auto *allopt = feas->add_flag("--all", o.all, "all 81 candidates");
  zopt->excludes(allopt);
  add_common(feas);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      write_output(o, eval_report(o).dump() + "\n", out);
      return kExitOk;
    }
    if (verify->parsed()) {
      if (o.list) {
        std::string text;
        for (const auto &name : list_oracles()) text += name + "\n";
        write_output(o, text, out);
        return kExitOk;
      }
      if (o.oracle.empty()) throw std::invalid_argument("verify: oracle name required (see --list)");
      const VerifyReport rep = verify_derived(o.oracle, o.seed);
      Json j{{"oracle", rep.name}, {"pass", rep.passed}, {"checked", rep.checked}};
      if (!rep.passed) j["counterexample"] = rep.counterexample;
      write_output(o, j.dump() + "\n", out);
      return rep.passed ? kExitOk : kExitFailed;
    }
    if (profile->parsed()) {
      const RealVector x = parse_vector(o.x);
      const RealVector d = o.d.empty() ? RealVector(x.size(), 0.0) : parse_vector(o.d);
      const KProfile prof = k_profile(x, d, o.kx, parse_topology(o.topo));
      if (o.format == "json") {
        Json j{{"constant", prof.constant()}, {"quad_coeff", prof.quad_coeff()}, {"offset", prof.offset()},
               {"weak", prof.weak},           {"flips", prof.flips},            {"k_x", prof.k_x}};
        write_output(o, j.dump() + "\n", out);
      } else {
        std::string text = "k,gap\n";
        for (const auto &row : sample_profile(prof, o.step)) {
          text += format_number(row.k) + "," + format_number(row.gap) + "\n";
        }
        write_output(o, text, out);
      }
      return kExitOk;
    }
    if (enumerate->parsed()) {
      const GridTable table = enumerate_grid(o.n, parse_topology(o.topo));
      if (o.slice && (*o.slice < -1 || *o.slice > 1)) throw std::invalid_argument("--slice must be -1, 0 or 1");
      if (o.format == "csv") {
        write_output(o, grid_csv(table, o.slice), out);
      } else {
        write_output(o, grid_summary(table).dump() + "\n", out);
      }
      return kExitOk;
    }
    if (check1d->parsed()) {
      const OneDProblem prob{o.c1, o.sigma};
      if (o.format == "csv") {
        write_output(o, oned_csv(prob, o.grid), out);
        return kExitOk;
      }
      const ConditionReport rep = oned_condition_check(prob, o.grid, o.tol);
      Json j;
      j["c1"] = o.c1;
      j["sigma"] = o.sigma;
      j["K"] = prob.level();
      j["left_interval"] = condition_json(rep);
      if (o.full_interval) {
        j["full_interval"] = condition_json(oned_condition_check(prob, o.grid, o.tol, -2.0 * std::numbers::pi,
                                                                 2.0 * std::numbers::pi));
      }
      j["global_min"] = oned_global_min(std::max<std::size_t>(o.grid, 10000));
      j["pass"] = rep.pass;
      write_output(o, j.dump() + "\n", out);
      return rep.pass ? kExitOk : kExitFailed;
    }
    if (sphere->parsed()) {
      const SurfaceDim which = o.dim == 2 ? SurfaceDim::Two : SurfaceDim::Three;
      const std::size_t res = o.resolution.value_or(o.dim == 2 ? 360 : 64);
      write_output(o, condition_surface_csv(which, res), out);
      return kExitOk;
    }
    if (poly->parsed()) {
      const SignVector z = parse_sign_vector(o.z);
      std::optional<std::array<std::int64_t, 4>> mu;
      if (!o.mu.empty()) {
        const RealVector values = parse_vector(o.mu);
        if (values.size() != 4) throw std::invalid_argument("--mu needs 4 entries");
        std::array<std::int64_t, 4> m{};
        for (std::size_t i = 0; i < 4; ++i) {
          if (values[i] != std::floor(values[i])) throw std::invalid_argument("--mu entries must be integers");
          m[i] = static_cast<std::int64_t>(values[i]);
        }
        mu = m;
      }
      const PolySystem sys = build_4d_system(z, mu);
      write_output(o, export_system(sys, o.format == "json" ? ExportFormat::Json : ExportFormat::Plain), out);
      return kExitOk;
    }
    if (feas->parsed()) {
      if (o.all) {
        std::size_t infeasible = 0, feasible = 0;
        for_each_pattern(4, [&](const SignVector &z) {
          (finite_direction_feasibility(z).feasible ? feasible : infeasible) += 1;
        });
        write_output(o, Json{{"infeasible", infeasible}, {"feasible", feasible}}.dump() + "\n", out);
        return kExitOk;
      }
      if (o.z.empty()) throw std::invalid_argument("feascheck: give --z or --all");
      const SignVector z = parse_sign_vector(o.z);
      const FeasibilityResult res = finite_direction_feasibility(z);
      write_output(o, to_json(res, build_feasibility_problem(z)).dump() + "\n", out);
      return kExitOk;
    }
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace signcount::cli

#endif  // SIGNCOUNT_CLI_HPP
