#ifndef SIGNCOUNT_VERIFY_HPP
#define SIGNCOUNT_VERIFY_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "signcount/format.hpp"
#include "signcount/oracle.hpp"
#include "signcount/polysys.hpp"
#include "signcount/sign.hpp"
#include "signcount/subgradient.hpp"
#include "signcount/transition.hpp"

namespace signcount {

/// Outcome of a named brute-force sweep.
struct VerifyReport {
  VerifyReport() = default;
  explicit VerifyReport(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string counterexample;  // first failure, empty when passed

  void fail(std::string what) {
    if (passed) counterexample = std::move(what);
    passed = false;
  }
};

namespace reference {

// Counts differing adjacent signs by direct comparison; shares no code with
// transition_counts.
inline std::size_t sign_changes(const SignVector &s, Topology topo) {
  const std::size_t n = s.size();
  std::size_t t = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) t += s[i] != s[i + 1];
  if (topo == Topology::Circular) t += s[n - 1] != s[0];
  return t;
}

inline std::size_t flips(const SignVector &s, Topology topo) {
  const std::size_t n = s.size();
  std::size_t f = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (topo == Topology::Linear && i + 1 == n) break;
    const int a = s[i], b = s[(i + 1) % n];
    f += (a == 1 && b == -1) || (a == -1 && b == 1);
  }
  return f;
}

/// Eigenvalue pairs 2*Lambda of the displayed n = 2 curvature matrix, upper-sign
/// reading (branch +1/2), as centre +- radius. The lower-sign reading is the
/// negation, attained by branch -1/2 at the point -x.
struct EigenEntry {
  std::array<int, 2> point;
  double centre;
  double radius;
};

inline const std::vector<EigenEntry> &eigenvalue_table() {
  static const std::vector<EigenEntry> table{
      {{-1, -1}, -2.0, 5.0},
      {{0, 0}, 0.0, 1.0},
      {{1, 1}, 6.0, 11.0},
      {{-1, 0}, -1.0, std::sqrt(26.0)},
      {{0, -1}, -1.0, std::sqrt(26.0)},
      {{-1, 1}, 2.0, std::sqrt(41.0)},
      {{1, -1}, 2.0, std::sqrt(41.0)},
      {{0, 1}, 3.0, 3.0 * std::sqrt(2.0)},
      {{1, 0}, 3.0, 3.0 * std::sqrt(2.0)},
  };
  return table;
}

}  // namespace reference

inline std::string describe(const SignVector &s) { return "(" + join_numbers(s.entries()) + ")"; }

inline constexpr std::array<Topology, 2> kTopologies{Topology::Circular, Topology::Linear};
inline constexpr std::array<double, 4> kMinorK{0.1, 0.25, 0.4, 0.5};
inline constexpr std::array<double, 4> kMajorK{0.5, 0.75, 1.0, 2.0};
inline constexpr std::array<double, 3> kGapKy{0.1, 0.25, 0.5};
inline constexpr std::array<double, 4> kGapKx{0.5, 0.75, 1.0, 2.0};

/// ||l(x;+-1/2)||^2 = t exactly, ||l(x;k)||^2 <= t <= ||l(x;k')||^2 on the grids.
inline VerifyReport verify_bound_chain(std::size_t n) {
  VerifyReport rep{"bound_chain_n" + std::to_string(n)};
  for (Topology topo : kTopologies) {
    for_each_pattern(n, [&](const SignVector &s) {
      const double t = static_cast<double>(reference::sign_changes(s, topo));
      ++rep.checked;
      if (norm_sq_l(s, 0.5, topo) != t || norm_sq_l(s, -0.5, topo) != t) {
        rep.fail(describe(s) + " " + std::string(to_string(topo)) + ": ||l(x;+-1/2)||^2 != t");
      }
      for (double k : kMinorK) {
        if (norm_sq_l(s, k, topo) > t) rep.fail(describe(s) + ": minor bound fails at k=" + format_number(k));
      }
      for (double k : kMajorK) {
        if (norm_sq_l(s, k, topo) < t) rep.fail(describe(s) + ": major bound fails at k=" + format_number(k));
      }
    });
  }
  return rep;
}

/// count_nonzero(l(x;k)) = t for every k != 0 on the k grids.
inline VerifyReport verify_zero_set(std::size_t n) {
  VerifyReport rep{"zero_set_n" + std::to_string(n)};
  for (Topology topo : kTopologies) {
    for_each_pattern(n, [&](const SignVector &s) {
      const std::size_t t = reference::sign_changes(s, topo);
      for (double k : {0.1, 0.25, 0.4, 0.5, -0.5, 0.75, 1.0, 2.0}) {
        ++rep.checked;
        if (count_nonzero(transition_map(s, k, topo).values) != t) {
          rep.fail(describe(s) + ": zero set of l differs from J at k=" + format_number(k));
        }
      }
    });
  }
  return rep;
}

/// Hadamard form vs the closed form, every pattern plus `random_vectors` draws.
inline VerifyReport verify_hadamard(std::size_t n, std::size_t random_vectors = 1000, std::uint64_t seed = 42) {
  VerifyReport rep{"hadamard_n" + std::to_string(n)};
  constexpr double tol = 1e-12;
  auto check = [&](std::span<const double> x, double k) {
    ++rep.checked;
    const double a = hadamard_norm_sq(x, k);
    const double b = norm_sq_l(x, k, Topology::Circular);
    if (!(std::abs(a - b) <= tol)) {
      rep.fail("(" + join_numbers(x) + ") k=" + format_number(k) + ": " + format_number(a) + " vs " +
               format_number(b));
    }
  };
  for_each_pattern(n, [&](const SignVector &s) {
    const RealVector x = s.as_real();
    for (double k : {0.25, 0.5, 1.0}) check(x, k);
  });
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  std::uniform_int_distribution<int> zero_mask(0, 3);
  std::uniform_real_distribution<double> kdist(-2.0, 2.0);
  for (std::size_t r = 0; r < random_vectors; ++r) {
    RealVector x(n);
    for (double &v : x) v = zero_mask(rng) == 0 ? 0.0 : value(rng);
    check(x, kdist(rng));
  }
  return rep;
}

/// t(s') - t(s) >= ||l(s';k_y)||^2 - ||l(s;k_x)||^2 over all pattern pairs and
/// the 12 parameter tuples; also checks the coupled equality.
inline VerifyReport verify_ft_inequality(std::size_t n) {
  VerifyReport rep{"ft_inequality_n" + std::to_string(n)};
  std::vector<SignVector> patterns;
  for_each_pattern(n, [&](const SignVector &s) { patterns.push_back(s); });
  std::vector<GapParams> params;
  for (double ky : kGapKy) {
    for (double kx : kGapKx) params.emplace_back(ky, kx);
  }
  for (Topology topo : kTopologies) {
    std::vector<double> t(patterns.size());
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      t[i] = static_cast<double>(reference::sign_changes(patterns[i], topo));
    }
    for (std::size_t a = 0; a < patterns.size(); ++a) {
      for (std::size_t b = 0; b < patterns.size(); ++b) {
        const double dt = t[b] - t[a];
        const RealVector xa = patterns[a].as_real();
        const RealVector xb = patterns[b].as_real();
        RealVector d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = xb[i] - xa[i];
        for (const GapParams &p : params) {
          ++rep.checked;
          const double gap = ft_gap(xa, d, p, topo);
          if (dt < gap) {
            rep.fail(describe(patterns[a]) + " -> " + describe(patterns[b]) + " k_y=" + format_number(p.k_y) +
                     " k_x=" + format_number(p.k_x) + ": " + format_number(dt) + " < " + format_number(gap));
          }
        }
        if (coupled_subgradient_value(xb, topo) - coupled_subgradient_value(xa, topo) != dt) {
          rep.fail(describe(patterns[a]) + " -> " + describe(patterns[b]) + ": coupled equality fails");
        }
      }
    }
  }
  return rep;
}

/// qhat_gap = ft_gap(x, 0) = 4 (k_y^2 - k_x^2) flips(x) <= 0.
inline VerifyReport verify_qhat_identity(std::size_t n) {
  VerifyReport rep{"qhat_identity_n" + std::to_string(n)};
  for (Topology topo : kTopologies) {
    for_each_pattern(n, [&](const SignVector &s) {
      const RealVector x = s.as_real();
      const RealVector zero(n, 0.0);
      const double flips = static_cast<double>(reference::flips(s, topo));
      for (double ky : kGapKy) {
        for (double kx : kGapKx) {
          ++rep.checked;
          const GapParams p(ky, kx);
          const double q = qhat_gap(x, p, topo);
          const double expected = 4.0 * (ky * ky - kx * kx) * flips;
          if (std::abs(q - ft_gap(x, zero, p, topo)) > 1e-12 || std::abs(q - expected) > 1e-12 || q > 0.0) {
            rep.fail(describe(s) + " k_y=" + format_number(ky) + " k_x=" + format_number(kx) +
                     ": qhat=" + format_number(q) + " expected " + format_number(expected));
          }
        }
      }
    });
  }
  return rep;
}

inline VerifyReport verify_hessian_table(double tol = 1e-10) {
  VerifyReport rep{"hessian_table"};
  for (const auto &entry : reference::eigenvalue_table()) {
    const RealVector x{double(entry.point[0]), double(entry.point[1])};
    const RealVector neg{-x[0], -x[1]};
    const auto upper = eigenvalues(hessian_l2(x, HessianBranch::Plus));
    const auto lower = eigenvalues(hessian_l2(neg, HessianBranch::Minus));
    const std::array<double, 2> want_upper{entry.centre + entry.radius, entry.centre - entry.radius};
    const std::array<double, 2> want_lower{-entry.centre + entry.radius, -entry.centre - entry.radius};
    for (std::size_t i = 0; i < 2; ++i) {
      rep.checked += 2;
      if (std::abs(2.0 * upper[i] - want_upper[i]) > tol) {
        rep.fail("branch +1/2 at (" + join_numbers(x) + "): " + format_number(2.0 * upper[i]) + " vs " +
                 format_number(want_upper[i]));
      }
      if (std::abs(2.0 * lower[i] - want_lower[i]) > tol) {
        rep.fail("branch -1/2 at (" + join_numbers(neg) + "): " + format_number(2.0 * lower[i]) + " vs " +
                 format_number(want_lower[i]));
      }
    }
  }
  return rep;
}

/// t_eps <= t, |t_eps - t| <= 1e-6 at eps = 1e-9, nondecreasing as eps shrinks.
inline VerifyReport verify_smoothing(std::size_t n) {
  VerifyReport rep{"smoothing_n" + std::to_string(n)};
  const std::array<double, 3> eps{1.0, 1e-3, 1e-9};
  for (Topology topo : kTopologies) {
    for_each_pattern(n, [&](const SignVector &s) {
      const RealVector x = s.as_real();
      const double t = static_cast<double>(reference::sign_changes(s, topo));
      double prev = -1.0;
      for (double e : eps) {
        ++rep.checked;
        const double te = smoothed_sign_changes(x, SmoothingParams(e), topo);
        if (te > t || te < prev) rep.fail(describe(s) + ": smoothing order fails at eps=" + format_number(e));
        prev = te;
      }
      if (std::abs(prev - t) > 1e-6) rep.fail(describe(s) + ": t_eps not within 1e-6 of t at eps=1e-9");
    });
  }
  return rep;
}

/// n = 4 circular: t matches the reference, {t > 3} is closed under negation, t = 0
/// only on the three constant patterns and four full flips only at +-(1,-1,1,-1).
inline VerifyReport verify_grid_symmetry() {
  VerifyReport rep{"grid_symmetry_n4"};
  const GridTable table = enumerate_grid(4, Topology::Circular);
  rep.checked = table.rows.size();
  std::vector<SignVector> flat, alternating;
  for (const auto &row : table.rows) {
    if (row.t != reference::sign_changes(row.pattern, Topology::Circular)) rep.fail(describe(row.pattern) + ": t");
    if (row.t == 0) flat.push_back(row.pattern);
    if (reference::flips(row.pattern, Topology::Circular) == 4) alternating.push_back(row.pattern);
  }
  if (flat != std::vector<SignVector>{{-1, -1, -1, -1}, {0, 0, 0, 0}, {1, 1, 1, 1}}) {
    rep.fail("t = 0 away from the constant patterns");
  }
  if (alternating != std::vector<SignVector>{{-1, 1, -1, 1}, {1, -1, 1, -1}}) {
    rep.fail("four full flips away from +-(1,-1,1,-1)");
  }
  if (!center_symmetry_check(table, 3)) rep.fail("{t > 3} is not closed under negation");
  return rep;
}

/// Every z in {-1,0,1}^4 is infeasible with a certificate that re-checks.
inline VerifyReport verify_feasibility_all() {
  VerifyReport rep{"feasibility_all"};
  for_each_pattern(4, [&](const SignVector &z) {
    ++rep.checked;
    const FeasibilityResult res = finite_direction_feasibility(z);
    if (res.feasible) {
      rep.fail(describe(z) + ": feasible");
      return;
    }
    if (res.num_equations != 80 || !res.certificate ||
        !check_certificate(build_feasibility_problem(z), *res.certificate)) {
      rep.fail(describe(z) + ": certificate does not check");
    }
  });
  return rep;
}

struct OracleSpec {
  std::string_view base;
  std::size_t min_n;  // 0 when the oracle takes no dimension
  std::size_t max_n;
};

inline constexpr std::array<OracleSpec, 9> kOracles{{
    {"bound_chain", 2, 8},
    {"zero_set", 2, 8},
    {"hadamard", 2, 8},
    {"ft_inequality", 2, 6},
    {"qhat_identity", 2, 6},
    {"smoothing", 2, 6},
    {"hessian_table", 0, 0},
    {"grid_symmetry_n4", 0, 0},
    {"feasibility_all", 0, 0},
}};

/// Names accepted by verify_derived, e.g. "ft_inequality_n4".
inline std::vector<std::string> list_oracles() {
  std::vector<std::string> out;
  for (const auto &spec : kOracles) {
    out.push_back(spec.min_n == 0 ? std::string(spec.base)
                                  : std::string(spec.base) + "_n{" + std::to_string(spec.min_n) + ".." +
                                        std::to_string(spec.max_n) + "}");
  }
  return out;
}

/// Runs the named oracle; throws std::invalid_argument for an unknown name.
inline VerifyReport verify_derived(std::string_view name, std::uint64_t seed = 42) {
  for (const auto &spec : kOracles) {
    if (spec.min_n == 0) {
      if (name != spec.base) continue;
      if (spec.base == "hessian_table") return verify_hessian_table();
      if (spec.base == "grid_symmetry_n4") return verify_grid_symmetry();
      return verify_feasibility_all();
    }
    const std::string prefix = std::string(spec.base) + "_n";
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) continue;
    const std::string_view digits = name.substr(prefix.size());
    std::size_t n = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9' || n > 100) throw std::invalid_argument("unknown oracle: " + std::string(name));
      n = n * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (n < spec.min_n || n > spec.max_n) {
      throw std::invalid_argument("oracle " + std::string(spec.base) + ": n out of range");
    }
    if (spec.base == "bound_chain") return verify_bound_chain(n);
    if (spec.base == "zero_set") return verify_zero_set(n);
    if (spec.base == "hadamard") return verify_hadamard(n, 1000, seed);
    if (spec.base == "ft_inequality") return verify_ft_inequality(n);
    if (spec.base == "qhat_identity") return verify_qhat_identity(n);
    return verify_smoothing(n);
  }
  throw std::invalid_argument("unknown oracle: " + std::string(name));
}

}  // namespace signcount

#endif  // SIGNCOUNT_VERIFY_HPP
