#ifndef SIGNCOUNT_POLYSYS_HPP
#define SIGNCOUNT_POLYSYS_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "signcount/format.hpp"
#include "signcount/oracle.hpp"
#include "signcount/polynomial.hpp"
#include "signcount/rational.hpp"
#include "signcount/sign.hpp"
#include "signcount/transition.hpp"

namespace signcount {

// ---------------------------------------------------------------------------
// Four-dimensional spherical polynomial system
//
//   t(z) = mu . d + sum_circular (d_i + d_{i+1})^2 (d_i d_{i+1} - 1)^2
//   d = (rho c1, rho c2 s1, rho c3 s1 s2, rho s1 s2 s3),  c_i^2 + s_i^2 = 1

/// Squared radii of every nonzero direction that keeps a point of {-1,0,1}^4 in
/// the cube.
inline const std::vector<int> &admissible_rho_squared() {
  static const std::vector<int> values{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16};
  return values;
}

struct PolySystem {
  std::vector<std::string> variables;
  std::vector<Polynomial> equations;  // each means `poly = 0`
  SignVector z;
  std::size_t t = 0;
  std::vector<int> rho_squared;

  friend bool operator==(const PolySystem &, const PolySystem &) = default;
};

inline void require_4d_sign_vector(const SignVector &z, const char *who) {
  if (z.size() != 4) throw std::invalid_argument(std::string(who) + ": z must have dimension 4");
}

/// Main equation (first) plus the three Pythagorean constraints. With `mu`
/// unset the multipliers are kept as variables mu1..mu4.
inline PolySystem build_4d_system(const SignVector &z,
                                  const std::optional<std::array<std::int64_t, 4>> &mu = std::nullopt) {
  require_4d_sign_vector(z, "build_4d_system");
  PolySystem sys;
  sys.variables = {"rho", "c1", "c2", "c3", "s1", "s2", "s3"};
  if (!mu) {
    for (const char *name : {"mu1", "mu2", "mu3", "mu4"}) sys.variables.emplace_back(name);
  }
  const std::size_t nv = sys.variables.size();
  auto var = [nv](std::size_t i) { return Polynomial::variable(nv, i); };
  auto num = [nv](std::int64_t c) { return Polynomial::constant(nv, c); };
  const Polynomial rho = var(0), c1 = var(1), c2 = var(2), c3 = var(3), s1 = var(4), s2 = var(5), s3 = var(6);

  const std::array<Polynomial, 4> d{rho * c1, rho * c2 * s1, rho * c3 * s1 * s2, rho * s1 * s2 * s3};

  sys.z = z;
  sys.t = sign_changes(z, Topology::Circular);
  sys.rho_squared = admissible_rho_squared();

  Polynomial main = num(-static_cast<std::int64_t>(sys.t));
  for (std::size_t i = 0; i < 4; ++i) {
    const Polynomial coeff = mu ? num((*mu)[i]) : var(7 + i);
    main = main + coeff * d[i];
  }
  for (auto [i, j] : adjacent_pairs(4, Topology::Circular)) {
    main = main + (d[i] + d[j]).pow(2) * (d[i] * d[j] - num(1)).pow(2);
  }
  sys.equations.push_back(std::move(main));
  sys.equations.push_back(c1.pow(2) + s1.pow(2) - num(1));
  sys.equations.push_back(c2.pow(2) + s2.pow(2) - num(1));
  sys.equations.push_back(c3.pow(2) + s3.pow(2) - num(1));
  return sys;
}

/// (rho cos p1, rho cos p2 sin p1, rho cos p3 sin p1 sin p2, rho sin p3 sin p1 sin p2).
inline RealVector spherical_to_cartesian(double rho, const std::array<double, 3> &phi) {
  if (!(rho >= 0.0)) throw std::invalid_argument("spherical_to_cartesian: rho must be nonnegative");
  const double s1 = std::sin(phi[0]), s2 = std::sin(phi[1]);
  return {rho * std::cos(phi[0]), rho * std::cos(phi[1]) * s1, rho * std::cos(phi[2]) * s1 * s2,
          rho * std::sin(phi[2]) * s1 * s2};
}

/// Values of (rho, c1, c2, c3, s1, s2, s3[, mu1..mu4]) for a system's variable list.
inline std::vector<double> spherical_assignment(double rho, const std::array<double, 3> &phi,
                                                std::span<const double> mu = {}) {
  std::vector<double> v{rho,
                        std::cos(phi[0]),
                        std::cos(phi[1]),
                        std::cos(phi[2]),
                        std::sin(phi[0]),
                        std::sin(phi[1]),
                        std::sin(phi[2])};
  v.insert(v.end(), mu.begin(), mu.end());
  return v;
}

enum class ExportFormat { Plain, Json };

inline nlohmann::ordered_json to_json(const PolySystem &sys) {
  nlohmann::ordered_json j;
  j["variables"] = sys.variables;
  nlohmann::ordered_json eqs = nlohmann::ordered_json::array();
  for (const Polynomial &p : sys.equations) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto &[m, c] : p.terms()) {
      nlohmann::ordered_json exps = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != 0) exps[sys.variables[i]] = m[i];
      }
      terms.push_back({{"coeff", c}, {"exponents", exps}});
    }
    eqs.push_back({{"terms", terms}});
  }
  j["equations"] = eqs;
  j["metadata"] = {{"z", sys.z.entries()}, {"t", sys.t}, {"rho_squared", sys.rho_squared}};
  return j;
}

inline PolySystem polysystem_from_json(const nlohmann::ordered_json &j) {
  PolySystem sys;
  sys.variables = j.at("variables").get<std::vector<std::string>>();
  const std::size_t nv = sys.variables.size();
  for (const auto &eq : j.at("equations")) {
    Polynomial p(nv);
    for (const auto &term : eq.at("terms")) {
      Monomial m(nv, 0);
      for (const auto &[name, power] : term.at("exponents").items()) {
        std::size_t idx = 0;
        while (idx < nv && sys.variables[idx] != name) ++idx;
        if (idx == nv) throw std::invalid_argument("polysystem_from_json: undeclared variable " + name);
        m[idx] = power.get<unsigned>();
      }
      p.add_term(std::move(m), term.at("coeff").get<std::int64_t>());
    }
    sys.equations.push_back(std::move(p));
  }
  const auto &meta = j.at("metadata");
  sys.z = SignVector(meta.at("z").get<std::vector<int>>());
  sys.t = meta.at("t").get<std::size_t>();
  sys.rho_squared = meta.at("rho_squared").get<std::vector<int>>();
  return sys;
}

/// Plain text: a `#` metadata header then one `poly = 0` line per equation.
inline std::string export_system(const PolySystem &sys, ExportFormat format) {
  if (format == ExportFormat::Json) return to_json(sys).dump(2) + "\n";
  std::string out = "# z = " + join_numbers(sys.z.entries()) + "\n";
  out += "# t(z) = " + std::to_string(sys.t) + "\n";
  out += "# variables = " + join_names(sys.variables) + "\n";
  out += "# rho^2 in {" + join_numbers(sys.rho_squared, ", ") + "}\n";
  for (const Polynomial &p : sys.equations) out += p.to_string(sys.variables) + " = 0\n";
  return out;
}

// ---------------------------------------------------------------------------
// Finite-direction linear feasibility over the lattice directions

using Direction4 = std::array<int, 4>;

/// F(d) = sum over circular pairs of (d_i + d_j)^2 (d_i d_j - 1)^2.
inline std::int64_t pair_penalty(const Direction4 &d) {
  std::int64_t acc = 0;
  for (auto [i, j] : adjacent_pairs(4, Topology::Circular)) {
    const std::int64_t s = d[i] + d[j];
    const std::int64_t p = static_cast<std::int64_t>(d[i]) * d[j] - 1;
    acc += s * s * p * p;
  }
  return acc;
}

struct FeasibilityProblem {
  SignVector z;
  std::size_t t = 0;
  std::vector<Direction4> directions;  // lexicographic, zero excluded
  std::vector<std::int64_t> rhs;       // t(z) - F(d): the system is mu . d = rhs
};

/// Nonzero d with z + d in {-1,0,1}^4, in lexicographic order.
inline FeasibilityProblem build_feasibility_problem(const SignVector &z) {
  require_4d_sign_vector(z, "build_feasibility_problem");
  FeasibilityProblem prob;
  prob.z = z;
  prob.t = sign_changes(z, Topology::Circular);
  for_each_pattern(4, [&](const SignVector &target) {
    Direction4 d{};
    bool zero = true;
    for (std::size_t i = 0; i < 4; ++i) {
      d[i] = target[i] - z[i];
      zero = zero && d[i] == 0;
    }
    if (zero) return;
    prob.directions.push_back(d);
    prob.rhs.push_back(static_cast<std::int64_t>(prob.t) - pair_penalty(d));
  });
  return prob;
}

/// A rational combination of equations whose left sides cancel and whose right
/// side is nonzero, i.e. the system implies 0 = contradiction.
struct InfeasibilityCertificate {
  std::vector<std::size_t> equations;
  std::vector<Rational> coefficients;
  Rational contradiction;
  // Set when the certificate is two directions along one axis.
  std::optional<std::size_t> axis;
  std::optional<std::pair<Rational, Rational>> implied_mu;
};

struct FeasibilityResult {
  SignVector z;
  std::size_t t = 0;
  std::size_t num_equations = 0;
  bool feasible = false;
  std::optional<std::array<Rational, 4>> witness;
  std::optional<InfeasibilityCertificate> certificate;
};

/// Recomputes the combination from scratch.
inline bool check_certificate(const FeasibilityProblem &prob, const InfeasibilityCertificate &cert) {
  if (cert.equations.size() != cert.coefficients.size() || cert.equations.empty()) return false;
  std::array<Rational, 4> lhs{};
  Rational rhs;
  for (std::size_t k = 0; k < cert.equations.size(); ++k) {
    const std::size_t e = cert.equations[k];
    if (e >= prob.directions.size()) return false;
    for (std::size_t i = 0; i < 4; ++i) lhs[i] += cert.coefficients[k] * Rational(prob.directions[e][i]);
    rhs += cert.coefficients[k] * Rational(prob.rhs[e]);
  }
  for (const Rational &v : lhs) {
    if (!v.is_zero()) return false;
  }
  return !rhs.is_zero() && rhs == cert.contradiction;
}

namespace detail {

// d_b = alpha d_a for some rational alpha, or nullopt.
inline std::optional<Rational> parallel_factor(const Direction4 &a, const Direction4 &b) {
  std::optional<Rational> alpha;
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i] == 0 && b[i] == 0) continue;
    if (a[i] == 0 || b[i] == 0) return std::nullopt;
    const Rational r(b[i], a[i]);
    if (alpha && *alpha != r) return std::nullopt;
    alpha = r;
  }
  return alpha;
}

inline std::optional<InfeasibilityCertificate> pair_certificate(const FeasibilityProblem &prob, std::size_t a,
                                                                std::size_t b) {
  const auto alpha = parallel_factor(prob.directions[a], prob.directions[b]);
  if (!alpha) return std::nullopt;
  const Rational gap = Rational(prob.rhs[b]) - *alpha * Rational(prob.rhs[a]);
  if (gap.is_zero()) return std::nullopt;
  InfeasibilityCertificate cert;
  cert.equations = {a, b};
  cert.coefficients = {-*alpha, Rational(1)};
  cert.contradiction = gap;
  return cert;
}

inline std::optional<std::size_t> single_axis(const Direction4 &d) {
  std::optional<std::size_t> axis;
  for (std::size_t i = 0; i < 4; ++i) {
    if (d[i] == 0) continue;
    if (axis) return std::nullopt;
    axis = i;
  }
  return axis;
}

}  // namespace detail

/// Decides whether some mu in Q^4 satisfies mu . d = rhs for every direction. Infeasibility is certified, preferring two directions
/// along a single axis, then any parallel pair, then a full elimination row.
inline FeasibilityResult solve_feasibility(const FeasibilityProblem &prob) {
  const std::size_t m = prob.directions.size();
  FeasibilityResult result;
  result.z = prob.z;
  result.t = prob.t;
  result.num_equations = m;

  for (std::size_t axis = 0; axis < 4; ++axis) {
    for (std::size_t a = 0; a < m; ++a) {
      if (detail::single_axis(prob.directions[a]) != axis) continue;
      for (std::size_t b = a + 1; b < m; ++b) {
        if (detail::single_axis(prob.directions[b]) != axis) continue;
        if (auto cert = detail::pair_certificate(prob, a, b)) {
          cert->axis = axis;
          cert->implied_mu = std::pair{Rational(prob.rhs[a], prob.directions[a][axis]),
                                       Rational(prob.rhs[b], prob.directions[b][axis])};
          result.certificate = std::move(cert);
          return result;
        }
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (auto cert = detail::pair_certificate(prob, a, b)) {
        result.certificate = std::move(cert);
        return result;
      }
    }
  }

  // Gauss-Jordan on [D | rhs | I]; the identity block records how each reduced
  // row combines the original equations.
  const std::size_t cols = 4 + 1 + m;
  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(cols));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < 4; ++i) rows[r][i] = Rational(prob.directions[r][i]);
    rows[r][4] = Rational(prob.rhs[r]);
    rows[r][5 + r] = Rational(1);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 4 && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && rows[piv][col].is_zero()) ++piv;
    if (piv == m) continue;
    std::swap(rows[piv], rows[rank]);
    const Rational inv = Rational(1) / rows[rank][col];
    for (Rational &v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = 0; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < m; ++r) {
    if (rows[r][4].is_zero()) continue;
    InfeasibilityCertificate cert;
    for (std::size_t e = 0; e < m; ++e) {
      if (!rows[r][5 + e].is_zero()) {
        cert.equations.push_back(e);
        cert.coefficients.push_back(rows[r][5 + e]);
      }
    }
    cert.contradiction = rows[r][4];
    result.certificate = std::move(cert);
    return result;
  }
  std::array<Rational, 4> mu{};
  for (std::size_t r = 0; r < rank; ++r) mu[pivot_col[r]] = rows[r][4];
  result.feasible = true;
  result.witness = mu;
  return result;
}

inline FeasibilityResult finite_direction_feasibility(const SignVector &z) {
  return solve_feasibility(build_feasibility_problem(z));
}

inline nlohmann::ordered_json to_json(const FeasibilityResult &res, const FeasibilityProblem &prob) {
  nlohmann::ordered_json j;
  j["z"] = res.z.entries();
  j["t"] = res.t;
  j["equations"] = res.num_equations;
  j["feasible"] = res.feasible;
  if (res.witness) {
    std::vector<std::string> mu;
    for (const Rational &v : *res.witness) mu.push_back(v.str());
    j["witness"] = mu;
  }
  if (res.certificate) {
    const auto &cert = *res.certificate;
    nlohmann::ordered_json c;
    c["equations"] = cert.equations;
    nlohmann::ordered_json dirs = nlohmann::ordered_json::array();
    for (std::size_t e : cert.equations) dirs.push_back(prob.directions[e]);
    c["directions"] = dirs;
    std::vector<std::string> coeffs;
    for (const Rational &v : cert.coefficients) coeffs.push_back(v.str());
    c["coefficients"] = coeffs;
    c["contradiction"] = cert.contradiction.str();
    if (cert.axis) c["axis"] = *cert.axis + 1;
    if (cert.implied_mu) c["implied_mu"] = {cert.implied_mu->first.str(), cert.implied_mu->second.str()};
    c["verified"] = check_certificate(prob, cert);
    j["certificate"] = c;
  }
  return j;
}

}  // namespace signcount

#endif  // SIGNCOUNT_POLYSYS_HPP
