#ifndef SIGNCOUNT_POLYNOMIAL_HPP
#define SIGNCOUNT_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace signcount {

/// Exponent vector over a fixed variable list.
using Monomial = std::vector<unsigned>;

/// Graded order, higher total degree first, ties broken lexicographically with
/// larger exponents of earlier variables first.
struct MonomialOrder {
  bool operator()(const Monomial &a, const Monomial &b) const {
    const auto da = std::accumulate(a.begin(), a.end(), 0u);
    const auto db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse multivariate polynomial with exact integer coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, std::int64_t, MonomialOrder>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, std::int64_t c) {
    Polynomial p(num_vars);
    p.add_term(Monomial(num_vars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw std::out_of_range("Polynomial::variable: index out of range");
    Monomial m(num_vars, 0);
    m[index] = 1;
    Polynomial p(num_vars);
    p.add_term(std::move(m), 1);
    return p;
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  const Terms &terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Monomial m, std::int64_t c) {
    if (m.size() != num_vars_) throw std::invalid_argument("Polynomial: monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto &[m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0u));
    return d;
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto &[m, c] : terms_) d = std::max(d, m.at(var));
    return d;
  }

  double evaluate(std::span<const double> values) const {
    if (values.size() != num_vars_) throw std::invalid_argument("Polynomial::evaluate: arity mismatch");
    double acc = 0.0;
    for (const auto &[m, c] : terms_) {
      double term = static_cast<double>(c);
      for (std::size_t i = 0; i < num_vars_; ++i) {
        for (unsigned e = 0; e < m[i]; ++e) term *= values[i];
      }
      acc += term;
    }
    return acc;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial &b) {
    a.require_same_ring(b);
    for (const auto &[m, c] : b.terms_) a.add_term(m, c);
    return a;
  }

  friend Polynomial operator-(Polynomial a, const Polynomial &b) {
    a.require_same_ring(b);
    for (const auto &[m, c] : b.terms_) a.add_term(m, checked_neg(c));
    return a;
  }

  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    a.require_same_ring(b);
    Polynomial out(a.num_vars_);
    for (const auto &[ma, ca] : a.terms_) {
      for (const auto &[mb, cb] : b.terms_) {
        Monomial m(a.num_vars_);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        out.add_term(std::move(m), checked_mul(ca, cb));
      }
    }
    return out;
  }

  friend Polynomial operator*(std::int64_t s, const Polynomial &p) {
    return Polynomial::constant(p.num_vars_, s) * p;
  }

  Polynomial pow(unsigned e) const {
    Polynomial out = constant(num_vars_, 1);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

  /// `c*x^2*y - 3*z + 1`; variables with exponent 1 carry no `^1`, unit
  /// coefficients are dropped except on the constant term.
  std::string to_string(std::span<const std::string> names) const {
    if (names.size() != num_vars_) throw std::invalid_argument("Polynomial::to_string: names arity mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
      const bool negative = c < 0;
      const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string factors;
      for (std::size_t i = 0; i < num_vars_; ++i) {
        if (m[i] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += names[i];
        if (m[i] > 1) factors += "^" + std::to_string(m[i]);
      }
      if (factors.empty()) {
        out += std::to_string(mag);
      } else if (mag == 1) {
        out += factors;
      } else {
        out += std::to_string(mag) + "*" + factors;
      }
    }
    return out;
  }

 private:
  void require_same_ring(const Polynomial &o) const {
    if (o.num_vars_ != num_vars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  }

  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Polynomial: coefficient overflow");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Polynomial: coefficient overflow");
    return r;
  }
  static std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

  std::size_t num_vars_ = 0;
  Terms terms_;
};

}  // namespace signcount

#endif  // SIGNCOUNT_POLYNOMIAL_HPP
