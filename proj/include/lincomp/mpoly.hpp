#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lincomp/param.hpp"

namespace lincomp {

/// Polynomial variable. Model parameters and the fresh coefficient symbols
/// c_1, c_2, ... used by dependency relations share one id space; a smaller
/// id is a *larger* variable in the monomial order, so the canonical
/// parameter order (leaks, then edges by (to, from)) is preserved.
using Var = std::uint32_t;

Var param_var(Param p);
Var coefficient_var(int k);
bool is_param_var(Var v);
Param var_param(Var v);
int var_coefficient_index(Var v);
std::string var_name(Var v);

/// Power product stored sparsely as (variable, exponent) pairs sorted by
/// variable id; exponents are positive.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(Var v, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(Var v) const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic comparison; returns <0, 0, >0.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) > 0;
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in descending grevlex order with no zero coefficients, so
/// structural equality is polynomial equality and iteration starts at the
/// leading term.
class MPoly {
 public:
  using Terms = std::map<Monomial, mpq_class, GrevlexGreater>;

  MPoly() = default;
  MPoly(const mpq_class& constant);  // NOLINT(google-explicit-constructor)
  MPoly(int constant) : MPoly(mpq_class(constant)) {}  // NOLINT
  static MPoly variable(Var v);
  static MPoly param(Param p) { return variable(param_var(p)); }
  static MPoly term(const Monomial& m, const mpq_class& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (0 when absent).
  mpq_class constant_term() const;
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const mpq_class& leading_coefficient() const { return terms_.begin()->second; }

  std::vector<Var> variables() const;

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs) { return *this = *this * rhs; }
  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  MPoly operator-() const;

  MPoly scaled(const mpq_class& c) const;
  MPoly times(const Monomial& m, const mpq_class& c) const;

  /// lhs / rhs when rhs divides lhs in Q[vars]; nullopt otherwise.
  friend std::optional<MPoly> exact_div(const MPoly& lhs, const MPoly& rhs);

  MPoly derivative(Var v) const;
  mpq_class evaluate(const std::function<mpq_class(Var)>& value) const;
  /// Renames variables; `rename` must be injective on variables().
  MPoly rename(const std::function<Var(Var)>& rename) const;
  /// Replaces each variable by a polynomial.
  MPoly substitute(const std::function<MPoly(Var)>& value) const;

  bool operator==(const MPoly&) const = default;

  /// Canonical text: descending grevlex, `a01*a12^2`, `-1/2*a21`, `0`.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const mpq_class& c);
  Terms terms_;
};

std::string rational_to_string(const mpq_class& q);

}  // namespace lincomp
