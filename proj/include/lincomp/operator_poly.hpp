#pragma once

#include <string>
#include <vector>

#include "lincomp/model.hpp"
#include "lincomp/mpoly.hpp"

namespace lincomp {

/// Polynomial in the differential operator D = d/dt whose coefficients are
/// MPoly: coefficients()[k] multiplies D^k. Trailing zero coefficients are
/// never stored, so the zero operator has no coefficients.
class OperatorPoly {
 public:
  OperatorPoly() = default;
  OperatorPoly(MPoly constant);  // NOLINT(google-explicit-constructor)
  OperatorPoly(int constant) : OperatorPoly(MPoly(constant)) {}  // NOLINT
  explicit OperatorPoly(std::vector<MPoly> coefficients);

  /// D^k.
  static OperatorPoly d_power(int k);

  const std::vector<MPoly>& coefficients() const { return c_; }
  /// Coefficient of D^k (zero beyond the degree).
  MPoly coefficient(int k) const;
  /// -1 for the zero operator.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;

  OperatorPoly& operator+=(const OperatorPoly& rhs);
  OperatorPoly& operator-=(const OperatorPoly& rhs);
  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
  friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);
  OperatorPoly operator-() const;
  OperatorPoly scaled(const mpq_class& q) const;

  bool operator==(const OperatorPoly&) const = default;

  /// e.g. `D^2+(a01+a12+a21)*D+a01*a12`.
  std::string to_string() const;

 private:
  void trim();
  std::vector<MPoly> c_;
};

/// Square matrix of operator polynomials; 1-based accessors.
class OpMatrix {
 public:
  explicit OpMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}
  int size() const { return n_; }
  const OperatorPoly& at(int i, int j) const { return cells_[index(i, j)]; }
  OperatorPoly& at(int i, int j) { return cells_[index(i, j)]; }

  /// Matrix with row i and column j removed (1-based). A 1x1 matrix yields
  /// the 0x0 matrix, whose determinant is 1. Throws std::out_of_range.
  OpMatrix minor(int i, int j) const;

  bool operator==(const OpMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }
  int n_;
  std::vector<OperatorPoly> cells_;
};

/// D*I - A restricted to `vertices` (original labels, ascending): the
/// principal submatrix of D*I - A(G) on those rows and columns.
OpMatrix shifted_operator_matrix(const ModelSpec& m,
                                 const std::vector<int>& vertices);
/// D*I - A(G) on all compartments.
OpMatrix shifted_operator_matrix(const ModelSpec& m);

/// Exact determinant by cofactor expansion along the sparsest remaining row
/// or column, memoised on the (row set, column set) of each sub-minor.
OperatorPoly operator_det(const OpMatrix& m);

/// Leibniz permutation sum. Testing oracle; refuses dimension > 8.
OperatorPoly det_oracle(const OpMatrix& m);

}  // namespace lincomp
