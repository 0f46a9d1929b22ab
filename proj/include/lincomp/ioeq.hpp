#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lincomp/model.hpp"
#include "lincomp/operator_poly.hpp"

namespace lincomp {

/// Which compartments enter the determinant for an output.
enum class Restriction {
  /// Compartments with a directed path to the output (the reduced equation).
  OutputReachable,
  /// Every compartment: the unreduced Cramer's-rule equation.
  FullGraph,
};

/// det(D*I - A_H) y_j = sum_i (-1)^(p_i + p_j) det((D*I - A_H)^{p_i, p_j}) u_i
///
/// A_H is the principal submatrix of A(G) on H, so outflow from H into
/// compartments that cannot reach the output stays on the diagonal. p_i and
/// p_j are positions inside H (ascending original labels), and `rhs` holds
/// the signed value for every input in H, ascending by input.
struct IoEquation {
  int output = 0;
  std::vector<int> subgraph;
  OperatorPoly lhs;
  std::vector<std::pair<int, OperatorPoly>> rhs;

  bool operator==(const IoEquation&) const = default;
};

/// Throws PreconditionError when `out` is not an output or when no input
/// reaches it ("no input reaches output").
IoEquation io_equation(const ModelSpec& m, int out,
                       Restriction r = Restriction::OutputReachable);

/// One equation per output, ascending.
std::vector<IoEquation> io_equations(const ModelSpec& m,
                                     Restriction r = Restriction::OutputReachable);

/// `D^2 y2 + (a01+a12+a21) D y2 + (a01*a12) y2 = (a21) u1`
std::string render_equation(const IoEquation& eq);

enum class Signal { Output, Input };

/// y_c^(order) or u_c^(order).
struct DiffMonomial {
  Signal signal = Signal::Output;
  int compartment = 0;
  int order = 0;

  std::string to_string() const;
  auto operator<=>(const DiffMonomial&) const = default;
};

/// A differential monomial inside the equation of a given output.
struct CoefficientKey {
  int equation = 0;
  DiffMonomial monomial;

  std::string to_string() const;
  bool operator==(const CoefficientKey&) const = default;
};

/// Canonical ordering: by equation, then y-derivatives descending, then
/// inputs ascending with u-derivatives descending.
bool canonical_less(const CoefficientKey& a, const CoefficientKey& b);

struct CoefficientEntry {
  CoefficientKey key;
  MPoly value;
  bool operator==(const CoefficientEntry&) const = default;
};

/// The nonzero, non-constant coefficients of all equations in canonical
/// order. Identically-zero coefficients and constant ones (the monic
/// leading term, or the leading 1 of an input that is also the output) are
/// omitted; repeated coefficients across outputs are kept.
struct CoefficientMap {
  std::vector<CoefficientEntry> entries;

  std::size_t size() const { return entries.size(); }
  std::vector<CoefficientKey> keys() const;
  std::vector<MPoly> values() const;
  /// Parameters appearing anywhere in the map, canonical order.
  std::vector<Param> params() const;
  bool operator==(const CoefficientMap&) const = default;
};

CoefficientMap coefficient_map(const std::vector<IoEquation>& equations);
CoefficientMap coefficient_map(const ModelSpec& m,
                               Restriction r = Restriction::OutputReachable);

/// Differential monomials with a nonzero coefficient, monic terms included.
struct StructureSignature {
  std::vector<CoefficientKey> support;  // canonical order
  bool operator==(const StructureSignature&) const = default;
};

StructureSignature structure_signature(const std::vector<IoEquation>& equations);
StructureSignature structure_signature(const ModelSpec& m);

}  // namespace lincomp
