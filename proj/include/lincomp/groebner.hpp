#pragma once

#include <functional>
#include <vector>

#include "lincomp/mpoly.hpp"

namespace lincomp {

/// Block order: variables for which `in_first_block` holds are compared
/// first (grevlex on that block), ties broken by grevlex on the rest.
/// Eliminates the first block.
struct BlockOrder {
  std::function<bool(Var)> in_first_block;
  /// <0, 0, >0
  int compare(const Monomial& a, const Monomial& b) const;
};

/// Plain grevlex, as used by MPoly.
BlockOrder grevlex_order();

/// Reduced Groebner basis (monic, sorted by leading monomial ascending)
/// via Buchberger's algorithm with the product and chain criteria.
std::vector<MPoly> groebner_basis(const std::vector<MPoly>& generators, const BlockOrder& order);

/// Basis elements free of first-block variables: generators of the
/// elimination ideal.
std::vector<MPoly> eliminate(const std::vector<MPoly>& generators, const BlockOrder& order);

/// Remainder of `f` on division by `basis` under `order`.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis, const BlockOrder& order);

}  // namespace lincomp
