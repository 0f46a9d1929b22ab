#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace lincomp {

/// A rate parameter of a compartmental model.
///
/// Edge j -> i carries a_{ij} and is stored as {to = i, from = j}; the leak
/// from compartment i carries a_{0i} and is stored as {to = 0, from = i}.
/// The defaulted ordering is lexicographic on (to, from), which puts every
/// leak first (ascending by compartment) followed by the edges; this is the
/// canonical parameter order used for coefficient maps and monomial order.
struct Param {
  int to = 0;
  int from = 0;

  static constexpr Param edge(int to, int from) { return Param{to, from}; }
  static constexpr Param leak(int compartment) { return Param{0, compartment}; }

  constexpr bool is_leak() const { return to == 0; }

  /// `a21`, `a01`; indices of two or more digits use `a12_3` style.
  std::string symbol() const;

  /// Inverse of `symbol()`. Throws lincomp::ParseError on malformed input.
  static Param parse(std::string_view text);

  auto operator<=>(const Param&) const = default;
};

}  // namespace lincomp
