#pragma once

#include <array>
#include <string>
#include <vector>

#include "lincomp/model.hpp"

namespace lincomp {

/// Outcome of one geometric rule. On failure `left` and `right` are the
/// differing quantities of the two models.
struct RuleOutcome {
  int rule = 0;
  std::string name;
  bool pass = true;
  std::vector<std::string> left;
  std::vector<std::string> right;
};

struct RuleReport {
  /// Rules 1..4 in order: shortest input-output distances, reach-to-output
  /// counts, reach-from-input counts, trap counts.
  std::array<RuleOutcome, 4> rules;

  bool pass() const;
  /// First failing rule, or nullptr.
  const RuleOutcome* first_failure() const;
};

/// Godfrey-Chapman necessary conditions for indistinguishability. Each rule
/// compares sorted multisets of quantities, so compartment labels need not
/// agree. Throws PreconditionError("incomparable io cardinalities") when the
/// input or output sets have different sizes.
RuleReport godfrey_rules(const ModelSpec& a, const ModelSpec& b);

struct RhsCount {
  int input = 0;
  int output = 0;
  /// Predicted number of nonzero, non-constant rhs coefficients.
  int count = 0;
  /// False when the input has no path to the output (count is then 0).
  bool reachable = true;
};

/// For each (input, output): n-1 when input == output, n - dist(input,
/// output) otherwise, with n the number of compartments that reach the
/// output.
std::vector<RhsCount> rhs_coefficient_count(const ModelSpec& m);

}  // namespace lincomp
