#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lincomp/bijection.hpp"
#include "lincomp/ioeq.hpp"
#include "lincomp/model.hpp"

namespace lincomp {

enum class PathPattern { PurePath, Leaks, TerminalCycle, Detour };

std::string to_string(PathPattern p);

/// Off-ramp path[i-1] -> s, on-ramp t -> path[j-1]. `i` and `j` are 1-based
/// positions on the path; `s`, `t` and `vertices` are compartment labels.
struct DetourShape {
  int i = 0;
  int j = 0;
  int s = 0;
  int t = 0;
  std::vector<int> vertices;
  bool operator==(const DetourShape&) const = default;
};

/// A directed input -> output path plus a classification of everything off
/// the path.
struct SkeletalPathWitness {
  std::vector<int> path;  // path.front() is the input, path.back() the output
  PathPattern pattern = PathPattern::PurePath;
  std::optional<DetourShape> detour;

  int length() const { return static_cast<int>(path.size()); }
  /// Compartment at 1-based position k.
  int at(int k) const { return path.at(static_cast<std::size_t>(k - 1)); }
  bool operator==(const SkeletalPathWitness&) const = default;
};

/// Every classification of `m` as a skeletal path model, trying simple
/// input -> output paths shortest first (ties broken lexicographically).
/// Supported shapes: a bare path, a path with leaks, a path whose only
/// extra edge is n -> n-1 (no leaks), and a path with one detour through
/// the remaining compartments. Throws PreconditionError with "no spanning
/// skeleton" or "pattern not supported".
std::vector<SkeletalPathWitness> skeletal_path_witnesses(const ModelSpec& m);

/// First entry of skeletal_path_witnesses.
SkeletalPathWitness match_skeletal_path(const ModelSpec& m);

struct TransformResult {
  ModelSpec model;
  ParamBijection phi;
};

/// (P_n, {1}, {n}, {i}) -> (P_n, {1}, {n}, {j}) for i, j < n, positions on
/// the path. phi: a0(i) -> a0(j), a(i+1,i) <-> a(j+1,j).
TransformResult move_leak(const ModelSpec& m, int i, int j);

/// (P_n, {1}, {n}, {n-1}) -> (P_n + edge n -> n-1, {1}, {n}, {}).
/// phi: a0(n-1) -> a(n-1,n).
TransformResult leak_to_terminal_cycle(const ModelSpec& m);

/// Moves the off-ramp and on-ramp of a detour one position down the path.
/// Requires 1 <= i <= j <= n-1, i < n-1 and every leak inside the detour.
TransformResult shift_detour(const ModelSpec& m, const SkeletalPathWitness& w);

/// The model and map shift_detour would build, with no precondition on i, j
/// or leaks beyond the witness matching `m`. Never certified.
TransformResult shift_detour_candidate(const ModelSpec& m, const SkeletalPathWitness& w);

/// Corresponding compartment sets of the exchanged branch in each model.
struct Branch {
  std::vector<int> in_a;
  std::vector<int> in_b;
};

/// The model restricted to the edges and leaks inside `vertices`, keeping
/// labels; inputs and outputs are intersected with `vertices`.
ModelSpec branch_submodel(const ModelSpec& m, const std::vector<int>& vertices);

/// `inner` (a certified bijection between the branch submodels) extended by
/// the identity on every shared parameter. Throws PreconditionError when the
/// models differ outside the branch, when `inner` fails on the branch, or
/// when the composed map fails certification.
ParamBijection compose_sink(const ModelSpec& a, const ModelSpec& b, const Branch& branch,
                            const ParamBijection& inner);

/// Source variant: reverses both models, composes as sinks, and maps the
/// result back, then certifies the source pair itself. Reversal does not
/// transpose A(G) (the diagonal turns from outflow to inflow sums), so the
/// certification can reject a map that holds for the reversed pair.
ParamBijection compose_source(const ModelSpec& a, const ModelSpec& b, const Branch& branch,
                              const ParamBijection& inner);

/// phi expressed on the reversed models.
ParamBijection reversed_bijection(const ParamBijection& phi);

/// Relabels compartments in breadth-first order from the inputs (neighbours
/// ascending, unreached compartments last) and sorts; used as a dedup key.
std::string canonical_form(const ModelSpec& m);

struct FamilyMember {
  ModelSpec model;
  /// From the root model's parameters onto this member's.
  ParamBijection phi;
  int depth = 0;
};

/// Breadth-first closure of move_leak, leak_to_terminal_cycle and
/// shift_detour up to `depth` steps, deduplicated by canonical_form. The
/// root comes first with the identity map.
std::vector<FamilyMember> enumerate_family(const ModelSpec& m, int depth);

}  // namespace lincomp
