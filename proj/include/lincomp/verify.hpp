#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lincomp/bijection.hpp"
#include "lincomp/ioeq.hpp"
#include "lincomp/model.hpp"
#include "lincomp/rules.hpp"

namespace lincomp {

/// True iff phi maps the coefficient map of `a` exactly onto that of `b`,
/// key for key, and phi's image is b's parameter set. Throws BijectionError
/// when phi misses one of a's parameters.
bool verify_permutation(const ModelSpec& a, const ModelSpec& b, const ParamBijection& phi,
                        Restriction r = Restriction::OutputReachable);

struct SearchOptions {
  std::size_t max_params = 12;
};

/// Complete backtracking search for a parameter renaming that certifies a
/// against b. nullopt when the parameter counts or structure signatures
/// differ or no renaming exists. Throws CapExceeded ("search refused") above
/// the parameter cap.
std::optional<ParamBijection> search_permutation(const ModelSpec& a, const ModelSpec& b,
                                                 const SearchOptions& opts = {});

enum class VerdictKind { Distinguishable, PermutationIndistinguishable, Inconclusive };
enum class DistinctionReason { None, Structure, Rule, Relation };

std::string to_string(VerdictKind k);
std::string to_string(DistinctionReason r);

/// A relation of one model that does not vanish on the other's
/// parametrization.
struct RelationWitness {
  /// "a" when a's relation fails on b, "b" otherwise.
  std::string owner;
  MPoly relation;
  MPoly residue;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  DistinctionReason reason = DistinctionReason::None;
  std::optional<StructureSignature> signature_a;
  std::optional<StructureSignature> signature_b;
  std::optional<RuleReport> rules;
  std::optional<RelationWitness> relation;
  std::optional<ParamBijection> phi;
  std::vector<std::string> notes;
};

struct CompareOptions {
  SearchOptions search;
  std::size_t relation_max_params = 6;
  std::size_t relation_max_coefficients = 8;
};

/// structure signature -> geometric rules -> coefficient relations ->
/// permutation search; Inconclusive when nothing decides.
Verdict compare(const ModelSpec& a, const ModelSpec& b, const CompareOptions& opts = {});

struct IdentifiabilityResult {
  bool identifiable = false;
  int rank = 0;
  int param_count = 0;
  int coefficient_count = 0;
  int sample_points_used = 0;
  std::vector<int> sample_ranks;
};

/// Jacobian of the coefficient map, differentiated symbolically and
/// evaluated exactly at `samples` random integer points in [1, 10^6].
IdentifiabilityResult local_identifiability(const ModelSpec& m, std::uint64_t seed,
                                            int samples = 3);

/// Rank over Q of a dense rational matrix.
int rational_rank(std::vector<std::vector<mpq_class>> rows);

struct RelationOptions {
  std::size_t max_params = 6;
  std::size_t max_coefficients = 8;
};

/// Generators of the ideal of polynomial relations among the coefficients
/// c1..ck (coefficient_map order), as a reduced Groebner basis of the
/// elimination ideal: monic, sorted by leading monomial ascending. Throws
/// CapExceeded ("relations refused") past the caps.
std::vector<MPoly> coefficient_relations(const ModelSpec& m, const RelationOptions& opts = {});

/// Replaces c_k by the k-th coefficient polynomial.
MPoly substitute_coefficients(const MPoly& relation, const CoefficientMap& c);

}  // namespace lincomp
