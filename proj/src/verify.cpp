#include "lincomp/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "lincomp/error.hpp"
#include "lincomp/groebner.hpp"

namespace lincomp {

bool verify_permutation(const ModelSpec& a, const ModelSpec& b, const ParamBijection& phi,
                        Restriction r) {
  const std::vector<Param> pa = a.params();
  phi.require_total(pa);
  std::vector<Param> mapped;
  for (Param p : pa) mapped.push_back(phi(p));
  std::sort(mapped.begin(), mapped.end());
  if (mapped != b.params()) return false;

  const CoefficientMap ca = coefficient_map(a, r);
  const CoefficientMap cb = coefficient_map(b, r);
  if (ca.keys() != cb.keys()) return false;
  return apply_bijection(ca, phi) == cb;
}

namespace {

// For each coefficient index, the sorted (exponent, term degree, coefficient)
// triples of the terms containing the parameter.
using Profile = std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, mpq_class>>>;

Profile profile(const CoefficientMap& c, Param p) {
  const Var v = param_var(p);
  Profile out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (const auto& [m, q] : c.entries[k].value.terms()) {
      if (std::uint32_t e = m.exponent(v)) out[k].emplace_back(e, m.degree(), q);
    }
    std::sort(out[k].begin(), out[k].end());
  }
  return out;
}

class PermutationSearch {
 public:
  PermutationSearch(const ModelSpec& a, const ModelSpec& b)
      : a_(a), b_(b), pa_(a.params()), pb_(b.params()),
        ca_(coefficient_map(a)), cb_(coefficient_map(b)) {}

  std::optional<ParamBijection> run() {
    for (std::size_t k = 0; k < ca_.size(); ++k) {
      if (ca_.entries[k].value.size() != cb_.entries[k].value.size()) return std::nullopt;
    }
    std::vector<Profile> prof_b;
    for (Param q : pb_) prof_b.push_back(profile(cb_, q));
    candidates_.resize(pa_.size());
    for (std::size_t i = 0; i < pa_.size(); ++i) {
      const Profile pr = profile(ca_, pa_[i]);
      for (std::size_t j = 0; j < pb_.size(); ++j) {
        if (pr == prof_b[j]) candidates_[i].push_back(j);
      }
      if (candidates_[i].empty()) return std::nullopt;
    }

    // Most constrained parameters first.
    order_.resize(pa_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return candidates_[x].size() < candidates_[y].size();
    });
    std::vector<std::size_t> rank(pa_.size());
    for (std::size_t d = 0; d < order_.size(); ++d) rank[order_[d]] = d;

    // Each term of a is checked at the depth where its last parameter is
    // assigned.
    checks_.assign(pa_.size(), {});
    std::map<Var, std::size_t> index_of;
    for (std::size_t i = 0; i < pa_.size(); ++i) index_of[param_var(pa_[i])] = i;
    for (std::size_t k = 0; k < ca_.size(); ++k) {
      for (const auto& [m, q] : ca_.entries[k].value.terms()) {
        std::size_t deepest = 0;
        bool any = false;
        for (const auto& [v, e] : m.factors()) {
          if (!is_param_var(v)) continue;
          deepest = std::max(deepest, rank[index_of.at(v)]);
          any = true;
        }
        if (any) checks_[deepest].push_back({k, &m, &q});
      }
    }

    assignment_.assign(pa_.size(), kUnassigned);
    used_.assign(pb_.size(), false);
    if (!extend(0)) return std::nullopt;
    std::map<Param, Param> m;
    for (std::size_t i = 0; i < pa_.size(); ++i) m.emplace(pa_[i], pb_[assignment_[i]]);
    ParamBijection phi(std::move(m));
    if (!verify_permutation(a_, b_, phi)) return std::nullopt;
    return phi;
  }

 private:
  static constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

  struct TermCheck {
    std::size_t coefficient;
    const Monomial* monomial;
    const mpq_class* value;
  };

  bool consistent(std::size_t depth) const {
    for (const TermCheck& c : checks_[depth]) {
      std::vector<Monomial::Factor> f;
      for (const auto& [v, e] : c.monomial->factors()) {
        if (!is_param_var(v)) {
          f.emplace_back(v, e);
          continue;
        }
        const auto it = std::lower_bound(pa_.begin(), pa_.end(), var_param(v));
        f.emplace_back(param_var(pb_[assignment_[it - pa_.begin()]]), e);
      }
      const auto& terms = cb_.entries[c.coefficient].value.terms();
      auto hit = terms.find(Monomial(std::move(f)));
      if (hit == terms.end() || hit->second != *c.value) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t i = order_[depth];
    for (std::size_t j : candidates_[i]) {
      if (used_[j]) continue;
      assignment_[i] = j;
      used_[j] = true;
      if (consistent(depth) && extend(depth + 1)) return true;
      used_[j] = false;
      assignment_[i] = kUnassigned;
    }
    return false;
  }

  const ModelSpec& a_;
  const ModelSpec& b_;
  std::vector<Param> pa_, pb_;
  CoefficientMap ca_, cb_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<TermCheck>> checks_;
  std::vector<std::size_t> assignment_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<ParamBijection> search_permutation(const ModelSpec& a, const ModelSpec& b,
                                                 const SearchOptions& opts) {
  const std::size_t na = a.params().size();
  if (na != b.params().size()) return std::nullopt;
  if (na > opts.max_params) {
    throw CapExceeded("search refused: " + std::to_string(na) + " parameters exceed the cap of " +
                      std::to_string(opts.max_params));
  }
  if (!(structure_signature(a) == structure_signature(b))) return std::nullopt;
  return PermutationSearch(a, b).run();
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Distinguishable: return "Distinguishable";
    case VerdictKind::PermutationIndistinguishable: return "PermutationIndistinguishable";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(DistinctionReason r) {
  switch (r) {
    case DistinctionReason::None: return "none";
    case DistinctionReason::Structure: return "structure";
    case DistinctionReason::Rule: return "rule";
    case DistinctionReason::Relation: return "relation";
  }
  return "?";
}

MPoly substitute_coefficients(const MPoly& relation, const CoefficientMap& c) {
  return relation.substitute([&](Var v) -> MPoly {
    if (is_param_var(v)) return MPoly::variable(v);
    const int k = var_coefficient_index(v);
    if (k < 1 || k > static_cast<int>(c.size())) {
      throw PreconditionError("relation uses c" + std::to_string(k) + " but the model has " +
                              std::to_string(c.size()) + " coefficients");
    }
    return c.entries[static_cast<std::size_t>(k - 1)].value;
  });
}

namespace {

bool within(const ModelSpec& m, const CompareOptions& opts) {
  return m.params().size() <= opts.relation_max_params &&
         coefficient_map(m).size() <= opts.relation_max_coefficients;
}

std::optional<RelationWitness> failing_relation(const ModelSpec& owner, const ModelSpec& other,
                                                const std::string& tag,
                                                const CompareOptions& opts) {
  RelationOptions ro{opts.relation_max_params, opts.relation_max_coefficients};
  const CoefficientMap c = coefficient_map(other);
  for (const MPoly& rel : coefficient_relations(owner, ro)) {
    MPoly residue = substitute_coefficients(rel, c);
    if (!residue.is_zero()) return RelationWitness{tag, rel, residue};
  }
  return std::nullopt;
}

}  // namespace

Verdict compare(const ModelSpec& a, const ModelSpec& b, const CompareOptions& opts) {
  Verdict v;
  StructureSignature sa = structure_signature(a);
  StructureSignature sb = structure_signature(b);
  if (!(sa == sb)) {
    v.kind = VerdictKind::Distinguishable;
    v.reason = DistinctionReason::Structure;
    v.signature_a = std::move(sa);
    v.signature_b = std::move(sb);
    return v;
  }

  RuleReport rules = godfrey_rules(a, b);
  if (!rules.pass()) {
    v.kind = VerdictKind::Distinguishable;
    v.reason = DistinctionReason::Rule;
    v.rules = std::move(rules);
    return v;
  }

  bool relations_checked = false;
  for (const auto& [owner, other, tag] :
       {std::tuple{&a, &b, "a"}, std::tuple{&b, &a, "b"}}) {
    if (!within(*owner, opts)) continue;
    relations_checked = true;
    if (auto w = failing_relation(*owner, *other, tag, opts)) {
      v.kind = VerdictKind::Distinguishable;
      v.reason = DistinctionReason::Relation;
      v.relation = std::move(w);
      return v;
    }
  }
  if (!relations_checked) v.notes.push_back("coefficient relations skipped: model exceeds caps");

  try {
    if (auto phi = search_permutation(a, b, opts.search)) {
      v.kind = VerdictKind::PermutationIndistinguishable;
      v.phi = std::move(phi);
      return v;
    }
    v.notes.push_back("no parameter renaming maps one coefficient map onto the other");
  } catch (const CapExceeded& e) {
    v.notes.push_back(e.what());
  }
  v.kind = VerdictKind::Inconclusive;
  v.notes.push_back(
      "to decide, equate the two coefficient maps and solve for one parameter vector in terms "
      "of the other, keeping only positive solutions");
  return v;
}

int rational_rank(std::vector<std::vector<mpq_class>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const auto& pr = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / pr[c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * pr[k];
    }
    ++rank;
  }
  return rank;
}

IdentifiabilityResult local_identifiability(const ModelSpec& m, std::uint64_t seed, int samples) {
  const std::vector<Param> params = m.params();
  const CoefficientMap c = coefficient_map(m);
  std::vector<std::vector<MPoly>> jac(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (Param p : params) jac[k].push_back(c.entries[k].value.derivative(param_var(p)));
  }

  IdentifiabilityResult res;
  res.param_count = static_cast<int>(params.size());
  res.coefficient_count = static_cast<int>(c.size());
  res.sample_points_used = std::max(samples, 3);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw(1, 1000000);
  for (int s = 0; s < res.sample_points_used; ++s) {
    std::map<Var, mpq_class> point;
    for (Param p : params) point[param_var(p)] = mpq_class(draw(rng));
    auto value = [&](Var v) { return point.at(v); };
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& row : jac) {
      std::vector<mpq_class> r;
      for (const MPoly& e : row) r.push_back(e.evaluate(value));
      rows.push_back(std::move(r));
    }
    const int rank = rational_rank(std::move(rows));
    res.sample_ranks.push_back(rank);
    res.rank = std::max(res.rank, rank);
  }
  res.identifiable = res.rank == res.param_count;
  return res;
}

std::vector<MPoly> coefficient_relations(const ModelSpec& m, const RelationOptions& opts) {
  const std::size_t np = m.params().size();
  const CoefficientMap c = coefficient_map(m);
  if (np > opts.max_params || c.size() > opts.max_coefficients) {
    throw CapExceeded("relations refused: " + std::to_string(np) + " parameters and " +
                      std::to_string(c.size()) + " coefficients exceed the caps (" +
                      std::to_string(opts.max_params) + ", " +
                      std::to_string(opts.max_coefficients) + ")");
  }
  std::vector<MPoly> gens;
  for (std::size_t k = 0; k < c.size(); ++k) {
    gens.push_back(MPoly::variable(coefficient_var(static_cast<int>(k) + 1)) -
                   c.entries[k].value);
  }
  BlockOrder order{[](Var v) { return is_param_var(v); }};
  return eliminate(gens, order);
}

}  // namespace lincomp
