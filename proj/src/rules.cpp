#include "lincomp/rules.hpp"

#include <algorithm>

#include "lincomp/error.hpp"

namespace lincomp {

namespace {

std::vector<std::string> as_strings(const std::vector<int>& values) {
  std::vector<std::string> out;
  for (int v : values) out.push_back(std::to_string(v));
  return out;
}

std::vector<Distance> sorted_distances(const GraphInvariants& g) {
  std::vector<Distance> d;
  for (const auto& [pair, dist] : g.shortest_dist) d.push_back(dist);
  std::sort(d.begin(), d.end(), distance_less);
  return d;
}

std::vector<int> sorted_counts(const std::map<int, int>& counts) {
  std::vector<int> out;
  for (const auto& [v, c] : counts) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

RuleOutcome compare_ints(int rule, std::string name, const std::vector<int>& a,
                         const std::vector<int>& b) {
  RuleOutcome r{rule, std::move(name), a == b, {}, {}};
  r.left = as_strings(a);
  r.right = as_strings(b);
  return r;
}

}  // namespace

bool RuleReport::pass() const {
  return std::all_of(rules.begin(), rules.end(),
                     [](const RuleOutcome& r) { return r.pass; });
}

const RuleOutcome* RuleReport::first_failure() const {
  for (const RuleOutcome& r : rules) {
    if (!r.pass) return &r;
  }
  return nullptr;
}

RuleReport godfrey_rules(const ModelSpec& a, const ModelSpec& b) {
  if (a.inputs().size() != b.inputs().size() ||
      a.outputs().size() != b.outputs().size()) {
    throw PreconditionError("incomparable io cardinalities");
  }
  const GraphInvariants ga = graph_invariants(a);
  const GraphInvariants gb = graph_invariants(b);

  RuleReport report;
  const auto da = sorted_distances(ga);
  const auto db = sorted_distances(gb);
  RuleOutcome& r1 = report.rules[0];
  r1.rule = 1;
  r1.name = "shortest input-output distances";
  r1.pass = da == db;
  for (const auto& d : da) r1.left.push_back(to_string(d));
  for (const auto& d : db) r1.right.push_back(to_string(d));

  report.rules[1] = compare_ints(2, "compartments reaching each output",
                                 sorted_counts(ga.reach_to_output),
                                 sorted_counts(gb.reach_to_output));
  report.rules[2] = compare_ints(3, "compartments reachable from each input",
                                 sorted_counts(ga.reach_from_input),
                                 sorted_counts(gb.reach_from_input));
  report.rules[3] = compare_ints(4, "trap count",
                                 {static_cast<int>(ga.traps.size())},
                                 {static_cast<int>(gb.traps.size())});
  return report;
}

std::vector<RhsCount> rhs_coefficient_count(const ModelSpec& m) {
  std::vector<RhsCount> out;
  for (int o : m.outputs()) {
    const int n = static_cast<int>(vertices_reaching(m, o).size());
    for (int in : m.inputs()) {
      RhsCount c{in, o, 0, true};
      if (in == o) {
        c.count = n - 1;
      } else if (Distance d = distances_from(m, in)[o]) {
        c.count = n - *d;
      } else {
        c.reachable = false;
      }
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace lincomp
