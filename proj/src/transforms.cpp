#include "lincomp/transforms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "lincomp/error.hpp"
#include "lincomp/verify.hpp"

namespace lincomp {

std::string to_string(PathPattern p) {
  switch (p) {
    case PathPattern::PurePath: return "path";
    case PathPattern::Leaks: return "leaks";
    case PathPattern::TerminalCycle: return "terminal-cycle";
    case PathPattern::Detour: return "detour";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxPaths = 100000;

std::vector<std::vector<int>> simple_paths(const ModelSpec& m, int from, int to) {
  std::vector<std::vector<int>> out;
  std::vector<int> stack{from};
  std::vector<char> on(m.size() + 1, 0);
  on[from] = 1;
  std::function<void(int)> dfs = [&](int v) {
    if (out.size() >= kMaxPaths) return;
    if (v == to) {
      out.push_back(stack);
      return;
    }
    for (int w : m.successors(v)) {
      if (on[w]) continue;
      on[w] = 1;
      stack.push_back(w);
      dfs(w);
      stack.pop_back();
      on[w] = 0;
    }
  };
  dfs(from);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool weakly_connected(const ModelSpec& m, const std::vector<int>& vertices) {
  if (vertices.empty()) return false;
  std::set<int> in(vertices.begin(), vertices.end());
  std::set<int> seen{vertices.front()};
  std::vector<int> todo{vertices.front()};
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (const Edge& e : m.edges()) {
      int w = e.from == v ? e.to : (e.to == v ? e.from : 0);
      if (w != 0 && in.count(w) && seen.insert(w).second) todo.push_back(w);
    }
  }
  return seen.size() == in.size();
}

std::optional<SkeletalPathWitness> classify(const ModelSpec& m, const std::vector<int>& path) {
  const int n = static_cast<int>(path.size());
  std::vector<int> pos(m.size() + 1, 0);
  for (int k = 0; k < n; ++k) pos[path[k]] = k + 1;
  std::vector<int> rest;
  for (int v = 1; v <= m.size(); ++v) {
    if (pos[v] == 0) rest.push_back(v);
  }

  std::vector<Edge> extra;
  for (const Edge& e : m.edges()) {
    const bool on_path = pos[e.from] != 0 && pos[e.to] == pos[e.from] + 1;
    if (!on_path) extra.push_back(e);
  }

  SkeletalPathWitness w;
  w.path = path;
  if (rest.empty()) {
    if (extra.empty()) {
      w.pattern = m.leaks().empty() ? PathPattern::PurePath : PathPattern::Leaks;
      return w;
    }
    if (n >= 2 && extra.size() == 1 && extra[0].from == path[n - 1] &&
        extra[0].to == path[n - 2] && m.leaks().empty()) {
      w.pattern = PathPattern::TerminalCycle;
      return w;
    }
    return std::nullopt;
  }

  std::vector<Edge> off, on;
  for (const Edge& e : extra) {
    const bool from_path = pos[e.from] != 0;
    const bool to_path = pos[e.to] != 0;
    if (from_path && to_path) return std::nullopt;
    if (from_path) off.push_back(e);
    if (to_path) on.push_back(e);
  }
  if (off.size() != 1 || on.size() != 1) return std::nullopt;
  DetourShape d{pos[off[0].from], pos[on[0].to], off[0].to, on[0].from, rest};
  if (d.i > d.j || !weakly_connected(m, rest)) return std::nullopt;
  w.pattern = PathPattern::Detour;
  w.detour = std::move(d);
  return w;
}

void certify(const ModelSpec& source, const TransformResult& r, const std::string& what) {
#ifdef LINCOMP_CHECKED_TRANSFORMS
  if (!verify_permutation(source, r.model, r.phi)) {
    throw CertificationError(what + ": result fails certification under " + r.phi.to_string());
  }
#else
  (void)source;
  (void)r;
  (void)what;
#endif
}

// The single-leak path witness required by move_leak and
// leak_to_terminal_cycle; returns the leak position.
std::pair<SkeletalPathWitness, int> single_leak_path(const ModelSpec& m, const std::string& op) {
  if (m.leaks().size() != 1) {
    throw PreconditionError(op + " requires a path model with exactly one leak");
  }
  for (const SkeletalPathWitness& w : skeletal_path_witnesses(m)) {
    if (w.pattern != PathPattern::Leaks || w.length() != m.size()) continue;
    const int leak = m.leaks().front();
    for (int k = 1; k <= w.length(); ++k) {
      if (w.at(k) == leak) return {w, k};
    }
  }
  throw PreconditionError(op + " requires a path model with exactly one leak");
}

ModelSpec with_edges_and_leaks(const ModelSpec& m, std::vector<Edge> edges, std::vector<int> leaks) {
  return ModelSpec(m.size(), std::move(edges), m.inputs(), m.outputs(), std::move(leaks));
}

}  // namespace

std::vector<SkeletalPathWitness> skeletal_path_witnesses(const ModelSpec& m) {
  if (m.inputs().size() != 1 || m.outputs().size() != 1) {
    throw PreconditionError("pattern not supported: a skeletal path needs one input and one output");
  }
  const auto paths = simple_paths(m, m.inputs().front(), m.outputs().front());
  if (paths.empty()) throw PreconditionError("no spanning skeleton: no path from input to output");
  std::vector<SkeletalPathWitness> out;
  for (const auto& p : paths) {
    if (auto w = classify(m, p)) out.push_back(std::move(*w));
  }
  if (out.empty()) throw PreconditionError("pattern not supported");
  return out;
}

SkeletalPathWitness match_skeletal_path(const ModelSpec& m) {
  return skeletal_path_witnesses(m).front();
}

TransformResult move_leak(const ModelSpec& m, int i, int j) {
  const int n = m.size();
  if (i < 1 || i >= n || j < 1 || j >= n) {
    throw PreconditionError("move_leak requires positions i, j < n (n = " + std::to_string(n) +
                            ", i = " + std::to_string(i) + ", j = " + std::to_string(j) + ")");
  }
  auto [w, at] = single_leak_path(m, "move_leak");
  if (at != i) {
    throw PreconditionError("move_leak: the leak sits at path position " + std::to_string(at) +
                            ", not " + std::to_string(i));
  }
  TransformResult r{with_edges_and_leaks(m, m.edges(), {w.at(j)}),
                    ParamBijection::identity(m.params())};
  if (i == j) return r;
  std::map<Param, Param> phi = r.phi.mapping();
  const Param edge_i = Param::edge(w.at(i + 1), w.at(i));
  const Param edge_j = Param::edge(w.at(j + 1), w.at(j));
  phi.erase(Param::leak(w.at(i)));
  phi[Param::leak(w.at(i))] = Param::leak(w.at(j));
  phi[edge_i] = edge_j;
  phi[edge_j] = edge_i;
  r.phi = ParamBijection(std::move(phi));
  certify(m, r, "move_leak");
  return r;
}

TransformResult leak_to_terminal_cycle(const ModelSpec& m) {
  auto [w, at] = single_leak_path(m, "leak_to_terminal_cycle");
  const int n = w.length();
  if (n < 2 || at != n - 1) {
    throw PreconditionError("leak_to_terminal_cycle requires the leak at path position n-1 = " +
                            std::to_string(n - 1));
  }
  std::vector<Edge> edges = m.edges();
  edges.push_back(Edge{w.at(n), w.at(n - 1)});
  TransformResult r{with_edges_and_leaks(m, std::move(edges), {}), ParamBijection()};
  std::map<Param, Param> phi;
  for (Param p : m.params()) phi.emplace(p, p);
  phi.erase(Param::leak(w.at(n - 1)));
  phi.emplace(Param::leak(w.at(n - 1)), Param::edge(w.at(n - 1), w.at(n)));
  r.phi = ParamBijection(std::move(phi));
  certify(m, r, "leak_to_terminal_cycle");
  return r;
}

TransformResult shift_detour_candidate(const ModelSpec& m, const SkeletalPathWitness& w) {
  if (w.pattern != PathPattern::Detour || !w.detour) {
    throw PreconditionError("shift_detour requires a detour witness");
  }
  const DetourShape& d = *w.detour;
  const int n = w.length();
  for (int k = 1; k < n; ++k) {
    if (!m.has_edge(w.at(k), w.at(k + 1))) {
      throw PreconditionError("witness path is not a path of the model");
    }
  }
  if (d.i < 1 || d.j < 1 || d.i > n || d.j > n || !m.has_edge(w.at(d.i), d.s) ||
      !m.has_edge(d.t, w.at(d.j))) {
    throw PreconditionError("witness detour does not match the model");
  }
  if (d.i >= n || d.j >= n) {
    throw PreconditionError("shift_detour cannot move a ramp past the output");
  }

  std::vector<Edge> edges;
  for (const Edge& e : m.edges()) {
    if (e == Edge{w.at(d.i), d.s} || e == Edge{d.t, w.at(d.j)}) continue;
    edges.push_back(e);
  }
  edges.push_back(Edge{w.at(d.i + 1), d.s});
  edges.push_back(Edge{d.t, w.at(d.j + 1)});

  std::map<Param, Param> phi;
  for (Param p : m.params()) phi.emplace(p, p);
  for (int k = 1; k < n; ++k) {
    const Param from = Param::edge(w.at(k + 1), w.at(k));
    phi[from] = k + 1 < n ? Param::edge(w.at(k + 2), w.at(k + 1)) : Param::edge(w.at(2), w.at(1));
  }
  phi.erase(Param::edge(d.s, w.at(d.i)));
  phi.erase(Param::edge(w.at(d.j), d.t));
  phi.emplace(Param::edge(d.s, w.at(d.i)), Param::edge(d.s, w.at(d.i + 1)));
  phi.emplace(Param::edge(w.at(d.j), d.t), Param::edge(w.at(d.j + 1), d.t));
  return TransformResult{with_edges_and_leaks(m, std::move(edges), m.leaks()),
                         ParamBijection(std::move(phi))};
}

TransformResult shift_detour(const ModelSpec& m, const SkeletalPathWitness& w) {
  if (w.pattern != PathPattern::Detour || !w.detour) {
    throw PreconditionError("shift_detour requires a detour witness");
  }
  const DetourShape& d = *w.detour;
  const int n = w.length();
  if (!(1 <= d.i && d.i <= d.j && d.j <= n - 1)) {
    throw PreconditionError("shift_detour requires 1 <= i <= j <= n-1 (i = " + std::to_string(d.i) +
                            ", j = " + std::to_string(d.j) + ", n = " + std::to_string(n) + ")");
  }
  if (d.i == n - 1) {
    throw PreconditionError(
        "shift_detour requires i < n-1: moving both ramps onto the output changes the equations");
  }
  for (int l : m.leaks()) {
    if (!std::binary_search(d.vertices.begin(), d.vertices.end(), l)) {
      throw PreconditionError("shift_detour requires every leak inside the detour (leak at " +
                              std::to_string(l) + ")");
    }
  }
  TransformResult r = shift_detour_candidate(m, w);
  certify(m, r, "shift_detour");
  return r;
}

ModelSpec branch_submodel(const ModelSpec& m, const std::vector<int>& vertices) {
  std::set<int> in(vertices.begin(), vertices.end());
  auto inside = [&](int v) { return in.count(v) != 0; };
  std::vector<Edge> edges;
  for (const Edge& e : m.edges()) {
    if (inside(e.from) && inside(e.to)) edges.push_back(e);
  }
  auto keep = [&](const std::vector<int>& s) {
    std::vector<int> out;
    std::copy_if(s.begin(), s.end(), std::back_inserter(out), inside);
    return out;
  };
  return ModelSpec(m.size(), std::move(edges), keep(m.inputs()), keep(m.outputs()),
                   keep(m.leaks()), m.name());
}

ParamBijection compose_sink(const ModelSpec& a, const ModelSpec& b, const Branch& branch,
                            const ParamBijection& inner) {
  if (a.size() != b.size() || a.inputs() != b.inputs() || a.outputs() != b.outputs()) {
    throw PreconditionError("models differ outside the branch: sizes or io sets differ");
  }
  std::set<int> va(branch.in_a.begin(), branch.in_a.end());
  std::set<int> vb(branch.in_b.begin(), branch.in_b.end());
  for (const auto* s : {&va, &vb}) {
    if (s->empty() || *s->begin() < 1 || *s->rbegin() > a.size()) {
      throw PreconditionError("branch compartments must be a nonempty subset of 1.." +
                              std::to_string(a.size()));
    }
  }
  auto outside_edges = [](const ModelSpec& m, const std::set<int>& v) {
    std::vector<Edge> out;
    for (const Edge& e : m.edges()) {
      if (!v.count(e.from) || !v.count(e.to)) out.push_back(e);
    }
    return out;
  };
  auto outside_leaks = [](const ModelSpec& m, const std::set<int>& v) {
    std::vector<int> out;
    for (int l : m.leaks()) {
      if (!v.count(l)) out.push_back(l);
    }
    return out;
  };
  if (outside_edges(a, va) != outside_edges(b, vb) || outside_leaks(a, va) != outside_leaks(b, vb)) {
    throw PreconditionError("models differ outside the branch");
  }

  const ModelSpec sa = branch_submodel(a, branch.in_a);
  const ModelSpec sb = branch_submodel(b, branch.in_b);
  bool inner_ok = false;
  try {
    inner_ok = verify_permutation(sa, sb, inner);
  } catch (const Error& e) {
    throw PreconditionError(std::string("branch bijection invalid: ") + e.what());
  }
  if (!inner_ok) throw PreconditionError("branch bijection does not certify the branch submodels");

  std::map<Param, Param> m;
  for (Param p : sa.params()) m.emplace(p, inner(p));
  for (Param p : a.params()) m.emplace(p, p);
  ParamBijection phi;
  try {
    phi = ParamBijection(std::move(m));
  } catch (const BijectionError& e) {
    throw PreconditionError(std::string("branch bijection clashes with a shared parameter: ") +
                            e.what());
  }
  if (!verify_permutation(a, b, phi)) {
    throw PreconditionError("composed bijection fails certification: " + phi.to_string());
  }
  return phi;
}

ParamBijection reversed_bijection(const ParamBijection& phi) {
  auto flip = [](Param p) { return p.is_leak() ? p : Param::edge(p.from, p.to); };
  std::map<Param, Param> m;
  for (const auto& [from, to] : phi.mapping()) m.emplace(flip(from), flip(to));
  return ParamBijection(std::move(m));
}

ParamBijection compose_source(const ModelSpec& a, const ModelSpec& b, const Branch& branch,
                              const ParamBijection& inner) {
  const ModelSpec ra = reverse_model(a).model;
  const ModelSpec rb = reverse_model(b).model;
  const ParamBijection phi = reversed_bijection(
      compose_sink(ra, rb, branch, reversed_bijection(inner)));
  if (!verify_permutation(a, b, phi)) {
    throw PreconditionError("composed bijection fails certification: " + phi.to_string());
  }
  return phi;
}

std::string canonical_form(const ModelSpec& m) {
  std::vector<int> label(m.size() + 1, 0);
  int next = 1;
  auto bfs = [&](int root) {
    if (label[root]) return;
    std::deque<int> q{root};
    label[root] = next++;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : m.successors(v)) {
        if (!label[w]) {
          label[w] = next++;
          q.push_back(w);
        }
      }
    }
  };
  for (int in : m.inputs()) bfs(in);
  for (int v = 1; v <= m.size(); ++v) bfs(v);

  std::vector<Edge> edges;
  for (const Edge& e : m.edges()) edges.push_back(Edge{label[e.from], label[e.to]});
  auto relabel = [&](const std::vector<int>& s) {
    std::vector<int> out;
    for (int v : s) out.push_back(label[v]);
    return out;
  };
  return format_model(ModelSpec(m.size(), std::move(edges), relabel(m.inputs()),
                                relabel(m.outputs()), relabel(m.leaks())));
}

std::vector<FamilyMember> enumerate_family(const ModelSpec& m, int depth) {
  skeletal_path_witnesses(m);  // throws when the pattern is unsupported

  std::vector<FamilyMember> members{{m, ParamBijection::identity(m.params()), 0}};
  std::set<std::string> seen{canonical_form(m)};
  for (std::size_t head = 0; head < members.size(); ++head) {
    if (members[head].depth >= depth) continue;
    const FamilyMember current = members[head];
    std::vector<TransformResult> next;

    std::vector<SkeletalPathWitness> witnesses;
    try {
      witnesses = skeletal_path_witnesses(current.model);
    } catch (const PreconditionError&) {
      continue;
    }
    for (const SkeletalPathWitness& w : witnesses) {
      if (w.pattern == PathPattern::Leaks && current.model.leaks().size() == 1 &&
          w.length() == current.model.size()) {
        const int n = w.length();
        int at = 0;
        for (int k = 1; k <= n; ++k) {
          if (w.at(k) == current.model.leaks().front()) at = k;
        }
        if (at >= 1 && at < n) {
          for (int j = 1; j < n; ++j) {
            if (j != at) next.push_back(move_leak(current.model, at, j));
          }
          if (at == n - 1) next.push_back(leak_to_terminal_cycle(current.model));
        }
      } else if (w.pattern == PathPattern::Detour) {
        try {
          next.push_back(shift_detour(current.model, w));
        } catch (const PreconditionError&) {
          // witness not shiftable
        }
      }
    }
    for (TransformResult& r : next) {
      if (!seen.insert(canonical_form(r.model)).second) continue;
      members.push_back({std::move(r.model), r.phi.after(current.phi), current.depth + 1});
    }
  }
  return members;
}

}  // namespace lincomp
