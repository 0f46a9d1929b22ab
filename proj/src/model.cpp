#include "lincomp/model.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include <nlohmann/json.hpp>

#include "lincomp/error.hpp"

namespace lincomp {

namespace {

std::string edge_text(const Edge& e) {
  return "[" + std::to_string(e.from) + "," + std::to_string(e.to) + "]";
}

std::vector<int> sorted_unique_set(std::vector<int> v, int n,
                                   const char* field) {
  std::sort(v.begin(), v.end());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 1 || v[k] > n) {
      throw ModelError(std::string(field) + " compartment " +
                       std::to_string(v[k]) + " out of range 1.." +
                       std::to_string(n));
    }
    if (k > 0 && v[k] == v[k - 1]) {
      throw ModelError("duplicate " + std::string(field) + " compartment " +
                       std::to_string(v[k]));
    }
  }
  return v;
}

}  // namespace

ModelSpec::ModelSpec(int n, std::vector<Edge> edges, std::vector<int> inputs,
                     std::vector<int> outputs, std::vector<int> leaks,
                     std::string name)
    : n_(n), name_(std::move(name)) {
  if (n < 1) {
    throw ModelError("compartment count must be positive, got " +
                     std::to_string(n));
  }
  for (const Edge& e : edges) {
    if (e.from == e.to) {
      throw ModelError("self-loop at " + std::to_string(e.from));
    }
    for (int v : {e.from, e.to}) {
      if (v < 1 || v > n) {
        throw ModelError("edge " + edge_text(e) + " endpoint " +
                         std::to_string(v) + " out of range 1.." +
                         std::to_string(n));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k] == edges[k - 1]) {
      throw ModelError("duplicate edge " + edge_text(edges[k]));
    }
  }
  edges_ = std::move(edges);
  inputs_ = sorted_unique_set(std::move(inputs), n, "input");
  outputs_ = sorted_unique_set(std::move(outputs), n, "output");
  leaks_ = sorted_unique_set(std::move(leaks), n, "leak");
}

bool ModelSpec::has_edge(int from, int to) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

bool ModelSpec::is_input(int c) const {
  return std::binary_search(inputs_.begin(), inputs_.end(), c);
}

bool ModelSpec::is_output(int c) const {
  return std::binary_search(outputs_.begin(), outputs_.end(), c);
}

bool ModelSpec::is_leak(int c) const {
  return std::binary_search(leaks_.begin(), leaks_.end(), c);
}

std::vector<Param> ModelSpec::params() const {
  std::vector<Param> out;
  out.reserve(leaks_.size() + edges_.size());
  for (int l : leaks_) out.push_back(Param::leak(l));
  for (const Edge& e : edges_) out.push_back(Param::edge(e.to, e.from));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ModelSpec::successors(int c) const {
  std::vector<int> out;
  for (const Edge& e : edges_) {
    if (e.from == c) out.push_back(e.to);
  }
  return out;
}

std::vector<int> ModelSpec::predecessors(int c) const {
  std::vector<int> out;
  for (const Edge& e : edges_) {
    if (e.to == c) out.push_back(e.from);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void ModelSpec::require_io() const {
  if (inputs_.empty()) throw ModelError("inputs is empty");
  if (outputs_.empty()) throw ModelError("outputs is empty");
}

ModelSpec ModelSpec::with_name(std::string name) const {
  ModelSpec copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool ModelSpec::operator==(const ModelSpec& other) const {
  return n_ == other.n_ && edges_ == other.edges_ &&
         inputs_ == other.inputs_ && outputs_ == other.outputs_ &&
         leaks_ == other.leaks_;
}

// ---------------------------------------------------------------------------
// Model file format

namespace {

using nlohmann::json;

int read_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) {
    throw ModelError(where + " must be an integer");
  }
  return v.get<int>();
}

std::vector<int> read_int_array(const json& obj, const char* field,
                                bool required) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    if (required) throw ModelError(std::string("missing field '") + field + "'");
    return {};
  }
  if (!it->is_array()) {
    throw ModelError(std::string("field '") + field + "' must be an array");
  }
  std::vector<int> out;
  for (std::size_t k = 0; k < it->size(); ++k) {
    out.push_back(read_int((*it)[k], std::string(field) + "[" +
                                         std::to_string(k) + "]"));
  }
  return out;
}

}  // namespace

ModelSpec parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) {
    throw ParseError("model must be a JSON object", 0);
  }
  static const std::set<std::string> known = {"n",      "edges", "inputs",
                                              "outputs", "leaks", "name"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) throw ModelError("unknown field '" + key + "'");
  }
  auto n_it = doc.find("n");
  if (n_it == doc.end()) throw ModelError("missing field 'n'");
  int n = read_int(*n_it, "n");

  std::vector<Edge> edges;
  if (auto it = doc.find("edges"); it != doc.end()) {
    if (!it->is_array()) throw ModelError("field 'edges' must be an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const json& e = (*it)[k];
      std::string where = "edges[" + std::to_string(k) + "]";
      if (!e.is_array() || e.size() != 2) {
        throw ModelError(where + " must be a [from, to] pair");
      }
      edges.push_back(Edge{read_int(e[0], where + "[0]"),
                           read_int(e[1], where + "[1]")});
    }
  } else {
    throw ModelError("missing field 'edges'");
  }

  std::string name;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ModelError("field 'name' must be a string");
    name = it->get<std::string>();
  }

  ModelSpec m(n, std::move(edges), read_int_array(doc, "inputs", true),
              read_int_array(doc, "outputs", true),
              read_int_array(doc, "leaks", false), std::move(name));
  m.require_io();
  return m;
}

std::string format_model(const ModelSpec& m) {
  json doc = json::object();
  doc["n"] = m.size();
  json edges = json::array();
  for (const Edge& e : m.edges()) edges.push_back({e.from, e.to});
  doc["edges"] = edges;
  doc["inputs"] = m.inputs();
  doc["outputs"] = m.outputs();
  doc["leaks"] = m.leaks();
  if (!m.name().empty()) doc["name"] = m.name();
  return doc.dump();
}

// ---------------------------------------------------------------------------
// Compartmental matrix

LinearExpr& LinearExpr::add(Param p, const mpq_class& c) {
  auto it = std::lower_bound(
      terms.begin(), terms.end(), p,
      [](const auto& term, const Param& key) { return term.first < key; });
  if (it != terms.end() && it->first == p) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  } else if (c != 0) {
    terms.insert(it, {p, c});
  }
  return *this;
}

LinearExpr SymbolicMatrix::column_sum(int j) const {
  LinearExpr sum;
  for (int i = 1; i <= n_; ++i) {
    for (const auto& [p, c] : at(i, j).terms) sum.add(p, c);
    sum.constant += at(i, j).constant;
  }
  return sum;
}

SymbolicMatrix compartmental_matrix(const ModelSpec& m) {
  SymbolicMatrix a(m.size());
  for (const Edge& e : m.edges()) {
    Param p = Param::edge(e.to, e.from);
    a.at(e.to, e.from).add(p, 1);
    a.at(e.from, e.from).add(p, -1);
  }
  for (int l : m.leaks()) a.at(l, l).add(Param::leak(l), -1);
  return a;
}

// ---------------------------------------------------------------------------
// Graph algorithms

namespace {

std::vector<int> bfs(const ModelSpec& m, int start, bool forward) {
  std::vector<char> seen(m.size() + 1, 0);
  std::queue<int> q;
  seen[start] = 1;
  q.push(start);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : forward ? m.successors(v) : m.predecessors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
    }
  }
  std::vector<int> out;
  for (int v = 1; v <= m.size(); ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<int> vertices_reaching(const ModelSpec& m, int out) {
  return bfs(m, out, false);
}

std::vector<int> vertices_reachable_from(const ModelSpec& m, int source) {
  return bfs(m, source, true);
}

RestrictedModel output_reachable_subgraph(const ModelSpec& m, int out) {
  if (!m.is_output(out)) {
    throw PreconditionError("compartment " + std::to_string(out) +
                            " is not an output");
  }
  std::vector<int> keep = vertices_reaching(m, out);
  std::vector<int> relabel(m.size() + 1, 0);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    relabel[keep[k]] = static_cast<int>(k) + 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : m.edges()) {
    if (relabel[e.from] && relabel[e.to]) {
      edges.push_back(Edge{relabel[e.from], relabel[e.to]});
    }
  }
  auto restrict = [&](const std::vector<int>& set) {
    std::vector<int> r;
    for (int v : set) {
      if (relabel[v]) r.push_back(relabel[v]);
    }
    return r;
  };
  ModelSpec sub(static_cast<int>(keep.size()), std::move(edges),
                restrict(m.inputs()), restrict(m.outputs()),
                restrict(m.leaks()), m.name());
  return RestrictedModel{std::move(sub), std::move(keep)};
}

bool distance_less(const Distance& a, const Distance& b) {
  if (a.has_value() != b.has_value()) return a.has_value();
  return a.has_value() && *a < *b;
}

std::string to_string(const Distance& d) {
  return d ? std::to_string(*d) : std::string("unreachable");
}

std::vector<Distance> distances_from(const ModelSpec& m, int source) {
  std::vector<Distance> dist(m.size() + 1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : m.successors(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> strongly_connected_components(
    const ModelSpec& m) {
  const int n = m.size();
  std::vector<std::vector<int>> adj(n + 1);
  for (const Edge& e : m.edges()) adj[e.from].push_back(e.to);

  std::vector<int> index(n + 1, -1), low(n + 1, 0);
  std::vector<char> on_stack(n + 1, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;

  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w : adj[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> comp;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (int v = 1; v <= n; ++v) {
    if (index[v] < 0) visit(v);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

GraphInvariants graph_invariants(const ModelSpec& m) {
  GraphInvariants g;
  for (int in : m.inputs()) {
    auto dist = distances_from(m, in);
    for (int out : m.outputs()) g.shortest_dist[{in, out}] = dist[out];
    g.reach_from_input[in] =
        static_cast<int>(vertices_reachable_from(m, in).size());
  }
  for (int out : m.outputs()) {
    g.reach_to_output[out] = static_cast<int>(vertices_reaching(m, out).size());
  }

  std::vector<int> comp_of(m.size() + 1, -1);
  auto comps = strongly_connected_components(m);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  }
  std::vector<char> leaves(comps.size(), 0);
  for (const Edge& e : m.edges()) {
    if (comp_of[e.from] != comp_of[e.to]) leaves[comp_of[e.from]] = 1;
  }
  for (int l : m.leaks()) leaves[comp_of[l]] = 1;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (!leaves[c]) g.traps.push_back(comps[c]);
  }

  std::vector<char> from_input(m.size() + 1, 0), to_output(m.size() + 1, 0);
  for (int in : m.inputs()) {
    for (int v : vertices_reachable_from(m, in)) from_input[v] = 1;
  }
  for (int out : m.outputs()) {
    for (int v : vertices_reaching(m, out)) to_output[v] = 1;
  }
  g.input_connectable = g.output_connectable = true;
  for (int v = 1; v <= m.size(); ++v) {
    g.input_connectable = g.input_connectable && from_input[v];
    g.output_connectable = g.output_connectable && to_output[v];
  }
  return g;
}

ReversedModel reverse_model(const ModelSpec& m) {
  std::vector<Edge> edges;
  std::map<Param, Param> relabel;
  for (const Edge& e : m.edges()) {
    edges.push_back(Edge{e.to, e.from});
    relabel[Param::edge(e.to, e.from)] = Param::edge(e.from, e.to);
  }
  for (int l : m.leaks()) relabel[Param::leak(l)] = Param::leak(l);
  ModelSpec r(m.size(), std::move(edges), m.outputs(), m.inputs(), m.leaks(),
              m.name());
  return ReversedModel{std::move(r), std::move(relabel)};
}

}  // namespace lincomp
