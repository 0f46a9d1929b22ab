#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lincomp/param.hpp"

namespace lincomp {

/// Directed edge `from -> to` between 1-based compartments.
struct Edge {
  int from = 0;
  int to = 0;
  auto operator<=>(const Edge&) const = default;
};

/// A linear compartmental model: the quadruple (G, In, Out, Leak) on
/// compartments 1..n.
///
/// Construction validates every invariant (endpoints in range, no
/// self-loops, no duplicate edges) and stores edges and compartment sets in
/// sorted order, so two specs describing the same model compare equal.
/// Empty inputs/outputs are allowed at construction time; analyses that need
/// them check `require_io()`.
class ModelSpec {
 public:
  ModelSpec(int n, std::vector<Edge> edges, std::vector<int> inputs,
            std::vector<int> outputs, std::vector<int> leaks,
            std::string name = {});

  int size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& inputs() const { return inputs_; }
  const std::vector<int>& outputs() const { return outputs_; }
  const std::vector<int>& leaks() const { return leaks_; }
  const std::string& name() const { return name_; }

  bool has_edge(int from, int to) const;
  bool is_input(int c) const;
  bool is_output(int c) const;
  bool is_leak(int c) const;

  /// Every parameter of the model in canonical order.
  std::vector<Param> params() const;

  /// Out-neighbours / in-neighbours of compartment c, ascending.
  std::vector<int> successors(int c) const;
  std::vector<int> predecessors(int c) const;

  /// Throws ModelError when the model has no input or no output.
  void require_io() const;

  ModelSpec with_name(std::string name) const;

  bool operator==(const ModelSpec& other) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> inputs_;
  std::vector<int> outputs_;
  std::vector<int> leaks_;
  std::string name_;
};

/// Parses the JSON model format:
///   {"n": 2, "edges": [[1,2],[2,1]], "inputs": [1], "outputs": [2],
///    "leaks": [1], "name": "optional"}
/// Edges are `[from, to]`. Throws ParseError (with byte position) on
/// malformed text and ModelError on semantic violations, including empty
/// inputs or outputs.
ModelSpec parse_model(std::string_view text);

/// Canonical JSON text for a model (round-trips through parse_model).
std::string format_model(const ModelSpec& m);

/// Linear form  sum_k coeff_k * param_k + constant.
struct LinearExpr {
  std::vector<std::pair<Param, mpq_class>> terms;  // sorted by Param, no zeros
  mpq_class constant = 0;

  bool is_zero() const { return terms.empty() && constant == 0; }
  LinearExpr& add(Param p, const mpq_class& c);
  bool operator==(const LinearExpr&) const = default;
};

/// n x n matrix of linear forms; entry (i, j) is 1-based in the accessors.
class SymbolicMatrix {
 public:
  explicit SymbolicMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}
  int size() const { return n_; }
  const LinearExpr& at(int i, int j) const { return cells_[index(i, j)]; }
  LinearExpr& at(int i, int j) { return cells_[index(i, j)]; }

  /// Sum of column j as a linear form.
  LinearExpr column_sum(int j) const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }
  int n_;
  std::vector<LinearExpr> cells_;
};

/// A(G): off-diagonal a_{ij} for each edge j -> i; diagonal
/// -a_{0i} (if i leaks) minus the sum of outgoing rates.
SymbolicMatrix compartmental_matrix(const ModelSpec& m);

/// Output-reachable restriction of a model, relabelled to 1..|V_H|.
struct RestrictedModel {
  ModelSpec model;
  /// vertices[k] is the original label of new compartment k + 1.
  std::vector<int> vertices;
};

/// Induced submodel on the compartments with a directed path to `out`
/// (inclusive). Inputs, outputs and leaks are restricted to those vertices.
RestrictedModel output_reachable_subgraph(const ModelSpec& m, int out);

/// Compartments (original labels, ascending) with a directed path to `out`.
std::vector<int> vertices_reaching(const ModelSpec& m, int out);
/// Compartments reachable from `source` (inclusive), ascending.
std::vector<int> vertices_reachable_from(const ModelSpec& m, int source);

/// Shortest directed distance in edges; nullopt when unreachable.
using Distance = std::optional<int>;

/// Orders reachable distances ascending with "unreachable" last.
bool distance_less(const Distance& a, const Distance& b);

std::string to_string(const Distance& d);

struct GraphInvariants {
  /// (input, output) -> shortest distance.
  std::map<std::pair<int, int>, Distance> shortest_dist;
  /// output -> number of compartments with a path to it (itself included).
  std::map<int, int> reach_to_output;
  /// input -> number of compartments reachable from it (itself included).
  std::map<int, int> reach_from_input;
  /// Strongly connected components with no leaving edge and no leak.
  std::vector<std::vector<int>> traps;
  bool input_connectable = false;
  bool output_connectable = false;
};

GraphInvariants graph_invariants(const ModelSpec& m);

/// Strongly connected components (Tarjan), each sorted, in order of their
/// smallest member.
std::vector<std::vector<int>> strongly_connected_components(const ModelSpec& m);

/// Single-source BFS distances from `source`, indexed by compartment label
/// (entry 0 unused).
std::vector<Distance> distances_from(const ModelSpec& m, int source);

struct ReversedModel {
  ModelSpec model;
  /// Parameter relabelling original -> reversed (a_{ij} -> a_{ji}, leaks fixed).
  std::map<Param, Param> relabel;
};

/// Reverses every edge and swaps inputs with outputs; leaks unchanged.
ReversedModel reverse_model(const ModelSpec& m);

}  // namespace lincomp
