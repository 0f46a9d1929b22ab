#pragma once

// Independent reference computations used to freeze expected values. None of
// these call into the code they check: matrices are built from the edge list
// directly, determinants and solves use rational Gaussian elimination, and
// graph quantities come from transitive closure / Floyd-Warshall.

#include <map>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "lincomp/model.hpp"
#include "lincomp/operator_poly.hpp"

namespace oracle {

using lincomp::ModelSpec;
using lincomp::Param;
using Matrix = std::vector<std::vector<mpq_class>>;
using Point = std::map<Param, mpq_class>;

mpq_class det(Matrix a);
std::vector<mpq_class> solve(Matrix a, std::vector<mpq_class> b);
int rank(Matrix a);

/// Numeric compartmental matrix (0-based) at a parameter point.
Matrix compartmental(const ModelSpec& m, const Point& p);

/// reach[i][j]: a directed path i -> j exists (i reaches itself).
std::vector<std::vector<bool>> closure(const ModelSpec& m);

/// Floyd-Warshall; nullopt when unreachable.
std::vector<std::vector<std::optional<int>>> distances(const ModelSpec& m);

/// Strongly connected components as mutual-reachability classes, each sorted,
/// ordered by smallest member.
std::vector<std::vector<int>> sccs(const ModelSpec& m);

/// Compartments with a path to `out`, ascending.
std::vector<int> reaching(const ModelSpec& m, int out);

struct Transfer {
  mpq_class lhs;                  // det(sI - A_H)
  std::map<int, mpq_class> rhs;   // input -> det(sI - A_H) * [(sI - A_H)^-1]_{out,in}
};

/// Evaluates the input-output equation of `out` at (p, s) by solving
/// (sI - A_H) x = e_in over Q. With `full`, H is every compartment.
Transfer transfer(const ModelSpec& m, int out, const Point& p, const mpq_class& s,
                  bool full = false);

/// Value of an operator polynomial at parameter point p and D = s.
mpq_class evaluate(const lincomp::OperatorPoly& op, const Point& p, const mpq_class& s);
mpq_class evaluate(const lincomp::MPoly& f, const Point& p);

Point random_point(std::mt19937_64& rng, const std::vector<Param>& params, long hi = 1000);

/// Random valid model on n compartments: each ordered pair is an edge with
/// probability `edge_p`, each compartment leaks with probability `leak_p`.
/// Inputs and outputs are nonempty random subsets of size at most `max_io`.
ModelSpec random_model(std::mt19937_64& rng, int n, double edge_p, double leak_p, int max_io = 2);

/// Random model in which every compartment reaches every output and every
/// output is reached by some input.
ModelSpec random_output_connectable(std::mt19937_64& rng, int n);

}  // namespace oracle
