#include "lincomp/ioeq.hpp"

#include <algorithm>
#include <numeric>

#include "lincomp/error.hpp"

namespace lincomp {

IoEquation io_equation(const ModelSpec& m, int out, Restriction r) {
  if (!m.is_output(out)) {
    throw PreconditionError("compartment " + std::to_string(out) +
                            " is not an output");
  }
  const std::vector<int> reaching = vertices_reaching(m, out);
  const bool any_input = std::any_of(
      m.inputs().begin(), m.inputs().end(), [&](int in) {
        return std::binary_search(reaching.begin(), reaching.end(), in);
      });
  if (!any_input) {
    throw PreconditionError("no input reaches output " + std::to_string(out));
  }

  std::vector<int> h;
  if (r == Restriction::OutputReachable) {
    h = reaching;
  } else {
    h.resize(m.size());
    std::iota(h.begin(), h.end(), 1);
  }
  auto position = [&](int v) {
    return static_cast<int>(std::lower_bound(h.begin(), h.end(), v) - h.begin()) + 1;
  };

  OpMatrix shifted = shifted_operator_matrix(m, h);
  IoEquation eq;
  eq.output = out;
  eq.subgraph = h;
  eq.lhs = operator_det(shifted);
  const int pj = position(out);
  for (int in : m.inputs()) {
    if (!std::binary_search(h.begin(), h.end(), in)) continue;
    const int pi = position(in);
    OperatorPoly minor_det = operator_det(shifted.minor(pi, pj));
    eq.rhs.emplace_back(in, (pi + pj) % 2 == 0 ? minor_det : -minor_det);
  }
  return eq;
}

std::vector<IoEquation> io_equations(const ModelSpec& m, Restriction r) {
  m.require_io();
  std::vector<IoEquation> out;
  for (int o : m.outputs()) out.push_back(io_equation(m, o, r));
  return out;
}

namespace {

std::string d_power(int k) {
  if (k == 0) return "";
  if (k == 1) return "D ";
  return "D^" + std::to_string(k) + " ";
}

std::string coefficient_text(const MPoly& c) {
  if (c == MPoly(1)) return "";
  return "(" + c.to_string() + ") ";
}

}  // namespace

std::string render_equation(const IoEquation& eq) {
  std::string lhs;
  const std::string y = "y" + std::to_string(eq.output);
  for (int k = eq.lhs.degree(); k >= 0; --k) {
    MPoly c = eq.lhs.coefficient(k);
    if (c.is_zero()) continue;
    if (!lhs.empty()) lhs += " + ";
    lhs += coefficient_text(c) + d_power(k) + y;
  }
  std::string rhs;
  for (const auto& [in, op] : eq.rhs) {
    const std::string u = "u" + std::to_string(in);
    for (int k = op.degree(); k >= 0; --k) {
      MPoly c = op.coefficient(k);
      if (c.is_zero()) continue;
      if (!rhs.empty()) rhs += " + ";
      rhs += coefficient_text(c) + d_power(k) + u;
    }
  }
  if (lhs.empty()) lhs = "0";
  if (rhs.empty()) rhs = "0";
  return lhs + " = " + rhs;
}

std::string DiffMonomial::to_string() const {
  std::string s = (signal == Signal::Output ? "y" : "u") + std::to_string(compartment);
  if (order > 0) s += "^(" + std::to_string(order) + ")";
  return s;
}

std::string CoefficientKey::to_string() const {
  return "eq" + std::to_string(equation) + ":" + monomial.to_string();
}

bool canonical_less(const CoefficientKey& a, const CoefficientKey& b) {
  if (a.equation != b.equation) return a.equation < b.equation;
  const DiffMonomial& x = a.monomial;
  const DiffMonomial& y = b.monomial;
  if (x.signal != y.signal) return x.signal == Signal::Output;
  if (x.compartment != y.compartment) return x.compartment < y.compartment;
  return x.order > y.order;
}

std::vector<CoefficientKey> CoefficientMap::keys() const {
  std::vector<CoefficientKey> out;
  for (const auto& e : entries) out.push_back(e.key);
  return out;
}

std::vector<MPoly> CoefficientMap::values() const {
  std::vector<MPoly> out;
  for (const auto& e : entries) out.push_back(e.value);
  return out;
}

std::vector<Param> CoefficientMap::params() const {
  std::vector<Param> out;
  for (const auto& e : entries) {
    for (Var v : e.value.variables()) {
      if (is_param_var(v)) out.push_back(var_param(v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

template <typename Visit>
void for_each_coefficient(const std::vector<IoEquation>& equations, Visit visit) {
  for (const IoEquation& eq : equations) {
    for (int k = eq.lhs.degree(); k >= 0; --k) {
      visit(CoefficientKey{eq.output, {Signal::Output, eq.output, k}},
            eq.lhs.coefficient(k));
    }
    for (const auto& [in, op] : eq.rhs) {
      for (int k = op.degree(); k >= 0; --k) {
        visit(CoefficientKey{eq.output, {Signal::Input, in, k}}, op.coefficient(k));
      }
    }
  }
}

}  // namespace

CoefficientMap coefficient_map(const std::vector<IoEquation>& equations) {
  CoefficientMap map;
  for_each_coefficient(equations, [&](const CoefficientKey& key, const MPoly& c) {
    if (!c.is_zero() && !c.is_constant()) map.entries.push_back({key, c});
  });
  return map;
}

CoefficientMap coefficient_map(const ModelSpec& m, Restriction r) {
  return coefficient_map(io_equations(m, r));
}

StructureSignature structure_signature(const std::vector<IoEquation>& equations) {
  StructureSignature sig;
  for_each_coefficient(equations, [&](const CoefficientKey& key, const MPoly& c) {
    if (!c.is_zero()) sig.support.push_back(key);
  });
  return sig;
}

StructureSignature structure_signature(const ModelSpec& m) {
  return structure_signature(io_equations(m));
}

}  // namespace lincomp
