#include "lincomp/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace lincomp {

int BlockOrder::compare(const Monomial& a, const Monomial& b) const {
  if (!in_first_block) return grevlex_compare(a, b);
  auto split = [&](const Monomial& m) {
    std::vector<Monomial::Factor> first, rest;
    for (const auto& f : m.factors()) (in_first_block(f.first) ? first : rest).push_back(f);
    return std::pair{Monomial(std::move(first)), Monomial(std::move(rest))};
  };
  auto [a1, a2] = split(a);
  auto [b1, b2] = split(b);
  if (int c = grevlex_compare(a1, b1); c != 0) return c;
  return grevlex_compare(a2, b2);
}

BlockOrder grevlex_order() { return BlockOrder{}; }

namespace {

struct Greater {
  const BlockOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order->compare(a, b) > 0;
  }
};

using Poly = std::map<Monomial, mpq_class, Greater>;

Poly to_poly(const MPoly& p, const BlockOrder& order) {
  Poly out(Greater{&order});
  for (const auto& [m, c] : p.terms()) out.emplace(m, c);
  return out;
}

MPoly to_mpoly(const Poly& p) {
  MPoly out;
  for (const auto& [m, c] : p) out += MPoly::term(m, c);
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> f;
  auto i = a.factors().begin();
  auto j = b.factors().begin();
  while (i != a.factors().end() || j != b.factors().end()) {
    if (j == b.factors().end() || (i != a.factors().end() && i->first < j->first)) {
      f.push_back(*i++);
    } else if (i == a.factors().end() || j->first < i->first) {
      f.push_back(*j++);
    } else {
      f.emplace_back(i->first, std::max(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return Monomial(std::move(f));
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (const auto& [v, e] : a.factors()) {
    if (b.exponent(v) != 0) return false;
  }
  return true;
}

// p -= c * m * g
void subtract_multiple(Poly& p, const mpq_class& c, const Monomial& m, const Poly& g) {
  for (const auto& [gm, gc] : g) {
    Monomial t = gm * m;
    auto it = p.find(t);
    if (it == p.end()) {
      p.emplace(std::move(t), -c * gc);
    } else {
      it->second -= c * gc;
      if (it->second == 0) p.erase(it);
    }
  }
}

void make_monic(Poly& p) {
  if (p.empty()) return;
  mpq_class lc = p.begin()->second;
  for (auto& [m, c] : p) c /= lc;
}

// Full reduction of every term.
Poly reduce(Poly f, const std::vector<Poly>& basis) {
  Poly r(f.key_comp());
  while (!f.empty()) {
    auto lead = f.begin();
    const Poly* divisor = nullptr;
    for (const Poly& g : basis) {
      if (!g.empty() && g.begin()->first.divides(lead->first)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      r.emplace(lead->first, lead->second);
      f.erase(lead);
      continue;
    }
    mpq_class c = lead->second / divisor->begin()->second;
    Monomial m = lead->first.quotient(divisor->begin()->first);
    subtract_multiple(f, c, m, *divisor);
  }
  return r;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  const Monomial l = lcm(f.begin()->first, g.begin()->first);
  Poly s(f.key_comp());
  subtract_multiple(s, -1 / f.begin()->second, l.quotient(f.begin()->first), f);
  subtract_multiple(s, 1 / g.begin()->second, l.quotient(g.begin()->first), g);
  return s;
}

std::vector<Poly> buchberger(const std::vector<MPoly>& generators, const BlockOrder& order) {
  std::vector<Poly> g;
  for (const MPoly& p : generators) {
    Poly q = reduce(to_poly(p, order), g);
    if (q.empty()) continue;
    make_monic(q);
    g.push_back(std::move(q));
  }

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
  }
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = pending.begin();
    Monomial best_lcm = lcm(g[best->first].begin()->first, g[best->second].begin()->first);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm(g[it->first].begin()->first, g[it->second].begin()->first);
      if (order.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const Monomial& li = g[i].begin()->first;
    const Monomial& lj = g[j].begin()->first;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = g[k].begin()->first.divides(best_lcm) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;

    Poly h = reduce(s_polynomial(g[i], g[j]), g);
    if (h.empty()) continue;
    make_monic(h);
    g.push_back(std::move(h));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pending.emplace(k, g.size() - 1);
  }
  return g;
}

}  // namespace

std::vector<MPoly> groebner_basis(const std::vector<MPoly>& generators, const BlockOrder& order) {
  std::vector<Poly> g = buchberger(generators, order);

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another's (keeping the earliest of equal ones).
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial& lk = g[k].begin()->first;
      const Monomial& li = g[i].begin()->first;
      redundant = lk.divides(li) && (lk != li || k < i);
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // Interreduce.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    Poly lead(minimal[i].key_comp());
    lead.emplace(*minimal[i].begin());
    Poly tail = minimal[i];
    tail.erase(tail.begin());
    Poly reduced_tail = reduce(std::move(tail), others);
    for (auto& [m, c] : reduced_tail) lead.emplace(m, c);
    minimal[i] = std::move(lead);
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
    return order.compare(a.begin()->first, b.begin()->first) < 0;
  });
  std::vector<MPoly> out;
  for (const Poly& p : minimal) out.push_back(to_mpoly(p));
  return out;
}

std::vector<MPoly> eliminate(const std::vector<MPoly>& generators, const BlockOrder& order) {
  if (!order.in_first_block) return groebner_basis(generators, order);
  std::vector<MPoly> out;
  for (MPoly& p : groebner_basis(generators, order)) {
    const auto vars = p.variables();
    if (std::none_of(vars.begin(), vars.end(), order.in_first_block)) out.push_back(std::move(p));
  }
  return out;
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis, const BlockOrder& order) {
  std::vector<Poly> g;
  for (const MPoly& p : basis) g.push_back(to_poly(p, order));
  return to_mpoly(reduce(to_poly(f, order), g));
}

}  // namespace lincomp
