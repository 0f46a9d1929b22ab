#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

mpq_class det(Matrix a) {
  const std::size_t n = a.size();
  mpq_class d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

std::vector<mpq_class> solve(Matrix a, std::vector<mpq_class> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

int rank(Matrix a) {
  int r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = static_cast<std::size_t>(r);
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[static_cast<std::size_t>(r)]);
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == static_cast<std::size_t>(r) || a[q][c] == 0) continue;
      mpq_class f = a[q][c] / a[static_cast<std::size_t>(r)][c];
      for (std::size_t k = 0; k < cols; ++k) a[q][k] -= f * a[static_cast<std::size_t>(r)][k];
    }
    ++r;
  }
  return r;
}

Matrix compartmental(const ModelSpec& m, const Point& p) {
  const std::size_t n = static_cast<std::size_t>(m.size());
  Matrix a(n, std::vector<mpq_class>(n, 0));
  for (const auto& e : m.edges()) {
    const mpq_class& rate = p.at(Param{e.to, e.from});
    a[e.to - 1][e.from - 1] += rate;
    a[e.from - 1][e.from - 1] -= rate;
  }
  for (int l : m.leaks()) a[l - 1][l - 1] -= p.at(Param{0, l});
  return a;
}

std::vector<std::vector<bool>> closure(const ModelSpec& m) {
  const int n = m.size();
  std::vector<std::vector<bool>> r(n + 1, std::vector<bool>(n + 1, false));
  for (int v = 1; v <= n; ++v) r[v][v] = true;
  for (const auto& e : m.edges()) r[e.from][e.to] = true;
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

std::vector<std::vector<std::optional<int>>> distances(const ModelSpec& m) {
  const int n = m.size();
  std::vector<std::vector<std::optional<int>>> d(n + 1, std::vector<std::optional<int>>(n + 1));
  for (int v = 1; v <= n; ++v) d[v][v] = 0;
  for (const auto& e : m.edges()) d[e.from][e.to] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (d[i][k] && d[k][j] && (!d[i][j] || *d[i][k] + *d[k][j] < *d[i][j])) {
          d[i][j] = *d[i][k] + *d[k][j];
        }
      }
    }
  }
  return d;
}

std::vector<std::vector<int>> sccs(const ModelSpec& m) {
  const auto r = closure(m);
  std::vector<std::vector<int>> out;
  std::vector<bool> done(m.size() + 1, false);
  for (int v = 1; v <= m.size(); ++v) {
    if (done[v]) continue;
    std::vector<int> c;
    for (int w = 1; w <= m.size(); ++w) {
      if (r[v][w] && r[w][v]) {
        c.push_back(w);
        done[w] = true;
      }
    }
    out.push_back(c);
  }
  return out;
}

std::vector<int> reaching(const ModelSpec& m, int out) {
  const auto r = closure(m);
  std::vector<int> h;
  for (int v = 1; v <= m.size(); ++v) {
    if (r[v][out]) h.push_back(v);
  }
  return h;
}

Transfer transfer(const ModelSpec& m, int out, const Point& p, const mpq_class& s, bool full) {
  std::vector<int> h;
  if (full) {
    for (int v = 1; v <= m.size(); ++v) h.push_back(v);
  } else {
    h = reaching(m, out);
  }
  const Matrix a = compartmental(m, p);
  const std::size_t k = h.size();
  Matrix shifted(k, std::vector<mpq_class>(k, 0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      shifted[r][c] = -a[h[r] - 1][h[c] - 1];
      if (r == c) shifted[r][c] += s;
    }
  }
  Transfer t;
  t.lhs = det(shifted);
  const std::size_t pos_out = std::find(h.begin(), h.end(), out) - h.begin();
  for (int in : m.inputs()) {
    auto it = std::find(h.begin(), h.end(), in);
    if (it == h.end()) continue;
    std::vector<mpq_class> e(k, 0);
    e[static_cast<std::size_t>(it - h.begin())] = 1;
    t.rhs[in] = t.lhs * solve(shifted, e)[pos_out];
  }
  return t;
}

mpq_class evaluate(const lincomp::MPoly& f, const Point& p) {
  return f.evaluate([&](lincomp::Var v) { return p.at(lincomp::var_param(v)); });
}

mpq_class evaluate(const lincomp::OperatorPoly& op, const Point& p, const mpq_class& s) {
  mpq_class sum = 0;
  mpq_class power = 1;
  for (int k = 0; k <= op.degree(); ++k) {
    sum += evaluate(op.coefficient(k), p) * power;
    power *= s;
  }
  return sum;
}

Point random_point(std::mt19937_64& rng, const std::vector<Param>& params, long hi) {
  std::uniform_int_distribution<long> d(1, hi);
  Point p;
  for (Param q : params) p[q] = mpq_class(d(rng), d(rng) % 7 + 1);
  for (auto& [q, v] : p) v.canonicalize();
  return p;
}

namespace {

std::vector<int> random_subset(std::mt19937_64& rng, int n, int max_size) {
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v + 1;
  std::shuffle(all.begin(), all.end(), rng);
  const int size = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(max_size, n)));
  std::vector<int> s(all.begin(), all.begin() + size);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

ModelSpec random_model(std::mt19937_64& rng, int n, double edge_p, double leak_p, int max_io) {
  std::bernoulli_distribution edge(edge_p), leak(leak_p);
  std::vector<lincomp::Edge> e;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j && edge(rng)) e.push_back({i, j});
    }
  }
  std::vector<int> leaks;
  for (int v = 1; v <= n; ++v) {
    if (leak(rng)) leaks.push_back(v);
  }
  return ModelSpec(n, e, random_subset(rng, n, max_io), random_subset(rng, n, max_io), leaks);
}

ModelSpec random_output_connectable(std::mt19937_64& rng, int n) {
  for (;;) {
    ModelSpec m = random_model(rng, n, 0.35, 0.4, 2);
    const auto r = closure(m);
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v) {
      ok = std::all_of(m.outputs().begin(), m.outputs().end(), [&](int o) { return r[v][o]; });
    }
    for (int o : m.outputs()) {
      ok = ok && std::any_of(m.inputs().begin(), m.inputs().end(), [&](int i) { return r[i][o]; });
    }
    if (ok) return m;
  }
}

}  // namespace oracle
