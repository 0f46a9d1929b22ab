#include "lincomp/operator_poly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "lincomp/error.hpp"

namespace lincomp {

OperatorPoly::OperatorPoly(MPoly constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

OperatorPoly::OperatorPoly(std::vector<MPoly> coefficients)
    : c_(std::move(coefficients)) {
  trim();
}

OperatorPoly OperatorPoly::d_power(int k) {
  std::vector<MPoly> c(static_cast<std::size_t>(k) + 1);
  c.back() = MPoly(1);
  return OperatorPoly(std::move(c));
}

MPoly OperatorPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return MPoly();
  return c_[k];
}

bool OperatorPoly::is_monic() const {
  return !c_.empty() && c_.back() == MPoly(1);
}

void OperatorPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
  if (a.is_zero() || b.is_zero()) return OperatorPoly();
  std::vector<MPoly> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return OperatorPoly(std::move(c));
}

OperatorPoly OperatorPoly::operator-() const {
  OperatorPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

OperatorPoly OperatorPoly::scaled(const mpq_class& q) const {
  std::vector<MPoly> c;
  c.reserve(c_.size());
  for (const auto& k : c_) c.push_back(k.scaled(q));
  return OperatorPoly(std::move(c));
}

std::string OperatorPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const MPoly& coeff = c_[k];
    if (coeff.is_zero()) continue;
    std::string d = k == 0 ? "" : (k == 1 ? "D" : "D^" + std::to_string(k));
    std::string piece;
    if (k > 0 && coeff == MPoly(1)) {
      piece = d;
    } else if (k > 0 && coeff == MPoly(-1)) {
      piece = "-" + d;
    } else if (k == 0) {
      piece = coeff.size() == 1 ? coeff.to_string() : "(" + coeff.to_string() + ")";
    } else {
      piece = (coeff.size() == 1 ? coeff.to_string() : "(" + coeff.to_string() + ")") +
              "*" + d;
    }
    if (!out.empty() && piece.front() != '-') out += "+";
    out += piece;
  }
  return out;
}

OpMatrix OpMatrix::minor(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::out_of_range("minor index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside 1.." +
                            std::to_string(n_));
  }
  OpMatrix out(n_ - 1);
  for (int r = 1, rr = 1; r <= n_; ++r) {
    if (r == i) continue;
    for (int c = 1, cc = 1; c <= n_; ++c) {
      if (c == j) continue;
      out.at(rr, cc) = at(r, c);
      ++cc;
    }
    ++rr;
  }
  return out;
}

OpMatrix shifted_operator_matrix(const ModelSpec& m,
                                 const std::vector<int>& vertices) {
  SymbolicMatrix a = compartmental_matrix(m);
  const int k = static_cast<int>(vertices.size());
  OpMatrix out(k);
  for (int r = 1; r <= k; ++r) {
    for (int c = 1; c <= k; ++c) {
      const LinearExpr& e = a.at(vertices[r - 1], vertices[c - 1]);
      MPoly constant(-e.constant);
      for (const auto& [p, q] : e.terms) constant -= MPoly::param(p).scaled(q);
      std::vector<MPoly> coeffs{constant};
      if (r == c) coeffs.push_back(MPoly(1));
      out.at(r, c) = OperatorPoly(std::move(coeffs));
    }
  }
  return out;
}

OpMatrix shifted_operator_matrix(const ModelSpec& m) {
  std::vector<int> all(m.size());
  std::iota(all.begin(), all.end(), 1);
  return shifted_operator_matrix(m, all);
}

namespace {

struct MaskKey {
  std::uint64_t rows;
  std::uint64_t cols;
  bool operator==(const MaskKey&) const = default;
};

struct MaskHash {
  std::size_t operator()(const MaskKey& k) const {
    return std::hash<std::uint64_t>()(k.rows * 0x9E3779B97F4A7C15ull ^ k.cols);
  }
};

class CofactorExpander {
 public:
  explicit CofactorExpander(const OpMatrix& m) : m_(m) {}

  OperatorPoly det(std::uint64_t rows, std::uint64_t cols) {
    if (rows == 0) return OperatorPoly(1);
    MaskKey key{rows, cols};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Pick the remaining row or column with the fewest nonzero entries.
    int best_line = -1;
    bool best_is_row = true;
    int best_count = 1 << 30;
    for (int r = 0; r < m_.size(); ++r) {
      if (!(rows >> r & 1)) continue;
      int count = 0;
      for (int c = 0; c < m_.size(); ++c) {
        if ((cols >> c & 1) && !m_.at(r + 1, c + 1).is_zero()) ++count;
      }
      if (count < best_count) {
        best_count = count;
        best_line = r;
        best_is_row = true;
      }
    }
    for (int c = 0; c < m_.size() && best_count > 1; ++c) {
      if (!(cols >> c & 1)) continue;
      int count = 0;
      for (int r = 0; r < m_.size(); ++r) {
        if ((rows >> r & 1) && !m_.at(r + 1, c + 1).is_zero()) ++count;
      }
      if (count < best_count) {
        best_count = count;
        best_line = c;
        best_is_row = false;
      }
    }

    OperatorPoly result;
    if (best_count > 0) {
      const std::uint64_t line_bit = std::uint64_t{1} << best_line;
      const std::uint64_t& own = best_is_row ? rows : cols;
      const std::uint64_t& other = best_is_row ? cols : rows;
      const int own_pos = std::popcount(own & (line_bit - 1));
      for (int k = 0; k < m_.size(); ++k) {
        if (!(other >> k & 1)) continue;
        const OperatorPoly& entry =
            best_is_row ? m_.at(best_line + 1, k + 1) : m_.at(k + 1, best_line + 1);
        if (entry.is_zero()) continue;
        const std::uint64_t k_bit = std::uint64_t{1} << k;
        const int other_pos = std::popcount(other & (k_bit - 1));
        OperatorPoly sub = best_is_row ? det(rows & ~line_bit, cols & ~k_bit)
                                       : det(rows & ~k_bit, cols & ~line_bit);
        if (sub.is_zero()) continue;
        OperatorPoly term = entry * sub;
        if ((own_pos + other_pos) % 2 == 0) {
          result += term;
        } else {
          result -= term;
        }
      }
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  const OpMatrix& m_;
  std::unordered_map<MaskKey, OperatorPoly, MaskHash> memo_;
};

}  // namespace

OperatorPoly operator_det(const OpMatrix& m) {
  if (m.size() > 64) {
    throw CapExceeded("operator_det supports dimension <= 64, got " +
                      std::to_string(m.size()));
  }
  if (m.size() == 0) return OperatorPoly(1);
  const std::uint64_t full =
      m.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.size()) - 1;
  CofactorExpander expander(m);
  return expander.det(full, full);
}

OperatorPoly det_oracle(const OpMatrix& m) {
  const int n = m.size();
  if (n > 8) {
    throw CapExceeded("det_oracle refuses dimension " + std::to_string(n) +
                      " (cap 8)");
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  OperatorPoly sum;
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (perm[a] > perm[b]) ++inversions;
      }
    }
    OperatorPoly prod(1);
    for (int r = 0; r < n && !prod.is_zero(); ++r) {
      prod = prod * m.at(r + 1, perm[r] + 1);
    }
    if (inversions % 2 == 0) {
      sum += prod;
    } else {
      sum -= prod;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace lincomp
