#include "lincomp/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "lincomp/error.hpp"

namespace lincomp {

namespace {
constexpr Var kIndexBase = 4096;
constexpr Var kCoefficientBase = 0x40000000u;
}  // namespace

Var param_var(Param p) {
  if (p.to < 0 || p.from < 0 || p.to >= static_cast<int>(kIndexBase) ||
      p.from >= static_cast<int>(kIndexBase)) {
    throw Error("parameter index out of supported range: " + p.symbol());
  }
  return static_cast<Var>(p.to) * kIndexBase + static_cast<Var>(p.from);
}

Var coefficient_var(int k) { return kCoefficientBase + static_cast<Var>(k); }

bool is_param_var(Var v) { return v < kCoefficientBase; }

Param var_param(Var v) {
  return Param{static_cast<int>(v / kIndexBase), static_cast<int>(v % kIndexBase)};
}

int var_coefficient_index(Var v) { return static_cast<int>(v - kCoefficientBase); }

std::string var_name(Var v) {
  if (is_param_var(v)) return var_param(v).symbol();
  return "c" + std::to_string(var_coefficient_index(v));
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
    degree_ += e;
  }
}

Monomial Monomial::of(Var v, std::uint32_t exponent) {
  return Monomial({{v, exponent}});
}

std::uint32_t Monomial::exponent(Var v) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), v,
      [](const Factor& f, Var key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto b = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (b != other.factors_.end() && b->first < v) ++b;
    if (b == other.factors_.end() || b->first != v || b->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial r;
  auto b = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    std::uint32_t sub = 0;
    if (b != other.factors_.end() && b->first == v) {
      sub = b->second;
      ++b;
    }
    if (e > sub) r.factors_.emplace_back(v, e - sub);
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto i = fa.rbegin();
  auto j = fb.rbegin();
  // Walk from the smallest variable (largest id); the first difference
  // decides, with the smaller exponent winning.
  while (i != fa.rend() && j != fb.rend()) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second < j->second ? 1 : -1;
      ++i;
      ++j;
    } else if (i->first > j->first) {
      return -1;  // a has a positive exponent where b has zero
    } else {
      return 1;
    }
  }
  if (i != fa.rend()) return -1;
  if (j != fb.rend()) return 1;
  return 0;
}

// ---------------------------------------------------------------------------
// MPoly

MPoly::MPoly(const mpq_class& constant) {
  if (constant != 0) {
    mpq_class c = constant;
    c.canonicalize();
    terms_.emplace(Monomial(), c);
  }
}

MPoly MPoly::variable(Var v) { return term(Monomial::of(v), 1); }

MPoly MPoly::term(const Monomial& m, const mpq_class& c) {
  MPoly p;
  if (c != 0) {
    mpq_class q = c;
    q.canonicalize();
    p.terms_.emplace(m, q);
  }
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

mpq_class MPoly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int MPoly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

std::vector<Var> MPoly::variables() const {
  std::vector<Var> vars;
  for (const auto& [m, _] : terms_) {
    for (const auto& [v, e] : m.factors()) vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

void MPoly::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  MPoly out;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MPoly MPoly::scaled(const mpq_class& c) const {
  if (c == 0) return MPoly();
  mpq_class q = c;
  q.canonicalize();
  MPoly out = *this;
  for (auto& [m, coeff] : out.terms_) coeff *= q;
  return out;
}

MPoly MPoly::times(const Monomial& mono, const mpq_class& c) const {
  MPoly out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), m * mono, coeff * c);
  }
  return out;
}

std::optional<MPoly> exact_div(const MPoly& lhs, const MPoly& rhs) {
  if (rhs.is_zero()) return std::nullopt;
  MPoly quotient;
  MPoly rem = lhs;
  const Monomial& lead = rhs.leading_monomial();
  const mpq_class& lead_c = rhs.leading_coefficient();
  // If rhs | lhs, every intermediate remainder is a multiple of rhs, so its
  // leading monomial is divisible by rhs's; the first failure proves
  // non-divisibility.
  while (!rem.is_zero()) {
    const Monomial& m = rem.leading_monomial();
    if (!lead.divides(m)) return std::nullopt;
    Monomial q = m.quotient(lead);
    mpq_class c = rem.leading_coefficient() / lead_c;
    quotient.add_term(q, c);
    rem -= rhs.times(q, c);
  }
  return quotient;
}

MPoly MPoly::derivative(Var v) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m.quotient(Monomial::of(v)), c * e);
  }
  return out;
}

mpq_class MPoly::evaluate(const std::function<mpq_class(Var)>& value) const {
  mpq_class sum = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class t = c;
    for (const auto& [v, e] : m.factors()) {
      mpq_class x = value(v);
      for (std::uint32_t k = 0; k < e; ++k) t *= x;
    }
    sum += t;
  }
  return sum;
}

MPoly MPoly::rename(const std::function<Var(Var)>& rename) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> f;
    f.reserve(m.factors().size());
    for (const auto& [v, e] : m.factors()) f.emplace_back(rename(v), e);
    out.add_term(Monomial(std::move(f)), c);
  }
  return out;
}

MPoly MPoly::substitute(const std::function<MPoly(Var)>& value) const {
  MPoly out;
  std::map<Var, MPoly> cache;
  for (const auto& [m, c] : terms_) {
    MPoly t(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, value(v)).first;
      for (std::uint32_t k = 0; k < e; ++k) t = t * it->second;
    }
    out += t;
  }
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpq_class mag = abs(c);
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    if (m.is_one()) {
      os << rational_to_string(mag);
    } else {
      if (mag != 1) os << rational_to_string(mag) << "*";
      os << m.to_string();
    }
    first = false;
  }
  return os.str();
}

}  // namespace lincomp
