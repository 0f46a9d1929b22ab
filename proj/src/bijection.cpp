#include "lincomp/bijection.hpp"

#include <algorithm>
#include <set>

#include "lincomp/error.hpp"

namespace lincomp {

ParamBijection::ParamBijection(std::map<Param, Param> mapping) : map_(std::move(mapping)) {
  std::set<Param> seen;
  for (const auto& [from, to] : map_) {
    if (!seen.insert(to).second) {
      throw BijectionError("parameter " + to.symbol() + " is the image of two parameters");
    }
  }
}

ParamBijection ParamBijection::identity(const std::vector<Param>& params) {
  std::map<Param, Param> m;
  for (Param p : params) m.emplace(p, p);
  return ParamBijection(std::move(m));
}

Param ParamBijection::operator()(Param p) const {
  auto it = map_.find(p);
  if (it == map_.end()) throw BijectionError("unmapped parameter " + p.symbol());
  return it->second;
}

std::vector<Param> ParamBijection::domain() const {
  std::vector<Param> out;
  for (const auto& [from, to] : map_) out.push_back(from);
  return out;
}

std::vector<Param> ParamBijection::image() const {
  std::vector<Param> out;
  for (const auto& [from, to] : map_) out.push_back(to);
  std::sort(out.begin(), out.end());
  return out;
}

bool ParamBijection::is_identity() const {
  for (const auto& [from, to] : map_) {
    if (from != to) return false;
  }
  return true;
}

ParamBijection ParamBijection::inverse() const {
  std::map<Param, Param> m;
  for (const auto& [from, to] : map_) m.emplace(to, from);
  return ParamBijection(std::move(m));
}

ParamBijection ParamBijection::after(const ParamBijection& first) const {
  std::map<Param, Param> m;
  for (const auto& [from, mid] : first.map_) m.emplace(from, (*this)(mid));
  return ParamBijection(std::move(m));
}

ParamBijection ParamBijection::extended_by_identity(const std::vector<Param>& params) const {
  std::map<Param, Param> m = map_;
  for (Param p : params) m.emplace(p, p);
  return ParamBijection(std::move(m));
}

void ParamBijection::require_total(const std::vector<Param>& params) const {
  for (Param p : params) {
    if (!contains(p)) throw BijectionError("unmapped parameter " + p.symbol());
  }
}

std::string ParamBijection::to_string() const {
  std::string out;
  for (const auto& [from, to] : map_) {
    if (!out.empty()) out += ", ";
    out += from.symbol() + " -> " + to.symbol();
  }
  return out;
}

MPoly apply_bijection(const MPoly& p, const ParamBijection& phi) {
  return p.rename([&](Var v) { return is_param_var(v) ? param_var(phi(var_param(v))) : v; });
}

CoefficientMap apply_bijection(const CoefficientMap& c, const ParamBijection& phi) {
  CoefficientMap out;
  for (const CoefficientEntry& e : c.entries) {
    out.entries.push_back({e.key, apply_bijection(e.value, phi)});
  }
  return out;
}

}  // namespace lincomp
