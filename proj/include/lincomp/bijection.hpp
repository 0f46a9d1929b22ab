#pragma once

#include <map>
#include <string>
#include <vector>

#include "lincomp/ioeq.hpp"
#include "lincomp/param.hpp"

namespace lincomp {

/// A renaming of parameters from one model's universe to another's.
class ParamBijection {
 public:
  ParamBijection() = default;
  /// Throws BijectionError when two sources share a target.
  explicit ParamBijection(std::map<Param, Param> mapping);

  static ParamBijection identity(const std::vector<Param>& params);

  const std::map<Param, Param>& mapping() const { return map_; }
  std::size_t size() const { return map_.size(); }
  bool contains(Param p) const { return map_.count(p) != 0; }

  /// Throws BijectionError for an unmapped parameter.
  Param operator()(Param p) const;

  /// Sources, canonical order.
  std::vector<Param> domain() const;
  /// Targets, canonical order.
  std::vector<Param> image() const;

  bool is_identity() const;
  ParamBijection inverse() const;
  /// (*this) after `first`: p -> (*this)(first(p)).
  ParamBijection after(const ParamBijection& first) const;
  /// Adds p -> p for every listed parameter not already mapped.
  ParamBijection extended_by_identity(const std::vector<Param>& params) const;

  /// Throws BijectionError unless the domain contains every listed parameter.
  void require_total(const std::vector<Param>& params) const;

  /// `a01 -> a02, a21 -> a32`
  std::string to_string() const;

  bool operator==(const ParamBijection&) const = default;

 private:
  std::map<Param, Param> map_;
};

/// Renames every parameter variable of `p`; throws BijectionError when one is
/// unmapped.
MPoly apply_bijection(const MPoly& p, const ParamBijection& phi);

/// Substitutes every parameter per phi and renormalizes term order. Keys are
/// unchanged.
CoefficientMap apply_bijection(const CoefficientMap& c, const ParamBijection& phi);

}  // namespace lincomp
