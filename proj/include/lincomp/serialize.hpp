#pragma once

#include <nlohmann/json.hpp>

#include "lincomp/bijection.hpp"
#include "lincomp/ioeq.hpp"
#include "lincomp/model.hpp"
#include "lincomp/rules.hpp"
#include "lincomp/transforms.hpp"
#include "lincomp/verify.hpp"

namespace lincomp {

using nlohmann::json;

json to_json(const ModelSpec& m);
/// `[["a01","a02"], ...]`
json to_json(const ParamBijection& phi);
/// Inverse of to_json(ParamBijection); throws ParseError.
ParamBijection bijection_from_json(const json& j);
json to_json(const IoEquation& eq);
json to_json(const CoefficientMap& c);
json to_json(const StructureSignature& s);
json to_json(const RuleReport& r);
json to_json(const RhsCount& c);
json to_json(const Verdict& v);
json to_json(const IdentifiabilityResult& r);
json to_json(const SkeletalPathWitness& w);

}  // namespace lincomp
