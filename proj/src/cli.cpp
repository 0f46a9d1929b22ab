#include "lincomp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lincomp/error.hpp"
#include "lincomp/serialize.hpp"

namespace lincomp::cli {

namespace {

// A model file that failed to load; carries the exit-2 message.
struct ModelFileError {
  std::string message;
};

ModelSpec load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelFileError{path + ": cannot read file"};
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_model(buf.str());
  } catch (const ParseError& e) {
    throw ModelFileError{path + ":" + std::to_string(e.position()) + ": " + e.what()};
  } catch (const ModelError& e) {
    throw ModelFileError{path + ": " + e.what()};
  }
}

struct Outcome {
  json inputs;
  json result;
  std::string pretty;
};

std::string join_strings(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : " ") + s;
  return out;
}

std::string describe(const Verdict& v) {
  std::ostringstream o;
  o << to_string(v.kind);
  if (v.kind == VerdictKind::Distinguishable) o << " (" << to_string(v.reason) << ")";
  o << "\n";
  if (v.signature_a && v.signature_b) {
    o << "  signature a: " << to_json(*v.signature_a).dump() << "\n";
    o << "  signature b: " << to_json(*v.signature_b).dump() << "\n";
  }
  if (v.rules) {
    for (const RuleOutcome& r : v.rules->rules) {
      if (r.pass) continue;
      o << "  rule " << r.rule << " (" << r.name << ") fails: [" << join_strings(r.left)
        << "] vs [" << join_strings(r.right) << "]\n";
    }
  }
  if (v.relation) {
    o << "  relation of model " << v.relation->owner << ": " << v.relation->relation.to_string()
      << " = 0 fails on the other model (residue " << v.relation->residue.to_string() << ")\n";
  }
  if (v.phi) o << "  phi: " << v.phi->to_string() << "\n";
  for (const auto& n : v.notes) o << "  note: " << n << "\n";
  return o.str();
}

std::string describe(const RuleReport& r) {
  std::ostringstream o;
  for (const RuleOutcome& x : r.rules) {
    o << "rule " << x.rule << " (" << x.name << "): " << (x.pass ? "pass" : "FAIL") << "  ["
      << join_strings(x.left) << "] vs [" << join_strings(x.right) << "]\n";
  }
  o << (r.pass() ? "all rules pass\n" : "rules violated\n");
  return o.str();
}

Outcome io_eq(const ModelSpec& m) {
  Outcome o{{{"model", to_json(m)}}, json::object(), {}};
  const auto eqs = io_equations(m);
  json list = json::array();
  for (const auto& e : eqs) {
    list.push_back(to_json(e));
    o.pretty += render_equation(e) + "\n";
  }
  const CoefficientMap c = coefficient_map(eqs);
  o.result = {{"equations", list}, {"coefficients", to_json(c)}};
  return o;
}

Outcome compare_cmd(const ModelSpec& a, const ModelSpec& b) {
  const Verdict v = compare(a, b);
  return {{{"a", to_json(a)}, {"b", to_json(b)}}, to_json(v), describe(v)};
}

Outcome rules_cmd(const ModelSpec& a, const ModelSpec& b) {
  const RuleReport r = godfrey_rules(a, b);
  return {{{"a", to_json(a)}, {"b", to_json(b)}}, to_json(r), describe(r)};
}

Outcome identifiability_cmd(const ModelSpec& m, std::uint64_t seed, int samples) {
  const IdentifiabilityResult r = local_identifiability(m, seed, samples);
  std::ostringstream p;
  p << (r.identifiable ? "generically locally identifiable" : "unidentifiable") << ": rank "
    << r.rank << " of " << r.param_count << " parameters (" << r.coefficient_count
    << " coefficients, " << r.sample_points_used << " sample points, ranks";
  for (int k : r.sample_ranks) p << " " << k;
  p << ")\n";
  return {{{"model", to_json(m)}, {"seed", seed}, {"samples", samples}}, to_json(r), p.str()};
}

Outcome relations_cmd(const ModelSpec& m) {
  const CoefficientMap c = coefficient_map(m);
  const auto rels = coefficient_relations(m);
  std::ostringstream p;
  for (std::size_t k = 0; k < c.size(); ++k) {
    p << "c" << k + 1 << " = " << c.entries[k].value.to_string() << "   ["
      << c.entries[k].key.to_string() << "]\n";
  }
  json list = json::array();
  p << (rels.empty() ? "no relations\n" : "relations:\n");
  for (const MPoly& r : rels) {
    list.push_back(r.to_string());
    p << "  " << r.to_string() << " = 0\n";
  }
  return {{{"model", to_json(m)}}, {{"coefficients", to_json(c)}, {"relations", list}}, p.str()};
}

Outcome enumerate_cmd(const ModelSpec& m, int depth) {
  const auto family = enumerate_family(m, depth);
  json list = json::array();
  std::ostringstream p;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const FamilyMember& f = family[k];
    list.push_back({{"depth", f.depth}, {"model", to_json(f.model)}, {"phi", to_json(f.phi)}});
    p << "member " << k << " (depth " << f.depth << "): " << format_model(f.model) << "\n"
      << "  phi: " << f.phi.to_string() << "\n";
  }
  return {{{"model", to_json(m)}, {"depth", depth}}, {{"members", list}}, p.str()};
}

struct TransformRequest {
  std::vector<int> move_leak;
  bool terminal_cycle = false;
  bool shift_detour = false;
  bool reverse = false;
  std::string output;
};

TransformResult detour_shift(const ModelSpec& m) {
  std::optional<PreconditionError> first;
  for (const SkeletalPathWitness& w : skeletal_path_witnesses(m)) {
    if (w.pattern != PathPattern::Detour) continue;
    try {
      return shift_detour(m, w);
    } catch (const PreconditionError& e) {
      if (!first) first = e;
    }
  }
  if (first) throw *first;
  throw PreconditionError("shift-detour: the model has no detour");
}

Outcome transform_cmd(const ModelSpec& m, const TransformRequest& req) {
  std::string kind;
  TransformResult r{m, ParamBijection()};
  json inputs = {{"model", to_json(m)}};
  if (!req.move_leak.empty()) {
    kind = "move-leak";
    inputs["i"] = req.move_leak[0];
    inputs["j"] = req.move_leak[1];
    r = move_leak(m, req.move_leak[0], req.move_leak[1]);
  } else if (req.terminal_cycle) {
    kind = "terminal-cycle";
    r = leak_to_terminal_cycle(m);
  } else if (req.shift_detour) {
    kind = "shift-detour";
    r = detour_shift(m);
  } else {
    kind = "reverse";
    ReversedModel rev = reverse_model(m);
    r = TransformResult{rev.model, ParamBijection(rev.relabel)};
  }
  inputs["transform"] = kind;

  std::string pretty = "phi: " + r.phi.to_string() + "\n";
  if (!req.output.empty()) {
    std::ofstream f(req.output, std::ios::binary);
    if (!f) throw ModelFileError{req.output + ": cannot write file"};
    f << format_model(r.model) << "\n";
    pretty += "wrote " + req.output + "\n";
  } else {
    pretty += format_model(r.model) + "\n";
  }
  return {inputs, {{"model", to_json(r.model)}, {"phi", to_json(r.phi)}}, pretty};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structural analysis of linear compartmental models", "lincomp"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format = "pretty";
  std::string seed_text = std::to_string(kDefaultSeed);
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"pretty", "structured"}));
  app.add_option("--seed", seed_text, "Random seed (an integer or 'random')");

  std::string model_a, model_b;
  int depth = 2;
  int samples = 3;
  TransformRequest treq;

  auto* io = app.add_subcommand("io-eq", "Input-output equations and coefficient map");
  io->add_option("model", model_a, "Model file")->required();

  auto* cmp = app.add_subcommand("compare", "Decide (in)distinguishability of two models");
  cmp->add_option("a", model_a, "First model file")->required();
  cmp->add_option("b", model_b, "Second model file")->required();

  auto* tr = app.add_subcommand("transform", "Apply a constructive transform");
  tr->add_option("model", model_a, "Model file")->required();
  auto* g = tr->add_option_group("kind", "Transform to apply");
  g->add_option("--move-leak", treq.move_leak, "Move the leak from path position i to j")
      ->expected(2)
      ->type_name("I J");
  g->add_flag("--terminal-cycle", treq.terminal_cycle, "Replace the leak at n-1 by edge n -> n-1");
  g->add_flag("--shift-detour", treq.shift_detour, "Shift the detour one step down the path");
  g->add_flag("--reverse", treq.reverse, "Reverse every edge and swap inputs with outputs");
  g->require_option(1);
  tr->add_option("-o,--output", treq.output, "Write the transformed model here");

  auto* id = app.add_subcommand("identifiability", "Generic local identifiability");
  id->add_option("model", model_a, "Model file")->required();
  id->add_option("--samples", samples, "Random sample points (at least 3)")
      ->check(CLI::Range(3, 1000));

  auto* rel = app.add_subcommand("relations", "Polynomial relations among the coefficients");
  rel->add_option("model", model_a, "Model file")->required();

  auto* en = app.add_subcommand("enumerate", "Permutation-indistinguishable family");
  en->add_option("model", model_a, "Model file")->required();
  en->add_option("--depth", depth, "Maximum number of transform steps")
      ->check(CLI::NonNegativeNumber);

  auto* ru = app.add_subcommand("rules", "Geometric necessary conditions");
  ru->add_option("a", model_a, "First model file")->required();
  ru->add_option("b", model_b, "Second model file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  std::uint64_t seed = kDefaultSeed;
  if (seed_text == "random") {
    seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
  } else {
    try {
      std::size_t used = 0;
      seed = std::stoull(seed_text, &used);
      if (used != seed_text.size()) throw std::invalid_argument(seed_text);
    } catch (const std::exception&) {
      err << "usage error: --seed expects an integer or 'random', got '" << seed_text << "'\n";
      return kExitUsage;
    }
  }

  CLI::App* sub = app.get_subcommands().front();
  Outcome o;
  try {
    const std::string name = sub->get_name();
    if (name == "io-eq") {
      o = io_eq(load_model(model_a));
    } else if (name == "compare") {
      o = compare_cmd(load_model(model_a), load_model(model_b));
    } else if (name == "transform") {
      o = transform_cmd(load_model(model_a), treq);
    } else if (name == "identifiability") {
      o = identifiability_cmd(load_model(model_a), seed, samples);
    } else if (name == "relations") {
      o = relations_cmd(load_model(model_a));
    } else if (name == "enumerate") {
      o = enumerate_cmd(load_model(model_a), depth);
    } else {
      o = rules_cmd(load_model(model_a), load_model(model_b));
    }
  } catch (const ModelFileError& e) {
    err << "model file error: " << e.message << "\n";
    return kExitModelFile;
  } catch (const ModelError& e) {
    err << "model error: " << e.what() << "\n";
    return kExitModelFile;
  } catch (const Error& e) {
    err << "analysis error: " << e.what() << "\n";
    return kExitAnalysis;
  }

  if (format == "structured") {
    json doc = {{"kind", sub->get_name()}, {"inputs", o.inputs}, {"result", o.result}};
    out << doc.dump(2) << "\n";
  } else {
    out << o.pretty;
  }
  return kExitOk;
}

}  // namespace lincomp::cli
