#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lincomp/error.hpp"
#include "lincomp/transforms.hpp"
#include "lincomp/verify.hpp"

using namespace lincomp;

namespace {

Param P(const char* s) { return Param::parse(s); }

ParamBijection map_of(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::map<Param, Param> m;
  for (const auto& [a, b] : pairs) m[P(a)] = P(b);
  return ParamBijection(m);
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

// Path 1..n plus a detour through n+1..n+d: i -> n+1 -> ... -> n+d -> j.
ModelSpec detour_model(int n, int d, int i, int j, std::vector<int> leaks = {}) {
  std::vector<Edge> e;
  for (int k = 1; k < n; ++k) e.push_back({k, k + 1});
  for (int k = n + 1; k < n + d; ++k) e.push_back({k, k + 1});
  e.push_back({i, n + 1});
  e.push_back({n + d, j});
  return ModelSpec(n + d, e, {1}, {n}, std::move(leaks));
}

}  // namespace

TEST(Witness, Patterns) {
  const auto leak = match_skeletal_path(fixtures::path3_leak(1));
  EXPECT_EQ(leak.pattern, PathPattern::Leaks);
  EXPECT_EQ(leak.path, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(match_skeletal_path(fixtures::path(4, {})).pattern, PathPattern::PurePath);
  EXPECT_EQ(match_skeletal_path(fixtures::path3_cycle()).pattern, PathPattern::TerminalCycle);

  const auto detour = match_skeletal_path(fixtures::detour_early());
  EXPECT_EQ(detour.pattern, PathPattern::Detour);
  EXPECT_EQ(detour.path, (std::vector<int>{1, 2, 3, 4}));
  ASSERT_TRUE(detour.detour.has_value());
  EXPECT_EQ(*detour.detour, (DetourShape{2, 3, 5, 5, {5}}));
}

TEST(Witness, PathsTriedShortestFirst) {
  // 1 -> 5 -> 4 is shorter than 1 -> 2 -> 3 -> 4, so the detour reads 2, 3.
  const ModelSpec m(5, {{1, 2}, {2, 3}, {3, 4}, {1, 5}, {5, 4}}, {1}, {4}, {});
  const auto all = skeletal_path_witnesses(m);
  ASSERT_GE(all.size(), 2u);
  EXPECT_EQ(all[0].path, (std::vector<int>{1, 5, 4}));
  EXPECT_EQ(all[0].detour->vertices, (std::vector<int>{2, 3}));
  EXPECT_EQ(all[1].path, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(all[1].detour->vertices, std::vector<int>{5});
}

TEST(Witness, EqualLengthPathsTriedLexicographically) {
  const ModelSpec m(5, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 4}}, {1}, {4}, {});
  const auto all = skeletal_path_witnesses(m);
  ASSERT_GE(all.size(), 2u);
  EXPECT_EQ(all[0].path, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(all[1].path, (std::vector<int>{1, 2, 5, 4}));
}

TEST(Witness, Unsupported) {
  EXPECT_TRUE(contains(message_of([] { match_skeletal_path(fixtures::two_input(1)); }),
                       "a skeletal path needs one input and one output"));
  EXPECT_TRUE(contains(message_of([] { match_skeletal_path(ModelSpec(2, {{2, 1}}, {1}, {2}, {})); }),
                       "no spanning skeleton"));
  EXPECT_TRUE(contains(message_of([] { match_skeletal_path(fixtures::exchange_leak1()); }),
                       "pattern not supported"));
}

TEST(MoveLeak, WorkedExampleMap) {
  const auto r = move_leak(fixtures::path3_leak(1), 1, 2);
  EXPECT_EQ(r.model, fixtures::path3_leak(2));
  EXPECT_EQ(r.phi, map_of({{"a01", "a02"}, {"a21", "a32"}, {"a32", "a21"}}));
}

TEST(MoveLeak, EveryPositionCertifies) {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        const auto m = fixtures::path(n, {i});
        const auto r = move_leak(m, i, j);
        EXPECT_EQ(r.model, fixtures::path(n, {j}));
        EXPECT_TRUE(verify_permutation(m, r.model, r.phi)) << n << " " << i << " " << j;
      }
    }
  }
}

TEST(MoveLeak, Errors) {
  EXPECT_TRUE(contains(message_of([] { move_leak(fixtures::path3_leak(1), 1, 3); }),
                       "move_leak requires positions i, j < n"));
  EXPECT_THROW(move_leak(fixtures::path3_leak(1), 2, 1), PreconditionError);
  EXPECT_THROW(move_leak(fixtures::path3_cycle(), 1, 2), PreconditionError);
  EXPECT_TRUE(move_leak(fixtures::path3_leak(2), 2, 2).phi.is_identity());
}

TEST(TerminalCycle, WorkedExample) {
  const auto r = leak_to_terminal_cycle(fixtures::path3_leak(2));
  EXPECT_EQ(r.model, fixtures::path3_cycle());
  EXPECT_EQ(r.phi, map_of({{"a02", "a23"}, {"a21", "a21"}, {"a32", "a32"}}));
  EXPECT_THROW(leak_to_terminal_cycle(fixtures::path3_leak(1)), PreconditionError);
}

TEST(ShiftDetour, WorkedExampleMap) {
  const auto m = fixtures::detour_early();
  const auto r = shift_detour(m, match_skeletal_path(m));
  EXPECT_EQ(r.model, fixtures::detour_late());
  EXPECT_EQ(r.phi, map_of({{"a21", "a32"}, {"a32", "a43"}, {"a43", "a21"},
                           {"a52", "a53"}, {"a35", "a45"}}));
}

TEST(ShiftDetour, OffRampAtInput) {
  const auto m = detour_model(4, 1, 1, 3);
  const auto r = shift_detour(m, match_skeletal_path(m));
  EXPECT_EQ(r.model, detour_model(4, 1, 2, 4));
  EXPECT_TRUE(verify_permutation(m, r.model, r.phi));
  EXPECT_EQ(r.phi(P("a51")), P("a52"));
  EXPECT_EQ(r.phi(P("a35")), P("a45"));
  EXPECT_EQ(r.phi(P("a43")), P("a21"));
}

TEST(ShiftDetour, RandomDetoursCertify) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int d = 1 + static_cast<int>(rng() % 2);
    const int i = 1 + static_cast<int>(rng() % (n - 2));
    const int j = i + static_cast<int>(rng() % (n - i));
    std::vector<int> leaks;
    if (rng() % 2) leaks.push_back(n + 1 + static_cast<int>(rng() % d));
    const auto m = detour_model(n, d, i, j, leaks);
    std::vector<int> backbone(n);
    for (int k = 0; k < n; ++k) backbone[k] = k + 1;
    SkeletalPathWitness w;
    for (const auto& c : skeletal_path_witnesses(m)) {
      if (c.path == backbone) w = c;
    }
    ASSERT_EQ(w.path, backbone);
    const auto r = shift_detour(m, w);
    EXPECT_TRUE(verify_permutation(m, r.model, r.phi)) << format_model(m);
  }
}

TEST(ShiftDetour, BothRampsAtEndIsExcluded) {
  const auto m = detour_model(3, 1, 2, 2);
  const auto w = match_skeletal_path(m);
  ASSERT_EQ(w.pattern, PathPattern::Detour);
  EXPECT_TRUE(contains(message_of([&] { shift_detour(m, w); }), "changes the equations"));
  const auto candidate = shift_detour_candidate(m, w);
  EXPECT_FALSE(verify_permutation(m, candidate.model, candidate.phi));
}

TEST(ShiftDetour, LeakOnPathRejected) {
  const auto m = detour_model(4, 1, 1, 2, {2});
  EXPECT_THROW(shift_detour(m, match_skeletal_path(m)), PreconditionError);
}

TEST(Sink, WorkedPairComposes) {
  const Branch branch{{1, 2, 3, 4}, {1, 2, 3, 4}};
  const auto inner = map_of({{"a21", "a32"}, {"a32", "a21"}, {"a41", "a42"}, {"a24", "a34"}});
  const auto phi = compose_sink(fixtures::sink_a(), fixtures::sink_b(), branch, inner);
  EXPECT_EQ(phi(P("a35")), P("a35"));
  EXPECT_TRUE(verify_permutation(fixtures::sink_a(), fixtures::sink_b(), phi));
}

TEST(Sink, RejectsDifferenceOutsideBranch) {
  const Branch branch{{1, 2, 3, 4}, {1, 2, 3, 4}};
  const auto inner = map_of({{"a21", "a32"}, {"a32", "a21"}, {"a41", "a42"}, {"a24", "a34"}});
  const ModelSpec leaky(5, {{1, 2}, {2, 3}, {2, 4}, {4, 3}, {5, 3}}, {1, 5}, {3}, {5});
  EXPECT_THROW(compose_sink(fixtures::sink_a(), leaky, branch, inner), PreconditionError);
  const auto bad = map_of({{"a21", "a21"}, {"a32", "a32"}, {"a41", "a42"}, {"a24", "a34"}});
  EXPECT_THROW(compose_sink(fixtures::sink_a(), fixtures::sink_b(), branch, bad), PreconditionError);
}

TEST(Source, ReversedSinkPairFailsCertification) {
  // Reversing the edges does not transpose A(G): the diagonal turns into
  // inflow sums, so the reversed pair is not permutation indistinguishable.
  const auto ra = reverse_model(fixtures::sink_a()).model;
  const auto rb = reverse_model(fixtures::sink_b()).model;
  const auto inner = map_of({{"a21", "a32"}, {"a32", "a21"}, {"a41", "a42"}, {"a24", "a34"}});
  const Branch branch{{1, 2, 3, 4}, {1, 2, 3, 4}};
  EXPECT_THROW(compose_source(ra, rb, branch, reversed_bijection(inner)), PreconditionError);
  EXPECT_FALSE(search_permutation(ra, rb).has_value());
}

TEST(Source, ReversedBijectionSwapsIndices) {
  const auto phi = map_of({{"a21", "a32"}, {"a01", "a02"}});
  EXPECT_EQ(reversed_bijection(phi), map_of({{"a12", "a23"}, {"a01", "a02"}}));
  EXPECT_EQ(reversed_bijection(reversed_bijection(phi)), phi);
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  const ModelSpec a(3, {{1, 2}, {2, 3}}, {1}, {3}, {2});
  const ModelSpec b(3, {{3, 1}, {1, 2}}, {3}, {2}, {1});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_NE(canonical_form(a), canonical_form(fixtures::path3_leak(1)));
}

TEST(Family, PathWithLeakCoversEveryLeakAndTheCycle) {
  const auto fam = enumerate_family(fixtures::path3_leak(1), 3);
  ASSERT_EQ(fam.size(), 3u);
  EXPECT_TRUE(fam[0].phi.is_identity());
  EXPECT_EQ(fam[0].depth, 0);
  for (const auto& member : fam) {
    EXPECT_TRUE(verify_permutation(fixtures::path3_leak(1), member.model, member.phi));
  }
}

TEST(Family, DetourFamilyMembersCertify) {
  const auto root = fixtures::detour_early();
  const auto fam = enumerate_family(root, 2);
  EXPECT_GE(fam.size(), 2u);
  for (const auto& member : fam) {
    EXPECT_TRUE(verify_permutation(root, member.model, member.phi));
  }
}
