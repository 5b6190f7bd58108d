#include "doctest.h"

#include <algorithm>

#include "krc/graph.hpp"
#include "krc/kn.hpp"
#include "krc/word.hpp"

using namespace krc;

namespace {

const CrystalGraph& a2_standard() {
  static Generated<Word> g = standard_crystal(FiniteType::A, 2);
  return g.graph;
}

} // namespace

TEST_CASE("eps/phi on the standard A_2 crystal") {
  const auto& g = a2_standard();
  int v1 = g.vertex_checked("1");
  CHECK(g.eps(1, v1) == 0);
  CHECK(g.phi(1, v1) == 1);
  CHECK(g.eps(2, v1) == 0);
  CHECK(g.phi(2, v1) == 0);  // no 2-edges at 1
  int v2 = g.vertex_checked("2");
  CHECK(g.f(2, v2) == g.vertex_checked("3"));
}

TEST_CASE("reversed tensor rule on (B(omega_1))^2") {
  const auto& g = a2_standard();
  auto t = tensor(g, g);
  CHECK(t.size() == 9);
  int v11 = t.vertex_checked("1#1");
  CHECK(t.f(1, v11) == t.vertex_checked("1#2"));
  int v21 = t.vertex_checked("2#1");
  CHECK(t.f(2, v21) == t.vertex_checked("3#1"));
  // e and f are mutually inverse partial maps per color
  for (int v = 0; v < t.size(); ++v) {
    for (int c : t.colors) {
      int fv = t.f(c, v);
      if (fv >= 0) CHECK(t.e(c, fv) == v);
      int ev = t.e(c, v);
      if (ev >= 0) CHECK(t.f(c, ev) == v);
    }
  }
}

TEST_CASE("tensor associativity, edge by edge") {
  const auto& g = a2_standard();
  auto left = tensor(tensor(g, g), g);
  auto right = tensor(g, tensor(g, g));
  auto direct = multi_tensor({&g, &g, &g});
  REQUIRE(left.labels == right.labels);
  REQUIRE(left.labels == direct.labels);
  CHECK(left.fmap == right.fmap);
  CHECK(left.fmap == direct.fmap);
}

TEST_CASE("index-set mismatch is rejected") {
  const auto& g = a2_standard();
  auto h = standard_crystal(FiniteType::A, 3);
  CHECK_THROWS_AS(tensor(g, h.graph), std::invalid_argument);
}

TEST_CASE("classical highest vertices of (B(omega_1))^2") {
  const auto& g = a2_standard();
  auto t = tensor(g, g);
  auto hi = t.classical_highest();
  std::vector<std::string> names;
  for (int v : hi) names.push_back(t.labels[v]);
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"1#1", "2#1"});
  CHECK(t.wt_finite(t.vertex_checked("1#1")) == std::vector<int>{2, 0});
  CHECK(t.wt_finite(t.vertex_checked("2#1")) == std::vector<int>{0, 1});
}

TEST_CASE("components of a single B(gamma) crystal") {
  auto b = kn_crystal(FiniteType::B, 2, {1, 0});
  auto comps = b.graph.classical_components();
  CHECK(comps.count() == 1);
  CHECK(b.graph.size() == 5);
}

TEST_CASE("character mass at q=1 equals vertex count") {
  const auto& g = a2_standard();
  auto t = tensor(g, g);
  auto ch = t.character(std::vector<int>(t.size(), 0));
  long long mass = 0;
  for (const auto& [wt, poly] : ch)
    for (const auto& [d, c] : poly) mass += c;
  CHECK(mass == t.size());
}

TEST_CASE("rigid isomorphism: identity and failure") {
  auto adj = kn_crystal(FiniteType::A, 2, {1, 1});  // connected, 8 vertices
  const auto& t = adj.graph;
  int u = t.classical_highest()[0];
  auto id = rigid_isomorphism(t, t, u, u);
  REQUIRE(id.ok);
  for (int v = 0; v < t.size(); ++v) CHECK(id.map[v] == v);

  auto bad = rigid_isomorphism(t, t, u, t.f(1, u));
  CHECK(!bad.ok);
  CHECK(!bad.conflict.empty());
}

TEST_CASE("generate guards") {
  LetterModel m{FiniteType::A, 2, false};
  struct Model {
    LetterModel m;
    std::string label(const Word& w) const { return word_str(m, w); }
    std::optional<Word> act(const Word& w, int c, bool raising) const {
      return raising ? word_e(m, w, c) : word_f(m, w, c);
    }
  } model{m};
  CHECK_THROWS_AS((generate<Word>(model, {1, 2}, 2, {})), std::invalid_argument);
  GenerateOptions opt;
  opt.budget = 2;
  CHECK_THROWS_AS((generate<Word>(model, {1, 2}, 2, {Word{1}}, opt)), budget_error);
}
