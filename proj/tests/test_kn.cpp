#include "doctest.h"

#include <set>

#include "krc/kn.hpp"
#include "oracles.hpp"

using namespace krc;

TEST_CASE("standard crystals match Figure-2 shapes") {
  SUBCASE("A_2") {
    auto g = standard_crystal(FiniteType::A, 2);
    CHECK(g.graph.size() == 3);
    CHECK(g.graph.f(1, g.graph.vertex_checked("1")) == g.graph.vertex_checked("2"));
    CHECK(g.graph.f(2, g.graph.vertex_checked("2")) == g.graph.vertex_checked("3"));
  }
  SUBCASE("C_2 chain") {
    auto g = standard_crystal(FiniteType::C, 2);
    CHECK(g.graph.size() == 4);
    auto& G = g.graph;
    CHECK(G.f(1, G.vertex_checked("1")) == G.vertex_checked("2"));
    CHECK(G.f(2, G.vertex_checked("2")) == G.vertex_checked("-2"));
    CHECK(G.f(1, G.vertex_checked("-2")) == G.vertex_checked("-1"));
  }
  SUBCASE("B_2 chain with middle letter") {
    auto g = standard_crystal(FiniteType::B, 2);
    CHECK(g.graph.size() == 5);
    auto& G = g.graph;
    CHECK(G.f(1, G.vertex_checked("1")) == G.vertex_checked("2"));
    CHECK(G.f(2, G.vertex_checked("2")) == G.vertex_checked("0"));
    CHECK(G.f(2, G.vertex_checked("0")) == G.vertex_checked("-2"));
    CHECK(G.f(1, G.vertex_checked("-2")) == G.vertex_checked("-1"));
    CHECK(G.eps(2, G.vertex_checked("0")) == 1);
    CHECK(G.phi(2, G.vertex_checked("0")) == 1);
  }
  SUBCASE("D_3 fork") {
    auto g = standard_crystal(FiniteType::D, 3);
    CHECK(g.graph.size() == 6);
    auto& G = g.graph;
    CHECK(G.f(2, G.vertex_checked("2")) == G.vertex_checked("3"));
    CHECK(G.f(3, G.vertex_checked("2")) == G.vertex_checked("-3"));
    CHECK(G.f(3, G.vertex_checked("3")) == G.vertex_checked("-2"));
    CHECK(G.f(2, G.vertex_checked("-3")) == G.vertex_checked("-2"));
  }
}

TEST_CASE("lambda_partition case rules") {
  CHECK(lambda_partition(FiniteType::C, 4, {0, 2, 1, 0}).cols == std::vector<int>{3, 2, 2});
  auto b = lambda_partition(FiniteType::B, 3, {0, 0, 2});
  CHECK(b.cols == std::vector<int>{3});
  CHECK(!b.half_column);
  auto d = lambda_partition(FiniteType::D, 4, {0, 0, 1, 1});
  CHECK(d.cols == std::vector<int>{3});
  CHECK(d.color == 0);
  auto dspin = lambda_partition(FiniteType::D, 4, {0, 0, 0, 2});
  CHECK(dspin.cols == std::vector<int>{4});
  CHECK(dspin.color == 1);
  CHECK_THROWS_AS(lambda_partition(FiniteType::C, 2, {-1, 0}), std::invalid_argument);
}

TEST_CASE("kn_crystal sizes") {
  CHECK(kn_crystal(FiniteType::A, 2, {1, 0}).graph.size() == 3);
  // weakly increasing 2-letter words over {1,2,3}
  CHECK(kn_crystal(FiniteType::A, 2, {2, 0}).graph.size() == 6);
  CHECK(kn_crystal(FiniteType::C, 2, {0, 1}).graph.size() == 5);
  CHECK_THROWS_AS(kn_crystal(FiniteType::B, 2, {0, 1}), unsupported_error);
}

TEST_CASE("kn_crystal counts match the Weyl dimension oracle") {
  using krc_oracle::weyl_dim;
  struct Case { FiniteType t; int n; std::vector<int> gamma; };
  std::vector<Case> cases = {
      {FiniteType::A, 2, {1, 1}},  {FiniteType::A, 3, {0, 2, 0}},
      {FiniteType::A, 3, {1, 0, 1}}, {FiniteType::B, 2, {2, 0}},
      {FiniteType::B, 3, {1, 0, 0}}, {FiniteType::B, 3, {0, 1, 0}},
      {FiniteType::B, 3, {0, 0, 2}}, {FiniteType::C, 2, {1, 1}},
      {FiniteType::C, 3, {0, 0, 1}}, {FiniteType::C, 3, {1, 1, 0}},
      {FiniteType::D, 4, {1, 0, 0, 0}}, {FiniteType::D, 4, {0, 1, 0, 0}},
      {FiniteType::D, 4, {0, 0, 1, 1}},
  };
  for (const auto& c : cases) {
    auto g = kn_crystal(c.t, c.n, c.gamma);
    CHECK_MESSAGE(g.graph.size() == weyl_dim(c.t, c.n, c.gamma),
                  "type mismatch at n=", c.n);
  }
}

TEST_CASE("kn_crystal has a unique classical highest vertex") {
  for (auto [t, n, g] : std::vector<std::tuple<FiniteType, int, std::vector<int>>>{
           {FiniteType::A, 2, {1, 1}},
           {FiniteType::B, 2, {2, 0}},
           {FiniteType::C, 3, {0, 1, 0}},
           {FiniteType::D, 4, {0, 1, 0, 0}}}) {
    auto cr = kn_crystal(t, n, g);
    CHECK(cr.graph.classical_highest().size() == 1);
  }
}

TEST_CASE("generated vertices satisfy the monotonicity conditions") {
  for (auto [t, n, gvec] : std::vector<std::tuple<FiniteType, int, std::vector<int>>>{
           {FiniteType::C, 2, {1, 1}},
           {FiniteType::B, 3, {0, 1, 0}},
           {FiniteType::D, 4, {0, 1, 0, 0}}}) {
    auto cr = kn_crystal(t, n, gvec);
    LetterModel m{t, n, false};
    auto shape = lambda_partition(t, n, gvec);
    for (const auto& w : cr.payload)
      CHECK(tableau_monotone(m, column_reading(w, shape.cols)));
  }
}

TEST_CASE("spin crystal sizes and distinctness") {
  CHECK(spin_crystal(FiniteType::D, 3, 3, 1).graph.size() == 4);
  CHECK(spin_crystal(FiniteType::B, 2, 2, 1).graph.size() == 4);
  auto d4p = spin_crystal(FiniteType::D, 4, 4, 1);
  auto d4m = spin_crystal(FiniteType::D, 4, 3, 1);
  CHECK(d4p.graph.size() == 8);
  CHECK(d4m.graph.size() == 8);
  CHECK(d4p.graph.labels != d4m.graph.labels);
  CHECK(d4p.graph.classical_highest().size() == 1);
  // s = 2 spin column count for B_2: dim V(2 omega_2) = 10
  CHECK(spin_crystal(FiniteType::B, 2, 2, 2).graph.size() ==
        krc_oracle::weyl_dim(FiniteType::B, 2, {0, 2}));
  CHECK_THROWS_AS(spin_crystal(FiniteType::C, 2, 2, 1), unsupported_error);
}

TEST_CASE("column reading of the seven-letter example") {
  LetterModel m{FiniteType::C, 4, false};
  Word w = {-4, 3, 1, -3, 2, -3, 3};
  auto t = column_reading(w, {3, 2, 2});
  CHECK(t.columns[0] == std::vector<Letter>{1, 3, -4});
  CHECK(t.columns[1] == std::vector<Letter>{2, -3});
  CHECK(t.columns[2] == std::vector<Letter>{3, -3});
  CHECK(tableau_word(t) == w);
  CHECK(tableau_label(m, t) == "1,3,-4/2,-3/3,-3");
  // single box is the identity
  Word one = {2};
  CHECK(tableau_word(column_reading(one, {1})) == one);
  CHECK_THROWS_AS(column_reading(w, {3, 2}), std::invalid_argument);
}

TEST_CASE("word <-> tableau round trip across a whole crystal") {
  auto cr = kn_crystal(FiniteType::A, 3, {2, 1, 0});
  auto shape = lambda_partition(FiniteType::A, 3, {2, 1, 0});
  for (const auto& w : cr.payload)
    CHECK(tableau_word(column_reading(w, shape.cols)) == w);
}

TEST_CASE("D_3 and relabeled A_3 realize the same crystal") {
  // D_3 node map (1,2,3) <-> A_3 (2,1,3): compare B(omega_1^D) with B(omega_2^A)
  auto d = kn_crystal(FiniteType::D, 3, {1, 0, 0});
  auto a = kn_crystal(FiniteType::A, 3, {0, 1, 0});
  REQUIRE(d.graph.size() == a.graph.size());
  CrystalGraph relabeled = a.graph;
  // swap colors 1 and 2 of the A_3 crystal
  std::swap(relabeled.fmap[0], relabeled.fmap[1]);
  std::swap(relabeled.emap[0], relabeled.emap[1]);
  std::swap(relabeled.eps_tab[0], relabeled.eps_tab[1]);
  std::swap(relabeled.phi_tab[0], relabeled.phi_tab[1]);
  int hd = d.graph.classical_highest()[0];
  int ha = relabeled.classical_highest()[0];
  auto iso = rigid_isomorphism(d.graph, relabeled, hd, ha);
  CHECK(iso.ok);
}
