#include <catch2/catch_amalgamated.hpp>

#include "dcp/canonical.hpp"
#include "dcp/dcp.hpp"
#include "dcp/families.hpp"
#include "dcp/tree_invariants.hpp"
#include "support/oracles.hpp"

using namespace dcp;
using namespace testsupport;

TEST_CASE("build") {
  SECTION("base caterpillar") {
    Tree c = build(FamilySpec{FamilyKind::C});
    CHECK(c.vertex_count() == 11);
    CHECK(degree_sequence(c.graph()) == std::vector<int>{3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1});
  }

  SECTION("X_2: order 13, degree-3 distances {1,2,3}") {
    Tree x2 = build(FamilySpec{FamilyKind::X, 2});
    CHECK(x2.vertex_count() == 13);
    CHECK(distance_multiset_of_high_degree_vertices(x2, 3) == std::vector<int>{1, 2, 3});
  }

  SECTION("T1 has the stated fifth path count") {
    Tree t1 = build(FamilySpec{FamilyKind::T1});
    CHECK(t1.vertex_count() == 9);
    CHECK(path_count_oracle(t1, 5) == 5);
  }

  SECTION("X_1 and Xtilde_1 coincide, likewise Y_1 and Ytilde_1") {
    CHECK(trees_isomorphic(build(FamilySpec{FamilyKind::X, 1}),
                           build(FamilySpec{FamilyKind::Xtilde, 1})));
    CHECK(trees_isomorphic(build(FamilySpec{FamilyKind::Y, 1}),
                           build(FamilySpec{FamilyKind::Ytilde, 1})));
  }

  SECTION("pair members and parameter validation") {
    CHECK(build(FamilySpec{FamilyKind::N10Pair, 0, 1}).vertex_count() == 10);
    CHECK(build(FamilySpec{FamilyKind::N10Pair, 0, 2}).vertex_count() == 10);
    CHECK(!trees_isomorphic(build(FamilySpec{FamilyKind::N10Pair, 0, 1}),
                            build(FamilySpec{FamilyKind::N10Pair, 0, 2})));
    CHECK(build(FamilySpec{FamilyKind::N11PairShown, 0, 1}).vertex_count() == 11);
    CHECK_THROWS_AS(build(FamilySpec{FamilyKind::X, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build(FamilySpec{FamilyKind::N10Pair, 0, 3}), std::invalid_argument);
  }
}

TEST_CASE("c_r_le2_closed_form") {
  CHECK(c_r_le2_closed_form(1, 2) == 55);  // C(11,2): every 2-subset is a linear forest
  CHECK(c_r_le2_closed_form(1, 3) == 162);
  CHECK(c_r_le2_closed_form(1, 0) == 1);
  CHECK(c_r_le2_closed_form(1, 99) == 0);

  SECTION("matches the DP on X_a and Y_a for a <= 5, every r") {
    for (int a = 1; a <= 5; ++a) {
      CoeffArray x = c_r_le_d(build(FamilySpec{FamilyKind::X, a}), 2);
      CoeffArray y = c_r_le_d(build(FamilySpec{FamilyKind::Y, a}), 2);
      for (int r = 0; r < static_cast<int>(x.size()); ++r) {
        CHECK(c_r_le2_closed_form(a, r) == x[static_cast<size_t>(r)]);
        CHECK(c_r_le2_closed_form(a, r) == y[static_cast<size_t>(r)]);
      }
    }
  }

  SECTION("row sums count all linear-forest subsets") {
    for (int a = 1; a <= 3; ++a) {
      Tree x = build(FamilySpec{FamilyKind::X, a});
      auto enumerated = c_r_le_d_enum(x, 2);
      BigInt closed = 0, direct = 0;
      for (int r = 0; r <= x.vertex_count(); ++r) closed += c_r_le2_closed_form(a, r);
      for (const BigInt& v : enumerated) direct += v;
      CHECK(closed == direct);
    }
  }
}

TEST_CASE("c_r_le_d_tilde_closed_form") {
  CHECK(c_r_le_d_tilde_closed_form(1, 3, 2) == 55);
  CHECK_THROWS_AS(c_r_le_d_tilde_closed_form(1, 2, 2), std::invalid_argument);

  SECTION("b=3, d=3 matches the DP at every r") {
    CoeffArray dp = c_r_le_d(build(FamilySpec{FamilyKind::Xtilde, 3}), 3);
    for (int r = 0; r < static_cast<int>(dp.size()); ++r)
      CHECK(c_r_le_d_tilde_closed_form(3, 3, r) == dp[static_cast<size_t>(r)]);
  }

  SECTION("inactive cap collapses to a single binomial") {
    for (int r = 0; r <= 12; ++r)
      CHECK(c_r_le_d_tilde_closed_form(2, 4, r) == binomial(12, r));
  }
}

TEST_CASE("X/Y families are equal and nonisomorphic") {
  for (int a = 1; a <= 4; ++a) {
    Tree x = build(FamilySpec{FamilyKind::X, a});
    Tree y = build(FamilySpec{FamilyKind::Y, a});
    CHECK(dcp_family(x) == dcp_family(y));
    CHECK(!trees_isomorphic(x, y));
  }
  for (int a = 1; a <= 6; ++a) {
    CHECK(distance_multiset_of_high_degree_vertices(build(FamilySpec{FamilyKind::X, a}), 3) ==
          std::vector<int>{1, 2, 3});
    CHECK(distance_multiset_of_high_degree_vertices(build(FamilySpec{FamilyKind::Y, a}), 3) ==
          std::vector<int>{1, 3, 4});
  }
}

TEST_CASE("caterpillar variants share families too") {
  for (int b = 1; b <= 4; ++b) {
    Tree x = build(FamilySpec{FamilyKind::Xtilde, b});
    Tree y = build(FamilySpec{FamilyKind::Ytilde, b});
    CHECK(dcp_family(x) == dcp_family(y));
    CHECK(!trees_isomorphic(x, y));
  }
}

TEST_CASE("family kind parsing") {
  CHECK(family_kind_from_string("Xtilde") == FamilyKind::Xtilde);
  CHECK(family_kind_from_string("n10_pair") == FamilyKind::N10Pair);
  CHECK(!family_kind_from_string("bogus").has_value());
}
