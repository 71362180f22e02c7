// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dcp/all.hpp"
#include "support/oracles.hpp"

using namespace dcp;
using namespace testsupport;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  [" << index << "] " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

IntPoly from_ints(std::vector<long> v) {
  std::vector<BigInt> c(v.begin(), v.end());
  return IntPoly(std::move(c));
}

// Families checked by the degree-bound invariant in criterion 5.
std::vector<DcpFamily> computed_families;

bool degree_bound_ok(const DcpFamily& fam) {
  for (int d = 0; d <= fam.delta; ++d)
    if ((IntPoly::monomial(fam.n) - fam.chi(d)).degree() > fam.n - d - 1) return false;
  return true;
}

// --- criterion 1 -----------------------------------------------------------

void criterion1() {
  auto start = Clock::now();
  DcpFamily f1 = dcp_family(build(FamilySpec{FamilyKind::T1}));
  DcpFamily f2 = dcp_family(build(FamilySpec{FamilyKind::T2}));
  double elapsed = seconds_since(start);
  std::vector<IntPoly> expected = {
      from_ints({0, 1, -8, 28, -56, 70, -56, 28, -8, 1}),
      from_ints({0, 0, -4, 15, -16, -5, 20, -11, 0, 1}),
      from_ints({0, 0, 0, -2, 3, 3, -5, 0, 0, 1}),
      from_ints({0, 0, 0, 0, 0, -1, 0, 0, 0, 1}),
      IntPoly::monomial(9)};
  bool pass = f1.delta == 4 && f1.polys == expected && f1 == f2 && elapsed < 1.0;
  computed_families.push_back(f1);
  computed_families.push_back(f2);
  std::ostringstream d;
  d << "five polynomials exact, families equal, " << static_cast<int>(elapsed * 1000) << " ms";
  report(1, "order-9 example pair golden family", pass, d.str());
}

// --- criterion 2 -----------------------------------------------------------

void criterion2() {
  bool pass = true;
  std::ostringstream d;
  for (int n = 4; n <= 8; ++n)
    if (!dcp_census(n).pairs.empty()) pass = false;
  d << "n=4..8: 0 pairs";

  CensusResult nine = dcp_census(9);
  std::set<std::string> found9, expect9 = {canonical_code(build(FamilySpec{FamilyKind::T1})).bytes,
                                           canonical_code(build(FamilySpec{FamilyKind::T2})).bytes};
  if (nine.pairs.size() == 1) found9 = {nine.pairs[0].code1.bytes, nine.pairs[0].code2.bytes};
  if (nine.pairs.size() != 1 || found9 != expect9) pass = false;
  d << "; n=9: " << nine.pairs.size() << " (example pair)";

  CensusResult ten = dcp_census(10);
  std::set<std::string> found10, expect10 = {
      canonical_code(build(FamilySpec{FamilyKind::N10Pair, 0, 1})).bytes,
      canonical_code(build(FamilySpec{FamilyKind::N10Pair, 0, 2})).bytes};
  if (ten.pairs.size() == 1) found10 = {ten.pairs[0].code1.bytes, ten.pairs[0].code2.bytes};
  if (ten.pairs.size() != 1 || found10 != expect10) pass = false;
  d << "; n=10: " << ten.pairs.size() << " (drawn pair)";

  auto start = Clock::now();
  CensusResult eleven = dcp_census(11, 1);
  double elapsed = seconds_since(start);
  if (eleven.pairs.size() != 6) pass = false;
  // The one drawn order-11 pair must be among the six.
  std::set<std::string> shown = {
      canonical_code(build(FamilySpec{FamilyKind::N11PairShown, 0, 1})).bytes,
      canonical_code(build(FamilySpec{FamilyKind::N11PairShown, 0, 2})).bytes};
  bool has_shown = false;
  for (const CensusPair& p : eleven.pairs)
    if (std::set<std::string>{p.code1.bytes, p.code2.bytes} == shown) has_shown = true;
  if (!has_shown) pass = false;
  if (elapsed >= 120.0) pass = false;
  d << "; n=11: " << eleven.pairs.size() << " pairs incl. drawn, "
    << static_cast<int>(elapsed * 1000) << " ms single-threaded";

  // Post-census sanity on every pair found at n=9..11.
  std::vector<CensusResult> all = {nine, ten, eleven};
  for (const CensusResult& r : all)
    for (const CensusPair& p : r.pairs) {
      Tree a = tree_from_code(p.code1), b = tree_from_code(p.code2);
      if (degree_sequence(a.graph()) != degree_sequence(b.graph())) pass = false;
      if (p.fp1.adj_charpoly != p.fp2.adj_charpoly) pass = false;
      for (int j = 1; j <= 4; ++j)
        if (path_count_oracle(a, j) != path_count_oracle(b, j)) pass = false;
      if (r.order == 9 && path_count_oracle(a, 5) == path_count_oracle(b, 5)) pass = false;
    }
  report(2, "census reproduction", pass, d.str());
}

// --- criterion 3 -----------------------------------------------------------

void criterion3() {
  bool pass = true;
  int polys = 0;
  std::vector<Tree> trees = generate_trees(9);
  if (trees.size() != 47) pass = false;
  for (const Tree& t : trees) {
    int delta = t.graph().max_degree();
    for (int d = 0; d <= delta; ++d) {
      IntPoly via_tree = chi_d_tree(t, d);
      if (via_tree != chi_d_contraction(t.graph(), d)) pass = false;
      if (via_tree != interpolate_from_counts(t.graph(), d)) pass = false;
      ++polys;
    }
  }
  std::ostringstream d;
  d << "47 trees, " << polys << " polynomials, three engines agree";
  report(3, "oracle equivalence on all order-9 trees", pass, d.str());
}

// --- criterion 4 -----------------------------------------------------------

void criterion4() {
  bool pass = true;
  // Connected triangle-free graphs on up to 7 vertices; class counts frozen
  // from an independent implementation.
  const size_t expected_classes[] = {0, 1, 1, 1, 3, 6, 19, 59};
  size_t total = 0;
  for (int n = 1; n <= 7; ++n) {
    auto classes =
        graph_classes(n, [](const Graph& g) { return g.is_connected() && is_triangle_free(g); });
    if (classes.size() != expected_classes[n]) pass = false;
    for (const Graph& g : classes) {
      DcpFamily fam = dcp_family(g);
      computed_families.push_back(fam);
      if (reconstruct_degree_sequence(fam).to_sequence() != degree_sequence(g)) pass = false;
      ++total;
    }
  }
  size_t tree_total = 0;
  for (int n = 1; n <= 10; ++n)
    for (const Tree& t : generate_trees(n)) {
      DcpFamily fam = dcp_family(t);
      computed_families.push_back(fam);
      if (reconstruct_degree_sequence(fam).to_sequence() != degree_sequence(t.graph())) pass = false;
      ++tree_total;
    }
  std::ostringstream d;
  d << total << " triangle-free classes (n<=7) and " << tree_total << " trees (n<=10) round-trip";
  report(4, "degree-sequence reconstruction", pass, d.str());
}

// --- criterion 5 -----------------------------------------------------------

void criterion5() {
  // Families from criteria 1 and 4 were collected directly; the census and
  // oracle scopes of criteria 2 and 3 are covered by sweeping every tree of
  // order 4..11.
  bool pass = true;
  size_t count = computed_families.size();
  for (const DcpFamily& fam : computed_families)
    if (!degree_bound_ok(fam)) pass = false;
  for (int n = 4; n <= 11; ++n)
    for (const Tree& t : generate_trees(n)) {
      DcpFamily fam = dcp_family(t);
      if (!degree_bound_ok(fam)) pass = false;
      ++count;
    }
  std::ostringstream d;
  d << count << " families, deg(k^n - chi_d) <= n-d-1 throughout";
  report(5, "degree bound invariant", pass, d.str());
}

// --- criterion 6 -----------------------------------------------------------

void criterion6() {
  bool pass = true;
  for (int n = 2; n <= 10; ++n)
    for (const Tree& t : generate_trees(n)) {
      CArrays c = extract_c_arrays(dcp_family(t));
      PathCounts formula = path_counts_formula(t, c);
      for (int j = 1; j <= 4; ++j)
        if (formula.by_length.at(j) != path_count_oracle(t, j)) pass = false;
      if (z2_from_dcp(t, c) != zagreb(t.graph()).z2) pass = false;
    }
  Tree t1 = build(FamilySpec{FamilyKind::T1}), t2 = build(FamilySpec{FamilyKind::T2});
  if (path_count_oracle(t1, 5) != 5 || path_count_oracle(t2, 5) != 7) pass = false;
  if (zagreb(build(FamilySpec{FamilyKind::LeftZagrebCaterpillar}).graph()).z2 != 18) pass = false;
  if (zagreb(build(FamilySpec{FamilyKind::RightZagrebCaterpillar}).graph()).z2 != 19) pass = false;
  report(6, "path counts, N(P5) sharpness, Zagreb examples", pass,
         "formulas match oracles on all trees n<=10; N(P5)=5 vs 7; Z2=18/19");
}

// --- criterion 7 -----------------------------------------------------------

void criterion7() {
  bool pass = true;
  for (int a = 1; a <= 5; ++a) {
    CoeffArray x = c_r_le_d(build(FamilySpec{FamilyKind::X, a}), 2);
    CoeffArray y = c_r_le_d(build(FamilySpec{FamilyKind::Y, a}), 2);
    for (int r = 0; r < static_cast<int>(x.size()); ++r) {
      if (c_r_le2_closed_form(a, r) != x[static_cast<size_t>(r)]) pass = false;
      if (c_r_le2_closed_form(a, r) != y[static_cast<size_t>(r)]) pass = false;
    }
  }
  for (int a = 1; a <= 4; ++a) {
    Tree x = build(FamilySpec{FamilyKind::X, a}), y = build(FamilySpec{FamilyKind::Y, a});
    if (dcp_family(x) != dcp_family(y)) pass = false;
    if (char_poly(x.graph(), MatrixKind::adjacency) != char_poly(y.graph(), MatrixKind::adjacency))
      pass = false;
  }
  for (int b = 1; b <= 4; ++b) {
    Tree x = build(FamilySpec{FamilyKind::Xtilde, b}), y = build(FamilySpec{FamilyKind::Ytilde, b});
    if (dcp_family(x) != dcp_family(y)) pass = false;
    if (char_poly(x.graph(), MatrixKind::adjacency) != char_poly(y.graph(), MatrixKind::adjacency))
      pass = false;
  }
  Tree t1 = build(FamilySpec{FamilyKind::T1}), t2 = build(FamilySpec{FamilyKind::T2});
  if (char_poly(t1.graph(), MatrixKind::adjacency) != char_poly(t2.graph(), MatrixKind::adjacency))
    pass = false;
  report(7, "infinite-family suite", pass,
         "closed form a=1..5, family equality a,b=1..4, cospectrality of all pairs");
}

// --- criterion 8 -----------------------------------------------------------

void criterion8() {
  bool pass = true;
  Tree t1 = build(FamilySpec{FamilyKind::T1}), t2 = build(FamilySpec{FamilyKind::T2});
  Tree t3 = build(FamilySpec{FamilyKind::T3}), t4 = build(FamilySpec{FamilyKind::T4});
  Tree t5 = build(FamilySpec{FamilyKind::T5}), t6 = build(FamilySpec{FamilyKind::T6});
  ComparisonTable table =
      comparison_table({{t1, t2}, {t3, t4}, {t5, t6}}, {"(T1,T2)", "(T3,T4)", "(T5,T6)"});
  std::vector<std::array<bool, 6>> expected = {{true, false, false, true, false, false},
                                               {false, true, false, true, false, true},
                                               {false, true, true, true, true, true}};
  if (table.cells != expected) pass = false;

  // Byte-for-byte display checks after canonical formatting.
  auto js = [](const IntPoly& p, const std::string& v) { return p.to_json(v); };
  if (js(independence_polynomial(t1.graph()), "x") !=
      "{\"var\":\"x\",\"coeffs\":[1,9,28,39,26,8,1]}")
    pass = false;
  if (js(independence_polynomial(t2.graph()), "x") !=
      "{\"var\":\"x\",\"coeffs\":[1,9,28,39,26,9,1]}")
    pass = false;
  if (js(char_poly(t1.graph(), MatrixKind::laplacian), "x") !=
      "{\"var\":\"x\",\"coeffs\":[0,9,-90,329,-592,584,-326,101,-16,1]}")
    pass = false;
  if (js(char_poly(t2.graph(), MatrixKind::laplacian), "x") !=
      "{\"var\":\"x\",\"coeffs\":[0,9,-88,325,-590,584,-326,101,-16,1]}")
    pass = false;
  if (js(chi_d_tree(t3, 2), "k") != "{\"var\":\"k\",\"coeffs\":[0,0,0,2,-6,2,4,3,-6,0,0,1]}")
    pass = false;
  if (js(chi_d_tree(t4, 2), "k") != "{\"var\":\"k\",\"coeffs\":[0,0,2,-3,-3,3,3,3,-6,0,0,1]}")
    pass = false;

  if (dpt_polynomial(t3.graph()) != dpt_polynomial(t4.graph())) pass = false;
  if (gdp(t5.graph()) != gdp(t6.graph())) pass = false;
  if (metric_invariants(t1.graph()) != std::pair<int, int>{5, 3}) pass = false;
  if (metric_invariants(t2.graph()) != std::pair<int, int>{4, 2}) pass = false;
  report(8, "comparison-table reproduction", pass,
         "3x6 matrix, six displayed polynomials byte-exact, DPT/GDP pair equalities, metrics");
}

// --- criterion 9 -----------------------------------------------------------

void criterion9() {
  bool pass = true;
  // Basis round-trip on random nonnegative arrays.
  std::mt19937_64 rng(20240915);
  std::uniform_int_distribution<long> coeff(0, 40);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 12);
    CoeffArray c(static_cast<size_t>(n));
    for (auto& v : c) v = coeff(rng);
    if (tree_basis_coeffs(tree_basis_expand(c, n), n) != c) pass = false;
  }
  // Matching polynomial vs adjacency characteristic polynomial.
  for (int n = 1; n <= 10; ++n)
    for (const Tree& t : generate_trees(n))
      if (matching_polynomial(t) != char_poly(t.graph(), MatrixKind::adjacency)) pass = false;
  if (matching_polynomial(cycle_graph(4)) == char_poly(cycle_graph(4), MatrixKind::adjacency))
    pass = false;
  // DPT specialization and GDP normalization on assorted graphs.
  std::vector<Graph> graphs = {path_tree(6).graph(), star_tree(4).graph(), cycle_graph(5),
                               complete_graph(4),
                               Graph(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {4, 5}})};
  for (const Graph& g : graphs) {
    if (dpt_polynomial(g).substitute_equal() != chromatic_poly(Multigraph::from_graph(g)))
      pass = false;
    if (gdp(g).eval({1, 1, 1}) != big_pow(2, static_cast<unsigned long>(g.vertex_count())))
      pass = false;
  }
  // Laplacian structure on trees.
  for (const Tree& t : generate_trees(9)) {
    IntPoly lap = char_poly(t.graph(), MatrixKind::laplacian);
    if (lap.coeff(0) != 0 || abs(lap.coeff(1)) != t.vertex_count()) pass = false;
  }
  report(9, "property suites", pass,
         "basis round-trip, matching=charpoly (trees) with C4 counterexample, DPT y:=x, "
         "GDP(1,1,1)=2^n, Laplacian structure");
}

}  // namespace

int main() {
  auto start = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                              : "CRITERIA FAILED: " + std::to_string(failures))
            << " (" << static_cast<int>(seconds_since(start)) << " s total)" << std::endl;
  return failures == 0 ? 0 : 1;
}
