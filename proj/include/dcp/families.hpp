#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcp/bigint.hpp"
#include "dcp/graph.hpp"

namespace dcp {

// Named constructions. C is the order-11 base caterpillar with spine
// v1-u-z1-z2-w-t1-t2-t3-t4 labeled 0..8, a leaf 9 at u and a leaf 10 at w.
// X/Y attach a path with `parameter` new vertices at z1 (label 2) resp. t1
// (label 5); Xtilde/Ytilde attach that many leaves instead. T1..T6 are the
// fixed example trees; the pair kinds carry two members selected by
// `member`.
enum class FamilyKind {
  C,
  X,
  Y,
  Xtilde,
  Ytilde,
  T1,
  T2,
  T3,
  T4,
  T5,
  T6,
  LeftZagrebCaterpillar,
  RightZagrebCaterpillar,
  N10Pair,
  N11PairShown,
};

struct FamilySpec {
  FamilyKind kind;
  int parameter = 0;  // a or b for X/Y/Xtilde/Ytilde; ignored otherwise
  int member = 1;     // 1 or 2 for the pair kinds; ignored otherwise
};

namespace detail {

inline std::vector<Edge> base_caterpillar_edges() {
  return {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 9}, {4, 10}};
}

}  // namespace detail

inline Tree build(const FamilySpec& spec) {
  using detail::base_caterpillar_edges;
  auto need_param = [&spec]() {
    if (spec.parameter < 1) throw std::invalid_argument("family parameter must be at least 1");
  };
  auto need_member = [&spec]() {
    if (spec.member != 1 && spec.member != 2)
      throw std::invalid_argument("pair member must be 1 or 2");
  };
  switch (spec.kind) {
    case FamilyKind::C:
      return Tree(11, base_caterpillar_edges());
    case FamilyKind::X: {
      need_param();
      auto e = base_caterpillar_edges();
      e.emplace_back(2, 11);
      for (int i = 1; i < spec.parameter; ++i) e.emplace_back(10 + i, 11 + i);
      return Tree(11 + spec.parameter, std::move(e));
    }
    case FamilyKind::Y: {
      need_param();
      auto e = base_caterpillar_edges();
      e.emplace_back(5, 11);
      for (int i = 1; i < spec.parameter; ++i) e.emplace_back(10 + i, 11 + i);
      return Tree(11 + spec.parameter, std::move(e));
    }
    case FamilyKind::Xtilde: {
      need_param();
      auto e = base_caterpillar_edges();
      for (int i = 0; i < spec.parameter; ++i) e.emplace_back(2, 11 + i);
      return Tree(11 + spec.parameter, std::move(e));
    }
    case FamilyKind::Ytilde: {
      need_param();
      auto e = base_caterpillar_edges();
      for (int i = 0; i < spec.parameter; ++i) e.emplace_back(5, 11 + i);
      return Tree(11 + spec.parameter, std::move(e));
    }
    case FamilyKind::T1:
      return Tree(9, {{2, 3}, {1, 2}, {0, 1}, {0, 4}, {4, 6}, {0, 7}, {0, 8}, {4, 5}});
    case FamilyKind::T2:
      return Tree(9, {{7, 8}, {0, 7}, {0, 1}, {1, 2}, {0, 5}, {5, 6}, {1, 3}, {1, 4}});
    case FamilyKind::T3:
      return Tree(11, {{7, 8}, {6, 7}, {0, 6}, {0, 1}, {1, 2}, {2, 3}, {0, 9}, {0, 10}, {1, 5}, {2, 4}});
    case FamilyKind::T4:
      return Tree(11, {{5, 7}, {0, 5}, {0, 1}, {1, 2}, {2, 3}, {5, 6}, {0, 10}, {0, 8}, {8, 9}, {2, 4}});
    case FamilyKind::T5:
      return Tree(17, {{1, 2}, {0, 1}, {0, 10}, {10, 11}, {2, 3},   {2, 4},   {2, 5},   {1, 6}, {1, 7},
                       {1, 8}, {1, 9}, {0, 16}, {10, 14}, {10, 15}, {11, 12}, {11, 13}});
    case FamilyKind::T6:
      return Tree(17, {{1, 2}, {0, 1}, {0, 7},  {7, 8},  {2, 3},  {2, 4},  {2, 5},  {1, 6},
                       {0, 15}, {0, 16}, {7, 11}, {7, 12}, {7, 13}, {7, 14}, {8, 9}, {8, 10}});
    case FamilyKind::LeftZagrebCaterpillar:
      return Tree(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}});
    case FamilyKind::RightZagrebCaterpillar:
      return Tree(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
    case FamilyKind::N10Pair:
      need_member();
      if (spec.member == 1)
        return Tree(10, {{7, 8}, {6, 7}, {0, 6}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 9}, {1, 5}});
      return Tree(10, {{8, 9}, {7, 8}, {0, 7}, {0, 1}, {1, 2}, {2, 3}, {1, 5}, {5, 6}, {2, 4}});
    case FamilyKind::N11PairShown:
      need_member();
      if (spec.member == 1)
        return Tree(11, {{1, 2}, {0, 1}, {0, 7}, {7, 8}, {2, 3}, {2, 4}, {1, 5}, {1, 6}, {7, 10}, {8, 9}});
      return Tree(11, {{1, 2}, {0, 1}, {0, 5}, {5, 6}, {2, 3}, {2, 4}, {0, 10}, {5, 8}, {5, 9}, {6, 7}});
  }
  throw std::invalid_argument("unknown family kind");
}

// Linear-forest subset counts of X_a (equal for Y_a), closed form by
// inclusion-exclusion over the three degree-3 vertices:
// C(a+10,r) - 3 C(a+7,r-3) + C(a+5,r-5) + 2 C(a+4,r-6) - C(a+2,r-8).
inline BigInt c_r_le2_closed_form(int a, int r) {
  if (a < 1) throw std::invalid_argument("family parameter must be at least 1");
  if (r < 0) return 0;
  return binomial(a + 10, r) - 3 * binomial(a + 7, r - 3) + binomial(a + 5, r - 5) +
         2 * binomial(a + 4, r - 6) - binomial(a + 2, r - 8);
}

// c_{r,<=d} for the caterpillar variants Xtilde_b / Ytilde_b, valid for
// d >= 3 where only the attachment vertex (degree b+2) can violate the
// bound: sum over the number s of chosen edges at that vertex.
inline BigInt c_r_le_d_tilde_closed_form(int b, int d, int r) {
  if (b < 1) throw std::invalid_argument("family parameter must be at least 1");
  if (d < 3)
    throw std::invalid_argument("closed form requires d >= 3 (degree-3 vertices must be unconstrained)");
  if (r < 0) return 0;
  BigInt total = 0;
  int smax = std::min(d, b + 2);
  for (int s = 0; s <= smax; ++s) total += binomial(b + 2, s) * binomial(8, r - s);
  return total;
}

inline std::optional<FamilyKind> family_kind_from_string(const std::string& s) {
  if (s == "C") return FamilyKind::C;
  if (s == "X") return FamilyKind::X;
  if (s == "Y") return FamilyKind::Y;
  if (s == "Xtilde") return FamilyKind::Xtilde;
  if (s == "Ytilde") return FamilyKind::Ytilde;
  if (s == "T1") return FamilyKind::T1;
  if (s == "T2") return FamilyKind::T2;
  if (s == "T3") return FamilyKind::T3;
  if (s == "T4") return FamilyKind::T4;
  if (s == "T5") return FamilyKind::T5;
  if (s == "T6") return FamilyKind::T6;
  if (s == "left_zagreb_caterpillar") return FamilyKind::LeftZagrebCaterpillar;
  if (s == "right_zagreb_caterpillar") return FamilyKind::RightZagrebCaterpillar;
  if (s == "n10_pair") return FamilyKind::N10Pair;
  if (s == "n11_pair_shown") return FamilyKind::N11PairShown;
  return std::nullopt;
}

}  // namespace dcp
