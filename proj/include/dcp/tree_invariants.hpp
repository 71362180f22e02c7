#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dcp/bigint.hpp"
#include "dcp/caps.hpp"
#include "dcp/dcp.hpp"
#include "dcp/errors.hpp"
#include "dcp/graph.hpp"
#include "dcp/poly.hpp"

namespace dcp {

// N(P_j, T) for j = 1..J.
struct PathCounts {
  std::map<int, BigInt> by_length;
  bool operator==(const PathCounts&) const = default;
};

namespace detail {

// Ordered simple paths with j vertices starting at `v`.
inline long count_paths_from(const Graph& g, int v, int j, uint32_t visited) {
  if (j == 1) return 1;
  long total = 0;
  for (int w : g.neighbors(v))
    if (!(visited >> w & 1))
      total += count_paths_from(g, w, j - 1, visited | (uint32_t{1} << w));
  return total;
}

}  // namespace detail

// Number of subgraphs isomorphic to the j-vertex path, by direct
// enumeration: ordered paths counted from both ends, halved.
inline BigInt path_count_oracle(const Tree& t, int j) {
  const Graph& g = t.graph();
  if (g.vertex_count() > 32) throw ResourceLimitError("path oracle cap: n <= 32");
  if (j < 1 || j > g.vertex_count()) {
    if (j >= 1) return 0;
    throw std::invalid_argument("path length must be at least 1");
  }
  if (j == 1) return g.vertex_count();
  long ordered = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    ordered += detail::count_paths_from(g, v, j, uint32_t{1} << v);
  return BigInt(ordered / 2);
}

inline PathCounts path_counts_oracle(const Tree& t, int max_j = 6) {
  PathCounts out;
  for (int j = 1; j <= max_j; ++j) out.by_length[j] = path_count_oracle(t, j);
  return out;
}

// Path counts for j <= 4 from the degree sequence and the extracted
// coefficient arrays:
//   N(P1) = n, N(P2) = n-1, N(P3) = sum_v C(d_v,2),
//   N(P4) = sum_x C(d_x,2)(n+1-d_x) - c_{3,2} - 2 c_{2,2}.
inline PathCounts path_counts_formula(const Tree& t, const CArrays& c) {
  const Graph& g = t.graph();
  int n = g.vertex_count();
  PathCounts out;
  out.by_length[1] = n;
  out.by_length[2] = n - 1;
  BigInt p3 = 0, weighted = 0;
  for (int v = 0; v < n; ++v) {
    BigInt choose2 = binomial(g.degree(v), 2);
    p3 += choose2;
    weighted += choose2 * (n + 1 - g.degree(v));
  }
  out.by_length[3] = p3;
  out.by_length[4] = weighted - c.c_exact(3, 2) - 2 * c.c_exact(2, 2);
  return out;
}

// Vertex-disjoint (P3, P2) pairs, by direct enumeration over P3 centers.
inline BigInt disjoint_p3_p2_count(const Tree& t) {
  const Graph& g = t.graph();
  BigInt total = 0;
  for (int x = 0; x < g.vertex_count(); ++x) {
    const auto& nb = g.neighbors(x);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int y = nb[i], z = nb[j];
        for (const auto& [u, v] : g.edges())
          if (u != x && u != y && u != z && v != x && v != y && v != z) total += 1;
      }
  }
  return total;
}

// First and second Zagreb indices. z1 is computed both as the vertex sum of
// squared degrees and as the edge sum of endpoint degrees; the two must
// agree.
struct ZagrebPair {
  BigInt z1;
  BigInt z2;
  bool operator==(const ZagrebPair&) const = default;
};

inline ZagrebPair zagreb(const Graph& g) {
  BigInt z1_vertex = 0, z1_edge = 0, z2 = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    z1_vertex += BigInt(g.degree(v)) * g.degree(v);
  for (const auto& [u, v] : g.edges()) {
    z1_edge += g.degree(u) + g.degree(v);
    z2 += BigInt(g.degree(u)) * g.degree(v);
  }
  if (z1_vertex != z1_edge)
    throw std::logic_error("internal inconsistency: Zagreb index forms disagree");
  return ZagrebPair{z1_vertex, z2};
}

// Z2 recovered from the family data alone:
// sum_x C(d_x,2)(n+1-d_x) + (n-1) - c_{3,2}.
inline BigInt z2_from_dcp(const Tree& t, const CArrays& c) {
  const Graph& g = t.graph();
  int n = g.vertex_count();
  BigInt weighted = 0;
  for (int v = 0; v < n; ++v) weighted += binomial(g.degree(v), 2) * (n + 1 - g.degree(v));
  return weighted + (n - 1) - c.c_exact(3, 2);
}

namespace detail {

// r-matching counts by explicit enumeration over edges (include/exclude
// with a used-vertex mask).
inline void matching_counts_rec(const std::vector<Edge>& edges, size_t i, uint32_t used, int size,
                                std::vector<BigInt>& out) {
  if (static_cast<size_t>(size) < out.size()) out[static_cast<size_t>(size)] += 1;
  for (size_t j = i; j < edges.size(); ++j) {
    uint32_t mask = (uint32_t{1} << edges[j].first) | (uint32_t{1} << edges[j].second);
    if (used & mask) continue;
    matching_counts_rec(edges, j + 1, used | mask, size + 1, out);
  }
}

}  // namespace detail

// mu(x) = sum_r (-1)^r m_r x^{n-2r}. For trees the r-matching counts are
// c_{r,<=1}; general graphs fall back to matching enumeration (n <= 12).
inline IntPoly matching_polynomial(const Graph& g) {
  int n = g.vertex_count();
  std::vector<BigInt> m;
  if (g.is_tree()) {
    m = c_r_le_d(Tree(g), 1);
  } else {
    int cap = caps::effective(caps::kMatchingEnumVerticesMax);
    if (n > cap)
      throw ResourceLimitError("matching enumeration cap: n <= " + std::to_string(cap));
    m.assign(static_cast<size_t>(n) / 2 + 1, BigInt(0));
    detail::matching_counts_rec(g.edges(), 0, 0, 0, m);
  }
  std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1, BigInt(0));
  for (size_t r = 0; r < m.size(); ++r) {
    if (2 * r > static_cast<size_t>(n)) break;
    coeffs[static_cast<size_t>(n) - 2 * r] = (r % 2 == 0) ? m[r] : -m[r];
  }
  return IntPoly(std::move(coeffs));
}

inline IntPoly matching_polynomial(const Tree& t) { return matching_polynomial(t.graph()); }

}  // namespace dcp
