#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dcp/bigint.hpp"
#include "dcp/caps.hpp"
#include "dcp/chromatic.hpp"
#include "dcp/errors.hpp"
#include "dcp/graph.hpp"
#include "dcp/poly.hpp"

namespace dcp {

// The full family {chi_d : d >= 0}, truncated at the stabilization index
// delta (the least d with chi_d = k^n, which equals the maximum degree).
// Queries beyond delta return k^n.
struct DcpFamily {
  int n = 0;
  int delta = 0;
  std::vector<IntPoly> polys;  // d = 0..delta

  const IntPoly& chi(int d) const {
    return polys[static_cast<size_t>(std::min(d, delta))];
  }

  bool operator==(const DcpFamily&) const = default;
};

namespace detail {

// One pass over all edge subsets A: bucket[delta] accumulates
// chi_0(G/A;k) over subsets with max induced degree exactly delta.
// Contractions whose quotient acquires a loop contribute zero and are
// skipped. The chromatic memo is shared across the sweep.
inline std::vector<IntPoly> contraction_buckets(const Graph& g) {
  int n = g.vertex_count();
  int m = g.edge_count();
  if (m > caps::kContractionEdgesMax)
    throw ResourceLimitError("contraction sweep cap: |E| <= " +
                             std::to_string(caps::kContractionEdgesMax));
  std::vector<IntPoly> buckets(static_cast<size_t>(g.max_degree()) + 1);
  ChromaticMemo memo;
  std::vector<int> deg(static_cast<size_t>(n));
  std::vector<int> root(static_cast<size_t>(n));
  const auto& edges = g.edges();
  for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    for (int i = 0; i < n; ++i) root[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
      while (root[static_cast<size_t>(x)] != x) {
        root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
        x = root[static_cast<size_t>(x)];
      }
      return x;
    };
    int delta = 0;
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      const auto& [u, v] = edges[static_cast<size_t>(i)];
      delta = std::max({delta, ++deg[static_cast<size_t>(u)], ++deg[static_cast<size_t>(v)]});
      root[static_cast<size_t>(find(u))] = find(v);
    }
    // Build the quotient: skip if any surviving edge becomes a loop.
    std::vector<int> label(static_cast<size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
      int r = find(v);
      if (label[static_cast<size_t>(r)] < 0) label[static_cast<size_t>(r)] = next++;
    }
    SimpleGraph q;
    q.n = next;
    bool loop = false;
    for (int i = 0; i < m && !loop; ++i) {
      if (mask >> i & 1) continue;
      int a = label[static_cast<size_t>(find(edges[static_cast<size_t>(i)].first))];
      int b = label[static_cast<size_t>(find(edges[static_cast<size_t>(i)].second))];
      if (a == b) {
        loop = true;
        break;
      }
      if (a > b) std::swap(a, b);
      q.edges.emplace_back(a, b);
    }
    if (loop) continue;
    std::sort(q.edges.begin(), q.edges.end());
    q.edges.erase(std::unique(q.edges.begin(), q.edges.end()), q.edges.end());
    buckets[static_cast<size_t>(delta)] += chromatic_simple(q, &memo);
  }
  return buckets;
}

}  // namespace detail

// chi_d by the contraction formula: sum of chi_0(G/A;k) over edge subsets A
// with max induced degree at most d.
inline IntPoly chi_d_contraction(const Graph& g, int d) {
  if (d < 0) throw std::invalid_argument("defect bound must be nonnegative");
  auto buckets = detail::contraction_buckets(g);
  IntPoly acc;
  for (int delta = 0; delta <= d && delta < static_cast<int>(buckets.size()); ++delta)
    acc += buckets[static_cast<size_t>(delta)];
  return acc;
}

// c_{r,<=d}(T): number of r-edge subsets whose induced forest has maximum
// degree at most d. Dynamic program over the rooted tree; per vertex the
// state is the number of chosen edges incident to it so far.
inline CoeffArray c_r_le_d(const Tree& t, int d) {
  const Graph& g = t.graph();
  int n = g.vertex_count();
  int cap = caps::effective(caps::kTreeDpVerticesMax);
  if (n > cap) throw ResourceLimitError("tree DP cap: n <= " + std::to_string(cap));
  if (d < 0) throw std::invalid_argument("defect bound must be nonnegative");

  // Rooted orientation with a postorder traversal.
  std::vector<int> parent(static_cast<size_t>(n), -1), order;
  order.reserve(static_cast<size_t>(n));
  {
    std::vector<int> stack = {0};
    std::vector<bool> seen(static_cast<size_t>(n), false);
    seen[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          parent[static_cast<size_t>(w)] = v;
          stack.push_back(w);
        }
    }
  }

  // g0[v][r] / g1[v][r]: ways to choose r edges inside v's subtree
  // (including the parent edge for g1) with every constraint below v met
  // and v's own incident count within bounds.
  std::vector<std::vector<BigInt>> g0(static_cast<size_t>(n)), g1(static_cast<size_t>(n));
  for (size_t idx = order.size(); idx-- > 0;) {
    int v = order[idx];
    // acc[j][r]: processed children so far, j chosen child edges at v.
    std::vector<std::vector<BigInt>> acc(1, std::vector<BigInt>{BigInt(1)});
    for (int w : g.neighbors(v)) {
      if (w == parent[static_cast<size_t>(v)]) continue;
      const auto& h0 = g0[static_cast<size_t>(w)];
      const auto& h1 = g1[static_cast<size_t>(w)];
      size_t jmax = std::min<size_t>(acc.size() + 1, static_cast<size_t>(d) + 1);
      size_t rmax = acc[0].size() + std::max(h0.size(), h1.size());
      std::vector<std::vector<BigInt>> nxt(jmax, std::vector<BigInt>(rmax, BigInt(0)));
      for (size_t j = 0; j < acc.size(); ++j)
        for (size_t r = 0; r < acc[j].size(); ++r) {
          if (acc[j][r] == 0) continue;
          for (size_t s = 0; s < h0.size(); ++s)
            if (h0[s] != 0) nxt[j][r + s] += acc[j][r] * h0[s];
          if (j + 1 < jmax)
            for (size_t s = 0; s < h1.size(); ++s)
              if (h1[s] != 0) nxt[j + 1][r + s] += acc[j][r] * h1[s];
        }
      acc = std::move(nxt);
    }
    size_t rcap = acc[0].size();
    std::vector<BigInt> v0(rcap, BigInt(0)), v1(rcap + 1, BigInt(0));
    for (size_t j = 0; j < acc.size(); ++j)
      for (size_t r = 0; r < acc[j].size(); ++r) {
        if (acc[j][r] == 0) continue;
        v0[r] += acc[j][r];  // parent edge not chosen: j <= d already
        if (static_cast<int>(j) + 1 <= d) v1[r + 1] += acc[j][r];
      }
    g0[static_cast<size_t>(v)] = std::move(v0);
    g1[static_cast<size_t>(v)] = std::move(v1);
  }

  CoeffArray out(static_cast<size_t>(n), BigInt(0));
  const auto& rootv = g0[static_cast<size_t>(order[0])];
  for (size_t r = 0; r < rootv.size() && r < out.size(); ++r) out[r] = rootv[r];
  return out;
}

// chi_d of a tree through the expansion sum_r c_{r,<=d} k(k-1)^{n-r-1}.
inline IntPoly chi_d_tree(const Tree& t, int d) {
  return tree_basis_expand(c_r_le_d(t, d), t.vertex_count());
}

// Compute chi_d for d = 0,1,2,... until k^n is reached. Trees use the DP
// expansion; general graphs use one contraction sweep shared by all d.
inline DcpFamily dcp_family(const Graph& g) {
  DcpFamily fam;
  fam.n = g.vertex_count();
  IntPoly kn = IntPoly::monomial(fam.n);
  if (g.is_tree()) {
    Tree t(g);
    int delta = g.max_degree();
    for (int d = 0; d <= delta; ++d) fam.polys.push_back(chi_d_tree(t, d));
    fam.delta = delta;
  } else {
    auto buckets = detail::contraction_buckets(g);
    IntPoly acc;
    for (size_t delta = 0; delta < buckets.size(); ++delta) {
      acc += buckets[delta];
      fam.polys.push_back(acc);
    }
    fam.delta = static_cast<int>(buckets.size()) - 1;
  }
  if (fam.polys.back() != kn)
    throw std::logic_error("internal inconsistency: family did not stabilize at k^n");
  return fam;
}

inline DcpFamily dcp_family(const Tree& t) { return dcp_family(t.graph()); }

// Both coefficient arrays recoverable from a tree family: c_{r,<=d} read
// from each chi_d via the tree basis, and c_{r,d} by differencing with
// c_{r,<=-1} = 0.
struct CArrays {
  int n = 0;
  int delta = 0;
  std::vector<CoeffArray> le;  // le[d][r] = c_{r,<=d}, d = 0..delta

  BigInt c_le(int r, int d) const {
    if (r < 0 || r >= n) return 0;
    if (d < 0) return 0;
    if (d > delta) return binomial(n - 1, r);
    return le[static_cast<size_t>(d)][static_cast<size_t>(r)];
  }

  BigInt c_exact(int r, int d) const { return c_le(r, d) - c_le(r, d - 1); }
};

// Valid only for families of trees. The basis spans every polynomial of
// degree <= n vanishing at 0, so non-tree families surface not as a failed
// peel but as impossible subset counts; both are reported as NotInSpanError.
inline CArrays extract_c_arrays(const DcpFamily& fam) {
  CArrays out;
  out.n = fam.n;
  out.delta = fam.delta;
  for (int d = 0; d <= fam.delta; ++d) {
    CoeffArray c = tree_basis_coeffs(fam.polys[static_cast<size_t>(d)], fam.n);
    if (c.empty() || c[0] != 1) throw NotInSpanError("c_0 must be 1 for a tree family");
    for (const BigInt& v : c)
      if (v < 0) throw NotInSpanError("negative subset count: family is not from a tree");
    if (d == fam.delta)
      for (size_t r = 0; r < c.size(); ++r)
        if (c[r] != binomial(fam.n - 1, static_cast<long>(r)))
          throw NotInSpanError("stabilized row is not binomial: family is not from a tree");
    out.le.push_back(std::move(c));
  }
  return out;
}

// Vertex counts by degree, M_r for r = 0..delta.
struct DegreeCensus {
  std::vector<BigInt> counts;

  // Nonincreasing degree sequence.
  std::vector<int> to_sequence() const {
    std::vector<int> seq;
    for (size_t r = counts.size(); r-- > 0;)
      for (BigInt i = 0; i < counts[r]; ++i) seq.push_back(static_cast<int>(r));
    return seq;
  }

  bool operator==(const DegreeCensus&) const = default;
};

// Recover the degree sequence of a triangle-free graph from its family:
// n = deg chi_0, 2m from the k^{n-1} coefficient, then for d = delta..2 the
// coefficient of k^{n-d} in chi_d - chi_{d-1} equals sum_{r>=d} M_r C(r,d),
// solved triangularly; M_1 and M_0 come from the two linear constraints
// sum M_r = n and sum r M_r = 2m. Whether the family really came from a
// triangle-free graph is not decidable from the family itself; outputs are
// validated instead and InconsistentFamilyError is raised on failure.
inline DegreeCensus reconstruct_degree_sequence(const DcpFamily& fam) {
  int n = fam.n;
  if (fam.polys.empty() || fam.polys[0].degree() != n)
    throw InconsistentFamilyError("chi_0 does not have degree n");
  BigInt m = -fam.polys[0].coeff(n - 1);
  if (m < 0) throw InconsistentFamilyError("negative edge count");
  int delta = fam.delta;
  std::vector<BigInt> M(static_cast<size_t>(delta) + 1, BigInt(0));
  if (delta >= 2) {
    for (int d = delta; d >= 2; --d) {
      IntPoly diff = fam.chi(d) - fam.chi(d - 1);
      if (diff.degree() > n - d)
        throw InconsistentFamilyError("chi_d - chi_{d-1} exceeds degree n-d");
      BigInt s = diff.coeff(n - d);
      for (int r = d + 1; r <= delta; ++r) s -= M[static_cast<size_t>(r)] * binomial(r, d);
      if (s < 0) throw InconsistentFamilyError("negative vertex count M_" + std::to_string(d));
      M[static_cast<size_t>(d)] = s;
    }
  } else if (delta == 0 && m != 0) {
    throw InconsistentFamilyError("stabilized at d=0 but edges present");
  }
  BigInt used = 0, deg_used = 0;
  for (int r = 2; r <= delta; ++r) {
    used += M[static_cast<size_t>(r)];
    deg_used += BigInt(r) * M[static_cast<size_t>(r)];
  }
  if (delta >= 1) {
    BigInt m1 = 2 * m - deg_used;
    if (m1 < 0) throw InconsistentFamilyError("negative vertex count M_1");
    M[1] = m1;
    used += m1;
  } else if (m != 0) {
    throw InconsistentFamilyError("edges present with delta = 0");
  }
  BigInt m0 = BigInt(n) - used;
  if (m0 < 0) throw InconsistentFamilyError("negative vertex count M_0");
  M[0] = m0;
  if (delta >= 1 && M[static_cast<size_t>(delta)] == 0)
    throw InconsistentFamilyError("no vertex of maximum degree");
  return DegreeCensus{std::move(M)};
}

}  // namespace dcp
