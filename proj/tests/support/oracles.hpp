#pragma once

// Test-only reference implementations, kept independent of the library
// code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "dcp/bigint.hpp"
#include "dcp/graph.hpp"

namespace testsupport {

using dcp::BigInt;
using dcp::Edge;
using dcp::Graph;
using dcp::Tree;

// c_{r,<=d}(T) by enumerating all 2^{n-1} edge subsets.
inline std::vector<BigInt> c_r_le_d_enum(const Tree& t, int d) {
  const Graph& g = t.graph();
  int n = g.vertex_count();
  int m = g.edge_count();
  std::vector<BigInt> out(static_cast<size_t>(n), BigInt(0));
  std::vector<int> deg(static_cast<size_t>(n));
  for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    int r = 0, dd = 0;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) {
        const auto& [u, v] = g.edges()[static_cast<size_t>(i)];
        dd = std::max({dd, ++deg[static_cast<size_t>(u)], ++deg[static_cast<size_t>(v)]});
        ++r;
      }
    if (dd <= d) out[static_cast<size_t>(r)] += 1;
  }
  return out;
}

// Number of r-edge matchings, by subset enumeration with a disjointness
// test (distinct from the library's recursive counter).
inline std::vector<BigInt> matching_counts_enum(const Graph& g) {
  int n = g.vertex_count();
  int m = g.edge_count();
  std::vector<BigInt> out(static_cast<size_t>(n) / 2 + 1, BigInt(0));
  for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
    uint32_t used = 0;
    bool ok = true;
    int r = 0;
    for (int i = 0; i < m && ok; ++i)
      if (mask >> i & 1) {
        const auto& [u, v] = g.edges()[static_cast<size_t>(i)];
        uint32_t bits = (uint32_t{1} << u) | (uint32_t{1} << v);
        if (used & bits) ok = false;
        used |= bits;
        ++r;
      }
    if (ok) out[static_cast<size_t>(r)] += 1;
  }
  return out;
}

// Definitional (k,d)-coloring count: iterate every map V -> [k].
inline BigInt count_colorings_raw(const Graph& g, int k, int d) {
  int n = g.vertex_count();
  if (n == 0) return 1;
  if (k == 0) return 0;
  std::vector<int> color(static_cast<size_t>(n), 0);
  BigInt count = 0;
  while (true) {
    bool good = true;
    for (int v = 0; v < n && good; ++v) {
      int mono = 0;
      for (int w : g.neighbors(v))
        if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) ++mono;
      if (mono > d) good = false;
    }
    if (good) count += 1;
    int i = 0;
    while (i < n && ++color[static_cast<size_t>(i)] == k) color[static_cast<size_t>(i++)] = 0;
    if (i == n) break;
  }
  return count;
}

// Apply a vertex permutation to a tree.
inline Tree permute_tree(const Tree& t, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : t.graph().edges())
    edges.emplace_back(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
  return Tree(t.graph().vertex_count(), std::move(edges));
}

// Exact isomorphism test by trying every vertex permutation (small n).
inline bool isomorphic_brute_force(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  int n = a.vertex_count();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (a.degree(v) != b.degree(perm[static_cast<size_t>(v)])) ok = false;
    if (!ok) continue;
    for (const auto& [u, v] : a.edges()) {
      if (!b.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Decode a Pruefer sequence over 0..n-1 into a labeled tree.
inline Tree pruefer_decode(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(static_cast<size_t>(n), 1);
  for (int x : seq) ++deg[static_cast<size_t>(x)];
  std::vector<Edge> edges;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<size_t>(v)] == 1) leaves.insert(v);
  for (int x : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    if (--deg[static_cast<size_t>(x)] == 1) leaves.insert(x);
  }
  int a = *leaves.begin(), b = *leaves.rbegin();
  edges.emplace_back(std::min(a, b), std::max(a, b));
  return Tree(n, std::move(edges));
}

// Convenience constructors.
inline Tree path_tree(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Tree(n, std::move(e));
}

inline Tree star_tree(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Tree(leaves + 1, std::move(e));
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

inline Graph empty_graph(int n) { return Graph(n, {}); }

// All labeled graphs on n vertices that pass the filter, reduced to
// isomorphism classes by exact permutation testing with a cheap invariant
// prefilter. Suitable for n <= 7.
template <typename Filter>
inline std::vector<Graph> graph_classes(int n, Filter&& keep) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  int m = static_cast<int>(pairs.size());
  std::map<std::string, std::vector<Graph>> by_invariant;
  std::vector<Graph> classes;
  for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) edges.push_back(pairs[static_cast<size_t>(i)]);
    Graph g(n, std::move(edges));
    if (!keep(g)) continue;
    // Invariant: degree sequence plus sorted multiset of neighbor degrees.
    std::string key;
    {
      std::vector<std::string> parts;
      for (int v = 0; v < n; ++v) {
        std::vector<int> nd;
        for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        std::string p = std::to_string(g.degree(v)) + ":";
        for (int x : nd) p += std::to_string(x) + ",";
        parts.push_back(std::move(p));
      }
      std::sort(parts.begin(), parts.end());
      for (const auto& p : parts) key += p + "|";
    }
    auto& bucket = by_invariant[key];
    bool found = false;
    for (const Graph& rep : bucket)
      if (isomorphic_brute_force(rep, g)) {
        found = true;
        break;
      }
    if (!found) {
      bucket.push_back(g);
      classes.push_back(g);
    }
  }
  return classes;
}

inline bool is_triangle_free(const Graph& g) {
  for (const auto& [u, v] : g.edges())
    for (int w : g.neighbors(u))
      if (w != v && g.has_edge(w, v)) return false;
  return true;
}

}  // namespace testsupport
