#pragma once

#include <array>
#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "dcp/bigint.hpp"
#include "dcp/caps.hpp"
#include "dcp/dcp.hpp"
#include "dcp/graph.hpp"
#include "dcp/mpoly.hpp"
#include "dcp/poly.hpp"

namespace dcp {

// Size, boundary edge count d(A) and internal edge count e(A) of a vertex
// subset; always 2 e(A) + d(A) = sum of degrees over A.
struct SubsetStats {
  int size = 0;
  int boundary = 0;
  int internal = 0;
};

inline SubsetStats subset_stats(const Graph& g, uint32_t mask) {
  SubsetStats s;
  s.size = __builtin_popcount(mask);
  for (const auto& [u, v] : g.edges()) {
    bool iu = mask >> u & 1, iv = mask >> v & 1;
    if (iu && iv)
      ++s.internal;
    else if (iu || iv)
      ++s.boundary;
  }
  return s;
}

// DPT polynomial P(G;x,y) = sum over vertex subsets X of
// (x-y)^{|X|} chi(G-X;y). Subsets are bucketed by the chromatic polynomial
// of the remainder before assembly; for forests that polynomial is
// y^c (y-1)^{n-|X|-c}, determined by the component count alone.
inline MPoly dpt_polynomial(const Graph& g) {
  int n = g.vertex_count();
  int cap = caps::effective(caps::kDptVerticesMax);
  if (n > cap) throw ResourceLimitError("DPT cap: n <= " + std::to_string(cap));

  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  // Kept-subset component count / forest test per mask of removed set X.
  std::map<std::pair<int, std::vector<BigInt>>, BigInt> buckets;
  detail::ChromaticMemo memo;
  std::vector<int> comp(static_cast<size_t>(n));
  for (uint32_t removed = 0; removed < (uint32_t{1} << n); ++removed) {
    int s = __builtin_popcount(removed);
    int kept = n - s;
    int comps = 0, kept_edges = 0;
    std::fill(comp.begin(), comp.end(), -1);
    for (int v = 0; v < n; ++v) {
      if (removed >> v & 1 || comp[static_cast<size_t>(v)] >= 0) continue;
      std::vector<int> stack = {v};
      comp[static_cast<size_t>(v)] = comps;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<size_t>(u)]) {
          if (removed >> w & 1) continue;
          if (comp[static_cast<size_t>(w)] < 0) {
            comp[static_cast<size_t>(w)] = comps;
            stack.push_back(w);
          }
        }
      }
      ++comps;
    }
    for (const auto& [u, v] : g.edges())
      if (!(removed >> u & 1) && !(removed >> v & 1)) ++kept_edges;
    IntPoly chi;
    if (kept_edges == kept - comps) {
      // Forest: y^comps (y-1)^{kept-comps}.
      IntPoly ym1(std::vector<BigInt>{-1, 1});
      chi = IntPoly::monomial(comps) * ym1.pow(static_cast<unsigned>(kept - comps));
    } else {
      std::vector<bool> keep(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v) keep[static_cast<size_t>(v)] = !(removed >> v & 1);
      Graph h = induced_subgraph(g, keep);
      detail::SimpleGraph sg;
      sg.n = h.vertex_count();
      sg.edges = h.edges();
      chi = detail::chromatic_simple(sg, &memo);
    }
    buckets[{s, chi.coeffs()}] += 1;
  }

  MPoly x_minus_y(2);
  x_minus_y.add_term({1, 0}, 1);
  x_minus_y.add_term({0, 1}, -1);
  std::vector<MPoly> pow_xy(static_cast<size_t>(n) + 1, MPoly(2));
  pow_xy[0] = MPoly::constant(2, 1);
  for (int s = 1; s <= n; ++s) pow_xy[static_cast<size_t>(s)] = pow_xy[static_cast<size_t>(s - 1)] * x_minus_y;

  MPoly total(2);
  for (const auto& [key, count] : buckets) {
    const auto& [s, chi_coeffs] = key;
    MPoly term(2);
    for (size_t j = 0; j < chi_coeffs.size(); ++j) {
      if (chi_coeffs[j] == 0) continue;
      term.add_term({0, static_cast<int>(j)}, chi_coeffs[j]);
    }
    total += count * (pow_xy[static_cast<size_t>(s)] * term);
  }
  return total;
}

// Generalized degree polynomial: sum over vertex subsets A of
// x^{|A|} y^{d(A)} z^{e(A)}.
inline MPoly gdp(const Graph& g) {
  int n = g.vertex_count();
  int cap = caps::effective(caps::kGdpVerticesMax);
  if (n > cap) throw ResourceLimitError("GDP cap: n <= " + std::to_string(cap));
  std::map<std::array<int, 3>, BigInt> counts;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    SubsetStats s = subset_stats(g, mask);
    counts[{s.size, s.boundary, s.internal}] += 1;
  }
  MPoly total(3);
  for (const auto& [key, c] : counts) total.add_term({key[0], key[1], key[2]}, c);
  return total;
}

namespace detail {

// Independent-set counts by branching on a maximum-degree vertex:
// I(G) = I(G - v) + x I(G - N[v]), with edge-free graphs closed by
// (1+x)^{n}.
inline void independence_rec(const std::vector<uint32_t>& adj, uint32_t active, int taken,
                             std::vector<BigInt>& out) {
  int best = -1, best_deg = -1;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if (!(active >> v & 1)) continue;
    int deg = __builtin_popcount(adj[static_cast<size_t>(v)] & active);
    if (deg > best_deg) {
      best_deg = deg;
      best = v;
    }
  }
  if (best_deg <= 0) {
    // No edges left: every subset of the remaining vertices is independent.
    int free = __builtin_popcount(active);
    for (int j = 0; j <= free; ++j)
      out[static_cast<size_t>(taken + j)] += binomial(free, j);
    return;
  }
  independence_rec(adj, active & ~(uint32_t{1} << best), taken, out);
  independence_rec(adj, active & ~(adj[static_cast<size_t>(best)] | (uint32_t{1} << best)),
                   taken + 1, out);
}

// Linear-time rooted DP for forests.
inline IntPoly independence_forest(const Graph& g) {
  int n = g.vertex_count();
  std::vector<IntPoly> with(static_cast<size_t>(n)), without(static_cast<size_t>(n));
  std::vector<int> parent(static_cast<size_t>(n), -2), order;
  IntPoly x = IntPoly::var();
  IntPoly total = IntPoly::constant(1);
  for (int root = 0; root < n; ++root) {
    if (parent[static_cast<size_t>(root)] != -2) continue;
    order.clear();
    parent[static_cast<size_t>(root)] = -1;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : g.neighbors(v))
        if (parent[static_cast<size_t>(w)] == -2) {
          parent[static_cast<size_t>(w)] = v;
          stack.push_back(w);
        }
    }
    for (size_t i = order.size(); i-- > 0;) {
      int v = order[i];
      IntPoly inc = x, exc = IntPoly::constant(1);
      for (int w : g.neighbors(v)) {
        if (w == parent[static_cast<size_t>(v)]) continue;
        inc *= without[static_cast<size_t>(w)];
        exc *= with[static_cast<size_t>(w)] + without[static_cast<size_t>(w)];
      }
      with[static_cast<size_t>(v)] = inc;
      without[static_cast<size_t>(v)] = exc;
    }
    total *= with[static_cast<size_t>(root)] + without[static_cast<size_t>(root)];
  }
  return total;
}

}  // namespace detail

// I(G,x) = sum_j s_j x^j over independent sets.
inline IntPoly independence_polynomial(const Graph& g) {
  int n = g.vertex_count();
  int cap = caps::effective(caps::kIndependenceVerticesMax);
  if (n > cap) throw ResourceLimitError("independence cap: n <= " + std::to_string(cap));
  if (g.is_forest()) return detail::independence_forest(g);
  std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<size_t>(u)] |= uint32_t{1} << v;
    adj[static_cast<size_t>(v)] |= uint32_t{1} << u;
  }
  std::vector<BigInt> s(static_cast<size_t>(n) + 1, BigInt(0));
  detail::independence_rec(adj, n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1, 0, s);
  return IntPoly(std::move(s));
}

enum class MatrixKind { adjacency, laplacian };

// Monic characteristic polynomial det(xI - M) over the integers, by the
// division-free Berkowitz iteration on leading principal submatrices.
inline IntPoly char_poly(const Graph& g, MatrixKind kind) {
  int n = g.vertex_count();
  int cap = caps::effective(caps::kCharPolyVerticesMax);
  if (n > cap) throw ResourceLimitError("char poly cap: n <= " + std::to_string(cap));
  std::vector<std::vector<BigInt>> a(static_cast<size_t>(n),
                                     std::vector<BigInt>(static_cast<size_t>(n), BigInt(0)));
  for (const auto& [u, v] : g.edges()) {
    a[static_cast<size_t>(u)][static_cast<size_t>(v)] = kind == MatrixKind::adjacency ? 1 : -1;
    a[static_cast<size_t>(v)][static_cast<size_t>(u)] = kind == MatrixKind::adjacency ? 1 : -1;
  }
  if (kind == MatrixKind::laplacian)
    for (int v = 0; v < n; ++v) a[static_cast<size_t>(v)][static_cast<size_t>(v)] = g.degree(v);

  // C holds the coefficients of det(xI - A_r), highest power first.
  std::vector<BigInt> c = {BigInt(1)};
  for (int r = 1; r <= n; ++r) {
    // Toeplitz column t over the (r-1)x(r-1) leading block.
    std::vector<BigInt> t(static_cast<size_t>(r) + 1);
    t[0] = 1;
    t[1] = -a[static_cast<size_t>(r - 1)][static_cast<size_t>(r - 1)];
    std::vector<BigInt> vec(static_cast<size_t>(r - 1));
    for (int i = 0; i < r - 1; ++i) vec[static_cast<size_t>(i)] = a[static_cast<size_t>(i)][static_cast<size_t>(r - 1)];
    for (int p = 2; p <= r; ++p) {
      BigInt dot = 0;
      for (int i = 0; i < r - 1; ++i)
        dot += a[static_cast<size_t>(r - 1)][static_cast<size_t>(i)] * vec[static_cast<size_t>(i)];
      t[static_cast<size_t>(p)] = -dot;
      if (p == r) break;
      std::vector<BigInt> next(static_cast<size_t>(r - 1), BigInt(0));
      for (int i = 0; i < r - 1; ++i) {
        for (int j = 0; j < r - 1; ++j)
          next[static_cast<size_t>(i)] += a[static_cast<size_t>(i)][static_cast<size_t>(j)] * vec[static_cast<size_t>(j)];
      }
      vec = std::move(next);
    }
    std::vector<BigInt> nc(static_cast<size_t>(r) + 1, BigInt(0));
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= std::min(i, r - 1); ++j)
        if (i - j <= r) nc[static_cast<size_t>(i)] += t[static_cast<size_t>(i - j)] * c[static_cast<size_t>(j)];
    c = std::move(nc);
  }
  std::vector<BigInt> ascending(c.rbegin(), c.rend());
  return IntPoly(std::move(ascending));
}

// (diameter, radius) via all-pairs BFS eccentricities.
inline std::pair<int, int> metric_invariants(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0 || !g.is_connected()) throw std::invalid_argument("graph must be connected");
  int diameter = 0, radius = n;
  for (int v = 0; v < n; ++v) {
    auto dist = g.bfs_distances(v);
    int ecc = 0;
    for (int d : dist) ecc = std::max(ecc, d);
    diameter = std::max(diameter, ecc);
    radius = std::min(radius, ecc);
  }
  return {diameter, radius};
}

// One value per row of the comparison battery.
struct InvariantFingerprint {
  DcpFamily family;
  MPoly dpt{2};
  MPoly gdp_poly{3};
  IntPoly independence;
  IntPoly adj_charpoly;
  IntPoly lap_charpoly;
  int diameter = 0;
  int radius = 0;

  bool operator==(const InvariantFingerprint&) const = default;
};

inline InvariantFingerprint fingerprint(const Graph& g) {
  InvariantFingerprint fp;
  fp.family = dcp_family(g);
  fp.dpt = dpt_polynomial(g);
  fp.gdp_poly = gdp(g);
  fp.independence = independence_polynomial(g);
  fp.adj_charpoly = char_poly(g, MatrixKind::adjacency);
  fp.lap_charpoly = char_poly(g, MatrixKind::laplacian);
  auto [dia, rad] = metric_invariants(g);
  fp.diameter = dia;
  fp.radius = rad;
  return fp;
}

inline InvariantFingerprint fingerprint(const Tree& t) { return fingerprint(t.graph()); }

inline constexpr int kComparisonRows = 6;
inline const std::array<std::string, kComparisonRows> kComparisonRowNames = {
    "DCP family",          "DPT polynomial",     "GDP",
    "Adjacency spectrum",  "Laplacian spectrum", "Independence polynomial"};

// Equality matrix over the six invariants for a list of tree pairs.
struct ComparisonTable {
  std::vector<std::string> pair_labels;
  std::vector<std::array<bool, kComparisonRows>> cells;  // one entry per pair

  std::string to_text() const {
    size_t name_width = 0;
    for (const auto& s : kComparisonRowNames) name_width = std::max(name_width, s.size());
    std::vector<size_t> col(pair_labels.size());
    for (size_t i = 0; i < pair_labels.size(); ++i)
      col[i] = std::max<size_t>(pair_labels[i].size(), 3);
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(name_width + 2)) << "Invariant";
    for (size_t i = 0; i < pair_labels.size(); ++i)
      os << std::setw(static_cast<int>(col[i] + 2)) << pair_labels[i];
    os << '\n';
    for (int r = 0; r < kComparisonRows; ++r) {
      os << std::setw(static_cast<int>(name_width + 2)) << kComparisonRowNames[static_cast<size_t>(r)];
      for (size_t i = 0; i < pair_labels.size(); ++i)
        os << std::setw(static_cast<int>(col[i] + 2)) << (cells[i][static_cast<size_t>(r)] ? "Yes" : "No");
      os << '\n';
    }
    return os.str();
  }

  std::string to_json() const {
    std::ostringstream os;
    os << "{\"rows\":[";
    for (int r = 0; r < kComparisonRows; ++r) {
      if (r) os << ',';
      os << '"' << kComparisonRowNames[static_cast<size_t>(r)] << '"';
    }
    os << "],\"pairs\":[";
    for (size_t i = 0; i < pair_labels.size(); ++i) {
      if (i) os << ',';
      os << "{\"label\":\"" << pair_labels[i] << "\",\"equal\":[";
      for (int r = 0; r < kComparisonRows; ++r) {
        if (r) os << ',';
        os << (cells[i][static_cast<size_t>(r)] ? "true" : "false");
      }
      os << "]}";
    }
    os << "]}";
    return os.str();
  }
};

inline std::array<bool, kComparisonRows> compare_fingerprints(const InvariantFingerprint& a,
                                                              const InvariantFingerprint& b) {
  return {a.family == b.family,
          a.dpt == b.dpt,
          a.gdp_poly == b.gdp_poly,
          a.adj_charpoly == b.adj_charpoly,
          a.lap_charpoly == b.lap_charpoly,
          a.independence == b.independence};
}

inline ComparisonTable comparison_table(const std::vector<std::pair<Tree, Tree>>& pairs,
                                        std::vector<std::string> labels = {}) {
  ComparisonTable table;
  for (size_t i = 0; i < pairs.size(); ++i) {
    InvariantFingerprint fa = fingerprint(pairs[i].first);
    InvariantFingerprint fb = fingerprint(pairs[i].second);
    table.cells.push_back(compare_fingerprints(fa, fb));
    table.pair_labels.push_back(i < labels.size() ? labels[i]
                                                  : "pair" + std::to_string(i + 1));
  }
  return table;
}

}  // namespace dcp
