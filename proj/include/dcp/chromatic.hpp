#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dcp/bigint.hpp"
#include "dcp/caps.hpp"
#include "dcp/errors.hpp"
#include "dcp/graph.hpp"
#include "dcp/poly.hpp"

namespace dcp {

namespace detail {

// Working representation for deletion-contraction: a simple graph as a
// sorted edge list. Loops never appear here (they are handled before).
struct SimpleGraph {
  int n = 0;
  std::vector<Edge> edges;  // sorted, u < v
};

inline std::string encode(const SimpleGraph& g) {
  std::string s;
  s.reserve(g.edges.size() * 4 + 2);
  auto put = [&s](int x) {
    s.push_back(static_cast<char>(x & 0xff));
    s.push_back(static_cast<char>((x >> 8) & 0xff));
  };
  put(g.n);
  for (const auto& [u, v] : g.edges) {
    put(u);
    put(v);
  }
  return s;
}

using ChromaticMemo = std::unordered_map<std::string, IntPoly>;

// Contract edge (u,v): v merges into u, labels above v shift down, parallel
// edges collapse. The input has no loops and no (u,v) duplicates, so no
// loop can appear.
inline SimpleGraph contract_simple(const SimpleGraph& g, int u, int v) {
  SimpleGraph r;
  r.n = g.n - 1;
  for (auto [a, b] : g.edges) {
    if (a == u && b == v) continue;
    if (a == v) a = u;
    if (b == v) b = u;
    if (a > v) --a;
    if (b > v) --b;
    if (a > b) std::swap(a, b);
    if (a != b) r.edges.emplace_back(a, b);
  }
  std::sort(r.edges.begin(), r.edges.end());
  r.edges.erase(std::unique(r.edges.begin(), r.edges.end()), r.edges.end());
  return r;
}

inline int component_count(const SimpleGraph& g) {
  std::vector<int> root(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) root[static_cast<size_t>(v)] = v;
  auto find = [&](int x) {
    while (root[static_cast<size_t>(x)] != x) {
      root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
      x = root[static_cast<size_t>(x)];
    }
    return x;
  };
  int c = g.n;
  for (const auto& [u, v] : g.edges) {
    int a = find(u), b = find(v);
    if (a != b) {
      root[static_cast<size_t>(a)] = b;
      --c;
    }
  }
  return c;
}

// Chromatic polynomial of a loop-free simple graph by deletion-contraction,
// picking the first edge at a max-degree vertex. Deletions may disconnect
// the graph, so the cheap exit is a forest test, not a tree test. Results
// for subproblems with more than `memo_min_edges` edges are cached in
// `memo` (exact encoding, not an isomorphism-invariant one).
inline IntPoly chromatic_rec(const SimpleGraph& g, ChromaticMemo* memo,
                                   int memo_min_edges) {
  int m = static_cast<int>(g.edges.size());
  if (m == 0) return IntPoly::monomial(g.n);  // k^n (n isolated vertices)
  int comps = component_count(g);
  if (m == g.n - comps) {
    // Forest: k^c (k-1)^m.
    IntPoly km1(std::vector<BigInt>{-1, 1});
    return IntPoly::monomial(comps) * km1.pow(static_cast<unsigned>(m));
  }
  std::string key;
  bool use_memo = memo != nullptr && m > memo_min_edges;
  if (use_memo) {
    key = encode(g);
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;
  }
  std::vector<int> deg(static_cast<size_t>(g.n), 0);
  for (const auto& [u, v] : g.edges) {
    ++deg[static_cast<size_t>(u)];
    ++deg[static_cast<size_t>(v)];
  }
  int pivot = static_cast<int>(std::max_element(deg.begin(), deg.end()) - deg.begin());
  Edge e{-1, -1};
  for (const auto& [u, v] : g.edges)
    if (u == pivot || v == pivot) {
      e = {u, v};
      break;
    }
  SimpleGraph del = g;
  del.edges.erase(std::find(del.edges.begin(), del.edges.end(), e));
  IntPoly result = chromatic_rec(del, memo, memo_min_edges) -
                   chromatic_rec(contract_simple(g, e.first, e.second), memo, memo_min_edges);
  if (use_memo) memo->emplace(std::move(key), result);
  return result;
}

// Chromatic polynomial of a loop-free simple graph: product over connected
// components.
inline IntPoly chromatic_simple(const SimpleGraph& g, ChromaticMemo* memo,
                                int memo_min_edges = 10) {
  std::vector<int> comp(static_cast<size_t>(g.n), -1);
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.n));
  for (const auto& [u, v] : g.edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  int ncomp = 0;
  for (int v = 0; v < g.n; ++v) {
    if (comp[static_cast<size_t>(v)] >= 0) continue;
    std::vector<int> stack = {v};
    comp[static_cast<size_t>(v)] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(u)])
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  IntPoly result = IntPoly::constant(1);
  for (int c = 0; c < ncomp; ++c) {
    SimpleGraph sub;
    std::vector<int> label(static_cast<size_t>(g.n), -1);
    for (int v = 0; v < g.n; ++v)
      if (comp[static_cast<size_t>(v)] == c) label[static_cast<size_t>(v)] = sub.n++;
    for (const auto& [u, v] : g.edges)
      if (comp[static_cast<size_t>(u)] == c)
        sub.edges.emplace_back(label[static_cast<size_t>(u)], label[static_cast<size_t>(v)]);
    std::sort(sub.edges.begin(), sub.edges.end());
    result *= chromatic_rec(sub, memo, memo_min_edges);
  }
  return result;
}

}  // namespace detail

// Ordinary chromatic polynomial of a multigraph: zero if any loop is
// present, parallel edges collapsed before deletion-contraction.
inline IntPoly chromatic_poly(const Multigraph& mg) {
  if (mg.has_loop()) return IntPoly::zero();
  detail::SimpleGraph g;
  g.n = mg.vertex_count();
  for (const auto& [e, mult] : mg.edge_mult()) g.edges.push_back(e);
  std::sort(g.edges.begin(), g.edges.end());
  detail::ChromaticMemo memo;
  return detail::chromatic_simple(g, &memo);
}

// Exact number of (k,d)-colorings at one integer point.
struct ColoringCount {
  long k = 0;
  int d = 0;
  BigInt count;
};

namespace detail {

// Exhaustive (k,d)-coloring counter. Colorings are enumerated grouped by
// their color-class partition (restricted-growth order); a completed
// partition with j classes accounts for k(k-1)...(k-j+1) colorings. A
// partial assignment is abandoned as soon as any finished vertex exceeds
// the defect bound, and a subtree where no vertex can ever exceed it is
// closed in one step with a k^{remaining} factor.
class DefectiveCounter {
 public:
  DefectiveCounter(const Graph& g, long k, int d) : g_(g), k_(k), d_(d), n_(g.vertex_count()) {
    order_.reserve(static_cast<size_t>(n_));
    std::vector<bool> seen(static_cast<size_t>(n_), false);
    // BFS from high-degree vertices so the constrained neighborhoods are
    // settled early.
    std::vector<int> by_degree(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) by_degree[static_cast<size_t>(v)] = v;
    std::sort(by_degree.begin(), by_degree.end(),
              [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
    for (int start : by_degree) {
      if (seen[static_cast<size_t>(start)]) continue;
      std::vector<int> queue = {start};
      seen[static_cast<size_t>(start)] = true;
      size_t head = 0;
      while (head < queue.size()) {
        int u = queue[head++];
        order_.push_back(u);
        for (int w : g_.neighbors(u))
          if (!seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = true;
            queue.push_back(w);
          }
      }
    }
    pos_.assign(static_cast<size_t>(n_), -1);
    for (int i = 0; i < n_; ++i) pos_[static_cast<size_t>(order_[static_cast<size_t>(i)])] = i;
    earlier_.assign(static_cast<size_t>(n_), {});
    for (int i = 0; i < n_; ++i) {
      int v = order_[static_cast<size_t>(i)];
      for (int w : g_.neighbors(v))
        if (pos_[static_cast<size_t>(w)] < i) earlier_[static_cast<size_t>(i)].push_back(pos_[static_cast<size_t>(w)]);
    }
    falling_.resize(static_cast<size_t>(n_) + 1);
    falling_[0] = 1;
    for (int j = 1; j <= n_; ++j)
      falling_[static_cast<size_t>(j)] = falling_[static_cast<size_t>(j - 1)] * (k_ - (j - 1));
    power_.resize(static_cast<size_t>(n_) + 1);
    power_[0] = 1;
    for (int r = 1; r <= n_; ++r) power_[static_cast<size_t>(r)] = power_[static_cast<size_t>(r - 1)] * k_;
  }

  BigInt run() {
    if (n_ == 0) return 1;
    if (k_ <= 0) return 0;
    class_of_.assign(static_cast<size_t>(n_), -1);
    mono_.assign(static_cast<size_t>(n_), 0);
    unassigned_nbrs_.assign(static_cast<size_t>(n_), 0);
    risky_ = 0;
    for (int i = 0; i < n_; ++i) {
      int v = order_[static_cast<size_t>(i)];
      // Positions are assigned in order, so when position i is reached its
      // unassigned neighbors are exactly the later ones.
      unassigned_nbrs_[static_cast<size_t>(i)] =
          g_.degree(v) - static_cast<int>(earlier_[static_cast<size_t>(i)].size());
      if (g_.degree(v) > d_) ++risky_;
    }
    total_ = 0;
    dfs(0, 0);
    return total_;
  }

 private:
  bool at_risk(int i) const {
    // Position i, already assigned: worst case every unassigned neighbor
    // joins its class. Unassigned positions are tracked by degree alone.
    return mono_[static_cast<size_t>(i)] + unassigned_nbrs_[static_cast<size_t>(i)] > d_;
  }

  void dfs(int i, int num_classes) {
    if (risky_ == 0) {
      total_ += falling_[static_cast<size_t>(num_classes)] * power_[static_cast<size_t>(n_ - i)];
      return;
    }
    if (i == n_) {
      total_ += falling_[static_cast<size_t>(num_classes)];
      return;
    }
    int limit = std::min<long>(num_classes + 1, k_);
    for (int c = 0; c < limit; ++c) {
      // Tentative monochromatic degree of position i in class c.
      int mono_i = 0;
      bool ok = true;
      for (int j : earlier_[static_cast<size_t>(i)]) {
        if (class_of_[static_cast<size_t>(j)] == c) {
          ++mono_i;
          if (mono_[static_cast<size_t>(j)] + 1 > d_) {
            ok = false;
            break;
          }
        }
      }
      if (!ok || mono_i > d_) continue;

      // Commit.
      int risky_before = risky_;
      class_of_[static_cast<size_t>(i)] = c;
      bool risk_i_old = g_.degree(order_[static_cast<size_t>(i)]) > d_;
      mono_[static_cast<size_t>(i)] = mono_i;
      bool risk_i_new = at_risk(i);
      if (risk_i_old && !risk_i_new) --risky_;
      if (!risk_i_old && risk_i_new) ++risky_;
      for (int j : earlier_[static_cast<size_t>(i)]) {
        bool before = at_risk(j);
        --unassigned_nbrs_[static_cast<size_t>(j)];
        if (class_of_[static_cast<size_t>(j)] == c) ++mono_[static_cast<size_t>(j)];
        bool after = at_risk(j);
        if (before && !after) --risky_;
        if (!before && after) ++risky_;
      }

      dfs(i + 1, c == num_classes ? num_classes + 1 : num_classes);

      // Undo.
      for (int j : earlier_[static_cast<size_t>(i)]) {
        ++unassigned_nbrs_[static_cast<size_t>(j)];
        if (class_of_[static_cast<size_t>(j)] == c) --mono_[static_cast<size_t>(j)];
      }
      class_of_[static_cast<size_t>(i)] = -1;
      mono_[static_cast<size_t>(i)] = 0;
      risky_ = risky_before;
    }
  }

  const Graph& g_;
  long k_;
  int d_;
  int n_;
  std::vector<int> order_, pos_;
  std::vector<std::vector<int>> earlier_;
  std::vector<BigInt> falling_, power_;
  std::vector<int> class_of_, mono_, unassigned_nbrs_;
  int risky_ = 0;
  BigInt total_;
};

}  // namespace detail

// Number of maps V -> [k] in which every vertex has at most d neighbors of
// its own color. Exponential-time definitional oracle; capped at 12
// vertices by default.
inline ColoringCount count_defective_colorings(const Graph& g, long k, int d) {
  if (k < 0 || d < 0) throw std::invalid_argument("k and d must be nonnegative");
  int cap = caps::effective(caps::kOracleVerticesMax);
  if (g.vertex_count() > cap)
    throw ResourceLimitError("coloring oracle cap: n <= " + std::to_string(cap));
  detail::DefectiveCounter counter(g, k, d);
  return ColoringCount{k, d, counter.run()};
}

// Exact polynomial through the oracle counts at k = 0..n, via Newton
// forward differences. The divided differences must produce integer
// coefficients; any nonexact division signals an oracle bug.
inline IntPoly interpolate_from_counts(const Graph& g, int d) {
  int n = g.vertex_count();
  int cap = caps::effective(caps::kOracleVerticesMax);
  if (n > cap) throw ResourceLimitError("coloring oracle cap: n <= " + std::to_string(cap));
  std::vector<BigInt> diff(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k)
    diff[static_cast<size_t>(k)] = count_defective_colorings(g, k, d).count;
  // In-place forward differences: diff[j] becomes Delta^j f(0).
  for (int level = 1; level <= n; ++level)
    for (int j = n; j >= level; --j)
      diff[static_cast<size_t>(j)] -= diff[static_cast<size_t>(j - 1)];
  // p(k) = sum_j diff[j] * C(k, j); assemble over the common denominator n!.
  BigInt nfact = factorial(static_cast<unsigned long>(n));
  IntPoly numerator;
  IntPoly falling = IntPoly::constant(1);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) falling *= IntPoly(std::vector<BigInt>{BigInt(-(j - 1)), 1});  // (k - (j-1))
    BigInt scale = nfact / factorial(static_cast<unsigned long>(j));
    numerator += (diff[static_cast<size_t>(j)] * scale) * falling;
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(numerator.coeffs().size());
  for (const BigInt& c : numerator.coeffs()) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), nfact.get_mpz_t());
    if (r != 0)
      throw std::logic_error("internal inconsistency: interpolation produced a non-integer coefficient");
    coeffs.push_back(std::move(q));
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace dcp
