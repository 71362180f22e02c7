#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dcp/errors.hpp"

namespace dcp {

using Edge = std::pair<int, int>;  // stored with first < second

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() : n_(0) {}

  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop not allowed in a simple graph");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(static_cast<size_t>(n), {});
    for (const auto& [u, v] : edges_) {
      adj_[static_cast<size_t>(u)].push_back(v);
      adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  // BFS distances from s; -1 for unreachable vertices.
  std::vector<int> bfs_distances(int s) const {
    std::vector<int> dist(static_cast<size_t>(n_), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : neighbors(u))
        if (dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          q.push(w);
        }
    }
    return dist;
  }

  // Component id per vertex (ids assigned in order of smallest member) and
  // the number of components.
  std::pair<std::vector<int>, int> components() const {
    std::vector<int> comp(static_cast<size_t>(n_), -1);
    int c = 0;
    for (int v = 0; v < n_; ++v) {
      if (comp[static_cast<size_t>(v)] >= 0) continue;
      std::queue<int> q;
      comp[static_cast<size_t>(v)] = c;
      q.push(v);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : neighbors(u))
          if (comp[static_cast<size_t>(w)] < 0) {
            comp[static_cast<size_t>(w)] = c;
            q.push(w);
          }
      }
      ++c;
    }
    return {std::move(comp), c};
  }

  bool is_connected() const {
    if (n_ <= 1) return true;
    return components().second == 1;
  }

  bool is_tree() const { return is_connected() && edge_count() == n_ - 1; }

  // A forest has no cycles: m = n - #components.
  bool is_forest() const { return edge_count() == n_ - components().second; }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// A validated tree: connected with exactly n-1 edges.
class Tree {
 public:
  explicit Tree(Graph g) : g_(std::move(g)) {
    if (g_.vertex_count() < 1) throw std::invalid_argument("a tree has at least one vertex");
    if (g_.edge_count() != g_.vertex_count() - 1)
      throw std::invalid_argument("a tree on n vertices has n-1 edges");
    if (!g_.is_connected()) throw std::invalid_argument("tree must be connected");
  }

  Tree(int n, std::vector<Edge> edges) : Tree(Graph(n, std::move(edges))) {}

  const Graph& graph() const { return g_; }
  int vertex_count() const { return g_.vertex_count(); }

  bool operator==(const Tree& o) const { return g_ == o.g_; }

 private:
  Graph g_;
};

// Undirected multigraph: unordered pairs (u,v) with u <= v mapped to
// positive multiplicities; (u,u) is a loop.
class Multigraph {
 public:
  explicit Multigraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  static Multigraph from_graph(const Graph& g) {
    Multigraph mg(g.vertex_count());
    for (const auto& [u, v] : g.edges()) mg.add_edge(u, v, 1);
    return mg;
  }

  void add_edge(int u, int v, int mult = 1) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (mult < 1) throw std::invalid_argument("multiplicity must be positive");
    edge_mult_[{u, v}] += mult;
  }

  int vertex_count() const { return n_; }
  const std::map<Edge, int>& edge_mult() const { return edge_mult_; }

  bool has_loop() const {
    for (const auto& [e, m] : edge_mult_)
      if (e.first == e.second) return true;
    return false;
  }

  bool operator==(const Multigraph& o) const {
    return n_ == o.n_ && edge_mult_ == o.edge_mult_;
  }

 private:
  int n_;
  std::map<Edge, int> edge_mult_;
};

// Multiset of vertex degrees, sorted nonincreasing.
inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) d[static_cast<size_t>(v)] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

namespace detail {

// Union-find over 0..n-1.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
      parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
      x = parent_[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

// Simultaneously contract every edge of `a`. Vertices of the result are the
// connected components of the spanning subgraph G[a], numbered in order of
// their smallest original vertex; every edge outside `a` survives, becoming
// a loop when its endpoints land in the same component.
inline Multigraph contract_edge_set(const Graph& g, const std::vector<Edge>& a) {
  int n = g.vertex_count();
  detail::DisjointSets ds(n);
  std::vector<bool> in_a;
  {
    std::vector<Edge> norm(a);
    for (auto& [u, v] : norm)
      if (u > v) std::swap(u, v);
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    in_a.assign(g.edges().size(), false);
    size_t hits = 0;
    for (size_t i = 0; i < g.edges().size(); ++i) {
      if (std::binary_search(norm.begin(), norm.end(), g.edges()[i])) {
        in_a[i] = true;
        ++hits;
        ds.unite(g.edges()[i].first, g.edges()[i].second);
      }
    }
    if (hits != norm.size()) throw std::invalid_argument("contracted edge not in graph");
  }
  std::vector<int> label(static_cast<size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    int r = ds.find(v);
    if (label[static_cast<size_t>(r)] < 0) label[static_cast<size_t>(r)] = next++;
  }
  Multigraph mg(next);
  for (size_t i = 0; i < g.edges().size(); ++i) {
    if (in_a[i]) continue;
    const auto& [u, v] = g.edges()[i];
    mg.add_edge(label[static_cast<size_t>(ds.find(u))], label[static_cast<size_t>(ds.find(v))], 1);
  }
  return mg;
}

// Maximum degree of the spanning subgraph with edge set `a`; 0 for the
// empty set.
inline int max_degree_of_edge_subset(const Graph& g, const std::vector<Edge>& a) {
  std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<Edge> norm(a);
  for (auto& [u, v] : norm)
    if (u > v) std::swap(u, v);
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  for (const auto& [u, v] : norm) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge not in graph");
    ++deg[static_cast<size_t>(u)];
    ++deg[static_cast<size_t>(v)];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

// Pairwise BFS distances among vertices of degree >= threshold, as a sorted
// multiset.
inline std::vector<int> distance_multiset_of_high_degree_vertices(const Tree& t, int threshold) {
  const Graph& g = t.graph();
  std::vector<int> hubs;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= threshold) hubs.push_back(v);
  std::vector<int> out;
  for (size_t i = 0; i < hubs.size(); ++i) {
    auto dist = g.bfs_distances(hubs[i]);
    for (size_t j = i + 1; j < hubs.size(); ++j)
      out.push_back(dist[static_cast<size_t>(hubs[j])]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Induced subgraph on the vertices with keep[v] true; vertices are
// renumbered in increasing order of their original labels.
inline Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  std::vector<int> label(static_cast<size_t>(g.vertex_count()), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (keep[static_cast<size_t>(v)]) label[static_cast<size_t>(v)] = next++;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (keep[static_cast<size_t>(u)] && keep[static_cast<size_t>(v)])
      edges.emplace_back(label[static_cast<size_t>(u)], label[static_cast<size_t>(v)]);
  return Graph(next, std::move(edges));
}

}  // namespace dcp
