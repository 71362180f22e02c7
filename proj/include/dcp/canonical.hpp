#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "dcp/graph.hpp"

namespace dcp {

// Isomorphism-invariant byte string for a free tree: AHU code rooted at the
// tree center. Two trees are isomorphic iff their codes compare equal.
struct CanonicalCode {
  std::string bytes;
  auto operator<=>(const CanonicalCode&) const = default;
};

// The 1- or 2-vertex center, found by repeatedly stripping leaves.
inline std::vector<int> tree_centers(const Graph& t) {
  int n = t.vertex_count();
  if (n == 1) return {0};
  std::vector<int> deg(static_cast<size_t>(n));
  std::vector<int> frontier;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<size_t>(v)] = t.degree(v);
    if (deg[static_cast<size_t>(v)] == 1) frontier.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(frontier.size());
    for (int leaf : frontier)
      for (int w : t.neighbors(leaf))
        if (--deg[static_cast<size_t>(w)] == 1) next.push_back(w);
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

namespace detail {

inline std::string ahu_code(const Graph& t, int v, int parent) {
  std::vector<std::string> child_codes;
  for (int w : t.neighbors(v))
    if (w != parent) child_codes.push_back(ahu_code(t, w, v));
  std::sort(child_codes.begin(), child_codes.end());
  std::string s = "(";
  for (const auto& c : child_codes) s += c;
  s += ')';
  return s;
}

}  // namespace detail

// Rooted AHU code of the whole tree.
inline CanonicalCode rooted_code(const Graph& t, int root) {
  return CanonicalCode{detail::ahu_code(t, root, -1)};
}

// Center-rooted code; for a bicentral tree, the lexicographically smaller
// of the two rooted codes.
inline CanonicalCode canonical_code(const Tree& t) {
  auto centers = tree_centers(t.graph());
  CanonicalCode best = rooted_code(t.graph(), centers[0]);
  for (size_t i = 1; i < centers.size(); ++i)
    best = std::min(best, rooted_code(t.graph(), centers[i]));
  return best;
}

inline bool trees_isomorphic(const Tree& a, const Tree& b) {
  return canonical_code(a) == canonical_code(b);
}

// Rebuild a tree from its code with the canonical labeling: vertices are
// numbered in preorder, children in code order. generate_trees and the
// census emit these representatives so output files depend only on the
// isomorphism class.
inline Tree tree_from_code(const CanonicalCode& code) {
  const std::string& s = code.bytes;
  std::vector<Edge> edges;
  std::vector<int> stack;
  int next = 0;
  for (char ch : s) {
    if (ch == '(') {
      int v = next++;
      if (!stack.empty()) edges.emplace_back(stack.back(), v);
      stack.push_back(v);
    } else if (ch == ')') {
      if (stack.empty()) throw std::invalid_argument("malformed canonical code");
      stack.pop_back();
    } else {
      throw std::invalid_argument("malformed canonical code");
    }
  }
  if (!stack.empty() || next == 0) throw std::invalid_argument("malformed canonical code");
  return Tree(next, std::move(edges));
}

}  // namespace dcp
