#pragma once

#include <map>
#include <string>
#include <vector>

#include "dcp/canonical.hpp"
#include "dcp/caps.hpp"
#include "dcp/errors.hpp"
#include "dcp/graph.hpp"

namespace dcp {

// Every free tree of order n, one canonically labeled representative per
// isomorphism class, sorted by canonical code. Built inductively: attach a
// leaf at every vertex of every order-(n-1) tree and dedup by code.
inline std::vector<Tree> generate_trees(int n) {
  int cap = caps::effective(caps::kGenerateTreesMax);
  if (n < 1 || n > cap)
    throw (n < 1 ? std::invalid_argument("tree order must be at least 1")
                 : std::invalid_argument("tree order exceeds generation cap " + std::to_string(cap)));
  std::vector<std::string> level = {"()"};  // the one-vertex tree
  for (int order = 2; order <= n; ++order) {
    std::map<std::string, bool> seen;
    for (const auto& code : level) {
      Tree t = tree_from_code(CanonicalCode{code});
      for (int v = 0; v < order - 1; ++v) {
        std::vector<Edge> edges = t.graph().edges();
        edges.emplace_back(v, order - 1);
        Tree extended(order, std::move(edges));
        seen.emplace(canonical_code(extended).bytes, true);
      }
    }
    level.clear();
    for (const auto& [code, _] : seen) level.push_back(code);
  }
  std::vector<Tree> out;
  out.reserve(level.size());
  for (const auto& code : level) out.push_back(tree_from_code(CanonicalCode{code}));
  return out;
}

}  // namespace dcp
