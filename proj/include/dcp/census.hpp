#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dcp/canonical.hpp"
#include "dcp/caps.hpp"
#include "dcp/comparators.hpp"
#include "dcp/dcp.hpp"
#include "dcp/errors.hpp"
#include "dcp/io.hpp"
#include "dcp/treegen.hpp"

namespace dcp {

// A pair of nonisomorphic order-n trees with identical DCP families,
// together with the full invariant fingerprints of both members.
struct CensusPair {
  CanonicalCode code1, code2;  // code1 < code2
  std::string graph6_1, graph6_2;
  InvariantFingerprint fp1, fp2;
};

struct CensusResult {
  int order = 0;
  std::vector<CensusPair> pairs;
};

namespace detail {

// Grouping key: the concatenated coefficient vectors of chi_0..chi_delta.
// The key is the complete family, so map equality is exact family equality.
inline std::string family_key(const DcpFamily& fam) {
  std::ostringstream os;
  os << fam.n << '|' << fam.delta;
  for (const auto& p : fam.polys) {
    os << '#';
    for (const auto& c : p.coeffs()) os << c.get_str() << ',';
  }
  return os.str();
}

}  // namespace detail

// Exhaustive DCP-equivalence census over all nonisomorphic trees of the
// given order. Family computation is parallelized per tree when threads > 1;
// the grouping pass is a single-threaded deterministic reduction, so the
// result does not depend on the worker count.
inline CensusResult dcp_census(int order, int threads = 1) {
  if (order < caps::kCensusMin)
    throw std::invalid_argument("census requires order >= " + std::to_string(caps::kCensusMin));
  int cap = caps::effective(caps::kCensusMax);
  if (order > cap) throw ResourceLimitError("census cap: n <= " + std::to_string(cap));

  std::vector<Tree> trees = generate_trees(order);
  std::vector<std::string> keys(trees.size());
  auto worker = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) keys[i] = detail::family_key(dcp_family(trees[i]));
  };
  if (threads <= 1) {
    worker(0, trees.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (trees.size() + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
    for (int t = 0; t < threads; ++t) {
      size_t lo = static_cast<size_t>(t) * chunk;
      size_t hi = std::min(trees.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  std::map<std::string, std::vector<size_t>> buckets;
  for (size_t i = 0; i < trees.size(); ++i) buckets[keys[i]].push_back(i);

  CensusResult result;
  result.order = order;
  for (const auto& [key, members] : buckets) {
    if (members.size() < 2) continue;
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b) {
        const Tree& ta = trees[members[a]];
        const Tree& tb = trees[members[b]];
        if (dcp_family(ta) != dcp_family(tb))
          throw std::logic_error("internal inconsistency: family key collision");
        CensusPair pair;
        pair.code1 = canonical_code(ta);
        pair.code2 = canonical_code(tb);
        const Tree* first = &ta;
        const Tree* second = &tb;
        if (pair.code2 < pair.code1) {
          std::swap(pair.code1, pair.code2);
          std::swap(first, second);
        }
        pair.graph6_1 = graph6_encode(first->graph());
        pair.graph6_2 = graph6_encode(second->graph());
        pair.fp1 = fingerprint(*first);
        pair.fp2 = fingerprint(*second);
        result.pairs.push_back(std::move(pair));
      }
  }
  std::sort(result.pairs.begin(), result.pairs.end(), [](const CensusPair& a, const CensusPair& b) {
    return std::tie(a.code1, a.code2) < std::tie(b.code1, b.code2);
  });
  return result;
}

inline std::string fingerprint_to_json(const InvariantFingerprint& fp) {
  std::ostringstream os;
  os << "{\"family\":{\"n\":" << fp.family.n << ",\"delta\":" << fp.family.delta << ",\"polys\":[";
  for (size_t d = 0; d < fp.family.polys.size(); ++d) {
    if (d) os << ',';
    os << fp.family.polys[d].to_json("k");
  }
  os << "]},\"dpt\":" << fp.dpt.to_json({"x", "y"}) << ",\"gdp\":" << fp.gdp_poly.to_json({"x", "y", "z"})
     << ",\"independence\":" << fp.independence.to_json("x")
     << ",\"adj_charpoly\":" << fp.adj_charpoly.to_json("x")
     << ",\"lap_charpoly\":" << fp.lap_charpoly.to_json("x") << ",\"diameter\":" << fp.diameter
     << ",\"radius\":" << fp.radius << '}';
  return os.str();
}

inline std::string census_to_json(const CensusResult& r) {
  std::ostringstream os;
  os << "{\"order\":" << r.order << ",\"pair_count\":" << r.pairs.size() << ",\"pairs\":[";
  for (size_t i = 0; i < r.pairs.size(); ++i) {
    const CensusPair& p = r.pairs[i];
    if (i) os << ',';
    os << "{\"code1\":\"" << json_escape(p.code1.bytes) << "\",\"code2\":\"" << json_escape(p.code2.bytes)
       << "\",\"graph6\":[\"" << json_escape(p.graph6_1) << "\",\"" << json_escape(p.graph6_2)
       << "\"],\"fingerprints\":[" << fingerprint_to_json(p.fp1) << ',' << fingerprint_to_json(p.fp2)
       << "]}";
  }
  os << "]}";
  return os.str();
}

inline std::string census_to_text(const CensusResult& r) {
  std::ostringstream os;
  os << "order " << r.order << ": " << r.pairs.size() << " DCP-equivalent pair"
     << (r.pairs.size() == 1 ? "" : "s") << '\n';
  for (size_t i = 0; i < r.pairs.size(); ++i) {
    const CensusPair& p = r.pairs[i];
    os << "  pair " << i + 1 << ": " << p.graph6_1 << "  " << p.graph6_2 << '\n';
    os << "    delta " << p.fp1.family.delta << ", diameters (" << p.fp1.diameter << ','
       << p.fp2.diameter << "), radii (" << p.fp1.radius << ',' << p.fp2.radius << ")\n";
  }
  return os.str();
}

}  // namespace dcp
