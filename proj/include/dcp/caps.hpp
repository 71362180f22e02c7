#pragma once

#include <cstdlib>

namespace dcp::caps {

// Default desk-scale size caps. Every vertex-count cap can be raised (or
// lowered) at runtime through the DCP_MAX_N environment variable; the edge
// cap on the contraction sweep is fixed.
inline constexpr int kGenerateTreesMax = 16;
inline constexpr int kOracleVerticesMax = 12;
inline constexpr int kCensusMin = 4;
inline constexpr int kCensusMax = 13;
inline constexpr int kContractionEdgesMax = 24;
inline constexpr int kDptVerticesMax = 18;
inline constexpr int kGdpVerticesMax = 20;
inline constexpr int kCharPolyVerticesMax = 20;
inline constexpr int kIndependenceVerticesMax = 20;
inline constexpr int kTreeDpVerticesMax = 25;
inline constexpr int kMatchingEnumVerticesMax = 12;

inline int env_override() {
  const char* s = std::getenv("DCP_MAX_N");
  if (s == nullptr) return 0;
  int v = std::atoi(s);
  return v > 0 ? v : 0;
}

// Effective value of a vertex-count cap.
inline int effective(int default_cap) {
  int e = env_override();
  return e > 0 ? e : default_cap;
}

}  // namespace dcp::caps
