#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "dcp/errors.hpp"
#include "dcp/graph.hpp"

namespace dcp {

// Edge-list format, bit-exact: first line "p <n>", then one "<u> <v>" per
// edge with 0 <= u < v < n, ASCII decimal, single separating space, LF line
// endings. Blank lines are permitted and ignored.
inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  long n = -1;
  std::vector<Edge> edges;
  auto is_number = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return !(s.size() > 1 && s[0] == '0');
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') throw ParseError(lineno, "CRLF line ending");
    if (line.empty()) continue;
    if (n < 0) {
      if (line.size() < 3 || line[0] != 'p' || line[1] != ' ')
        throw ParseError(lineno, "expected header 'p <n>'");
      std::string num = line.substr(2);
      if (!is_number(num)) throw ParseError(lineno, "bad vertex count");
      n = std::stol(num);
      continue;
    }
    size_t sp = line.find(' ');
    if (sp == std::string::npos || line.find(' ', sp + 1) != std::string::npos)
      throw ParseError(lineno, "expected '<u> <v>'");
    std::string a = line.substr(0, sp), b = line.substr(sp + 1);
    if (!is_number(a) || !is_number(b)) throw ParseError(lineno, "bad edge endpoint");
    long u = std::stol(a), v = std::stol(b);
    if (!(0 <= u && u < v && v < n)) throw ParseError(lineno, "edge endpoints must satisfy 0 <= u < v < n");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing header 'p <n>'");
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "p " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

// graph6 encoding for n <= 62: one byte n+63, then the upper triangle in
// column order (0,1),(0,2),(1,2),(0,3),... packed into 6-bit groups, each
// offset by 63.
inline std::string graph6_encode(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62) throw std::invalid_argument("graph6 writer supports n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bits = 0, value = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(value + 63));
        bits = 0;
        value = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
  return out;
}

inline Graph graph6_decode(const std::string& line, int lineno = 1) {
  std::string s = line;
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  if (s.empty()) throw ParseError(lineno, "empty graph6 string");
  if (s[0] == 126) throw ParseError(lineno, "graph6 reader supports n <= 62");
  int n = s[0] - 63;
  if (n < 0 || n > 62) throw ParseError(lineno, "bad graph6 vertex count byte");
  long need = (static_cast<long>(n) * (n - 1) / 2 + 5) / 6;
  if (static_cast<long>(s.size()) != 1 + need) throw ParseError(lineno, "graph6 string has wrong length");
  std::vector<Edge> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      char c = s[static_cast<size_t>(1 + bit / 6)];
      if (c < 63 || c > 126) throw ParseError(lineno, "bad graph6 byte");
      if ((c - 63) >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
      ++bit;
    }
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
}

// A graph file is an edge list when its first nonempty line starts with
// "p "; otherwise each nonempty line is a graph6 string and the first one
// is read.
inline Graph read_graph(std::istream& in) {
  std::string first;
  std::string line;
  int lineno = 0;
  std::vector<std::string> rest;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    first = line;
    break;
  }
  if (first.empty()) throw ParseError(lineno == 0 ? 1 : lineno, "empty graph file");
  if (first.rfind("p ", 0) == 0) {
    std::ostringstream whole;
    whole << first << '\n' << in.rdbuf();
    std::istringstream again(whole.str());
    return parse_edge_list(again);
  }
  return graph6_decode(first, lineno);
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace dcp
