#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcp/bigint.hpp"
#include "dcp/poly.hpp"

namespace dcp {

// Sparse multivariate polynomial with a fixed arity (2 for the DPT
// polynomial, 3 for the GDP). Terms map exponent tuples to nonzero
// coefficients; the map order is lexicographic, which is also the emission
// order.
class MPoly {
 public:
  explicit MPoly(int arity) : arity_(arity) {
    if (arity < 1) throw std::invalid_argument("MPoly arity must be positive");
  }

  static MPoly constant(int arity, BigInt v) {
    MPoly p(arity);
    p.add_term(std::vector<int>(static_cast<size_t>(arity), 0), std::move(v));
    return p;
  }

  static MPoly var(int arity, int index) {
    if (index < 0 || index >= arity) throw std::invalid_argument("variable index out of range");
    MPoly p(arity);
    std::vector<int> e(static_cast<size_t>(arity), 0);
    e[static_cast<size_t>(index)] = 1;
    p.add_term(std::move(e), 1);
    return p;
  }

  int arity() const { return arity_; }
  const std::map<std::vector<int>, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<int> exps, BigInt c) {
    if (static_cast<int>(exps.size()) != arity_)
      throw std::invalid_argument("exponent tuple arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_.emplace(std::move(exps), std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    a.check_arity(b);
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_arity(b);
    MPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e(ea);
        for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }

  friend MPoly operator*(const BigInt& s, const MPoly& p) {
    MPoly r(p.arity_);
    if (s == 0) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
    return r;
  }

  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly pow(unsigned e) const {
    MPoly r = constant(arity_, 1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  BigInt eval(const std::vector<BigInt>& point) const {
    if (static_cast<int>(point.size()) != arity_)
      throw std::invalid_argument("evaluation point arity mismatch");
    BigInt total = 0;
    for (const auto& [e, c] : terms_) {
      BigInt t = c;
      for (size_t i = 0; i < point.size(); ++i)
        t *= big_pow(point[i], static_cast<unsigned long>(e[i]));
      total += t;
    }
    return total;
  }

  // Identify the second variable with the first: collapses an arity-2
  // polynomial to a univariate one (exponent (i,j) contributes at i+j).
  IntPoly substitute_equal() const {
    if (arity_ != 2) throw std::invalid_argument("substitute_equal requires arity 2");
    int maxdeg = 0;
    for (const auto& [e, c] : terms_) maxdeg = std::max(maxdeg, e[0] + e[1]);
    std::vector<BigInt> coeffs(static_cast<size_t>(maxdeg) + 1, BigInt(0));
    for (const auto& [e, c] : terms_) coeffs[static_cast<size_t>(e[0] + e[1])] += c;
    return IntPoly(std::move(coeffs));
  }

  bool operator==(const MPoly&) const = default;

  // {"vars":["x","y"],"terms":[[[i,j],c],...]} sorted lexicographically by
  // exponent tuple (the map order).
  std::string to_json(const std::vector<std::string>& var_names) const {
    std::ostringstream os;
    os << "{\"vars\":[";
    for (size_t i = 0; i < var_names.size(); ++i) {
      if (i) os << ',';
      os << '"' << var_names[i] << '"';
    }
    os << "],\"terms\":[";
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << ',';
      first = false;
      os << "[[";
      for (size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
      }
      os << "]," << c.get_str() << ']';
    }
    os << "]}";
    return os.str();
  }

 private:
  void check_arity(const MPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("MPoly arity mismatch");
  }

  int arity_;
  std::map<std::vector<int>, BigInt> terms_;
};

}  // namespace dcp
