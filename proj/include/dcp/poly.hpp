#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dcp/bigint.hpp"
#include "dcp/errors.hpp"

namespace dcp {

// Dense univariate polynomial over the integers, coefficients in ascending
// degree, normalized so the last stored coefficient is nonzero. The zero
// polynomial stores nothing and has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static IntPoly zero() { return IntPoly(); }

  static IntPoly constant(BigInt v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
  }

  static IntPoly monomial(int degree, BigInt coeff = 1) {
    IntPoly p;
    if (coeff != 0) {
      p.c_.assign(static_cast<size_t>(degree) + 1, BigInt(0));
      p.c_.back() = std::move(coeff);
    }
    return p;
  }

  // The variable itself.
  static IntPoly var() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // Coefficient of x^i; zero outside the stored range.
  BigInt coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(i)];
  }

  const std::vector<BigInt>& coeffs() const { return c_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPoly(std::move(r));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPoly(std::move(r));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
  }

  friend IntPoly operator*(const BigInt& s, const IntPoly& p) {
    if (s == 0) return zero();
    std::vector<BigInt> r = p.c_;
    for (auto& c : r) c *= s;
    return IntPoly(std::move(r));
  }

  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  IntPoly pow(unsigned e) const {
    IntPoly r = constant(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  // Horner evaluation.
  BigInt eval(const BigInt& x) const {
    BigInt r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  bool operator==(const IntPoly&) const = default;

  // {"var":"k","coeffs":[c0,...,cn]}; exact decimal integers.
  std::string to_json(const std::string& var_name) const {
    std::ostringstream os;
    os << "{\"var\":\"" << var_name << "\",\"coeffs\":[";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) os << ',';
      os << c_[i].get_str();
    }
    os << "]}";
    return os.str();
  }

  // Human-readable form, highest degree first, e.g. "k^9 - 11*k^7 + 4".
  std::string to_pretty(const std::string& var_name) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const BigInt& c = c_[static_cast<size_t>(i)];
      if (c == 0) continue;
      BigInt a = abs(c);
      if (first) {
        if (c < 0) os << '-';
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (a != 1 || i == 0) {
        os << a.get_str();
        if (i > 0) os << '*';
      }
      if (i > 0) {
        os << var_name;
        if (i > 1) os << '^' << i;
      }
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

// Coefficients c_0..c_{n-1} of an order-n tree expansion, indexed by the
// number r of contracted edges.
using CoeffArray = std::vector<BigInt>;

// k(k-1)^{n-r-1}, the chromatic polynomial of a tree on n-r vertices.
inline IntPoly tree_basis_element(int n, int r) {
  IntPoly km1(std::vector<BigInt>{-1, 1});
  return IntPoly::var() * km1.pow(static_cast<unsigned>(n - r - 1));
}

// Sum_r c[r] * k(k-1)^{n-r-1}.
inline IntPoly tree_basis_expand(const CoeffArray& c, int n) {
  IntPoly acc;
  for (int r = 0; r < static_cast<int>(c.size()); ++r) {
    if (c[static_cast<size_t>(r)] == 0) continue;
    acc += c[static_cast<size_t>(r)] * tree_basis_element(n, r);
  }
  return acc;
}

// Inverse of tree_basis_expand: the basis elements have distinct degrees
// n-r, so the coefficients are read off by peeling leading terms. Throws
// NotInSpanError when p(0) != 0, deg p > n, or a remainder survives.
inline CoeffArray tree_basis_coeffs(const IntPoly& p, int n) {
  if (p.coeff(0) != 0) throw NotInSpanError("p(0) != 0");
  if (p.degree() > n) throw NotInSpanError("degree exceeds n");
  CoeffArray c(static_cast<size_t>(n), BigInt(0));
  IntPoly rem = p;
  for (int r = 0; r < n; ++r) {
    BigInt lead = rem.coeff(n - r);
    if (lead == 0) continue;
    c[static_cast<size_t>(r)] = lead;
    rem -= lead * tree_basis_element(n, r);
  }
  if (!rem.is_zero()) throw NotInSpanError("nonzero remainder after last basis element");
  return c;
}

}  // namespace dcp
