#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "tlj/errors.hpp"

namespace tlj {

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }

/// Dense univariate polynomial over a field F, coefficients in ascending
/// degree.  Trailing zeros are never stored, so the zero polynomial has an
/// empty coefficient vector and degree -1.
///
/// F must provide + - * / and a free `is_zero(const F&)`.
template <class F>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit DensePoly(F constant) {
    if (!is_zero(constant)) c_.push_back(std::move(constant));
  }

  /// x^k with coefficient `lead`.
  static DensePoly monomial(std::size_t k, F lead, const F& zero) {
    std::vector<F> c(k + 1, zero);
    c[k] = std::move(lead);
    return DensePoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  const F& operator[](std::size_t i) const { return c_[i]; }
  const F& lead() const { return c_.back(); }

  /// Coefficient of x^i, or `zero` beyond the degree.
  F coeff(std::size_t i, const F& zero) const { return i < c_.size() ? c_[i] : zero; }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  DensePoly operator-() const {
    std::vector<F> c(c_);
    for (auto& x : c) x = -x;
    return DensePoly(std::move(c));
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    const DensePoly& lo = a.c_.size() < b.c_.size() ? a : b;
    const DensePoly& hi = a.c_.size() < b.c_.size() ? b : a;
    std::vector<F> c(hi.c_);
    for (std::size_t i = 0; i < lo.c_.size(); ++i) c[i] = c[i] + lo.c_[i];
    return DensePoly(std::move(c));
  }

  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.zero() || b.zero()) return DensePoly();
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, a.c_[0] - a.c_[0]);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(c));
  }

  DensePoly scaled(const F& s) const {
    if (is_zero(s)) return DensePoly();
    std::vector<F> c(c_);
    for (auto& x : c) x = x * s;
    return DensePoly(std::move(c));
  }

  /// Multiply by x^k.
  DensePoly shifted(std::size_t k) const {
    if (zero()) return *this;
    std::vector<F> c(k, c_[0] - c_[0]);
    c.insert(c.end(), c_.begin(), c_.end());
    return DensePoly(std::move(c));
  }

  /// Quotient and remainder; the divisor's leading coefficient must be invertible.
  std::pair<DensePoly, DensePoly> divmod(const DensePoly& div) const {
    if (div.zero()) throw DivisionByZero("polynomial division by zero");
    if (degree() < div.degree()) return {DensePoly(), *this};
    const F zero = c_[0] - c_[0];
    std::vector<F> rem(c_);
    std::vector<F> quo(c_.size() - div.c_.size() + 1, zero);
    const int dd = div.degree();
    for (int k = degree(); k >= dd; --k) {
      if (is_zero(rem[k])) continue;
      F q = rem[k] / div.lead();
      quo[k - dd] = q;
      for (int j = 0; j <= dd; ++j) rem[k - dd + j] = rem[k - dd + j] - q * div.c_[j];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {DensePoly(std::move(quo)), DensePoly(std::move(rem))};
  }

  DensePoly monic() const {
    if (zero()) return *this;
    F inv = (lead() / lead()) / lead();
    return scaled(inv);
  }

  F eval(const F& x, const F& zero) const {
    F acc = zero;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  DensePoly derivative() const {
    if (c_.size() <= 1) return DensePoly();
    std::vector<F> c;
    c.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      F k = c_[i];
      for (std::size_t j = 1; j < i; ++j) k = k + c_[i];
      c.push_back(k);
    }
    return DensePoly(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
DensePoly<F> poly_gcd(DensePoly<F> a, DensePoly<F> b) {
  while (!b.zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Inverse of `a` modulo `m`; throws DivisionByZero if they share a factor.
template <class F>
DensePoly<F> poly_inverse_mod(const DensePoly<F>& a, const DensePoly<F>& m) {
  // extended Euclid tracking only the coefficient of a
  DensePoly<F> r0 = m, r1 = a.divmod(m).second;
  DensePoly<F> s0, s1;
  if (r1.zero()) throw DivisionByZero("inverse of zero residue");
  s1 = DensePoly<F>(r1.lead() / r1.lead());
  while (r1.degree() > 0) {
    auto [q, r] = r0.divmod(r1);
    DensePoly<F> s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.zero()) throw DivisionByZero("residue is not invertible modulo the given polynomial");
  }
  // r1 is a nonzero constant c with s1 * a == c (mod m)
  F inv = (r1[0] / r1[0]) / r1[0];
  return s1.scaled(inv).divmod(m).second;
}

}  // namespace tlj
