#pragma once

#include <gmpxx.h>

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "tlj/errors.hpp"
#include "tlj/poly.hpp"

namespace tlj {

using QPoly = DensePoly<mpq_class>;

/// Laurent polynomial in the Kauffman variable A with rational coefficients,
/// stored as A^low * p(A) with p(0) != 0 (or p == 0 and low == 0).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int low, QPoly p);
  explicit LaurentPoly(mpq_class c);

  static LaurentPoly monomial(int exp, mpq_class c = 1);

  bool zero() const { return p_.zero(); }
  int low() const { return low_; }
  int high() const { return low_ + p_.degree(); }
  const QPoly& poly() const { return p_; }
  /// Coefficient of A^e.
  mpq_class coeff(int e) const;
  bool is_constant() const { return zero() || (low_ == 0 && p_.degree() == 0); }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const { return {low_, -p_}; }

  /// A -> A^{-1}.
  LaurentPoly bar() const;
  std::complex<double> eval(std::complex<double> a) const;

 private:
  int low_ = 0;
  QPoly p_;
};

/// Element of Q(A): numerator / denominator with the denominator a monic
/// polynomial with nonzero constant term, coprime to the numerator.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(LaurentPoly num);
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool zero() const { return num_.zero(); }
  bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }
  /// Rational value; only valid when is_constant().
  mpq_class constant() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction bar() const;
  std::complex<double> eval(std::complex<double> a) const;

 private:
  static RationalFunction make_reduced(LaurentPoly num, QPoly den);
  LaurentPoly num_;
  QPoly den_{mpq_class(1)};
};

/// The cyclotomic field Q[A]/(Phi_m(A)) together with the complex embedding
/// A -> exp(2 pi i t / m).  Instances are interned: two fields with the same
/// (m, t) are the same object.
class CycloField {
 public:
  static std::shared_ptr<const CycloField> get(int order, int t = 1);

  int order() const { return m_; }
  int embedding() const { return t_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  /// Coefficients of Phi_m, ascending.
  const std::vector<mpz_class>& modulus() const { return phi_; }
  /// Residue of A^k for any integer k.
  const std::vector<mpq_class>& power(long k) const;
  std::complex<double> generator_value() const { return zeta_; }
  /// Powers of the embedded generator, index k for A^k, k in [0, m).
  const std::vector<std::complex<double>>& embedded_powers() const { return zeta_pow_; }

  /// Reduce a dense product (length up to 2*degree-1) into a residue.
  void reduce(std::vector<mpq_class>& prod) const;

  CycloField(int order, int t);  // use get()

 private:
  int m_, t_;
  std::vector<mpz_class> phi_;
  std::vector<std::vector<mpq_class>> pow_;   // A^k mod Phi for k in [0, m)
  std::vector<std::vector<mpz_class>> high_;  // A^k mod Phi for k in [deg, 2 deg - 1)
  std::complex<double> zeta_;
  std::vector<std::complex<double>> zeta_pow_;
};

/// Coefficients of the m-th cyclotomic polynomial (memoized, thread-safe).
const std::vector<mpz_class>& cyclotomic_polynomial(int m);

using FieldPtr = std::shared_ptr<const CycloField>;

class CycloScalar {
 public:
  CycloScalar(FieldPtr f, std::vector<mpq_class> residue);
  static CycloScalar constant(FieldPtr f, const mpq_class& c);
  /// A^k.
  static CycloScalar generator_power(FieldPtr f, long k);

  const FieldPtr& field() const { return f_; }
  const std::vector<mpq_class>& residue() const { return c_; }
  bool zero() const;
  /// Rational value if the element lies in Q.
  std::optional<mpq_class> rational() const;

  friend bool operator==(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  CycloScalar operator-() const;
  CycloScalar inverse() const;
  /// Complex conjugation, the automorphism A -> A^{-1}.
  CycloScalar bar() const;
  /// Galois action A -> A^k, gcd(k, m) = 1.
  CycloScalar galois(long k) const;
  std::complex<double> embed() const;
  /// Image under Q(zeta_m) -> Q(zeta_M), A -> B^{M/m}; `target` order must be a multiple.
  CycloScalar lift(const FieldPtr& target) const;

 private:
  void check_same(const CycloScalar& o) const;
  FieldPtr f_;
  std::vector<mpq_class> c_;
};

/// An exact scalar: either an element of Q(A) or of a cyclotomic field.
/// Arithmetic is closed within a kind; rational constants of the Q(A) kind
/// promote into any cyclotomic field.  Mixing two different cyclotomic
/// fields, or a non-constant element of Q(A) with a cyclotomic one, throws
/// FieldMismatch.
class Scalar {
 public:
  Scalar() : v_(RationalFunction()) {}
  Scalar(int c) : v_(RationalFunction(LaurentPoly(mpq_class(c)))) {}  // NOLINT
  Scalar(const mpq_class& c) : v_(RationalFunction(LaurentPoly(c))) {}  // NOLINT
  Scalar(RationalFunction f) : v_(std::move(f)) {}                     // NOLINT
  Scalar(CycloScalar c) : v_(std::move(c)) {}                          // NOLINT

  /// The formal variable A of Q(A).
  static Scalar variable();
  /// The generator A of the given cyclotomic field.
  static Scalar generator(const FieldPtr& f);

  bool is_cyclotomic() const { return std::holds_alternative<CycloScalar>(v_); }
  const RationalFunction& as_rational_function() const { return std::get<RationalFunction>(v_); }
  const CycloScalar& as_cyclotomic() const { return std::get<CycloScalar>(v_); }
  /// Field of a cyclotomic scalar, null for Q(A).
  FieldPtr field() const;

  bool is_zero() const;
  bool is_one() const;
  /// Rational value if the scalar is a rational constant.
  std::optional<mpq_class> rational() const;
  /// Integer value if the scalar is an integer constant.
  std::optional<mpz_class> integer() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(long k) const;
  /// Conjugation: A -> A^{-1} on Q(A), complex conjugation on cyclotomic fields.
  Scalar bar() const;
  /// Complex value.  Cyclotomic scalars use the field's embedding; Q(A)
  /// scalars must be constant unless `a` is supplied.
  std::complex<double> approx() const;
  std::complex<double> approx_at(std::complex<double> a) const;
  bool has_approx() const;

  /// Debug/text form, e.g. "A^2 + 1 - A^-2" or "[m=16] 1 + A".
  std::string to_string() const;

 private:
  std::variant<RationalFunction, CycloScalar> v_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// Chebyshev polynomial Delta_n evaluated at x: Delta_0 = 1, Delta_1 = x,
/// Delta_{n+1} = x Delta_n - Delta_{n-1}.
Scalar chebyshev(int n, const Scalar& x);

/// Chebyshev polynomial Delta_n(x) as a dense integer polynomial.
DensePoly<mpq_class> chebyshev_poly(int n);

/// Quantum integer [n]_A = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}).
Scalar quantum_int(int n, const Scalar& a);

/// Loop value d = -A^2 - A^{-2}.
Scalar loop_value(const Scalar& a);

/// Build the cyclotomic parameter context A = exp(2 pi i t / m).
FieldPtr cyclotomic_construct(int m, int t);

nlohmann::json to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

}  // namespace tlj
