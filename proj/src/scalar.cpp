#include "tlj/scalar.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace tlj {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(int low, QPoly p) : low_(low), p_(std::move(p)) {
  if (p_.zero()) {
    low_ = 0;
    return;
  }
  // strip factors of A into the exponent
  std::size_t k = 0;
  while (is_zero(p_[k])) ++k;
  if (k > 0) {
    std::vector<mpq_class> c(p_.coeffs().begin() + static_cast<long>(k), p_.coeffs().end());
    p_ = QPoly(std::move(c));
    low_ += static_cast<int>(k);
  }
}

LaurentPoly::LaurentPoly(mpq_class c) : LaurentPoly(0, QPoly(std::move(c))) {}

LaurentPoly LaurentPoly::monomial(int exp, mpq_class c) { return LaurentPoly(exp, QPoly(std::move(c))); }

mpq_class LaurentPoly::coeff(int e) const {
  if (zero() || e < low_ || e > high()) return 0;
  return p_[static_cast<std::size_t>(e - low_)];
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  int lo = std::min(a.low_, b.low_);
  QPoly pa = a.p_.shifted(static_cast<std::size_t>(a.low_ - lo));
  QPoly pb = b.p_.shifted(static_cast<std::size_t>(b.low_ - lo));
  return LaurentPoly(lo, pa + pb);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.zero() || b.zero()) return {};
  return LaurentPoly(a.low_ + b.low_, a.p_ * b.p_);
}

LaurentPoly LaurentPoly::bar() const {
  if (zero()) return *this;
  std::vector<mpq_class> c(p_.coeffs().rbegin(), p_.coeffs().rend());
  return LaurentPoly(-high(), QPoly(std::move(c)));
}

std::complex<double> LaurentPoly::eval(std::complex<double> a) const {
  std::complex<double> acc = 0;
  for (std::size_t i = p_.coeffs().size(); i-- > 0;) acc = acc * a + p_[i].get_d();
  return acc * std::pow(a, low_);
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(LaurentPoly num) : num_(std::move(num)) {}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.zero()) throw DivisionByZero("rational function with zero denominator");
  // num / (A^low * p) = (A^-low * num) / p
  LaurentPoly shifted = num * LaurentPoly::monomial(-den.low());
  *this = make_reduced(std::move(shifted), den.poly());
}

RationalFunction RationalFunction::make_reduced(LaurentPoly num, QPoly den) {
  RationalFunction out;
  if (num.zero()) return out;
  if (den.degree() > 0) {
    QPoly g = poly_gcd(num.poly(), den);
    if (g.degree() > 0) {
      num = LaurentPoly(num.low(), num.poly().divmod(g).first);
      den = den.divmod(g).first;
    }
  }
  mpq_class lead = den.lead();
  if (lead != 1) {
    mpq_class inv = 1 / lead;
    num = num * LaurentPoly(inv);
    den = den.scaled(inv);
  }
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

mpq_class RationalFunction::constant() const {
  if (num_.zero()) return 0;
  return num_.poly()[0] / den_[0];
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  if (a.den_ == b.den_) {
    LaurentPoly n = a.num_ + b.num_;
    if (a.den_.degree() == 0) {
      RationalFunction r;
      r.num_ = std::move(n);
      return r;
    }
    return RationalFunction::make_reduced(std::move(n), a.den_);
  }
  LaurentPoly n = a.num_ * LaurentPoly(0, b.den_) + b.num_ * LaurentPoly(0, a.den_);
  return RationalFunction::make_reduced(std::move(n), a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.zero() || b.zero()) return {};
  if (a.den_.degree() == 0 && b.den_.degree() == 0) {
    RationalFunction r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  // cross-cancel before multiplying to keep degrees down
  QPoly g1 = b.den_.degree() > 0 ? poly_gcd(a.num_.poly(), b.den_) : QPoly(mpq_class(1));
  QPoly g2 = a.den_.degree() > 0 ? poly_gcd(b.num_.poly(), a.den_) : QPoly(mpq_class(1));
  LaurentPoly na(a.num_.low(), a.num_.poly().divmod(g1).first);
  LaurentPoly nb(b.num_.low(), b.num_.poly().divmod(g2).first);
  QPoly da = a.den_.divmod(g2).first;
  QPoly db = b.den_.divmod(g1).first;
  RationalFunction r;
  r.num_ = na * nb;
  r.den_ = da * db;
  mpq_class lead = r.den_.lead();
  if (lead != 1) {
    mpq_class inv = 1 / lead;
    r.num_ = r.num_ * LaurentPoly(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (zero()) throw DivisionByZero("inverse of zero in Q(A)");
  // (A^l p) / q  ->  (A^-l q) / p
  return make_reduced(LaurentPoly(-num_.low(), den_), num_.poly());
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::bar() const {
  if (zero()) return *this;
  return RationalFunction(num_.bar(), LaurentPoly(0, den_).bar());
}

std::complex<double> RationalFunction::eval(std::complex<double> a) const {
  return num_.eval(a) / LaurentPoly(0, den_).eval(a);
}

// ---------------------------------------------------------------------------
// Cyclotomic fields

const std::vector<mpz_class>& cyclotomic_polynomial(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<mpz_class>> memo;
  if (m < 1) throw InvalidRoot("cyclotomic order must be positive");
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(m); it != memo.end()) return it->second;
  }
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  std::vector<mpq_class> num(static_cast<std::size_t>(m) + 1, mpq_class(0));
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  QPoly p(std::move(num));
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& fd = cyclotomic_polynomial(d);
    std::vector<mpq_class> c(fd.begin(), fd.end());
    auto [q, r] = p.divmod(QPoly(std::move(c)));
    if (!r.zero()) throw Error("cyclotomic division left a remainder");
    p = std::move(q);
  }
  std::vector<mpz_class> out;
  for (const auto& c : p.coeffs()) out.emplace_back(c.get_num());
  std::lock_guard lock(mu);
  return memo.emplace(m, std::move(out)).first->second;
}

CycloField::CycloField(int order, int t) : m_(order), t_(t), phi_(cyclotomic_polynomial(order)) {
  const int deg = degree();
  std::vector<mpq_class> cur(static_cast<std::size_t>(deg), mpq_class(0));
  // A^k residues by repeated multiplication by A
  auto times_a = [&](const std::vector<mpq_class>& v) {
    std::vector<mpq_class> out(static_cast<std::size_t>(deg), mpq_class(0));
    mpq_class top = v[static_cast<std::size_t>(deg - 1)];
    for (int i = deg - 1; i > 0; --i) out[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i - 1)];
    // A^deg = -sum_{i<deg} phi_i A^i
    for (int i = 0; i < deg; ++i) out[static_cast<std::size_t>(i)] -= top * phi_[static_cast<std::size_t>(i)];
    return out;
  };
  cur[0] = 1;
  pow_.reserve(static_cast<std::size_t>(m_));
  for (int k = 0; k < std::max(m_, 2 * deg - 1); ++k) {
    if (k < m_) pow_.push_back(cur);
    if (k >= deg && k < 2 * deg - 1) {
      std::vector<mpz_class> z;
      for (const auto& c : cur) z.emplace_back(c.get_num());
      high_.push_back(std::move(z));
    }
    cur = times_a(cur);
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(t_) / static_cast<double>(m_);
  zeta_ = std::polar(1.0, angle);
  zeta_pow_.reserve(static_cast<std::size_t>(m_));
  for (int k = 0; k < m_; ++k) {
    double a = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(t_) * k) % m_) / m_;
    zeta_pow_.push_back(std::polar(1.0, a));
  }
}

FieldPtr CycloField::get(int order, int t) {
  if (order < 1) throw InvalidRoot("cyclotomic order must be positive");
  t = ((t % order) + order) % order;
  if (std::gcd(t, order) != 1) {
    throw InvalidRoot("embedding exponent " + std::to_string(t) + " is not coprime to " + std::to_string(order));
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, FieldPtr> interned;
  {
    std::lock_guard lock(mu);
    if (auto it = interned.find({order, t}); it != interned.end()) return it->second;
  }
  auto f = std::make_shared<const CycloField>(order, t);
  std::lock_guard lock(mu);
  return interned.emplace(std::make_pair(order, t), f).first->second;
}

FieldPtr cyclotomic_construct(int m, int t) { return CycloField::get(m, t); }

const std::vector<mpq_class>& CycloField::power(long k) const {
  long r = ((k % m_) + m_) % m_;
  return pow_[static_cast<std::size_t>(r)];
}

void CycloField::reduce(std::vector<mpq_class>& prod) const {
  const auto deg = static_cast<std::size_t>(degree());
  for (std::size_t k = deg; k < prod.size(); ++k) {
    if (is_zero(prod[k])) continue;
    const auto& h = high_[k - deg];
    for (std::size_t i = 0; i < deg; ++i) {
      if (!is_zero(h[i])) prod[i] += prod[k] * h[i];
    }
  }
  prod.resize(deg, mpq_class(0));
}

// ---------------------------------------------------------------------------
// CycloScalar

CycloScalar::CycloScalar(FieldPtr f, std::vector<mpq_class> residue) : f_(std::move(f)), c_(std::move(residue)) {
  const auto deg = static_cast<std::size_t>(f_->degree());
  if (c_.size() > deg) {
    f_->reduce(c_);
  } else {
    c_.resize(deg, mpq_class(0));
  }
}

CycloScalar CycloScalar::constant(FieldPtr f, const mpq_class& c) {
  std::vector<mpq_class> v(static_cast<std::size_t>(f->degree()), mpq_class(0));
  v[0] = c;
  return CycloScalar(std::move(f), std::move(v));
}

CycloScalar CycloScalar::generator_power(FieldPtr f, long k) {
  auto v = f->power(k);
  return CycloScalar(std::move(f), std::move(v));
}

bool CycloScalar::zero() const {
  for (const auto& c : c_)
    if (!is_zero(c)) return false;
  return true;
}

std::optional<mpq_class> CycloScalar::rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!is_zero(c_[i])) return std::nullopt;
  return c_[0];
}

void CycloScalar::check_same(const CycloScalar& o) const {
  if (f_ != o.f_) {
    throw FieldMismatch("cyclotomic fields differ: order " + std::to_string(f_->order()) + "/t=" +
                        std::to_string(f_->embedding()) + " vs order " + std::to_string(o.f_->order()) +
                        "/t=" + std::to_string(o.f_->embedding()));
  }
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
  a.check_same(b);
  std::vector<mpq_class> c(a.c_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return CycloScalar(a.f_, std::move(c));
}

CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) {
  a.check_same(b);
  std::vector<mpq_class> c(a.c_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
  return CycloScalar(a.f_, std::move(c));
}

CycloScalar CycloScalar::operator-() const {
  std::vector<mpq_class> c(c_);
  for (auto& x : c) x = -x;
  return CycloScalar(f_, std::move(c));
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  a.check_same(b);
  const std::size_t n = a.c_.size();
  std::vector<mpq_class> prod(2 * n - 1, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(b.c_[j])) prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  a.f_->reduce(prod);
  return CycloScalar(a.f_, std::move(prod));
}

CycloScalar CycloScalar::inverse() const {
  if (zero()) throw DivisionByZero("inverse of zero in cyclotomic field");
  std::vector<mpq_class> phi(f_->modulus().begin(), f_->modulus().end());
  QPoly inv = poly_inverse_mod(QPoly(c_), QPoly(std::move(phi)));
  return CycloScalar(f_, inv.coeffs());
}

CycloScalar CycloScalar::galois(long k) const {
  if (std::gcd(k, static_cast<long>(f_->order())) != 1) throw InvalidRoot("Galois exponent not coprime to order");
  std::vector<mpq_class> out(c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (is_zero(c_[i])) continue;
    const auto& p = f_->power(k * static_cast<long>(i));
    for (std::size_t j = 0; j < out.size(); ++j)
      if (!is_zero(p[j])) out[j] += c_[i] * p[j];
  }
  return CycloScalar(f_, std::move(out));
}

CycloScalar CycloScalar::bar() const { return galois(-1); }

std::complex<double> CycloScalar::embed() const {
  std::complex<double> acc = 0;
  const auto& zp = f_->embedded_powers();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!is_zero(c_[i])) acc += c_[i].get_d() * zp[i % zp.size()];
  }
  return acc;
}

CycloScalar CycloScalar::lift(const FieldPtr& target) const {
  if (target->order() % f_->order() != 0) throw FieldMismatch("lift target order is not a multiple");
  const long step = target->order() / f_->order();
  std::vector<mpq_class> out(static_cast<std::size_t>(target->degree()), mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (is_zero(c_[i])) continue;
    const auto& p = target->power(step * static_cast<long>(i));
    for (std::size_t j = 0; j < out.size(); ++j)
      if (!is_zero(p[j])) out[j] += c_[i] * p[j];
  }
  return CycloScalar(target, std::move(out));
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

CycloScalar promote(const RationalFunction& r, const FieldPtr& f) {
  if (!r.is_constant()) {
    throw FieldMismatch("cannot combine a non-constant element of Q(A) with a cyclotomic scalar");
  }
  return CycloScalar::constant(f, r.constant());
}

template <class Op>
Scalar binary(const Scalar& a, const Scalar& b, Op op) {
  if (!a.is_cyclotomic() && !b.is_cyclotomic()) return Scalar(op(a.as_rational_function(), b.as_rational_function()));
  if (a.is_cyclotomic() && b.is_cyclotomic()) return Scalar(op(a.as_cyclotomic(), b.as_cyclotomic()));
  if (a.is_cyclotomic()) return Scalar(op(a.as_cyclotomic(), promote(b.as_rational_function(), a.field())));
  return Scalar(op(promote(a.as_rational_function(), b.field()), b.as_cyclotomic()));
}

}  // namespace

Scalar Scalar::variable() { return Scalar(RationalFunction(LaurentPoly::monomial(1))); }

Scalar Scalar::generator(const FieldPtr& f) { return Scalar(CycloScalar::generator_power(f, 1)); }

FieldPtr Scalar::field() const { return is_cyclotomic() ? as_cyclotomic().field() : nullptr; }

bool Scalar::is_zero() const {
  return is_cyclotomic() ? as_cyclotomic().zero() : as_rational_function().zero();
}

bool Scalar::is_one() const {
  auto q = rational();
  return q && *q == 1;
}

std::optional<mpq_class> Scalar::rational() const {
  if (is_cyclotomic()) return as_cyclotomic().rational();
  const auto& r = as_rational_function();
  if (!r.is_constant()) return std::nullopt;
  return r.constant();
}

std::optional<mpz_class> Scalar::integer() const {
  auto q = rational();
  if (!q || q->get_den() != 1) return std::nullopt;
  return mpz_class(q->get_num());
}

bool operator==(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x - y; }).is_zero();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

Scalar Scalar::inverse() const {
  return std::visit([](const auto& x) { return Scalar(x.inverse()); }, v_);
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar base = *this;
  Scalar acc = is_cyclotomic() ? Scalar(CycloScalar::constant(field(), 1)) : Scalar(1);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

Scalar Scalar::bar() const {
  return std::visit([](const auto& x) { return Scalar(x.bar()); }, v_);
}

bool Scalar::has_approx() const { return is_cyclotomic() || as_rational_function().is_constant(); }

std::complex<double> Scalar::approx() const {
  if (is_cyclotomic()) return as_cyclotomic().embed();
  const auto& r = as_rational_function();
  if (!r.is_constant()) throw InvalidParameters("no complex embedding for a non-constant element of Q(A)");
  return r.constant().get_d();
}

std::complex<double> Scalar::approx_at(std::complex<double> a) const {
  if (is_cyclotomic()) return as_cyclotomic().embed();
  return as_rational_function().eval(a);
}

namespace {

std::string term_text(const mpq_class& c, int e, bool first) {
  std::ostringstream os;
  mpq_class mag = abs(c);
  if (!first) os << (sgn(c) < 0 ? " - " : " + ");
  else if (sgn(c) < 0) os << "-";
  bool unit = mag == 1;
  if (!unit || e == 0) os << mag.get_str();
  if (e != 0) {
    if (!unit) os << "*";
    os << "A";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string laurent_text(const LaurentPoly& p) {
  if (p.zero()) return "0";
  std::string s;
  bool first = true;
  for (int e = p.high(); e >= p.low(); --e) {
    mpq_class c = p.coeff(e);
    if (is_zero(c)) continue;
    s += term_text(c, e, first);
    first = false;
  }
  return s;
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_cyclotomic()) {
    const auto& c = as_cyclotomic();
    std::vector<mpq_class> v(c.residue());
    return "[m=" + std::to_string(c.field()->order()) + "] " + laurent_text(LaurentPoly(0, QPoly(std::move(v))));
  }
  const auto& r = as_rational_function();
  std::string n = laurent_text(r.num());
  if (r.den().degree() == 0) return n;
  return "(" + n + ") / (" + laurent_text(LaurentPoly(0, r.den())) + ")";
}

// ---------------------------------------------------------------------------

Scalar chebyshev(int n, const Scalar& x) {
  if (n < 0) throw InvalidParameters("chebyshev index must be nonnegative");
  Scalar prev = 1;
  if (n == 0) return x.is_cyclotomic() ? Scalar(CycloScalar::constant(x.field(), 1)) : prev;
  Scalar cur = x;
  for (int k = 1; k < n; ++k) {
    Scalar next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

DensePoly<mpq_class> chebyshev_poly(int n) {
  QPoly prev(mpq_class(1));
  if (n == 0) return prev;
  QPoly x(std::vector<mpq_class>{0, 1});
  QPoly cur = x;
  for (int k = 1; k < n; ++k) {
    QPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Scalar quantum_int(int n, const Scalar& a) {
  Scalar a2 = a * a;
  Scalar denom = a2 - a2.inverse();
  if (denom.is_zero()) throw DegenerateParameter("quantum integer undefined: A^4 = 1");
  Scalar an = a2.pow(n);
  return (an - an.inverse()) / denom;
}

Scalar loop_value(const Scalar& a) {
  Scalar a2 = a * a;
  return -a2 - a2.inverse();
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw ParseError("expected an integer");
}

nlohmann::json coeff_list(const LaurentPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  if (p.zero()) return arr;
  for (int e = p.low(); e <= p.high(); ++e) {
    mpq_class c = p.coeff(e);
    if (is_zero(c)) continue;
    arr.push_back({e, integer_json(c.get_num()), integer_json(c.get_den())});
  }
  return arr;
}

LaurentPoly coeff_list_from_json(const nlohmann::json& arr) {
  LaurentPoly out;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 3) throw ParseError("coefficient entries are [exp, num, den]");
    mpq_class c(integer_from_json(t[1]), integer_from_json(t[2]));
    c.canonicalize();
    out = out + LaurentPoly::monomial(t[0].get<int>(), c);
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const Scalar& s) {
  nlohmann::json j;
  if (s.is_cyclotomic()) {
    const auto& c = s.as_cyclotomic();
    std::vector<mpq_class> v(c.residue());
    j["kind"] = "cyclotomic";
    j["order"] = c.field()->order();
    j["embedding"] = c.field()->embedding();
    j["numerator"] = coeff_list(LaurentPoly(0, QPoly(std::move(v))));
  } else {
    const auto& r = s.as_rational_function();
    j["kind"] = "rational_function";
    j["numerator"] = coeff_list(r.num());
    j["denominator"] = coeff_list(LaurentPoly(0, r.den()));
  }
  if (s.has_approx()) {
    auto z = s.approx();
    j["approx"] = {z.real(), z.imag()};
  } else {
    j["approx"] = nullptr;
  }
  return j;
}

Scalar scalar_from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    LaurentPoly num = coeff_list_from_json(j.at("numerator"));
    if (kind == "cyclotomic") {
      int t = j.contains("embedding") ? j["embedding"].get<int>() : 1;
      FieldPtr f = CycloField::get(j.at("order").get<int>(), t);
      if (!num.zero() && num.low() < 0) throw ParseError("cyclotomic residue exponents must be nonnegative");
      std::vector<mpq_class> v(static_cast<std::size_t>(num.zero() ? 0 : num.high() + 1), mpq_class(0));
      for (std::size_t e = 0; e < v.size(); ++e) v[e] = num.coeff(static_cast<int>(e));
      std::vector<mpq_class> padded(static_cast<std::size_t>(f->degree()), mpq_class(0));
      if (v.size() > padded.size()) {
        // tolerate unreduced input
        v.resize(std::max<std::size_t>(v.size(), 2 * padded.size() - 1), mpq_class(0));
        CycloScalar acc = CycloScalar::constant(f, 0);
        for (std::size_t e = 0; e < v.size(); ++e)
          if (!is_zero(v[e])) acc = acc + CycloScalar::generator_power(f, static_cast<long>(e)) * CycloScalar::constant(f, v[e]);
        return Scalar(acc);
      }
      std::copy(v.begin(), v.end(), padded.begin());
      return Scalar(CycloScalar(f, std::move(padded)));
    }
    if (kind == "rational_function") {
      LaurentPoly den = coeff_list_from_json(j.at("denominator"));
      return Scalar(RationalFunction(num, den));
    }
    throw ParseError("unknown scalar kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed scalar JSON: ") + e.what());
  }
}

}  // namespace tlj
