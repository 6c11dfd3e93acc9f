#include "tlj/tl.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <atomic>
#include <mutex>
#include <numeric>
#include <regex>
#include <sstream>

namespace tlj {

// ---------------------------------------------------------------------------
// SkeinContext

namespace {

std::atomic<std::uint64_t> next_context_id{1};
constexpr int kPrecomputedPowers = 33;

Scalar unit_like(const Scalar& x) { return x - x + Scalar(1); }

}  // namespace

SkeinContext::SkeinContext(std::optional<Scalar> a, Scalar d)
    : a_(std::move(a)), d_(std::move(d)), one_(unit_like(d_)), id_(next_context_id++) {
  d_pow_.reserve(kPrecomputedPowers);
  d_pow_.push_back(one_);
  for (int k = 1; k < kPrecomputedPowers; ++k) d_pow_.push_back(d_pow_.back() * d_);
}

ContextPtr SkeinContext::generic() {
  static const ContextPtr ctx = with_a(Scalar::variable());
  return ctx;
}

ContextPtr SkeinContext::at_root(int m, int t) { return with_a(Scalar::generator(cyclotomic_construct(m, t))); }

ContextPtr SkeinContext::with_a(Scalar a) {
  Scalar d = loop_value(a);
  return std::make_shared<const SkeinContext>(std::move(a), std::move(d));
}

ContextPtr SkeinContext::with_loop_value(Scalar d) {
  return std::make_shared<const SkeinContext>(std::nullopt, std::move(d));
}

const Scalar& SkeinContext::a() const {
  if (!a_) throw InvalidParameters("this context fixes only the loop value, not A");
  return *a_;
}

const Scalar& SkeinContext::d_power(int k) const {
  if (k < 0) throw InvalidParameters("negative loop count");
  if (k < kPrecomputedPowers) return d_pow_[static_cast<std::size_t>(k)];
  thread_local std::map<std::pair<std::uint64_t, int>, Scalar> extra;
  auto key = std::make_pair(id_, k);
  auto it = extra.find(key);
  if (it == extra.end()) it = extra.emplace(key, d_.pow(k)).first;
  return it->second;
}

std::pair<int, int> unitary_root(int r, int s1, int s2) {
  if (r < 3) throw InvalidParameters("r must be at least 3");
  const int n = 4 * r;
  int k = (s1 > 0 ? r : 3 * r) + (s2 > 0 ? 1 : -1);
  k = ((k % n) + n) % n;
  const int g = std::gcd(k, n);
  return {n / g, k / g};
}

// ---------------------------------------------------------------------------
// diagrams

namespace {

void check_involution(int bottom, int top, const Matching& m) {
  if (bottom < 0 || top < 0) throw InvalidParameters("negative boundary count");
  if ((bottom + top) % 2 != 0) throw InvalidParameters("bottom + top must be even");
  if (static_cast<int>(m.size()) != bottom + top) throw InvalidParameters("matching has the wrong size");
  for (int p = 0; p < bottom + top; ++p) {
    int q = m[static_cast<std::size_t>(p)];
    if (q < 0 || q >= bottom + top || q == p || m[static_cast<std::size_t>(q)] != p) {
      throw InvalidParameters("matching is not a fixed-point-free involution");
    }
  }
}

// position of a boundary point in the rectangle's cyclic order
int cyclic_position(int bottom, int top, int p) { return p < bottom ? p : bottom + (top - 1 - (p - bottom)); }

}  // namespace

bool is_planar(int bottom, int top, const Matching& m) {
  const int n = bottom + top;
  std::vector<std::pair<int, int>> arcs;
  for (int p = 0; p < n; ++p) {
    int q = m[static_cast<std::size_t>(p)];
    int a = cyclic_position(bottom, top, p), b = cyclic_position(bottom, top, q);
    if (a < b) arcs.emplace_back(a, b);
  }
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      auto [a, b] = arcs[i];
      auto [c, d] = arcs[j];
      if (a < c && c < b && b < d) return false;
    }
  return true;
}

TLDiagram::TLDiagram(int bottom, int top, Matching m, int loops)
    : bottom_(bottom), top_(top), m_(std::move(m)), loops_(loops) {
  check_involution(bottom_, top_, m_);
  if (loops_ < 0) throw InvalidParameters("negative loop count");
  if (!is_planar(bottom_, top_, m_)) throw InvalidParameters("matching is not planar");
}

std::string TLDiagram::text() const {
  std::ostringstream os;
  os << bottom_ << ';' << top_ << ";[";
  bool first = true;
  for (int p = 0; p < bottom_ + top_; ++p) {
    int q = m_[static_cast<std::size_t>(p)];
    if (q < p) continue;
    if (!first) os << ',';
    os << '(' << p + 1 << ',' << q + 1 << ')';
    first = false;
  }
  os << "];loops=" << loops_;
  return os.str();
}

TLDiagram TLDiagram::parse(const std::string& s) {
  static const std::regex whole(R"(^\s*(\d+);(\d+);\[(.*)\];loops=(\d+)\s*$)");
  static const std::regex pair(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::smatch mm;
  if (!std::regex_match(s, mm, whole)) throw ParseError("bad diagram text: " + s);
  const int b = std::stoi(mm[1]), t = std::stoi(mm[2]), loops = std::stoi(mm[4]);
  Matching m(static_cast<std::size_t>(b + t), -1);
  const std::string body = mm[3];
  for (auto it = std::sregex_iterator(body.begin(), body.end(), pair); it != std::sregex_iterator(); ++it) {
    int p = std::stoi((*it)[1]) - 1, q = std::stoi((*it)[2]) - 1;
    if (p < 0 || q < 0 || p >= b + t || q >= b + t) throw ParseError("diagram point out of range: " + s);
    m[static_cast<std::size_t>(p)] = q;
    m[static_cast<std::size_t>(q)] = p;
  }
  try {
    return TLDiagram(b, t, std::move(m), loops);
  } catch (const InvalidParameters& e) {
    throw ParseError(std::string("bad diagram text: ") + e.what());
  }
}

ComposedMatching compose_matchings(int xb, int xt, const Matching& x, int yt, const Matching& y) {
  const int n = xb + yt;
  ComposedMatching out{Matching(static_cast<std::size_t>(n), -1), 0};
  std::vector<char> seen(static_cast<std::size_t>(xt), 0);
  auto& res = out.m;
  for (int p = 0; p < n; ++p) {
    if (res[static_cast<std::size_t>(p)] >= 0) continue;
    bool in_x = p < xb;
    int q = in_x ? p : xt + (p - xb);
    int end;
    for (;;) {
      if (in_x) {
        int r = x[static_cast<std::size_t>(q)];
        if (r < xb) {
          end = r;
          break;
        }
        seen[static_cast<std::size_t>(r - xb)] = 1;
        q = r - xb;
        in_x = false;
      } else {
        int r = y[static_cast<std::size_t>(q)];
        if (r >= xt) {
          end = xb + (r - xt);
          break;
        }
        seen[static_cast<std::size_t>(r)] = 1;
        q = xb + r;
        in_x = true;
      }
    }
    res[static_cast<std::size_t>(p)] = end;
    res[static_cast<std::size_t>(end)] = p;
  }
  for (int m0 = 0; m0 < xt; ++m0) {
    if (seen[static_cast<std::size_t>(m0)]) continue;
    int m = m0;
    do {
      seen[static_cast<std::size_t>(m)] = 1;
      int m2 = y[static_cast<std::size_t>(m)];
      seen[static_cast<std::size_t>(m2)] = 1;
      m = x[static_cast<std::size_t>(xb + m2)] - xb;
    } while (m != m0);
    ++out.loops;
  }
  return out;
}

TLDiagram compose(const TLDiagram& x, const TLDiagram& y) {
  if (x.top() != y.bottom()) throw ShapeMismatch("compose: top of the lower diagram must match bottom of the upper");
  auto c = compose_matchings(x.bottom(), x.top(), x.matching(), y.top(), y.matching());
  return TLDiagram(x.bottom(), y.top(), std::move(c.m), x.loops() + y.loops() + c.loops);
}

namespace {

Matching tensor_matchings(int b1, int t1, const Matching& x, int b2, int t2, const Matching& y) {
  const int b = b1 + b2;
  Matching m(static_cast<std::size_t>(b + t1 + t2));
  auto mx = [&](int p) { return p < b1 ? p : b + (p - b1); };
  auto my = [&](int p) { return p < b2 ? b1 + p : b + t1 + (p - b2); };
  for (int p = 0; p < b1 + t1; ++p) m[static_cast<std::size_t>(mx(p))] = mx(x[static_cast<std::size_t>(p)]);
  for (int p = 0; p < b2 + t2; ++p) m[static_cast<std::size_t>(my(p))] = my(y[static_cast<std::size_t>(p)]);
  return m;
}

Matching reflect_matching(int b, int t, const Matching& x) {
  Matching m(x.size());
  auto mp = [&](int p) { return p < b ? t + p : p - b; };
  for (int p = 0; p < b + t; ++p) m[static_cast<std::size_t>(mp(p))] = mp(x[static_cast<std::size_t>(p)]);
  return m;
}

int closure_loops(int n, const Matching& m) {
  std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
  int loops = 0;
  for (int p0 = 0; p0 < 2 * n; ++p0) {
    if (seen[static_cast<std::size_t>(p0)]) continue;
    int p = p0;
    do {
      seen[static_cast<std::size_t>(p)] = 1;
      int q = m[static_cast<std::size_t>(p)];
      seen[static_cast<std::size_t>(q)] = 1;
      p = q < n ? q + n : q - n;
    } while (p != p0);
    ++loops;
  }
  return loops;
}

}  // namespace

TLDiagram tensor(const TLDiagram& x, const TLDiagram& y) {
  return TLDiagram(x.bottom() + y.bottom(), x.top() + y.top(),
                   tensor_matchings(x.bottom(), x.top(), x.matching(), y.bottom(), y.top(), y.matching()),
                   x.loops() + y.loops());
}

TLDiagram reflect(const TLDiagram& x) {
  return TLDiagram(x.top(), x.bottom(), reflect_matching(x.bottom(), x.top(), x.matching()), x.loops());
}

int closure_loops(const TLDiagram& x) {
  if (x.bottom() != x.top()) throw ShapeMismatch("trace closure needs a square diagram");
  return x.loops() + closure_loops(x.bottom(), x.matching());
}

Matching identity_matching(int n) {
  Matching m(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i)] = n + i;
    m[static_cast<std::size_t>(n + i)] = i;
  }
  return m;
}

// ---------------------------------------------------------------------------
// elements

TLElement::TLElement(int bottom, int top, Terms terms) : bottom_(bottom), top_(top) {
  for (auto& [m, c] : terms) {
    if (static_cast<int>(m.size()) != bottom + top) throw ShapeMismatch("term shape does not match element");
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
  }
}

TLElement TLElement::from_diagram(const TLDiagram& x, const SkeinContext& ctx, const Scalar& c) {
  TLElement e(x.bottom(), x.top());
  e.add(x.matching(), c * ctx.d_power(x.loops()));
  return e;
}

TLElement TLElement::identity(int n, const SkeinContext& ctx) {
  TLElement e(n, n);
  e.add(identity_matching(n), ctx.one());
  return e;
}

Scalar TLElement::coeff(const Matching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void TLElement::add(const Matching& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool operator==(const TLElement& a, const TLElement& b) {
  if (a.bottom_ != b.bottom_ || a.top_ != b.top_ || a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

TLElement operator+(const TLElement& a, const TLElement& b) {
  if (a.bottom_ != b.bottom_ || a.top_ != b.top_) throw ShapeMismatch("sum of elements of different shapes");
  TLElement c = a;
  for (const auto& [m, v] : b.terms_) c.add(m, v);
  return c;
}

TLElement operator-(const TLElement& a, const TLElement& b) { return a + b.scaled(Scalar(-1)); }

TLElement TLElement::scaled(const Scalar& c) const {
  TLElement e(bottom_, top_);
  if (c.is_zero()) return e;
  for (const auto& [m, v] : terms_) e.terms_.emplace_hint(e.terms_.end(), m, v * c);
  return e;
}

TLElement generator_u(int n, int i, const SkeinContext& ctx) {
  if (i < 1 || i > n - 1) {
    throw IndexOutOfRange("U_" + std::to_string(i) + " does not exist on " + std::to_string(n) + " strands");
  }
  Matching m = identity_matching(n);
  m[static_cast<std::size_t>(i - 1)] = i;
  m[static_cast<std::size_t>(i)] = i - 1;
  m[static_cast<std::size_t>(n + i - 1)] = n + i;
  m[static_cast<std::size_t>(n + i)] = n + i - 1;
  TLElement e(n, n);
  e.add(m, ctx.one());
  return e;
}

namespace {

// Products grouped by loop count; d^k is applied once per output diagram.
using Grouped = std::map<std::pair<int, Matching>, Scalar>;

void accumulate(Grouped& g, int loops, Matching&& m, const Scalar& c) {
  auto [it, inserted] = g.try_emplace(std::make_pair(loops, std::move(m)), c);
  if (!inserted) it->second += c;
}

TLElement finish(int bottom, int top, const Grouped& g, const SkeinContext& ctx) {
  TLElement out(bottom, top);
  for (const auto& [key, c] : g) out.add(key.second, c * ctx.d_power(key.first));
  return out;
}

void check_composable(const TLElement& x, const TLElement& y) {
  if (x.top() != y.bottom()) {
    throw ShapeMismatch("compose: " + std::to_string(x.top()) + " top points against " + std::to_string(y.bottom()) +
                        " bottom points");
  }
}

}  // namespace

TLElement compose_serial(const TLElement& x, const TLElement& y, const SkeinContext& ctx) {
  check_composable(x, y);
  TLElement out(x.bottom(), y.top());
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      auto c = compose_matchings(x.bottom(), x.top(), mx, y.top(), my);
      out.add(c.m, cx * cy * ctx.d_power(c.loops));
    }
  return out;
}

TLElement compose(const TLElement& x, const TLElement& y, const SkeinContext& ctx) {
  check_composable(x, y);
  std::vector<const TLElement::Terms::value_type*> xs;
  xs.reserve(x.size());
  for (const auto& t : x.terms()) xs.push_back(&t);
  const long nx = static_cast<long>(xs.size());
  Grouped total;
  if (x.size() * y.size() < 256) {
    for (const auto* tx : xs)
      for (const auto& [my, cy] : y.terms()) {
        auto c = compose_matchings(x.bottom(), x.top(), tx->first, y.top(), my);
        accumulate(total, c.loops, std::move(c.m), tx->second * cy);
      }
    return finish(x.bottom(), y.top(), total, ctx);
  }
#pragma omp parallel
  {
    Grouped local;
#pragma omp for schedule(dynamic, 4) nowait
    for (long i = 0; i < nx; ++i) {
      const auto& [mx, cx] = *xs[static_cast<std::size_t>(i)];
      for (const auto& [my, cy] : y.terms()) {
        auto c = compose_matchings(x.bottom(), x.top(), mx, y.top(), my);
        accumulate(local, c.loops, std::move(c.m), cx * cy);
      }
    }
#pragma omp critical(tlj_compose_merge)
    for (auto& [key, c] : local) {
      auto [it, inserted] = total.try_emplace(key, c);
      if (!inserted) it->second += c;
    }
  }
  return finish(x.bottom(), y.top(), total, ctx);
}

TLElement compose_u(const TLElement& x, int i, const SkeinContext& ctx) {
  const int n = x.top();
  if (i < 1 || i > n - 1) throw IndexOutOfRange("U_" + std::to_string(i) + " out of range");
  Matching u = identity_matching(n);
  u[static_cast<std::size_t>(i - 1)] = i;
  u[static_cast<std::size_t>(i)] = i - 1;
  u[static_cast<std::size_t>(n + i - 1)] = n + i;
  u[static_cast<std::size_t>(n + i)] = n + i - 1;
  Grouped g;
  for (const auto& [m, c] : x.terms()) {
    auto r = compose_matchings(x.bottom(), n, m, n, u);
    accumulate(g, r.loops, std::move(r.m), c);
  }
  return finish(x.bottom(), n, g, ctx);
}

TLElement tensor(const TLElement& x, const TLElement& y) {
  TLElement out(x.bottom() + y.bottom(), x.top() + y.top());
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms())
      out.add(tensor_matchings(x.bottom(), x.top(), mx, y.bottom(), y.top(), my), cx * cy);
  return out;
}

TLElement reflect(const TLElement& x) {
  TLElement out(x.top(), x.bottom());
  for (const auto& [m, c] : x.terms()) out.add(reflect_matching(x.bottom(), x.top(), m), c.bar());
  return out;
}

Scalar markov_trace(const TLElement& x, const SkeinContext& ctx) {
  if (x.bottom() != x.top()) throw ShapeMismatch("Markov trace needs bottom == top");
  std::map<int, Scalar> by_loops;
  for (const auto& [m, c] : x.terms()) {
    auto [it, inserted] = by_loops.try_emplace(closure_loops(x.bottom(), m), c);
    if (!inserted) it->second += c;
  }
  Scalar out = ctx.one() - ctx.one();
  for (const auto& [k, c] : by_loops) out += c * ctx.d_power(k);
  return out;
}

// ---------------------------------------------------------------------------
// enumeration

mpz_class catalan(int n) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  return c / (n + 1);
}

namespace {

// non-crossing perfect matchings of the index range [lo, hi) of a sequence
void noncrossing(int lo, int hi, std::vector<int>& cur, const std::function<void()>& emit) {
  if (lo >= hi) {
    emit();
    return;
  }
  for (int k = lo + 1; k < hi; k += 2) {
    cur[static_cast<std::size_t>(lo)] = k;
    cur[static_cast<std::size_t>(k)] = lo;
    noncrossing(lo + 1, k, cur, [&] { noncrossing(k + 1, hi, cur, emit); });
  }
}

}  // namespace

const std::vector<Matching>& enumerate_matchings(int bottom, int top, long limit) {
  if (bottom < 0 || top < 0 || (bottom + top) % 2 != 0) {
    throw InvalidParameters("enumeration needs nonnegative counts with an even total");
  }
  const int half = (bottom + top) / 2;
  if (catalan(half) > limit) {
    throw ResourceLimit("Catalan(" + std::to_string(half) + ") diagrams exceeds the limit of " + std::to_string(limit));
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<Matching>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({bottom, top}); it != cache.end()) return *it->second;
  }
  const int n = bottom + top;
  std::vector<int> point_at(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) point_at[static_cast<std::size_t>(cyclic_position(bottom, top, p))] = p;
  auto out = std::make_unique<std::vector<Matching>>();
  std::vector<int> cur(static_cast<std::size_t>(n));
  noncrossing(0, n, cur, [&] {
    Matching m(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      m[static_cast<std::size_t>(point_at[static_cast<std::size_t>(k)])] =
          point_at[static_cast<std::size_t>(cur[static_cast<std::size_t>(k)])];
    out->push_back(std::move(m));
  });
  std::sort(out->begin(), out->end());
  std::lock_guard lock(mu);
  return *cache.emplace(std::make_pair(bottom, top), std::move(out)).first->second;
}

std::vector<TLDiagram> enumerate_diagrams(int bottom, int top, long limit) {
  std::vector<TLDiagram> out;
  for (const auto& m : enumerate_matchings(bottom, top, limit)) out.emplace_back(bottom, top, m);
  return out;
}

std::vector<std::vector<int>> gram_exponents_serial(int n, long limit) {
  if (n < 1) throw InvalidParameters("Gram matrix needs n >= 1");
  const auto& ds = enumerate_matchings(n, n, limit);
  const std::size_t c = ds.size();
  std::vector<std::vector<int>> k(c, std::vector<int>(c));
  for (std::size_t i = 0; i < c; ++i) {
    Matching ri = reflect_matching(n, n, ds[i]);
    for (std::size_t j = 0; j < c; ++j) {
      auto comp = compose_matchings(n, n, ri, n, ds[j]);
      k[i][j] = comp.loops + closure_loops(n, comp.m);
    }
  }
  return k;
}

std::vector<std::vector<int>> gram_exponents(int n, long limit) {
  if (n < 1) throw InvalidParameters("Gram matrix needs n >= 1");
  const auto& ds = enumerate_matchings(n, n, limit);
  const long c = static_cast<long>(ds.size());
  std::vector<std::vector<int>> k(static_cast<std::size_t>(c), std::vector<int>(static_cast<std::size_t>(c)));
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < c; ++i) {
    Matching ri = reflect_matching(n, n, ds[static_cast<std::size_t>(i)]);
    auto& row = k[static_cast<std::size_t>(i)];
    for (long j = 0; j < c; ++j) {
      auto comp = compose_matchings(n, n, ri, n, ds[static_cast<std::size_t>(j)]);
      row[static_cast<std::size_t>(j)] = comp.loops + closure_loops(n, comp.m);
    }
  }
  return k;
}

Matrix gram_matrix(int n, const SkeinContext& ctx, long limit) {
  auto k = gram_exponents(n, limit);
  const int c = static_cast<int>(k.size());
  Matrix g(c, c);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      g(i, j) = ctx.d_power(k[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return g;
}

mpz_class meander_exponent(int n, int i) {
  auto binom = [](int a, int b) {
    mpz_class c = 0;
    if (b < 0 || b > a) return c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return c;
  };
  mpz_class e = binom(2 * n, n - i - 2) + binom(2 * n, n - i) - 2 * binom(2 * n, n - i - 1);
  return e;
}

std::string to_string(const TLElement& x) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    if (!first) os << "\n";
    os << "(" << c.to_string() << ") " << TLDiagram(x.bottom(), x.top(), m).text();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace tlj
