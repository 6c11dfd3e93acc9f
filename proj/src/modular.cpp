#include "tlj/modular.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace tlj {

RootClass parse_root_class(const std::string& s) {
  if (s == "4r") return RootClass::Primitive4r;
  if (s == "2r") return RootClass::Primitive2r;
  if (s == "r") return RootClass::PrimitiveR;
  throw ParseError("root class must be one of 4r, 2r, r (got '" + s + "')");
}

std::string root_class_name(RootClass c) {
  switch (c) {
    case RootClass::Primitive4r: return "4r";
    case RootClass::Primitive2r: return "2r";
    case RootClass::PrimitiveR: return "r";
  }
  return "?";
}

int root_order(int r, RootClass c) {
  switch (c) {
    case RootClass::Primitive4r: return 4 * r;
    case RootClass::Primitive2r: return 2 * r;
    case RootClass::PrimitiveR: return r;
  }
  return 0;
}

namespace {

void check_label(const ModularData& md, int a) {
  if (a < 0 || a > md.r - 2) {
    throw IndexOutOfRange("label " + std::to_string(a) + " outside 0.." + std::to_string(md.r - 2));
  }
}

void require_modular(const ModularData& md) {
  if (!md.modular) {
    throw NonModular("s-tilde is singular at r = " + std::to_string(md.r) + ", class " + root_class_name(md.root_class));
  }
}

long to_count(const Scalar& s, const std::string& what) {
  auto z = s.integer();
  if (!z || *z < 0 || !z->fits_slong_p()) throw NonIntegral(what + " is not a nonnegative integer: " + s.to_string());
  return z->get_si();
}

ModularData build_over(int r, RootClass c, int m, int t, ContextPtr ctx) {
  ModularData md;
  md.r = r;
  md.root_class = c;
  md.order = m;
  md.embedding = t;
  md.ctx = std::move(ctx);
  const SkeinContext& k = *md.ctx;
  const int n = r - 1;
  const Scalar zero = k.one() - k.one();
  const Scalar a = k.a();
  for (int i = 0; i < n; ++i) {
    md.labels.push_back(i);
    md.dims.push_back(chebyshev(i, k.d()));
    md.twists.push_back(kink_value(k, i));
  }
  md.s_tilde = Matrix(n, n, zero);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar q = quantum_int((i + 1) * (j + 1), a);
      md.s_tilde(i, j) = (i + j) % 2 ? -q : q;
    }
  md.d_squared = zero;
  md.p_plus = zero;
  md.p_minus = zero;
  for (int i = 0; i < n; ++i) {
    Scalar d2 = md.dims[static_cast<std::size_t>(i)] * md.dims[static_cast<std::size_t>(i)];
    md.d_squared += d2;
    md.p_plus += md.twists[static_cast<std::size_t>(i)] * d2;
    md.p_minus += md.twists[static_cast<std::size_t>(i)].inverse() * d2;
  }
  md.modular = !determinant(md.s_tilde).is_zero();
  return md;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

ModularData build_modular_data(int r, RootClass c, int t) {
  if (r < 3) throw InvalidParameters("r must be at least 3");
  if (c != RootClass::Primitive4r && r % 2 == 0) {
    throw InvalidParameters("the " + root_class_name(c) + " class needs r odd");
  }
  const int m = root_order(r, c);
  if (std::gcd(t, m) != 1) {
    throw InvalidParameters("embedding exponent " + std::to_string(t) + " is not coprime to " + std::to_string(m));
  }
  return build_over(r, c, m, t, SkeinContext::at_root(m, t));
}

ContextPtr lift_context(const SkeinContext& ctx, int multiple) {
  const Scalar& a = ctx.a();
  if (!a.is_cyclotomic()) throw Unsupported("lifting needs A at a root of unity");
  const FieldPtr& f = a.field();
  const int m = f->order();
  const int big = std::lcm(m, multiple);
  // B = exp(2 pi i t' / big) with B^{big/m} = A under the embedding
  int t = f->embedding() % m;
  while (std::gcd(t, big) != 1) t += m;
  FieldPtr g = CycloField::get(big, t);
  return SkeinContext::with_a(Scalar(a.as_cyclotomic().lift(g)));
}

Scalar integer_sqrt(long n, const FieldPtr& f) {
  if (n == 0) throw InvalidParameters("square root of zero requested");
  const int m = f->order();
  const Scalar b = Scalar::generator(f);
  auto root_of_unity = [&](int k) -> Scalar {
    if (m % k) throw MissingExtension("field of order " + std::to_string(m) + " has no primitive " + std::to_string(k) + "th root");
    return b.pow(m / k);
  };
  long rest = std::labs(n);
  long outer = 1;
  for (long p : prime_factors(rest)) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      outer *= p;
    }
  }
  Scalar x = Scalar(static_cast<int>(outer)) * Scalar::generator(f).pow(0);
  for (long p : prime_factors(rest)) {
    if (p == 2) {
      Scalar z = root_of_unity(8);
      x *= z + z.inverse();
      continue;
    }
    Scalar z = root_of_unity(static_cast<int>(p));
    Scalar g = z - z;
    for (long k = 0; k < p; ++k) g += z.pow((k * k) % p);
    if (p % 4 == 3) g *= root_of_unity(4);
    x *= g;
  }
  if (n < 0) x *= root_of_unity(4);
  if (!(x * x == Scalar(static_cast<int>(n)))) throw MissingExtension("square root construction failed for " + std::to_string(n));
  return x;
}

ModularData with_total_dimension(const ModularData& md) {
  ContextPtr big = lift_context(*md.ctx, 8);
  ModularData out = build_over(md.r, md.root_class, md.order, md.embedding, big);
  const FieldPtr& f = big->a().field();
  const Scalar i = Scalar::generator(f).pow(f->order() / 4);
  const Scalar a2 = big->a().pow(2);
  Scalar root = i * integer_sqrt(2L * md.r, f) / (a2 - a2.inverse());
  if (!(root * root == out.d_squared)) {
    throw MissingExtension("D^2 is not -2r/(A^2 - A^-2)^2 at this root");
  }
  if (root.approx().real() < 0) root = -root;
  out.total_dimension = root;
  return out;
}

RankReport s_matrix_rank(const ModularData& md) {
  const int k = rank(md.s_tilde);
  return {k, k == md.s_tilde.rows()};
}

OddClassSplit odd_class_split(const ModularData& md) {
  if (md.root_class == RootClass::Primitive4r) throw InvalidParameters("the label pairing exists only for the odd classes");
  const int n = md.rank();
  OddClassSplit out;
  out.rows_paired = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(md.s_tilde(n - 1 - i, j) == md.s_tilde(i, j))) out.rows_paired = false;
  std::vector<int> evens;
  for (int e = 0; e < n; e += 2) evens.push_back(e);
  for (int e : evens) {
    out.order.push_back(e);
    out.order.push_back(n - 1 - e);
  }
  const int h = static_cast<int>(evens.size());
  out.s_even = Matrix(h, h);
  for (int x = 0; x < h; ++x)
    for (int y = 0; y < h; ++y) out.s_even(x, y) = md.s_tilde(evens[static_cast<std::size_t>(x)], evens[static_cast<std::size_t>(y)]);
  out.kronecker = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Scalar& lhs = md.s_tilde(out.order[static_cast<std::size_t>(x)], out.order[static_cast<std::size_t>(y)]);
      if (!(lhs == out.s_even(x / 2, y / 2))) out.kronecker = false;
    }
  return out;
}

OmegaProjector omega_projector(const ModularData& md, int i) {
  check_label(md, i);
  OmegaProjector w{i, {}};
  for (int j = 0; j < md.rank(); ++j) w.coefficients.push_back(md.s_tilde(i, j));
  return w;
}

namespace {

Scalar fusion_value(const ModularData& md, int a, int b, int c) {
  Scalar sum = md.ctx->one() - md.ctx->one();
  for (int x = 0; x < md.rank(); ++x)
    sum += md.s_tilde(a, x) * md.s_tilde(b, x) * md.s_tilde(c, x) / md.s_tilde(0, x);
  return sum / md.d_squared;
}

}  // namespace

long fusion(const ModularData& md, int a, int b, int c) {
  require_modular(md);
  check_label(md, a);
  check_label(md, b);
  check_label(md, c);
  return to_count(fusion_value(md, a, b, c), "N(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
}

std::vector<std::vector<std::vector<long>>> fusion_tensor(const ModularData& md) {
  require_modular(md);
  const auto n = static_cast<std::size_t>(md.rank());
  std::vector<std::vector<std::vector<long>>> t(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c) {
        long v = fusion(md, static_cast<int>(a), static_cast<int>(b), static_cast<int>(c));
        // fully symmetric: fill every permutation
        t[a][b][c] = t[a][c][b] = t[b][a][c] = t[b][c][a] = t[c][a][b] = t[c][b][a] = v;
      }
  return t;
}

long verlinde_dim(const ModularData& md, int genus, const std::vector<int>& boundary) {
  require_modular(md);
  if (genus < 0) throw InvalidParameters("genus must be nonnegative");
  for (int a : boundary) check_label(md, a);
  const long e = 2 - 2L * genus - static_cast<long>(boundary.size());
  Scalar sum = md.ctx->one() - md.ctx->one();
  for (int x = 0; x < md.rank(); ++x) {
    Scalar term = md.s_tilde(0, x).pow(e);
    for (int a : boundary) term *= md.s_tilde(a, x);
    sum += term;
  }
  sum *= md.d_squared.pow(genus - 1);
  return to_count(sum, "Verlinde dimension");
}

VerlindeAlgebra verlinde_algebra(const ModularData& md) {
  VerlindeAlgebra out;
  out.mult = fusion_tensor(md);
  const int n = md.rank();
  const Scalar zero = md.ctx->one() - md.ctx->one();
  using Vec = std::vector<Scalar>;
  auto product = [&](const Vec& u, const Vec& v) {
    Vec w(static_cast<std::size_t>(n), zero);
    for (int a = 0; a < n; ++a) {
      if (u[static_cast<std::size_t>(a)].is_zero()) continue;
      for (int b = 0; b < n; ++b) {
        if (v[static_cast<std::size_t>(b)].is_zero()) continue;
        Scalar ab = u[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)];
        for (int c = 0; c < n; ++c) {
          long nabc = out.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
          if (nabc) w[static_cast<std::size_t>(c)] += ab * Scalar(static_cast<int>(nabc));
        }
      }
    }
    return w;
  };
  auto scale = [&](Vec v, const Scalar& s) {
    for (auto& x : v) x *= s;
    return v;
  };
  auto basis = [&](int a) {
    Vec v(static_cast<std::size_t>(n), zero);
    v[static_cast<std::size_t>(a)] = md.ctx->one();
    return v;
  };

  out.unit_ok = true;
  for (int b = 0; b < n; ++b)
    if (product(basis(0), basis(b)) != basis(b)) out.unit_ok = false;

  std::vector<Vec> l(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) l[static_cast<std::size_t>(a)].push_back(md.s_tilde(a, b));
    out.eigen.push_back(md.d_squared / md.s_tilde(0, a));
  }
  out.longitudes_diagonal = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vec want = a == b ? scale(l[static_cast<std::size_t>(a)], out.eigen[static_cast<std::size_t>(a)]) : Vec(static_cast<std::size_t>(n), zero);
      if (product(l[static_cast<std::size_t>(a)], l[static_cast<std::size_t>(b)]) != want) out.longitudes_diagonal = false;
    }

  out.idempotents_ok = true;
  Vec total(static_cast<std::size_t>(n), zero);
  for (int a = 0; a < n; ++a) {
    Vec e = scale(l[static_cast<std::size_t>(a)], out.eigen[static_cast<std::size_t>(a)].inverse());
    if (product(e, e) != e) out.idempotents_ok = false;
    for (int c = 0; c < n; ++c) total[static_cast<std::size_t>(c)] += e[static_cast<std::size_t>(c)];
  }
  if (total != basis(0)) out.idempotents_ok = false;

  Matrix round = (md.s_tilde * md.s_tilde).scaled(md.d_squared.inverse());
  out.roundtrip_ok = round == Matrix::identity(n, md.ctx->one());
  return out;
}

SL2ZReport sl2z_check(const ModularData& md) {
  require_modular(md);
  if (!md.total_dimension) throw MissingExtension("D is not available in this field; use with_total_dimension first");
  const int n = md.rank();
  const Scalar one = md.ctx->one();
  const Scalar& big_d = *md.total_dimension;
  Matrix s = md.s_tilde.scaled(big_d.inverse());
  Matrix t(n, n, one - one);
  for (int i = 0; i < n; ++i) t(i, i) = md.twists[static_cast<std::size_t>(i)];
  const Matrix id = Matrix::identity(n, one);
  SL2ZReport rep{};
  Matrix s2 = s * s;
  rep.s4_identity = s2 * s2 == id;
  Matrix st = s * t;
  Matrix st3 = st * st * st;
  rep.lambda = one - one;
  for (int i = 0; i < n && rep.lambda.is_zero(); ++i)
    for (int j = 0; j < n; ++j)
      if (!s2(i, j).is_zero()) {
        rep.lambda = st3(i, j) / s2(i, j);
        break;
      }
  rep.st3_proportional = !rep.lambda.is_zero() && st3 == s2.scaled(rep.lambda);
  rep.t_unitary = true;
  for (const auto& th : md.twists)
    if (!(th * th.bar() == one)) rep.t_unitary = false;
  rep.lambda_approx = rep.lambda.approx();
  rep.central_charge = 3.0 * (md.r - 2) / md.r;
  const double phase = 2 * std::numbers::pi * rep.central_charge / 8;
  rep.phase_error_plus = std::abs(rep.lambda_approx - std::polar(1.0, phase));
  rep.phase_error_minus = std::abs(rep.lambda_approx - std::polar(1.0, -phase));
  rep.lambda_is_gauss_sum = rep.lambda == md.p_plus / big_d;
  return rep;
}

Scalar km_bracket(const BraidWord& b, const SkeinContext& ctx) {
  ContextPtr big = lift_context(ctx, 4);
  const FieldPtr& f = big->a().field();
  const Scalar i = Scalar::generator(f).pow(f->order() / 4);
  ContextPtr rotated = SkeinContext::with_a(i * big->a());
  return (-i).pow(writhe(b)) * bracket_closure(b, *rotated);
}

}  // namespace tlj
