#include "tlj/annular.hpp"

#include <algorithm>
#include <cstdlib>

namespace tlj {

SPoly spoly(std::vector<Scalar> coeffs) { return SPoly(std::move(coeffs)); }

SPoly chebyshev_spoly(int n, const Scalar& one) {
  QPoly q = chebyshev_poly(n);
  std::vector<Scalar> c;
  for (const auto& x : q.coeffs()) c.push_back(one * Scalar(x));
  return SPoly(std::move(c));
}

PolyQuotientAlgebra::PolyQuotientAlgebra(SPoly modulus) : mod_(std::move(modulus)) {
  if (mod_.degree() < 1) throw InvalidParameters("quotient modulus must have positive degree");
  mod_ = mod_.monic();
}

SPoly PolyQuotientAlgebra::reduce(const SPoly& p) const { return p.divmod(mod_).second; }

SPoly PolyQuotientAlgebra::one() const { return reduce(SPoly(mod_.lead())); }

SPoly PolyQuotientAlgebra::x() const { return reduce(SPoly::monomial(1, mod_.lead(), mod_.lead() - mod_.lead())); }

std::vector<SPoly> minimal_idempotents(const SPoly& p, const std::vector<Scalar>& roots) {
  if (p.degree() < 1) throw InvalidParameters("polynomial must have positive degree");
  if (static_cast<int>(roots.size()) != p.degree()) {
    throw InvalidParameters("need exactly deg p = " + std::to_string(p.degree()) + " roots, got " + std::to_string(roots.size()));
  }
  const Scalar one = p.lead() / p.lead();
  const Scalar zero = one - one;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!p.eval(roots[i], zero).is_zero()) throw InvalidParameters("root " + roots[i].to_string() + " does not annihilate p");
    for (std::size_t j = 0; j < i; ++j)
      if (roots[i] == roots[j]) throw RepeatedRoot("root " + roots[i].to_string() + " is repeated; p is not squarefree");
  }
  std::vector<SPoly> out;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    SPoly u(one);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i == j) continue;
      // x - a_i (the product runs over the other roots)
      u = u * spoly({-roots[i], one});
    }
    out.push_back(u.scaled(u.eval(roots[j], zero).inverse()));
  }
  return out;
}

IdempotentCheck check_idempotents(const PolyQuotientAlgebra& alg, const std::vector<SPoly>& es) {
  IdempotentCheck c{true, true, true};
  SPoly sum;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (!(alg.mul(es[i], es[i]) == alg.reduce(es[i]))) c.idempotent = false;
    for (std::size_t j = 0; j < es.size(); ++j)
      if (i != j && !alg.mul(es[i], es[j]).zero()) c.orthogonal = false;
    sum = sum + es[i];
  }
  c.complete = alg.reduce(sum) == alg.one();
  return c;
}

AnnularTrace annular_trace(const TLElement& p, const SkeinContext& ctx) {
  const int n = p.bottom();
  if (n != p.top()) throw ShapeMismatch("annular trace needs a square element");
  const Scalar zero = ctx.one() - ctx.one();
  SPoly total;
  for (const auto& [m, c] : p.terms()) {
    std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
    int essential = 0, contractible = 0;
    for (int start = 0; start < n; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      int winding = 0, cur = start;
      do {
        seen[static_cast<std::size_t>(cur)] = 1;
        const int q = m[static_cast<std::size_t>(cur)];
        seen[static_cast<std::size_t>(q)] = 1;
        // the closing arc runs once around the core: top to bottom counts +1
        if (q >= n) {
          cur = q - n;
          ++winding;
        } else {
          cur = q + n;
          --winding;
        }
      } while (cur != start);
      if (std::abs(winding) > 1) throw ShapeMismatch("closed curve winds more than once; diagram is not planar");
      (winding ? essential : contractible)++;
    }
    total = total + SPoly::monomial(static_cast<std::size_t>(essential), c * ctx.d_power(contractible), zero);
  }
  AnnularTrace out{total, total};
  if (n > 0) out.residue = total.divmod(chebyshev_spoly(n, ctx.one())).second;
  else out.residue = SPoly();
  return out;
}

namespace {

int field_order(int level) { return 4 * (level + 2); }

Scalar zeta(int level) { return Scalar::generator(CycloField::get(field_order(level), 1)); }

// Roots of `rel` among +-zeta^j and +-(zeta^j + zeta^-j); sorted by embedding.
std::vector<Scalar> cyclotomic_roots(const SPoly& rel, int level) {
  const int m = field_order(level);
  const Scalar z = zeta(level);
  const Scalar zero = z - z;
  std::vector<Scalar> found;
  auto consider = [&](const Scalar& c) {
    if (!rel.eval(c, zero).is_zero()) return;
    for (const auto& f : found)
      if (f == c) return;
    found.push_back(c);
  };
  for (int j = 0; j < m; ++j) {
    Scalar p = z.pow(j);
    Scalar s = p + p.inverse();
    for (const Scalar& c : {p, -p, s, -s}) consider(c);
  }
  std::sort(found.begin(), found.end(), [](const Scalar& a, const Scalar& b) {
    auto x = a.approx(), y = b.approx();
    if (std::abs(x.real() - y.real()) > 1e-12) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return found;
}

GradeTable idempotent_grade(int level, int grade, SPoly relation, const std::string& source) {
  GradeTable g;
  g.grade = grade;
  g.relation = std::move(relation);
  g.roots = cyclotomic_roots(g.relation, level);
  if (static_cast<int>(g.roots.size()) != g.relation.degree()) {
    throw Unsupported("relation at grade " + std::to_string(grade) + " does not split over Q(zeta_" +
                      std::to_string(field_order(level)) + ")");
  }
  g.idempotents = minimal_idempotents(g.relation, g.roots);
  g.check = check_idempotents(PolyQuotientAlgebra(g.relation), g.idempotents);
  g.count = static_cast<int>(g.idempotents.size());
  g.bound = grade == 0 ? level + 1 : 2 * level + 2 - 2 * grade;
  g.source = source;
  return g;
}

}  // namespace

Scalar level_loop_value(int level, bool positive) {
  if (level < 1 || level > 3) throw Unsupported("annular tables exist for levels 1..3 only");
  const Scalar z = zeta(level);
  const Scalar one = z / z;
  SPoly rel;
  switch (level) {
    case 1: rel = spoly({-one, one - one, one}); break;
    case 2: rel = spoly({-one - one, one - one, one}); break;
    default: rel = spoly({-one, one, one}); break;  // d^2 + d - 1
  }
  for (const auto& r : cyclotomic_roots(rel, level))
    if ((r.approx().real() > 0) == positive) return r;
  throw Unsupported("no loop value of the requested sign");
}

LevelTable level_tables(int level, const Scalar& d) {
  if (level < 1 || level > 3) throw Unsupported("annular tables exist for levels 1..3 only");
  const Scalar one = zeta(level) / zeta(level);
  const Scalar zero = one - one;
  const Scalar dd = d * one;
  const Scalar d2 = dd * dd;
  switch (level) {
    case 1:
      if (!(d2 == one)) throw WrongD("level 1 needs d^2 = 1");
      break;
    case 2:
      if (!(d2 == one + one)) throw WrongD("level 2 needs d^2 = 2");
      break;
    default:
      if (d2 == one + dd) throw Unsupported("level 3 with d^2 = 1 + d: the grade-1 relation does not split over a cyclotomic field");
      if (!(d2 == one - dd)) throw WrongD("level 3 needs d^2 = 1 - d");
      break;
  }
  LevelTable t;
  t.level = level;
  t.d = dd;
  t.grades.push_back(idempotent_grade(level, 0, chebyshev_spoly(level + 1, one), "A_00 = C[R]/(Delta(R))"));
  switch (level) {
    case 1:
      t.grades.push_back(idempotent_grade(level, 1, spoly({-dd, zero, one}), "A_11 = C[T]/(T^2 - d)"));
      break;
    case 2: {
      t.grades.push_back(idempotent_grade(level, 1, spoly({one, zero, -dd, zero, one}), "A_11 = C[T]/(T^4 - d T^2 + 1)"));
      GradeTable g;
      g.grade = 2;
      g.count = 2;
      g.bound = 2;
      g.source = "e_+ and e_- of A_22 (closed form)";
      t.grades.push_back(g);
      break;
    }
    default: {
      t.grades.push_back(
          idempotent_grade(level, 1, spoly({one, zero, -dd, zero, -dd, zero, one}), "A_11 = C[T]/(T^6 - d T^4 - d T^2 + 1)"));
      t.grades.push_back(idempotent_grade(level, 2, spoly({one, zero, -dd, zero, one}), "A_22: F^4 - d F^2 + 1 modulo lower grades"));
      GradeTable g;
      g.grade = 3;
      g.count = 2;
      g.bound = 2;
      g.source = "A_33: three-term relation in F^-1, I, F (dimension bound)";
      t.grades.push_back(g);
      break;
    }
  }
  // a ring around the empty disk bounds a disk, so R acts as d there
  t.trivial_label = -1;
  const auto& g0 = t.grades.front();
  for (std::size_t j = 0; j < g0.idempotents.size(); ++j) {
    Scalar v = g0.idempotents[j].eval(dd, zero);
    if (!v.is_zero()) t.trivial_label = t.trivial_label == -1 ? static_cast<int>(j) : -2;
    t.disk_values.push_back(v);
  }
  return t;
}

IrrepCount irrep_count_check(int level) {
  LevelTable t = level_tables(level, level_loop_value(level, true));
  IrrepCount c{level, {}, 0, (level + 1) * (level + 1), true};
  for (const auto& g : t.grades) {
    c.per_grade.push_back(g.count);
    c.total += g.count;
    if (g.count != g.bound) c.ok = false;
    if (!g.idempotents.empty() && !(g.check.idempotent && g.check.orthogonal && g.check.complete)) c.ok = false;
  }
  if (c.total != c.expected) c.ok = false;
  return c;
}

LeadingTwistCheck level2_grade2_leading_check() {
  const Scalar z = zeta(2);
  const Scalar one = z / z, zero = one - one, half = one / Scalar(2);
  const Scalar i = z.pow(field_order(2) / 4);
  auto works = [&](const Scalar& square) {
    PolyQuotientAlgebra alg(spoly({-square, zero, one}));
    std::vector<SPoly> es{spoly({half, half * i}), spoly({half, -half * i})};
    IdempotentCheck c = check_idempotents(alg, es);
    return c.idempotent && c.orthogonal && c.complete;
  };
  return {works(one), works(-one)};
}

std::vector<Scalar> level2_grade2_idempotent(bool plus, const Scalar& d) {
  const Scalar z = zeta(2);
  const Scalar one = z / z;
  const Scalar i = z.pow(field_order(2) / 4);
  const Scalar s = plus ? one : -one;
  const Scalar dd = d * one;
  const Scalar h = one / Scalar(2);
  return {h,
          s * i * h,
          -s * i * h / dd,
          -h / dd,
          -s * i * h / dd,
          -h / dd,
          s * i * h / (dd * dd),
          h / (dd * dd)};
}

}  // namespace tlj
