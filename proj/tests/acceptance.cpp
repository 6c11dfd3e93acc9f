// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// the stated budget.  Exit status is the number of failed criteria.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "oracles/state_sum.hpp"
#include "tlj/annular.hpp"
#include "tlj/jones_wenzl.hpp"
#include "tlj/manifold.hpp"
#include "tlj/modular.hpp"

using namespace tlj;

namespace {

int failures = 0;

// `budget` <= 0 means no time limit.
void criterion(int id, const char* name, double budget, const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string why;
  try {
    why = body();
  } catch (const std::exception& e) {
    why = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (why.empty() && budget > 0 && secs > budget) why = "over the " + std::to_string(budget) + " s budget";
  std::printf("%s %2d %s (%.2f s)%s%s\n", why.empty() ? "PASS" : "FAIL", id, name, secs, why.empty() ? "" : ": ",
              why.c_str());
  std::fflush(stdout);
  failures += !why.empty();
}

std::vector<ContextPtr> unitary_contexts(int r) {
  std::vector<ContextPtr> out;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      auto [m, t] = unitary_root(r, s1, s2);
      out.push_back(SkeinContext::at_root(m, t));
    }
  return out;
}

Scalar sign_pow(int k) { return k % 2 ? Scalar(-1) : Scalar(1); }

std::string c1_jones_wenzl() {
  for (int r : {4, 5}) {
    auto ctxs = unitary_contexts(r);
    ctxs.push_back(SkeinContext::generic());
    for (const auto& ctx : ctxs)
      for (int n = 1; n <= r - 1; ++n) {
        const TLElement& p = jones_wenzl(*ctx, n)->element;
        const std::string at = " (r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")";
        if (!(compose(p, p, *ctx) == p)) return "p_n^2 != p_n" + at;
        for (int i = 1; i < n; ++i) {
          TLElement u = generator_u(n, i, *ctx);
          if (!compose(u, p, *ctx).zero() || !compose(p, u, *ctx).zero()) return "U_i p_n != 0" + at;
        }
        if (!(markov_trace(p, *ctx) == chebyshev(n, ctx->d()))) return "tr p_n != Delta_n(d)" + at;
      }
  }
  return {};
}

std::string c2_meander() {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 11);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      mpq_class dv(num(rng), den(rng));
      dv.canonicalize();
      auto ctx = SkeinContext::with_loop_value(Scalar(dv));
      Scalar expect = 1;
      for (int i = 1; i <= n; ++i) expect *= chebyshev(i, ctx->d()).pow(meander_exponent(n, i).get_si());
      if (!(determinant(gram_matrix(n, *ctx)) == expect)) return "n=" + std::to_string(n) + ", d=" + dv.get_str();
    }
  return {};
}

std::string c3_hopf() {
  for (int r : {3, 4, 5}) {
    auto ctx = SkeinContext::at_root(4 * r, 1);
    for (int i = 0; i <= r - 2; ++i)
      for (int j = 0; j <= r - 2; ++j) {
        Scalar expect = sign_pow(i + j) * quantum_int((i + 1) * (j + 1), ctx->a());
        if (!(colored_bracket({BraidWord(2, {1, 1}), {{0, i}, {0, j}}}, *ctx) == expect)) {
          return "r=" + std::to_string(r) + " (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
  }
  return {};
}

std::string c4_dichotomy() {
  for (int r = 3; r <= 6; ++r)
    for (int t = 1; t < 4 * r; ++t) {
      if (std::gcd(t, 4 * r) != 1) continue;
      ModularData md = build_modular_data(r, RootClass::Primitive4r, t);
      const Scalar a2 = md.ctx->a().pow(2);
      const Scalar k = Scalar(-2 * r) / (a2 - a2.inverse()).pow(2);
      if (!(md.s_tilde * md.s_tilde == Matrix::identity(md.rank(), md.ctx->one()).scaled(k))) {
        return "s^2 != k Id at r=" + std::to_string(r) + ", t=" + std::to_string(t);
      }
    }
  for (int r : {5, 7})
    for (RootClass c : {RootClass::Primitive2r, RootClass::PrimitiveR}) {
      const int m = root_order(r, c);
      for (int t = 1; t < m; ++t) {
        if (std::gcd(t, m) != 1) continue;
        ModularData md = build_modular_data(r, c, t);
        const std::string at = " at r=" + std::to_string(r) + ", class " + root_class_name(c) + ", t=" + std::to_string(t);
        if (s_matrix_rank(md).rank != (r - 1) / 2) return "rank" + at;
        OddClassSplit split = odd_class_split(md);
        if (!split.rows_paired || !split.kronecker) return "Kronecker split" + at;
      }
    }
  return {};
}

std::string c5_verlinde() {
  for (int r : {3, 4, 5}) {
    ModularData md = build_modular_data(r, RootClass::Primitive4r);
    const std::string at = " at r=" + std::to_string(r);
    if (verlinde_dim(md, 1, {}) != r - 1) return "dim V(T^2)" + at;
    const int n = md.rank();
    for (int g = 0; g <= 2; ++g)
      for (int k = 0; k <= 3; ++k) {
        std::vector<int> labels(static_cast<std::size_t>(k), 0);
        // every label vector of length k
        for (long idx = 0; idx < static_cast<long>(std::pow(n, k)); ++idx) {
          long v = idx;
          for (auto& l : labels) {
            l = static_cast<int>(v % n);
            v /= n;
          }
          const long dim = verlinde_dim(md, g, labels);
          if (dim < 0) return "negative dimension" + at;
          if (g == 0 && k == 3 && dim != (admissible(labels[0], labels[1], labels[2], r) ? 1 : 0)) {
            return "pants dimension differs from admissibility" + at;
          }
        }
      }
  }
  return {};
}

std::string c6_manifolds() {
  for (int r : {3, 4}) {
    ModularData md = with_total_dimension(build_modular_data(r, RootClass::Primitive4r));
    const std::string at = " at r=" + std::to_string(r);
    if (!(rt_invariant(make_surgery(BraidWord(0, {}), {}), md).z == md.total_dimension->inverse())) return "Z(S^3)" + at;
    if (!rt_invariant(make_surgery(BraidWord(1, {}), {0}), md).z.is_one()) return "Z(S^1 x S^2)" + at;
    for (const auto& s : {make_surgery(BraidWord(1, {}), {2}), make_surgery(BraidWord(2, {1, 1}), {1, -1})})
      for (const auto& c : kirby_harness(s, md))
        if (!c.equal) return c.name + at;
  }
  return {};
}

// Z_D(X) = Z(X) Z(-X), with -X presented by the mirror link and negated framings.
std::string c7_doubling() {
  for (int r : {3, 4}) {
    ModularData md = with_total_dimension(build_modular_data(r, RootClass::Primitive4r));
    struct Space {
      const char* name;
      BraidWord b;
      std::vector<int> f;
    };
    for (const auto& sp : {Space{"S^3", BraidWord(0, {}), {}}, Space{"S^1 x S^2", BraidWord(1, {}), {0}},
                           Space{"L(2,1)", BraidWord(1, {}), {2}}, Space{"L(3,1)", BraidWord(1, {}), {3}}}) {
      std::vector<int> neg;
      for (int f : sp.f) neg.push_back(-f);
      const RTResult z = rt_invariant(make_surgery(sp.b, sp.f), md);
      const Scalar zd = z.z * rt_invariant(make_surgery(mirror(sp.b), neg), md).z;
      const auto v = zd.approx();
      if (std::abs(v.imag()) > 1e-9 || std::abs(v.real() - std::norm(z.z_approx)) > 1e-9) {
        return std::string(sp.name) + " at r=" + std::to_string(r);
      }
    }
  }
  return {};
}

std::string c8_jones() {
  auto ctx = SkeinContext::generic();
  const Scalar a = ctx->a(), d = ctx->d();
  long knots = 0;
  for (int n : {2, 3})
    for (int len = 0; len <= 6; ++len) {
      const int letters = 2 * (n - 1);
      long total = 1;
      for (int k = 0; k < len; ++k) total *= letters;
      for (long idx = 0; idx < total; ++idx) {
        std::vector<int> w;
        long v = idx;
        for (int k = 0; k < len; ++k) {
          const int g = static_cast<int>(v % letters);
          v /= letters;
          w.push_back(g < n - 1 ? g + 1 : -(g - n + 2));
        }
        BraidWord b(n, w);
        if (closure_components(b).size() != 1) continue;
        ++knots;
        const Scalar norm = (-a).pow(-3 * writhe(b)) / d;
        const Scalar j = jones_polynomial(b, *ctx);
        if (!(j == norm * oracle::state_sum_bracket(b, a))) return "state sum differs on " + braid_text(b);
        if (!(j == norm * oracle::skein_bracket(b, a))) return "skein oracle differs on " + braid_text(b);
      }
    }
  return knots > 0 ? std::string() : "no knots enumerated";
}

std::string c9_markov() {
  auto ctx = SkeinContext::generic();
  std::mt19937 rng(99);
  auto word = [&](int n, int len) {
    std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
    std::vector<int> w;
    for (int k = 0; k < len; ++k) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return BraidWord(n, w);
  };
  for (int trial = 0; trial < 50; ++trial) {
    BraidWord b = word(3, 5);
    const Scalar j = jones_polynomial(b, *ctx);
    BraidWord g = word(3, 3);
    if (!(jones_polynomial(concat(concat(g, b), inverse(g)), *ctx) == j)) return "conjugation, trial " + std::to_string(trial);
    std::vector<int> w = b.word;
    w.push_back(trial % 2 ? 3 : -3);
    if (!(jones_polynomial(BraidWord(4, w), *ctx) == j)) return "stabilisation, trial " + std::to_string(trial);
  }
  return {};
}

bool same_set(const std::vector<SPoly>& a, const std::vector<SPoly>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a)
    if (std::count(b.begin(), b.end(), x) != 1) return false;
  return true;
}

std::string c10_annular() {
  for (int level = 1; level <= 3; ++level)
    for (bool positive : {true, false}) {
      const Scalar d = level_loop_value(level, positive);
      LevelTable t = level_tables(level, d);
      const std::string at = " at level " + std::to_string(level) + (positive ? "+" : "-");
      for (const auto& g : t.grades)
        if (!g.idempotents.empty() && !(g.check.idempotent && g.check.orthogonal && g.check.complete)) {
          return "grade " + std::to_string(g.grade) + " check" + at;
        }
      const Scalar one = d / d, zero = one - one, half = one / Scalar(2);
      if (level == 1) {
        const Scalar i = Scalar::generator(CycloField::get(12, 1)).pow(3);
        const Scalar s = positive ? one : i;
        if (!same_set(t.grades[0].idempotents, {spoly({half, half}), spoly({half, -half})})) return "grade 0" + at;
        if (!same_set(t.grades[1].idempotents, {spoly({half, half * s.inverse()}), spoly({half, -half * s.inverse()})})) {
          return "grade 1" + at;
        }
      }
      if (level == 2) {
        if (!same_set(t.grades[0].idempotents, {spoly({one, zero, -half}), spoly({zero, d / Scalar(4), one / Scalar(4)}),
                                                spoly({zero, -d / Scalar(4), one / Scalar(4)})})) {
          return "grade 0" + at;
        }
        std::vector<SPoly> closed_form;
        for (const auto& a : t.grades[1].roots) closed_form.push_back(spoly({a.pow(2), a, -a.pow(4), -a.pow(3)}).scaled((d + d).inverse()));
        if (!same_set(t.grades[1].idempotents, closed_form)) return "grade 1" + at;
      }
    }
  for (int level = 1; level <= 3; ++level) {
    auto c = irrep_count_check(level);
    if (!c.ok || c.total != (level + 1) * (level + 1)) return "irrep count at level " + std::to_string(level);
  }
  return {};
}

std::string c11_appendices() {
  std::mt19937 rng(1111);
  std::uniform_int_distribution<int> pick(-25, 25), deg(1, 5), den(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Scalar> roots;
    const int k = deg(rng);
    while (static_cast<int>(roots.size()) < k) {
      Scalar c(mpq_class(pick(rng), den(rng)));
      if (std::find(roots.begin(), roots.end(), c) == roots.end()) roots.push_back(c);
    }
    SPoly p = spoly({Scalar(1)});
    for (const auto& r : roots) p = p * spoly({-r, Scalar(1)});
    p = p.scaled(Scalar(mpq_class(1 + std::abs(pick(rng)), den(rng))));
    auto c = check_idempotents(PolyQuotientAlgebra(p), minimal_idempotents(p, roots));
    if (!(c.idempotent && c.orthogonal && c.complete)) return "idempotent decomposition, trial " + std::to_string(trial);
  }
  using V = std::vector<mpq_class>;
  std::uniform_int_distribution<int> entry(-3, 3);
  auto graph = [&] {
    long a = entry(rng), b = entry(rng), c = entry(rng);
    return QMatrix{V{1, 0, a, b}, V{0, 1, b, c}};
  };
  for (int trial = 0; trial < 200; ++trial) {
    QMatrix l1 = graph(), l2 = graph(), l3 = graph();
    const int m = maslov_index({4, l1, l2, l3});
    if (maslov_index({4, l3, l2, l1}) != -m) return "Maslov antisymmetry, trial " + std::to_string(trial);
    if (maslov_index({4, l1, l1, l3}) != 0 || maslov_index({4, l1, l3, l3}) != 0) return "Maslov degenerate triple";
  }
  return {};
}

std::string c12_unitarity() {
  for (const auto& ctx : unitary_contexts(4))
    for (int n = 1; n <= 6; ++n) {
      Matrix g = gram_matrix(n, *ctx);
      Eigen::MatrixXcd e(g.rows(), g.cols());
      for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) e(i, j) = g(i, j).approx();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e);
      const double low = es.eigenvalues().minCoeff();
      if (low < -1e-9) return "eigenvalue " + std::to_string(low) + " at n=" + std::to_string(n);
    }
  return {};
}

}  // namespace

int main() {
  criterion(1, "Jones-Wenzl suite, r = 4, 5", 10, c1_jones_wenzl);
  criterion(2, "Gram determinant equals the meander product, n <= 5", 60, c2_meander);
  criterion(3, "coloured Hopf link equals s-tilde, r = 3, 4, 5", 120, c3_hopf);
  criterion(4, "S-matrix dichotomy", 0, c4_dichotomy);
  criterion(5, "Verlinde dimensions", 0, c5_verlinde);
  criterion(6, "3-manifold values and Kirby moves, r = 3, 4", 60, c6_manifolds);
  criterion(7, "doubled invariant |Z|^2 = Z(X) Z(-X) within 1e-9", 0, c7_doubling);
  criterion(8, "Jones polynomial against state-sum and skein oracles, B_2 and B_3 up to 6 crossings", 0, c8_jones);
  criterion(9, "Markov invariance, 50 conjugations and stabilisations", 0, c9_markov);
  criterion(10, "annular idempotent tables, levels 1-3", 0, c10_annular);
  criterion(11, "minimal idempotents and Maslov index", 0, c11_appendices);
  criterion(12, "Gram form positive semidefinite at unitary roots, r = 4, n <= 6", 0, c12_unitarity);
  return failures;
}
