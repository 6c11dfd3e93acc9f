#include "doctest.h"

#include <Eigen/Dense>

#include "tlj/jones_wenzl.hpp"

using namespace tlj;

namespace {

bool killed_by_caps(const TLElement& p, const SkeinContext& ctx) {
  const int n = p.bottom();
  for (int i = 1; i < n; ++i) {
    TLElement u = generator_u(n, i, ctx);
    if (!compose(u, p, ctx).zero() || !compose(p, u, ctx).zero()) return false;
  }
  return true;
}

// Solve for x = id + sum c_D D with U_i x = 0 for every i by exact linear
// algebra at a rational loop value; returns nullopt unless the solution is unique.
std::optional<TLElement> solve_projector(int n, const SkeinContext& ctx) {
  const auto& ds = enumerate_matchings(n, n);
  const Matching id = identity_matching(n);
  std::vector<Matching> unknowns;
  for (const auto& m : ds)
    if (m != id) unknowns.push_back(m);
  const std::size_t cols = unknowns.size() + 1;
  QMatrix rows;
  for (int i = 1; i < n; ++i) {
    std::map<Matching, std::vector<mpq_class>> eq;
    auto column = [&](std::size_t col, const Matching& m) {
      TLElement single(n, n);
      single.add(m, 1);
      TLElement image = compose_u(single, i, ctx);
      for (const auto& [r, c] : image.terms()) {
        auto& row = eq.try_emplace(r, std::vector<mpq_class>(cols, mpq_class(0))).first->second;
        row[col] += *c.rational();
      }
    };
    for (std::size_t u = 0; u < unknowns.size(); ++u) column(u, unknowns[u]);
    column(unknowns.size(), id);
    for (auto& [r, row] : eq) rows.push_back(row);
  }
  QMatrix ns = null_space(rows);
  if (ns.size() != 1 || is_zero(ns[0].back())) return std::nullopt;
  TLElement x(n, n);
  x.add(id, 1);
  for (std::size_t u = 0; u < unknowns.size(); ++u) x.add(unknowns[u], Scalar(mpq_class(ns[0][u] / ns[0].back())));
  return x;
}

}  // namespace

TEST_CASE("small projectors") {
  auto ctx = SkeinContext::generic();
  CHECK(jones_wenzl(*ctx, 1)->element == TLElement::identity(1, *ctx));
  TLElement p2 = TLElement::identity(2, *ctx) - generator_u(2, 1, *ctx).scaled(ctx->d().inverse());
  CHECK(jones_wenzl(*ctx, 2)->element == p2);
  CHECK(jones_wenzl(*ctx, 0)->element.size() == 1);
  CHECK(jones_wenzl(*ctx, 4)->mu.size() == 3);
  CHECK(jones_wenzl(*ctx, 3)->mu[1] == ctx->d() / chebyshev(2, ctx->d()));
}

TEST_CASE("projector identities over Q(A)") {
  auto ctx = SkeinContext::generic();
  for (int n = 1; n <= 5; ++n) {
    const TLElement& p = jones_wenzl(*ctx, n)->element;
    CHECK(compose(p, p, *ctx) == p);
    CHECK(killed_by_caps(p, *ctx));
    CHECK(p.coeff(identity_matching(n)).is_one());
    CHECK(markov_trace(p, *ctx) == chebyshev(n, ctx->d()));
    CHECK(reflect(p) == p);
  }
  CHECK(markov_trace(jones_wenzl(*ctx, 6)->element, *ctx) == chebyshev(6, ctx->d()));
}

TEST_CASE("projector identities at roots of unity") {
  for (int r : {4, 5, 6}) {
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) {
        auto [m, t] = unitary_root(r, s1, s2);
        auto ctx = SkeinContext::at_root(m, t);
        for (int n = 1; n <= r - 1; ++n) {
          const TLElement& p = jones_wenzl(*ctx, n)->element;
          CHECK(compose(p, p, *ctx) == p);
          CHECK(killed_by_caps(p, *ctx));
          CHECK(markov_trace(p, *ctx) == chebyshev(n, ctx->d()));
        }
        CHECK(markov_trace(jones_wenzl(*ctx, r - 1)->element, *ctx).is_zero());
        try {
          jones_wenzl(*ctx, r);
          FAIL("p_r should not exist");
        } catch (const ChebyshevRoot& e) {
          CHECK(e.index() == r - 1);
        }
      }
  }
}

TEST_CASE("projector is the unique solution of the defining equations") {
  for (int n = 2; n <= 5; ++n) {
    auto ctx = SkeinContext::with_loop_value(Scalar(mpq_class(5, 2)));
    auto solved = solve_projector(n, *ctx);
    REQUIRE(solved.has_value());
    CHECK(*solved == jones_wenzl(*ctx, n)->element);
  }
}

TEST_CASE("partial trace") {
  auto ctx = SkeinContext::generic();
  const Scalar d = ctx->d();
  CHECK(partial_trace(TLElement::identity(3, *ctx), *ctx) == TLElement::identity(2, *ctx).scaled(d));
  CHECK(partial_trace(TLElement::identity(1, *ctx), *ctx).coeff({}) == d);
  for (int n = 2; n <= 5; ++n) {
    Scalar f = chebyshev(n, d) / chebyshev(n - 1, d);
    CHECK(partial_trace(jones_wenzl(*ctx, n)->element, *ctx) == jones_wenzl(*ctx, n - 1)->element.scaled(f));
  }
  CHECK_THROWS_AS(partial_trace(TLElement(2, 4), *ctx), ShapeMismatch);
}

TEST_CASE("admissibility") {
  CHECK(admissible(0, 0, 0, 3));
  CHECK(admissible(1, 1, 2, 4));
  CHECK_FALSE(admissible(1, 1, 3, 4));
  CHECK_FALSE(admissible(2, 2, 2, 4));
  CHECK(admissible(2, 2, 2, 5));
  CHECK_FALSE(admissible(3, 1, 1, 9));
}

TEST_CASE("theta symbols") {
  auto ctx = SkeinContext::generic();
  CHECK(theta_symbol(*ctx, 0, 0, 0).is_one());
  for (int i = 0; i <= 4; ++i) CHECK(theta_symbol(*ctx, i, i, 0) == chebyshev(i, ctx->d()));
  CHECK(theta_symbol(*ctx, 1, 1, 1).is_zero());
  CHECK(theta_symbol(*ctx, 1, 2, 1) == theta_symbol(*ctx, 2, 1, 1));
  CHECK(theta_symbol(*ctx, 1, 1, 2) == theta_symbol(*ctx, 2, 1, 1));
  // theta(1,1,2) = Delta_2 for the bare network
  CHECK(theta_symbol(*ctx, 1, 1, 2) == chebyshev(2, ctx->d()));
}

TEST_CASE("theta vanishing matches admissibility at roots") {
  for (int r : {4, 5}) {
    auto [m, t] = unitary_root(r, 1, 1);
    auto ctx = SkeinContext::at_root(m, t);
    for (int i = 0; i <= r - 2; ++i)
      for (int j = 0; j <= r - 2; ++j)
        for (int k = 0; k <= r - 2; ++k) CHECK(!theta_symbol(*ctx, i, j, k).is_zero() == admissible(i, j, k, r));
  }
}

TEST_CASE("closed networks through the top projector vanish") {
  for (int r : {4, 5}) {
    for (int s1 : {1, -1}) {
      auto [m, t] = unitary_root(r, s1, 1);
      auto ctx = SkeinContext::at_root(m, t);
      auto report = closed_network_vanishing(*ctx, r);
      CHECK(report.size() >= 3);
      for (const auto& v : report) {
        INFO(v.name);
        CHECK(v.value.is_zero() == v.expect_zero);
      }
    }
  }
}

TEST_CASE("top projector generates the Gram kernel at r = 4") {
  auto [m, t] = unitary_root(4, 1, 1);
  auto ctx = SkeinContext::at_root(m, t);
  // dims of the truncated path spaces on the graph 0 - 1 - 2
  for (int n = 3; n <= 5; ++n) {
    std::vector<long> paths{1, 0, 0};
    for (int s = 0; s < n; ++s) paths = {paths[1], paths[0] + paths[2], paths[1]};
    long quotient = 0;
    for (long p : paths) quotient += p * p;
    Matrix g = gram_matrix(n, *ctx);
    CHECK(rank(g) == quotient);
    // p_3 (x) id lies in the radical
    TLElement p = tensor(jones_wenzl(*ctx, 3)->element, TLElement::identity(n - 3, *ctx));
    for (const auto& dm : enumerate_matchings(n, n)) {
      TLElement di(n, n);
      di.add(dm, 1);
      CHECK(markov_trace(compose(reflect(di), p, *ctx), *ctx).is_zero());
    }
  }
}

TEST_CASE("Gram form is positive semidefinite at unitary roots") {
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      auto [m, t] = unitary_root(4, s1, s2);
      auto ctx = SkeinContext::at_root(m, t);
      for (int n = 1; n <= 5; ++n) {
        Matrix g = gram_matrix(n, *ctx);
        Eigen::MatrixXcd e(g.rows(), g.cols());
        for (int i = 0; i < g.rows(); ++i)
          for (int j = 0; j < g.cols(); ++j) e(i, j) = g(i, j).approx();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e);
        CHECK(es.eigenvalues().minCoeff() >= -1e-9);
      }
    }
}
