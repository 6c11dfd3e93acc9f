#include "tlj/manifold.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>


namespace tlj {

IntMatrix linking_matrix(const ColoredFramedLink& link) {
  validate(link);
  auto mixed = mixed_crossing_sums(link.braid);
  const std::size_t k = link.components.size();
  IntMatrix m(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    m[i][i] = link.components[i].framing;
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (mixed[i][j] % 2 != 0) {
        throw OddCrossingParity("components " + std::to_string(i) + " and " + std::to_string(j) +
                                " cross an odd number of times");
      }
      m[i][j] = mixed[i][j] / 2;
    }
  }
  return m;
}

SurgeryPresentation make_surgery(const BraidWord& b, const std::vector<int>& framings) {
  SurgeryPresentation s;
  s.link.braid = b;
  for (int f : framings) s.link.components.push_back({f, 1});
  s.framing_matrix = linking_matrix(s.link);
  return s;
}

SurgeryPresentation disjoint_union(const SurgeryPresentation& x, const SurgeryPresentation& y) {
  const int shift = x.link.braid.strands;
  std::vector<int> word = x.link.braid.word;
  for (int l : y.link.braid.word) word.push_back(l > 0 ? l + shift : l - shift);
  std::vector<int> framings;
  for (const auto& c : x.link.components) framings.push_back(c.framing);
  for (const auto& c : y.link.components) framings.push_back(c.framing);
  // components are ordered by their minimum strand, so x's come first
  return make_surgery(BraidWord(shift + y.link.braid.strands, std::move(word)), framings);
}

int signature(const IntMatrix& m) {
  QMatrix q;
  for (const auto& row : m) {
    q.emplace_back();
    for (long v : row) q.back().emplace_back(v);
  }
  return signature(q);
}

namespace {

std::shared_mutex memo_mu;
std::map<std::pair<std::uint64_t, std::string>, Scalar> memo;

Scalar memo_bracket(const ColoredFramedLink& link, const SkeinContext& ctx) {
  std::pair<std::uint64_t, std::string> key{ctx.id(), link_to_json(link).dump()};
  {
    std::shared_lock lock(memo_mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Scalar v = colored_bracket(link, ctx);
  std::unique_lock lock(memo_mu);
  if (memo.size() > 200000) memo.clear();
  return memo.try_emplace(std::move(key), std::move(v)).first->second;
}

long label_vectors(const ColoredFramedLink& link, const ModularData& md, long limit) {
  validate(link);
  long total = 1;
  for (std::size_t c = 0; c < link.components.size(); ++c) {
    total *= md.rank();
    if (total > limit) {
      throw ResourceLimit("omega_0 colouring needs more than " + std::to_string(limit) + " label vectors");
    }
  }
  return total;
}

// Label vector number `idx`, first component fastest; returns the weight prod d_j.
Scalar decode(long idx, const ModularData& md, ColoredFramedLink& coloured) {
  Scalar w = md.ctx->one();
  for (auto& comp : coloured.components) {
    comp.color = static_cast<int>(idx % md.rank());
    idx /= md.rank();
    w *= md.dims[static_cast<std::size_t>(comp.color)];
  }
  return w;
}

Scalar to_field(const Scalar& s, const FieldPtr& f) {
  if (!s.is_cyclotomic() || s.field() == f) return s;
  return Scalar(s.as_cyclotomic().lift(f));
}

}  // namespace

void clear_bracket_cache() {
  std::unique_lock lock(memo_mu);
  memo.clear();
}

Scalar omega_bracket_serial(const ColoredFramedLink& link, const ModularData& md, long limit) {
  const long total = label_vectors(link, md, limit);
  Scalar sum = md.ctx->one() - md.ctx->one();
  ColoredFramedLink coloured = link;
  for (long idx = 0; idx < total; ++idx) {
    Scalar w = decode(idx, md, coloured);
    sum += w * memo_bracket(coloured, *md.ctx);
  }
  return sum;
}

Scalar omega_bracket(const ColoredFramedLink& link, const ModularData& md, long limit) {
  const long total = label_vectors(link, md, limit);
  if (total < 4) return omega_bracket_serial(link, md, limit);
  Scalar sum = md.ctx->one() - md.ctx->one();
#pragma omp parallel
  {
    Scalar part = md.ctx->one() - md.ctx->one();
    ColoredFramedLink coloured = link;
#pragma omp for schedule(dynamic, 1)
    for (long idx = 0; idx < total; ++idx) {
      Scalar w = decode(idx, md, coloured);
      part += w * memo_bracket(coloured, *md.ctx);
    }
#pragma omp critical(tlj_omega_sum)
    sum += part;
  }
  return sum;
}

RTResult rt_invariant(const SurgeryPresentation& s, const ModularData& md) {
  if (!md.modular) throw NonModular("the surgery invariant needs a modular s-tilde (4r-primitive root)");
  const ModularData ext = md.total_dimension ? md : with_total_dimension(md);
  const FieldPtr f = ext.ctx->a().field();
  RTResult out;
  out.bracket = omega_bracket(s.link, md);
  out.sigma = signature(s.framing_matrix);
  out.components = static_cast<int>(s.link.components.size());
  const Scalar& big_d = *ext.total_dimension;
  out.z = big_d.pow(-(out.components + 1L + out.sigma)) * ext.p_minus.pow(out.sigma) * to_field(out.bracket, f);
  out.z_approx = out.z.approx();
  return out;
}

Scalar doubled_invariant(const SurgeryPresentation& s, const ModularData& md) {
  Scalar z = rt_invariant(s, md).z;
  return z * z.bar();
}

SurgeryPresentation stabilize(const SurgeryPresentation& s, int sign, bool explicit_kink) {
  if (sign != 1 && sign != -1) throw InvalidParameters("stabilisation sign must be +1 or -1");
  SurgeryPresentation u = explicit_kink ? make_surgery(BraidWord(2, {sign}), {sign}) : make_surgery(BraidWord(1, {}), {sign});
  return disjoint_union(s, u);
}

std::vector<KirbyCheck> kirby_harness(const SurgeryPresentation& s, const ModularData& md) {
  const ModularData ext = md.total_dimension ? md : with_total_dimension(md);
  auto z = [&](const SurgeryPresentation& p) { return rt_invariant(p, ext).z; };
  std::vector<KirbyCheck> out;
  auto record = [&](std::string name, Scalar before, Scalar after) {
    bool eq = before == after;
    out.push_back({std::move(name), std::move(before), std::move(after), eq});
  };
  const Scalar base = z(s);
  for (int sign : {1, -1})
    for (bool kink : {false, true}) {
      std::string name = std::string("stabilize ") + (sign > 0 ? "+1" : "-1") + (kink ? " (kinked unknot)" : "");
      record(name, base, z(stabilize(s, sign, kink)));
    }
  const SurgeryPresentation empty = make_surgery(BraidWord(0, {}), {});
  for (int p = -2; p <= 2; ++p) {
    const std::string ps = std::to_string(p);
    record("slide: unknots (" + ps + ",1) -> Hopf (" + std::to_string(p + 1) + ",1)",
           z(make_surgery(BraidWord(2, {}), {p, 1})), z(make_surgery(BraidWord(2, {1, 1}), {p + 1, 1})));
    record("slide: unknots (" + ps + ",1) -> Hopf^-1 (" + std::to_string(p + 1) + ",1)",
           z(make_surgery(BraidWord(2, {}), {p, 1})), z(make_surgery(BraidWord(2, {-1, -1}), {p + 1, 1})));
    record("cancel: Hopf (" + ps + ",0) = S^3", z(empty), z(make_surgery(BraidWord(2, {1, 1}), {p, 0})));
  }
  return out;
}

mpq_class symplectic_form(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) {
  if (x.size() != y.size() || x.size() % 2) throw ShapeMismatch("symplectic form needs two vectors of the same even length");
  const std::size_t g = x.size() / 2;
  mpq_class s = 0;
  for (std::size_t i = 0; i < g; ++i) s += x[i] * y[g + i] - x[g + i] * y[i];
  return s;
}

int maslov_index(const LagrangianTriple& t) {
  const int n = t.dimension;
  if (n < 0 || n % 2) throw InvalidParameters("symplectic dimension must be even");
  const QMatrix* ls[3] = {&t.lambda1, &t.lambda2, &t.lambda3};
  for (int k = 0; k < 3; ++k) {
    for (const auto& v : *ls[k])
      if (static_cast<int>(v.size()) != n) throw ShapeMismatch("basis vector of the wrong length");
    for (const auto& u : *ls[k])
      for (const auto& v : *ls[k])
        if (symplectic_form(u, v) != 0) throw NotIsotropic("lambda" + std::to_string(k + 1) + " is not isotropic");
  }
  const std::size_t k1 = t.lambda1.size(), k2 = t.lambda2.size(), k3 = t.lambda3.size();
  // columns: lambda1 basis, lambda2 basis, minus lambda3 basis
  QMatrix sys(static_cast<std::size_t>(n), std::vector<mpq_class>(k1 + k2 + k3));
  for (int r = 0; r < n; ++r) {
    const auto ri = static_cast<std::size_t>(r);
    for (std::size_t a = 0; a < k1; ++a) sys[ri][a] = t.lambda1[a][ri];
    for (std::size_t b = 0; b < k2; ++b) sys[ri][k1 + b] = t.lambda2[b][ri];
    for (std::size_t c = 0; c < k3; ++c) sys[ri][k1 + k2 + c] = -t.lambda3[c][ri];
  }
  QMatrix sols = null_space(sys);
  if (sols.empty()) return 0;
  std::vector<std::vector<mpq_class>> v, v2;
  for (const auto& s : sols) {
    std::vector<mpq_class> vv(static_cast<std::size_t>(n), 0), ww(static_cast<std::size_t>(n), 0);
    for (std::size_t c = 0; c < k3; ++c)
      for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) vv[r] += s[k1 + k2 + c] * t.lambda3[c][r];
    for (std::size_t b = 0; b < k2; ++b)
      for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) ww[r] += s[k1 + b] * t.lambda2[b][r];
    v.push_back(std::move(vv));
    v2.push_back(std::move(ww));
  }
  QMatrix form(sols.size(), std::vector<mpq_class>(sols.size()));
  for (std::size_t i = 0; i < sols.size(); ++i)
    for (std::size_t j = 0; j < sols.size(); ++j) form[i][j] = symplectic_form(v2[i], v[j]);
  for (std::size_t i = 0; i < sols.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (form[i][j] != form[j][i]) throw NotIsotropic("Maslov form is not symmetric; the subspaces are not isotropic");
  return signature(form);
}

}  // namespace tlj
