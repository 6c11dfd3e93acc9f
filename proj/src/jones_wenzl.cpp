#include "tlj/jones_wenzl.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace tlj {

namespace {

std::shared_mutex cache_mu;
std::map<std::pair<std::uint64_t, int>, std::shared_ptr<const JWProjector>> cache;

std::shared_ptr<const JWProjector> lookup(const SkeinContext& ctx, int n) {
  std::shared_lock lock(cache_mu);
  auto it = cache.find({ctx.id(), n});
  return it == cache.end() ? nullptr : it->second;
}

}  // namespace

std::shared_ptr<const JWProjector> jones_wenzl(const SkeinContext& ctx, int n) {
  if (n < 0) throw InvalidParameters("projector size must be nonnegative");
  if (auto p = lookup(ctx, n)) return p;
  std::shared_ptr<const JWProjector> result;
  if (n <= 1) {
    result = std::make_shared<const JWProjector>(JWProjector{n, TLElement::identity(n, ctx), {}});
  } else {
    auto prev = jones_wenzl(ctx, n - 1);
    const int k = n - 1;
    Scalar delta_k = chebyshev(k, ctx.d());
    if (delta_k.is_zero()) throw ChebyshevRoot(k);
    Scalar mu = chebyshev(k - 1, ctx.d()) / delta_k;
    TLElement q = tensor(prev->element, TLElement::identity(1, ctx));
    TLElement quq = compose(compose_u(q, k, ctx), q, ctx);
    std::vector<Scalar> mus = prev->mu;
    mus.push_back(mu);
    result = std::make_shared<const JWProjector>(JWProjector{n, q - quq.scaled(mu), std::move(mus)});
  }
  std::unique_lock lock(cache_mu);
  return cache.try_emplace({ctx.id(), n}, std::move(result)).first->second;
}

TLElement partial_trace(const TLElement& p, const SkeinContext& ctx) {
  const int n = p.bottom();
  if (n != p.top() || n < 1) throw ShapeMismatch("partial trace needs a square element with at least one strand");
  TLElement out(n - 1, n - 1);
  for (const auto& [m, c] : p.terms()) {
    // identify top point n-1 with bottom point n-1
    const int bot = n - 1, top = 2 * n - 1;
    Matching r(static_cast<std::size_t>(2 * (n - 1)));
    auto to_new = [&](int q) { return q < n ? q : q - 1; };
    int loops = 0;
    if (m[static_cast<std::size_t>(bot)] == top) {
      loops = 1;
      for (int q = 0; q < 2 * n; ++q) {
        if (q == bot || q == top) continue;
        r[static_cast<std::size_t>(to_new(q))] = to_new(m[static_cast<std::size_t>(q)]);
      }
    } else {
      int a = m[static_cast<std::size_t>(bot)], b = m[static_cast<std::size_t>(top)];
      for (int q = 0; q < 2 * n; ++q) {
        if (q == bot || q == top || q == a || q == b) continue;
        r[static_cast<std::size_t>(to_new(q))] = to_new(m[static_cast<std::size_t>(q)]);
      }
      r[static_cast<std::size_t>(to_new(a))] = to_new(b);
      r[static_cast<std::size_t>(to_new(b))] = to_new(a);
    }
    out.add(r, c * ctx.d_power(loops));
  }
  return out;
}

bool admissible(int i, int j, int k, int r) {
  if (i < 0 || j < 0 || k < 0) return false;
  if ((i + j + k) % 2 != 0) return false;
  if (i + j < k || j + k < i || i + k < j) return false;
  return i + j + k <= 2 * (r - 2);
}

Scalar theta_symbol(const SkeinContext& ctx, int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0) throw InvalidParameters("theta labels must be nonnegative");
  Scalar zero = ctx.one() - ctx.one();
  if ((i + j + k) % 2 != 0 || i + j < k || j + k < i || i + k < j) return zero;
  const int s = (i + j - k) / 2;  // strands running between the i and j bands
  // X: (i + j) bottom points -> k top points, capping the middle s pairs
  const int b = i + j;
  Matching x(static_cast<std::size_t>(b + k));
  for (int q = 0; q < s; ++q) {
    int left = i - 1 - q, right = i + q;
    x[static_cast<std::size_t>(left)] = right;
    x[static_cast<std::size_t>(right)] = left;
  }
  int out = 0;
  for (int q = 0; q < b; ++q) {
    if (q >= i - s && q < i + s) continue;
    x[static_cast<std::size_t>(q)] = b + out;
    x[static_cast<std::size_t>(b + out)] = q;
    ++out;
  }
  TLElement cap(b, k);
  cap.add(x, ctx.one());
  TLElement pij = tensor(jones_wenzl(ctx, i)->element, jones_wenzl(ctx, j)->element);
  TLElement net = compose(compose(compose(reflect(cap), pij, ctx), cap, ctx), jones_wenzl(ctx, k)->element, ctx);
  return markov_trace(net, ctx);
}

std::vector<NetworkValue> closed_network_vanishing(const SkeinContext& ctx, int r) {
  if (r < 3) throw InvalidParameters("r must be at least 3");
  std::vector<NetworkValue> out;
  const int top = r - 1;
  out.push_back({"tr(p_" + std::to_string(top) + ")", markov_trace(jones_wenzl(ctx, top)->element, ctx), true});
  for (int j = 1; j <= r - 2; ++j)
    for (int k = 0; k <= r - 2; ++k) {
      if ((top + j + k) % 2 != 0 || top + j < k || j + k < top || top + k < j) continue;
      std::string name = "theta(" + std::to_string(top) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
      out.push_back({name, theta_symbol(ctx, top, j, k), true});
    }
  // p_{r-1} placed inside a larger closure: p_{r-1} (x) id_1 followed by U_{r-1}
  TLElement bigger = tensor(jones_wenzl(ctx, top)->element, TLElement::identity(1, ctx));
  out.push_back({"tr((p_" + std::to_string(top) + " (x) 1) U_" + std::to_string(top) + ")",
                 markov_trace(compose_u(bigger, top, ctx), ctx), true});
  out.push_back({"tr(p_" + std::to_string(r - 2) + ")", markov_trace(jones_wenzl(ctx, r - 2)->element, ctx), false});
  return out;
}

}  // namespace tlj
