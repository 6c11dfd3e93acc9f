#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tlj/tl.hpp"

namespace tlj {

struct JWProjector {
  int n;
  TLElement element;
  /// mu_k = Delta_{k-1}(d) / Delta_k(d) for k = 1..n-1.
  std::vector<Scalar> mu;
};

/// p_n by the Wenzl recursion, memoized per (context, n).  Throws
/// ChebyshevRoot(k) when Delta_k(d) = 0 for some k < n.
std::shared_ptr<const JWProjector> jones_wenzl(const SkeinContext& ctx, int n);

/// Close the rightmost strand.
TLElement partial_trace(const TLElement& p, const SkeinContext& ctx);

/// Bare value of the theta network with bands coloured i, j, k; zero when
/// the parity or triangle conditions fail.
Scalar theta_symbol(const SkeinContext& ctx, int i, int j, int k);

/// Parity, triangle and level conditions for theta(i, j, k) != 0.
bool admissible(int i, int j, int k, int r);

struct NetworkValue {
  std::string name;
  Scalar value;
  bool expect_zero;
};

/// Closed networks containing p_{r-1} (which must vanish) together with
/// the trace of p_{r-2} (which must not).
std::vector<NetworkValue> closed_network_vanishing(const SkeinContext& ctx, int r);

}  // namespace tlj
