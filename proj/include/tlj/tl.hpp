#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tlj/matrix.hpp"
#include "tlj/scalar.hpp"

namespace tlj {

/// Where the skein calculus is evaluated: a value of A (formal, or a root of
/// unity) and the loop value d = -A^2 - A^{-2}.  A context built from a bare
/// loop value supports diagram algebra only, not braids.
class SkeinContext {
 public:
  /// Q(A) with A formal.
  static std::shared_ptr<const SkeinContext> generic();
  /// A = exp(2 pi i t / m) in Q(zeta_m).
  static std::shared_ptr<const SkeinContext> at_root(int m, int t);
  /// Arbitrary value of A (e.g. iA for the Kirby-Melvin bracket).
  static std::shared_ptr<const SkeinContext> with_a(Scalar a);
  /// Only d is known.
  static std::shared_ptr<const SkeinContext> with_loop_value(Scalar d);

  bool has_a() const { return a_.has_value(); }
  const Scalar& a() const;
  const Scalar& d() const { return d_; }
  /// d^k for k >= 0.
  const Scalar& d_power(int k) const;
  /// Unit of the scalar field (1 in the right kind).
  const Scalar& one() const { return one_; }
  FieldPtr field() const { return d_.field(); }
  /// Process-unique identifier used as a cache key.
  std::uint64_t id() const { return id_; }

  SkeinContext(std::optional<Scalar> a, Scalar d);

 private:
  std::optional<Scalar> a_;
  Scalar d_;
  Scalar one_;
  std::vector<Scalar> d_pow_;
  std::uint64_t id_;
};

using ContextPtr = std::shared_ptr<const SkeinContext>;

/// A = s1 * i * exp(s2 * 2 pi i / 4r) reduced to lowest terms, returned as
/// (order m, embedding exponent t).  s1, s2 are +1 or -1.
std::pair<int, int> unitary_root(int r, int s1, int s2);

/// Fixed-point-free involution on boundary points.  Points 0..bottom-1 are the
/// bottom edge left to right, bottom..bottom+top-1 the top edge left to right.
using Matching = std::vector<int>;

class TLDiagram {
 public:
  TLDiagram(int bottom, int top, Matching m, int loops = 0);

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const Matching& matching() const { return m_; }
  int loops() const { return loops_; }

  /// 1-based text form "b;t;[(a,b),...];loops=k".
  std::string text() const;
  static TLDiagram parse(const std::string& s);

  friend bool operator==(const TLDiagram&, const TLDiagram&) = default;

 private:
  int bottom_, top_;
  Matching m_;
  int loops_;
};

/// True if the involution has no two interleaving pairs in the rectangle's
/// cyclic order (bottom left to right, then top right to left).
bool is_planar(int bottom, int top, const Matching& m);

struct ComposedMatching {
  Matching m;
  int loops;
};

/// Stack y on top of x (x.top == y.bottom points) and count closed loops.
ComposedMatching compose_matchings(int xb, int xt, const Matching& x, int yt, const Matching& y);

TLDiagram compose(const TLDiagram& x, const TLDiagram& y);
TLDiagram tensor(const TLDiagram& x, const TLDiagram& y);
TLDiagram reflect(const TLDiagram& x);
/// Number of closed loops formed by the trace closure (plus carried loops).
int closure_loops(const TLDiagram& x);

/// Formal linear combination of loop-free diagrams of one shape.
class TLElement {
 public:
  using Terms = std::map<Matching, Scalar>;

  TLElement(int bottom, int top) : bottom_(bottom), top_(top) {}
  TLElement(int bottom, int top, Terms terms);
  /// c * d^loops * x.
  static TLElement from_diagram(const TLDiagram& x, const SkeinContext& ctx, const Scalar& c);
  static TLElement identity(int n, const SkeinContext& ctx);

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool zero() const { return terms_.empty(); }
  /// Coefficient of a loop-free diagram (zero if absent).
  Scalar coeff(const Matching& m) const;

  void add(const Matching& m, const Scalar& c);

  friend bool operator==(const TLElement& a, const TLElement& b);
  friend TLElement operator+(const TLElement& a, const TLElement& b);
  friend TLElement operator-(const TLElement& a, const TLElement& b);
  TLElement scaled(const Scalar& c) const;

 private:
  int bottom_, top_;
  Terms terms_;
};

/// Identity diagram on n strands.
Matching identity_matching(int n);

TLElement generator_u(int n, int i, const SkeinContext& ctx);

/// x below y.  The default entry point runs the OpenMP kernel.
TLElement compose(const TLElement& x, const TLElement& y, const SkeinContext& ctx);
/// Single-threaded reference implementation of compose.
TLElement compose_serial(const TLElement& x, const TLElement& y, const SkeinContext& ctx);
/// x . U_i, specialised for braid resolution.
TLElement compose_u(const TLElement& x, int i, const SkeinContext& ctx);

TLElement tensor(const TLElement& x, const TLElement& y);
TLElement reflect(const TLElement& x);
Scalar markov_trace(const TLElement& x, const SkeinContext& ctx);

/// All planar loop-free matchings of the given shape, sorted lexicographically
/// on the involution array.  Cached and shared between threads.
const std::vector<Matching>& enumerate_matchings(int bottom, int top, long limit = 100000);
std::vector<TLDiagram> enumerate_diagrams(int bottom, int top, long limit = 100000);

/// Catalan number C_n as a GMP integer.
mpz_class catalan(int n);

/// Loop counts k_ij of tr(reflect(D_i) . D_j); the Gram entry is d^k_ij.
std::vector<std::vector<int>> gram_exponents(int n, long limit = 100000);
std::vector<std::vector<int>> gram_exponents_serial(int n, long limit = 100000);

/// Gram matrix of TL_n in enumeration order.
Matrix gram_matrix(int n, const SkeinContext& ctx, long limit = 100000);

/// Meander exponent a_{n,i} of the Gram determinant factorisation.
mpz_class meander_exponent(int n, int i);

std::string to_string(const TLElement& x);

}  // namespace tlj
