#pragma once

#include <string>
#include <vector>

#include "tlj/tl.hpp"

namespace tlj {

using SPoly = DensePoly<Scalar>;

/// SPoly from ascending coefficients.
SPoly spoly(std::vector<Scalar> coeffs);
/// Delta_n(x) with coefficients in the field of `one`.
SPoly chebyshev_spoly(int n, const Scalar& one);

/// F[x] / (modulus) with a monic modulus of positive degree.
class PolyQuotientAlgebra {
 public:
  explicit PolyQuotientAlgebra(SPoly modulus);

  const SPoly& modulus() const { return mod_; }
  int dimension() const { return mod_.degree(); }
  SPoly reduce(const SPoly& p) const;
  SPoly mul(const SPoly& a, const SPoly& b) const { return reduce(a * b); }
  SPoly one() const;
  SPoly x() const;

 private:
  SPoly mod_;
};

/// e_j = u_j / u_j(a_j), u_j = prod_{i != j} (x - a_i).  Throws RepeatedRoot
/// if two roots coincide, InvalidParameters if a root is not a root of p or
/// the root count differs from deg p.
std::vector<SPoly> minimal_idempotents(const SPoly& p, const std::vector<Scalar>& roots);

struct IdempotentCheck {
  bool idempotent;
  bool orthogonal;
  bool complete;
};
IdempotentCheck check_idempotents(const PolyQuotientAlgebra& alg, const std::vector<SPoly>& es);

/// Closure of a square element in the annulus: essential circles become x,
/// contractible ones d.  `poly` is the unreduced value, `residue` its class
/// in C_n(x) = F[x] / (Delta_n(x)).
struct AnnularTrace {
  SPoly poly;
  SPoly residue;
};
AnnularTrace annular_trace(const TLElement& p, const SkeinContext& ctx);

/// Loop value for the level-k tables: level 1 gives d = +-1, level 2
/// d = +-sqrt 2, level 3 the d^2 = 1 - d family (d = 1/phi or -phi).
/// `positive` picks the sign.  Values live in Q(zeta_{4(k+2)}).
Scalar level_loop_value(int level, bool positive);

struct GradeTable {
  int grade;
  /// Relation satisfied by the generator (R at grade 0, T at grade 1, the
  /// fractional twist F above that); empty when only the count is known.
  SPoly relation;
  std::vector<Scalar> roots;
  std::vector<SPoly> idempotents;
  IdempotentCheck check{};
  int count;
  /// 2k + 2 - 2h for h > 0, k + 1 at h = 0.
  int bound;
  std::string source;
};

struct LevelTable {
  int level;
  Scalar d;
  std::vector<GradeTable> grades;
  /// Index of the grade-0 idempotent that survives on the empty disk.
  int trivial_label;
  /// Values e_j(d) of the grade-0 idempotents on the empty disk.
  std::vector<Scalar> disk_values;
};

/// Throws Unsupported for levels other than 1..3 or a level-3 loop value
/// with d^2 = 1 + d; WrongD if d does not satisfy the level's relation.
LevelTable level_tables(int level, const Scalar& d);

struct IrrepCount {
  int level;
  std::vector<int> per_grade;
  int total;
  int expected;
  bool ok;
};
IrrepCount irrep_count_check(int level);

/// Leading part of the level-2 grade-2 idempotents, (1 +- i F) / 2, tested
/// in F[F] / (F^2 - s) for s = +1 and s = -1.
struct LeadingTwistCheck {
  bool idempotent_if_square_is_one;
  bool idempotent_if_square_is_minus_one;
};
LeadingTwistCheck level2_grade2_leading_check();

/// Closed-form coefficients of the level-2 grade-2 idempotents, over the
/// basis (1_2, T, B'bar B, Bbar B, B B', B'bar B', Bbar R B, B'bar R B).
std::vector<Scalar> level2_grade2_idempotent(bool plus, const Scalar& d);

}  // namespace tlj
