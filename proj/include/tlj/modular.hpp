#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "tlj/braid.hpp"
#include "tlj/matrix.hpp"
#include "tlj/tl.hpp"

namespace tlj {

/// Order of A relative to r: primitive 4r-th root, or (r odd) primitive
/// 2r-th or r-th root.
enum class RootClass { Primitive4r, Primitive2r, PrimitiveR };

RootClass parse_root_class(const std::string& s);
std::string root_class_name(RootClass c);
int root_order(int r, RootClass c);

struct ModularData {
  int r = 3;
  RootClass root_class = RootClass::Primitive4r;
  /// A = exp(2 pi i t / order) as given by the caller.
  int order = 12, embedding = 1;
  ContextPtr ctx;
  std::vector<int> labels;
  std::vector<Scalar> dims;
  std::vector<Scalar> twists;
  Matrix s_tilde;
  Scalar d_squared;
  Scalar p_plus, p_minus;
  /// det(s-tilde) != 0.
  bool modular = false;
  /// Positive square root of d_squared, present once the context has been
  /// extended far enough to contain it.
  std::optional<Scalar> total_dimension;

  int rank() const { return r - 1; }
};

/// Closed-form modular data at A = exp(2 pi i t / m), m = root_order(r, c).
ModularData build_modular_data(int r, RootClass c, int t = 1);

/// The same data over Q(zeta_M), M = lcm(m, 8), where D itself is exact.
/// Throws MissingExtension if D^2 is not -2r / (A^2 - A^-2)^2.
ModularData with_total_dimension(const ModularData& md);

/// Context whose field order is lcm(m, multiple), with A mapped to the
/// same complex number.
ContextPtr lift_context(const SkeinContext& ctx, int multiple);

/// Exact square root of a nonzero integer n whose prime factors (and 8, and
/// 4 when n < 0) divide the field order.  The sign is unspecified.
Scalar integer_sqrt(long n, const FieldPtr& f);

struct RankReport {
  int rank;
  bool modular;
};
RankReport s_matrix_rank(const ModularData& md);

/// Odd classes: labels i and r-2-i give identical rows of s-tilde, and after
/// ordering labels as (e, r-2-e) pairs over even e, s-tilde is the Kronecker
/// product of its even block with [[1,1],[1,1]].
struct OddClassSplit {
  std::vector<int> order;
  Matrix s_even;
  bool rows_paired;
  bool kronecker;
};
OddClassSplit odd_class_split(const ModularData& md);

/// omega_i = D^{-2} sum_j coefficients[j] p_j; coefficients are s-tilde_{ij}.
/// The surgery colour used by the 3-manifold invariant is D^2 omega_0.
struct OmegaProjector {
  int label;
  std::vector<Scalar> coefficients;
};
OmegaProjector omega_projector(const ModularData& md, int i);

/// N_{abc} = sum_x s_ax s_bx s_cx / s_0x.
long fusion(const ModularData& md, int a, int b, int c);
/// Full N tensor, indexed [a][b][c].
std::vector<std::vector<std::vector<long>>> fusion_tensor(const ModularData& md);

/// dim V of a genus-g surface with boundary labels.
long verlinde_dim(const ModularData& md, int genus, const std::vector<int>& boundary);

struct VerlindeAlgebra {
  /// m_a m_b = sum_c mult[a][b][c] m_c.
  std::vector<std::vector<std::vector<long>>> mult;
  /// Rescaled longitudes l_a = sum_b s-tilde_ab m_b satisfy
  /// l_a l_b = delta_ab eigen[a] l_a with eigen[a] = D^2 / s-tilde_0a.
  std::vector<Scalar> eigen;
  bool unit_ok;
  bool longitudes_diagonal;
  bool idempotents_ok;
  bool roundtrip_ok;
};
VerlindeAlgebra verlinde_algebra(const ModularData& md);

struct SL2ZReport {
  bool s4_identity;
  bool st3_proportional;
  bool t_unitary;
  Scalar lambda;
  std::complex<double> lambda_approx;
  double central_charge;
  /// |lambda - exp(+-2 pi i c / 8)|.
  double phase_error_plus, phase_error_minus;
  /// lambda == p_+ / D exactly.
  bool lambda_is_gauss_sum;
};
/// Needs the D-extended data (with_total_dimension).
SL2ZReport sl2z_check(const ModularData& md);

/// (-i)^{writhe} <closure>(iA), over Q(zeta_M) with M = lcm(m, 4).
Scalar km_bracket(const BraidWord& b, const SkeinContext& ctx);

}  // namespace tlj
