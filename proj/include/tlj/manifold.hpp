#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tlj/braid.hpp"
#include "tlj/matrix.hpp"
#include "tlj/modular.hpp"

namespace tlj {

using IntMatrix = std::vector<std::vector<long>>;

/// Framed link in S^3 whose components will all be coloured by omega_0.
struct SurgeryPresentation {
  ColoredFramedLink link;
  IntMatrix framing_matrix;
};

/// Framings on the diagonal, linking numbers (signed crossings between two
/// components, halved) off it.  Throws OddCrossingParity on an odd count.
IntMatrix linking_matrix(const ColoredFramedLink& link);

/// Closure of `b` with the given framings (one per component).
SurgeryPresentation make_surgery(const BraidWord& b, const std::vector<int>& framings);
/// Side-by-side union: the second braid is placed on strands to the right.
SurgeryPresentation disjoint_union(const SurgeryPresentation& x, const SurgeryPresentation& y);

int signature(const IntMatrix& m);

/// <omega_0 * l> with the colour sum_j d_j p_j on every component, summed
/// over all (r-1)^k label vectors.  `limit` caps the number of vectors.
Scalar omega_bracket(const ColoredFramedLink& link, const ModularData& md, long limit = 100000);
/// Same sum, one label vector at a time on the calling thread.
Scalar omega_bracket_serial(const ColoredFramedLink& link, const ModularData& md, long limit = 100000);
/// Drop the coloured-bracket memo shared by both label sums (benchmarks).
void clear_bracket_cache();

struct RTResult {
  /// <omega_0 * l> in Q(A) at the chosen root, free of D.
  Scalar bracket;
  int sigma;
  int components;
  /// Z = D^{-(m + 1 + sigma)} p_-^sigma bracket, in the D-extended field.
  Scalar z;
  std::complex<double> z_approx;
};
/// Jones-Kauffman invariant of the surgered manifold.  md must be modular;
/// D is adjoined if md does not carry it yet.
RTResult rt_invariant(const SurgeryPresentation& s, const ModularData& md);

/// Z * conj(Z), exact.
Scalar doubled_invariant(const SurgeryPresentation& s, const ModularData& md);

/// Disjoint unknot of framing +-1; with `explicit_kink` it is drawn as the
/// closure of one crossing on two extra strands.
SurgeryPresentation stabilize(const SurgeryPresentation& s, int sign, bool explicit_kink = false);

struct KirbyCheck {
  std::string name;
  Scalar before, after;
  bool equal;
};
/// Stabilisations of `s`, plus fixed handle-slide witnesses:
///   unknots framed (p, +1) slide to the Hopf link framed (p + 1, 1);
///   the Hopf link framed (n, 0) presents S^3 like the empty link.
std::vector<KirbyCheck> kirby_harness(const SurgeryPresentation& s, const ModularData& md);

/// Three isotropic subspaces of (Q^{2g}, omega), omega(x, y) =
/// sum_i x_i y_{g+i} - x_{g+i} y_i.  Each lambda is a list of basis rows.
struct LagrangianTriple {
  int dimension;
  QMatrix lambda1, lambda2, lambda3;
};
mpq_class symplectic_form(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y);

/// Signature of <v, w> = omega(v_2, w) on (lambda1 + lambda2) cap lambda3,
/// v = v_1 + v_2 with v_i in lambda_i.  Throws NotIsotropic.
int maslov_index(const LagrangianTriple& t);

}  // namespace tlj
