#pragma once

#include <complex>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hodge/adapted_basis.hpp"
#include "hodge/induced.hpp"
#include "hodge/mhs.hpp"

namespace hodge {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

CMat to_eigen(const Mat& m);
CVec to_eigen(const Vec& v);

/// Subset of the cone generators {N_1, ..., N_k}; bit j stands for N_{j+1}.
using IndexSet = unsigned;

/// "{1,2}" style rendering (1-based, matching N_1 ... N_k).
std::string index_set_str(IndexSet s);

/// One term coeff * t_1^{e_1} ... t_r^{e_r} of a matrix-valued polynomial.
struct Monomial {
  std::vector<unsigned> exps;
  Mat coeff;
};

/// Polynomial map from the chart coordinates t = (t_1, ..., t_r) to End(H).
struct MatPoly {
  std::vector<Monomial> terms;

  static MatPoly constant(const Mat& m, std::size_t r);
  /// m * t_{var+1}
  static MatPoly linear(const Mat& m, std::size_t var, std::size_t r);
  bool is_zero() const;
  Mat eval(const std::vector<GaussScalar>& t, std::size_t n) const;
  CMat eval(const std::vector<Complex>& t, std::size_t n) const;
};

/// The local data of a period map near a point of the deepest stratum Z_J: the LMHS (W, F) on
/// H with h^{n,0} = 1, local monodromy logarithms N_1..N_k on H, `extra` coordinates along the
/// stratum (so r = k + extra), and log zeta = sum_I t^_I f_I(t) with t^_I = prod_{j in J \ I} t_j.
struct OrbitData {
  MixedHodge h;
  NilpotentCone cone;
  std::size_t extra = 0;
  std::map<IndexSet, MatPoly> zeta;
};

/// Validated orbit data with its adapted frame and markers.
struct OrbitSpec {
  OrbitData data;
  AdaptedFrame frame;
  Markers markers;
  std::size_t k = 0;
  std::size_t r = 0;
  IndexSet full = 0;

  std::size_t dim() const { return data.h.dim(); }
  const Mat& n_op(std::size_t j) const { return data.cone.generators[j]; }
  /// N = N_1 + ... + N_k
  Mat n_sum() const { return data.cone.interior(); }
};

/// Builds the adapted frame and markers and checks that every f_I coefficient lies in
/// g, in s_F_perp, and in the centralizer of N_j for j in I. Throws Error otherwise.
OrbitSpec make_orbit_spec(OrbitData data);

/// Orbit data on H induced from data on V: H is Tate-normalized, the cone and every f_I
/// coefficient are lifted as derivations.
OrbitData lift_orbit_data(const InducedStructure& h, std::size_t extra,
                          const std::map<IndexSet, MatPoly>& zeta_on_v);

/// Bidegrees (p, q) of the nonzero Deligne components of x in End(H).
std::set<BiDegree> bidegree_support(const Mat& x, const AdaptedFrame& frame);

/// Exact evaluation point: coordinates t and formal log values l_j = l(t_j) for j < k.
struct ExactPoint {
  std::vector<GaussScalar> t;
  std::vector<GaussScalar> ell;
};

/// Float evaluation point: l(t_j) = log(t_j) / 2 pi i + branch_j.
struct FloatPoint {
  std::vector<Complex> t;
  std::vector<long> branch;
};

std::vector<Complex> log_values(const FloatPoint& p, std::size_t k);

/// The frame eta = theta(t) zeta(t) with theta = exp(sum l_j N_j).
struct OrbitFrame {
  Mat eta;
  GaussScalar q0inf;  // Q(eta_0, conj(eta_inf))
  Rational h_tilde;   // Re Q(eta_0, conj(lambda eta_inf))
};

struct OrbitFrameF {
  CMat eta;
  Complex q0inf;
  double h_tilde = 0;
};

Mat theta(const OrbitSpec& s, const std::vector<GaussScalar>& ell, IndexSet skip = 0);
Mat zeta(const OrbitSpec& s, const ExactPoint& p);
Mat zeta_hat(const OrbitSpec& s, const ExactPoint& p);
CMat zeta_hat(const OrbitSpec& s, const std::vector<Complex>& t, const std::vector<Complex>& ell);

OrbitFrame eval_frame(const OrbitSpec& s, const ExactPoint& p);
OrbitFrameF eval_frame(const OrbitSpec& s, const FloatPoint& p);

/// Re Q(eta_0, conj(lambda eta_inf)) for an already evaluated frame.
Rational h_tilde(const OrbitSpec& s, const Mat& eta);
double h_tilde(const OrbitSpec& s, const CMat& eta);

/// Value of the continuous extension of h on Z_I^*: the coordinates t_i, i in I, are set to 0
/// and Re Q(zeta^ theta^_I e_0, conj(lambda zeta^ e_inf)) is returned, with theta^_I built from
/// the remaining N_j. I = {} gives h~ and I = J gives Re Q(exp(f_J) e_0, conj(lambda exp(f_J) e_inf)).
Rational stratum_value(const OrbitSpec& s, IndexSet i, const ExactPoint& p);
double stratum_value(const OrbitSpec& s, IndexSet i, const FloatPoint& p);

/// i^{2n-m} Q(exp(f_J) e_0, N^{m-n} conj(exp(f_J) e_0)) at the stratum point (t_j = 0, j in J).
/// Throws Error when the result is not real.
Rational h_j(const OrbitSpec& s, const std::vector<GaussScalar>& t);
double h_j(const OrbitSpec& s, const std::vector<Complex>& t);

/// Exact invariance of h~ and of Q(eta_0, conj eta_inf) under l -> l + shifts.
Verdict monodromy_check(const OrbitSpec& s, const ExactPoint& p, const std::vector<long>& shifts);
/// Float version with relative tolerance.
Verdict monodromy_check(const OrbitSpec& s, const FloatPoint& p, const std::vector<long>& shifts,
                        double rel_tol = 1e-12);

/// log zeta restricted to Z_J^* modulo W_{-1}(g) (the fibre condition) and modulo W_0(g).
struct FiberReport {
  bool in_w_minus1 = false;
  bool in_w0 = false;
  std::set<BiDegree> support;
};
FiberReport fiber_test(const OrbitSpec& s);

/// The single-generator weight filtration lemma for a two-generator cone.
struct LemmaMReport {
  int m = 0;
  int m1 = 0;
  bool bounds = false;
  bool einf_member = false;
  bool einf_excluded = false;
  bool pass() const { return bounds && einf_member && einf_excluded; }
};
LemmaMReport verify_lemma_m(const OrbitSpec& s);

/// Q(zeta^ N^a e_0, conj(zeta^ e_inf)) for a multi-index a, exact.
GaussScalar term_value(const OrbitSpec& s, const std::vector<unsigned>& a, const ExactPoint& p);
Complex term_value(const OrbitSpec& s, const std::vector<unsigned>& a, const FloatPoint& p);

/// Columns of eta - 1 only reach frame vectors of strictly lower Hodge level.
Verdict check_triangular(const OrbitSpec& s, const Mat& eta);

}  // namespace hodge
