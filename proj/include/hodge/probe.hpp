#pragma once

#include <string>
#include <vector>

#include "hodge/orbit.hpp"

namespace hodge {

/// Sampling parameters shared by the numeric probes.
struct ProbeConfig {
  std::vector<double> radii;                // strictly decreasing, positive
  std::vector<std::vector<double>> angles;  // one angle per sampled coordinate
  double fd_step = 1e-4;
  double tol = 1e-6;

  /// Radii 1e-2 ... 1e-8 and `count` angle vectors of length `dim` on a fixed quasi-random grid.
  static ProbeConfig defaults(std::size_t dim, std::size_t count = 8);
  Verdict validate() const;
};

/// Default base point for the coordinates that are not sampled: nonzero degenerating
/// coordinates of modulus about 0.3, small stratum coordinates.
std::vector<Complex> default_base(const OrbitSpec& s);

struct LimitSample {
  double radius = 0;
  std::vector<double> angle;
  Complex value;
  double deviation = 0;
};

struct LimitReport {
  std::string claim;
  std::vector<LimitSample> samples;
  Complex target;
  /// Mean of the observed values at the smallest radius.
  Complex extrapolated;
  /// Largest deviation at the smallest radius.
  double max_deviation = 0;
  bool monotone = false;
  double tol = 0;
  /// Radii skipped because an evaluation was not finite.
  std::vector<double> clipped;
  bool pass = false;
};

/// h~ along t_i = r e^{i theta_i} (i in I), the other coordinates at `base`; the target is the
/// stratum value at t_I = 0. Passes when the final deviation is within tol and the deviations
/// do not increase over the last three radii.
LimitReport radial_limit(const OrbitSpec& s, IndexSet i, const ProbeConfig& cfg);
LimitReport radial_limit(const OrbitSpec& s, IndexSet i, const ProbeConfig& cfg, const std::vector<Complex>& base);

/// l(t_1)^{a_1} ... l(t_k)^{a_k} Q(zeta^ N^a e_0, conj(zeta^ e_inf)) as every t_j, j in J, goes to 0.
/// The target is 0 for |a| > 0 and the value of Q(exp(f_J) e_0, conj(exp(f_J) e_inf)) for a = 0.
LimitReport term_vanishing(const OrbitSpec& s, const std::vector<unsigned>& a, const ProbeConfig& cfg);
LimitReport term_vanishing(const OrbitSpec& s, const std::vector<unsigned>& a, const ProbeConfig& cfg,
                           const std::vector<Complex>& base);

/// All multi-indices of length k with |a| = d, in lexicographic order.
std::vector<std::vector<unsigned>> multi_indices(std::size_t k, unsigned d);

struct LeviReport {
  std::string claim;
  double value = 0;                       // stratum value at the base point
  std::vector<double> eigenvalues;        // ascending, on the span of the directions
  std::vector<double> direction_values;   // L(v, conj v) / |v|^2 per supplied direction
  double min_eigenvalue = 0;
  /// Coordinates normal to the stratum are not differentiated.
  std::size_t clipped_normal = 0;
  double tol = 0;
  bool psh = false;
};

/// Finite-difference Levi form of -log stratum_value(s, I, .) in the coordinates of Z_I^*
/// (all coordinates outside I), at `base`. With no directions the full coordinate frame is used.
/// Throws Error when the stratum value is not positive at the base point.
LeviReport levi_probe(const OrbitSpec& s, IndexSet i, const std::vector<Complex>& base,
                      const std::vector<std::vector<Complex>>& dirs, const ProbeConfig& cfg);

struct FInfinityReport {
  std::string claim;
  std::vector<double> y;
  /// Gap between exp(iyN) F^p and F_inf^p, maximized over p.
  std::vector<double> distance;
  /// Gap between the Richardson extrapolation of the projectors and F_inf.
  double extrapolated_distance = 0;
  bool decreasing = false;
  double tol = 0;
  bool pass = false;
};

/// Largest principal-angle gap between two column spans.
double subspace_gap(const CMat& a, const CMat& b);

/// Compares exp(iyN) F with the exact F_inf of (W, F). The projectors are analytic in 1/y, so
/// the y-values (a geometric sequence) are extrapolated to 1/y = 0 before the tolerance test.
FInfinityReport f_infinity_probe(const MixedHodge& m, const Mat& n_op, const std::vector<double>& y_values,
                                 double tol = 1e-6);

}  // namespace hodge
