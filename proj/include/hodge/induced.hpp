#pragma once

#include <optional>
#include <vector>

#include "hodge/adapted_basis.hpp"
#include "hodge/builders.hpp"
#include "hodge/mhs.hpp"

namespace hodge {

/// Polarized Hodge data on V of weight w; for limiting data also a cone and (optionally)
/// an explicit weight filtration, which defaults to W(N)[-w] for the interior N.
struct PureHodgeData {
  int weight = 0;
  Mat q;
  DecreasingFiltration f;
  std::optional<IncreasingFiltration> w;
  NilpotentCone cone;

  std::size_t dim() const { return q.rows(); }
  IncreasingFiltration weight_filtration() const;
  MixedHodge mhs() const;

  static PureHodgeData from(const SplitLmhs& s);
};

/// Coordinates on a tensor product of exterior powers of C^n: lexicographic wedge
/// monomials per factor, lexicographic across factors (first factor most significant).
class ExteriorLayout {
 public:
  ExteriorLayout() = default;
  ExteriorLayout(std::size_t n, std::vector<std::size_t> degrees);

  std::size_t base_dim() const { return n_; }
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  std::size_t size() const { return size_; }
  /// The wedge monomial of factor f at position i.
  const std::vector<std::size_t>& monomial(std::size_t factor, std::size_t i) const {
    return subsets_[factor][i];
  }
  /// Per-factor monomial positions of the tensor basis element `index`.
  std::vector<std::size_t> split_index(std::size_t index) const;

  /// g acting on the tensor product (compound matrices, Kronecker across factors).
  Mat lift_group(const Mat& g) const;
  /// X acting as a derivation (Leibniz rule on every wedge and tensor slot).
  Mat lift_derivation(const Mat& x) const;
  /// The bilinear form prod_f det(Q(u_i, v_j)).
  Mat lift_form(const Mat& q) const { return lift_group(q); }

 private:
  Mat wedge_group(const Mat& g, std::size_t factor) const;
  Mat wedge_derivation(const Mat& x, std::size_t factor) const;

  std::size_t n_ = 0;
  std::vector<std::size_t> degrees_;
  std::vector<std::vector<std::vector<std::size_t>>> subsets_;
  std::size_t size_ = 1;
};

/// H = Lambda^{d_w} V (x) ... (x) Lambda^{d_c} V with c = ceil((w+1)/2), where d_p = dim F^p V
/// (factors with d_p = 0 are dropped), with the induced (W, F, Q), cone and Deligne pieces.
struct InducedStructure {
  PureHodgeData source;
  ExteriorLayout layout;
  /// Hodge level p of each tensor factor.
  std::vector<int> factor_levels;
  int weight = 0;
  int twist = 0;
  Mat q;
  DecreasingFiltration f;
  IncreasingFiltration w;
  DeligneSplitting split;
  NilpotentCone cone;
  /// Deligne-adapted basis of V (columns) and the bidegree of each column.
  Mat v_frame;
  std::vector<BiDegree> v_types;

  std::size_t dim() const { return q.rows(); }
  MixedHodge mhs() const { return {weight, q, w, f}; }
  HodgeDiamond diamond() const { return split.diamond(); }
  Mat lift_group(const Mat& g) const { return layout.lift_group(g); }
  Mat lift_derivation(const Mat& x) const { return layout.lift_derivation(x); }
};

/// Builds the induced structure. Throws Error for non-effective F, inconsistent data, or when
/// the induced weight filtration differs from W(N_H)[-n].
InducedStructure induce(const PureHodgeData& v);

/// Twists by Q(k) for the smallest k with F^{n-k} != 0, so that h^{n,0} = 1 afterwards.
InducedStructure tate_normalize(const InducedStructure& h);

/// The integer m and the distinguished basis vectors of an adapted frame on H.
struct Markers {
  int m = 0;
  std::size_t e0 = 0;
  std::size_t einf = 0;
  std::size_t ed = 0;
  /// conj(lambda e_inf) = e_d
  GaussScalar lambda;
};

/// Locates m = level(e_0, W), e_inf spanning W_{2n-m} cap F^{2n-m}, e_d and lambda.
/// Throws Error when the line is not spanned by a frame vector or the dimension checks fail.
Markers locate_markers(const MixedHodge& h, const AdaptedFrame& frame);
Markers locate_markers(const InducedStructure& h, const AdaptedFrame& frame);

/// Independent recheck of all marker invariants.
Verdict check_markers(const MixedHodge& h, const AdaptedFrame& frame, const Markers& mk);

}  // namespace hodge
