#pragma once

#include <vector>

#include "hodge/mhs.hpp"

namespace hodge {

/// Basis e_0..e_d of H (columns of `basis`) adapted to the Deligne splitting: each column
/// lies in the piece I^{slots[i]}, slots are sorted by (p, q) descending so that every F^p
/// is spanned by an initial segment and every W_l by a subset, and
/// Q(e_i, e_j) = 1 if i + j = d and 0 otherwise, for i <= d/2.
struct AdaptedFrame {
  Mat basis;
  std::vector<BiDegree> slots;

  std::size_t size() const { return slots.size(); }
  /// Index d of the last basis vector.
  std::size_t last() const { return slots.size() - 1; }
  Vec e(std::size_t i) const { return basis.col(i); }
};

/// Builds the adapted basis from (F, W, Q). Throws Error when (W, F) is not a mixed Hodge
/// structure, when Q does not pair I^{p,q} with I^{n-p,n-q}, or when no basis over Q(i)
/// realizes the pairing on a self-dual piece.
AdaptedFrame adapted_basis(const DecreasingFiltration& f, const IncreasingFiltration& w, const Mat& q,
                           int n);
AdaptedFrame adapted_basis(const DeligneSplitting& s, const Mat& q, int n);

/// Re-checks every defining property of an adapted frame.
Verdict check_adapted(const AdaptedFrame& frame, const DecreasingFiltration& f,
                      const IncreasingFiltration& w, const Mat& q, int n);

}  // namespace hodge
