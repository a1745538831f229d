#pragma once

#include <vector>

#include "hodge/mhs.hpp"

namespace hodge {

/// One sl2-string of a split limiting mixed Hodge structure: the highest-weight vector has
/// Hodge type (p, q) with p + q = n + l, and N lowers it l times to type (p - l, q - l).
/// For p != q the conjugate string of type (q, p) is added as well.
struct StringSpec {
  int p = 0;
  int q = 0;
  /// Index of the cone generator acting on this string (ignored when l = 0).
  std::size_t generator = 0;
};

/// An LMHS together with a frame of Hodge-type vectors (columns of `frame`, with
/// types[c] the bidegree of column c). For split structures the frame columns span the
/// Deligne pieces exactly.
struct SplitLmhs {
  MixedHodge mhs;
  NilpotentCone cone;
  Mat frame;
  std::vector<BiDegree> types;

  std::size_t dim() const { return mhs.dim(); }
};

/// Builds the real-split polarized LMHS that is a direct sum of the given strings.
/// Basis per string: real vectors x_0, y_0, x_1, y_1, ... (just x_a when p = q), with
/// N x_a = x_{a+1} and the frame vector x_a + i y_a of type (p - a, q - a).
SplitLmhs build_split_lmhs(int weight, const std::vector<StringSpec>& strings);

/// Transports everything along the invertible map g (v -> g v).
SplitLmhs change_basis(const SplitLmhs& s, const Mat& g);

/// Replaces F by exp(i delta) F and the frame by exp(i delta) frame; delta must be nilpotent.
SplitLmhs twist(const SplitLmhs& s, const Mat& delta);

/// Tensor product: weights add, Q is the Kronecker product, the cone is
/// {N_a (x) 1} followed by {1 (x) N_b}.
SplitLmhs tensor(const SplitLmhs& a, const SplitLmhs& b);

/// F^k = span of the frame columns whose type has p >= k.
DecreasingFiltration filtration_from_types(const Mat& frame, const std::vector<BiDegree>& types);

/// Kronecker product of matrices.
Mat kron(const Mat& a, const Mat& b);

/// The weight-1 LMHS on dim 2g made of `a` copies of the elliptic degeneration and g - a pure
/// blocks. With `separate_generators`, copy j gets its own cone generator N_j.
SplitLmhs weight_one_fixture(int genus, int a, bool separate_generators = false);

/// Weight-2 LMHS with Hodge numbers (2, h, 2) on the generic fiber, one for each of the six
/// degeneration kinds 0..5 (kind 0 is pure, kinds 1..5 grow the nilpotent orbit). Kinds 3 and 4
/// need h >= 4 and h >= 3; throws Error when h is too small.
SplitLmhs weight_two_fixture(int h, int kind);

/// The elliptic LMHS: dim 2, n = 1, F^1 = span e_0, W_0 = span e_1, N e_0 = e_1, Q(e_0, e_1) = 1.
SplitLmhs elliptic_fixture();

}  // namespace hodge
