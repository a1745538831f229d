#pragma once

#include <map>
#include <vector>

#include "hodge/induced.hpp"
#include "hodge/mhs.hpp"

namespace hodge {

/// Row-major flattening of an n x n matrix into C^{n^2}, and back.
Vec flatten(const Mat& x);
Mat unflatten(const Vec& v, std::size_t n);

/// g = {X : Q X + X^T Q = 0}, the infinitesimal automorphisms of Q.
struct LieAlgebraBasis {
  std::size_t n = 0;
  Mat q;
  std::vector<Mat> basis;
  /// span of the flattened basis inside End(C^n)
  Subspace flat;

  std::size_t dim() const { return basis.size(); }
  bool contains(const Mat& x) const { return flat.contains(flatten(x)); }
};

/// Throws Error when q is degenerate.
LieAlgebraBasis lie_algebra(const Mat& q);

/// Checks closure under the bracket on all pairs of basis elements.
Verdict check_closed(const LieAlgebraBasis& l);

/// The Deligne bigrading g = (+) g^{p,q} induced by an MHS, and the subalgebras built from it.
struct LieSplit {
  std::size_t n = 0;
  std::map<BiDegree, Subspace> pieces;
  Subspace s_f;       // (+)_{p >= 0}
  Subspace s_w;       // (+)_{p + q <= 0}
  Subspace s_inf;     // (+)_{q <= 0}
  Subspace m_x;       // (+)_{p, q <= 0}
  Subspace s_f_perp;  // (+)_{p < 0}

  HodgeDiamond diamond() const;
  std::vector<Mat> elements(int p, int q) const;
  /// (+) of the pieces whose bidegree satisfies pred
  template <class Pred>
  Subspace span_where(Pred pred) const {
    std::vector<Vec> vs;
    for (const auto& [b, s] : pieces) {
      if (!pred(b)) continue;
      for (auto& v : s.vectors()) vs.push_back(std::move(v));
    }
    return Subspace::span(vs, n * n);
  }
};

/// g^{p,q} = {X in g : X I^{r,s} in I^{r+p,s+q}}; computed per bidegree in a Deligne-adapted frame.
/// Throws Error when the pieces do not add up to g (Q incompatible with the MHS).
LieSplit lie_deligne_split(const LieAlgebraBasis& l, const MixedHodge& m);

/// {X in g : [X, N] = 0 for all N in ns}, as a subspace of End in flat coordinates.
Subspace centralizer(const LieAlgebraBasis& l, const std::vector<Mat>& ns);

/// g^{p,q} = 0 whenever |p| > 1 or |q| > 1, plus [s_F_perp, W_{-2}(g)] = 0 when that holds.
Verdict hermitian_test(const LieSplit& s);

/// s_F_perp inside W_0(g) = (+)_{p+q <= 0} g^{p,q}.
Verdict smoothness_test(const LieSplit& s);

/// [g^{p,q}, g^{r,s}] inside g^{p+r,q+s} for all pairs of basis elements.
Verdict bracket_compatible(const LieSplit& s);

/// Every cone generator lies in (+)_{p,q <= -1} g^{p,q}.
Verdict cone_contained(const LieSplit& s, const NilpotentCone& cone);

/// Each g^{r,s} on V, acting on H as a derivation, maps I^{p,q}(H) into I^{p+r,q+s}(H).
Verdict action_compatible(const LieSplit& s, const InducedStructure& h);

}  // namespace hodge
