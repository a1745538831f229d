#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hodge/filtrations.hpp"

namespace hodge {

struct BiDegree {
  int p = 0;
  int q = 0;
  friend auto operator<=>(const BiDegree&, const BiDegree&) = default;
};

std::string to_string(const BiDegree& b);

/// Hodge numbers i^{p,q} = dim I^{p,q}; only nonzero entries are stored.
class HodgeDiamond {
 public:
  HodgeDiamond() = default;
  explicit HodgeDiamond(std::map<BiDegree, std::size_t> dims);

  std::size_t at(int p, int q) const;
  std::size_t total() const;
  const std::map<BiDegree, std::size_t>& entries() const { return dims_; }
  HodgeDiamond shifted(int dp, int dq) const;

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

 private:
  std::map<BiDegree, std::size_t> dims_;
};

std::ostream& operator<<(std::ostream& os, const HodgeDiamond& d);

/// The pieces I^{p,q} of a Deligne splitting; absent pieces are zero.
class DeligneSplitting {
 public:
  DeligneSplitting() = default;
  DeligneSplitting(std::size_t ambient, std::map<BiDegree, Subspace> pieces);

  std::size_t ambient_dim() const { return ambient_; }
  const Subspace& piece(int p, int q) const;
  const std::map<BiDegree, Subspace>& pieces() const { return pieces_; }
  HodgeDiamond diamond() const;
  /// Sum of I^{p,q} over all pieces satisfying pred.
  template <class Pred>
  Subspace span_where(Pred pred) const {
    Subspace acc = Subspace::zero(ambient_);
    for (const auto& [b, s] : pieces_) {
      if (pred(b.p, b.q)) acc = sum(acc, s);
    }
    return acc;
  }

 private:
  std::size_t ambient_ = 0;
  std::map<BiDegree, Subspace> pieces_;
  Subspace zero_;
};

/// Mixed Hodge data (W, F) on Q(i)^dim together with the weight n and the polarizing form Q,
/// which is (-1)^n-symmetric and nondegenerate.
struct MixedHodge {
  int weight = 0;
  Mat q;
  IncreasingFiltration w;
  DecreasingFiltration f;

  std::size_t dim() const { return q.rows(); }
};

/// Commuting nilpotent generators N_1..N_k of a monodromy cone.
struct NilpotentCone {
  std::vector<Mat> generators;

  bool empty() const { return generators.empty(); }
  std::size_t size() const { return generators.size(); }
  /// sum_j c_j N_j
  Mat combination(const std::vector<GaussScalar>& coeffs) const;
  /// The interior point N_1 + ... + N_k.
  Mat interior() const;
};

/// Structural checks on the cone: nonzero, nilpotent, commuting, Q-antisymmetric generators.
Verdict validate_cone(const NilpotentCone& cone, const Mat& q);

/// Deligne splitting of (W, F) from the closed formula. Throws Error when the pieces fail
/// to be a splitting of (W, F), i.e. when the data is not a mixed Hodge structure.
DeligneSplitting deligne_split(const IncreasingFiltration& w, const DecreasingFiltration& f);
DeligneSplitting deligne_split(const MixedHodge& m);

/// Verifies that the pieces split (W, F) and satisfy the conjugation congruence.
Verdict validate_splitting(const DeligneSplitting& s, const IncreasingFiltration& w,
                           const DecreasingFiltration& f);

/// F_infinity^k = sum_{q <= n - k} I^{p,q}.
DecreasingFiltration f_infinity(const DeligneSplitting& s, int n);

HodgeDiamond hodge_diamond(const DeligneSplitting& s);

/// Checks i^{p,q} = i^{q,p}, and when `limiting`, also i^{p,q} = i^{n-q,n-p}.
Verdict check_symmetries(const HodgeDiamond& d, int n, bool limiting = true);

/// Full polarization test for (W, F, Q) against the cone: W = W(N)[-n] for the interior N,
/// N F^p in F^{p-1}, and positivity of the Hodge-Riemann forms on primitive pieces.
/// With an empty cone this is the second Hodge-Riemann relation for a pure structure.
Verdict polarization_check(const MixedHodge& m, const NilpotentCone& cone);
/// Same test for a single nilpotent N standing for an interior point of a cone.
Verdict polarization_check(const MixedHodge& m, const Mat& n);

/// Positive definiteness of a Hermitian matrix over Q(i), decided exactly by LDL*.
bool is_positive_definite(const Mat& h);

/// The first Hodge-Riemann relation Q(F^p, F^r) = 0 for p + r > n.
Verdict first_riemann_relation(const MixedHodge& m);

}  // namespace hodge
