#pragma once

#include <vector>

#include "hodge/exactlin.hpp"

namespace hodge {

/// W_l, nested increasing in l, zero for l below lowest() and everything from highest() on.
class IncreasingFiltration {
 public:
  IncreasingFiltration() = default;
  /// steps[i] is W_{lo + i}; steps must be nested and the last one must be the full space.
  IncreasingFiltration(std::size_t ambient, int lo, std::vector<Subspace> steps);
  /// Pure of the given weight: W_{weight-1} = 0, W_weight = everything.
  static IncreasingFiltration pure(std::size_t ambient, int weight);

  std::size_t ambient_dim() const { return ambient_; }
  /// Smallest l with W_l nonzero.
  int lowest() const { return lo_; }
  /// Smallest l with W_l the full space.
  int highest() const { return lo_ + static_cast<int>(steps_.size()) - 1; }
  const Subspace& operator[](int l) const;
  /// dim W_l / W_{l-1}
  std::size_t graded_dim(int l) const;
  /// The filtration l -> W_{l + k}.
  IncreasingFiltration shifted(int k) const;
  const std::vector<Subspace>& steps() const { return steps_; }

  friend bool operator==(const IncreasingFiltration& a, const IncreasingFiltration& b) {
    return a.ambient_ == b.ambient_ && a.lo_ == b.lo_ && a.steps_ == b.steps_;
  }
  friend bool operator!=(const IncreasingFiltration& a, const IncreasingFiltration& b) {
    return !(a == b);
  }

 private:
  std::size_t ambient_ = 0;
  int lo_ = 0;
  std::vector<Subspace> steps_;
  Subspace zero_;
};

/// F^p, nested decreasing in p, the full space for p <= lowest() and zero above highest().
class DecreasingFiltration {
 public:
  DecreasingFiltration() = default;
  /// steps[i] is F^{lo + i}; steps must be nested and the first one must be the full space.
  DecreasingFiltration(std::size_t ambient, int lo, std::vector<Subspace> steps);

  std::size_t ambient_dim() const { return ambient_; }
  /// Largest p with F^p the full space.
  int lowest() const { return lo_; }
  /// Largest p with F^p nonzero.
  int highest() const { return lo_ + static_cast<int>(steps_.size()) - 1; }
  const Subspace& operator[](int p) const;
  /// dim F^p / F^{p+1}
  std::size_t graded_dim(int p) const;
  /// The filtration p -> F^{p + k}.
  DecreasingFiltration shifted(int k) const;
  /// Complex conjugate filtration.
  DecreasingFiltration conjugate() const;
  const std::vector<Subspace>& steps() const { return steps_; }

  friend bool operator==(const DecreasingFiltration& a, const DecreasingFiltration& b) {
    return a.ambient_ == b.ambient_ && a.lo_ == b.lo_ && a.steps_ == b.steps_;
  }
  friend bool operator!=(const DecreasingFiltration& a, const DecreasingFiltration& b) {
    return !(a == b);
  }

 private:
  std::size_t ambient_ = 0;
  int lo_ = 0;
  std::vector<Subspace> steps_;
  Subspace zero_;
};

/// Monodromy weight filtration W(N)[-center]: the unique increasing filtration with
/// N W_l in W_{l-2} and N^k : Gr_{center+k} -> Gr_{center-k} an isomorphism.
/// Throws Error when N is not nilpotent or not square.
IncreasingFiltration weight_filtration(const Mat& n, int center);

/// Smallest l with v in W_l. Throws Error for the zero vector.
int level(const Vec& v, const IncreasingFiltration& w);

/// Checks Q(W_l, W_m) = 0 whenever l + m < 2n. Throws Error when q is degenerate.
Verdict isotropy_check(const IncreasingFiltration& w, const Mat& q, int n);

/// True when the two subspaces are Q-orthogonal.
bool q_orthogonal(const Subspace& a, const Subspace& b, const Mat& q);

}  // namespace hodge
