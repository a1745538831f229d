#include "hodge/filtrations.hpp"

#include <string>

namespace hodge {

IncreasingFiltration::IncreasingFiltration(std::size_t ambient, int lo, std::vector<Subspace> steps)
    : ambient_(ambient), lo_(lo), zero_(Subspace::zero(ambient)) {
  if (steps.empty()) steps.push_back(Subspace::full(ambient));
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].ambient_dim() != ambient) throw Error("filtration step has the wrong ambient");
    if (i > 0 && !steps[i].contains(steps[i - 1])) {
      throw Error("increasing filtration is not nested at index " + std::to_string(lo + int(i)));
    }
  }
  if (!steps.back().is_full()) throw Error("increasing filtration does not exhaust the space");
  // Canonical trim: drop leading zero steps and trailing repeats of the full space.
  std::size_t first = 0;
  while (first + 1 < steps.size() && steps[first].is_zero()) ++first;
  std::size_t last = steps.size() - 1;
  while (last > first && steps[last - 1].is_full()) --last;
  if (ambient == 0) last = first;
  lo_ = lo + static_cast<int>(first);
  steps_.assign(steps.begin() + static_cast<std::ptrdiff_t>(first),
                steps.begin() + static_cast<std::ptrdiff_t>(last) + 1);
}

IncreasingFiltration IncreasingFiltration::pure(std::size_t ambient, int weight) {
  return {ambient, weight, {Subspace::full(ambient)}};
}

const Subspace& IncreasingFiltration::operator[](int l) const {
  if (l < lo_) return zero_;
  if (l >= highest()) return steps_.back();
  return steps_[static_cast<std::size_t>(l - lo_)];
}

std::size_t IncreasingFiltration::graded_dim(int l) const {
  return (*this)[l].dim() - (*this)[l - 1].dim();
}

IncreasingFiltration IncreasingFiltration::shifted(int k) const {
  return {ambient_, lo_ - k, steps_};
}

DecreasingFiltration::DecreasingFiltration(std::size_t ambient, int lo, std::vector<Subspace> steps)
    : ambient_(ambient), lo_(lo), zero_(Subspace::zero(ambient)) {
  if (steps.empty()) steps.push_back(Subspace::full(ambient));
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].ambient_dim() != ambient) throw Error("filtration step has the wrong ambient");
    if (i > 0 && !steps[i - 1].contains(steps[i])) {
      throw Error("decreasing filtration is not nested at index " + std::to_string(lo + int(i)));
    }
  }
  if (!steps.front().is_full()) throw Error("decreasing filtration does not start at the full space");
  std::size_t first = 0;
  while (first + 1 < steps.size() && steps[first + 1].is_full()) ++first;
  std::size_t last = steps.size() - 1;
  while (last > first && steps[last].is_zero()) --last;
  lo_ = lo + static_cast<int>(first);
  steps_.assign(steps.begin() + static_cast<std::ptrdiff_t>(first),
                steps.begin() + static_cast<std::ptrdiff_t>(last) + 1);
}

const Subspace& DecreasingFiltration::operator[](int p) const {
  if (p <= lo_) return steps_.front();
  if (p > highest()) return zero_;
  return steps_[static_cast<std::size_t>(p - lo_)];
}

std::size_t DecreasingFiltration::graded_dim(int p) const {
  return (*this)[p].dim() - (*this)[p + 1].dim();
}

DecreasingFiltration DecreasingFiltration::shifted(int k) const {
  return {ambient_, lo_ - k, steps_};
}

DecreasingFiltration DecreasingFiltration::conjugate() const {
  std::vector<Subspace> c;
  c.reserve(steps_.size());
  for (const auto& s : steps_) c.push_back(hodge::conjugate(s));
  return {ambient_, lo_, std::move(c)};
}

IncreasingFiltration weight_filtration(const Mat& n, int center) {
  if (!n.is_square()) throw Error("weight_filtration: N must be square");
  if (!is_nilpotent(n)) throw Error("weight_filtration: N is not nilpotent");
  const std::size_t dim = n.rows();
  // powers[j] = N^j, up to the first zero power.
  std::vector<Mat> powers{Mat::identity(dim)};
  while (!powers.back().is_zero()) powers.push_back(powers.back() * n);
  const int nu = static_cast<int>(powers.size()) - 2;  // largest j with N^j != 0
  if (nu < 0) return IncreasingFiltration::pure(dim, center);
  std::vector<Subspace> kernels;
  std::vector<Subspace> images;
  for (const auto& p : powers) {
    kernels.push_back(kernel(p));
    images.push_back(image(p));
  }
  // W(N)_k = sum_{j >= 0} ker N^{j+1} cap im N^{max(0, j-k)}.
  std::vector<Subspace> steps;
  for (int k = -nu - 1; k <= nu; ++k) {
    Subspace acc = Subspace::zero(dim);
    for (int j = 0; j <= nu; ++j) {
      const int e = std::max(0, j - k);
      if (e > nu) continue;
      acc = sum(acc, intersect(kernels[static_cast<std::size_t>(j + 1)], images[static_cast<std::size_t>(e)]));
    }
    steps.push_back(std::move(acc));
  }
  return {dim, -nu - 1 + center, std::move(steps)};
}

int level(const Vec& v, const IncreasingFiltration& w) {
  if (is_zero(v)) throw Error("level of the zero vector is undefined");
  for (int l = w.lowest(); l < w.highest(); ++l) {
    if (w[l].contains(v)) return l;
  }
  return w.highest();
}

bool q_orthogonal(const Subspace& a, const Subspace& b, const Mat& q) {
  if (a.is_zero() || b.is_zero()) return true;
  return (a.basis() * q * b.basis().transpose()).is_zero();
}

Verdict isotropy_check(const IncreasingFiltration& w, const Mat& q, int n) {
  if (q.rows() != w.ambient_dim() || !q.is_square()) throw Error("isotropy_check: Q has the wrong shape");
  if (rank(q) != q.rows()) throw Error("isotropy_check: Q is degenerate");
  for (int l = w.lowest(); l <= w.highest(); ++l) {
    const int m_max = 2 * n - 1 - l;
    if (m_max < w.lowest()) continue;
    if (q_orthogonal(w[l], w[m_max], q)) continue;
    for (int m = w.lowest(); m <= m_max; ++m) {
      if (!q_orthogonal(w[l], w[m], q)) {
        return Verdict::fail("Q(W_" + std::to_string(l) + ", W_" + std::to_string(m) +
                             ") != 0 although " + std::to_string(l) + " + " + std::to_string(m) +
                             " < " + std::to_string(2 * n));
      }
    }
  }
  return Verdict::ok();
}

}  // namespace hodge
