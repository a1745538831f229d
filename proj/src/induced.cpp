#include "hodge/induced.hpp"

#include <algorithm>
#include <map>

namespace hodge {

IncreasingFiltration PureHodgeData::weight_filtration() const {
  if (w) return *w;
  if (cone.empty()) return IncreasingFiltration::pure(dim(), weight);
  return ::hodge::weight_filtration(cone.interior(), weight);
}

MixedHodge PureHodgeData::mhs() const { return {weight, q, weight_filtration(), f}; }

PureHodgeData PureHodgeData::from(const SplitLmhs& s) {
  return {s.mhs.weight, s.mhs.q, s.mhs.f, s.mhs.w, s.cone};
}

namespace {

void combinations(std::size_t n, std::size_t k, std::size_t first, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = first; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

Mat submatrix(const Mat& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Mat out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
  }
  return out;
}

IncreasingFiltration weight_from_types(const Mat& frame, const std::vector<BiDegree>& types) {
  const std::size_t dim = frame.rows();
  int lo = types.front().p + types.front().q;
  int hi = lo;
  for (const auto& t : types) {
    lo = std::min(lo, t.p + t.q);
    hi = std::max(hi, t.p + t.q);
  }
  std::vector<Subspace> steps;
  for (int l = lo; l <= hi; ++l) {
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < types.size(); ++c) {
      if (types[c].p + types[c].q <= l) cols.push_back(frame.col(c));
    }
    steps.push_back(Subspace::span(cols, dim));
  }
  return {dim, lo, std::move(steps)};
}

DeligneSplitting split_from_types(const Mat& frame, const std::vector<BiDegree>& types) {
  std::map<BiDegree, std::vector<Vec>> cols;
  for (std::size_t c = 0; c < types.size(); ++c) cols[types[c]].push_back(frame.col(c));
  std::map<BiDegree, Subspace> pieces;
  for (auto& [b, vs] : cols) pieces.emplace(b, Subspace::span(vs, frame.rows()));
  return {frame.rows(), std::move(pieces)};
}

}  // namespace

ExteriorLayout::ExteriorLayout(std::size_t n, std::vector<std::size_t> degrees)
    : n_(n), degrees_(std::move(degrees)) {
  for (auto k : degrees_) {
    if (k > n) throw Error("exterior power degree exceeds the dimension");
    std::vector<std::vector<std::size_t>> subs;
    std::vector<std::size_t> cur;
    combinations(n, k, 0, cur, subs);
    size_ *= subs.size();
    subsets_.push_back(std::move(subs));
  }
}

std::vector<std::size_t> ExteriorLayout::split_index(std::size_t index) const {
  std::vector<std::size_t> out(subsets_.size());
  for (std::size_t f = subsets_.size(); f-- > 0;) {
    out[f] = index % subsets_[f].size();
    index /= subsets_[f].size();
  }
  return out;
}

Mat ExteriorLayout::wedge_group(const Mat& g, std::size_t factor) const {
  const auto& subs = subsets_[factor];
  Mat out(subs.size(), subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < subs.size(); ++j) out(i, j) = det(submatrix(g, subs[i], subs[j]));
  }
  return out;
}

Mat ExteriorLayout::wedge_derivation(const Mat& x, std::size_t factor) const {
  const auto& subs = subsets_[factor];
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < subs.size(); ++i) index.emplace(subs[i], i);
  Mat out(subs.size(), subs.size());
  for (std::size_t col = 0; col < subs.size(); ++col) {
    const auto& J = subs[col];
    for (std::size_t r = 0; r < J.size(); ++r) {
      for (std::size_t i = 0; i < n_; ++i) {
        const GaussScalar& c = x(i, J[r]);
        if (c.is_zero()) continue;
        if (i != J[r] && std::find(J.begin(), J.end(), i) != J.end()) continue;
        auto moved = J;
        moved[r] = i;
        // Bubble the replaced entry into place, tracking the sign of the permutation.
        int sign = 1;
        std::size_t pos = r;
        while (pos > 0 && moved[pos - 1] > moved[pos]) {
          std::swap(moved[pos - 1], moved[pos]);
          --pos;
          sign = -sign;
        }
        while (pos + 1 < moved.size() && moved[pos] > moved[pos + 1]) {
          std::swap(moved[pos], moved[pos + 1]);
          ++pos;
          sign = -sign;
        }
        out(index.at(moved), col) += sign == 1 ? c : -c;
      }
    }
  }
  return out;
}

Mat ExteriorLayout::lift_group(const Mat& g) const {
  if (g.rows() != n_ || g.cols() != n_) throw Error("lift_group: matrix does not act on the base space");
  Mat out = Mat::identity(1);
  for (std::size_t f = 0; f < subsets_.size(); ++f) out = kron(out, wedge_group(g, f));
  return out;
}

Mat ExteriorLayout::lift_derivation(const Mat& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw Error("lift_derivation: matrix does not act on the base space");
  Mat out(size_, size_);
  for (std::size_t f = 0; f < subsets_.size(); ++f) {
    Mat term = Mat::identity(1);
    for (std::size_t g = 0; g < subsets_.size(); ++g) {
      term = kron(term, g == f ? wedge_derivation(x, g) : Mat::identity(subsets_[g].size()));
    }
    out += term;
  }
  return out;
}

InducedStructure induce(const PureHodgeData& v) {
  const std::size_t dim = v.dim();
  if (!v.q.is_square() || dim == 0) throw Error("induce: Q must be a nonempty square matrix");
  if (v.weight < 1) throw Error("induce: weight must be positive");
  if (v.f.ambient_dim() != dim) throw Error("induce: F and Q live on different spaces");
  if (!v.f[0].is_full()) throw Error("induce: F is not effective (F^0 is not everything)");
  if (!v.f[v.weight + 1].is_zero()) throw Error("induce: F^{w+1} is nonzero");
  const Mat qt = v.q.transpose();
  if ((v.weight % 2 == 0) ? qt != v.q : qt != -v.q) throw Error("induce: Q is not (-1)^w-symmetric");
  if (rank(v.q) != dim) throw Error("induce: Q is degenerate");
  if (auto ok = validate_cone(v.cone, v.q); !ok) throw Error("induce: " + ok.detail);
  const IncreasingFiltration wv = v.weight_filtration();
  if (v.w && !v.cone.empty() && *v.w != weight_filtration(v.cone.interior(), v.weight)) {
    throw Error("induce: the supplied W differs from W(N)[-w]");
  }
  const DeligneSplitting sv = deligne_split(wv, v.f);

  InducedStructure h;
  h.source = v;
  std::vector<BiDegree> order;
  for (const auto& [b, piece] : sv.pieces()) order.push_back(b);
  std::sort(order.begin(), order.end(), [](const BiDegree& x, const BiDegree& y) { return y < x; });
  std::vector<Vec> frame;
  for (const auto& b : order) {
    for (auto& vec : sv.piece(b.p, b.q).vectors()) {
      frame.push_back(std::move(vec));
      h.v_types.push_back(b);
    }
  }
  h.v_frame = Mat::from_columns(frame, dim);

  std::vector<std::size_t> degrees;
  const int lowest = (v.weight + 2) / 2;
  std::size_t total_degree = 0;
  for (int p = v.weight; p >= lowest; --p) {
    const std::size_t d = v.f[p].dim();
    if (d == 0) continue;
    degrees.push_back(d);
    h.factor_levels.push_back(p);
    total_degree += d;
  }
  if (degrees.empty()) throw Error("induce: F^p = 0 for every p in the upper half");
  h.layout = ExteriorLayout(dim, degrees);
  h.weight = v.weight * static_cast<int>(total_degree);
  h.q = h.layout.lift_form(v.q);

  const Mat hframe = h.layout.lift_group(h.v_frame);
  std::vector<BiDegree> types(h.layout.size());
  for (std::size_t idx = 0; idx < types.size(); ++idx) {
    const auto parts = h.layout.split_index(idx);
    BiDegree t{0, 0};
    for (std::size_t f = 0; f < parts.size(); ++f) {
      for (auto i : h.layout.monomial(f, parts[f])) {
        t.p += h.v_types[i].p;
        t.q += h.v_types[i].q;
      }
    }
    types[idx] = t;
  }
  h.f = filtration_from_types(hframe, types);
  h.w = weight_from_types(hframe, types);
  h.split = split_from_types(hframe, types);
  for (const auto& n : v.cone.generators) h.cone.generators.push_back(h.layout.lift_derivation(n));
  if (!h.cone.empty() && h.w != weight_filtration(h.cone.interior(), h.weight)) {
    throw Error("induce: induced W differs from W(N_H)[-n]");
  }
  if (h.cone.empty() && h.w != IncreasingFiltration::pure(h.dim(), h.weight)) {
    throw Error("induce: induced structure of pure data is not pure");
  }
  return h;
}

InducedStructure tate_normalize(const InducedStructure& h) {
  const int k = h.weight - h.f.highest();
  if (k == 0) return h;
  InducedStructure out = h;
  out.twist = h.twist + k;
  out.weight = h.weight - 2 * k;
  out.f = h.f.shifted(k);
  out.w = h.w.shifted(2 * k);
  std::map<BiDegree, Subspace> pieces;
  for (const auto& [b, s] : h.split.pieces()) pieces.emplace(BiDegree{b.p - k, b.q - k}, s);
  out.split = DeligneSplitting(h.dim(), std::move(pieces));
  return out;
}

Markers locate_markers(const MixedHodge& h, const AdaptedFrame& frame) {
  const int n = h.weight;
  if (frame.size() != h.dim()) throw Error("locate_markers: frame does not match H");
  const Vec e0 = frame.e(0);
  if (h.f[n].dim() != 1 || !h.f[n].contains(e0)) {
    throw Error("locate_markers: F^n is not the line spanned by e_0 (normalize first)");
  }
  Markers mk;
  mk.e0 = 0;
  mk.m = level(e0, h.w);
  if (mk.m < n || mk.m > 2 * n) throw Error("locate_markers: m = " + std::to_string(mk.m) + " outside [n, 2n]");
  const int k = 2 * n - mk.m;
  const Subspace line = intersect(h.w[k], h.f[k]);
  if (line.dim() != 1) {
    throw Error("locate_markers: dim W_{2n-m} cap F^{2n-m} = " + std::to_string(line.dim()));
  }
  if (!intersect(h.w[k - 1], h.f[k]).is_zero() || !intersect(h.w[k], h.f[k + 1]).is_zero()) {
    throw Error("locate_markers: W_{2n-m} cap F^{2n-m} is not isolated");
  }
  bool found = false;
  for (std::size_t j = 0; j < frame.size(); ++j) {
    if (line.contains(frame.e(j))) {
      mk.einf = j;
      found = true;
      break;
    }
  }
  if (!found) throw Error("locate_markers: the line W_{2n-m} cap F^{2n-m} is not spanned by a frame vector");
  mk.ed = frame.last();
  const Vec cinf = conj(frame.e(mk.einf));
  const Vec ed = frame.e(mk.ed);
  std::size_t pivot = 0;
  while (ed[pivot].is_zero()) ++pivot;
  const GaussScalar mu = cinf[pivot] / ed[pivot];
  if (cinf != mu * ed || mu.is_zero()) throw Error("locate_markers: conj(e_inf) is not a multiple of e_d");
  mk.lambda = mu.inverse().conj();
  return mk;
}

Markers locate_markers(const InducedStructure& h, const AdaptedFrame& frame) {
  return locate_markers(h.mhs(), frame);
}

Verdict check_markers(const MixedHodge& h, const AdaptedFrame& frame, const Markers& mk) {
  const int n = h.weight;
  if (mk.m < n || mk.m > 2 * n) return Verdict::fail("m outside [n, 2n]");
  if (level(frame.e(mk.e0), h.w) != mk.m) return Verdict::fail("m is not the W-level of e_0");
  const int k = 2 * n - mk.m;
  const Subspace line = intersect(h.w[k], h.f[k]);
  if (line.dim() != 1) return Verdict::fail("dim W_{2n-m} cap F^{2n-m} != 1");
  if (!line.contains(frame.e(mk.einf))) return Verdict::fail("e_inf does not span W_{2n-m} cap F^{2n-m}");
  if (level(frame.e(mk.einf), h.w) != k) return Verdict::fail("e_inf is not at level 2n - m");
  const Vec lhs = conj(mk.lambda * frame.e(mk.einf));
  if (lhs != frame.e(mk.ed)) return Verdict::fail("conj(lambda e_inf) != e_d");
  if (bilinear(frame.e(mk.e0), h.q, lhs) != GaussScalar(1)) {
    return Verdict::fail("Q(e_0, conj(lambda e_inf)) != 1");
  }
  return Verdict::ok();
}

}  // namespace hodge
