#include "hodge/lie.hpp"

#include <algorithm>
#include <cstdlib>

namespace hodge {

Vec flatten(const Mat& x) {
  Vec out(x.rows() * x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out[i * x.cols() + j] = x(i, j);
  }
  return out;
}

Mat unflatten(const Vec& v, std::size_t n) {
  if (v.size() != n * n) throw Error("unflatten: length is not n^2");
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = v[i * n + j];
  }
  return out;
}

namespace {

// Rows of the linear system Q X + X^T Q = 0 restricted to the unknowns X(i, j) listed in
// `cells`; the column order follows `cells`.
Mat preserver_system(const Mat& q, const std::vector<std::pair<std::size_t, std::size_t>>& cells) {
  const std::size_t n = q.rows();
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Vec row(cells.size());
      bool any = false;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto [i, j] = cells[c];
        GaussScalar v;
        if (j == b) v += q(a, i);
        if (j == a) v += q(i, b);
        if (!v.is_zero()) {
          row[c] = v;
          any = true;
        }
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return Mat::from_rows(rows, cells.size());
}

Mat from_cells(const Vec& coeffs, const std::vector<std::pair<std::size_t, std::size_t>>& cells, std::size_t n) {
  Mat x(n, n);
  for (std::size_t c = 0; c < cells.size(); ++c) x(cells[c].first, cells[c].second) = coeffs[c];
  return x;
}

}  // namespace

LieAlgebraBasis lie_algebra(const Mat& q) {
  if (!q.is_square() || q.rows() == 0) throw Error("lie_algebra: Q must be a nonempty square matrix");
  const std::size_t n = q.rows();
  if (rank(q) != n) throw Error("lie_algebra: Q is degenerate");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cells.emplace_back(i, j);
  }
  LieAlgebraBasis l;
  l.n = n;
  l.q = q;
  std::vector<Vec> flat;
  for (const auto& coeffs : kernel(preserver_system(q, cells)).vectors()) {
    l.basis.push_back(from_cells(coeffs, cells, n));
    flat.push_back(coeffs);
  }
  l.flat = Subspace::span(flat, n * n);
  return l;
}

Verdict check_closed(const LieAlgebraBasis& l) {
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      if (!l.contains(bracket(l.basis[i], l.basis[j]))) {
        return Verdict::fail("[X_" + std::to_string(i) + ", X_" + std::to_string(j) + "] leaves g");
      }
    }
  }
  return Verdict::ok();
}

HodgeDiamond LieSplit::diamond() const {
  std::map<BiDegree, std::size_t> dims;
  for (const auto& [b, s] : pieces) {
    if (s.dim() > 0) dims[b] = s.dim();
  }
  return HodgeDiamond(dims);
}

std::vector<Mat> LieSplit::elements(int p, int q) const {
  std::vector<Mat> out;
  const auto it = pieces.find({p, q});
  if (it == pieces.end()) return out;
  for (const auto& v : it->second.vectors()) out.push_back(unflatten(v, n));
  return out;
}

LieSplit lie_deligne_split(const LieAlgebraBasis& l, const MixedHodge& m) {
  if (m.dim() != l.n) throw Error("lie_deligne_split: the MHS lives on a different space");
  const DeligneSplitting split = deligne_split(m);
  std::vector<Vec> frame;
  std::vector<BiDegree> types;
  for (const auto& [b, piece] : split.pieces()) {
    for (auto& v : piece.vectors()) {
      frame.push_back(std::move(v));
      types.push_back(b);
    }
  }
  const std::size_t n = l.n;
  const Mat basis = Mat::from_columns(frame, n);
  const Mat basis_inv = inverse(basis);
  const Mat qf = basis.transpose() * l.q * basis;

  std::map<BiDegree, std::vector<std::pair<std::size_t, std::size_t>>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cells[{types[i].p - types[j].p, types[i].q - types[j].q}].emplace_back(i, j);
  }
  LieSplit s;
  s.n = n;
  std::size_t total = 0;
  for (const auto& [b, cs] : cells) {
    std::vector<Vec> flat;
    for (const auto& coeffs : kernel(preserver_system(qf, cs)).vectors()) {
      flat.push_back(flatten(basis * from_cells(coeffs, cs, n) * basis_inv));
    }
    if (flat.empty()) continue;
    total += flat.size();
    s.pieces.emplace(b, Subspace::span(flat, n * n));
  }
  if (total != l.dim()) {
    throw Error("lie_deligne_split: the pieces have total dimension " + std::to_string(total) + ", g has " +
                std::to_string(l.dim()) + "; Q is not compatible with the MHS");
  }
  s.s_f = s.span_where([](const BiDegree& b) { return b.p >= 0; });
  s.s_w = s.span_where([](const BiDegree& b) { return b.p + b.q <= 0; });
  s.s_inf = s.span_where([](const BiDegree& b) { return b.q <= 0; });
  s.m_x = s.span_where([](const BiDegree& b) { return b.p <= 0 && b.q <= 0; });
  s.s_f_perp = s.span_where([](const BiDegree& b) { return b.p < 0; });
  return s;
}

Subspace centralizer(const LieAlgebraBasis& l, const std::vector<Mat>& ns) {
  if (ns.empty()) return l.flat;
  std::vector<Vec> columns;
  for (const auto& x : l.basis) {
    Vec col;
    for (const auto& n : ns) {
      if (n.rows() != l.n || n.cols() != l.n) throw Error("centralizer: operator has the wrong size");
      const Vec part = flatten(bracket(x, n));
      col.insert(col.end(), part.begin(), part.end());
    }
    columns.push_back(std::move(col));
  }
  const Mat system = Mat::from_columns(columns, l.n * l.n * ns.size());
  std::vector<Vec> out;
  for (const auto& coeffs : kernel(system).vectors()) {
    Mat x(l.n, l.n);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (!coeffs[k].is_zero()) x += coeffs[k] * l.basis[k];
    }
    out.push_back(flatten(x));
  }
  return Subspace::span(out, l.n * l.n);
}

Verdict hermitian_test(const LieSplit& s) {
  for (const auto& [b, piece] : s.pieces) {
    if (piece.dim() > 0 && (std::abs(b.p) > 1 || std::abs(b.q) > 1)) {
      return Verdict::fail("g^" + to_string(b) + " has dimension " + std::to_string(piece.dim()));
    }
  }
  std::vector<Mat> low;
  for (const auto& [b, piece] : s.pieces) {
    if (b.p + b.q > -2) continue;
    for (const auto& v : piece.vectors()) low.push_back(unflatten(v, s.n));
  }
  for (const auto& v : s.s_f_perp.vectors()) {
    const Mat x = unflatten(v, s.n);
    for (const auto& y : low) {
      if (!bracket(x, y).is_zero()) return Verdict::fail("[s_F_perp, W_{-2}(g)] != 0");
    }
  }
  return Verdict::ok();
}

Verdict smoothness_test(const LieSplit& s) {
  const Subspace w0 = s.span_where([](const BiDegree& b) { return b.p + b.q <= 0; });
  if (!w0.contains(s.s_f_perp)) {
    for (const auto& [b, piece] : s.pieces) {
      if (b.p < 0 && b.p + b.q > 0 && piece.dim() > 0) {
        return Verdict::fail("s_F_perp meets g^" + to_string(b) + " outside W_0(g)");
      }
    }
    return Verdict::fail("s_F_perp is not contained in W_0(g)");
  }
  return Verdict::ok();
}

Verdict bracket_compatible(const LieSplit& s) {
  for (const auto& [a, pa] : s.pieces) {
    for (const auto& [b, pb] : s.pieces) {
      const auto target_it = s.pieces.find({a.p + b.p, a.q + b.q});
      for (const auto& x : s.elements(a.p, a.q)) {
        for (const auto& y : s.elements(b.p, b.q)) {
          const Mat z = bracket(x, y);
          if (z.is_zero()) continue;
          if (target_it == s.pieces.end() || !target_it->second.contains(flatten(z))) {
            return Verdict::fail("[g^" + to_string(a) + ", g^" + to_string(b) + "] leaves g^" +
                                 to_string(BiDegree{a.p + b.p, a.q + b.q}));
          }
        }
      }
    }
  }
  return Verdict::ok();
}

Verdict cone_contained(const LieSplit& s, const NilpotentCone& cone) {
  const Subspace target = s.span_where([](const BiDegree& b) { return b.p <= -1 && b.q <= -1; });
  for (std::size_t j = 0; j < cone.generators.size(); ++j) {
    if (!target.contains(flatten(cone.generators[j]))) {
      return Verdict::fail("N_" + std::to_string(j + 1) + " is not in (+)_{p,q<=-1} g^{p,q}");
    }
  }
  return Verdict::ok();
}

Verdict action_compatible(const LieSplit& s, const InducedStructure& h) {
  if (s.n != h.layout.base_dim()) throw Error("action_compatible: g does not act on the base of H");
  for (const auto& [r, piece] : s.pieces) {
    for (const auto& x : s.elements(r.p, r.q)) {
      const Mat xh = h.lift_derivation(x);
      for (const auto& [b, hp] : h.split.pieces()) {
        const Subspace target = h.split.piece(b.p + r.p, b.q + r.q);
        for (const auto& v : hp.vectors()) {
          if (!target.contains(xh * v)) {
            return Verdict::fail("g^" + to_string(r) + " maps H^" + to_string(b) + " outside H^" +
                                 to_string(BiDegree{b.p + r.p, b.q + r.q}));
          }
        }
      }
    }
  }
  return Verdict::ok();
}

}  // namespace hodge
