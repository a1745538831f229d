#include "hodge/adapted_basis.hpp"

#include <algorithm>

namespace hodge {

namespace {

// Basis (as rows) of {v in span(ws) : Q(v, u) = 0 for all u in us}.
std::vector<Vec> q_complement(const std::vector<Vec>& ws, const std::vector<Vec>& us, const Mat& q) {
  if (ws.empty()) return {};
  Mat c(us.size(), ws.size());
  for (std::size_t r = 0; r < us.size(); ++r) {
    for (std::size_t k = 0; k < ws.size(); ++k) c(r, k) = bilinear(ws[k], q, us[r]);
  }
  std::vector<Vec> out;
  for (const auto& coeffs : kernel(c).vectors()) {
    Vec v(ws.front().size());
    for (std::size_t k = 0; k < ws.size(); ++k) {
      if (!coeffs[k].is_zero()) v = v + coeffs[k] * ws[k];
    }
    out.push_back(std::move(v));
  }
  return out;
}

// A nonzero Q-isotropic vector in span(ws), found by orthogonalization and Q(i)-rational
// square roots. Throws when the search fails.
Vec find_isotropic(const std::vector<Vec>& ws, const Mat& q) {
  for (const auto& w : ws) {
    if (bilinear(w, q, w).is_zero()) return w;
  }
  std::vector<Vec> fs;
  std::vector<GaussScalar> cs;
  for (const auto& w : ws) {
    Vec v = w;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      const GaussScalar proj = bilinear(v, q, fs[j]) / cs[j];
      if (!proj.is_zero()) v = v - proj * fs[j];
    }
    const GaussScalar c = bilinear(v, q, v);
    if (c.is_zero()) return v;
    fs.push_back(std::move(v));
    cs.push_back(c);
  }
  for (std::size_t j = 0; j < fs.size(); ++j) {
    for (std::size_t k = j + 1; k < fs.size(); ++k) {
      if (const auto t = sqrt_exact(-cs[j] / cs[k])) return fs[j] + *t * fs[k];
    }
  }
  throw Error("adapted_basis: the form is anisotropic over Q(i) on a self-dual piece");
}

// Basis of a self-dual piece with Q(e_a, e_{r-1-a}) = 1 and all other pairings zero.
std::vector<Vec> hyperbolic_basis(const std::vector<Vec>& piece, const Mat& q) {
  const std::size_t r = piece.size();
  std::vector<Vec> front;
  std::vector<Vec> back;
  std::vector<Vec> rest = piece;
  while (rest.size() >= 2) {
    const Vec a = find_isotropic(rest, q);
    const Vec* partner = nullptr;
    for (const auto& w : rest) {
      if (!bilinear(a, q, w).is_zero()) {
        partner = &w;
        break;
      }
    }
    if (partner == nullptr) throw Error("adapted_basis: Q is degenerate on a self-dual piece");
    const Vec w1 = bilinear(a, q, *partner).inverse() * *partner;
    const Vec b = w1 - (bilinear(w1, q, w1) / 2) * a;
    front.push_back(a);
    back.push_back(b);
    rest = q_complement(rest, {a, b}, q);
  }
  if (rest.size() == 1) {
    const GaussScalar c = bilinear(rest[0], q, rest[0]);
    const auto root = c.is_zero() ? std::nullopt : sqrt_exact(c);
    if (!root) throw Error("adapted_basis: middle vector of a self-dual piece has no Q(i)-rational unit scaling");
    front.push_back(root->inverse() * rest[0]);
  }
  std::vector<Vec> out = front;
  for (auto it = back.rbegin(); it != back.rend(); ++it) out.push_back(*it);
  if (out.size() != r) throw Error("adapted_basis: lost dimensions on a self-dual piece");
  return out;
}

}  // namespace

AdaptedFrame adapted_basis(const DeligneSplitting& s, const Mat& q, int n) {
  const std::size_t dim = s.ambient_dim();
  if (dim == 0) throw Error("adapted_basis: empty space");
  std::vector<BiDegree> order;
  for (const auto& [b, piece] : s.pieces()) order.push_back(b);
  std::sort(order.begin(), order.end(), [](const BiDegree& x, const BiDegree& y) { return y < x; });
  std::map<BiDegree, std::size_t> start;
  std::size_t pos = 0;
  for (const auto& b : order) {
    start[b] = pos;
    pos += s.piece(b.p, b.q).dim();
  }
  const std::size_t d = dim - 1;
  std::vector<Vec> cols(dim);
  std::vector<BiDegree> slots(dim);
  for (const auto& b : order) {
    const BiDegree m{n - b.p, n - b.q};
    const Subspace& piece = s.piece(b.p, b.q);
    const Subspace& mirror = s.piece(m.p, m.q);
    const std::size_t r = piece.dim();
    if (mirror.dim() != r) {
      throw Error("adapted_basis: dim I^" + to_string(b) + " != dim I^" + to_string(m));
    }
    const std::size_t sb = start[b];
    if (m < b) {
      const Mat u = piece.basis();
      const Mat wm = mirror.basis();
      const Mat g = u * q * wm.transpose();
      if (rank(g) != r) throw Error("adapted_basis: Q does not pair I^" + to_string(b) + " with I^" + to_string(m));
      const Mat v = (wm.transpose() * inverse(g)).transpose();  // rows v_a with Q(u_a, v_c) = delta
      for (std::size_t a = 0; a < r; ++a) {
        cols[sb + a] = u.row(a);
        slots[sb + a] = b;
        cols[d - sb - a] = v.row(a);
        slots[d - sb - a] = m;
      }
    } else if (m == b) {
      const auto hb = hyperbolic_basis(piece.vectors(), q);
      for (std::size_t a = 0; a < r; ++a) {
        cols[sb + a] = hb[a];
        slots[sb + a] = b;
      }
    }
  }
  AdaptedFrame out{Mat::from_columns(cols, dim), std::move(slots)};
  const Mat gram = out.basis.transpose() * q * out.basis;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      GaussScalar expect = 0;
      if (i + j == d) expect = (2 * i <= d || n % 2 == 0) ? 1 : -1;
      if (gram(i, j) != expect) {
        throw Error("adapted_basis: pairing condition fails at (" + std::to_string(i) + "," +
                    std::to_string(j) + "); Q does not respect the splitting");
      }
    }
  }
  return out;
}

AdaptedFrame adapted_basis(const DecreasingFiltration& f, const IncreasingFiltration& w, const Mat& q,
                           int n) {
  return adapted_basis(deligne_split(w, f), q, n);
}

Verdict check_adapted(const AdaptedFrame& frame, const DecreasingFiltration& f,
                      const IncreasingFiltration& w, const Mat& q, int n) {
  const std::size_t dim = frame.basis.rows();
  if (frame.basis.cols() != dim || frame.slots.size() != dim) return Verdict::fail("frame has the wrong shape");
  if (rank(frame.basis) != dim) return Verdict::fail("frame vectors are not a basis");
  const auto split = deligne_split(w, f);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!split.piece(frame.slots[i].p, frame.slots[i].q).contains(frame.e(i))) {
      return Verdict::fail("e_" + std::to_string(i) + " is not in I^" + to_string(frame.slots[i]));
    }
    if (i > 0 && frame.slots[i - 1] < frame.slots[i]) return Verdict::fail("slots are not sorted");
  }
  for (int p = f.lowest(); p <= f.highest() + 1; ++p) {
    std::size_t count = 0;
    while (count < dim && frame.slots[count].p >= p) ++count;
    std::vector<Vec> init;
    for (std::size_t i = 0; i < count; ++i) init.push_back(frame.e(i));
    if (Subspace::span(init, dim) != f[p]) {
      return Verdict::fail("F^" + std::to_string(p) + " is not spanned by an initial segment");
    }
  }
  for (int l = w.lowest(); l <= w.highest(); ++l) {
    std::vector<Vec> sub;
    for (std::size_t i = 0; i < dim; ++i) {
      if (frame.slots[i].p + frame.slots[i].q <= l) sub.push_back(frame.e(i));
    }
    if (Subspace::span(sub, dim) != w[l]) {
      return Verdict::fail("W_" + std::to_string(l) + " is not spanned by a subset of the frame");
    }
  }
  const Mat gram = frame.basis.transpose() * q * frame.basis;
  const std::size_t d = dim - 1;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const int sign = (2 * i <= d || n % 2 == 0) ? 1 : -1;
      if (gram(i, j) != GaussScalar(i + j == d ? sign : 0)) {
        return Verdict::fail("Q(e_" + std::to_string(i) + ", e_" + std::to_string(j) + ") = " +
                             gram(i, j).str());
      }
    }
  }
  return Verdict::ok();
}

}  // namespace hodge
