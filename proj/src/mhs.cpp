#include "hodge/mhs.hpp"

#include <algorithm>
#include <ostream>

namespace hodge {

std::string to_string(const BiDegree& b) {
  return "(" + std::to_string(b.p) + "," + std::to_string(b.q) + ")";
}

HodgeDiamond::HodgeDiamond(std::map<BiDegree, std::size_t> dims) {
  for (auto& [b, d] : dims) {
    if (d != 0) dims_.emplace(b, d);
  }
}

std::size_t HodgeDiamond::at(int p, int q) const {
  const auto it = dims_.find({p, q});
  return it == dims_.end() ? 0 : it->second;
}

std::size_t HodgeDiamond::total() const {
  std::size_t t = 0;
  for (const auto& [b, d] : dims_) t += d;
  return t;
}

HodgeDiamond HodgeDiamond::shifted(int dp, int dq) const {
  std::map<BiDegree, std::size_t> out;
  for (const auto& [b, d] : dims_) out[{b.p + dp, b.q + dq}] = d;
  return HodgeDiamond(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const HodgeDiamond& d) {
  os << "{";
  bool first = true;
  for (const auto& [b, n] : d.entries()) {
    os << (first ? "" : ", ") << to_string(b) << ":" << n;
    first = false;
  }
  return os << "}";
}

DeligneSplitting::DeligneSplitting(std::size_t ambient, std::map<BiDegree, Subspace> pieces)
    : ambient_(ambient), zero_(Subspace::zero(ambient)) {
  for (auto& [b, s] : pieces) {
    if (s.ambient_dim() != ambient) throw Error("splitting piece has the wrong ambient");
    if (!s.is_zero()) pieces_.emplace(b, std::move(s));
  }
}

const Subspace& DeligneSplitting::piece(int p, int q) const {
  const auto it = pieces_.find({p, q});
  return it == pieces_.end() ? zero_ : it->second;
}

HodgeDiamond DeligneSplitting::diamond() const {
  std::map<BiDegree, std::size_t> d;
  for (const auto& [b, s] : pieces_) d[b] = s.dim();
  return HodgeDiamond(std::move(d));
}

Mat NilpotentCone::combination(const std::vector<GaussScalar>& coeffs) const {
  if (coeffs.size() != generators.size()) throw Error("cone coefficient count mismatch");
  if (generators.empty()) throw Error("empty cone has no combinations");
  Mat out(generators.front().rows(), generators.front().cols());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!coeffs[j].is_zero()) out += coeffs[j] * generators[j];
  }
  return out;
}

Mat NilpotentCone::interior() const {
  return combination(std::vector<GaussScalar>(generators.size(), GaussScalar(1)));
}

namespace {

bool is_q_skew(const Mat& n, const Mat& q) { return (n.transpose() * q + q * n).is_zero(); }

Verdict check_form(const Mat& q, int n, std::size_t dim) {
  if (!q.is_square() || q.rows() != dim) return Verdict::fail("Q has the wrong shape");
  const Mat qt = q.transpose();
  if (n % 2 == 0 ? qt != q : qt != -q) {
    return Verdict::fail("Q is not (-1)^n-symmetric for n = " + std::to_string(n));
  }
  if (rank(q) != dim) return Verdict::fail("Q is degenerate");
  return Verdict::ok();
}

}  // namespace

Verdict validate_cone(const NilpotentCone& cone, const Mat& q) {
  for (std::size_t j = 0; j < cone.size(); ++j) {
    const Mat& n = cone.generators[j];
    const std::string name = "N_" + std::to_string(j + 1);
    if (!n.is_square() || n.rows() != q.rows()) return Verdict::fail(name + " has the wrong shape");
    if (n.is_zero()) return Verdict::fail(name + " is zero");
    if (!is_nilpotent(n)) return Verdict::fail(name + " is not nilpotent");
    if (!is_q_skew(n, q)) return Verdict::fail(name + " is not Q-antisymmetric");
    for (std::size_t k = j + 1; k < cone.size(); ++k) {
      if (!bracket(n, cone.generators[k]).is_zero()) {
        return Verdict::fail(name + " and N_" + std::to_string(k + 1) + " do not commute");
      }
    }
  }
  return Verdict::ok();
}

DeligneSplitting deligne_split(const IncreasingFiltration& w, const DecreasingFiltration& f) {
  if (w.ambient_dim() != f.ambient_dim()) throw Error("deligne_split: W and F live on different spaces");
  const std::size_t dim = w.ambient_dim();
  const DecreasingFiltration fbar = f.conjugate();
  std::map<BiDegree, Subspace> pieces;
  for (int p = f.lowest(); p <= f.highest(); ++p) {
    for (int q = fbar.lowest(); q <= fbar.highest(); ++q) {
      const int l = p + q;
      if (l < w.lowest() || l > w.highest()) continue;
      const Subspace left = intersect(f[p], w[l]);
      if (left.is_zero()) continue;
      Subspace right = intersect(fbar[q], w[l]);
      for (int j = 1; l - j - 1 >= w.lowest(); ++j) {
        right = sum(right, intersect(fbar[q - j], w[l - j - 1]));
      }
      Subspace piece = intersect(left, right);
      if (!piece.is_zero()) pieces.emplace(BiDegree{p, q}, std::move(piece));
    }
  }
  DeligneSplitting s(dim, std::move(pieces));
  if (auto v = validate_splitting(s, w, f); !v) {
    throw Error("not a mixed Hodge structure: " + v.detail);
  }
  return s;
}

DeligneSplitting deligne_split(const MixedHodge& m) { return deligne_split(m.w, m.f); }

Verdict validate_splitting(const DeligneSplitting& s, const IncreasingFiltration& w,
                           const DecreasingFiltration& f) {
  const std::size_t dim = s.ambient_dim();
  std::vector<Subspace> parts;
  std::size_t total = 0;
  for (const auto& [b, piece] : s.pieces()) {
    parts.push_back(piece);
    total += piece.dim();
  }
  if (!is_direct_sum(parts)) return Verdict::fail("the pieces I^{p,q} are not independent");
  if (total != dim) {
    return Verdict::fail("the pieces I^{p,q} span " + std::to_string(total) + " of " +
                         std::to_string(dim) + " dimensions");
  }
  for (int p = f.lowest(); p <= f.highest() + 1; ++p) {
    if (s.span_where([p](int pp, int) { return pp >= p; }) != f[p]) {
      return Verdict::fail("F^" + std::to_string(p) + " is not the sum of I^{p',q} with p' >= " +
                           std::to_string(p));
    }
  }
  for (int l = w.lowest() - 1; l <= w.highest(); ++l) {
    if (s.span_where([l](int p, int q) { return p + q <= l; }) != w[l]) {
      return Verdict::fail("W_" + std::to_string(l) + " is not the sum of I^{p,q} with p+q <= " +
                           std::to_string(l));
    }
  }
  for (const auto& [b, piece] : s.pieces()) {
    Subspace target = s.piece(b.q, b.p);
    target = sum(target, s.span_where([&](int r, int t) { return r < b.q && t < b.p; }));
    if (!target.contains(conjugate(piece))) {
      return Verdict::fail("conj(I^" + to_string(b) + ") is not congruent to I^" +
                           to_string(BiDegree{b.q, b.p}) + " modulo lower pieces");
    }
  }
  return Verdict::ok();
}

DecreasingFiltration f_infinity(const DeligneSplitting& s, int n) {
  const std::size_t dim = s.ambient_dim();
  if (s.pieces().empty()) return {dim, 0, {Subspace::full(dim)}};
  int qmin = s.pieces().begin()->first.q;
  int qmax = qmin;
  for (const auto& [b, piece] : s.pieces()) {
    qmin = std::min(qmin, b.q);
    qmax = std::max(qmax, b.q);
  }
  std::vector<Subspace> steps;
  for (int k = n - qmax; k <= n - qmin; ++k) {
    steps.push_back(s.span_where([&](int, int q) { return q <= n - k; }));
  }
  return {dim, n - qmax, std::move(steps)};
}

HodgeDiamond hodge_diamond(const DeligneSplitting& s) { return s.diamond(); }

Verdict check_symmetries(const HodgeDiamond& d, int n, bool limiting) {
  for (const auto& [b, dim] : d.entries()) {
    if (d.at(b.q, b.p) != dim) {
      return Verdict::fail("i^" + to_string(b) + " = " + std::to_string(dim) + " but i^" +
                           to_string(BiDegree{b.q, b.p}) + " = " + std::to_string(d.at(b.q, b.p)));
    }
    if (limiting && d.at(n - b.q, n - b.p) != dim) {
      return Verdict::fail("i^" + to_string(b) + " = " + std::to_string(dim) + " but i^" +
                           to_string(BiDegree{n - b.q, n - b.p}) + " = " +
                           std::to_string(d.at(n - b.q, n - b.p)));
    }
  }
  return Verdict::ok();
}

bool is_positive_definite(const Mat& h) {
  if (!h.is_square()) throw Error("is_positive_definite: matrix is not square");
  if (h.conj().transpose() != h) throw Error("is_positive_definite: matrix is not Hermitian");
  Mat a = h;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const GaussScalar d = a(k, k);
    if (!d.is_real() || sgn(d.re()) <= 0) return false;
    const GaussScalar inv = d.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const GaussScalar f = a(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
      }
    }
  }
  return true;
}

Verdict first_riemann_relation(const MixedHodge& m) {
  for (int p = m.f.lowest(); p <= m.f.highest(); ++p) {
    const int r = m.weight + 1 - p;
    if (!q_orthogonal(m.f[p], m.f[r], m.q)) {
      return Verdict::fail("Q(F^" + std::to_string(p) + ", F^" + std::to_string(r) + ") != 0");
    }
  }
  return Verdict::ok();
}

Verdict polarization_check(const MixedHodge& m, const Mat& n) {
  const std::size_t dim = m.dim();
  if (auto v = check_form(m.q, m.weight, dim); !v) return v;
  if (m.w.ambient_dim() != dim || m.f.ambient_dim() != dim) {
    return Verdict::fail("filtrations and Q live on different spaces");
  }
  if (!n.is_square() || n.rows() != dim) return Verdict::fail("N has the wrong shape");
  if (!is_nilpotent(n)) return Verdict::fail("N is not nilpotent");
  if (!is_q_skew(n, m.q)) return Verdict::fail("N is not Q-antisymmetric");
  if (m.w != weight_filtration(n, m.weight)) return Verdict::fail("W differs from W(N)[-n]");
  if (auto v = first_riemann_relation(m); !v) return v;
  for (int p = m.f.lowest(); p <= m.f.highest(); ++p) {
    if (!m.f[p - 1].contains(apply(n, m.f[p]))) {
      return Verdict::fail("N F^" + std::to_string(p) + " is not contained in F^" +
                           std::to_string(p - 1));
    }
  }
  DeligneSplitting split;
  try {
    split = deligne_split(m.w, m.f);
  } catch (const Error& e) {
    return Verdict::fail(e.what());
  }
  for (const auto& [b, piece] : split.pieces()) {
    const int l = b.p + b.q - m.weight;
    if (l < 0) continue;
    const Subspace prim = intersect(piece, kernel(power(n, static_cast<unsigned>(l + 1))));
    if (prim.is_zero()) continue;
    const Mat nl = power(n, static_cast<unsigned>(l));
    const auto vs = prim.vectors();
    Mat h(vs.size(), vs.size());
    const GaussScalar phase = pow_i(b.p - b.q);
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t c = 0; c < vs.size(); ++c) {
        h(a, c) = phase * bilinear(vs[a], m.q, nl * conj(vs[c]));
      }
    }
    if (h.conj().transpose() != h || !is_positive_definite(h)) {
      return Verdict::fail("Hodge-Riemann form is not positive definite on the primitive part of I^" +
                           to_string(b));
    }
  }
  return Verdict::ok();
}

Verdict polarization_check(const MixedHodge& m, const NilpotentCone& cone) {
  if (auto v = validate_cone(cone, m.q); !v) return v;
  for (std::size_t j = 0; j < cone.size(); ++j) {
    for (int p = m.f.lowest(); p <= m.f.highest(); ++p) {
      if (!m.f[p - 1].contains(apply(cone.generators[j], m.f[p]))) {
        return Verdict::fail("N_" + std::to_string(j + 1) + " F^" + std::to_string(p) +
                             " is not contained in F^" + std::to_string(p - 1));
      }
    }
  }
  if (cone.empty()) return polarization_check(m, Mat(m.dim(), m.dim()));
  return polarization_check(m, cone.interior());
}

}  // namespace hodge
