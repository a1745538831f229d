#include "hodge/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hodge {

CMat to_eigen(const Mat& m) {
  CMat out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_complex();
    }
  }
  return out;
}

CVec to_eigen(const Vec& v) {
  CVec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].to_complex();
  return out;
}

std::string index_set_str(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (unsigned j = 0; s >> j; ++j) {
    if (!((s >> j) & 1U)) continue;
    if (!first) out += ",";
    out += std::to_string(j + 1);
    first = false;
  }
  return out + "}";
}

MatPoly MatPoly::constant(const Mat& m, std::size_t r) { return {{{std::vector<unsigned>(r, 0), m}}}; }

MatPoly MatPoly::linear(const Mat& m, std::size_t var, std::size_t r) {
  std::vector<unsigned> e(r, 0);
  e.at(var) = 1;
  return {{{e, m}}};
}

bool MatPoly::is_zero() const {
  return std::all_of(terms.begin(), terms.end(), [](const Monomial& t) { return t.coeff.is_zero(); });
}

Mat MatPoly::eval(const std::vector<GaussScalar>& t, std::size_t n) const {
  Mat out(n, n);
  for (const auto& term : terms) {
    GaussScalar c(1);
    for (std::size_t v = 0; v < term.exps.size(); ++v) {
      for (unsigned e = 0; e < term.exps[v]; ++e) c *= t.at(v);
    }
    if (!c.is_zero()) out += c * term.coeff;
  }
  return out;
}

CMat MatPoly::eval(const std::vector<Complex>& t, std::size_t n) const {
  CMat out = CMat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& term : terms) {
    Complex c(1);
    for (std::size_t v = 0; v < term.exps.size(); ++v) c *= std::pow(t.at(v), static_cast<int>(term.exps[v]));
    if (c != Complex(0)) out += c * to_eigen(term.coeff);
  }
  return out;
}

std::set<BiDegree> bidegree_support(const Mat& x, const AdaptedFrame& frame) {
  const Mat local = inverse(frame.basis) * x * frame.basis;
  std::set<BiDegree> out;
  for (std::size_t i = 0; i < local.rows(); ++i) {
    for (std::size_t j = 0; j < local.cols(); ++j) {
      if (!local(i, j).is_zero()) {
        out.insert({frame.slots[i].p - frame.slots[j].p, frame.slots[i].q - frame.slots[j].q});
      }
    }
  }
  return out;
}

OrbitSpec make_orbit_spec(OrbitData data) {
  const MixedHodge& h = data.h;
  const std::size_t n = h.dim();
  if (data.cone.empty()) throw Error("orbit: the cone has no generators");
  if (data.cone.size() > 16) throw Error("orbit: at most 16 cone generators are supported");
  if (auto ok = validate_cone(data.cone, h.q); !ok) throw Error("orbit: " + ok.detail);
  if (h.w != weight_filtration(data.cone.interior(), h.weight)) throw Error("orbit: W differs from W(N)[-n]");
  OrbitSpec s;
  s.k = data.cone.size();
  s.r = s.k + data.extra;
  s.full = (1U << s.k) - 1U;
  s.frame = adapted_basis(h.f, h.w, h.q, h.weight);
  s.markers = locate_markers(h, s.frame);
  for (const auto& [set, poly] : data.zeta) {
    const std::string tag = "f_" + index_set_str(set);
    if ((set & ~s.full) != 0U) throw Error("orbit: " + tag + " names a generator outside the cone");
    for (const auto& term : poly.terms) {
      if (term.exps.size() != s.r) throw Error("orbit: " + tag + " has a monomial with the wrong number of variables");
      if (term.coeff.rows() != n || term.coeff.cols() != n) throw Error("orbit: " + tag + " has the wrong size");
      const Mat& x = term.coeff;
      if (!(h.q * x + x.transpose() * h.q).is_zero()) throw Error("orbit: " + tag + " does not preserve Q");
      for (const auto& b : bidegree_support(x, s.frame)) {
        if (b.p >= 0) throw Error("orbit: " + tag + " has a component in g^" + to_string(b) + ", outside s_F_perp");
      }
      for (std::size_t j = 0; j < s.k; ++j) {
        if (((set >> j) & 1U) && !bracket(x, data.cone.generators[j]).is_zero()) {
          throw Error("orbit: " + tag + " does not commute with N_" + std::to_string(j + 1));
        }
      }
    }
  }
  s.data = std::move(data);
  return s;
}

OrbitData lift_orbit_data(const InducedStructure& h, std::size_t extra,
                          const std::map<IndexSet, MatPoly>& zeta_on_v) {
  const InducedStructure hn = tate_normalize(h);
  OrbitData out{hn.mhs(), hn.cone, extra, {}};
  for (const auto& [set, poly] : zeta_on_v) {
    MatPoly lifted;
    for (const auto& term : poly.terms) lifted.terms.push_back({term.exps, hn.lift_derivation(term.coeff)});
    out.zeta.emplace(set, std::move(lifted));
  }
  return out;
}

std::vector<Complex> log_values(const FloatPoint& p, std::size_t k) {
  std::vector<Complex> out(k);
  const Complex two_pi_i(0, 2 * std::numbers::pi);
  for (std::size_t j = 0; j < k; ++j) {
    if (p.t.at(j) == Complex(0)) throw Error("orbit: log of a zero coordinate");
    const long b = j < p.branch.size() ? p.branch[j] : 0;
    out[j] = std::log(p.t[j]) / two_pi_i + static_cast<double>(b);
  }
  return out;
}

namespace {

CMat exp_nilpotent_f(const CMat& m) {
  const auto n = m.rows();
  CMat out = CMat::Identity(n, n);
  CMat term = CMat::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    term = (term * m) / static_cast<double>(k);
    out += term;
  }
  return out;
}

template <class S>
S hat_t(IndexSet full, IndexSet i, const std::vector<S>& t) {
  S out(1);
  for (std::size_t j = 0; (full >> j) != 0U; ++j) {
    if (((full & ~i) >> j) & 1U) out *= t[j];
  }
  return out;
}

CMat theta_f(const OrbitSpec& s, const std::vector<Complex>& ell, IndexSet skip) {
  const auto n = static_cast<Eigen::Index>(s.dim());
  CMat log = CMat::Zero(n, n);
  for (std::size_t j = 0; j < s.k; ++j) {
    if (!((skip >> j) & 1U)) log += ell[j] * to_eigen(s.n_op(j));
  }
  return exp_nilpotent_f(log);
}

Complex bilinear_f(const CVec& u, const CMat& q, const CVec& v) { return (u.transpose() * q * v)(0, 0); }

std::vector<GaussScalar> zero_on(std::vector<GaussScalar> t, IndexSet i) {
  for (std::size_t j = 0; j < t.size() && (i >> j) != 0U; ++j) {
    if ((i >> j) & 1U) t[j] = 0;
  }
  return t;
}

std::vector<Complex> zero_on(std::vector<Complex> t, IndexSet i) {
  for (std::size_t j = 0; j < t.size() && (i >> j) != 0U; ++j) {
    if ((i >> j) & 1U) t[j] = 0;
  }
  return t;
}

Mat n_power(const OrbitSpec& s, const std::vector<unsigned>& a) {
  Mat out = Mat::identity(s.dim());
  for (std::size_t j = 0; j < a.size(); ++j) out = power(s.n_op(j), a[j]) * out;
  return out;
}

void check_point(const OrbitSpec& s, std::size_t tsize, std::size_t ellsize) {
  if (tsize != s.r) throw Error("orbit: expected " + std::to_string(s.r) + " coordinates");
  if (ellsize != s.k) throw Error("orbit: expected " + std::to_string(s.k) + " log values");
}

}  // namespace

Mat theta(const OrbitSpec& s, const std::vector<GaussScalar>& ell, IndexSet skip) {
  Mat log(s.dim(), s.dim());
  for (std::size_t j = 0; j < s.k; ++j) {
    if (!((skip >> j) & 1U) && !ell[j].is_zero()) log += ell[j] * s.n_op(j);
  }
  return exp_nilpotent(log);
}

Mat zeta(const OrbitSpec& s, const ExactPoint& p) {
  check_point(s, p.t.size(), p.ell.size());
  Mat log(s.dim(), s.dim());
  for (const auto& [set, poly] : s.data.zeta) {
    const GaussScalar c = hat_t(s.full, set, p.t);
    if (!c.is_zero()) log += c * poly.eval(p.t, s.dim());
  }
  return exp_nilpotent(log);
}

Mat zeta_hat(const OrbitSpec& s, const ExactPoint& p) {
  check_point(s, p.t.size(), p.ell.size());
  std::vector<GaussScalar> minus;
  for (const auto& l : p.ell) minus.push_back(-l);
  Mat log(s.dim(), s.dim());
  for (const auto& [set, poly] : s.data.zeta) {
    const GaussScalar c = hat_t(s.full, set, p.t);
    if (c.is_zero()) continue;
    log += c * (theta(s, p.ell, set) * poly.eval(p.t, s.dim()) * theta(s, minus, set));
  }
  return exp_nilpotent(log);
}

CMat zeta_hat(const OrbitSpec& s, const std::vector<Complex>& t, const std::vector<Complex>& ell) {
  check_point(s, t.size(), ell.size());
  std::vector<Complex> minus;
  for (const auto& l : ell) minus.push_back(-l);
  const auto n = static_cast<Eigen::Index>(s.dim());
  CMat log = CMat::Zero(n, n);
  for (const auto& [set, poly] : s.data.zeta) {
    const Complex c = hat_t(s.full, set, t);
    if (c == Complex(0)) continue;
    log += c * (theta_f(s, ell, set) * poly.eval(t, s.dim()) * theta_f(s, minus, set));
  }
  return exp_nilpotent_f(log);
}

Rational h_tilde(const OrbitSpec& s, const Mat& eta) {
  const Vec e0 = eta * s.frame.e(s.markers.e0);
  const Vec einf = eta * s.frame.e(s.markers.einf);
  return bilinear(e0, s.data.h.q, conj(s.markers.lambda * einf)).re();
}

double h_tilde(const OrbitSpec& s, const CMat& eta) {
  const CVec e0 = eta * to_eigen(s.frame.e(s.markers.e0));
  const CVec einf = eta * to_eigen(s.frame.e(s.markers.einf));
  const Complex lambda = s.markers.lambda.to_complex();
  return bilinear_f(e0, to_eigen(s.data.h.q), (lambda * einf).conjugate()).real();
}

OrbitFrame eval_frame(const OrbitSpec& s, const ExactPoint& p) {
  OrbitFrame out;
  out.eta = theta(s, p.ell) * zeta(s, p);
  const Vec e0 = out.eta * s.frame.e(s.markers.e0);
  const Vec einf = out.eta * s.frame.e(s.markers.einf);
  out.q0inf = bilinear(e0, s.data.h.q, conj(einf));
  out.h_tilde = h_tilde(s, out.eta);
  return out;
}

OrbitFrameF eval_frame(const OrbitSpec& s, const FloatPoint& p) {
  const auto ell = log_values(p, s.k);
  check_point(s, p.t.size(), ell.size());
  const auto n = static_cast<Eigen::Index>(s.dim());
  CMat log = CMat::Zero(n, n);
  for (const auto& [set, poly] : s.data.zeta) {
    const Complex c = hat_t(s.full, set, p.t);
    if (c != Complex(0)) log += c * poly.eval(p.t, s.dim());
  }
  OrbitFrameF out;
  out.eta = theta_f(s, ell, 0) * exp_nilpotent_f(log);
  const CVec e0 = out.eta * to_eigen(s.frame.e(s.markers.e0));
  const CVec einf = out.eta * to_eigen(s.frame.e(s.markers.einf));
  out.q0inf = bilinear_f(e0, to_eigen(s.data.h.q), einf.conjugate());
  out.h_tilde = h_tilde(s, out.eta);
  return out;
}

Rational stratum_value(const OrbitSpec& s, IndexSet i, const ExactPoint& p) {
  if ((i & ~s.full) != 0U) throw Error("stratum_value: index set is not contained in J");
  const ExactPoint on{zero_on(p.t, i), p.ell};
  const Mat zh = zeta_hat(s, on);
  const Vec v0 = zh * (theta(s, p.ell, i) * s.frame.e(s.markers.e0));
  const Vec vinf = zh * s.frame.e(s.markers.einf);
  return bilinear(v0, s.data.h.q, conj(s.markers.lambda * vinf)).re();
}

double stratum_value(const OrbitSpec& s, IndexSet i, const FloatPoint& p) {
  if ((i & ~s.full) != 0U) throw Error("stratum_value: index set is not contained in J");
  const auto t = zero_on(p.t, i);
  std::vector<Complex> ell(s.k, Complex(0));
  for (std::size_t j = 0; j < s.k; ++j) {
    if (!((i >> j) & 1U)) ell[j] = log_values(p, s.k)[j];
  }
  const CMat zh = zeta_hat(s, t, ell);
  const CVec v0 = zh * (theta_f(s, ell, i) * to_eigen(s.frame.e(s.markers.e0)));
  const CVec vinf = zh * to_eigen(s.frame.e(s.markers.einf));
  const Complex lambda = s.markers.lambda.to_complex();
  return bilinear_f(v0, to_eigen(s.data.h.q), (lambda * vinf).conjugate()).real();
}

Rational h_j(const OrbitSpec& s, const std::vector<GaussScalar>& t) {
  if (t.size() != s.r) throw Error("h_J: expected " + std::to_string(s.r) + " coordinates");
  const auto on = zero_on(t, s.full);
  Mat fj(s.dim(), s.dim());
  if (const auto it = s.data.zeta.find(s.full); it != s.data.zeta.end()) fj = it->second.eval(on, s.dim());
  const Vec x = exp_nilpotent(fj) * s.frame.e(s.markers.e0);
  const int n = s.data.h.weight;
  const int m = s.markers.m;
  const GaussScalar v =
      pow_i(2 * n - m) * bilinear(x, s.data.h.q, power(s.n_sum(), static_cast<unsigned>(m - n)) * conj(x));
  if (!v.is_real()) throw Error("h_J is not real: " + v.str());
  return v.re();
}

double h_j(const OrbitSpec& s, const std::vector<Complex>& t) {
  if (t.size() != s.r) throw Error("h_J: expected " + std::to_string(s.r) + " coordinates");
  const auto on = zero_on(t, s.full);
  const auto n = static_cast<Eigen::Index>(s.dim());
  CMat fj = CMat::Zero(n, n);
  if (const auto it = s.data.zeta.find(s.full); it != s.data.zeta.end()) fj = it->second.eval(on, s.dim());
  const CVec x = exp_nilpotent_f(fj) * to_eigen(s.frame.e(s.markers.e0));
  const int w = s.data.h.weight;
  const int m = s.markers.m;
  const CMat np = to_eigen(power(s.n_sum(), static_cast<unsigned>(m - w)));
  return (pow_i(2 * w - m).to_complex() * bilinear_f(x, to_eigen(s.data.h.q), np * x.conjugate())).real();
}

Verdict monodromy_check(const OrbitSpec& s, const ExactPoint& p, const std::vector<long>& shifts) {
  if (shifts.size() != s.k) throw Error("monodromy_check: expected " + std::to_string(s.k) + " shifts");
  ExactPoint q = p;
  for (std::size_t j = 0; j < s.k; ++j) q.ell[j] += GaussScalar(shifts[j]);
  const auto a = eval_frame(s, p);
  const auto b = eval_frame(s, q);
  if (a.h_tilde != b.h_tilde) {
    return Verdict::fail("h~ changes from " + to_string(a.h_tilde) + " to " + to_string(b.h_tilde));
  }
  if (a.q0inf != b.q0inf) return Verdict::fail("Q(eta_0, conj eta_inf) changes");
  return Verdict::ok();
}

Verdict monodromy_check(const OrbitSpec& s, const FloatPoint& p, const std::vector<long>& shifts, double rel_tol) {
  if (shifts.size() != s.k) throw Error("monodromy_check: expected " + std::to_string(s.k) + " shifts");
  FloatPoint q = p;
  q.branch.resize(s.k, 0);
  for (std::size_t j = 0; j < s.k; ++j) q.branch[j] += shifts[j];
  const auto a = eval_frame(s, p);
  const auto b = eval_frame(s, q);
  const auto close = [rel_tol](Complex x, Complex y) {
    return std::abs(x - y) <= rel_tol * std::max({std::abs(x), std::abs(y), 1e-300});
  };
  if (!close(a.h_tilde, b.h_tilde)) {
    return Verdict::fail("h~ changes from " + std::to_string(a.h_tilde) + " to " + std::to_string(b.h_tilde));
  }
  if (!close(a.q0inf, b.q0inf)) return Verdict::fail("Q(eta_0, conj eta_inf) changes");
  return Verdict::ok();
}

FiberReport fiber_test(const OrbitSpec& s) {
  FiberReport out;
  if (const auto it = s.data.zeta.find(s.full); it != s.data.zeta.end()) {
    for (const auto& term : it->second.terms) {
      const auto sup = bidegree_support(term.coeff, s.frame);
      out.support.insert(sup.begin(), sup.end());
    }
  }
  out.in_w_minus1 = std::all_of(out.support.begin(), out.support.end(),
                                [](const BiDegree& b) { return b.p + b.q <= -1; });
  out.in_w0 =
      std::all_of(out.support.begin(), out.support.end(), [](const BiDegree& b) { return b.p + b.q <= 0; });
  return out;
}

LemmaMReport verify_lemma_m(const OrbitSpec& s) {
  if (s.k != 2) throw Error("lemma m: the cone must have exactly two generators");
  if (auto ok = polarization_check(s.data.h, s.data.cone); !ok) {
    throw Error("lemma m: the cone does not polarize (W, F): " + ok.detail);
  }
  const int n = s.data.h.weight;
  const auto w1 = weight_filtration(s.n_op(0), n);
  LemmaMReport out;
  out.m = s.markers.m;
  out.m1 = level(s.frame.e(s.markers.e0), w1);
  out.bounds = n <= out.m1 && out.m1 <= out.m;
  const Vec einf = s.frame.e(s.markers.einf);
  out.einf_member = w1[2 * n - out.m1].contains(einf);
  out.einf_excluded = !w1[2 * n - out.m1 - 1].contains(einf);
  return out;
}

GaussScalar term_value(const OrbitSpec& s, const std::vector<unsigned>& a, const ExactPoint& p) {
  if (a.size() != s.k) throw Error("term_value: multi-index has the wrong length");
  const Mat zh = zeta_hat(s, p);
  const Vec u = zh * (n_power(s, a) * s.frame.e(s.markers.e0));
  const Vec v = zh * s.frame.e(s.markers.einf);
  return bilinear(u, s.data.h.q, conj(v));
}

Complex term_value(const OrbitSpec& s, const std::vector<unsigned>& a, const FloatPoint& p) {
  if (a.size() != s.k) throw Error("term_value: multi-index has the wrong length");
  const CMat zh = zeta_hat(s, p.t, log_values(p, s.k));
  const CVec u = zh * to_eigen(n_power(s, a) * s.frame.e(s.markers.e0));
  const CVec v = zh * to_eigen(s.frame.e(s.markers.einf));
  return bilinear_f(u, to_eigen(s.data.h.q), v.conjugate());
}

Verdict check_triangular(const OrbitSpec& s, const Mat& eta) {
  const Mat local = inverse(s.frame.basis) * (eta - Mat::identity(s.dim())) * s.frame.basis;
  for (std::size_t i = 0; i < local.rows(); ++i) {
    for (std::size_t j = 0; j < local.cols(); ++j) {
      if (!local(i, j).is_zero() && s.frame.slots[i].p >= s.frame.slots[j].p) {
        return Verdict::fail("eta_" + std::to_string(j) + " - e_" + std::to_string(j) + " has an e_" +
                             std::to_string(i) + " component");
      }
    }
  }
  return Verdict::ok();
}

}  // namespace hodge
