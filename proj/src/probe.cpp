#include "hodge/probe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hodge {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

std::vector<std::size_t> members(IndexSet set, std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < k; ++j) {
    if ((set >> j) & 1U) out.push_back(j);
  }
  return out;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Orthonormal basis of the column span.
CMat orth(const CMat& a) {
  if (a.cols() == 0) return CMat(a.rows(), 0);
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() > 0 ? 1e-10 * sv(0) : 0;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  return svd.matrixU().leftCols(rank);
}

/// Orthonormal basis of the leading `rank` left singular directions.
CMat orth(const CMat& a, Eigen::Index rank) {
  if (rank == 0) return CMat(a.rows(), 0);
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(rank);
}

CMat columns_of(const Subspace& s) { return to_eigen(s.basis()).transpose(); }

void check_base(const OrbitSpec& s, const std::vector<Complex>& base) {
  if (base.size() != s.r) throw Error("probe: base point needs " + std::to_string(s.r) + " coordinates");
}

/// Shared radial sweep: `eval` maps a point to the observed value.
template <class Eval>
LimitReport sweep(const std::vector<std::size_t>& sampled, const ProbeConfig& cfg, const std::vector<Complex>& base,
                  Complex target, std::string claim, Eval eval) {
  if (auto v = cfg.validate(); !v) throw Error("probe config: " + v.detail);
  LimitReport rep;
  rep.claim = std::move(claim);
  rep.target = target;
  rep.tol = cfg.tol;
  std::vector<double> worst;
  for (const double radius : cfg.radii) {
    std::vector<LimitSample> at_radius;
    bool ok = true;
    for (const auto& angle : cfg.angles) {
      if (angle.size() < sampled.size()) throw Error("probe config: angle vector shorter than the sampled set");
      auto t = base;
      for (std::size_t idx = 0; idx < sampled.size(); ++idx) t[sampled[idx]] = std::polar(radius, angle[idx]);
      const Complex value = eval(t);
      if (!finite(value)) {
        ok = false;
        break;
      }
      at_radius.push_back({radius, angle, value, std::abs(value - target)});
    }
    if (!ok) {
      rep.clipped.push_back(radius);
      continue;
    }
    double w = 0;
    for (const auto& smp : at_radius) w = std::max(w, smp.deviation);
    worst.push_back(w);
    rep.samples.insert(rep.samples.end(), at_radius.begin(), at_radius.end());
  }
  if (worst.empty()) return rep;
  rep.max_deviation = worst.back();
  Complex sum = 0;
  std::size_t count = 0;
  const double last = rep.samples.back().radius;
  for (const auto& smp : rep.samples) {
    if (smp.radius == last) {
      sum += smp.value;
      ++count;
    }
  }
  rep.extrapolated = sum / static_cast<double>(count);
  // Deviations at the level of rounding noise count as non-increasing.
  const double floor = 1e-12 * std::max(1.0, std::abs(target));
  rep.monotone = true;
  for (std::size_t i = worst.size() >= 3 ? worst.size() - 3 : 0; i + 1 < worst.size(); ++i) {
    if (worst[i + 1] > worst[i] + floor) rep.monotone = false;
  }
  rep.pass = rep.monotone && rep.max_deviation <= cfg.tol;
  return rep;
}

}  // namespace

ProbeConfig ProbeConfig::defaults(std::size_t dim, std::size_t count) {
  ProbeConfig cfg;
  for (int e = 2; e <= 8; ++e) cfg.radii.push_back(std::pow(10.0, -e));
  const double golden = (std::sqrt(5.0) - 1) / 2;
  for (std::size_t v = 0; v < count; ++v) {
    std::vector<double> angle;
    for (std::size_t j = 0; j < dim; ++j) {
      const double frac = std::fmod(0.137 + golden * static_cast<double>(v) + std::numbers::sqrt2 * static_cast<double>(j), 1.0);
      angle.push_back(kTwoPi * frac);
    }
    cfg.angles.push_back(std::move(angle));
  }
  return cfg;
}

Verdict ProbeConfig::validate() const {
  if (radii.empty()) return Verdict::fail("no radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0)) return Verdict::fail("radii must be positive");
    if (i > 0 && !(radii[i] < radii[i - 1])) return Verdict::fail("radii must be strictly decreasing");
  }
  if (angles.empty()) return Verdict::fail("no angle vectors");
  if (!(fd_step > 0)) return Verdict::fail("fd_step must be positive");
  if (!(tol > 0)) return Verdict::fail("tol must be positive");
  return Verdict::ok();
}

std::vector<Complex> default_base(const OrbitSpec& s) {
  std::vector<Complex> out;
  for (std::size_t j = 0; j < s.r; ++j) {
    const double a = static_cast<double>(j);
    out.push_back(j < s.k ? std::polar(0.3, 0.4 + 0.5 * a) : std::polar(0.15, 1.1 + 0.7 * a));
  }
  return out;
}

LimitReport radial_limit(const OrbitSpec& s, IndexSet i, const ProbeConfig& cfg) {
  return radial_limit(s, i, cfg, default_base(s));
}

LimitReport radial_limit(const OrbitSpec& s, IndexSet i, const ProbeConfig& cfg, const std::vector<Complex>& base) {
  check_base(s, base);
  if ((i & ~s.full) != 0U) throw Error("radial_limit: index set is not contained in J");
  const double target = stratum_value(s, i, FloatPoint{base, {}});
  return sweep(members(i, s.k), cfg, base, target, "extension-limit " + index_set_str(i),
               [&](const std::vector<Complex>& t) { return Complex(eval_frame(s, FloatPoint{t, {}}).h_tilde); });
}

std::vector<std::vector<unsigned>> multi_indices(std::size_t k, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(k, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == k) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (k > 0) rec(rec, 0, d);
  return out;
}

LimitReport term_vanishing(const OrbitSpec& s, const std::vector<unsigned>& a, const ProbeConfig& cfg) {
  return term_vanishing(s, a, cfg, default_base(s));
}

LimitReport term_vanishing(const OrbitSpec& s, const std::vector<unsigned>& a, const ProbeConfig& cfg,
                           const std::vector<Complex>& base) {
  check_base(s, base);
  if (a.size() != s.k) throw Error("term_vanishing: multi-index has the wrong length");
  unsigned total = 0;
  std::string label;
  for (const auto x : a) {
    total += x;
    label += (label.empty() ? "" : ",") + std::to_string(x);
  }
  Complex target = 0;
  if (total == 0) {
    auto t0 = base;
    for (std::size_t j = 0; j < s.k; ++j) t0[j] = 0;
    const CMat zh = zeta_hat(s, t0, std::vector<Complex>(s.k, 0));
    const CVec u = zh * to_eigen(s.frame.e(s.markers.e0));
    const CVec v = zh * to_eigen(s.frame.e(s.markers.einf));
    target = u.transpose() * to_eigen(s.data.h.q) * v.conjugate();
  }
  return sweep(members(s.full, s.k), cfg, base, target, "term-vanishing (" + label + ")",
               [&](const std::vector<Complex>& t) {
                 const FloatPoint p{t, {}};
                 const auto ell = log_values(p, s.k);
                 Complex factor = 1;
                 for (std::size_t j = 0; j < s.k; ++j) factor *= std::pow(ell[j], static_cast<int>(a[j]));
                 return factor * term_value(s, a, p);
               });
}

LeviReport levi_probe(const OrbitSpec& s, IndexSet i, const std::vector<Complex>& base,
                      const std::vector<std::vector<Complex>>& dirs, const ProbeConfig& cfg) {
  check_base(s, base);
  if (auto v = cfg.validate(); !v) throw Error("probe config: " + v.detail);
  if ((i & ~s.full) != 0U) throw Error("levi_probe: index set is not contained in J");
  std::vector<std::size_t> coords;
  for (std::size_t c = 0; c < s.r; ++c) {
    if (c >= s.k || !((i >> c) & 1U)) coords.push_back(c);
  }
  const auto m = static_cast<Eigen::Index>(coords.size());
  LeviReport rep;
  rep.claim = "stratum-psh " + index_set_str(i);
  rep.tol = cfg.tol;
  rep.clipped_normal = s.r - coords.size();

  auto rho = [&](const Eigen::VectorXd& x) {
    auto t = base;
    for (Eigen::Index c = 0; c < m; ++c) t[coords[c]] += Complex(x(2 * c), x(2 * c + 1));
    const double h = stratum_value(s, i, FloatPoint{t, {}});
    if (!(h > 0)) throw Error("levi_probe: stratum value is not positive near the base point");
    return -std::log(h);
  };
  rep.value = stratum_value(s, i, FloatPoint{base, {}});
  if (!(rep.value > 0)) throw Error("levi_probe: stratum value is not positive at the base point");

  const Eigen::Index n = 2 * m;
  const double h = cfg.fd_step;
  const Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n);
  const double r0 = rho(x0);
  Eigen::MatrixXd hess(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    Eigen::VectorXd ea = Eigen::VectorXd::Zero(n);
    ea(a) = h;
    hess(a, a) = (rho(ea) - 2 * r0 + rho(-ea)) / (h * h);
    for (Eigen::Index b = a + 1; b < n; ++b) {
      Eigen::VectorXd eb = Eigen::VectorXd::Zero(n);
      eb(b) = h;
      hess(a, b) = hess(b, a) = (rho(ea + eb) - rho(ea - eb) - rho(eb - ea) + rho(-ea - eb)) / (4 * h * h);
    }
  }
  // L_{ab} = d_a dbar_b rho in the complex coordinates z_c = x_{2c} + i x_{2c+1}.
  CMat levi(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      levi(a, b) = 0.25 * Complex(hess(2 * a, 2 * b) + hess(2 * a + 1, 2 * b + 1),
                                  hess(2 * a, 2 * b + 1) - hess(2 * a + 1, 2 * b));
    }
  }

  CMat d(m, dirs.empty() ? m : static_cast<Eigen::Index>(dirs.size()));
  if (dirs.empty()) {
    d = CMat::Identity(m, m);
  } else {
    for (std::size_t c = 0; c < dirs.size(); ++c) {
      if (static_cast<Eigen::Index>(dirs[c].size()) != m) {
        throw Error("levi_probe: direction " + std::to_string(c) + " needs " + std::to_string(m) + " entries");
      }
      for (Eigen::Index a = 0; a < m; ++a) d(a, static_cast<Eigen::Index>(c)) = dirs[c][a];
    }
  }
  for (Eigen::Index c = 0; c < d.cols(); ++c) {
    const CVec v = d.col(c);
    const double norm2 = v.squaredNorm();
    rep.direction_values.push_back(norm2 > 0 ? (v.transpose() * levi * v.conjugate()).value().real() / norm2 : 0);
  }
  const CMat q = orth(d);
  if (q.cols() > 0) {
    CMat restricted = q.transpose() * levi * q.conjugate();
    restricted = (restricted + restricted.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMat> eig(restricted, Eigen::EigenvaluesOnly);
    for (Eigen::Index c = 0; c < eig.eigenvalues().size(); ++c) rep.eigenvalues.push_back(eig.eigenvalues()(c));
  }
  rep.min_eigenvalue = rep.eigenvalues.empty() ? 0 : rep.eigenvalues.front();
  rep.psh = rep.min_eigenvalue >= -cfg.tol;
  return rep;
}

double subspace_gap(const CMat& a, const CMat& b) {
  const CMat qa = orth(a);
  const CMat qb = orth(b);
  if (qa.cols() != qb.cols()) return 1;
  if (qa.cols() == 0) return 0;
  // Sine of the largest principal angle: the norm of the part of span(b) outside span(a).
  const CMat residual = qb - qa * (qa.adjoint() * qb);
  Eigen::JacobiSVD<CMat> svd(residual);
  return std::min(1.0, svd.singularValues()(0));
}

FInfinityReport f_infinity_probe(const MixedHodge& m, const Mat& n_op, const std::vector<double>& y_values,
                                 double tol) {
  if (y_values.empty()) throw Error("f_infinity_probe: no y values");
  for (std::size_t i = 1; i < y_values.size(); ++i) {
    if (!(y_values[i] > y_values[i - 1])) throw Error("f_infinity_probe: y values must increase");
  }
  const auto finf = f_infinity(deligne_split(m), m.weight);
  const CMat nf = to_eigen(n_op);
  const auto dim = static_cast<Eigen::Index>(m.dim());
  FInfinityReport rep;
  rep.claim = "f-infinity-limit";
  rep.y = y_values;
  rep.tol = tol;

  const int lo = std::min(m.f.lowest(), finf.lowest());
  const int hi = std::max(m.f.highest(), finf.highest());
  std::vector<std::vector<CMat>> projectors(y_values.size());
  for (std::size_t iy = 0; iy < y_values.size(); ++iy) {
    CMat x = Complex(0, y_values[iy]) * nf;
    CMat g = CMat::Identity(dim, dim);
    CMat term = g;
    for (Eigen::Index k = 1; k <= dim; ++k) {
      term = (term * x) / static_cast<double>(k);
      g += term;
    }
    double worst = 0;
    for (int p = lo; p <= hi; ++p) {
      const CMat moved = orth(g * columns_of(m.f[p]), static_cast<Eigen::Index>(m.f[p].dim()));
      worst = std::max(worst, subspace_gap(moved, columns_of(finf[p])));
      projectors[iy].push_back(moved * moved.adjoint());
    }
    rep.distance.push_back(worst);
  }
  rep.decreasing = true;
  for (std::size_t i = 1; i < rep.distance.size(); ++i) {
    if (rep.distance[i] > rep.distance[i - 1] + 1e-12) rep.decreasing = false;
  }
  // Polynomial extrapolation in x = 1/y to x = 0 (Lagrange weights).
  const std::size_t ny = y_values.size();
  std::vector<double> w(ny, 1.0);
  for (std::size_t i = 0; i < ny; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      if (j == i) continue;
      const double xi = 1 / y_values[i];
      const double xj = 1 / y_values[j];
      w[i] *= xj / (xj - xi);
    }
  }
  double worst = 0;
  for (int p = lo; p <= hi; ++p) {
    const auto idx = static_cast<std::size_t>(p - lo);
    CMat proj = CMat::Zero(dim, dim);
    for (std::size_t i = 0; i < ny; ++i) proj += w[i] * projectors[i][idx];
    proj = (proj + proj.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMat> eig(proj);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index c = 0; c < dim; ++c) {
      if (eig.eigenvalues()(c) > 0.5) keep.push_back(c);
    }
    CMat span(dim, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c) span.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(keep[c]);
    worst = std::max(worst, subspace_gap(span, columns_of(finf[p])));
  }
  rep.extrapolated_distance = worst;
  rep.pass = rep.decreasing && rep.extrapolated_distance < tol;
  return rep;
}

}  // namespace hodge
