#include "hodge/suites.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hodge/lie.hpp"

namespace hodge {

namespace {

CheckResult from_verdict(const std::string& suite, const std::string& claim, const Verdict& v) {
  return {suite, claim, v.pass, v.detail};
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

std::string shifts_str(const std::vector<long>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

Rational small_rational(std::mt19937& rng, long den) {
  std::uniform_int_distribution<long> d(-den, den);
  return Rational(d(rng), den);
}

std::vector<std::vector<long>> shift_list(const OrbitSpec& s, const SuiteOptions& opt) {
  if (!opt.shifts.empty()) {
    if (opt.shifts.size() != s.k) {
      throw Error("monodromy: expected " + std::to_string(s.k) + " shifts, got " + std::to_string(opt.shifts.size()));
    }
    return {opt.shifts};
  }
  std::vector<std::vector<long>> out;
  for (std::size_t j = 0; j < s.k; ++j) {
    std::vector<long> e(s.k, 0);
    e[j] = 1;
    out.push_back(std::move(e));
  }
  std::vector<long> big(s.k, 5);
  for (std::size_t j = 1; j < s.k; j += 2) big[j] = -3;
  out.push_back(std::move(big));
  return out;
}

std::vector<CheckResult> symmetries(const FixtureFile& f) {
  const std::string suite = "symmetries";
  std::vector<CheckResult> out;
  const bool limiting = !f.fixture.v.cone.empty();
  const auto h = h_structure(f);
  const auto split = deligne_split(h);
  out.push_back(from_verdict(suite, "splitting H", validate_splitting(split, h.w, h.f)));
  out.push_back(from_verdict(suite, "symmetries H", check_symmetries(split.diamond(), h.weight, limiting)));
  if (f.space == FixtureSpace::source) {
    const auto& v = f.fixture.v;
    const auto sv = deligne_split(v.mhs());
    out.push_back(from_verdict(suite, "splitting V", validate_splitting(sv, v.weight_filtration(), v.f)));
    out.push_back(from_verdict(suite, "symmetries V", check_symmetries(sv.diamond(), v.weight, limiting)));
    const auto g = lie_deligne_split(lie_algebra(v.q), v.mhs());
    out.push_back(from_verdict(suite, "symmetries g", check_symmetries(g.diamond(), 0, limiting)));
  }
  return out;
}

std::vector<CheckResult> isotropy(const FixtureFile& f) {
  const std::string suite = "isotropy";
  std::vector<CheckResult> out;
  const auto h = h_structure(f);
  out.push_back(from_verdict(suite, "first-riemann H", first_riemann_relation(h)));
  out.push_back(from_verdict(suite, "isotropy W H", isotropy_check(h.w, h.q, h.weight)));
  const auto data = orbit_data(f);
  const std::size_t k = data.cone.size();
  for (IndexSet i = 1; k > 0 && i < (1U << k); ++i) {
    Mat n(h.dim(), h.dim());
    for (std::size_t j = 0; j < k; ++j) {
      if ((i >> j) & 1U) n += data.cone.generators[j];
    }
    out.push_back(from_verdict(suite, "isotropy W(N_" + index_set_str(i) + ") H",
                               isotropy_check(weight_filtration(n, h.weight), h.q, h.weight)));
  }
  if (!data.cone.empty()) out.push_back(from_verdict(suite, "polarization H", polarization_check(h, data.cone)));
  if (f.space == FixtureSpace::source) {
    const auto& v = f.fixture.v;
    out.push_back(from_verdict(suite, "isotropy W V", isotropy_check(v.weight_filtration(), v.q, v.weight)));
    out.push_back(from_verdict(suite, "polarization V", polarization_check(v.mhs(), v.cone)));
  }
  return out;
}

std::vector<CheckResult> bracket(const FixtureFile& f) {
  const std::string suite = "bracket";
  const auto& v = f.fixture.v;
  const auto g = lie_deligne_split(lie_algebra(v.q), v.mhs());
  return {from_verdict(suite, "bracket", bracket_compatible(g)), from_verdict(suite, "cone", cone_contained(g, v.cone)),
          from_verdict(suite, "action", action_compatible(g, induce(v)))};
}

std::vector<CheckResult> monodromy(const FixtureFile& f, const SuiteOptions& opt) {
  const std::string suite = "monodromy";
  const auto s = orbit_spec(f);
  std::vector<CheckResult> out;
  const auto shifts = shift_list(s, opt);
  const auto exact = exact_samples(s, opt.exact_points, opt.seed);
  for (const auto& sh : shifts) {
    CheckResult r{suite, "monodromy exact " + shifts_str(sh), true, ""};
    for (std::size_t i = 0; i < exact.size() && r.pass; ++i) {
      if (auto v = monodromy_check(s, exact[i], sh); !v) r = {suite, r.claim, false, "point " + std::to_string(i) + ": " + v.detail};
    }
    out.push_back(std::move(r));
  }
  const auto floats = float_samples(s, opt.float_points, opt.seed);
  for (const auto& sh : shifts) {
    CheckResult r{suite, "monodromy float " + shifts_str(sh), true, ""};
    for (std::size_t i = 0; i < floats.size() && r.pass; ++i) {
      if (auto v = monodromy_check(s, floats[i], sh); !v) r = {suite, r.claim, false, "point " + std::to_string(i) + ": " + v.detail};
    }
    out.push_back(std::move(r));
  }
  return out;
}

CheckResult from_limit(const std::string& suite, const LimitReport& rep) {
  std::string detail = "deviation " + fmt(rep.max_deviation) + " at r = " +
                       fmt(rep.samples.empty() ? 0 : rep.samples.back().radius);
  if (!rep.monotone) detail += ", deviations increase over the last radii";
  if (!rep.clipped.empty()) detail += ", " + std::to_string(rep.clipped.size()) + " radii clipped";
  return {suite, rep.claim, rep.pass, detail};
}

std::vector<CheckResult> limits(const FixtureFile& f, const SuiteOptions& opt) {
  const std::string suite = "limits";
  const auto s = orbit_spec(f);
  auto cfg = ProbeConfig::defaults(s.k);
  cfg.tol = opt.tol;
  std::vector<CheckResult> out;
  for (IndexSet i = 1; i <= s.full; ++i) out.push_back(from_limit(suite, radial_limit(s, i, cfg)));
  for (unsigned d = 1; d <= 2; ++d) {
    for (const auto& a : multi_indices(s.k, d)) out.push_back(from_limit(suite, term_vanishing(s, a, cfg)));
  }
  auto stratum = exact_samples(s, opt.norm_points, opt.seed + 1);
  auto r = norm_relation(s, stratum);
  r.suite = suite;
  out.push_back(std::move(r));
  return out;
}

std::vector<CheckResult> lemma_m(const FixtureFile& f) {
  const auto s = orbit_spec(f);
  const auto r = verify_lemma_m(s);
  std::string detail = "n = " + std::to_string(s.data.h.weight) + ", m1 = " + std::to_string(r.m1) +
                       ", m = " + std::to_string(r.m);
  if (!r.bounds) detail += ", bounds fail";
  if (!r.einf_member) detail += ", e_inf not in W(N_1)_{2n-m1}";
  if (!r.einf_excluded) detail += ", e_inf in W(N_1)_{2n-m1-1}";
  return {{"lemma-m", "lemma-m", r.pass(), detail}};
}

std::vector<CheckResult> psh(const FixtureFile& f, const SuiteOptions& opt) {
  const auto s = orbit_spec(f);
  auto cfg = ProbeConfig::defaults(s.k);
  cfg.tol = opt.tol;
  std::mt19937 rng(opt.seed + 2);
  std::uniform_real_distribution<double> radius(0, 0.25);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  CheckResult r{"psh", "stratum-psh " + index_set_str(s.full), true, ""};
  double worst = 0;
  for (std::size_t i = 0; i < opt.psh_points; ++i) {
    auto base = default_base(s);
    for (std::size_t c = s.k; c < s.r; ++c) base[c] = std::polar(radius(rng), angle(rng));
    const auto rep = levi_probe(s, s.full, base, {}, cfg);
    worst = std::min(worst, rep.min_eigenvalue);
    if (!rep.psh && r.pass) {
      r.pass = false;
      r.detail = "point " + std::to_string(i) + ": min eigenvalue " + fmt(rep.min_eigenvalue);
    }
  }
  if (r.pass) r.detail = std::to_string(opt.psh_points) + " points, min eigenvalue " + fmt(worst);
  return {r};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"symmetries", "isotropy", "bracket", "monodromy",
                                                 "limits",     "lemma-m",  "psh"};
  return names;
}

std::optional<std::string> suite_unavailable(const FixtureFile& f, const std::string& suite) {
  const std::size_t k = f.fixture.v.cone.size();
  if (suite == "symmetries" || suite == "isotropy") return std::nullopt;
  if (suite == "bracket") {
    if (f.space != FixtureSpace::source) return "bracket needs a source fixture (g is built on V)";
    return std::nullopt;
  }
  if (suite == "monodromy" || suite == "limits") {
    if (k == 0) return suite + " needs a nonempty cone";
    return std::nullopt;
  }
  if (suite == "lemma-m") {
    if (k != 2) return "lemma-m needs exactly two cone generators";
    return std::nullopt;
  }
  if (suite == "psh") {
    if (k == 0 || f.fixture.extra == 0) return "psh needs a cone and at least one stratum coordinate";
    return std::nullopt;
  }
  return "unknown suite '" + suite + "'";
}

std::vector<CheckResult> run_suite(const FixtureFile& f, const std::string& suite, const SuiteOptions& opt) {
  if (auto why = suite_unavailable(f, suite)) throw Error(*why);
  if (suite == "symmetries") return symmetries(f);
  if (suite == "isotropy") return isotropy(f);
  if (suite == "bracket") return bracket(f);
  if (suite == "monodromy") return monodromy(f, opt);
  if (suite == "limits") return limits(f, opt);
  if (suite == "lemma-m") return lemma_m(f);
  return psh(f, opt);
}

std::vector<ExactPoint> exact_samples(const OrbitSpec& s, std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<ExactPoint> out;
  for (std::size_t i = 0; i < count; ++i) {
    ExactPoint p;
    for (std::size_t j = 0; j < s.r; ++j) p.t.emplace_back(small_rational(rng, 7), small_rational(rng, 9));
    for (std::size_t j = 0; j < s.k; ++j) p.ell.emplace_back(small_rational(rng, 4) * 3, small_rational(rng, 5));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<FloatPoint> float_samples(const OrbitSpec& s, std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> modulus(0.05, 0.5);
  std::uniform_real_distribution<double> small(0, 0.3);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  std::uniform_int_distribution<long> branch(-2, 2);
  std::vector<FloatPoint> out;
  for (std::size_t i = 0; i < count; ++i) {
    FloatPoint p;
    for (std::size_t j = 0; j < s.r; ++j) p.t.push_back(std::polar(j < s.k ? modulus(rng) : small(rng), angle(rng)));
    for (std::size_t j = 0; j < s.k; ++j) p.branch.push_back(branch(rng));
    out.push_back(std::move(p));
  }
  return out;
}

CheckResult norm_relation(const OrbitSpec& s, const std::vector<ExactPoint>& points) {
  CheckResult r{"", "norm-relation", true, ""};
  std::optional<Rational> ratio;
  try {
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Rational hj = h_j(s, points[i].t);
      if (hj <= 0) return {"", r.claim, false, "h_J = " + hj.get_str() + " at point " + std::to_string(i)};
      const Rational q = stratum_value(s, s.full, points[i]) / hj;
      if (ratio && q != *ratio) {
        return {"", r.claim, false, "ratio " + q.get_str() + " differs from " + ratio->get_str() + " at point " +
                                        std::to_string(i)};
      }
      ratio = q;
    }
  } catch (const Error& e) {
    return {"", r.claim, false, e.what()};
  }
  if (ratio) r.detail = "h_J > 0, stratum value / h_J = " + ratio->get_str() + " at " + std::to_string(points.size()) + " points";
  if (ratio && *ratio <= 0) {
    r.pass = false;
    r.detail = "non-positive ratio " + ratio->get_str();
  }
  return r;
}

MixedHodge h_structure(const FixtureFile& f) {
  if (f.space == FixtureSpace::induced) return f.fixture.v.mhs();
  return tate_normalize(induce(f.fixture.v)).mhs();
}

}  // namespace hodge
