#include "hodge/catalog.hpp"

#include "hodge/builders.hpp"
#include "hodge/lie.hpp"

namespace hodge {

OrbitData orbit_data(const Fixture& fx) { return lift_orbit_data(induce(fx.v), fx.extra, fx.zeta); }

std::vector<Mat> zeta_candidates(const PureHodgeData& v, IndexSet centralize, bool (*pred)(const BiDegree&)) {
  const auto l = lie_algebra(v.q);
  const auto split = lie_deligne_split(l, v.mhs());
  const Subspace target = split.span_where([pred](const BiDegree& b) { return b.p < 0 && pred(b); });
  std::vector<Mat> ns;
  for (std::size_t j = 0; j < v.cone.size(); ++j) {
    if ((centralize >> j) & 1U) ns.push_back(v.cone.generators[j]);
  }
  std::vector<Mat> out;
  for (const auto& vec : intersect(target, centralizer(l, ns)).vectors()) out.push_back(unflatten(vec, v.dim()));
  return out;
}

namespace {

Mat combination(const std::vector<Mat>& xs, const Rational& scale, int variant) {
  Mat out(xs.front().rows(), xs.front().cols());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const long sign = ((i + static_cast<std::size_t>(variant)) % 2 == 0) ? 1 : -1;
    out += GaussScalar(scale * Rational(sign, static_cast<long>(i) + 2 + variant)) * xs[i];
  }
  return out;
}

bool any_degree(const BiDegree&) { return true; }
bool below_w0(const BiDegree& b) { return b.p + b.q <= -1; }
bool on_w0(const BiDegree& b) { return b.p + b.q == 0; }

std::vector<unsigned> exps_for(std::size_t r, std::size_t var) {
  std::vector<unsigned> e(r, 0);
  if (var < r) e[var] = 1;
  return e;
}

}  // namespace

void populate_zeta(Fixture& fx, const Rational& scale) {
  fx.zeta.clear();
  const std::size_t k = fx.v.cone.size();
  if (k == 0) return;
  const std::size_t r = k + fx.extra;
  const IndexSet full = (1U << k) - 1U;
  for (IndexSet set = 0; set <= full; ++set) {
    MatPoly poly;
    if (set == full) {
      if (auto c = zeta_candidates(fx.v, set, below_w0); !c.empty()) {
        poly.terms.push_back({std::vector<unsigned>(r, 0), combination(c, scale, 0)});
      }
      for (std::size_t a = 0; a < fx.extra; ++a) {
        auto c = zeta_candidates(fx.v, set, a == 0 ? on_w0 : below_w0);
        if (c.empty()) c = zeta_candidates(fx.v, set, any_degree);
        if (c.empty()) continue;
        poly.terms.push_back({exps_for(r, k + a), combination(c, scale, static_cast<int>(a) + 1)});
      }
    } else if (auto c = zeta_candidates(fx.v, set, any_degree); !c.empty()) {
      poly.terms.push_back({std::vector<unsigned>(r, 0), combination(c, scale, static_cast<int>(set) + 3)});
    }
    if (!poly.terms.empty()) fx.zeta.emplace(set, std::move(poly));
  }
}

std::vector<std::string> catalog_names() {
  return {"elliptic", "g3-a0", "g3-a1",     "g3-a2",     "g3-a3",    "g3-a2-two", "elliptic-squared",
          "hd2-0",    "hd2-1", "hd2-2",     "hd2-5",     "hd2-3-h4", "hd2-4-h4",  "hd2-5-two"};
}

Fixture catalog_fixture(const std::string& name) {
  Fixture fx;
  fx.name = name;
  SplitLmhs v;
  if (name == "elliptic") {
    v = elliptic_fixture();
    fx.extra = 1;
    fx.description = "elliptic curve degeneration, weight 1, dim 2";
  } else if (name.rfind("g3-a", 0) == 0) {
    const int a = name[4] - '0';
    const bool two = name == "g3-a2-two";
    if (a < 0 || a > 3 || (name.size() != 5 && !two)) throw Error("unknown fixture: " + name);
    v = weight_one_fixture(3, a, two);
    fx.extra = two ? 1 : 2;
    fx.description = "weight 1, genus 3, rank " + std::to_string(a) + " degeneration" +
                     (two ? " with one generator per elliptic block" : "");
  } else if (name == "elliptic-squared") {
    v = tensor(elliptic_fixture(), elliptic_fixture());
    fx.extra = 1;
    fx.description = "tensor square of the elliptic degeneration, weight 2, dim 4, two generators";
  } else if (name == "hd2-5-two") {
    v = build_split_lmhs(2, {{2, 2, 0}, {2, 2, 1}});
    fx.extra = 1;
    fx.description = "weight 2, h = (2,2,2), two length-2 strings with separate generators";
  } else if (name.rfind("hd2-", 0) == 0 && name.size() >= 5) {
    const int kind = name[4] - '0';
    const int h = name.size() == 5 ? 2 : (name.substr(5) == "-h4" ? 4 : -1);
    if (kind < 0 || kind > 5 || h < 0) throw Error("unknown fixture: " + name);
    v = weight_two_fixture(h, kind);
    fx.extra = 2;
    fx.description = "weight 2, h = (2," + std::to_string(h) + ",2), degeneration kind " + std::to_string(kind);
  } else {
    throw Error("unknown fixture: " + name);
  }
  fx.v = PureHodgeData::from(v);
  if (fx.v.cone.empty()) fx.extra = 0;
  populate_zeta(fx, Rational(1, 5));
  return fx;
}

}  // namespace hodge
