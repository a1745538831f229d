#include <gtest/gtest.h>

#include <cmath>

#include "hodge/builders.hpp"
#include "hodge/catalog.hpp"
#include "hodge/probe.hpp"

namespace hodge {
namespace {

const std::vector<std::string> kFixtures = {"elliptic", "g3-a1", "g3-a2-two", "elliptic-squared", "hd2-1", "hd2-5-two"};

OrbitSpec spec_for(const std::string& name) { return make_orbit_spec(orbit_data(catalog_fixture(name))); }

OrbitSpec without_zeta(const std::string& name) {
  auto data = orbit_data(catalog_fixture(name));
  data.zeta.clear();
  return make_orbit_spec(data);
}

TEST(ProbeConfig, DefaultsAndValidation) {
  const auto cfg = ProbeConfig::defaults(2);
  EXPECT_TRUE(cfg.validate());
  EXPECT_EQ(cfg.radii.front(), 1e-2);
  EXPECT_EQ(cfg.radii.back(), 1e-8);
  EXPECT_EQ(cfg.angles.size(), 8U);
  EXPECT_EQ(ProbeConfig::defaults(2).angles, cfg.angles);
  auto bad = cfg;
  bad.radii = {1e-3, 1e-2};
  EXPECT_FALSE(bad.validate());
  bad = cfg;
  bad.tol = 0;
  EXPECT_FALSE(bad.validate());
}

TEST(Probe, MultiIndices) {
  EXPECT_EQ(multi_indices(2, 1), (std::vector<std::vector<unsigned>>{{1, 0}, {0, 1}}));
  EXPECT_EQ(multi_indices(2, 2).size(), 3U);
  EXPECT_EQ(multi_indices(3, 2).size(), 6U);
  EXPECT_EQ(multi_indices(1, 2), (std::vector<std::vector<unsigned>>{{2}}));
}

TEST(Probe, SubspaceGap) {
  CMat a(3, 1);
  a << 1, 0, 0;
  CMat b(3, 1);
  b << 1, 1e-3, 0;
  EXPECT_NEAR(subspace_gap(a, b), 1e-3, 1e-9);
  EXPECT_NEAR(subspace_gap(a, 2.0 * a), 0, 1e-15);
  CMat c(3, 2);
  c << 1, 0, 0, 1, 0, 0;
  EXPECT_EQ(subspace_gap(a, c), 1);
}

TEST(RadialLimit, ConstantOrbitIsConstant) {
  const auto v = elliptic_fixture();
  const auto s = make_orbit_spec(OrbitData{v.mhs, v.cone, 0, {}});
  const auto rep = radial_limit(s, 1, ProbeConfig::defaults(1));
  EXPECT_TRUE(rep.pass);
  for (const auto& smp : rep.samples) EXPECT_NEAR(smp.value.real(), 1, 1e-15);
  EXPECT_NEAR(rep.max_deviation, 0, 1e-15);
}

TEST(RadialLimit, ConvergesOnEveryStratum) {
  for (const auto& name : kFixtures) {
    const auto s = spec_for(name);
    const auto cfg = ProbeConfig::defaults(s.k);
    for (IndexSet i = 1; i <= s.full; ++i) {
      SCOPED_TRACE(name + " " + index_set_str(i));
      const auto rep = radial_limit(s, i, cfg);
      EXPECT_TRUE(rep.pass) << "deviation " << rep.max_deviation;
      EXPECT_TRUE(rep.clipped.empty());
      // The limit does not depend on the angle of approach.
      EXPECT_LT(std::abs(rep.extrapolated - rep.target), cfg.tol);
    }
  }
}

TEST(RadialLimit, RejectsIndicesOutsideJ) {
  const auto s = spec_for("elliptic");
  EXPECT_THROW(radial_limit(s, 2, ProbeConfig::defaults(1)), Error);
}

TEST(TermVanishing, IdentityZetaGivesExactZero) {
  const auto s = without_zeta("elliptic-squared");
  for (const auto& a : multi_indices(2, 1)) {
    const auto rep = term_vanishing(s, a, ProbeConfig::defaults(2));
    EXPECT_TRUE(rep.pass);
    for (const auto& smp : rep.samples) EXPECT_EQ(smp.value, Complex(0));
  }
}

TEST(TermVanishing, GenericDataDecays) {
  for (const auto& name : kFixtures) {
    const auto s = spec_for(name);
    const auto cfg = ProbeConfig::defaults(s.k);
    for (unsigned d = 1; d <= 2; ++d) {
      for (const auto& a : multi_indices(s.k, d)) {
        const auto rep = term_vanishing(s, a, cfg);
        EXPECT_TRUE(rep.pass) << name << " " << rep.claim << " deviation " << rep.max_deviation;
      }
    }
  }
}

TEST(TermVanishing, ZeroIndexIsTheControl) {
  const auto s = spec_for("g3-a2-two");
  const auto rep = term_vanishing(s, {0, 0}, ProbeConfig::defaults(2));
  EXPECT_GT(std::abs(rep.target), 0.1);
  EXPECT_TRUE(rep.pass);
}

TEST(LeviProbe, ConstantStratumHasZeroForm) {
  const auto s = without_zeta("g3-a1");
  const auto rep = levi_probe(s, s.full, default_base(s), {}, ProbeConfig::defaults(1));
  ASSERT_EQ(rep.eigenvalues.size(), 2U);
  for (const double e : rep.eigenvalues) EXPECT_NEAR(e, 0, 1e-8);
  EXPECT_TRUE(rep.psh);
  EXPECT_EQ(rep.clipped_normal, 1U);
}

TEST(LeviProbe, HermitianFixtureIsPsh) {
  for (const auto& name : {"g3-a1", "g3-a2", "g3-a2-two"}) {
    const auto s = spec_for(name);
    const auto rep = levi_probe(s, s.full, default_base(s), {}, ProbeConfig::defaults(1));
    EXPECT_TRUE(rep.psh) << name << " min eigenvalue " << rep.min_eigenvalue;
  }
}

TEST(LeviProbe, FibreDirectionIsDegenerate) {
  // The second stratum coordinate of g3-a1 only enters through W_{-1}(g), i.e. along a fibre.
  const auto s = spec_for("g3-a1");
  const auto rep = levi_probe(s, s.full, default_base(s), {{1, 0}, {0, 1}}, ProbeConfig::defaults(1));
  ASSERT_EQ(rep.direction_values.size(), 2U);
  EXPECT_GT(rep.direction_values[0], 1e-3);
  EXPECT_NEAR(rep.direction_values[1], 0, 1e-4);
}

TEST(LeviProbe, RejectsBadDirections) {
  const auto s = spec_for("g3-a1");
  EXPECT_THROW(levi_probe(s, s.full, default_base(s), {{1, 0, 0}}, ProbeConfig::defaults(1)), Error);
}

TEST(FInfinityProbe, PureCaseIsExact) {
  const auto v = weight_one_fixture(2, 0);
  const auto rep = f_infinity_probe(v.mhs, Mat(v.dim(), v.dim()), {10, 100});
  for (const double d : rep.distance) EXPECT_NEAR(d, 0, 1e-12);
  EXPECT_TRUE(rep.pass);
}

TEST(FInfinityProbe, EllipticDecaysLikeOneOverY) {
  const auto v = elliptic_fixture();
  const auto rep = f_infinity_probe(v.mhs, v.cone.interior(), {10, 100, 1000, 10000});
  ASSERT_EQ(rep.distance.size(), 4U);
  for (std::size_t i = 1; i < 4; ++i) {
    const double ratio = rep.distance[i - 1] / rep.distance[i];
    EXPECT_GT(ratio, 8);
    EXPECT_LT(ratio, 12);
  }
  EXPECT_TRUE(rep.pass) << rep.extrapolated_distance;
}

TEST(FInfinityProbe, IndependentOfInteriorPoint) {
  for (const auto& name : {"elliptic-squared", "g3-a2-two"}) {
    const auto fx = catalog_fixture(name);
    const auto& cone = fx.v.cone;
    const Mat n1 = cone.interior();
    const Mat n2 = cone.combination({GaussScalar(3), GaussScalar(Rational(1, 2))});
    const auto a = f_infinity_probe(fx.v.mhs(), n1, {10, 100, 1000, 10000});
    const auto b = f_infinity_probe(fx.v.mhs(), n2, {10, 100, 1000, 10000});
    EXPECT_TRUE(a.pass) << name << " " << a.extrapolated_distance;
    EXPECT_TRUE(b.pass) << name << " " << b.extrapolated_distance;
  }
}

}  // namespace
}  // namespace hodge
