#include <gtest/gtest.h>

#include "hodge/builders.hpp"
#include "hodge/lie.hpp"

namespace hodge {
namespace {

Mat standard_symplectic(std::size_t g) {
  Mat q(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    q(i, g + i) = 1;
    q(g + i, i) = -1;
  }
  return q;
}

TEST(LieAlgebra, ClassicalDimensions) {
  EXPECT_EQ(lie_algebra(standard_symplectic(1)).dim(), 3U);
  const auto sp6 = lie_algebra(standard_symplectic(3));
  EXPECT_EQ(sp6.dim(), 21U);
  EXPECT_TRUE(check_closed(sp6));
  for (std::size_t n : {2U, 3U, 5U}) {
    const auto so = lie_algebra(Mat::identity(n));
    EXPECT_EQ(so.dim(), n * (n - 1) / 2);
    EXPECT_TRUE(check_closed(so));
  }
  // Split signature form of weight-2 fixture type.
  const auto fx = weight_two_fixture(2, 2);
  EXPECT_EQ(lie_algebra(fx.mhs.q).dim(), 15U);
}

TEST(LieAlgebra, BasisPreservesForm) {
  const auto fx = weight_one_fixture(3, 2);
  const auto l = lie_algebra(fx.mhs.q);
  for (const auto& x : l.basis) EXPECT_TRUE((fx.mhs.q * x + x.transpose() * fx.mhs.q).is_zero());
}

TEST(LieAlgebra, RejectsDegenerateForm) {
  EXPECT_THROW(lie_algebra(Mat(2, 2)), Error);
}

TEST(LieSplit, WeightOneGenusThreeDiamonds) {
  for (std::size_t a = 0; a <= 3; ++a) {
    const std::size_t b = 3 - a;
    const auto fx = weight_one_fixture(3, static_cast<int>(a));
    const auto s = lie_deligne_split(lie_algebra(fx.mhs.q), fx.mhs);
    std::map<BiDegree, std::size_t> expected = {
        {{-1, 1}, b * (b + 1) / 2}, {{-1, 0}, a * b}, {{-1, -1}, a * (a + 1) / 2},
        {{0, 1}, a * b},            {{0, 0}, a * a + b * b}, {{0, -1}, a * b},
        {{1, 1}, a * (a + 1) / 2},  {{1, 0}, a * b},  {{1, -1}, b * (b + 1) / 2}};
    std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
    EXPECT_EQ(s.diamond(), HodgeDiamond(expected)) << "a = " << a;
    EXPECT_TRUE(hermitian_test(s)) << "a = " << a;
    EXPECT_TRUE(smoothness_test(s)) << "a = " << a;
    EXPECT_TRUE(bracket_compatible(s)) << "a = " << a;
    EXPECT_TRUE(cone_contained(s, fx.cone)) << "a = " << a;
  }
}

TEST(LieSplit, PureStructureLivesOnAntidiagonal) {
  const auto fx = weight_two_fixture(2, 0);
  const auto s = lie_deligne_split(lie_algebra(fx.mhs.q), fx.mhs);
  for (const auto& [b, piece] : s.pieces) EXPECT_EQ(b.p + b.q, 0) << to_string(b);
  EXPECT_EQ(s.diamond().total(), 15U);
}

TEST(LieSplit, SubalgebrasDecomposeG) {
  const auto fx = weight_two_fixture(4, 4);
  const auto l = lie_algebra(fx.mhs.q);
  const auto s = lie_deligne_split(l, fx.mhs);
  EXPECT_EQ(s.s_f.dim() + s.s_f_perp.dim(), l.dim());
  EXPECT_EQ(sum(s.s_f, s.s_f_perp), l.flat);
  EXPECT_TRUE(s.s_f.contains(s.span_where([](const BiDegree& b) { return b.p >= 0 && b.q <= 0; })));
  EXPECT_TRUE(s.s_w.contains(s.m_x));
  EXPECT_TRUE(s.s_inf.contains(s.m_x));
}

TEST(LieSplit, WeightTwoCriteria) {
  for (int kind = 0; kind < 6; ++kind) {
    const auto fx = weight_two_fixture(4, kind);
    const auto s = lie_deligne_split(lie_algebra(fx.mhs.q), fx.mhs);
    bool wide = false;
    for (const auto& [b, piece] : s.pieces) wide = wide || std::abs(b.p) == 2;
    EXPECT_TRUE(wide) << "kind " << kind;
    EXPECT_FALSE(hermitian_test(s)) << "kind " << kind;
    EXPECT_TRUE(bracket_compatible(s)) << "kind " << kind;
    EXPECT_TRUE(cone_contained(s, fx.cone)) << "kind " << kind;
  }
}

TEST(LieSplit, ActionOnInducedStructure) {
  for (const auto& fx : {weight_one_fixture(3, 1), weight_one_fixture(3, 2, true), weight_two_fixture(2, 1)}) {
    const auto s = lie_deligne_split(lie_algebra(fx.mhs.q), fx.mhs);
    const auto h = induce(PureHodgeData::from(fx));
    EXPECT_TRUE(action_compatible(s, h));
    EXPECT_TRUE(action_compatible(s, tate_normalize(h)));
  }
}

TEST(Centralizer, EmptyListGivesG) {
  const auto l = lie_algebra(standard_symplectic(2));
  EXPECT_EQ(centralizer(l, {}), l.flat);
}

TEST(Centralizer, RegularNilpotentInSl2) {
  const auto fx = elliptic_fixture();
  const auto l = lie_algebra(fx.mhs.q);
  const Mat n = fx.cone.interior();
  const auto z = centralizer(l, {n});
  EXPECT_EQ(z, Subspace::span({flatten(n)}, 4));
}

TEST(Centralizer, PreservesWeightFiltration) {
  for (const auto& fx : {weight_one_fixture(3, 2), weight_two_fixture(3, 2), weight_two_fixture(4, 3)}) {
    const auto l = lie_algebra(fx.mhs.q);
    const Mat n = fx.cone.interior();
    const auto z = centralizer(l, {n});
    EXPECT_GT(z.dim(), 0U);
    const auto w = weight_filtration(n, fx.mhs.weight);
    for (const auto& v : z.vectors()) {
      const Mat x = unflatten(v, fx.dim());
      EXPECT_TRUE(bracket(x, n).is_zero());
      for (int k = w.lowest(); k <= w.highest(); ++k) EXPECT_TRUE(w[k].contains(apply(x, w[k])));
    }
  }
}

}  // namespace
}  // namespace hodge
