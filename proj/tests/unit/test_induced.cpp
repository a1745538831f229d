#include <gtest/gtest.h>

#include <random>

#include "hodge/adapted_basis.hpp"
#include "hodge/builders.hpp"
#include "hodge/induced.hpp"
#include "test_support.hpp"

namespace hodge {
namespace {

// Combinatorial oracle: the types of a tensor product of exterior powers are the sums over
// all choices of k-subsets of the V types, one subset per factor.
void subset_sums(const std::vector<BiDegree>& types, std::size_t k, std::size_t first, BiDegree acc,
                 std::vector<BiDegree>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = first; i + k <= types.size(); ++i) {
    subset_sums(types, k - 1, i + 1, {acc.p + types[i].p, acc.q + types[i].q}, out);
  }
}

HodgeDiamond exterior_oracle(const std::vector<BiDegree>& vtypes, const std::vector<std::size_t>& degrees) {
  std::vector<BiDegree> acc = {{0, 0}};
  for (auto k : degrees) {
    std::vector<BiDegree> sums;
    subset_sums(vtypes, k, 0, {0, 0}, sums);
    std::vector<BiDegree> next;
    for (const auto& a : acc) {
      for (const auto& b : sums) next.push_back({a.p + b.p, a.q + b.q});
    }
    acc = std::move(next);
  }
  std::map<BiDegree, std::size_t> dims;
  for (const auto& b : acc) ++dims[b];
  return HodgeDiamond(dims);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

struct Prepared {
  InducedStructure h;
  AdaptedFrame frame;
  Markers markers;
};

Prepared prepare(const SplitLmhs& v) {
  auto h = tate_normalize(induce(PureHodgeData::from(v)));
  auto frame = adapted_basis(h.split, h.q, h.weight);
  auto mk = locate_markers(h, frame);
  return {std::move(h), std::move(frame), mk};
}

TEST(ExteriorLayout, SizesAreProductsOfBinomials) {
  const ExteriorLayout layout(6, {3, 2});
  EXPECT_EQ(layout.size(), binomial(6, 3) * binomial(6, 2));
  EXPECT_EQ(layout.monomial(0, 0), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(layout.split_index(16), (std::vector<std::size_t>{1, 1}));
  EXPECT_THROW(ExteriorLayout(2, {3}), Error);
}

TEST(ExteriorLayout, LiftIsMultiplicative) {
  std::mt19937 rng(11);
  const ExteriorLayout layout(4, {2, 1});
  for (int trial = 0; trial < 4; ++trial) {
    const Mat a = testing::random_matrix(rng, 4, 4);
    const Mat b = testing::random_matrix(rng, 4, 4);
    EXPECT_EQ(layout.lift_group(a * b), layout.lift_group(a) * layout.lift_group(b));
    EXPECT_EQ(layout.lift_derivation(bracket(a, b)), bracket(layout.lift_derivation(a), layout.lift_derivation(b)));
  }
}

TEST(ExteriorLayout, DerivationExponentiatesToGroupLift) {
  std::mt19937 rng(5);
  const ExteriorLayout layout(5, {2, 3});
  Mat x = testing::random_matrix(rng, 5, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j <= i; ++j) x(i, j) = 0;
  }
  EXPECT_EQ(layout.lift_group(exp_nilpotent(x)), exp_nilpotent(layout.lift_derivation(x)));
}

TEST(ExteriorLayout, DeterminantOnTopPower) {
  std::mt19937 rng(2);
  const Mat g = testing::random_matrix(rng, 4, 4);
  const ExteriorLayout layout(4, {4});
  EXPECT_EQ(layout.lift_group(g), Mat::from_rows({Vec{det(g)}}, 1));
}

TEST(Induce, EllipticMarkers) {
  const auto p = prepare(elliptic_fixture());
  EXPECT_EQ(p.h.weight, 1);
  EXPECT_EQ(p.markers.m, 2);
  EXPECT_EQ(p.markers.e0, 0U);
  EXPECT_EQ(p.markers.einf, 1U);
  EXPECT_EQ(p.markers.ed, 1U);
  EXPECT_EQ(p.markers.lambda, GaussScalar(1));
  EXPECT_TRUE(check_markers(p.h.mhs(), p.frame, p.markers));
}

TEST(Induce, WeightOneGenusThreeDiamonds) {
  const std::vector<HodgeDiamond> expected = {
      HodgeDiamond({{{0, 3}, 1}, {{1, 2}, 9}, {{2, 1}, 9}, {{3, 0}, 1}}),
      HodgeDiamond({{{0, 2}, 1}, {{1, 3}, 1}, {{1, 2}, 4}, {{1, 1}, 4}, {{2, 2}, 4}, {{2, 1}, 4}, {{2, 0}, 1},
                    {{3, 1}, 1}}),
      HodgeDiamond({{{0, 1}, 1}, {{1, 2}, 4}, {{1, 1}, 4}, {{1, 0}, 1}, {{2, 3}, 1}, {{2, 2}, 4}, {{2, 1}, 4},
                    {{3, 2}, 1}}),
      HodgeDiamond({{{3, 3}, 1}, {{2, 2}, 9}, {{1, 1}, 9}, {{0, 0}, 1}})};
  for (int a = 0; a <= 3; ++a) {
    const auto v = weight_one_fixture(3, a);
    const auto p = prepare(v);
    EXPECT_EQ(p.h.dim(), 20U);
    EXPECT_EQ(p.h.weight, 3);
    EXPECT_EQ(p.h.diamond(), exterior_oracle(p.h.v_types, {3})) << "a = " << a;
    EXPECT_EQ(p.h.diamond(), expected[static_cast<std::size_t>(a)]) << "a = " << a;
    EXPECT_EQ(p.markers.m, 3 + a);
    EXPECT_TRUE(check_markers(p.h.mhs(), p.frame, p.markers));
    EXPECT_TRUE(check_adapted(p.frame, p.h.f, p.h.w, p.h.q, p.h.weight));
  }
}

TEST(Induce, FormulaSplitMatchesFunctorialPieces) {
  for (int a = 0; a <= 3; ++a) {
    const auto h = induce(PureHodgeData::from(weight_one_fixture(3, a, true)));
    EXPECT_EQ(deligne_split(h.w, h.f).pieces(), h.split.pieces());
    EXPECT_TRUE(validate_splitting(h.split, h.w, h.f));
    EXPECT_TRUE(check_symmetries(h.diamond(), h.weight));
  }
}

TEST(Induce, FormHasParityOfWeight) {
  const auto h = induce(PureHodgeData::from(weight_two_fixture(3, 4)));
  EXPECT_EQ(h.weight, 4);
  EXPECT_EQ(h.q.transpose(), h.q);
  const auto h3 = induce(PureHodgeData::from(weight_one_fixture(3, 1)));
  EXPECT_EQ(h3.q.transpose(), -h3.q);
  EXPECT_TRUE(first_riemann_relation(h3.mhs()));
  EXPECT_TRUE(isotropy_check(h3.w, h3.q, h3.weight));
}

TEST(Induce, WeightTwoKinds) {
  const int h = 4;
  // Bidegrees of the induced pieces (Tate-normalized), paired with the marker level m.
  const std::vector<std::pair<std::map<BiDegree, std::size_t>, int>> expected = {
      {{{{0, 4}, 1}, {{1, 3}, 2 * h}, {{3, 1}, 2 * h}, {{4, 0}, 1}}, 4},
      {{{{0, 3}, 1}, {{1, 4}, 1}, {{1, 2}, h - 1}, {{1, 1}, 1}, {{3, 3}, 1}, {{3, 0}, 1}, {{4, 1}, 1}}, 5},
      {{{{4, 2}, 1}, {{2, 4}, 1}, {{3, 3}, h}, {{3, 1}, h}, {{1, 3}, h}, {{1, 1}, h}, {{2, 0}, 1}, {{0, 2}, 1}}, 6},
      {{{{4, 2}, 1}, {{2, 4}, 1}, {{3, 3}, 4}, {{3, 1}, 4}, {{1, 3}, 4}, {{1, 1}, 4}, {{2, 0}, 1}, {{0, 2}, 1}}, 6},
      {{{{4, 3}, 1}, {{3, 4}, 1}, {{1, 3}, 1}, {{1, 2}, h - 1}, {{1, 0}, 1}, {{0, 1}, 1}}, 7},
      {{{{0, 0}, 1}, {{1, 1}, 2 * h}, {{3, 3}, 2 * h}, {{4, 4}, 1}}, 8}};
  for (int kind = 0; kind < 6; ++kind) {
    const auto v = weight_two_fixture(h, kind);
    const auto p = prepare(v);
    EXPECT_EQ(p.h.dim(), binomial(static_cast<std::size_t>(h) + 4, 2));
    EXPECT_EQ(p.h.diamond(), exterior_oracle(p.h.v_types, {2})) << "kind " << kind;
    const auto& [entries, m] = expected[static_cast<std::size_t>(kind)];
    for (const auto& [b, d] : entries) {
      EXPECT_EQ(p.h.diamond().at(b.p, b.q), d) << "kind " << kind << " at " << to_string(b);
    }
    EXPECT_EQ(p.markers.m, m) << "kind " << kind;
    EXPECT_EQ(p.frame.slots[p.markers.einf], (BiDegree{8 - m, 0})) << "kind " << kind;
    EXPECT_EQ(p.frame.slots[p.markers.ed], (BiDegree{0, 8 - m})) << "kind " << kind;
    EXPECT_TRUE(check_markers(p.h.mhs(), p.frame, p.markers));
  }
}

TEST(Induce, WeightTwoSmallPicardNumberRejectsLargeKinds) {
  EXPECT_THROW(weight_two_fixture(2, 3), Error);
  EXPECT_THROW(weight_two_fixture(2, 4), Error);
  for (int kind : {0, 1, 2, 5}) EXPECT_NO_THROW(prepare(weight_two_fixture(2, kind)));
}

TEST(Induce, WeightThreeTateTwist) {
  const auto odd = induce(PureHodgeData::from(build_split_lmhs(3, {{3, 0, 0}, {2, 1, 0}})));
  EXPECT_EQ(odd.weight, 9);
  EXPECT_EQ(odd.dim(), 4U * 6U);
  const auto odd_n = tate_normalize(odd);
  EXPECT_EQ(odd_n.twist, 1);
  EXPECT_EQ(odd_n.weight, 7);
  EXPECT_EQ(odd_n.f.highest(), 7);
  EXPECT_EQ(odd_n.f[7].dim(), 1U);
  EXPECT_EQ(odd_n.diamond(), odd.diamond().shifted(-1, -1));

  const auto even = induce(PureHodgeData::from(build_split_lmhs(3, {{3, 0, 0}, {3, 0, 0}})));
  EXPECT_EQ(even.weight, 12);
  EXPECT_EQ(tate_normalize(even).twist, 0);
}

TEST(Induce, RejectsNonEffectiveOrInconsistentData) {
  auto v = PureHodgeData::from(elliptic_fixture());
  auto shifted = v;
  shifted.f = v.f.shifted(1);
  EXPECT_THROW(induce(shifted), Error);
  auto bad_w = v;
  bad_w.w = IncreasingFiltration::pure(2, 1);
  EXPECT_THROW(induce(bad_w), Error);
  auto bad_q = v;
  bad_q.q = Mat::identity(2);
  EXPECT_THROW(induce(bad_q), Error);
}

TEST(AdaptedBasis, PairingAndInitialSegments) {
  for (const auto& v : {weight_two_fixture(3, 2), weight_two_fixture(3, 0), weight_one_fixture(2, 1)}) {
    const auto frame = adapted_basis(v.mhs.f, v.mhs.w, v.mhs.q, v.mhs.weight);
    EXPECT_TRUE(check_adapted(frame, v.mhs.f, v.mhs.w, v.mhs.q, v.mhs.weight));
  }
}

TEST(AdaptedBasis, CheckerRejectsPermutedFrame) {
  const auto v = weight_one_fixture(2, 1);
  auto frame = adapted_basis(v.mhs.f, v.mhs.w, v.mhs.q, v.mhs.weight);
  auto cols = frame.basis.column_list();
  std::swap(cols.front(), cols.back());
  frame.basis = Mat::from_columns(cols, v.dim());
  EXPECT_FALSE(check_adapted(frame, v.mhs.f, v.mhs.w, v.mhs.q, v.mhs.weight));
}

}  // namespace
}  // namespace hodge
