#include <gtest/gtest.h>

#include "bjortho/dispatch.hpp"
#include "bjortho/l1_space.hpp"
#include "reference.hpp"

using namespace bjortho;
using namespace std::complex_literals;

TEST(SupportFunctionalL1, Examples) {
  const auto s = ref::unit(3);
  EXPECT_TRUE(is_support_functional_l1(s, {1.0, -1.0, 0.0}, {1.0, -1.0, 0.5}));
  EXPECT_FALSE(is_support_functional_l1(s, {1.0, -1.0, 0.0}, {1.0, 1.0, 0.0}));
  EXPECT_TRUE(is_support_functional_l1(ref::unit(2, Field::Complex), {1.0i, 0.0}, {-1.0i, 1.0}));
}

TEST(SupportFunctionalL1, RejectsLargeValueOnZeroSet) {
  EXPECT_FALSE(is_support_functional_l1(ref::unit(2), {1.0, 0.0}, {1.0, 1.5}));
}

TEST(SupportFunctionalL1, ZeroFunctionIsDomainError) {
  EXPECT_THROW(is_support_functional_l1(ref::unit(2), {0.0, 0.0}, {1.0, 1.0}), DomainError);
}

TEST(BjOrthogonalL1, Examples) {
  const auto s = ref::unit(2);
  EXPECT_TRUE(bj_orthogonal_l1(s, {1.0, 1.0}, {1.0, -1.0}).orthogonal);
  EXPECT_FALSE(bj_orthogonal_l1(s, {1.0, 0.0}, {2.0, 1.0}).orthogonal);
  EXPECT_TRUE(bj_orthogonal_l1(s, {1.0, 0.0}, {1.0, 1.0}).orthogonal);
}

TEST(BjOrthogonalL1, ExamplesAgainstLineScan) {
  const auto s = ref::unit(2);
  EXPECT_NEAR(ref::scan_min_real(s, {1.0, 1.0}, {1.0, -1.0}, 1.0), 2.0, 1e-12);
  // |1 + 2 lambda| + |lambda| bottoms out at lambda = -1/2
  EXPECT_NEAR(ref::scan_min_real(s, {1.0, 0.0}, {2.0, 1.0}, 1.0), 0.5, 1e-4);
  EXPECT_NEAR(ref::scan_min_real(s, {1.0, 0.0}, {1.0, 1.0}, 1.0), 1.0, 1e-12);
}

TEST(BjOrthogonalL1, Evidence) {
  const auto v = bj_orthogonal_l1(ref::weighted({2, 3}), {1.0, 0.0}, {2.0, -1.0});
  const auto& ev = std::get<L1Evidence>(v.evidence);
  EXPECT_EQ(ev.pairing, Scalar(4.0));
  EXPECT_DOUBLE_EQ(ev.zero_mass, 3.0);
  EXPECT_EQ(ev.zero_set, (std::vector<std::size_t>{1}));
  EXPECT_FALSE(v.orthogonal);
}

TEST(BjOrthogonalL1, ZeroConventions) {
  EXPECT_TRUE(bj_orthogonal_l1(ref::unit(2), {0.0, 0.0}, {3.0, 1.0}).orthogonal);
  EXPECT_TRUE(bj_orthogonal_l1(ref::unit(2), {3.0, 1.0}, {0.0, 0.0}).orthogonal);
}

TEST(ClassifyL1, Examples) {
  EXPECT_TRUE(classify_l1(ref::unit(2), {1.0, 1.0}).is_left_symmetric);
  EXPECT_TRUE(classify_l1(ref::weighted({2, 1}), {1.0, 2.0}).is_left_symmetric);
  const auto c = classify_l1(ref::unit(3), {1.0, 1.0, 0.0});
  EXPECT_FALSE(c.is_smooth);
  EXPECT_FALSE(c.is_left_symmetric);
  EXPECT_FALSE(c.is_right_symmetric);
}

TEST(ClassifyL1, Branches) {
  const auto one = classify_l1(ref::unit(1), {-3.0});
  EXPECT_TRUE(one.is_smooth && one.is_left_symmetric && one.is_right_symmetric);

  const auto single = classify_l1(ref::unit(3), {0.0, 2.0, 0.0});
  EXPECT_TRUE(single.is_right_symmetric);
  EXPECT_FALSE(single.is_left_symmetric);
  EXPECT_FALSE(single.is_smooth);

  const auto unequal = classify_l1(ref::unit(2), {1.0, 2.0});
  EXPECT_TRUE(unequal.is_smooth);
  EXPECT_FALSE(unequal.is_left_symmetric);
  EXPECT_FALSE(unequal.is_right_symmetric);

  const auto zero = classify_l1(ref::unit(2), {0.0, 0.0});
  EXPECT_TRUE(zero.evidence.zero_function && zero.is_left_symmetric && zero.is_right_symmetric);
}

TEST(L1Witness, LeftCaseOne) {
  const auto w = l1_asymmetry_witness(ref::unit(2), {1.0, 0.0}, {}, Side::Left);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->g, (FunctionVec{1.0, 1.0}));
  EXPECT_TRUE(w->confirmed());
}

TEST(L1Witness, LeftCaseTwo) {
  const auto w = l1_asymmetry_witness(ref::unit(2), {1.0, 2.0}, {}, Side::Left);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->g, (FunctionVec{2.0, -2.0}));
  EXPECT_TRUE(w->confirmed());
  // reverse pairing sgn(g) f = 1 - 2 with no zero atoms
  const auto rev = bj_orthogonal_l1(ref::unit(2), w->g, {1.0, 2.0});
  EXPECT_EQ(std::get<L1Evidence>(rev.evidence).pairing, Scalar(-1.0));
  EXPECT_FALSE(rev.orthogonal);
}

TEST(L1Witness, Right) {
  const auto w = l1_asymmetry_witness(ref::unit(2), {1.0, 2.0}, {}, Side::Right);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->g, (FunctionVec{1.0, 0.0}));
  EXPECT_TRUE(w->confirmed());
}

TEST(L1Witness, ComplexLeftCaseTwo) {
  const auto s = ref::weighted({1, 2, 0.5}, Field::Complex);
  const FunctionVec f{1.0i, -1.0, 2.0 + 1.0i};
  const auto w = l1_asymmetry_witness(s, f, {}, Side::Left);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->confirmed());
}

TEST(L1Witness, SymmetricSideIsLogicError) {
  EXPECT_THROW(l1_asymmetry_witness(ref::unit(2), {1.0, 1.0}, {}, Side::Left), std::logic_error);
  EXPECT_THROW(l1_asymmetry_witness(ref::unit(3), {0.0, 1.0, 0.0}, {}, Side::Right), std::logic_error);
}

TEST(L1ProofFunctionals, BothAcceptedAndDistinct) {
  const auto s = ref::weighted({1, 2, 3});
  const FunctionVec f{2.0, 0.0, -1.0};
  const auto [h0, h1] = l1_proof_functionals(s, f);
  EXPECT_TRUE(is_support_functional_l1(s, f, h0));
  EXPECT_TRUE(is_support_functional_l1(s, f, h1));
  EXPECT_NE(h0[1], h1[1]);
  for (const auto* h : {&h0, &h1}) {
    Scalar action;
    for (std::size_t i = 0; i < 3; ++i) action += s.weight(i) * (*h)[i] * f[i];
    EXPECT_NEAR(std::abs(action - norm(s, SpaceKind::l1(), f)), 0.0, 1e-12);
  }
}

TEST(L1Additivity, ZeroAtomBreaksAdditivity) {
  const auto s = ref::unit(3);
  const FunctionVec f{1.0, 1.0, 0.0};
  const auto w = l1_additivity_witness(s, f);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->confirmed());
  EXPECT_TRUE(bj_orthogonal_l1(s, f, w->g).orthogonal);
  EXPECT_TRUE(bj_orthogonal_l1(s, f, w->h).orthogonal);
  EXPECT_FALSE(bj_orthogonal_l1(s, f, w->g + w->h).orthogonal);
}

TEST(L1Additivity, SmoothIsLogicError) {
  EXPECT_THROW(l1_additivity_witness(ref::unit(2), {1.0, 1.0}), std::logic_error);
}

TEST(L1Property, MeasureScalingLeavesVerdictsUnchanged) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto inst = random_instance(seed, {1, 6, seed % 2 ? Field::Complex : Field::Real, 0.1, 10.0});
    const bool base = bj_orthogonal_l1(inst.space, inst.f, inst.g).orthogonal;
    for (double c : {1e-3, 0.5, 7.0, 1e3})
      EXPECT_EQ(bj_orthogonal_l1(rescaled(inst.space, c), inst.f, inst.g).orthogonal, base) << "seed " << seed;
  }
}
