#include <gtest/gtest.h>

#include <algorithm>

#include "clifford/clifford.hpp"
#include "support.hpp"

namespace {

using namespace clifford;
using namespace clifford::testing;

using MV = Multivector<Rational>;
using Ortho = OrthogonalMap<Rational>;

// Rational points on the unit circle from Pythagorean triples.
const std::vector<std::pair<Rational, Rational>> kCirclePoints = {
    {q(3, 5), q(4, 5)}, {q(5, 13), q(12, 13)}, {q(8, 17), q(15, 17)}, {q(-7, 25), q(24, 25)}, {q(20, 29), q(-21, 29)}};

Ortho random_orthogonal(Random& rnd, std::size_t n) {
  if (rnd.coin()) {
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k + 1;
    std::shuffle(perm.begin(), perm.end(), rnd.engine());
    std::map<std::size_t, std::pair<std::size_t, int>> images;
    for (std::size_t k = 1; k <= n; ++k) images[k] = {perm[k - 1], rnd.coin() ? 1 : -1};
    return Ortho::signed_permutation(images);
  }
  std::size_t i = rnd.index(1, n - 1);
  std::size_t j = rnd.index(i + 1, n);
  const auto& [c, s] = kCirclePoints[rnd.index(0, kCirclePoints.size() - 1)];
  return Ortho::plane_rotation(i, j, c, s);
}

TEST(OrthogonalMapTest, Examples) {
  auto sig = unit_signature<Rational>();
  Ortho rot = Ortho::signed_permutation({{1, {2, 1}}, {2, {1, -1}}});
  EXPECT_EQ(rot.image(1, sig), gen<Rational>(2, sig));
  EXPECT_EQ(rot.image(2, sig), -gen<Rational>(1, sig));
  MV v12 = MV::blade(Blade{1, 2}, q(1), sig);
  MV expected = oracle_product(gen<Rational>(2, sig), -gen<Rational>(1, sig));
  EXPECT_EQ(bogolyubov_apply(rot, v12), expected);
  EXPECT_EQ(bogolyubov_apply(rot, v12), v12);

  Random rnd(51);
  MV a = rnd.multivector<Rational>(6, 6, sig);
  EXPECT_EQ(bogolyubov_apply(Ortho::identity(), a), a);

  Ortho flip = Ortho::signed_permutation({{1, {1, -1}}});
  EXPECT_EQ(bogolyubov_apply(flip, gen<Rational>(1, sig)), -gen<Rational>(1, sig));
}

TEST(OrthogonalMapTest, RotationMatrixConvention) {
  auto sig = unit_signature<Rational>();
  Ortho r = Ortho::plane_rotation(1, 3, q(3, 5), q(4, 5));
  EXPECT_EQ(r.image(1, sig), q(3, 5) * gen<Rational>(1, sig) + q(4, 5) * gen<Rational>(3, sig));
  EXPECT_EQ(r.image(3, sig), q(-4, 5) * gen<Rational>(1, sig) + q(3, 5) * gen<Rational>(3, sig));
  EXPECT_EQ(r.image(2, sig), gen<Rational>(2, sig));
  EXPECT_EQ(r.entry(3, 1), q(4, 5));
  EXPECT_EQ(r.entry(2, 2), q(1));
  EXPECT_TRUE(r.preserves(*sig));
}

TEST(OrthogonalMapTest, NonOrthogonalIsRejected) {
  auto sig = unit_signature<Rational>();
  Ortho bad = Ortho::plane_rotation(1, 2, q(1), q(1));
  EXPECT_FALSE(bad.preserves(*sig));
  try {
    bogolyubov_apply(bad, gen<Rational>(1, sig));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_orthogonal);
  }
  // A swap is orthogonal only when it swaps equal signature values.
  auto mixed = std::make_shared<const Signature<Rational>>(q(1), std::map<std::size_t, Rational>{{2, q(3)}});
  Ortho swap = Ortho::signed_permutation({{1, {2, 1}}, {2, {1, 1}}});
  EXPECT_FALSE(swap.preserves(*mixed));
  EXPECT_TRUE(swap.preserves(*sig));
  EXPECT_THROW(Ortho({1, 2}, Matrix<Rational>::identity(3)), error);
}

TEST(BogolyubovApply, Multiplicative) {
  Random rnd(52);
  auto sig = unit_signature<Rational>();
  for (int t = 0; t < 100; ++t) {
    Ortho phi = random_orthogonal(rnd, 6);
    MV a = rnd.multivector<Rational>(6, 5, sig);
    MV b = rnd.multivector<Rational>(6, 5, sig);
    ASSERT_EQ(bogolyubov_apply(phi, a * b), bogolyubov_apply(phi, a) * bogolyubov_apply(phi, b));
    ASSERT_EQ(bogolyubov_apply(phi, MV::scalar(q(1), sig)), MV::scalar(q(1), sig));
  }
}

TEST(BogolyubovApply, Composition) {
  Random rnd(53);
  auto sig = unit_signature<Rational>();
  for (int t = 0; t < 100; ++t) {
    Ortho phi = random_orthogonal(rnd, 6);
    Ortho rho = random_orthogonal(rnd, 6);
    MV a = rnd.multivector<Rational>(6, 5, sig);
    ASSERT_EQ(bogolyubov_apply(compose(phi, rho), a), bogolyubov_apply(phi, bogolyubov_apply(rho, a)));
  }
}

TEST(BogolyubovApply, NormAndParityPreserved) {
  Random rnd(54);
  auto sig = unit_signature<Rational>();
  for (int t = 0; t < 100; ++t) {
    Ortho phi = random_orthogonal(rnd, 6);
    MV a = rnd.multivector<Rational>(6, 6, sig);
    MV img = bogolyubov_apply(phi, a);
    ASSERT_EQ(norm(img), norm(a));
    ASSERT_EQ(bogolyubov_apply(phi, even_part(a)), even_part(img));
  }
}

TEST(BogolyubovApply, DiagonalSignature) {
  Random rnd(55);
  auto sig = std::make_shared<const Signature<Rational>>(q(1), std::map<std::size_t, Rational>{{3, q(2)}, {4, q(2)}});
  Ortho r = Ortho::plane_rotation(3, 4, q(3, 5), q(4, 5));
  ASSERT_TRUE(r.preserves(*sig));
  for (int t = 0; t < 30; ++t) {
    MV a = rnd.multivector<Rational>(5, 5, sig);
    MV b = rnd.multivector<Rational>(5, 5, sig);
    ASSERT_EQ(bogolyubov_apply(r, a * b), bogolyubov_apply(r, a) * bogolyubov_apply(r, b));
    ASSERT_EQ(norm(bogolyubov_apply(r, a)), norm(a));
  }
}

TEST(BogolyubovApply, FloatRotation) {
  auto sig = unit_signature<double>();
  double c = 0.6, s = 0.8;
  auto r = OrthogonalMap<double>::plane_rotation(1, 2, c, s);
  auto a = Multivector<double>::generator(1, sig) + Multivector<double>::blade(Blade{1, 3}, 2.5, sig);
  auto b = Multivector<double>::scalar(1.5, sig) + Multivector<double>::generator(2, sig);
  EXPECT_EQ(bogolyubov_apply(r, a * b), bogolyubov_apply(r, a) * bogolyubov_apply(r, b));
  EXPECT_TRUE(scalar_equal(norm(bogolyubov_apply(r, a)), norm(a)));
}

TEST(Conjugation, Examples) {
  auto sig = unit_signature<Rational>();
  MV one = MV::scalar(q(1), sig);
  Random rnd(56);
  MV a = rnd.multivector<Rational>(5, 5, sig);
  EXPECT_EQ(conjugation_apply(one, one, a), a);
  MV v1 = gen<Rational>(1, sig);
  EXPECT_EQ(conjugation_apply(v1, v1, gen<Rational>(2, sig)), -gen<Rational>(2, sig));
  MV v12 = MV::blade(Blade{1, 2}, q(1), sig);
  EXPECT_EQ(conjugation_apply(v12, -v12, v1), -v1);
}

TEST(Conjugation, OrientationIsInverseFirst) {
  // With u = 1 + v_1 v_2 and u^{-1} = (1 - v_1 v_2)/2 the two orientations
  // differ on v_1; the library uses u^{-1} a u.
  auto sig = unit_signature<Rational>();
  MV one = MV::scalar(q(1), sig);
  MV v12 = MV::blade(Blade{1, 2}, q(1), sig);
  MV u = one + v12;
  MV u_inv = (one - v12) * q(1, 2);
  MV v1 = gen<Rational>(1, sig);
  EXPECT_EQ(conjugation_apply(u, u_inv, v1), oracle_product(oracle_product(u_inv, v1), u));
  EXPECT_NE(conjugation_apply(u, u_inv, v1), oracle_product(oracle_product(u, v1), u_inv));
}

TEST(Conjugation, BadInverseIsRejected) {
  auto sig = unit_signature<Rational>();
  MV v12 = MV::blade(Blade{1, 2}, q(1), sig);
  try {
    conjugation_apply(v12, v12, gen<Rational>(1, sig));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_inverse);
  }
}

TEST(Conjugation, IsAutomorphism) {
  Random rnd(57);
  auto sig = unit_signature<Rational>();
  MV one = MV::scalar(q(1), sig);
  for (int t = 0; t < 100; ++t) {
    // Units of the form a v_S with v_S^2 = +-1, and 1 + v_S for v_S^2 = -1.
    Blade s = rnd.blade(6);
    MV vs = MV::blade(s, q(1), sig);
    Rational sq = (vs * vs).coeff(Blade{});
    Rational c = rnd.rational();
    MV u = vs * c;
    MV u_inv = vs * (sq / c);
    if (sq == -1 && rnd.coin()) {
      u = one + vs;
      u_inv = (one - vs) * q(1, 2);
    }
    MV a = rnd.multivector<Rational>(6, 4, sig);
    MV b = rnd.multivector<Rational>(6, 4, sig);
    ASSERT_EQ(conjugation_apply(u, u_inv, a * b), conjugation_apply(u, u_inv, a) * conjugation_apply(u, u_inv, b));
    ASSERT_EQ(conjugation_apply(u, u_inv, one), one);
  }
}

}  // namespace
