#include <gtest/gtest.h>

#include "clifford/clifford.hpp"
#include "support.hpp"

namespace {

using namespace clifford;
using namespace clifford::testing;

using MV = Multivector<Rational>;
using GMV = Multivector<Gaussian>;

template <Scalar S>
Multivector<S> ordered_product(const std::vector<ChainFactor<S>>& factors, const typename Multivector<S>::signature_ptr& sig) {
  Multivector<S> p = Multivector<S>::scalar(scalar_traits<S>::one(), sig);
  for (const auto& f : factors) p = oracle_product(p, f.element);
  return p;
}

template <Scalar S>
std::size_t rank_of(const std::vector<Multivector<S>>& elems) {
  std::vector<typename Multivector<S>::term_map> vs;
  for (const auto& e : elems) vs.push_back(e.terms());
  return sparse_rank(vs);
}

TEST(ChainBuild, RationalExample) {
  auto sig = unit_signature<Rational>();
  auto ch = chain_build<Rational>({2, 6}, sig);
  EXPECT_EQ(ch.size(), 2u);
  EXPECT_EQ(ch.c(1), MV::blade(Blade{1, 2}, q(1), sig));
  EXPECT_EQ(ch.c(2), MV::blade(Blade::range(1, 6), q(1), sig));
  MV minus_one = MV::scalar(q(-1), sig);
  EXPECT_EQ(oracle_product(ch.c(1), ch.c(1)), minus_one);
  EXPECT_EQ(oracle_product(ch.c(2), ch.c(2)), minus_one);
  EXPECT_FALSE(ch.adjusted(1));
  EXPECT_FALSE(ch.adjusted(2));
  EXPECT_EQ(ch.block(2), Blade::range(3, 6));
  EXPECT_EQ(ch.factor_of(3), 2u);
  EXPECT_EQ(ch.factor_of(2), 1u);
}

TEST(ChainBuild, GaussianAdjustment) {
  auto sig = unit_signature<Gaussian>();
  GMV raw = GMV::blade(Blade{1, 2, 3, 4}, Gaussian(1), sig);
  EXPECT_EQ(oracle_product(raw, raw), GMV::scalar(Gaussian(1), sig));
  auto ch = chain_build<Gaussian>({2, 4}, sig);
  EXPECT_TRUE(ch.adjusted(2));
  EXPECT_FALSE(ch.adjusted(1));
  EXPECT_EQ(ch.c(2), raw * scalar_traits<Gaussian>::imaginary_unit());
  EXPECT_EQ(oracle_product(ch.c(2), ch.c(2)), GMV::scalar(Gaussian(-1), sig));
}

TEST(ChainBuild, SquareSignMatchesFormula) {
  // (v_1 ... v_n)^2 = (-1)^(n(n-1)/2), checked by the word oracle.
  auto sig = unit_signature<Rational>();
  for (std::size_t n = 1; n <= 12; ++n) {
    MV b = MV::blade(Blade::range(1, n), q(1), sig);
    Rational expected = (n * (n - 1) / 2) % 2 == 0 ? q(1) : q(-1);
    EXPECT_EQ(oracle_product(b, b), MV::scalar(expected, sig)) << n;
  }
}

TEST(ChainBuild, Errors) {
  auto sig = unit_signature<Rational>();
  auto code = [&](std::vector<std::size_t> cuts) {
    try {
      chain_build<Rational>(cuts, sig);
    } catch (const error& e) {
      return e.code();
    }
    return errc::precondition;
  };
  EXPECT_EQ(code({3, 6}), errc::invalid_chain);
  EXPECT_EQ(code({}), errc::invalid_chain);
  EXPECT_EQ(code({6, 2}), errc::invalid_chain);
  EXPECT_EQ(code({2, 2}), errc::invalid_chain);
  EXPECT_EQ(code({2, 4}), errc::domain_unsupported);
  auto scaled = std::make_shared<const Signature<Rational>>(q(1), std::map<std::size_t, Rational>{{5, q(2)}});
  try {
    chain_build<Rational>({2, 6}, scaled);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::unsupported_signature);
  }
  EXPECT_NO_THROW(chain_build<Gaussian>({4, 8}, unit_signature<Gaussian>()));
}

TEST(PhiApply, Examples) {
  auto sig = unit_signature<Rational>();
  auto ch = chain_build<Rational>({2, 6}, sig);
  MV v34 = MV::blade(Blade{3, 4}, q(1), sig);
  EXPECT_EQ(ch.phi_apply(2, v34), v34);
  MV img = ch.phi_apply(2, gen<Rational>(3, sig));
  EXPECT_EQ(img, oracle_product(ch.c(2), gen<Rational>(3, sig)));
  EXPECT_EQ(img, MV::blade(Blade{1, 2, 4, 5, 6}, q(-1), sig));
  EXPECT_EQ(ch.phi_apply(2, gen<Rational>(3, sig)) * ch.phi_apply(2, gen<Rational>(4, sig)), v34);
  EXPECT_EQ(ch.phi_apply(1, gen<Rational>(1, sig)), gen<Rational>(1, sig));
  try {
    ch.phi_apply(2, gen<Rational>(1, sig));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::out_of_range);
  }
}

TEST(PhiInverse, Examples) {
  auto sig = unit_signature<Rational>();
  auto ch = chain_build<Rational>({2, 6}, sig);
  MV v34 = MV::blade(Blade{3, 4}, q(1), sig);
  EXPECT_EQ(ch.phi_inverse(2, v34), v34);
  EXPECT_EQ(ch.phi_inverse(2, MV::blade(Blade{1, 2, 4, 5, 6}, q(-1), sig)), gen<Rational>(3, sig));
  try {
    ch.phi_inverse(2, gen<Rational>(1, sig));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::membership);
  }
  // v_1 is outside the span of the A_2 basis images.
  auto basis = ch.factor_basis(2);
  std::size_t r = rank_of(basis);
  basis.push_back(gen<Rational>(1, sig));
  EXPECT_EQ(rank_of(basis), r + 1);
}

TEST(PhiInverse, RoundTripAndMembershipAgreeWithSpan) {
  Random rnd(61);
  auto sig = unit_signature<Rational>();
  auto ch = chain_build<Rational>({2, 6, 10}, sig);
  for (std::size_t i = 1; i <= 3; ++i) {
    auto basis = ch.factor_basis(i);
    const std::size_t r = rank_of(basis);
    for (int t = 0; t < 20; ++t) {
      MV u(sig);
      for (int n = 0; n < 4; ++n) {
        std::vector<std::size_t> idx;
        for (std::size_t k = ch.block_lo(i); k <= ch.block_hi(i); ++k)
          if (rnd.coin()) idx.push_back(k);
        u.add(Blade(idx), rnd.rational());
      }
      MV a = ch.phi_apply(i, u);
      ASSERT_TRUE(ch.in_factor(i, a));
      ASSERT_EQ(ch.phi_inverse(i, a), u);
      MV b = rnd.multivector<Rational>(10, 3, sig);
      auto extended = basis;
      extended.push_back(b);
      ASSERT_EQ(ch.in_factor(i, b), rank_of(extended) == r) << i;
    }
  }
}

TEST(CommutatorCheck, Examples) {
  auto ch = chain_build<Rational>({2, 6}, unit_signature<Rational>());
  EXPECT_TRUE(ch.commutator_check(1, 2));
  EXPECT_TRUE(ch.commutator_check(2, 1));
  EXPECT_TRUE(chain_build<Gaussian>({2, 4}, unit_signature<Gaussian>()).commutator_check(1, 2));
  try {
    ch.commutator_check(1, 1);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::precondition);
  }
  EXPECT_THROW(ch.commutator_check(1, 3), error);
}

TEST(CommutatorCheck, FailsWithoutTheTwist) {
  // The raw block generators v_3.. do not commute with v_1; the c_i twist is
  // what makes the factors commute.
  auto sig = unit_signature<Rational>();
  EXPECT_FALSE((gen<Rational>(1, sig) * gen<Rational>(3, sig) - gen<Rational>(3, sig) * gen<Rational>(1, sig)).is_zero());
}

TEST(CommutatorCheck, FullSubalgebrasCommute) {
  auto ch = chain_build<Rational>({2, 6}, unit_signature<Rational>());
  for (const auto& a : ch.factor_basis(1))
    for (const auto& b : ch.factor_basis(2)) ASSERT_EQ(oracle_product(a, b), oracle_product(b, a));
}

TEST(PhiApply, HomomorphismAndInjectivity) {
  auto ch = chain_build<Rational>({2, 6, 10}, unit_signature<Rational>());
  for (std::size_t i = 1; i <= 3; ++i) {
    EXPECT_TRUE(ch.is_homomorphism(i)) << i;
    EXPECT_TRUE(ch.is_injective(i)) << i;
  }
  auto g = chain_build<Gaussian>({2, 4, 8}, unit_signature<Gaussian>());
  for (std::size_t i = 1; i <= 3; ++i) {
    EXPECT_TRUE(g.is_homomorphism(i)) << i;
    EXPECT_TRUE(g.is_injective(i)) << i;
  }
}

TEST(RewriteGenerator, Examples) {
  auto sig = unit_signature<Rational>();
  auto ch = chain_build<Rational>({2, 6}, sig);
  auto r1 = ch.rewrite_generator(1);
  ASSERT_EQ(r1.size(), 1u);
  EXPECT_EQ(r1[0].element, gen<Rational>(1, sig));
  for (std::size_t k : {3u, 6u}) {
    auto r = ch.rewrite_generator(k);
    EXPECT_EQ(ordered_product(r, sig), gen<Rational>(k, sig)) << k;
    for (const auto& f : r) EXPECT_TRUE(ch.in_factor(f.factor, f.element)) << k;
  }
  EXPECT_THROW(ch.rewrite_generator(7), error);
  EXPECT_THROW(ch.rewrite_generator(0), error);
}

TEST(RewriteGenerator, EveryGeneratorOfLongChains) {
  auto rsig = unit_signature<Rational>();
  auto ch = chain_build<Rational>({2, 6, 10, 14}, rsig);
  for (std::size_t k = 1; k <= 14; ++k) {
    auto r = ch.rewrite_generator(k);
    ASSERT_EQ(ordered_product(r, rsig), gen<Rational>(k, rsig)) << k;
    for (const auto& f : r) ASSERT_TRUE(ch.in_factor(f.factor, f.element));
  }
  auto gsig = unit_signature<Gaussian>();
  auto g = chain_build<Gaussian>({2, 4, 8, 10}, gsig);
  for (std::size_t k = 1; k <= 10; ++k) {
    auto r = g.rewrite_generator(k);
    ASSERT_EQ(ordered_product(r, gsig), gen<Gaussian>(k, gsig)) << k;
    for (const auto& f : r) ASSERT_TRUE(g.in_factor(f.factor, f.element));
  }
}

TEST(ProductSpan, FullRank) {
  EXPECT_EQ(chain_build<Rational>({2, 6}, unit_signature<Rational>()).product_span_rank(), 64u);
  EXPECT_EQ(chain_build<Gaussian>({2, 4}, unit_signature<Gaussian>()).product_span_rank(), 16u);
  EXPECT_EQ(chain_build<Gaussian>({2, 4, 8}, unit_signature<Gaussian>()).product_span_rank(), 256u);
}

}  // namespace
