#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taftyd/coeffs.hpp"

using namespace taftyd;

TEST_CASE("q-binomial basics") {
  Cyclo q = Cyclo::root_power(5, 1);
  CHECK(qbinom(2, 1, q) == Cyclo::one(5) + q);
  for (int k = 0; k <= 6; ++k) {
    CHECK(qbinom(k, 0, q).is_one());
    CHECK(qbinom(k, k, q).is_one());
  }
  CHECK(qbinom(3, -1, q).is_zero());
  CHECK(qbinom(3, 4, q).is_zero());
  // At q = -1: binom(2,1) = 1 + q vanishes, binom(4,2) = (1+q^2)(1+q+q^2) = 2.
  Cyclo m1 = Cyclo::root_power(2, 1);
  CHECK(qbinom(2, 1, m1).is_zero());
  CHECK(qbinom(4, 2, m1) == Cyclo::from_int(2, 2));
}

TEST_CASE("q-binomial matches the quantum binomial theorem") {
  // In H(5,1) with A = g, B = x we have BA = xi AB, so
  // (A+B)^m = sum_p binom(m,p)_xi A^{m-p} B^p.
  TaftParams p(5, 1);
  HopfElt sum = HopfElt::gen_g(p) + HopfElt::gen_x(p);
  HopfElt power = HopfElt::unit(p);
  for (int m = 1; m <= 5; ++m) {
    power = power * sum;
    HopfElt expect(p);
    for (int k = 0; k <= m; ++k)
      expect = expect + HopfElt::monomial(p, m - k, k).scaled(qbinom(m, k, p.xi()));
    CHECK(power == expect);
  }
}

TEST_CASE("canonical representative in 1..N") {
  CHECK(phi(0, 4) == 4);
  CHECK(phi(-3, 4) == 1);
  CHECK(phi(5, 4) == 1);
  CHECK(phi(4, 4) == 4);
  for (int N : {1, 3, 7})
    for (int i = -10; i <= 10; ++i) {
      int r = phi(i, N);
      CHECK(r >= 1);
      CHECK(r <= N);
      CHECK((r - i) % N == 0);
    }
}

TEST_CASE("R coefficients on the worked example") {
  TaftParams p(4, 1);
  CoeffContext ctx = CoeffContext::t_multiple(p, 1, 0);
  CHECK(coeff_R(ctx, 1, 1) == Cyclo::one(4));
  CHECK(coeff_R(ctx, 1, 0) == Cyclo::one(4) - Cyclo::root_power(4, 3));
  CHECK(coeff_R(ctx, 2, 0).is_zero());
  CHECK_THROWS_AS(coeff_R(ctx, 1, 2), std::out_of_range);
}

TEST_CASE("R variants agree on t-multiple contexts") {
  for (int n = 2; n <= 6; ++n)
    for (int t = 0; t < n; ++t) {
      TaftParams p(n, t);
      for (int i1 = 0; i1 < p.N(); ++i1)
        for (int j = 0; j < p.N(); ++j) {
          CoeffContext ctx = CoeffContext::t_multiple(p, i1, j);
          for (int k = 0; k <= 2 * n; ++k)
            for (int l = 0; l <= k; ++l)
              CHECK(coeff_R(ctx, k, l, RVariant::general) ==
                    coeff_R(ctx, k, l, RVariant::t_multiple));
        }
    }
}

TEST_CASE("lambda on the worked example") {
  TaftParams p(4, 1);
  CoeffContext ctx = CoeffContext::t_multiple(p, 1, 0);
  CHECK(lambda_rec(ctx, 0, 0).is_one());
  CHECK(lambda_rec(ctx, 1, 0) == Cyclo::one(4) - Cyclo::root_power(4, 3));
  CHECK(lambda_rec(ctx, 2, 0).is_zero());
  CHECK(lambda_rec(ctx, 2, 1).is_zero());
  CHECK(lambda_closed(ctx, 2, 1).is_zero());
  for (int k = 0; k <= 6; ++k) CHECK(lambda_rec(ctx, k, k).is_one());
}

TEST_CASE("recursion equals closed form across contexts") {
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < n; ++t) {
      TaftParams p(n, t);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          CoeffContext ctx = CoeffContext::general(p, i, j);
          for (int k = 0; k <= 2 * n; ++k)
            for (int l = 0; l <= k; ++l)
              CHECK(lambda_rec(ctx, k, l) == lambda_closed(ctx, k, l));
        }
    }
}

TEST_CASE("Hopf-valued coefficients") {
  TaftParams p(4, 1);
  CoeffContext ctx = CoeffContext::t_multiple(p, 1, 0);
  CHECK(c_coeff(ctx, 0, 0) == HopfElt::monomial(p, ctx.i(), 0));
  for (int k = 0; k <= 5; ++k)
    CHECK(c_coeff(ctx, k, k) == HopfElt::monomial(p, ctx.i() - k * p.t, 0));
  HopfElt expect(p);
  expect.add_term(ctx.i() - p.t, 1, lambda_rec(ctx, 1, 0));
  CHECK(c_coeff(ctx, 1, 0) == expect);
  // The antipode-recursion route is cross-checked against the closed
  // monomial internally; a pass here certifies both agree on this sweep.
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < n; ++t)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          CoeffContext c = CoeffContext::general(TaftParams(n, t), i, j);
          for (int k = 0; k <= 6; ++k)
            for (int l = 0; l <= k; ++l) CHECK_NOTHROW(c_coeff(c, k, l));
        }
}

TEST_CASE("row n of a t-multiple family vanishes below the diagonal") {
  for (auto [n, t] : {std::pair{4, 1}, {6, 2}, {5, 3}}) {
    TaftParams p(n, t);
    for (int i1 = 0; i1 < p.N(); ++i1)
      for (int j = 0; j < p.N(); ++j) {
        CoeffContext ctx = CoeffContext::t_multiple(p, i1, j);
        for (int l = 0; l < n; ++l) CHECK(c_coeff(ctx, n, l).is_zero());
      }
  }
}

TEST_CASE("comatrix corner cases") {
  TaftParams p(4, 1);
  CoeffContext ctx = CoeffContext::general(p, 3, 2);
  Comatrix m0 = build_comatrix(ctx, 0);
  CHECK(m0.size() == 1);
  CHECK(m0.entry(0, 0) == HopfElt::monomial(p, 3, 0));
  // A t-multiple family at t = 0 collapses to the identity comatrix.
  TaftParams p0(3, 0);
  Comatrix id = build_comatrix(CoeffContext::t_multiple(p0, 2, 5), 3);
  for (int k = 0; k < id.size(); ++k)
    for (int l = 0; l < id.size(); ++l) {
      if (k == l)
        CHECK(id.entry(k, l) == HopfElt::unit(p0));
      else
        CHECK(id.entry(k, l).is_zero());
    }
  // A free exponent at t = 0 is not diagonal but still a comatrix.
  Comatrix free0 = build_comatrix(CoeffContext::general(p0, 2, 0), 3);
  CHECK_FALSE(free0.entry(1, 0).is_zero());
  CHECK(verify_comatrix(free0).ok);
}

TEST_CASE("comatrix laws hold and perturbations are caught") {
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < n; ++t) {
      TaftParams p(n, t);
      for (int i1 = 0; i1 < p.N(); ++i1)
        for (int j = 0; j < p.N(); ++j) {
          CoeffContext ctx = CoeffContext::t_multiple(p, i1, j);
          ComatrixReport r = verify_comatrix(build_comatrix(ctx, 2 * p.N()));
          CHECK(r.ok);
          if (!r.ok) MESSAGE(r.failure);
        }
    }
  // Free exponents satisfy the laws as well.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CoeffContext ctx = CoeffContext::general(TaftParams(4, 3), i, j);
      CHECK(verify_comatrix(build_comatrix(ctx, 4)).ok);
    }
  // Negative control: one entry nudged by +1.
  TaftParams p(4, 1);
  Comatrix m = build_comatrix(CoeffContext::t_multiple(p, 1, 1), 3);
  Comatrix bad = m.with_entry(2, 1, m.entry(2, 1) + HopfElt::unit(p));
  ComatrixReport r = verify_comatrix(bad);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.failure.empty());
}

TEST_CASE("block structure of t-multiple families") {
  TaftParams p41(4, 1);
  BlockReport b = block_decompose(CoeffContext::t_multiple(p41, 1, 1), 2);
  CHECK(b.ok);
  CHECK(b.m == 2);
  // Two copies, each split into bars of sizes 3 and 1.
  REQUIRE(b.blocks.size() == 4);
  CHECK(b.blocks[0].start == 0);
  CHECK(b.blocks[0].size == 3);
  CHECK(b.blocks[1].start == 3);
  CHECK(b.blocks[1].size == 1);
  CHECK(b.blocks[2].start == 4);
  // i1 + j = 0 mod N forces m = 0: bars of sizes 1 and N-1.
  BlockReport z = block_decompose(CoeffContext::t_multiple(p41, 1, 3), 1);
  CHECK(z.ok);
  CHECK(z.m == 0);
  REQUIRE(z.blocks.size() == 2);
  CHECK(z.blocks[0].size == 1);
  CHECK(z.blocks[1].size == 3);
  // N = 3 inside n = 6: two identical 3x3 blocks, no tail bar.
  TaftParams p62(6, 2);
  BlockReport two = block_decompose(CoeffContext::t_multiple(p62, 1, 1), 2);
  CHECK(two.ok);
  CHECK(two.m == 2);
  REQUIRE(two.blocks.size() == 2);
  CHECK(two.blocks[0].start == 0);
  CHECK(two.blocks[0].size == 3);
  CHECK(two.blocks[1].start == 3);
  CHECK(two.blocks[1].size == 3);
  CHECK(two.blocks[0].i1 == two.blocks[1].i1);
  CHECK(two.blocks[0].j == two.blocks[1].j);
  // General contexts are rejected; the sweep below must all pass.
  CHECK_THROWS_AS(block_decompose(CoeffContext::general(p41, 1, 1), 1),
                  std::invalid_argument);
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < n; ++t) {
      TaftParams p(n, t);
      for (int i1 = 0; i1 < p.N(); ++i1)
        for (int j = 0; j < p.N(); ++j) {
          BlockReport r = block_decompose(CoeffContext::t_multiple(p, i1, j), 3);
          CHECK(r.ok);
          if (!r.ok) MESSAGE(r.failure);
        }
    }
}
