#include "superchar/series.hpp"

#include <random>

#include "doctest.h"
#include "superchar/pdc.hpp"
#include "testutil.hpp"

using namespace superchar;
using testutil::W;

TEST_SUITE_BEGIN("series");

TEST_CASE("monomials multiply by adding exponents") {
  const ShiftedWeight nu = W("3,1|1,3"), mu = W("1,1|0,2");
  const CharacterSeries prod =
      CharacterSeries::monomial(nu, 6) * CharacterSeries::monomial(mu, 6);
  CHECK(prod.base() == nu + mu);
  CHECK(prod.coefficient(nu + mu) == 1);
  CHECK(prod.terms().size() == 1);
}

TEST_CASE("telescoping product truncates to one") {
  const AlgebraShape shape{2, 2};
  const ShiftedWeight zero = ShiftedWeight::zero(shape);
  const ShiftedWeight alpha = simple_roots(shape)[0];
  const long cut = 5;

  CharacterSeries left(zero, cut);
  left.add_term(zero, 1);
  left.add_term(zero - alpha, -1);

  CharacterSeries geo(zero, cut);
  ShiftedWeight run = zero;
  for (long k = 0; k * root_lattice_height(alpha) <= cut; ++k) {
    geo.add_term(run, 1);
    run = run - alpha;
  }

  const CharacterSeries prod = left * geo;
  CHECK(prod.terms().size() == 1);
  CHECK(prod.coefficient(zero) == 1);
}

TEST_CASE("multiplication agrees with array convolution along one root line") {
  std::mt19937_64 rng(41);
  const AlgebraShape shape{2, 1};
  const ShiftedWeight zero = ShiftedWeight::zero(shape);
  const ShiftedWeight alpha = simple_roots(shape)[0];  // height 1 steps
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int64_t> f(6), g(6);
    CharacterSeries F(zero, 10), G(zero, 10);
    ShiftedWeight at = zero;
    for (int k = 0; k < 6; ++k) {
      f[static_cast<std::size_t>(k)] = coeff(rng);
      g[static_cast<std::size_t>(k)] = coeff(rng);
      F.add_term(at, f[static_cast<std::size_t>(k)]);
      G.add_term(at, g[static_cast<std::size_t>(k)]);
      at = at - alpha;
    }
    const CharacterSeries P = F * G;
    for (int k = 0; k <= 10; ++k) {
      std::int64_t expect = 0;
      for (int i = 0; i <= k; ++i)
        if (i < 6 && k - i < 6)
          expect += f[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(k - i)];
      CHECK(P.coefficient(zero - alpha.scaled(k)) == expect);
    }
  }
}

TEST_CASE("geometric factor") {
  const AlgebraShape shape{2, 2};
  const OddRoot beta{1, 0, 1};  // eps2 - delta1, height 1
  const CharacterSeries geo = geometric_factor(beta, shape, 3);
  CHECK(geo.terms().size() == 4);
  CHECK(geo.coefficient(ShiftedWeight::zero(shape) - weight_of(beta, shape).scaled(2)) == 1);

  // (1 + e^{-beta}) * geometric_factor(beta) = 1 below the cut
  CharacterSeries left(ShiftedWeight::zero(shape), 3);
  left.add_term(ShiftedWeight::zero(shape), 1);
  left.add_term(ShiftedWeight::zero(shape) - weight_of(beta, shape), 1);
  const CharacterSeries prod = left * geo;
  CHECK(prod.terms().size() == 1);
  CHECK(prod.coefficient(ShiftedWeight::zero(shape)) == 1);
}

TEST_CASE("f_w kills non-regular exponentials") {
  const ShiftedWeight nu = W("3,3|1,2");  // repeated eps-entry
  CHECK(f_w(CharacterSeries::monomial(nu, 8)).is_zero());

  const ShiftedWeight nu2 = W("4,2|1,1");
  CHECK(f_w(CharacterSeries::monomial(nu2, 8)).is_zero());
}

TEST_CASE("f_w of a regular dominant exponential is a free signed orbit") {
  const ShiftedWeight nu = W("5,2|1,3");
  const ShiftedWeight lowest = W("2,5|3,1");
  const long depth = root_lattice_height(nu - lowest);
  const CharacterSeries orbit = f_w(CharacterSeries::monomial(nu, depth));
  CHECK(orbit.terms().size() == 4);
  for (const auto& [w, c] : orbit.terms()) CHECK((c == 1 || c == -1));
  CHECK(orbit.coefficient(nu) == 1);
  CHECK(orbit.coefficient(lowest) == dominant_rearrangement(lowest).second.sign());
}

TEST_CASE("weyl denominator of gl(1|1)") {
  const AlgebraShape shape{1, 1};
  const CharacterSeries den = weyl_denominator(shape, 5);
  const ShiftedWeight r = rho(shape);
  const ShiftedWeight beta = weight_of({0, 0, 1}, shape);
  for (long k = 0; k <= 5; ++k)
    CHECK(den.coefficient(r - beta.scaled(k)) == (k % 2 == 0 ? 1 : -1));
}

TEST_CASE("denominator times inverse is one") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const AlgebraShape shape{m, n};
      const CharacterSeries prod =
          weyl_denominator(shape, 8) * weyl_denominator_inverse(shape, 8);
      CHECK(prod.terms().size() == 1);
      CHECK(prod.coefficient(ShiftedWeight::zero(shape)) == 1);
    }
}

TEST_CASE("the denominator is skew-invariant under every generator") {
  const AlgebraShape shape{2, 2};
  const long window = 6;
  const long margin = 3 * window + 6;
  const CharacterSeries big = weyl_denominator(shape, margin);
  const CharacterSeries small = big.rebased(rho(shape), window);
  for (const WeylElement& w : weyl_group(shape)) {
    if (w.length() != 1) continue;
    const CharacterSeries moved = apply_weyl(w, big).rebased(rho(shape), window);
    CHECK(equal_on_overlap(moved, small.scalar_multiply(-1)));
  }
}

TEST_CASE("f_w commutes with the rewrite into W_r orbit sums") {
  const ShiftedWeight lambda = W("3,1|1,3");
  const ShiftedWeight mu = W("1,0|0,1");
  const ShiftedWeight bar = mu_bar(lambda, mu);
  const WrCount wr = c_count(lambda, bar);

  const long cut = 10;
  CharacterSeries orbit_sum(lambda, cut);
  for (const WeylElement& w : wr.elements) orbit_sum.add_term(w.apply(bar), 1);

  const CharacterSeries lhs = f_w(orbit_sum);
  const CharacterSeries rhs =
      f_w(CharacterSeries::monomial(bar, cut).rebased(lambda, cut)).scalar_multiply(wr.count);
  CHECK(equal_on_overlap(lhs, rhs));
  CHECK(lhs.terms() == rhs.terms());
}

TEST_CASE("multiplication is associative and commutative on aligned windows") {
  std::mt19937_64 rng(47);
  const AlgebraShape shape{2, 2};
  const ShiftedWeight zero = ShiftedWeight::zero(shape);
  const auto roots = simple_roots(shape);
  auto random_series = [&](long cut) {
    CharacterSeries s(zero, cut);
    s.add_term(zero, 1 + static_cast<std::int64_t>(rng() % 3));
    for (int t = 0; t < 6; ++t) {
      ShiftedWeight at = zero;
      for (int step = 0; step < 3; ++step) at = at - roots[rng() % roots.size()];
      s.add_term(at, static_cast<std::int64_t>(rng() % 7) - 3);
    }
    return s;
  };
  for (int trial = 0; trial < 10; ++trial) {
    const CharacterSeries a = random_series(8), b = random_series(8), c = random_series(8);
    CHECK((a * b).terms() == (b * a).terms());
    CHECK(((a * b) * c).terms() == (a * (b * c)).terms());
  }
}

TEST_CASE("exact coefficient extraction on the path side") {
  const ShiftedWeight lambda = W("3,1|1,3");
  CHECK(coefficient_path_side(lambda, lambda) == 1);
  CHECK(coefficient_path_side(lambda, W("2,2|1,3")) == 0);  // non-regular

  // a weight below lambda with one swap picks up the rearrangement sign
  const ShiftedWeight mu = W("2,0|0,2");
  const WeylElement swap{Perm::transposition(2, 0, 1), Perm(2)};
  const std::int64_t direct = coefficient_path_side(lambda, mu);
  CHECK(coefficient_path_side(lambda, swap.apply(mu)) == -direct);
}

TEST_CASE("both extractors agree on a pdc weight") {
  const ShiftedWeight lambda = W("3,1|1,3");
  std::mt19937_64 rng(53);
  const auto roots = simple_roots(lambda.shape());
  for (int trial = 0; trial < 60; ++trial) {
    ShiftedWeight nu = lambda;
    const int steps = static_cast<int>(rng() % 9);
    for (int s = 0; s < steps; ++s) nu = nu - roots[rng() % roots.size()];
    const Rational closed = coefficient_pdc_side(lambda, nu);
    CHECK(closed.is_integer());
    CHECK(closed.num == coefficient_path_side(lambda, nu));
  }
}

TEST_SUITE_END();
