#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "graceful/binomial_poly.hpp"

using namespace graceful;

namespace {

// Independent route to the k-th basis coefficient: the k-th finite
// difference at 0, computed straight from the definition.
Rat coeff_by_differences(const BinomialPolynomial& p, long k) {
  Rat acc = 0;
  for (long j = 0; j <= k; ++j) {
    const Rat term = Rat(binom(Int(k), j)) * eval(p, j);
    acc += ((k - j) % 2 != 0) ? Rat(-term) : term;
  }
  return acc;
}

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("interpolation fixed points") {
  CHECK(from_values(rats({1, 1, 1})).coeffs() == rats({1}));
  CHECK(from_values(rats({0, 1, 4, 9})).coeffs() == rats({0, 1, 2}));
  CHECK(from_values(rats({1, 4, 9})).coeffs() == rats({1, 3, 2}));
  CHECK_THROWS_AS(from_values({}), std::invalid_argument);
}

TEST_CASE("interpolation round-trips through evaluation") {
  const std::vector<BinomialPolynomial> samples = {
      BinomialPolynomial(),
      BinomialPolynomial::constant(Rat(7)),
      F_of(ExponentMultiset({3, 1})),
      basis_binom_shifted(-2, 4),
      BinomialPolynomial::from_coeffs({Rat(1, 2), Rat(0), Rat(-5, 3), Rat(2)}),
  };
  for (const auto& p : samples) {
    std::vector<Rat> values;
    for (long x = 0; x <= std::max(p.degree(), 0L); ++x) values.push_back(eval(p, x));
    CHECK(from_values(values) == p);
    for (long k = 0; k <= p.degree() + 2; ++k) CHECK(coeff(p, k) == coeff_by_differences(p, k));
  }
}

TEST_CASE("coefficients beyond the degree vanish and negatives throw") {
  const auto p = from_values(rats({1, 4, 9}));
  CHECK(coeff(p, 3) == 0);
  CHECK(coeff(p, 100) == 0);
  CHECK_THROWS_AS(coeff(p, -1), std::invalid_argument);
}

TEST_CASE("shift is the basis recurrence and its exact inverse") {
  const auto p = F_of(ExponentMultiset({2, 2}));
  const auto up = shift(p, +1);
  for (long x = -6; x <= 6; ++x) CHECK(eval(up, x) == eval(p, x + 1));
  CHECK(shift(up, -1) == p);
  CHECK(shift(shift(p, -1), +1) == p);
  // c'_k = c_k + c_{k+1} termwise.
  for (long k = 0; k <= p.degree(); ++k) CHECK(coeff(up, k) == coeff(p, k) + coeff(p, k + 1));
  CHECK_THROWS_AS(shift(p, 2), std::invalid_argument);
  CHECK_THROWS_AS(shift(p, 0), std::invalid_argument);
}

TEST_CASE("multiply and add agree with pointwise arithmetic") {
  const auto p = from_values(rats({0, 1, 4}));       // x^2
  const auto q = basis_binom_shifted(1, 2);          // binom(x+1, 2)
  const auto prod = multiply(p, q);
  const auto sum = add(p, q);
  CHECK(prod.degree() == 4);
  for (long x = -5; x <= 5; ++x) {
    CHECK(eval(prod, x) == eval(p, x) * eval(q, x));
    CHECK(eval(sum, x) == eval(p, x) + eval(q, x));
  }
  CHECK(multiply(p, BinomialPolynomial()).is_zero());
  CHECK(scale(p, Rat(0)).is_zero());
}

TEST_CASE("circle of the squares example") {
  const auto x2 = from_values(rats({0, 1, 4}));
  const auto x1_sq = from_values(rats({1, 4, 9}));
  CHECK(circle(x2, x1_sq) == Rat(7));
  CHECK(circle(x2, x1_sq) == circle(x1_sq, x2));
}

TEST_CASE("shifted basis polynomials evaluate to binomials for any shift") {
  for (long m = -6; m <= 6; ++m)
    for (long d = 0; d <= 5; ++d) {
      const auto p = basis_binom_shifted(m, d);
      CHECK(p.degree() == d);
      for (long x = -9; x <= 9; ++x) CHECK(eval(p, x) == Rat(binom(Int(x + m), d)));
      if (m >= 0)
        for (long k = 0; k <= d; ++k) CHECK(coeff(p, k) == Rat(binom(Int(m), d - k)));
    }
  CHECK_THROWS_AS(basis_binom_shifted(0, -1), std::invalid_argument);
}

TEST_CASE("product polynomials of profiles") {
  const auto f = F_of(ExponentMultiset({1, 1}));
  CHECK(eval(f, -1) == 0);  // both factors vanish at -1
  CHECK(eval(f, 0) == 1);
  CHECK(f.degree() == 2);
  CHECK(F_of(ExponentMultiset{}).coeffs() == rats({1}));
  const auto g = F_of(ExponentMultiset({2, 1}));
  for (long x = 0; x <= 6; ++x)
    CHECK(eval(g, x) == Rat(binom(Int(x + 2), 2) * binom(Int(x + 1), 1)));
  CHECK(g.integer_valued());
  CHECK_FALSE(BinomialPolynomial::from_coeffs({Rat(1, 2)}).integer_valued());
}

TEST_CASE("closed circle forms match the bilinear definition") {
  const auto p = F_of(ExponentMultiset({2, 1}));
  for (long n = 0; n <= 5; ++n) {
    for (long m = 0; m <= n; ++m)
      CHECK(circle_binom_shifted_closed(m, n, p) == circle(basis_binom_shifted(m, n), p));
    const auto sq = multiply(basis_binom_shifted(n, n), basis_binom_shifted(n, n));
    CHECK(circle_binom_square_closed(n, p) == circle(sq, p));
  }
  CHECK_THROWS_AS(circle_binom_shifted_closed(3, 2, p), std::invalid_argument);
  CHECK_THROWS_AS(circle_binom_shifted_closed(-1, 2, p), std::invalid_argument);
}

TEST_CASE("divisor sums of shifted products rebuild the full product") {
  // sum over all divisor profiles d of a of F_d(x-1) equals F_a(x).
  const ExponentMultiset a({2, 1});
  BinomialPolynomial total;
  for (unsigned e1 = 0; e1 <= 2; ++e1)
    for (unsigned e2 = 0; e2 <= 1; ++e2) {
      std::vector<unsigned> exps;
      if (e1) exps.push_back(e1);
      if (e2) exps.push_back(e2);
      total = add(total, shift(F_of(ExponentMultiset(exps)), -1));
    }
  CHECK(total == F_of(a));
}

TEST_CASE("degree cap stops runaway products") {
  const long old_cap = max_poly_degree();
  set_max_poly_degree(3);
  const auto p = F_of(ExponentMultiset({2}));
  CHECK_THROWS_AS(multiply(p, p), resource_limit_error);
  CHECK_THROWS_AS(F_of(ExponentMultiset({2, 2})), resource_limit_error);
  set_max_poly_degree(old_cap);
  CHECK(multiply(p, p).degree() == 4);
}
