#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graceful/binomial_poly.hpp"
#include "graceful/certificate.hpp"
#include "graceful/hyperterm.hpp"
#include "graceful/poly_parser.hpp"
#include "graceful/recurrences.hpp"

using namespace graceful;

namespace {

std::string cert_path(const std::string& name) {
  return std::string(GRACEFUL_CERT_DIR) + "/" + name + ".json";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes a copy of a certificate with one substring replaced, for checking
// that the verifier rejects corrupted data.
std::string tampered_copy(const std::string& name, const std::string& from,
                          const std::string& to, const std::string& tag) {
  std::string text = slurp(cert_path(name));
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, from.size(), to);
  const auto out_path =
      std::filesystem::temp_directory_path() / ("graceful-tamper-" + name + "-" + tag + ".json");
  std::ofstream out(out_path);
  REQUIRE(out);
  out << text;
  out.close();
  return out_path.string();
}

BivariatePoly B(const std::string& s) { return parse_polynomial(s); }

// binom(top, bottom) as a single-factor term.
HypergeometricTerm plain_binom(LinearForm top, LinearForm bottom) {
  return HypergeometricTerm{1, LinearForm{}, {BinomialFactor{top, bottom, 1}}};
}

Int binom_ll(long n, long kk) {
  if (kk < 0) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), Int(n).get_mpz_t(), static_cast<unsigned long>(kk));
  return r;
}

}  // namespace

TEST_CASE("term evaluation: generalized binomials, sign, scale, power") {
  // binom(5, i)
  const auto row5 = plain_binom({0, 0, 5}, {1, 0, 0});
  const long expect[] = {1, 5, 10, 10, 5, 1};
  for (long i = 0; i <= 5; ++i) CHECK(eval_term(row5, i, 0) == expect[i]);
  CHECK(eval_term(row5, 6, 0) == 0);
  CHECK(eval_term(row5, -1, 0) == 0);  // negative lower index vanishes

  // binom(i, n): negative upper index follows the falling factorial
  const auto gen = plain_binom({1, 0, 0}, {0, 1, 0});
  CHECK(eval_term(gen, -1, 2) == 1);    // binom(-1,2)
  CHECK(eval_term(gen, -2, 1) == -2);   // binom(-2,1)
  CHECK(eval_term(gen, -1, 3) == -1);   // binom(-1,3)
  CHECK(eval_term(gen, 4, 2) == 6);

  // 2 * (-1)^i * binom(5, i)
  HypergeometricTerm signed_term{2, {1, 0, 0}, {BinomialFactor{{0, 0, 5}, {1, 0, 0}, 1}}};
  CHECK(eval_term(signed_term, 1, 0) == -10);
  CHECK(eval_term(signed_term, 2, 0) == 20);

  // binom(n+1, i)^3
  HypergeometricTerm cubed{1, {}, {BinomialFactor{{0, 1, 1}, {1, 0, 0}, 3}}};
  CHECK(eval_term(cubed, 1, 2) == 27);
  CHECK(eval_term(cubed, 2, 3) == 216);
}

TEST_CASE("shift quotients are exact and match pinned closed forms") {
  // binom(5,i): ratio of consecutive entries is (5-i)/(i+1)
  const auto row5 = plain_binom({0, 0, 5}, {1, 0, 0});
  const auto q5 = shift_quotient(row5, 1, 0);
  CHECK(q5.num * B("i+1") == q5.den * B("5-i"));

  // binom(n+i, n)^2, i-shift: ((n+i+1)/(i+1))^2
  HypergeometricTerm sq{1, {}, {BinomialFactor{{1, 1, 0}, {0, 1, 0}, 2}}};
  const auto qi = shift_quotient(sq, 1, 0);
  CHECK(qi.num * B("(i+1)^2") == qi.den * B("(n+i+1)^2"));

  // same term, n-shift: ((n+i+1)/(n+1))^2
  const auto qn = shift_quotient(sq, 0, 1);
  CHECK(qn.num * B("(n+1)^2") == qn.den * B("(n+i+1)^2"));

  // the fourth-power summand (-1)^(n+i) binom(2n,i)^4: the sign flips under
  // an i-shift, so the ratio is -((2n-i)/(i+1))^4
  const auto sigma = load_certificate(cert_path("sigma"));
  const auto qs = shift_quotient(sigma.summand, 1, 0);
  CHECK(qs.num * B("(i+1)^4") == qs.den * B("-(2*n-i)^4"));

  // soundness at every integer point: t(i+di, n+dn) * den = t(i, n) * num
  struct Probe {
    HypergeometricTerm t;
    long di, dn;
  };
  const Probe probes[] = {{row5, 1, 0}, {sq, 1, 0}, {sq, 0, 1}, {sq, 1, 1},
                          {sigma.summand, 1, 0}, {sigma.summand, 0, 1}};
  for (const auto& pr : probes) {
    const auto q = shift_quotient(pr.t, pr.di, pr.dn);
    for (long i = -3; i <= 6; ++i)
      for (long n = -3; n <= 6; ++n) {
        CHECK(eval_term(pr.t, i + pr.di, n + pr.dn) * q.den.eval(i, n) ==
              eval_term(pr.t, i, n) * q.num.eval(i, n));
      }
    // each listed denominator factor really is a zero line of the denominator
    for (const auto& f : q.den_factors) {
      if (f.ci == 0) continue;
      for (long n = -2; n <= 2; ++n) {
        const long rhs = -(f.cn * n + f.c0);
        if (rhs % f.ci != 0) continue;
        CHECK(q.den.eval(rhs / f.ci, n) == 0);
      }
    }
  }

  CHECK_THROWS_AS(shift_quotient(row5, 0, 0), std::invalid_argument);
}

TEST_CASE("term ratios pair factor-wise or refuse") {
  const auto tau = load_certificate(cert_path("tau"));
  const auto r = term_ratio(tau.base_term, tau.summand);
  for (long i = 0; i <= 9; ++i)
    for (long n = 0; n <= 5; ++n) {
      CHECK(eval_term(tau.base_term, i, n) * r.den.eval(i, n) ==
            eval_term(tau.summand, i, n) * r.num.eval(i, n));
    }

  // a term divided by itself is 1
  HypergeometricTerm sq{1, {}, {BinomialFactor{{1, 1, 0}, {0, 1, 0}, 2}}};
  const auto unit = term_ratio(sq, sq);
  CHECK(unit.num == unit.den);

  // an even sign difference is a constant sign and is accepted
  HypergeometricTerm sq_even = sq;
  sq_even.sign = {2, 0, 0};
  const auto even = term_ratio(sq_even, sq);
  for (long i = 0; i <= 4; ++i)
    for (long n = 0; n <= 4; ++n)
      CHECK(eval_term(sq_even, i, n) * even.den.eval(i, n) ==
            eval_term(sq, i, n) * even.num.eval(i, n));

  // refusals: factor counts, zero scale, odd sign difference, unpairable tops
  const auto row5 = plain_binom({0, 0, 5}, {1, 0, 0});
  CHECK_THROWS_AS(term_ratio(row5, tau.summand), std::invalid_argument);
  HypergeometricTerm zero_scale = sq;
  zero_scale.scale = 0;
  CHECK_THROWS_AS(term_ratio(zero_scale, sq), std::invalid_argument);
  HypergeometricTerm odd_sign = sq;
  odd_sign.sign = {1, 0, 0};
  CHECK_THROWS_AS(term_ratio(odd_sign, sq), std::invalid_argument);
  const auto central = plain_binom({0, 2, 0}, {1, 0, 0});   // binom(2n, i)
  const auto shifted = plain_binom({1, 1, 0}, {0, 1, 0});   // binom(n+i, n)
  CHECK_THROWS_AS(term_ratio(central, shifted), std::invalid_argument);
}

TEST_CASE("linear forms") {
  CHECK(to_linear_form(B("2*i - 3*n + 7")) == LinearForm{2, -3, 7});
  CHECK(to_linear_form(BivariatePoly()) == LinearForm{0, 0, 0});
  CHECK_THROWS_AS(to_linear_form(B("i^2")), std::invalid_argument);
  CHECK_THROWS_AS(to_linear_form(B("i*n")), std::invalid_argument);
  const LinearForm f{2, -1, 3};
  CHECK(f.value(4, 5) == 6);
  CHECK(f.shifted(1, 2) == LinearForm{2, -1, 3});
  CHECK(f.shifted(3, 0) == LinearForm{2, -1, 9});
  CHECK(f.as_poly() == B("2*i - n + 3"));
}

TEST_CASE("certificate files load with the declared parameter handling") {
  const auto phi0 = load_certificate(cert_path("phi"), 0);
  CHECK(phi0.name == "phi");
  CHECK(phi0.has_parameter_k);
  CHECK(phi0.k == 0);
  CHECK(phi0.order == 2);
  CHECK(phi0.rec_coeffs.size() == 3);
  // with k = 0 the certified sum is constantly 1, so the three recurrence
  // coefficients must cancel identically
  CHECK(phi0.rec_coeffs[0] + phi0.rec_coeffs[1] + phi0.rec_coeffs[2] == BivariatePoly());

  const auto tau = load_certificate(cert_path("tau"));
  CHECK(tau.n_min == 1);
  CHECK_FALSE(tau.has_parameter_k);
  CHECK(tau.summand.scale == 2);
  CHECK(tau.witness.summand_factor == 0);
  CHECK(tau.witness.base_factor == 0);
  CHECK(tau.witness.i_max == LinearForm{0, 2, 4});

  CHECK_THROWS_AS(load_certificate(cert_path("phi")), std::invalid_argument);      // k missing
  CHECK_THROWS_AS(load_certificate(cert_path("phi"), -1), std::invalid_argument);  // k negative
  CHECK_THROWS_AS(load_certificate(cert_path("tau"), 5), std::invalid_argument);   // stray k
  CHECK_THROWS_AS(load_certificate("/nonexistent/cert.json"), std::invalid_argument);
}

TEST_CASE("certified sums reproduce direct summation") {
  const auto phi0 = load_certificate(cert_path("phi"), 0);
  const auto phi3 = load_certificate(cert_path("phi"), 3);
  const auto psi2 = load_certificate(cert_path("psi"), 2);
  const auto tau = load_certificate(cert_path("tau"));
  const auto sigma = load_certificate(cert_path("sigma"));

  // pinned single-term values
  CHECK(eval_term(sigma.summand, 0, 1) == -1);
  CHECK(eval_term(tau.summand, 1, 1) == -2);

  for (long n = 0; n <= 15; ++n) {
    CHECK(certified_sum(phi0, n) == 1);
    CHECK(certified_sum(phi3, n) == direct_sum(SumFamily::phi, 3, n));
    CHECK(certified_sum(psi2, n) == direct_sum(SumFamily::psi, 2, n));
    CHECK(certified_sum(sigma, n) == direct_sum(SumFamily::s4, std::nullopt, n));
    if (n >= 1) CHECK(certified_sum(tau, n) == direct_sum(SumFamily::t, std::nullopt, n));
  }
  CHECK(certified_sum(tau, 1) == 14);
  CHECK(certified_sum(tau, 2) == 786);
  CHECK(certified_sum(sigma, 3) == 61340);
}

TEST_CASE("telescoping matches direct summation on a 20-point window") {
  for (const auto& cert : {load_certificate(cert_path("phi"), 3), load_certificate(cert_path("tau"))}) {
    for (long n = cert.n_min; n < cert.n_min + 20; ++n) {
      CHECK(certificate_g(cert, 0, n) == 0);  // the telescoped sum starts at zero

      // the recurrence combination of the certified sums vanishes
      Rat combo = 0;
      long bound = 0;
      for (unsigned j = 0; j <= cert.order; ++j) {
        combo += Rat(cert.rec_coeffs[j].eval(0, n) *
                     certified_sum(cert, n + static_cast<long>(j)));
        bound = std::max(bound, cert.witness.i_max.value(0, n + static_cast<long>(j)));
      }
      CHECK(combo == 0);

      // partial sums of the telescoped differences equal g at the far end
      Rat partial = 0;
      for (long i = 0; i <= bound; ++i) {
        Rat row = 0;
        for (unsigned j = 0; j <= cert.order; ++j)
          row += Rat(cert.rec_coeffs[j].eval(0, n) *
                     eval_term(cert.summand, i, n + static_cast<long>(j)));
        // pointwise telescoping at a few sample columns
        if (i <= 2 || i == bound)
          CHECK(row == certificate_g(cert, i + 1, n) - certificate_g(cert, i, n));
        partial += row;
      }
      CHECK(partial == certificate_g(cert, bound + 1, n) - certificate_g(cert, 0, n));
      CHECK(partial == 0);  // the far end is past the support, so g vanishes there
    }
  }
}

TEST_CASE("full verification passes for the shipped certificates") {
  for (const auto& [name, k] : std::vector<std::pair<std::string, std::optional<long>>>{
           {"phi", 0L}, {"phi", 3L}, {"psi", 2L}, {"tau", std::nullopt}}) {
    const auto cert = load_certificate(cert_path(name), k);
    const auto rep = verify_certificate(cert);
    INFO(rep.to_text());
    CHECK(rep.passed());
    CHECK(rep.structure.passed);
    CHECK(rep.condition_a.passed);
    CHECK(rep.condition_b.passed);
    CHECK(rep.condition_c.passed);
    CHECK(rep.recurrence.passed);
    CHECK(rep.grid_rows > 0);
    CHECK(rep.grid_cols > 0);
    CHECK(rep.k == k);
  }
}

TEST_CASE("verification rejects a corrupted certificate polynomial") {
  const auto path = tampered_copy("phi", "6*n^3", "7*n^3", "num");
  const auto rep = verify_certificate(load_certificate(path, 3));
  CHECK_FALSE(rep.condition_c.passed);
  CHECK_FALSE(rep.passed());
  // the parts the tampering does not touch still hold
  CHECK(rep.structure.passed);
  CHECK(rep.recurrence.passed);
}

TEST_CASE("verification rejects a corrupted recurrence coefficient") {
  const auto path =
      tampered_copy("phi", "-(5*n^2+(2*k+16)*n+3*k+13)", "-(5*n^2+(2*k+16)*n+3*k+14)", "rec");
  const auto rep = verify_certificate(load_certificate(path, 3));
  CHECK_FALSE(rep.recurrence.passed);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("verification rejects a validity range that hits a denominator zero") {
  const auto path = tampered_copy("tau", "\"n_min\": 1", "\"n_min\": 0", "nmin");
  const auto rep = verify_certificate(load_certificate(path));
  CHECK_FALSE(rep.structure.passed);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("the two closed sum routes agree coefficient by coefficient") {
  // circle of binom(x+n,n)^2 against binom(x,k) extracts the k-th basis
  // coefficient of the square
  for (long n = 0; n <= 8; ++n) {
    const auto square = multiply(basis_binom_shifted(n, n), basis_binom_shifted(n, n));
    for (long k = 0; k <= 8; ++k) {
      CHECK(circle_binom_square_closed(n, basis_binom_shifted(0, k)) == coeff(square, k));
    }
  }
}

TEST_CASE("direct sums: pinned values and recurrence checks") {
  CHECK(direct_sum(SumFamily::phi, 2, 1) == 2);
  CHECK(direct_sum(SumFamily::psi, 2, 1) == 2);
  CHECK(direct_sum(SumFamily::t, std::nullopt, 1) == 14);
  CHECK(direct_sum(SumFamily::t, std::nullopt, 2) == 786);
  CHECK(direct_sum(SumFamily::t, std::nullopt, 0) == 2);  // the n = 0 outlier
  const long s4_expect[] = {1, 14, 786, 61340};
  for (long n = 0; n <= 3; ++n)
    CHECK(direct_sum(SumFamily::s4, std::nullopt, n) == s4_expect[n]);
  CHECK(direct_sum(SumFamily::phi, 0, 7) == 1);

  for (long k = 0; k <= 4; ++k) {
    CHECK(numeric_recurrence_check(SumFamily::phi, k, 0, 20).passed);
    CHECK(numeric_recurrence_check(SumFamily::psi, k, 0, 20).passed);
  }
  CHECK(numeric_recurrence_check(SumFamily::t, std::nullopt, 1, 30).passed);
  CHECK(numeric_recurrence_check(SumFamily::s4, std::nullopt, 0, 30).passed);

  // the same coefficient triple drives both fourth-power families
  CHECK(family_recurrence(SumFamily::t, std::nullopt) ==
        family_recurrence(SumFamily::s4, std::nullopt));
  // and the parameterized families match their certificate files
  CHECK(family_recurrence(SumFamily::phi, 3) == load_certificate(cert_path("phi"), 3).rec_coeffs);
  CHECK(family_recurrence(SumFamily::psi, 3) == load_certificate(cert_path("psi"), 3).rec_coeffs);

  CHECK(std::string(family_name(SumFamily::phi)) == "phi");
  CHECK(family_n_min(SumFamily::t) == 1);
  CHECK(family_n_min(SumFamily::s4) == 0);

  CHECK_THROWS_AS(direct_sum(SumFamily::phi, std::nullopt, 3), std::invalid_argument);
  CHECK_THROWS_AS(direct_sum(SumFamily::t, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(direct_sum(SumFamily::phi, -1, 3), std::invalid_argument);
  CHECK_THROWS_AS(direct_sum(SumFamily::phi, 2, -1), std::invalid_argument);
  CHECK_THROWS_AS(numeric_recurrence_check(SumFamily::t, std::nullopt, 0, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(numeric_recurrence_check(SumFamily::s4, std::nullopt, 5, 4),
                  std::invalid_argument);
}

TEST_CASE("sum identities and singular cases") {
  const auto a = direct_identity_check(Identity::A, 6, 6);
  CHECK(a.passed);
  CHECK_FALSE(a.first_mismatch.has_value());

  const auto b = direct_identity_check(Identity::B, 0, 12);
  CHECK(b.passed);
  CHECK(b.n0_inequality_ok);
  CHECK(b.t0 == 2);
  CHECK(b.s0 == 1);

  for (long k = 0; k <= 8; ++k) {
    const auto rep = singular_case_check(k);
    CHECK(rep.passed);
    CHECK(rep.ell == (k + 1) / 2);
    const Int central = binom_ll(2 * rep.ell, rep.ell);
    if (k % 2 == 0) {
      CHECK(direct_sum(SumFamily::phi, k, rep.ell) == central);
    } else {
      CHECK(2 * direct_sum(SumFamily::phi, k, rep.ell) == 3 * rep.ell * central);
    }
  }
  CHECK_THROWS_AS(direct_identity_check(Identity::B, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(singular_case_check(-2), std::invalid_argument);
}
