#ifndef GRACEFUL_HYPERTERM_HPP
#define GRACEFUL_HYPERTERM_HPP

#include <string>
#include <vector>

#include "graceful/arith.hpp"
#include "graceful/bivariate.hpp"

namespace graceful {

// An integer-linear form ci*i + cn*n + c0, the argument shape of every
// binomial factor in the certificates.
struct LinearForm {
  long ci = 0;
  long cn = 0;
  long c0 = 0;

  long value(long i, long n) const { return ci * i + cn * n + c0; }
  LinearForm shifted(long di, long dn) const { return {ci, cn, c0 + ci * di + cn * dn}; }
  BivariatePoly as_poly() const;
  std::string to_string() const;

  bool operator==(const LinearForm&) const = default;
};

// Requires the poly to be linear in i and n with no i*n term and machine-size
// coefficients; throws std::invalid_argument otherwise.
LinearForm to_linear_form(const BivariatePoly& p);

struct BinomialFactor {
  LinearForm top;
  LinearForm bottom;
  unsigned power = 1;

  bool operator==(const BinomialFactor&) const = default;
};

// scale * (-1)^(sign(i,n)) * prod binom(top, bottom)^power, evaluated with
// the generalized binomial (0 when the bottom is negative).
struct HypergeometricTerm {
  long scale = 1;  // literal integer prefactor, e.g. the 2 in 2*(-1)^i*...
  LinearForm sign;
  std::vector<BinomialFactor> factors;

  HypergeometricTerm shifted(long di, long dn) const;

  bool operator==(const HypergeometricTerm&) const = default;
};

Int eval_term(const HypergeometricTerm& t, long i, long n);

// A ratio of bivariate polynomials; den is never the zero polynomial.
// den_factors lists the linear factors of den (without multiplicity), which
// certificate verification uses to locate denominator-zero lines.
struct PolyFraction {
  BivariatePoly num;
  BivariatePoly den;
  std::vector<LinearForm> den_factors;
};

// Exact rational-function ratio t1(i,n) / t2(i,n) for factor-wise pairable
// terms: equal factor counts and powers, with matching i- and n-coefficients
// in each top and bottom (only the constants may differ), and a sign
// difference of constant parity.  Throws std::invalid_argument when the
// terms do not pair.  Guarantee: t1(i,n)*den(i,n) = t2(i,n)*num(i,n)
// wherever t2 does not vanish.
PolyFraction term_ratio(const HypergeometricTerm& t1, const HypergeometricTerm& t2);

// Ratio t(i+di, n+dn) / t(i,n) as a PolyFraction; (di,dn) must not be (0,0).
PolyFraction shift_quotient(const HypergeometricTerm& t, long di, long dn);

}  // namespace graceful

#endif  // GRACEFUL_HYPERTERM_HPP
