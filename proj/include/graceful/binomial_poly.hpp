#ifndef GRACEFUL_BINOMIAL_POLY_HPP
#define GRACEFUL_BINOMIAL_POLY_HPP

#include <vector>

#include "graceful/arith.hpp"
#include "graceful/exponent_multiset.hpp"

namespace graceful {

// A polynomial written in the binomial basis: P(x) = sum_k c_k * binom(x,k).
// c_k is the k-th finite difference of P at 0, so integer-valued polynomials
// have integer c_k.  Coefficients are exact rationals; the zero polynomial is
// the empty sequence, and the top coefficient is never 0 (trimmed form).
class BinomialPolynomial {
 public:
  BinomialPolynomial() = default;  // zero polynomial

  static BinomialPolynomial constant(const Rat& c);
  static BinomialPolynomial from_coeffs(std::vector<Rat> coeffs);  // trims

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  // True when every basis coefficient is an integer, which holds exactly for
  // integer-valued polynomials.  Informational; never enforced.
  bool integer_valued() const;

  bool operator==(const BinomialPolynomial&) const = default;

 private:
  std::vector<Rat> coeffs_;  // c_0 ... c_d, back() != 0 unless empty
};

// Interpolation from the exact values P(0) ... P(d) via the difference table.
BinomialPolynomial from_values(const std::vector<Rat>& values);

// c_k, or 0 beyond the stored degree.
Rat coeff(const BinomialPolynomial& p, long k);

// Exact evaluation at any integer (negative x uses the falling factorial).
Rat eval(const BinomialPolynomial& p, const Int& x);

// direction +1 gives P(x+1) (c'_k = c_k + c_{k+1}); -1 gives P(x-1), the
// exact inverse by back-substitution.
BinomialPolynomial shift(const BinomialPolynomial& p, int direction);

// Product via evaluation at 0 ... deg(P)+deg(Q) and re-interpolation.
BinomialPolynomial multiply(const BinomialPolynomial& p, const BinomialPolynomial& q);

BinomialPolynomial add(const BinomialPolynomial& p, const BinomialPolynomial& q);
BinomialPolynomial scale(const BinomialPolynomial& p, const Rat& c);

// The bilinear form sum_k c_k(P) * c_k(Q).
Rat circle(const BinomialPolynomial& p, const BinomialPolynomial& q);

// binom(x+m, d) as a polynomial of degree d; m may be any integer.
BinomialPolynomial basis_binom_shifted(long m, long d);

// F_a(x) = prod_i binom(x + a_i, a_i); the empty multiset gives the constant 1.
BinomialPolynomial F_of(const ExponentMultiset& a);

// Closed form for circle(binom(x+m,n), P), valid for 0 <= m <= n:
// sum_i (-1)^i * binom(n-m, i) * P(n-i).
Rat circle_binom_shifted_closed(long m, long n, const BinomialPolynomial& p);

// Closed form for circle(binom(x+n,n)^2, P):
// sum_i (-1)^i * binom(n, i-n) * binom(i, n) * P(i).
Rat circle_binom_square_closed(long n, const BinomialPolynomial& p);

// Degree cap shared by all constructions; operations that would exceed it
// throw resource_limit_error.
long max_poly_degree();
void set_max_poly_degree(long cap);

}  // namespace graceful

#endif  // GRACEFUL_BINOMIAL_POLY_HPP
