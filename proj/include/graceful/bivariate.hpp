#ifndef GRACEFUL_BIVARIATE_HPP
#define GRACEFUL_BIVARIATE_HPP

#include <map>
#include <string>
#include <utility>

#include "graceful/arith.hpp"

namespace graceful {

// A polynomial in the two variables i and n with big-integer coefficients,
// stored sparsely; zero coefficients are never kept.  Used for certificate
// polynomials and recurrence coefficients.
class BivariatePoly {
 public:
  using Key = std::pair<int, int>;  // (degree in i, degree in n)

  BivariatePoly() = default;
  static BivariatePoly from_const(Int c);
  static BivariatePoly monomial(Int c, int deg_i, int deg_n);

  bool is_zero() const { return terms_.empty(); }
  int deg_i() const;  // -1 for the zero polynomial
  int deg_n() const;
  bool depends_on_i() const { return deg_i() > 0; }
  const std::map<Key, Int>& terms() const { return terms_; }
  Int coefficient(int deg_i, int deg_n) const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  BivariatePoly operator-() const;

  Int eval(const Int& i, const Int& n) const;

  // Substitutes i -> i + delta (binomial expansion per monomial).
  BivariatePoly shift_i(long delta) const;
  // Substitutes a constant for i, leaving a polynomial in n alone.
  BivariatePoly substitute_i(const Int& value) const;

  // Canonical text form, parseable by parse_polynomial; terms ordered by
  // descending (deg_i, deg_n).
  std::string to_string() const;

  bool operator==(const BivariatePoly&) const = default;

 private:
  void insert(Key k, Int c);  // accumulates, drops zeros
  std::map<Key, Int> terms_;
};

}  // namespace graceful

#endif  // GRACEFUL_BIVARIATE_HPP
