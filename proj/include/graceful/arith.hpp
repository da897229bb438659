#ifndef GRACEFUL_ARITH_HPP
#define GRACEFUL_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace graceful {

// All counts in this library are exact; GMP backs both integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a computation would exceed one of the configurable size caps
// (polynomial degree, lattice size, enumeration edge count).  Distinct from
// std::invalid_argument, which signals a caller error.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Generalized binomial coefficient: 0 when bottom < 0, otherwise the falling
// factorial top*(top-1)*...*(top-bottom+1) / bottom!.  The top may be any
// integer, e.g. binom(-1, 2) == 1.
Int binom(const Int& top, long bottom);
Int binom(long top, long bottom);

// Exact power with a machine-size exponent.
Int pow(const Int& base, unsigned long exp);

}  // namespace graceful

#endif  // GRACEFUL_ARITH_HPP
