#ifndef GRACEFUL_COUNTING_HPP
#define GRACEFUL_COUNTING_HPP

#include <cstddef>
#include <vector>

#include "graceful/arith.hpp"
#include "graceful/exponent_multiset.hpp"

namespace graceful {

// theta(k,a): the number of strictly increasing divisor chains
// 1 = d_0 < d_1 < ... < d_k = a in the divisor lattice of a.
// Two independent routes: a lattice DP and the binomial-basis formula
// coeff(shift(F_of(a),-1), k).  They must always agree.
Int theta_chain(unsigned k, const ExponentMultiset& a);
Int theta_formula(unsigned k, const ExponentMultiset& a);

// All values theta(0..sum(a), a) in one DP pass (theta vanishes beyond sum).
std::vector<Int> theta_profile(const ExponentMultiset& a);

// A(a,b): the number of essentially distinct alpha-graceful labelings of the
// complete bipartite graph whose part sizes have prime-exponent multisets a
// and b.  Interleave route: sums theta products over chains that alternate
// sides; valid for all inputs.
Int count_A_interleave(const ExponentMultiset& a, const ExponentMultiset& b);

// Circle route: circle(shift(F_of(a),-1), F_of(b)) + circle(F_of(a),
// shift(F_of(b),-1)), except both-empty, where the formula would give 2 and
// the true count is 1.
Int count_A_circle(const ExponentMultiset& a, const ExponentMultiset& b);

// Closed form for a prime power against an arbitrary right part:
// A({n}, b) = prod_i binom(n + b_i, b_i).
Int count_A_prime_power(unsigned n, const ExponentMultiset& b);

// de Bruijn's alternating sum S(k,n) = sum_{i=0}^{2n} (-1)^(n+i) binom(2n,i)^k.
Int debruijn_S(unsigned k, unsigned n);

// Cap on the divisor-lattice size prod(a_i + 1); theta DPs beyond it throw
// resource_limit_error.
std::size_t max_lattice_nodes();
void set_max_lattice_nodes(std::size_t cap);

}  // namespace graceful

#endif  // GRACEFUL_COUNTING_HPP
