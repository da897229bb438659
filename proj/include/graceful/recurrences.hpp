#ifndef GRACEFUL_RECURRENCES_HPP
#define GRACEFUL_RECURRENCES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graceful/arith.hpp"
#include "graceful/bivariate.hpp"

namespace graceful {

// The four sums tied together by second-order recurrences.
enum class SumFamily { phi, psi, t, s4 };

const char* family_name(SumFamily family);

// Smallest n for which the sum and its recurrence are claimed.
long family_n_min(SumFamily family);

// Exact value by direct summation.  phi/psi need k >= 0; t/s4 take no k.
Int direct_sum(SumFamily family, std::optional<long> k, long n);

// Coefficients (c0, c1, c2) of c0(n) F(n) + c1(n) F(n+1) + c2(n) F(n+2) = 0.
std::vector<BivariatePoly> family_recurrence(SumFamily family, std::optional<long> k);

struct RangeCheckResult {
  bool passed = false;
  std::optional<long> first_failure;
  std::string detail;
};

// Checks the recurrence pointwise on [n_lo, n_hi] by direct summation.
RangeCheckResult numeric_recurrence_check(SumFamily family, std::optional<long> k, long n_lo,
                                          long n_hi);

enum class Identity { A, B };

struct IdentityReport {
  bool passed = false;
  std::string detail;
  std::optional<std::pair<long, long>> first_mismatch;  // (k, n); k is 0 for B
  bool n0_inequality_ok = false;  // B only: t(0) != s4(0) observed as required
  Int t0, s0;                     // B only: the two n = 0 values
};

// A: phi(k, n) == psi(k, n) for 0 <= k <= k_max, 0 <= n <= n_max.
// B: t(n) == s4(n) for 1 <= n <= n_max, plus the mandatory n = 0 probe,
//    which must come out UNEQUAL (2 vs 1).  k_max is ignored for B.
IdentityReport direct_identity_check(Identity which, long k_max, long n_max);

struct SingularCaseReport {
  bool passed = false;
  long ell = 0;
  std::string detail;
};

// With l = ceil(k/2): for even k checks phi(l) = psi(l) = binom(2l, l);
// for odd k checks phi(l) = psi(l) = (3/2) l binom(2l, l), where psi's sum
// has exactly two nonzero summands, -(1/2) l binom(2l, l) at i = 2l - 1 and
// 2 l binom(2l, l) at i = 2l.
SingularCaseReport singular_case_check(long k);

}  // namespace graceful

#endif
