#include "graceful/recurrences.hpp"

#include <map>
#include <stdexcept>

#include "graceful/counting.hpp"
#include "graceful/poly_parser.hpp"

namespace graceful {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

Int psi_summand(long k, long n, long i) {
  Int v = binom(Int(n), i - n) * binom(Int(i), n) * binom(Int(i), k);
  return (i % 2 != 0) ? Int(-v) : v;
}

Int t_summand(long n, long i) {
  Int b = binom(Int(n + i - 1), n);
  Int v = binom(Int(n), i - n) * binom(Int(i), n) * b * b;
  return (i % 2 != 0) ? Int(-v) : v;
}

bool wants_k(SumFamily family) {
  return family == SumFamily::phi || family == SumFamily::psi;
}

void check_k(SumFamily family, const std::optional<long>& k) {
  require(wants_k(family) == k.has_value(),
          wants_k(family) ? "this sum needs a value for k" : "this sum takes no k");
  if (k) require(*k >= 0, "k must be nonnegative");
}

}  // namespace

const char* family_name(SumFamily family) {
  switch (family) {
    case SumFamily::phi: return "phi";
    case SumFamily::psi: return "psi";
    case SumFamily::t: return "t";
    case SumFamily::s4: return "s4";
  }
  return "?";
}

long family_n_min(SumFamily family) { return family == SumFamily::t ? 1 : 0; }

Int direct_sum(SumFamily family, std::optional<long> k, long n) {
  require(n >= 0, "n must be nonnegative");
  check_k(family, k);
  Int acc = 0;
  switch (family) {
    case SumFamily::phi:
      for (long i = 0; i <= *k; ++i) {
        Int b = binom(Int(n + i), n);
        Int v = binom(Int(*k), i) * b * b;
        acc += ((*k + i) % 2 != 0) ? Int(-v) : v;
      }
      return acc;
    case SumFamily::psi:
      for (long i = n; i <= 2 * n; ++i) acc += psi_summand(*k, n, i);
      return acc;
    case SumFamily::t:
      for (long i = n; i <= 2 * n; ++i) acc += t_summand(n, i);
      return 2 * acc;
    case SumFamily::s4:
      return debruijn_S(4, n);
  }
  throw std::logic_error("unknown sum family");
}

std::vector<BivariatePoly> family_recurrence(SumFamily family, std::optional<long> k) {
  check_k(family, k);
  std::map<std::string, long> bindings;
  const char *c0, *c1, *c2;
  if (wants_k(family)) {
    bindings["k"] = *k;
    c0 = "(n+1)^2";
    c1 = "-(5*n^2+(2*k+16)*n+3*k+13)";
    c2 = "(2*n-k+3)*(2*n-k+4)";
  } else {
    c0 = "4*(n+1)*(2*n+1)^3*(48*n^2+162*n+137)";
    c1 = "-(13056*n^6+96288*n^5+289600*n^4+453428*n^3+388698*n^2+172598*n+31030)";
    c2 = "(n+2)^3*(2*n+3)*(48*n^2+66*n+23)";
  }
  return {parse_polynomial(c0, bindings), parse_polynomial(c1, bindings),
          parse_polynomial(c2, bindings)};
}

RangeCheckResult numeric_recurrence_check(SumFamily family, std::optional<long> k, long n_lo,
                                          long n_hi) {
  require(n_lo >= family_n_min(family), "range starts below the sum's validity");
  require(n_hi >= n_lo, "empty range");
  const auto rc = family_recurrence(family, k);
  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(n_hi - n_lo) + 3);
  for (long n = n_lo; n <= n_hi + 2; ++n) values.push_back(direct_sum(family, k, n));
  for (long n = n_lo; n <= n_hi; ++n) {
    Int acc = 0;
    for (std::size_t j = 0; j < rc.size(); ++j)
      acc += rc[j].eval(0, n) * values[static_cast<std::size_t>(n - n_lo) + j];
    if (acc != 0)
      return {false, n,
              std::string(family_name(family)) + ": recurrence fails at n = " + std::to_string(n)};
  }
  return {true, std::nullopt,
          std::string(family_name(family)) + ": recurrence holds for n = " + std::to_string(n_lo) +
              " ... " + std::to_string(n_hi)};
}

IdentityReport direct_identity_check(Identity which, long k_max, long n_max) {
  IdentityReport rep;
  if (which == Identity::A) {
    require(k_max >= 0 && n_max >= 0, "identity A needs nonnegative ranges");
    for (long k = 0; k <= k_max; ++k)
      for (long n = 0; n <= n_max; ++n)
        if (direct_sum(SumFamily::phi, k, n) != direct_sum(SumFamily::psi, k, n)) {
          rep.first_mismatch = {k, n};
          rep.detail = "phi != psi at k = " + std::to_string(k) + ", n = " + std::to_string(n);
          return rep;
        }
    rep.passed = true;
    rep.detail = "phi == psi for 0 <= k <= " + std::to_string(k_max) +
                 ", 0 <= n <= " + std::to_string(n_max);
    return rep;
  }
  require(n_max >= 1, "identity B needs n_max >= 1");
  rep.t0 = direct_sum(SumFamily::t, std::nullopt, 0);
  rep.s0 = direct_sum(SumFamily::s4, std::nullopt, 0);
  rep.n0_inequality_ok = rep.t0 != rep.s0;
  for (long n = 1; n <= n_max; ++n)
    if (direct_sum(SumFamily::t, std::nullopt, n) != direct_sum(SumFamily::s4, std::nullopt, n)) {
      rep.first_mismatch = {0, n};
      rep.detail = "t != s4 at n = " + std::to_string(n);
      return rep;
    }
  rep.passed = rep.n0_inequality_ok;
  rep.detail = rep.n0_inequality_ok
                   ? "t == s4 for 1 <= n <= " + std::to_string(n_max) +
                         "; at n = 0 they differ as required (t(0) = " + rep.t0.get_str() +
                         ", s4(0) = " + rep.s0.get_str() + ")"
                   : "t(0) unexpectedly equals s4(0)";
  return rep;
}

SingularCaseReport singular_case_check(long k) {
  require(k >= 0, "k must be nonnegative");
  SingularCaseReport rep;
  const long ell = (k + 1) / 2;
  rep.ell = ell;
  const Int central = binom(Int(2 * ell), ell);
  const Int phi_v = direct_sum(SumFamily::phi, k, ell);
  const Int psi_v = direct_sum(SumFamily::psi, k, ell);
  if (k % 2 == 0) {
    if (phi_v == central && psi_v == central) {
      rep.passed = true;
      rep.detail = "k = " + std::to_string(k) + " (even), l = " + std::to_string(ell) +
                   ": phi(l) = psi(l) = binom(2l, l) = " + central.get_str();
    } else {
      rep.detail = "k = " + std::to_string(k) + ": expected binom(2l, l) = " + central.get_str() +
                   ", got phi(l) = " + phi_v.get_str() + ", psi(l) = " + psi_v.get_str();
    }
    return rep;
  }
  // Odd k = 2l - 1.  Compare doubled values so everything stays integral.
  const Int expected2 = 3 * ell * central;
  const Int low = psi_summand(k, ell, 2 * ell - 1);
  const Int high = psi_summand(k, ell, 2 * ell);
  bool others_zero = true;
  for (long i = ell; i <= 2 * ell - 2; ++i)
    if (psi_summand(k, ell, i) != 0) others_zero = false;
  if (2 * phi_v == expected2 && 2 * psi_v == expected2 && 2 * low == -(ell * central) &&
      high == 2 * ell * central && others_zero) {
    rep.passed = true;
    rep.detail = "k = " + std::to_string(k) + " (odd), l = " + std::to_string(ell) +
                 ": phi(l) = psi(l) = (3/2) l binom(2l, l) = " + phi_v.get_str() +
                 ", from the two summands " + low.get_str() + " + " + high.get_str();
  } else {
    rep.detail = "k = " + std::to_string(k) + ": singular-case values do not match (phi(l) = " +
                 phi_v.get_str() + ", psi(l) = " + psi_v.get_str() + ")";
  }
  return rep;
}

}  // namespace graceful
