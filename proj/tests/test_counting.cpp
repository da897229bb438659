#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "graceful/counting.hpp"

using namespace graceful;

namespace {

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  return out;
}

// Independent oracle: count strict chains 1 = d_0 | d_1 | ... | d_k = n with
// d_j < d_{j+1}, by direct recursion over actual divisors.
Int chains_by_search(unsigned k, std::uint64_t from, std::uint64_t to) {
  if (k == 0) return from == to ? 1 : 0;
  Int acc = 0;
  for (std::uint64_t d : divisors_of(to))
    if (d > from && d % from == 0 && (k > 1 ? d < to : d == to))
      acc += chains_by_search(k - 1, d, to);
  return acc;
}

// All partitions with sum <= cap.
void gen(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
         std::vector<std::vector<unsigned>>& out) {
  out.push_back(cur);
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<ExponentMultiset> profiles_up_to(unsigned cap) {
  std::vector<std::vector<unsigned>> parts;
  std::vector<unsigned> cur;
  gen(cap, cap, cur, parts);
  std::vector<ExponentMultiset> out;
  for (auto& p : parts) out.emplace_back(std::move(p));
  return out;
}

}  // namespace

TEST_CASE("pinned chain counts") {
  CHECK(theta_chain(2, ExponentMultiset({1, 1})) == 2);
  CHECK(theta_chain(2, ExponentMultiset({2})) == 1);
  CHECK(theta_formula(0, ExponentMultiset({2})) == 0);
  CHECK(theta_formula(1, ExponentMultiset({2})) == 1);
  CHECK(theta_formula(2, ExponentMultiset({2})) == 1);
  CHECK(theta_chain(0, ExponentMultiset{}) == 1);  // the empty chain on 1
  CHECK(theta_chain(1, ExponentMultiset{}) == 0);
}

TEST_CASE("both theta routes match exhaustive chain search") {
  for (const auto& m : profiles_up_to(5)) {
    const std::uint64_t witness = m.smallest_witness();
    const auto profile = theta_profile(m);
    REQUIRE(profile.size() == m.sum() + 1);
    for (unsigned k = 0; k <= m.sum() + 2; ++k) {
      const Int expected = chains_by_search(k, 1, witness);
      CHECK(theta_chain(k, m) == expected);
      CHECK(theta_formula(k, m) == expected);
      if (k < profile.size()) CHECK(profile[k] == expected);
    }
  }
}

TEST_CASE("headline labeling counts") {
  const ExponentMultiset one({1, 1}), two({2, 2}), three({3, 3});
  CHECK(count_A_circle(one, one) == 14);
  CHECK(count_A_circle(two, two) == 786);
  CHECK(count_A_circle(three, three) == 61340);
  CHECK(count_A_interleave(one, one) == 14);
  CHECK(count_A_interleave(two, two) == 786);
  CHECK(count_A_interleave(three, three) == 61340);
}

TEST_CASE("the two formula routes agree on all small profile pairs") {
  const auto ms = profiles_up_to(5);
  for (const auto& a : ms)
    for (const auto& b : ms) {
      const Int v = count_A_circle(a, b);
      CHECK(v == count_A_interleave(a, b));
      CHECK(v == count_A_circle(b, a));  // symmetry
    }
}

TEST_CASE("both-empty profile counts one labeling, not two") {
  CHECK(count_A_circle(ExponentMultiset{}, ExponentMultiset{}) == 1);
  CHECK(count_A_interleave(ExponentMultiset{}, ExponentMultiset{}) == 1);
}

TEST_CASE("prime-power closed form") {
  for (unsigned n = 1; n <= 5; ++n)
    for (const auto& b : profiles_up_to(5)) {
      Int expected = 1;
      for (unsigned e : b.exponents()) expected *= binom(Int(n) + e, static_cast<long>(e));
      CHECK(count_A_prime_power(n, b) == expected);
      CHECK(count_A_prime_power(n, b) == count_A_circle(ExponentMultiset({n}), b));
    }
}

TEST_CASE("alternating power sums") {
  CHECK(debruijn_S(4, 0) == 1);
  CHECK(debruijn_S(4, 1) == 14);
  CHECK(debruijn_S(4, 2) == 786);
  CHECK(debruijn_S(4, 3) == 61340);
  for (unsigned n = 0; n <= 12; ++n) CHECK(debruijn_S(2, n) == binom(Int(2 * n), n));
  for (unsigned n = 1; n <= 8; ++n) CHECK(debruijn_S(1, n) == 0);
  CHECK(debruijn_S(1, 0) == 1);
  CHECK_THROWS_AS(debruijn_S(0, 3), std::invalid_argument);
}

TEST_CASE("lattice cap throws and restores") {
  const std::size_t old_cap = max_lattice_nodes();
  set_max_lattice_nodes(4);
  CHECK_THROWS_AS(theta_chain(2, ExponentMultiset({2, 2})), resource_limit_error);
  set_max_lattice_nodes(old_cap);
  // 36 has seven divisors strictly between 1 and 36.
  CHECK(theta_chain(2, ExponentMultiset({2, 2})) == 7);
}

TEST_CASE("square-profile counts match the fourth-power sums") {
  for (unsigned n = 1; n <= 12; ++n) {
    const ExponentMultiset a({n, n});
    CHECK(count_A_circle(a, a) == debruijn_S(4, n));
  }
}
