#include "graceful/counting.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

#include "graceful/binomial_poly.hpp"

namespace graceful {

namespace {

std::atomic<std::size_t> g_max_lattice{1000000};

// The divisor lattice of a as a mixed-radix index space: node v encodes an
// exponent vector (v_1..v_r) with 0 <= v_j <= a_j.
struct Lattice {
  std::vector<unsigned> radix;        // a_j + 1 per dimension
  std::vector<std::size_t> stride;
  std::size_t nodes = 1;

  explicit Lattice(const ExponentMultiset& a) {
    std::size_t cap = g_max_lattice.load(std::memory_order_relaxed);
    for (unsigned e : a.exponents()) {
      radix.push_back(e + 1);
      stride.push_back(nodes);
      if (nodes > cap / (e + 1))
        throw resource_limit_error("theta DP: divisor lattice exceeds the configured cap of " +
                                   std::to_string(cap) + " nodes");
      nodes *= e + 1;
    }
  }

  // ways'[v] = sum over u strictly below v of ways[u], computed as a
  // sum-over-dominated-vectors prefix pass minus the diagonal.
  void step(std::vector<Int>& ways) const {
    std::vector<Int> sum = ways;
    for (std::size_t d = 0; d < radix.size(); ++d) {
      const std::size_t s = stride[d];
      const std::size_t block = s * radix[d];
      for (std::size_t base = 0; base < nodes; base += block)
        for (std::size_t v = base + s; v < base + block; ++v) sum[v] += sum[v - s];
    }
    for (std::size_t v = 0; v < nodes; ++v) ways[v] = sum[v] - ways[v];
  }
};

}  // namespace

std::size_t max_lattice_nodes() { return g_max_lattice.load(std::memory_order_relaxed); }
void set_max_lattice_nodes(std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("lattice cap must be positive");
  g_max_lattice.store(cap, std::memory_order_relaxed);
}

std::vector<Int> theta_profile(const ExponentMultiset& a) {
  Lattice lat(a);
  std::vector<Int> ways(lat.nodes, Int(0));
  ways[0] = 1;
  std::vector<Int> profile;
  profile.push_back(ways[lat.nodes - 1]);  // theta(0,a): 1 iff a is empty
  for (unsigned k = 1; k <= a.sum(); ++k) {
    lat.step(ways);
    profile.push_back(ways[lat.nodes - 1]);
  }
  return profile;
}

Int theta_chain(unsigned k, const ExponentMultiset& a) {
  if (k > a.sum()) return 0;  // every chain step strictly increases the exponent sum
  Lattice lat(a);
  std::vector<Int> ways(lat.nodes, Int(0));
  ways[0] = 1;
  for (unsigned s = 0; s < k; ++s) lat.step(ways);
  return ways[lat.nodes - 1];
}

Int theta_formula(unsigned k, const ExponentMultiset& a) {
  Rat c = coeff(shift(F_of(a), -1), static_cast<long>(k));
  return c.get_num();  // integer-valued polynomial: denominator is 1
}

Int count_A_interleave(const ExponentMultiset& a, const ExponentMultiset& b) {
  const std::vector<Int> ta = theta_profile(a);
  const std::vector<Int> tb = theta_profile(b);
  const std::size_t sa = ta.size(), sb = tb.size();
  Int acc = ta[0] * tb[0];
  for (std::size_t i = 1; i < std::min(sa, sb); ++i) acc += 2 * ta[i] * tb[i];
  for (std::size_t k = 0; k + 1 < sb && k < sa; ++k) acc += ta[k] * tb[k + 1];
  for (std::size_t l = 0; l + 1 < sa && l < sb; ++l) acc += ta[l + 1] * tb[l];
  return acc;
}

Int count_A_circle(const ExponentMultiset& a, const ExponentMultiset& b) {
  if (a.empty() && b.empty()) return 1;  // the formula would give 2 here
  const BinomialPolynomial fa = F_of(a), fb = F_of(b);
  Rat r = circle(shift(fa, -1), fb) + circle(fa, shift(fb, -1));
  return r.get_num();
}

Int count_A_prime_power(unsigned n, const ExponentMultiset& b) {
  Int acc = 1;
  for (unsigned e : b.exponents()) acc *= binom(static_cast<long>(n) + e, e);
  return acc;
}

Int debruijn_S(unsigned k, unsigned n) {
  if (k == 0) throw std::invalid_argument("debruijn_S: the power k must be positive");
  Int acc = 0;
  const long nn = 2L * n;
  for (long i = 0; i <= nn; ++i) {
    Int term = pow(binom(nn, i), k);
    if ((n + i) % 2) acc -= term; else acc += term;
  }
  return acc;
}

}  // namespace graceful
