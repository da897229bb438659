#include "graceful/exponent_multiset.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace graceful {

ExponentMultiset::ExponentMultiset(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {
  for (unsigned e : exps_) {
    if (e == 0) throw std::invalid_argument("exponent multiset entries must be >= 1");
  }
  std::sort(exps_.begin(), exps_.end(), std::greater<>());
}

ExponentMultiset ExponentMultiset::of_integer(std::uint64_t value) {
  if (value == 0) throw std::invalid_argument("cannot factorize 0; part sizes are positive");
  std::vector<unsigned> exps;
  for (std::uint64_t p = 2; p * p <= value; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (value % p == 0) {
      value /= p;
      ++e;
    }
    if (e) exps.push_back(e);
  }
  if (value > 1) exps.push_back(1);  // remaining prime cofactor
  return ExponentMultiset(std::move(exps));
}

unsigned ExponentMultiset::sum() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

std::uint64_t ExponentMultiset::smallest_witness() const {
  static const std::uint64_t primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                         31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  if (exps_.size() > std::size(primes))
    throw std::invalid_argument("too many distinct primes for a 64-bit witness");
  std::uint64_t w = 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    for (unsigned e = 0; e < exps_[i]; ++e) {
      if (w > max / primes[i]) throw std::overflow_error("witness exceeds 64 bits");
      w *= primes[i];
    }
  }
  return w;
}

std::string ExponentMultiset::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(exps_[i]);
  }
  return s + "}";
}

}  // namespace graceful
