#ifndef GRACEFUL_EXPONENT_MULTISET_HPP
#define GRACEFUL_EXPONENT_MULTISET_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace graceful {

// The multiset of prime exponents of a positive integer, e.g. 12 = 2^2 * 3
// has exponents {2, 1}.  Everything this library counts depends on a part
// size only through this multiset, so it is the canonical key type.
// Exponents are kept sorted in descending order; the empty multiset is the
// integer 1.
class ExponentMultiset {
 public:
  ExponentMultiset() = default;

  // Takes the exponents in any order; validates every entry >= 1.
  explicit ExponentMultiset(std::vector<unsigned> exponents);

  // Factorizes by trial division; accepts any positive 64-bit value.
  static ExponentMultiset of_integer(std::uint64_t value);

  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned sum() const;                        // total number of prime factors
  bool empty() const { return exps_.empty(); }

  // The smallest integer with this exponent multiset (consecutive primes,
  // largest exponent on the smallest prime).  Overflow-checked.
  std::uint64_t smallest_witness() const;

  std::string to_string() const;  // "{2,1}", "{}" for the empty multiset

  bool operator==(const ExponentMultiset&) const = default;
  auto operator<=>(const ExponentMultiset&) const = default;

 private:
  std::vector<unsigned> exps_;  // descending, all >= 1
};

}  // namespace graceful

#endif  // GRACEFUL_EXPONENT_MULTISET_HPP
