#ifndef GRACEFUL_LABELING_HPP
#define GRACEFUL_LABELING_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graceful/arith.hpp"
#include "graceful/exponent_multiset.hpp"

namespace graceful {

// An alpha-graceful labeling of K_{a,b} in set-pair form: the left part
// carries the labels in `left` (ascending, size a), the right part those in
// `right` (ascending, size b), all labels below every right label, and the
// a*b cross differences realize {1,...,ab} exactly once.
struct LabelSetPair {
  std::vector<long> left;
  std::vector<long> right;

  bool operator==(const LabelSetPair&) const = default;
  auto operator<=>(const LabelSetPair&) const = default;

  std::string to_string() const;  // "({0,2},{3,4})"
};

enum class Side { left, right };

struct SeriesStep {
  Side side;
  std::uint64_t factor;  // >= 2

  bool operator==(const SeriesStep&) const = default;
};

// A canonical series: multiplications applied to the unique labeling of
// K_{1,1}, alternating sides, every factor >= 2.
using CanonicalSeries = std::vector<SeriesStep>;

bool is_alpha_graceful(const LabelSetPair& pair);

// Every alpha-graceful pair for K_{a,b}, in lexicographic order.  The search
// prunes on 0 in S', ab in S'', max(S') < min(S''), and incremental
// difference-set feasibility.  a*b above the cap throws resource_limit_error.
std::vector<LabelSetPair> enumerate_alpha_graceful(long a, long b);
// Single-threaded reference enumeration, kept for testing the parallel one.
std::vector<LabelSetPair> enumerate_alpha_graceful_serial(long a, long b);

// Multiplication by c on the given side: left gives (cS' + {0..c-1}, cS''),
// right gives (cS', cS'' - {0..c-1}).  Requires an alpha-graceful input and
// c >= 2; the result is alpha-graceful for K_{ac,b} resp. K_{a,bc}.
LabelSetPair mult(const LabelSetPair& pair, Side side, long c);

// Unique preimage under mult(., side, c) if the pair has the required
// structure, else nullopt.  c must divide the size of the side's part.
std::optional<LabelSetPair> try_inverse_mult(const LabelSetPair& pair, Side side, long c);

// Number of canonical series reaching K_{a,b}; equals the labeling count.
Int count_canonical_series(std::uint64_t a, std::uint64_t b);
Int count_canonical_series(const ExponentMultiset& a, const ExponentMultiset& b);

// Folds mult over the steps, starting from ({0},{1}).
LabelSetPair apply_series(const CanonicalSeries& series);

// Repeatedly strips prime multiplications until no side can be inverted;
// an alpha-graceful input always reaches ({0},{1}).
LabelSetPair peel_to_unit(LabelSetPair pair);

long max_bruteforce_edges();
void set_max_bruteforce_edges(long cap);

}  // namespace graceful

#endif  // GRACEFUL_LABELING_HPP
