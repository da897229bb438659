#include "graceful/labeling.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <stdexcept>
#include <string>

#include "graceful/counting.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace graceful {

namespace {

std::atomic<long> g_max_edges{20};

bool ascending(const std::vector<long>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

std::string set_to_string(const std::vector<long>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

// Enumerates the right parts compatible with a fixed left part, appending
// complete pairs to out.  `used` marks cross differences taken so far,
// `chosen` is the partial right part, candidates start at `lo`.
void extend_right(const std::vector<long>& left, long ab, long b, long lo,
                  std::vector<long>& chosen, std::vector<char>& used,
                  std::vector<LabelSetPair>& out) {
  const long remaining = b - static_cast<long>(chosen.size());
  if (remaining == 0) {
    out.push_back({left, chosen});
    return;
  }
  // The largest element must be ab itself, so the last slot is forced.
  const long hi = (remaining == 1) ? ab : ab - (remaining - 1);
  const long first = (remaining == 1 && lo < ab) ? ab : lo;
  for (long y = first; y <= hi; ++y) {
    std::size_t marked = 0;
    bool ok = true;
    for (long x : left) {
      const long d = y - x;
      if (used[static_cast<std::size_t>(d)]) {
        ok = false;
        break;
      }
      used[static_cast<std::size_t>(d)] = 1;
      ++marked;
    }
    if (ok) {
      chosen.push_back(y);
      extend_right(left, ab, b, y + 1, chosen, used, out);
      chosen.pop_back();
    }
    for (std::size_t i = 0; i < marked; ++i)
      used[static_cast<std::size_t>(y - left[i])] = 0;
  }
}

// Left parts in lexicographic order: ascending sets containing 0 with all
// elements <= ab - b (room for b larger right labels).
void collect_left(long a, long b, long ab, std::vector<long>& partial,
                  std::vector<std::vector<long>>& out) {
  if (static_cast<long>(partial.size()) == a) {
    out.push_back(partial);
    return;
  }
  const long remaining = a - static_cast<long>(partial.size());
  for (long x = partial.back() + 1; x <= ab - b - (remaining - 1); ++x) {
    partial.push_back(x);
    collect_left(a, b, ab, partial, out);
    partial.pop_back();
  }
}

long checked_edges(long a, long b, const char* who) {
  if (a < 1 || b < 1) throw std::invalid_argument(std::string(who) + ": part sizes must be positive");
  const long cap = g_max_edges.load(std::memory_order_relaxed);
  if (b > cap / a)
    throw resource_limit_error(std::string(who) + ": a*b exceeds the configured brute-force cap of " +
                               std::to_string(cap) + " edges");
  return a * b;
}

std::vector<long> prime_factors(long v) {
  std::vector<long> out;
  for (long p = 2; p * p <= v; ++p)
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

long max_bruteforce_edges() { return g_max_edges.load(std::memory_order_relaxed); }
void set_max_bruteforce_edges(long cap) {
  if (cap < 1) throw std::invalid_argument("brute-force cap must be positive");
  g_max_edges.store(cap, std::memory_order_relaxed);
}

std::string LabelSetPair::to_string() const {
  return "(" + set_to_string(left) + "," + set_to_string(right) + ")";
}

bool is_alpha_graceful(const LabelSetPair& pair) {
  const long a = static_cast<long>(pair.left.size());
  const long b = static_cast<long>(pair.right.size());
  if (a < 1 || b < 1) return false;
  const long ab = a * b;
  if (!ascending(pair.left) || !ascending(pair.right)) return false;
  if (pair.left.front() < 0 || pair.right.back() > ab) return false;
  if (pair.left.back() >= pair.right.front()) return false;
  std::vector<char> seen(static_cast<std::size_t>(ab) + 1, 0);
  for (long x : pair.left)
    for (long y : pair.right) {
      const long d = y - x;
      if (d < 1 || d > ab || seen[static_cast<std::size_t>(d)]) return false;
      seen[static_cast<std::size_t>(d)] = 1;
    }
  return true;  // ab distinct values in {1..ab} cover it exactly
}

std::vector<LabelSetPair> enumerate_alpha_graceful_serial(long a, long b) {
  const long ab = checked_edges(a, b, "enumerate_alpha_graceful_serial");
  std::vector<std::vector<long>> lefts;
  std::vector<long> partial{0};
  collect_left(a, b, ab, partial, lefts);
  std::vector<LabelSetPair> out;
  std::vector<char> used(static_cast<std::size_t>(ab) + 1, 0);
  std::vector<long> chosen;
  for (const auto& left : lefts)
    extend_right(left, ab, b, left.back() + 1, chosen, used, out);
  return out;
}

std::vector<LabelSetPair> enumerate_alpha_graceful(long a, long b) {
  const long ab = checked_edges(a, b, "enumerate_alpha_graceful");
  std::vector<std::vector<long>> lefts;
  std::vector<long> partial{0};
  collect_left(a, b, ab, partial, lefts);
  const long nl = static_cast<long>(lefts.size());
  std::vector<std::vector<LabelSetPair>> buckets(lefts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long idx = 0; idx < nl; ++idx) {
    std::vector<char> used(static_cast<std::size_t>(ab) + 1, 0);
    std::vector<long> chosen;
    extend_right(lefts[static_cast<std::size_t>(idx)], ab, b,
                 lefts[static_cast<std::size_t>(idx)].back() + 1, chosen, used,
                 buckets[static_cast<std::size_t>(idx)]);
  }
  // Left parts were generated in lexicographic order, so concatenating the
  // per-part buckets keeps the full output lexicographic.
  std::vector<LabelSetPair> out;
  for (auto& bucket : buckets)
    out.insert(out.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  return out;
}

LabelSetPair mult(const LabelSetPair& pair, Side side, long c) {
  if (c < 2) throw std::invalid_argument("mult: factor must be >= 2");
  if (!is_alpha_graceful(pair)) throw std::invalid_argument("mult: requires an alpha-graceful pair");
  if (pair.right.back() > LONG_MAX / (2 * c))
    throw resource_limit_error("mult: labels would overflow a machine word");
  LabelSetPair out;
  if (side == Side::left) {
    out.left.reserve(pair.left.size() * static_cast<std::size_t>(c));
    for (long x : pair.left)
      for (long r = 0; r < c; ++r) out.left.push_back(c * x + r);
    out.right.reserve(pair.right.size());
    for (long y : pair.right) out.right.push_back(c * y);
  } else {
    out.left.reserve(pair.left.size());
    for (long x : pair.left) out.left.push_back(c * x);
    out.right.reserve(pair.right.size() * static_cast<std::size_t>(c));
    for (long y : pair.right)
      for (long r = c - 1; r >= 0; --r) out.right.push_back(c * y - r);
  }
  return out;
}

std::optional<LabelSetPair> try_inverse_mult(const LabelSetPair& pair, Side side, long c) {
  if (c < 2) throw std::invalid_argument("try_inverse_mult: factor must be >= 2");
  if (!is_alpha_graceful(pair))
    throw std::invalid_argument("try_inverse_mult: requires an alpha-graceful pair");
  const auto& grouped = (side == Side::left) ? pair.left : pair.right;
  const auto& scaled = (side == Side::left) ? pair.right : pair.left;
  if (grouped.size() % static_cast<std::size_t>(c) != 0)
    throw std::invalid_argument("try_inverse_mult: factor does not divide the part size");

  LabelSetPair out;
  for (long v : scaled) {
    if (v % c != 0) return std::nullopt;
    ((side == Side::left) ? out.right : out.left).push_back(v / c);
  }
  auto& halves = (side == Side::left) ? out.left : out.right;
  for (std::size_t g = 0; g < grouped.size(); g += static_cast<std::size_t>(c)) {
    // A left group is (cx, cx+1, ..., cx+c-1); a right group is
    // (cy-c+1, ..., cy).  Either way: consecutive run with the anchor
    // divisible by c.
    const long anchor = (side == Side::left) ? grouped[g] : grouped[g + static_cast<std::size_t>(c) - 1];
    if (anchor % c != 0) return std::nullopt;
    for (long r = 0; r < c; ++r)
      if (grouped[g + static_cast<std::size_t>(r)] != grouped[g] + r) return std::nullopt;
    halves.push_back(anchor / c);
  }
  if (!is_alpha_graceful(out)) return std::nullopt;
  return out;
}

namespace {

// Shared mixed-radix view of a divisor lattice, for the series recursion.
struct SeriesLattice {
  std::vector<unsigned> radix;
  std::vector<std::size_t> stride;
  std::size_t nodes = 1;
  std::size_t full = 0;

  explicit SeriesLattice(const ExponentMultiset& m) {
    for (unsigned e : m.exponents()) {
      radix.push_back(e + 1);
      stride.push_back(nodes);
      nodes *= e + 1;
    }
    full = nodes - 1;
  }

  // Indices of all nodes strictly dominating v componentwise.
  std::vector<std::size_t> strict_dominators(std::size_t v) const {
    std::vector<unsigned> digits(radix.size());
    std::size_t rest = v;
    for (std::size_t d = 0; d < radix.size(); ++d) {
      digits[d] = static_cast<unsigned>(rest % radix[d]);
      rest /= radix[d];
    }
    std::vector<std::size_t> out;
    std::vector<unsigned> w(radix.size());
    // Odometer over all nodes >= v componentwise.
    for (std::size_t d = 0; d < radix.size(); ++d) w[d] = digits[d];
    while (true) {
      std::size_t idx = 0;
      for (std::size_t d = 0; d < radix.size(); ++d) idx += w[d] * stride[d];
      if (idx != v) out.push_back(idx);
      std::size_t d = 0;
      while (d < radix.size() && w[d] + 1 == radix[d]) {
        w[d] = digits[d];
        ++d;
      }
      if (d == radix.size()) break;
      ++w[d];
    }
    return out;
  }
};

}  // namespace

Int count_canonical_series(const ExponentMultiset& a, const ExponentMultiset& b) {
  SeriesLattice la(a), lb(b);
  const std::size_t cap = max_lattice_nodes();
  if (lb.nodes != 0 && la.nodes > cap / lb.nodes)
    throw resource_limit_error("count_canonical_series: state space exceeds the lattice cap");

  enum : std::size_t { none = 0, left = 1, right = 2 };
  const std::size_t states = la.nodes * lb.nodes * 3;
  std::vector<Int> memo(states);
  std::vector<char> have(states, 0);

  // Dominator lists are reused heavily; precompute them per lattice.
  std::vector<std::vector<std::size_t>> doms_a(la.nodes), doms_b(lb.nodes);
  for (std::size_t v = 0; v < la.nodes; ++v) doms_a[v] = la.strict_dominators(v);
  for (std::size_t v = 0; v < lb.nodes; ++v) doms_b[v] = lb.strict_dominators(v);

  auto key = [&](std::size_t ia, std::size_t ib, std::size_t last) {
    return (ia * lb.nodes + ib) * 3 + last;
  };
  auto rec = [&](auto&& self, std::size_t ia, std::size_t ib, std::size_t last) -> const Int& {
    const std::size_t k = key(ia, ib, last);
    if (have[k]) return memo[k];
    Int res = (ia == la.full && ib == lb.full) ? 1 : 0;
    if (last != left)
      for (std::size_t ja : doms_a[ia]) res += self(self, ja, ib, left);
    if (last != right)
      for (std::size_t jb : doms_b[ib]) res += self(self, ia, jb, right);
    memo[k] = std::move(res);
    have[k] = 1;
    return memo[k];
  };
  return rec(rec, 0, 0, none);
}

Int count_canonical_series(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("count_canonical_series: sizes must be positive");
  return count_canonical_series(ExponentMultiset::of_integer(a), ExponentMultiset::of_integer(b));
}

LabelSetPair apply_series(const CanonicalSeries& series) {
  for (std::size_t s = 0; s < series.size(); ++s) {
    if (series[s].factor < 2) throw std::invalid_argument("apply_series: factors must be >= 2");
    if (s && series[s].side == series[s - 1].side)
      throw std::invalid_argument("apply_series: consecutive steps must alternate sides");
  }
  LabelSetPair pair{{0}, {1}};
  for (const SeriesStep& step : series) {
    if (step.factor > static_cast<std::uint64_t>(LONG_MAX))
      throw std::invalid_argument("apply_series: factor out of range");
    pair = mult(pair, step.side, static_cast<long>(step.factor));
  }
  return pair;
}

LabelSetPair peel_to_unit(LabelSetPair pair) {
  while (pair.left.size() > 1 || pair.right.size() > 1) {
    bool peeled = false;
    for (Side side : {Side::left, Side::right}) {
      const long size = static_cast<long>(side == Side::left ? pair.left.size() : pair.right.size());
      if (size < 2) continue;
      for (long p : prime_factors(size)) {
        if (auto inv = try_inverse_mult(pair, side, p)) {
          pair = *inv;
          peeled = true;
          break;
        }
      }
      if (peeled) break;
    }
    if (!peeled) break;  // caller inspects the residue
  }
  return pair;
}

}  // namespace graceful
