#include "graceful/sweeps.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "graceful/counting.hpp"
#include "graceful/labeling.hpp"

namespace graceful {

namespace {

ExponentMultiset square_profile(long n) {
  if (n == 0) return ExponentMultiset{};
  const auto e = static_cast<unsigned>(n);
  return ExponentMultiset{{e, e}};
}

std::vector<MainTableRow> table_impl(long n_max, bool parallel) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  std::vector<MainTableRow> rows(static_cast<std::size_t>(n_max) + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
  (void)parallel;
#endif
  for (long n = 0; n <= n_max; ++n) {
    const ExponentMultiset a = square_profile(n);
    rows[static_cast<std::size_t>(n)] = {n, count_A_circle(a, a),
                                         debruijn_S(4, static_cast<unsigned>(n))};
  }
  return rows;
}

SweepResult sweep_impl(long max_value, bool parallel) {
  if (max_value < 1) throw std::invalid_argument("max_value must be at least 1");
  std::vector<ExponentMultiset> profiles;
  for (long v = 1; v <= max_value; ++v) {
    ExponentMultiset m = ExponentMultiset::of_integer(static_cast<std::uint64_t>(v));
    if (std::find(profiles.begin(), profiles.end(), m) == profiles.end())
      profiles.push_back(std::move(m));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < profiles.size(); ++i)
    for (std::size_t j = i; j < profiles.size(); ++j) pairs.emplace_back(i, j);

  SweepResult result;
  result.pairs_checked = static_cast<long>(pairs.size());
  std::vector<char> bad(pairs.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
  (void)parallel;
#endif
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const ExponentMultiset& a = profiles[pairs[p].first];
    const ExponentMultiset& b = profiles[pairs[p].second];
    if (count_canonical_series(a, b) != count_A_circle(a, b)) bad[p] = 1;
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (!bad[p]) continue;
    ++result.mismatches;
    if (result.detail.empty())
      result.detail = "series count disagrees with the formula at " +
                      profiles[pairs[p].first].to_string() + " x " +
                      profiles[pairs[p].second].to_string();
  }
  if (result.detail.empty())
    result.detail = "series count matches the formula on all " +
                    std::to_string(result.pairs_checked) + " profile pairs";
  return result;
}

}  // namespace

std::vector<MainTableRow> main_table(long n_max) { return table_impl(n_max, true); }

std::vector<MainTableRow> main_table_serial(long n_max) { return table_impl(n_max, false); }

SweepResult series_formula_sweep(long max_value) { return sweep_impl(max_value, true); }

SweepResult series_formula_sweep_serial(long max_value) { return sweep_impl(max_value, false); }

}  // namespace graceful
