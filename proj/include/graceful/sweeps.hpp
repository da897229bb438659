#ifndef GRACEFUL_SWEEPS_HPP
#define GRACEFUL_SWEEPS_HPP

#include <string>
#include <vector>

#include "graceful/arith.hpp"
#include "graceful/exponent_multiset.hpp"

namespace graceful {

struct MainTableRow {
  long n = 0;
  Int count;  // labeling count at exponent profile {n,n} on both sides
  Int s4;     // alternating fourth-power binomial sum at n
};

// Rows n = 0 .. n_max comparing the two counts side by side.
std::vector<MainTableRow> main_table(long n_max);
std::vector<MainTableRow> main_table_serial(long n_max);

struct SweepResult {
  long pairs_checked = 0;
  long mismatches = 0;
  std::string detail;
};

// Compares the series-counting route against the closed formula on every
// distinct unordered pair of exponent profiles of the integers 1 .. max_value.
SweepResult series_formula_sweep(long max_value);
SweepResult series_formula_sweep_serial(long max_value);

}  // namespace graceful

#endif
