#ifndef GRACEFUL_BFILE_HPP
#define GRACEFUL_BFILE_HPP

#include <string>
#include <utility>
#include <vector>

#include "graceful/arith.hpp"

namespace graceful {

// Sequence-file lines "n a(n)", one per value, indices ascending from
// n_start, newline-terminated, no trailing whitespace.
std::string format_bfile(long n_start, const std::vector<Int>& values);

// Parses the format back.  Blank lines and '#' comment lines are ignored.
// Malformed lines or non-ascending indices throw std::invalid_argument.
std::vector<std::pair<long, Int>> parse_bfile(const std::string& text);

}  // namespace graceful

#endif
