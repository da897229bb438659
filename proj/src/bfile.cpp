#include "graceful/bfile.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace graceful {

std::string format_bfile(long n_start, const std::vector<Int>& values) {
  std::ostringstream out;
  long n = n_start;
  for (const Int& v : values) out << n++ << ' ' << v.get_str() << '\n';
  return out.str();
}

std::vector<std::pair<long, Int>> parse_bfile(const std::string& text) {
  std::vector<std::pair<long, Int>> entries;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    long n = 0;
    std::string value, extra;
    if (!(fields >> n >> value) || (fields >> extra))
      throw std::invalid_argument("bad sequence line " + std::to_string(lineno) + ": " + line);
    Int v;
    try {
      v = Int(value);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad value on sequence line " + std::to_string(lineno) + ": " +
                                  value);
    }
    if (!entries.empty() && n <= entries.back().first)
      throw std::invalid_argument("indices not ascending at line " + std::to_string(lineno));
    entries.emplace_back(n, std::move(v));
  }
  return entries;
}

}  // namespace graceful
