#include "graceful/poly_parser.hpp"

#include <atomic>
#include <cctype>

namespace graceful {

namespace {

std::atomic<int> g_max_exponent{512};

class Parser {
 public:
  Parser(std::string_view text, const std::map<std::string, long>& bindings)
      : text_(text), bindings_(bindings) {}

  BivariatePoly run() {
    BivariatePoly p = poly();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  BivariatePoly poly() {
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = (take() == '-');
    BivariatePoly acc = term();
    if (negative) acc = -acc;
    while (true) {
      skip_space();
      if (peek() == '+' || peek() == '-') {
        const bool minus = (take() == '-');
        BivariatePoly t = term();
        if (minus)
          acc -= t;
        else
          acc += t;
      } else {
        return acc;
      }
    }
  }

  BivariatePoly term() {
    BivariatePoly acc = factor();
    while (true) {
      skip_space();
      if (peek() == '*') {
        take();
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  BivariatePoly factor() {
    BivariatePoly b = base();
    skip_space();
    if (peek() != '^') return b;
    take();
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an unsigned integer exponent after '^'");
    long e = 0;
    const int cap = g_max_exponent.load(std::memory_order_relaxed);
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + (take() - '0');
      if (e > cap) fail("exponent exceeds the configured cap of " + std::to_string(cap));
    }
    BivariatePoly acc = BivariatePoly::from_const(1);
    for (long s = 0; s < e; ++s) acc = acc * b;
    return acc;
  }

  BivariatePoly base() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      take();
      BivariatePoly p = poly();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      take();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
      return BivariatePoly::from_const(Int(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += take();
      if (name == "i") return BivariatePoly::monomial(1, 1, 0);
      if (name == "n") return BivariatePoly::monomial(1, 0, 1);
      if (auto it = bindings_.find(name); it != bindings_.end())
        return BivariatePoly::from_const(it->second);
      fail("unknown identifier '" + name + "'");
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
    return {};  // unreachable
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  char take() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  std::string_view text_;
  const std::map<std::string, long>& bindings_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

BivariatePoly parse_polynomial(std::string_view text, const std::map<std::string, long>& bindings) {
  return Parser(text, bindings).run();
}

int max_parse_exponent() { return g_max_exponent.load(std::memory_order_relaxed); }
void set_max_parse_exponent(int cap) {
  if (cap < 1) throw std::invalid_argument("exponent cap must be positive");
  g_max_exponent.store(cap, std::memory_order_relaxed);
}

}  // namespace graceful
