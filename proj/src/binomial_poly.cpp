#include "graceful/binomial_poly.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace graceful {

namespace {

std::atomic<long> g_max_degree{10000};

void check_degree(long d, const char* who) {
  long cap = g_max_degree.load(std::memory_order_relaxed);
  if (d > cap)
    throw resource_limit_error(std::string(who) + ": degree " + std::to_string(d) +
                               " exceeds the configured cap " + std::to_string(cap));
}

std::vector<Rat> trimmed(std::vector<Rat> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

long max_poly_degree() { return g_max_degree.load(std::memory_order_relaxed); }
void set_max_poly_degree(long cap) {
  if (cap < 0) throw std::invalid_argument("degree cap must be nonnegative");
  g_max_degree.store(cap, std::memory_order_relaxed);
}

BinomialPolynomial BinomialPolynomial::constant(const Rat& c) {
  return from_coeffs({c});
}

BinomialPolynomial BinomialPolynomial::from_coeffs(std::vector<Rat> coeffs) {
  coeffs = trimmed(std::move(coeffs));
  check_degree(static_cast<long>(coeffs.size()) - 1, "from_coeffs");
  BinomialPolynomial p;
  p.coeffs_ = std::move(coeffs);
  return p;
}

bool BinomialPolynomial::integer_valued() const {
  for (const Rat& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

BinomialPolynomial from_values(const std::vector<Rat>& values) {
  if (values.empty()) throw std::invalid_argument("from_values: need at least one value");
  check_degree(static_cast<long>(values.size()) - 1, "from_values");
  // Forward difference table: after k passes, diff[0] is the k-th difference
  // of P at 0, which is exactly the basis coefficient c_k.
  std::vector<Rat> diff = values;
  std::vector<Rat> coeffs;
  coeffs.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    coeffs.push_back(diff[0]);
    for (std::size_t i = 0; i + k + 1 < values.size(); ++i) diff[i] = diff[i + 1] - diff[i];
  }
  return BinomialPolynomial::from_coeffs(std::move(coeffs));
}

Rat coeff(const BinomialPolynomial& p, long k) {
  if (k < 0) throw std::invalid_argument("coeff: index must be nonnegative");
  if (k > p.degree()) return 0;
  return p.coeffs()[static_cast<std::size_t>(k)];
}

Rat eval(const BinomialPolynomial& p, const Int& x) {
  Rat acc = 0;
  Rat basis = 1;  // binom(x, k), updated incrementally
  for (long k = 0; k <= p.degree(); ++k) {
    acc += p.coeffs()[static_cast<std::size_t>(k)] * basis;
    basis *= Rat(x - k) / Rat(k + 1);
  }
  acc.canonicalize();
  return acc;
}

BinomialPolynomial shift(const BinomialPolynomial& p, int direction) {
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("shift: direction must be +1 or -1");
  if (p.is_zero()) return p;
  std::vector<Rat> out(p.coeffs());
  long d = p.degree();
  if (direction == 1) {
    for (long k = 0; k < d; ++k) out[k] = out[k] + out[k + 1];
  } else {
    // Invert c'_k = c_k + c_{k+1} from the top down.
    for (long k = d - 1; k >= 0; --k) out[k] = out[k] - out[k + 1];
  }
  return BinomialPolynomial::from_coeffs(std::move(out));
}

BinomialPolynomial multiply(const BinomialPolynomial& p, const BinomialPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  long d = p.degree() + q.degree();
  check_degree(d, "multiply");
  std::vector<Rat> values(static_cast<std::size_t>(d) + 1);
  for (long x = 0; x <= d; ++x)
    values[static_cast<std::size_t>(x)] = eval(p, x) * eval(q, x);
  return from_values(values);
}

BinomialPolynomial add(const BinomialPolynomial& p, const BinomialPolynomial& q) {
  std::vector<Rat> out(std::max(p.coeffs().size(), q.coeffs().size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < p.coeffs().size()) out[k] += p.coeffs()[k];
    if (k < q.coeffs().size()) out[k] += q.coeffs()[k];
  }
  return BinomialPolynomial::from_coeffs(std::move(out));
}

BinomialPolynomial scale(const BinomialPolynomial& p, const Rat& c) {
  if (c == 0) return {};
  std::vector<Rat> out(p.coeffs());
  for (Rat& x : out) x *= c;
  return BinomialPolynomial::from_coeffs(std::move(out));
}

Rat circle(const BinomialPolynomial& p, const BinomialPolynomial& q) {
  Rat acc = 0;
  long d = std::min(p.degree(), q.degree());
  for (long k = 0; k <= d; ++k) acc += p.coeffs()[static_cast<std::size_t>(k)] *
                                       q.coeffs()[static_cast<std::size_t>(k)];
  return acc;
}

BinomialPolynomial basis_binom_shifted(long m, long d) {
  if (d < 0) throw std::invalid_argument("basis_binom_shifted: degree must be nonnegative");
  check_degree(d, "basis_binom_shifted");
  if (m >= 0) {
    // binom(x+m, d) = sum_i binom(m, d-i) * binom(x, i)
    std::vector<Rat> coeffs(static_cast<std::size_t>(d) + 1);
    for (long i = 0; i <= d; ++i) coeffs[static_cast<std::size_t>(i)] = Rat(binom(m, d - i));
    return BinomialPolynomial::from_coeffs(std::move(coeffs));
  }
  // Negative m: start from binom(x, d) and shift down |m| times.
  std::vector<Rat> coeffs(static_cast<std::size_t>(d) + 1);
  coeffs.back() = 1;
  BinomialPolynomial p = BinomialPolynomial::from_coeffs(std::move(coeffs));
  for (long s = 0; s < -m; ++s) p = shift(p, -1);
  return p;
}

BinomialPolynomial F_of(const ExponentMultiset& a) {
  BinomialPolynomial p = BinomialPolynomial::constant(1);
  for (unsigned e : a.exponents()) p = multiply(p, basis_binom_shifted(e, e));
  return p;
}

Rat circle_binom_shifted_closed(long m, long n, const BinomialPolynomial& p) {
  if (m < 0 || n < 0 || m > n)
    throw std::invalid_argument("circle_binom_shifted_closed: need 0 <= m <= n");
  Rat acc = 0;
  for (long i = 0; i <= n - m; ++i) {
    Rat term = Rat(binom(n - m, i)) * eval(p, n - i);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

Rat circle_binom_square_closed(long n, const BinomialPolynomial& p) {
  if (n < 0) throw std::invalid_argument("circle_binom_square_closed: n must be nonnegative");
  Rat acc = 0;
  for (long i = n; i <= 2 * n; ++i) {
    Rat term = Rat(binom(n, i - n) * binom(i, n)) * eval(p, i);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace graceful
