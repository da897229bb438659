#include "graceful/bivariate.hpp"

#include <algorithm>
#include <vector>

#include "graceful/arith.hpp"

namespace graceful {

BivariatePoly BivariatePoly::from_const(Int c) { return monomial(std::move(c), 0, 0); }

BivariatePoly BivariatePoly::monomial(Int c, int deg_i, int deg_n) {
  BivariatePoly p;
  if (c != 0) p.terms_.emplace(Key{deg_i, deg_n}, std::move(c));
  return p;
}

int BivariatePoly::deg_i() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BivariatePoly::deg_n() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

Int BivariatePoly::coefficient(int deg_i, int deg_n) const {
  auto it = terms_.find(Key{deg_i, deg_n});
  return it == terms_.end() ? Int(0) : it->second;
}

void BivariatePoly::insert(Key k, Int c) {
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (it->second == 0) {
    terms_.erase(it);
  }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [k, c] : o.terms_) insert(k, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [k, c] : o.terms_) insert(k, -c);
  return *this;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.insert({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

Int BivariatePoly::eval(const Int& i, const Int& n) const {
  const int di = deg_i(), dn = deg_n();
  if (di < 0) return 0;
  std::vector<Int> pi(static_cast<std::size_t>(di) + 1), pn(static_cast<std::size_t>(dn) + 1);
  pi[0] = 1;
  for (int e = 1; e <= di; ++e) pi[static_cast<std::size_t>(e)] = pi[static_cast<std::size_t>(e - 1)] * i;
  pn[0] = 1;
  for (int e = 1; e <= dn; ++e) pn[static_cast<std::size_t>(e)] = pn[static_cast<std::size_t>(e - 1)] * n;
  Int acc = 0;
  for (const auto& [k, c] : terms_)
    acc += c * pi[static_cast<std::size_t>(k.first)] * pn[static_cast<std::size_t>(k.second)];
  return acc;
}

BivariatePoly BivariatePoly::shift_i(long delta) const {
  if (delta == 0) return *this;
  BivariatePoly out;
  for (const auto& [k, c] : terms_) {
    // i^e -> sum_j binom(e,j) delta^(e-j) i^j
    Int scale = 1;
    for (int j = k.first; j >= 0; --j) {
      out.insert({j, k.second}, c * binom(k.first, k.first - j) * scale);
      scale *= delta;
    }
  }
  return out;
}

BivariatePoly BivariatePoly::substitute_i(const Int& value) const {
  BivariatePoly out;
  for (const auto& [k, c] : terms_) {
    Int p = 1;
    for (int e = 0; e < k.first; ++e) p *= value;
    out.insert({0, k.second}, c * p);
  }
  return out;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  // Descending (deg_i, deg_n) reads naturally; the map is ascending.
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Int abs_c = c < 0 ? Int(-c) : c;
    if (s.empty())
      s += (c < 0) ? "-" : "";
    else
      s += (c < 0) ? " - " : " + ";
    std::string mono;
    if (k.first > 0) mono += (k.first == 1) ? "i" : "i^" + std::to_string(k.first);
    if (k.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += (k.second == 1) ? "n" : "n^" + std::to_string(k.second);
    }
    if (mono.empty())
      s += abs_c.get_str();
    else if (abs_c == 1)
      s += mono;
    else
      s += abs_c.get_str() + "*" + mono;
  }
  return s;
}

}  // namespace graceful
