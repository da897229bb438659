#include "graceful/hyperterm.hpp"

#include <cstdlib>
#include <stdexcept>

namespace graceful {

BivariatePoly LinearForm::as_poly() const {
  BivariatePoly p = BivariatePoly::from_const(c0);
  p += BivariatePoly::monomial(ci, 1, 0);
  p += BivariatePoly::monomial(cn, 0, 1);
  return p;
}

std::string LinearForm::to_string() const { return as_poly().to_string(); }

LinearForm to_linear_form(const BivariatePoly& p) {
  if (p.deg_i() > 1 || p.deg_n() > 1 || p.coefficient(1, 1) != 0)
    throw std::invalid_argument("expression is not linear in i and n: " + p.to_string());
  const Int ci = p.coefficient(1, 0), cn = p.coefficient(0, 1), c0 = p.coefficient(0, 0);
  if (!ci.fits_slong_p() || !cn.fits_slong_p() || !c0.fits_slong_p())
    throw std::invalid_argument("linear form coefficients exceed machine range");
  return {ci.get_si(), cn.get_si(), c0.get_si()};
}

HypergeometricTerm HypergeometricTerm::shifted(long di, long dn) const {
  HypergeometricTerm out{scale, sign.shifted(di, dn), {}};
  out.factors.reserve(factors.size());
  for (const BinomialFactor& f : factors)
    out.factors.push_back({f.top.shifted(di, dn), f.bottom.shifted(di, dn), f.power});
  return out;
}

Int eval_term(const HypergeometricTerm& t, long i, long n) {
  Int acc = t.scale;
  if (std::labs(t.sign.value(i, n)) % 2 == 1) acc = -acc;
  for (const BinomialFactor& f : t.factors) {
    const Int b = binom(Int(f.top.value(i, n)), f.bottom.value(i, n));
    if (b == 0) return 0;
    acc *= pow(b, f.power);
  }
  return acc;
}

namespace {

// Multiplies `side` by ((linear form) as polynomial)^power.
void push_factor(BivariatePoly& side, const LinearForm& form, unsigned power) {
  const BivariatePoly p = form.as_poly();
  for (unsigned s = 0; s < power; ++s) side = side * p;
}

void push_den_factor(PolyFraction& frac, const LinearForm& form, unsigned power) {
  push_factor(frac.den, form, power);
  for (const LinearForm& f : frac.den_factors)
    if (f == form) return;
  frac.den_factors.push_back(form);
}

}  // namespace

PolyFraction term_ratio(const HypergeometricTerm& t1, const HypergeometricTerm& t2) {
  if (t1.factors.size() != t2.factors.size())
    throw std::invalid_argument("term_ratio: factor counts differ");
  if (t1.scale == 0 || t2.scale == 0) throw std::invalid_argument("term_ratio: zero scale");

  // The sign ratio must be a constant, i.e. the exponent difference must
  // have even i- and n-coefficients.
  const long dci = t1.sign.ci - t2.sign.ci;
  const long dcn = t1.sign.cn - t2.sign.cn;
  if (dci % 2 != 0 || dcn % 2 != 0)
    throw std::invalid_argument("term_ratio: sign exponents differ non-constantly");
  const bool negate = std::labs(t1.sign.c0 - t2.sign.c0) % 2 == 1;

  PolyFraction out{BivariatePoly::from_const(negate ? -t1.scale : t1.scale),
                   BivariatePoly::from_const(t2.scale),
                   {}};

  for (std::size_t idx = 0; idx < t1.factors.size(); ++idx) {
    const BinomialFactor& f1 = t1.factors[idx];
    const BinomialFactor& f2 = t2.factors[idx];
    if (f1.power != f2.power || f1.top.ci != f2.top.ci || f1.top.cn != f2.top.cn ||
        f1.bottom.ci != f2.bottom.ci || f1.bottom.cn != f2.bottom.cn)
      throw std::invalid_argument("term_ratio: factor " + std::to_string(idx) + " does not pair");
    const long st = f1.top.c0 - f2.top.c0;      // top offset
    const long sb = f1.bottom.c0 - f2.bottom.c0;  // bottom offset
    const LinearForm t = f2.top, b = f2.bottom;

    // Step 1: binom(t, b+sb) / binom(t, b), telescoping one bottom unit at a
    // time: binom(T,B+1)/binom(T,B) = (T-B)/(B+1).
    for (long u = 1; u <= sb; ++u) {
      push_factor(out.num, {t.ci - b.ci, t.cn - b.cn, t.c0 - b.c0 - u + 1}, f1.power);
      push_den_factor(out, {b.ci, b.cn, b.c0 + u}, f1.power);
    }
    for (long u = 0; u < -sb; ++u) {
      // binom(T,B-1)/binom(T,B) = B/(T-B+1)
      push_factor(out.num, {b.ci, b.cn, b.c0 - u}, f1.power);
      push_den_factor(out, {t.ci - b.ci, t.cn - b.cn, t.c0 - b.c0 + u + 1}, f1.power);
    }
    // Step 2: binom(t+st, B') / binom(t, B') with B' = b+sb, one top unit at
    // a time: binom(T+1,B)/binom(T,B) = (T+1)/(T+1-B).
    const LinearForm bp{b.ci, b.cn, b.c0 + sb};
    for (long u = 1; u <= st; ++u) {
      push_factor(out.num, {t.ci, t.cn, t.c0 + u}, f1.power);
      push_den_factor(out, {t.ci - bp.ci, t.cn - bp.cn, t.c0 + u - bp.c0}, f1.power);
    }
    for (long u = 0; u < -st; ++u) {
      // binom(T-1,B)/binom(T,B) = (T-B)/T
      push_factor(out.num, {t.ci - bp.ci, t.cn - bp.cn, t.c0 - u - bp.c0}, f1.power);
      push_den_factor(out, {t.ci, t.cn, t.c0 - u}, f1.power);
    }
  }
  return out;
}

PolyFraction shift_quotient(const HypergeometricTerm& t, long di, long dn) {
  if (di == 0 && dn == 0) throw std::invalid_argument("shift_quotient: shift must be nonzero");
  return term_ratio(t.shifted(di, dn), t);
}

}  // namespace graceful
