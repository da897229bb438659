#include "graceful/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "graceful/binomial_poly.hpp"
#include "graceful/certificate.hpp"
#include "graceful/counting.hpp"
#include "graceful/labeling.hpp"
#include "graceful/recurrences.hpp"
#include "graceful/sweeps.hpp"

namespace graceful {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string note;
};

void fail(Outcome& o, const std::string& msg) {
  o.ok = false;
  if (o.note.empty()) o.note = msg;
}

// All partitions (descending parts) with sum <= cap, empty one included.
void gen_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                    std::vector<std::vector<unsigned>>& out) {
  out.push_back(cur);
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<unsigned>> partitions_up_to(unsigned cap) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  gen_partitions(cap, cap, cur, out);
  return out;
}

Outcome headline_counts() {
  Outcome o;
  const long expected[] = {14, 786, 61340};
  for (unsigned n = 1; n <= 3; ++n) {
    const auto t0 = Clock::now();
    const ExponentMultiset a({n, n});
    const Int v = count_A_circle(a, a);
    const double dt = seconds_since(t0);
    if (v != expected[n - 1])
      fail(o, "count at profile {" + std::to_string(n) + "," + std::to_string(n) + "} is " +
                  v.get_str() + ", expected " + std::to_string(expected[n - 1]));
    if (dt >= 1.0) fail(o, "one headline count took " + std::to_string(dt) + " s; budget is 1 s");
  }
  return o;
}

Outcome main_table_sweep(bool parallel) {
  Outcome o;
  const auto rows = parallel ? main_table(40) : main_table_serial(40);
  for (const auto& row : rows)
    if (row.count != row.s4) {
      fail(o, "counts disagree at n = " + std::to_string(row.n) + ": " + row.count.get_str() +
                  " vs " + row.s4.get_str());
      break;
    }
  return o;
}

Outcome small_scale_oracles() {
  Outcome o;
  for (long a = 1; a <= 20; ++a)
    for (long b = 1; a * b <= 20; ++b) {
      const Int enumerated = static_cast<long>(enumerate_alpha_graceful(a, b).size());
      const Int series = count_canonical_series(static_cast<std::uint64_t>(a),
                                                static_cast<std::uint64_t>(b));
      const auto ma = ExponentMultiset::of_integer(static_cast<std::uint64_t>(a));
      const auto mb = ExponentMultiset::of_integer(static_cast<std::uint64_t>(b));
      const Int circle_count = count_A_circle(ma, mb);
      const Int interleave_count = count_A_interleave(ma, mb);
      if (enumerated != series || series != circle_count || circle_count != interleave_count) {
        fail(o, "routes disagree at K(" + std::to_string(a) + "," + std::to_string(b) +
                    "): enumerated " + enumerated.get_str() + ", series " + series.get_str() +
                    ", formulas " + circle_count.get_str() + "/" + interleave_count.get_str());
        return o;
      }
    }
  return o;
}

Outcome medium_scale_sweep(bool parallel) {
  Outcome o;
  const SweepResult r = parallel ? series_formula_sweep(120) : series_formula_sweep_serial(120);
  if (r.mismatches != 0) fail(o, r.detail);
  return o;
}

Outcome prime_power_and_central(bool /*parallel*/) {
  Outcome o;
  const auto parts = partitions_up_to(6);
  for (unsigned n = 1; n <= 6; ++n) {
    const ExponentMultiset left({n});
    for (const auto& p : parts) {
      const ExponentMultiset b(p);
      if (count_A_prime_power(n, b) != count_A_circle(left, b)) {
        fail(o, "prime-power closed form fails at n = " + std::to_string(n) + ", profile " +
                    b.to_string());
        return o;
      }
    }
  }
  for (long n = 0; n <= 40; ++n) {
    const ExponentMultiset a =
        n == 0 ? ExponentMultiset{} : ExponentMultiset({static_cast<unsigned>(n)});
    const Int c = count_A_circle(a, a);
    if (c != binom(Int(2 * n), n) || c != debruijn_S(2, static_cast<unsigned>(n))) {
      fail(o, "central-binomial family fails at n = " + std::to_string(n));
      return o;
    }
  }
  return o;
}

Outcome certificate_battery(const AcceptanceOptions& options) {
  Outcome o;
  VerifyOptions vo;
  vo.parallel = options.parallel;
  auto run_cert = [&](const char* file, std::optional<long> k) {
    const CertificateSpec cert = load_certificate(options.cert_dir + "/" + file, k);
    const VerificationReport rep = verify_certificate(cert, vo);
    if (!rep.passed()) fail(o, rep.to_text());
    return cert;
  };
  for (long k = 0; k <= 8; ++k) run_cert("phi.json", k);
  for (long k = 0; k <= 8; ++k) run_cert("psi.json", k);
  const CertificateSpec tau = run_cert("tau.json", std::nullopt);
  run_cert("sigma.json", std::nullopt);
  // The tau claim starts at n = 1; its denominator vanishes at n = 0, so
  // nothing is asserted there.
  if (tau.n_min != 1 || tau.cert_den.eval(0, 0) != 0)
    fail(o, "expected the tau certificate to start at n = 1 with a denominator zero at n = 0");
  return o;
}

Outcome recurrence_battery() {
  Outcome o;
  for (long k = 0; k <= 8; ++k) {
    const auto rphi = numeric_recurrence_check(SumFamily::phi, k, 0, 30);
    if (!rphi.passed) fail(o, rphi.detail);
    const auto rpsi = numeric_recurrence_check(SumFamily::psi, k, 0, 30);
    if (!rpsi.passed) fail(o, rpsi.detail);
  }
  const auto rt = numeric_recurrence_check(SumFamily::t, std::nullopt, 1, 50);
  if (!rt.passed) fail(o, rt.detail);
  if (direct_sum(SumFamily::t, std::nullopt, 1) != 14 ||
      direct_sum(SumFamily::t, std::nullopt, 2) != 786)
    fail(o, "t(1), t(2) are not 14, 786");
  const auto rs = numeric_recurrence_check(SumFamily::s4, std::nullopt, 0, 50);
  if (!rs.passed) fail(o, rs.detail);
  return o;
}

Outcome identity_battery() {
  Outcome o;
  const auto a = direct_identity_check(Identity::A, 10, 10);
  if (!a.passed) fail(o, a.detail);
  for (long k = 0; k <= 10; ++k) {
    const auto s = singular_case_check(k);
    if (!s.passed) fail(o, s.detail);
  }
  const auto b = direct_identity_check(Identity::B, 0, 30);
  if (!b.passed) fail(o, b.detail);
  if (!b.n0_inequality_ok || b.t0 != 2 || b.s0 != 1)
    fail(o, "the n = 0 probe did not produce the required 2 vs 1 inequality");
  return o;
}

void basis_properties(Outcome& o) {
  const std::vector<BinomialPolynomial> samples = {
      F_of(ExponentMultiset({2, 1})),
      basis_binom_shifted(3, 4),
      BinomialPolynomial::from_coeffs({Rat(1), Rat(-2), Rat(3, 7)}),
  };
  for (const auto& p : samples) {
    std::vector<Rat> values;
    for (long x = 0; x <= std::max(p.degree(), 0L); ++x) values.push_back(eval(p, x));
    if (!(from_values(values) == p)) fail(o, "interpolation round-trip failed");
    if (!(shift(shift(p, +1), -1) == p) || !(shift(shift(p, -1), +1) == p))
      fail(o, "shift round-trip failed");
  }
  for (long m = 0; m <= 5; ++m)
    for (long d = 0; d <= 5; ++d)
      for (long k = 0; k <= d; ++k)
        if (coeff(basis_binom_shifted(m, d), k) != Rat(binom(Int(m), d - k)))
          fail(o, "shifted-basis coefficient identity failed");
  for (long m = -5; m <= 5; ++m)
    for (long d = 0; d <= 4; ++d)
      for (long x = -8; x <= 8; ++x)
        if (eval(basis_binom_shifted(m, d), x) != Rat(binom(Int(x + m), d)))
          fail(o, "shifted-basis evaluation failed");
  if (from_values({Rat(1), Rat(1), Rat(1)}).coeffs() != std::vector<Rat>{Rat(1)})
    fail(o, "constant interpolation failed");
  if (from_values({Rat(0), Rat(1), Rat(4), Rat(9)}).coeffs() !=
      std::vector<Rat>({Rat(0), Rat(1), Rat(2)}))
    fail(o, "square interpolation failed");
  if (from_values({Rat(1), Rat(4), Rat(9)}).coeffs() != std::vector<Rat>({Rat(1), Rat(3), Rat(2)}))
    fail(o, "shifted-square interpolation failed");
}

void circle_properties(Outcome& o) {
  const auto P = F_of(ExponentMultiset({2}));
  const auto Q = basis_binom_shifted(-1, 3);
  const auto R = F_of(ExponentMultiset({1, 1}));
  if (circle(add(P, Q), R) != circle(P, R) + circle(Q, R)) fail(o, "circle additivity failed");
  if (circle(scale(P, Rat(5, 3)), R) != Rat(5, 3) * circle(P, R)) fail(o, "circle scaling failed");
  if (circle(P, R) != circle(R, P)) fail(o, "circle symmetry failed");
  for (long n = 0; n <= 4; ++n) {
    for (long m = 0; m <= n; ++m)
      if (circle_binom_shifted_closed(m, n, R) != circle(basis_binom_shifted(m, n), R))
        fail(o, "closed form for the shifted basis failed");
    const auto sq = multiply(basis_binom_shifted(n, n), basis_binom_shifted(n, n));
    if (circle_binom_square_closed(n, R) != circle(sq, R))
      fail(o, "closed form for the squared basis failed");
  }
}

void divisor_sum_properties(Outcome& o) {
  for (const auto& a : partitions_up_to(6)) {
    std::vector<unsigned> e(a.size(), 0);
    BinomialPolynomial total;
    while (true) {
      std::vector<unsigned> nonzero;
      for (unsigned v : e)
        if (v > 0) nonzero.push_back(v);
      total = add(total, shift(F_of(ExponentMultiset(std::move(nonzero))), -1));
      std::size_t pos = 0;
      while (pos < e.size() && e[pos] == a[pos]) e[pos++] = 0;
      if (pos == e.size()) break;
      ++e[pos];
    }
    if (!(total == F_of(ExponentMultiset(a)))) {
      fail(o, "divisor-sum identity failed at profile " + ExponentMultiset(a).to_string());
      return;
    }
  }
}

void transform_properties(Outcome& o) {
  const LabelSetPair unit{{0}, {1}};
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; a * b <= 12; ++b)
      for (const auto& pr : enumerate_alpha_graceful(a, b))
        if (!(peel_to_unit(pr) == unit)) {
          fail(o, "peeling failed for " + pr.to_string());
          return;
        }
  for (const auto& pr : enumerate_alpha_graceful(2, 3)) {
    const LabelSetPair q = mult(pr, Side::left, 2);
    if (!is_alpha_graceful(q)) fail(o, "left multiplication left the class");
    const auto back = try_inverse_mult(q, Side::left, 2);
    if (!back || !(*back == pr)) fail(o, "left inverse failed");
    const LabelSetPair r = mult(pr, Side::right, 3);
    if (!is_alpha_graceful(r)) fail(o, "right multiplication left the class");
    const auto rback = try_inverse_mult(r, Side::right, 3);
    if (!rback || !(*rback == pr)) fail(o, "right inverse failed");
  }
  const CanonicalSeries series{{Side::left, 2}, {Side::right, 2}, {Side::left, 3}};
  const LabelSetPair built = apply_series(series);
  if (!is_alpha_graceful(built) || built.left.size() != 6 || built.right.size() != 2)
    fail(o, "series application failed");
  if (!(peel_to_unit(built) == unit)) fail(o, "applied series does not peel back");
}

void quotient_properties(Outcome& o) {
  HypergeometricTerm t;
  t.scale = 1;
  t.sign = {1, 0, 5};
  t.factors = {{{0, 0, 5}, {1, 0, 0}, 1}, {{1, 1, 0}, {0, 1, 0}, 2}};
  const std::pair<long, long> shifts[] = {{1, 0}, {0, 1}, {0, 2}, {1, 1}};
  for (const auto& [di, dn] : shifts) {
    const PolyFraction q = shift_quotient(t, di, dn);
    for (long i = -4; i <= 8; ++i)
      for (long n = -4; n <= 8; ++n)
        if (eval_term(t.shifted(di, dn), i, n) * q.den.eval(i, n) !=
            eval_term(t, i, n) * q.num.eval(i, n)) {
          fail(o, "shift quotient unsound at (i=" + std::to_string(i) +
                      ", n=" + std::to_string(n) + ")");
          return;
        }
  }
  HypergeometricTerm base = t;
  base.factors[1].top.c0 = 4;
  base.factors[1].bottom.c0 = 4;
  const PolyFraction h = term_ratio(base, t);
  for (long i = -4; i <= 8; ++i)
    for (long n = -4; n <= 8; ++n)
      if (eval_term(base, i, n) * h.den.eval(i, n) != eval_term(t, i, n) * h.num.eval(i, n)) {
        fail(o, "term ratio unsound at (i=" + std::to_string(i) + ", n=" + std::to_string(n) + ")");
        return;
      }
}

Outcome property_battery() {
  Outcome o;
  basis_properties(o);
  circle_properties(o);
  divisor_sum_properties(o);
  transform_properties(o);
  quotient_properties(o);
  return o;
}

}  // namespace

int run_acceptance(std::ostream& out, const AcceptanceOptions& options) {
  struct Criterion {
    const char* what;
    double limit_s;  // 0 = no budget pinned
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"headline counts 14, 786, 61340 (each under 1 s)", 3.0, headline_counts},
      {"square-profile count equals the fourth-power sum for n <= 40", 30.0,
       [&] { return main_table_sweep(options.parallel); }},
      {"enumeration, series count, and both formulas agree for ab <= 20", 60.0,
       small_scale_oracles},
      {"series count matches the closed formula for all profiles up to 120", 60.0,
       [&] { return medium_scale_sweep(options.parallel); }},
      {"prime-power closed form and the central-binomial family", 0.0,
       [&] { return prime_power_and_central(options.parallel); }},
      {"telescoping certificates verify (phi, psi for k <= 8; tau; sigma)", 120.0,
       [&] { return certificate_battery(options); }},
      {"direct sums satisfy their second-order recurrences", 0.0, recurrence_battery},
      {"sum identities, singular cases, and the n = 0 inequality", 0.0, identity_battery},
      {"library property batteries (basis, circle, divisors, transforms, quotients)", 120.0,
       property_battery},
  };

  int failures = 0;
  for (std::size_t idx = 0; idx < criteria.size(); ++idx) {
    const auto& c = criteria[idx];
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double dt = seconds_since(t0);
    const bool timed_out = c.limit_s > 0 && dt >= c.limit_s;
    const bool pass = o.ok && !timed_out;
    out << (pass ? "[PASS] " : "[FAIL] ") << idx + 1 << ". " << c.what << " (" << std::fixed
        << std::setprecision(2) << dt << " s)\n";
    if (!o.ok) out << "       " << o.note << "\n";
    if (timed_out)
      out << "       exceeded the " << std::setprecision(0) << c.limit_s << " s budget\n";
    if (!pass) ++failures;
  }
  out << (failures == 0 ? "acceptance: all criteria passed\n"
                        : "acceptance: " + std::to_string(failures) + " criteria failed\n");
  return failures;
}

}  // namespace graceful
