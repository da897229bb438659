#include "graceful/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "graceful/poly_parser.hpp"

namespace graceful {

namespace {

using nlohmann::json;

LinearForm parse_linear(const std::string& text, const std::map<std::string, long>& bindings) {
  return to_linear_form(parse_polynomial(text, bindings));
}

HypergeometricTerm parse_term(const json& j, const std::map<std::string, long>& bindings) {
  HypergeometricTerm t;
  t.scale = j.value("scale", 1L);
  if (t.scale == 0) throw std::invalid_argument("term scale must be nonzero");
  t.sign = parse_linear(j.at("sign").get<std::string>(), bindings);
  for (const auto& f : j.at("factors")) {
    BinomialFactor bf;
    bf.top = parse_linear(f.at("top").get<std::string>(), bindings);
    bf.bottom = parse_linear(f.at("bottom").get<std::string>(), bindings);
    bf.power = f.value("power", 1u);
    if (bf.power == 0) throw std::invalid_argument("factor power must be positive");
    t.factors.push_back(bf);
  }
  if (t.factors.empty()) throw std::invalid_argument("term needs at least one binomial factor");
  return t;
}

// c_j(n) for polynomials that depend on n only.
Int eval_in_n(const BivariatePoly& p, long n) { return p.eval(0, n); }

// Mathematical floor division.
long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

CertificateSpec load_certificate(const std::string& path, std::optional<long> k) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open certificate file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("certificate file " + path + ": " + e.what());
  }
  try {
    CertificateSpec c;
    c.name = j.at("name").get<std::string>();
    c.description = j.value("description", std::string{});
    const auto params = j.value("parameters", std::vector<std::string>{});
    if (!params.empty() && params != std::vector<std::string>{"k"})
      throw std::invalid_argument("unsupported parameter list");
    c.has_parameter_k = !params.empty();
    std::map<std::string, long> bindings;
    if (c.has_parameter_k) {
      if (!k) throw std::invalid_argument("certificate '" + c.name + "' needs a value for k");
      if (*k < 0) throw std::invalid_argument("k must be nonnegative");
      c.k = *k;
      bindings["k"] = *k;
    } else if (k) {
      throw std::invalid_argument("certificate '" + c.name + "' takes no parameter k");
    }
    c.n_min = j.at("n_min").get<long>();
    c.order = j.at("order").get<unsigned>();
    if (c.order == 0) throw std::invalid_argument("recurrence order must be positive");
    c.summand = parse_term(j.at("summand"), bindings);
    c.base_term = parse_term(j.at("base_term"), bindings);
    for (const auto& s : j.at("rec_coeffs"))
      c.rec_coeffs.push_back(parse_polynomial(s.get<std::string>(), bindings));
    if (c.rec_coeffs.size() != c.order + 1)
      throw std::invalid_argument("expected order+1 recurrence coefficients");
    c.cert_num = parse_polynomial(j.at("cert_numerator").get<std::string>(), bindings);
    c.cert_den = parse_polynomial(j.at("cert_denominator").get<std::string>(), bindings);
    const auto& w = j.at("vanishing_witness");
    c.witness.summand_factor = w.at("summand_factor").get<std::size_t>();
    c.witness.base_factor = w.at("base_factor").get<std::size_t>();
    c.witness.i_max = parse_linear(w.at("i_max").get<std::string>(), bindings);
    if (c.witness.summand_factor >= c.summand.factors.size() ||
        c.witness.base_factor >= c.base_term.factors.size())
      throw std::invalid_argument("vanishing witness factor index out of range");
    if (c.witness.i_max.ci != 0)
      throw std::invalid_argument("the witness bound i_max must not depend on i");
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument("certificate file " + path + ": " + e.what());
  }
}

Int certified_sum(const CertificateSpec& cert, long n) {
  const long hi = cert.witness.i_max.value(0, n);
  Int acc = 0;
  for (long i = 0; i <= hi; ++i) acc += eval_term(cert.summand, i, n);
  return acc;
}

Rat certificate_g(const CertificateSpec& cert, long i, long n) {
  Rat r(cert.cert_num.eval(i, n) * eval_term(cert.base_term, i, n), eval_in_n(cert.cert_den, n));
  r.canonicalize();
  return r;
}

namespace {

// R_den and similar n-only polynomials must not vanish at any integer
// n >= n_min.  All integer roots lie within the Cauchy bound
// 1 + max|a_j| / |a_lead|, so an exhaustive scan up to it is a proof.
bool nonzero_for_n_at_least(const BivariatePoly& p, long n_min, long& zero_at) {
  if (p.is_zero()) {
    zero_at = n_min;
    return false;
  }
  const int deg = p.deg_n();
  Int lead = p.coefficient(0, deg);
  Int maxc = 0;
  for (const auto& [key, c] : p.terms()) {
    Int a = c < 0 ? Int(-c) : c;
    if (key.second != deg && a > maxc) maxc = a;
  }
  Int bound_z;
  mpz_cdiv_q(bound_z.get_mpz_t(), maxc.get_mpz_t(), Int(abs(lead)).get_mpz_t());
  bound_z += 1;
  if (!bound_z.fits_slong_p() || bound_z.get_si() > 10000000L)
    throw resource_limit_error("root scan bound too large");
  const long hi = std::max(n_min, bound_z.get_si());
  for (long n = n_min; n <= hi; ++n)
    if (eval_in_n(p, n) == 0) {
      zero_at = n;
      return false;
    }
  return true;
}

// The witness factor binom(T,B) of the n-shifted term t(i, n+j) forces 0 for
// every i > i_max(n), n >= n_min, when: B grows with i (B.ci > 0), T does not
// involve i, T stays >= 0, and B - T >= 1 at i = i_max(n) + 1.
bool witness_inequalities(const BinomialFactor& f, const LinearForm& i_max, long n_min, long j,
                          std::string& why) {
  const LinearForm t = f.top.shifted(0, j), b = f.bottom.shifted(0, j);
  if (b.ci <= 0) {
    why = "witness bottom does not grow with i";
    return false;
  }
  if (t.ci - b.ci >= 0) {
    why = "witness top minus bottom does not fall with i";
    return false;
  }
  if (t.ci != 0) {
    why = "witness top must not depend on i";
    return false;
  }
  if (t.cn < 0 || t.cn * n_min + t.c0 < 0) {
    why = "witness top is not nonnegative on the region";
    return false;
  }
  // B - T at i = i_max(n) + 1, as a linear function of n.
  const long gamma = b.ci * i_max.cn + b.cn - t.cn;
  const long delta = b.ci * (i_max.c0 + 1) + b.c0 - t.c0;
  if (gamma < 0 || gamma * n_min + delta < 1) {
    why = "witness bottom does not exceed the top beyond i_max";
    return false;
  }
  return true;
}

struct Grid {
  int rows = 0, cols = 0;
};

std::string point(long i, long n) {
  return "(i=" + std::to_string(i) + ", n=" + std::to_string(n) + ")";
}

// The pointwise telescoping identity sum_j c_j(n) f(i,n+j) = g(i+1,n)-g(i,n),
// evaluated exactly at one point.
bool telescopes_at(const CertificateSpec& cert, long i, long n) {
  Int lhs = 0;
  for (unsigned j = 0; j <= cert.order; ++j)
    lhs += eval_in_n(cert.rec_coeffs[j], n) * eval_term(cert.summand, i, n + j);
  return Rat(lhs) == certificate_g(cert, i + 1, n) - certificate_g(cert, i, n);
}

}  // namespace

VerificationReport verify_certificate(const CertificateSpec& cert, const VerifyOptions& options) {
  VerificationReport rep;
  rep.name = cert.name;
  rep.k = cert.k;
  rep.n_min = cert.n_min;

  // ---- structure -----------------------------------------------------
  {
    std::string why;
    long zero_at = 0;
    if (cert.rec_coeffs.size() != cert.order + 1) {
      rep.structure = {false, "recurrence coefficient count does not match the order"};
    } else if (std::any_of(cert.rec_coeffs.begin(), cert.rec_coeffs.end(),
                           [](const BivariatePoly& p) { return p.depends_on_i(); })) {
      rep.structure = {false, "recurrence coefficients must depend on n only"};
    } else if (cert.cert_den.depends_on_i()) {
      rep.structure = {false, "certificate denominator must depend on n only"};
    } else if (cert.rec_coeffs[cert.order].is_zero()) {
      rep.structure = {false, "leading recurrence coefficient is identically zero"};
    } else if (!nonzero_for_n_at_least(cert.cert_den, cert.n_min, zero_at)) {
      rep.structure = {false, "certificate denominator vanishes at n = " + std::to_string(zero_at)};
    } else {
      rep.structure = {true, "denominator nonzero for n >= " + std::to_string(cert.n_min) +
                                 " (integer-root scan to the Cauchy bound)"};
    }
  }

  // ---- condition (a): g(0, n) = 0 -------------------------------------
  {
    const BivariatePoly at0 = cert.cert_num.substitute_i(0);
    if (at0.is_zero()) {
      rep.condition_a = {true, "certificate numerator vanishes identically at i = 0"};
    } else {
      // Look for a base-term factor whose bottom at i = 0 goes negative.
      long structural_from = -1;
      for (const BinomialFactor& f : cert.base_term.factors) {
        if (f.bottom.cn >= 0 && !(f.bottom.cn == 0 && f.bottom.c0 < 0)) continue;
        const long from = (f.bottom.cn < 0)
                              ? std::max(cert.n_min, floor_div(f.bottom.c0, -f.bottom.cn) + 1)
                              : cert.n_min;
        if (structural_from < 0 || from < structural_from) structural_from = from;
      }
      const long window_end = (structural_from >= 0)
                                  ? structural_from - 1
                                  : cert.n_min + std::max(at0.deg_n(), 0) + 1;
      bool ok = true;
      long bad_n = 0;
      for (long n = cert.n_min; n <= window_end; ++n) {
        if (eval_in_n(at0, n) * eval_term(cert.base_term, 0, n) != 0) {
          ok = false;
          bad_n = n;
          break;
        }
      }
      if (!ok) {
        rep.condition_a = {false, "g(0, n) != 0 at n = " + std::to_string(bad_n)};
      } else if (structural_from >= 0) {
        rep.condition_a = {true,
                           "base term vanishes at i = 0 for n >= " + std::to_string(structural_from) +
                               " (negative binomial bottom); smaller n checked directly"};
      } else {
        rep.condition_a = {true, "no structural witness; checked on an n-window wider than the degree"};
      }
    }
  }

  // ---- condition (b): vanishing beyond i_max --------------------------
  {
    std::string why;
    bool ok = true;
    for (unsigned j = 0; ok && j <= cert.order; ++j)
      ok = witness_inequalities(cert.summand.factors[cert.witness.summand_factor], cert.witness.i_max,
                                cert.n_min, j, why);
    if (ok) ok = witness_inequalities(cert.base_term.factors[cert.witness.base_factor],
                                      cert.witness.i_max, cert.n_min, 0, why);
    if (!ok) {
      rep.condition_b = {false, why};
    } else {
      std::string bad;
      for (long n = cert.n_min; n <= cert.n_min + 10 && bad.empty(); ++n) {
        const long hi = cert.witness.i_max.value(0, n);
        for (long i = hi + 1; i <= hi + 3; ++i) {
          if (eval_term(cert.summand, i, n) != 0) {
            bad = "summand nonzero at " + point(i, n);
            break;
          }
          if (cert.cert_num.eval(i, n) * eval_term(cert.base_term, i, n) != 0) {
            bad = "certificate nonzero at " + point(i, n);
            break;
          }
        }
      }
      rep.condition_b = bad.empty()
                            ? CheckResult{true, "witness inequalities hold for every n-shift; "
                                                "terms vanish at i_max+1..i_max+3"}
                            : CheckResult{false, bad};
    }
  }

  // ---- condition (c): the telescoping identity ------------------------
  {
    // Shift quotients f(i, n+j) / f(i, n).
    std::vector<PolyFraction> sq(cert.order + 1);
    sq[0] = {BivariatePoly::from_const(1), BivariatePoly::from_const(1), {}};
    for (unsigned j = 1; j <= cert.order; ++j) sq[j] = shift_quotient(cert.summand, 0, j);
    // h(i,n)/f(i,n) and h(i+1,n)/f(i,n).
    const PolyFraction rh0 = term_ratio(cert.base_term, cert.summand);
    const PolyFraction rh1 = term_ratio(cert.base_term.shifted(1, 0), cert.summand);

    BivariatePoly all_d = BivariatePoly::from_const(1);
    for (const auto& q : sq) all_d = all_d * q.den;

    BivariatePoly lhs;
    for (unsigned j = 0; j <= cert.order; ++j) {
      BivariatePoly term = cert.rec_coeffs[j] * sq[j].num;
      for (unsigned j2 = 0; j2 <= cert.order; ++j2)
        if (j2 != j) term = term * sq[j2].den;
      lhs += term * rh0.den * rh1.den * cert.cert_den;
    }
    BivariatePoly rhs = cert.cert_num.shift_i(1) * rh1.num * all_d * rh0.den -
                        cert.cert_num * rh0.num * all_d * rh1.den;

    const int di = std::max({lhs.deg_i(), rhs.deg_i(), 0});
    const int dn = std::max({lhs.deg_n(), rhs.deg_n(), 0});
    Grid grid{dn + 1, di + 1};
    rep.grid_rows = grid.rows;
    rep.grid_cols = grid.cols;

    // Denominator zeros are dodged per row; row-wise interpolation in i and
    // then coefficient-wise interpolation in n keep uniqueness intact.
    BivariatePoly den_product = all_d * rh0.den * rh1.den * cert.cert_den;

    std::vector<std::string> row_fail(static_cast<std::size_t>(grid.rows));
    bool grid_ok = true;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (options.parallel)
#endif
    for (int r = 0; r < grid.rows; ++r) {
      const long n = cert.n_min + 1 + r;
      int found = 0;
      for (long i = 0; found < grid.cols && i <= di + 1000; ++i) {
        if (den_product.eval(i, n) == 0) continue;
        ++found;
        if (lhs.eval(i, n) != rhs.eval(i, n)) {
          row_fail[static_cast<std::size_t>(r)] = "cleared identity fails at " + point(i, n);
          break;
        }
      }
      if (found < grid.cols && row_fail[static_cast<std::size_t>(r)].empty())
        row_fail[static_cast<std::size_t>(r)] = "could not find enough denominator-free points in row n=" +
                                                std::to_string(n);
    }
    std::string first_fail;
    for (const auto& s : row_fail)
      if (!s.empty()) {
        first_fail = s;
        grid_ok = false;
        break;
      }

    // Denominator-zero lines cross the validity region (e.g. a factor i at
    // i = 0); the cleared identity says nothing there, so probe the original
    // telescoping identity pointwise along each such line.
    long probes = 0;
    std::string probe_fail;
    if (grid_ok && rep.structure.passed) {
      std::vector<LinearForm> lines;
      auto collect = [&lines](const std::vector<LinearForm>& fs) {
        for (const LinearForm& f : fs)
          if (f.ci != 0 && std::find(lines.begin(), lines.end(), f) == lines.end())
            lines.push_back(f);
      };
      for (const auto& q : sq) collect(q.den_factors);
      collect(rh0.den_factors);
      collect(rh1.den_factors);
      for (const LinearForm& line : lines) {
        for (long n = cert.n_min; n <= cert.n_min + 12 && probe_fail.empty(); ++n) {
          const long num = -line.c0 - line.cn * n;
          if (num % line.ci != 0) continue;
          const long i = num / line.ci;
          if (i < 0) continue;
          ++probes;
          if (!telescopes_at(cert, i, n))
            probe_fail = "telescoping fails on a denominator-zero line at " + point(i, n);
        }
      }
    }

    if (!grid_ok) {
      rep.condition_c = {false, first_fail};
    } else if (!probe_fail.empty()) {
      rep.condition_c = {false, probe_fail};
    } else {
      rep.condition_c = {true, "cleared identity holds on a " + std::to_string(grid.rows) + "x" +
                                   std::to_string(grid.cols) +
                                   " grid; degree bounds make it an identity; " +
                                   std::to_string(probes) +
                                   " extra pointwise probes on denominator-zero lines"};
    }
  }

  // ---- certified recurrence against direct summation ------------------
  {
    std::string bad;
    for (long n = cert.n_min; n <= cert.n_min + options.recurrence_window; ++n) {
      Int acc = 0;
      for (unsigned j = 0; j <= cert.order; ++j)
        acc += eval_in_n(cert.rec_coeffs[j], n) * certified_sum(cert, n + j);
      if (acc != 0) {
        bad = "recurrence fails at n = " + std::to_string(n);
        break;
      }
    }
    rep.recurrence = bad.empty()
                         ? CheckResult{true, "holds for n = " + std::to_string(cert.n_min) + " ... " +
                                                 std::to_string(cert.n_min + options.recurrence_window)}
                         : CheckResult{false, bad};
  }

  return rep;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "certificate " << name;
  if (k) out << " (k=" << *k << ")";
  out << ": " << (passed() ? "PASS" : "FAIL") << "\n";
  auto line = [&out](const char* label, const CheckResult& c) {
    out << "  " << label << ": " << (c.passed ? "PASS" : "FAIL") << " -- " << c.detail << "\n";
  };
  line("structure          ", structure);
  line("(a) boundary       ", condition_a);
  line("(b) support        ", condition_b);
  line("(c) telescoping    ", condition_c);
  line("recurrence (direct)", recurrence);
  return out.str();
}

}  // namespace graceful
