#ifndef GRACEFUL_CERTIFICATE_HPP
#define GRACEFUL_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "graceful/bivariate.hpp"
#include "graceful/hyperterm.hpp"

namespace graceful {

// A designated binomial factor (one index into the summand's factors, one
// into the base term's) that forces both terms to vanish for i > i_max(n).
struct VanishingWitness {
  std::size_t summand_factor = 0;
  std::size_t base_factor = 0;
  LinearForm i_max;  // linear in n only
};

// A creative-telescoping certificate for an order-r recurrence
//   sum_{j=0}^{r} c_j(n) * f(i, n+j)  =  g(i+1, n) - g(i, n),
// where g = (cert_num / cert_den) * base_term.  Everything is data, loaded
// from a JSON file; k-parameterized certificates are instantiated at a fixed
// integer k before verification.
struct CertificateSpec {
  std::string name;
  std::string description;
  bool has_parameter_k = false;
  std::optional<long> k;  // set when instantiated
  long n_min = 0;
  unsigned order = 2;
  HypergeometricTerm summand;    // f(i,n)
  HypergeometricTerm base_term;  // h(i,n)
  std::vector<BivariatePoly> rec_coeffs;  // c_0 ... c_order, in n only
  BivariatePoly cert_num;  // R_num(i,n)
  BivariatePoly cert_den;  // R_den(n), in n only
  VanishingWitness witness;
};

// Loads a certificate file; `k` must be given iff the file declares a
// parameter list.  Throws std::invalid_argument / ParseError on bad input.
CertificateSpec load_certificate(const std::string& path, std::optional<long> k = std::nullopt);

struct CheckResult {
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string name;
  std::optional<long> k;
  long n_min = 0;
  CheckResult structure;    // shape constraints, nonzero denominator, witness inequalities
  CheckResult condition_a;  // g(0,n) = 0
  CheckResult condition_b;  // terms vanish beyond i_max(n)
  CheckResult condition_c;  // the telescoping identity, checked on a grid
  CheckResult recurrence;   // certified recurrence against direct summation
  int grid_rows = 0;        // n-values used by check (c)
  int grid_cols = 0;        // i-values per row

  bool passed() const {
    return structure.passed && condition_a.passed && condition_b.passed && condition_c.passed &&
           recurrence.passed;
  }
  std::string to_text() const;
};

struct VerifyOptions {
  bool parallel = true;
  long recurrence_window = 25;  // n-range above n_min for the numeric recurrence check
};

VerificationReport verify_certificate(const CertificateSpec& cert, const VerifyOptions& options = {});

// Direct summation of the certified sum F(n) = sum_i f(i,n) over the finite
// support 0 <= i <= i_max(n).
Int certified_sum(const CertificateSpec& cert, long n);

// Exact value of g(i,n) = (cert_num/cert_den)(i,n) * h(i,n).
Rat certificate_g(const CertificateSpec& cert, long i, long n);

}  // namespace graceful

#endif  // GRACEFUL_CERTIFICATE_HPP
