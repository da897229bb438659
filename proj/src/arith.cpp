#include "graceful/arith.hpp"

namespace graceful {

Int binom(const Int& top, long bottom) {
  if (bottom < 0) return 0;
  Int r;
  // mpz_bin_ui already implements the falling-factorial convention for
  // negative tops: binom(-1, 2) == 1, binom(-1, 1) == -1.
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(bottom));
  return r;
}

Int binom(long top, long bottom) { return binom(Int(top), bottom); }

Int pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace graceful
