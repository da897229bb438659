#ifndef GRACEFUL_ACCEPTANCE_HPP
#define GRACEFUL_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>

namespace graceful {

struct AcceptanceOptions {
  std::string cert_dir = "certificates";
  bool parallel = true;
};

// Runs the full acceptance battery, printing one [PASS]/[FAIL] line per
// criterion with its runtime.  Returns the number of failed criteria.
int run_acceptance(std::ostream& out, const AcceptanceOptions& options);

}  // namespace graceful

#endif
