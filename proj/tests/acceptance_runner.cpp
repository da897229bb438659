#include <iostream>

#include "graceful/acceptance.hpp"

int main() {
  const int failed = graceful::run_acceptance(std::cout, {GRACEFUL_CERT_DIR, true});
  return failed == 0 ? 0 : 1;
}
