#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graceful/certificate.hpp"
#include "graceful/labeling.hpp"
#include "graceful/sweeps.hpp"

using namespace graceful;

namespace {

std::string cert_path(const std::string& name) {
  return std::string(GRACEFUL_CERT_DIR) + "/" + name + ".json";
}

}  // namespace

TEST_CASE("parallel enumeration returns the serial order and content") {
  for (const auto& [a, b] : {std::pair<long, long>{3, 4}, {4, 5}}) {
    const auto par = enumerate_alpha_graceful(a, b);
    const auto ser = enumerate_alpha_graceful_serial(a, b);
    REQUIRE(par.size() == ser.size());
    CHECK(par == ser);
  }
}

TEST_CASE("parallel and serial comparison tables agree") {
  const auto par = main_table(25);
  const auto ser = main_table_serial(25);
  REQUIRE(par.size() == 26);
  REQUIRE(ser.size() == 26);
  for (std::size_t r = 0; r < par.size(); ++r) {
    CHECK(par[r].n == ser[r].n);
    CHECK(par[r].count == ser[r].count);
    CHECK(par[r].s4 == ser[r].s4);
    CHECK(par[r].count == par[r].s4);
  }
}

TEST_CASE("parallel and serial profile sweeps agree") {
  const auto par = series_formula_sweep(60);
  const auto ser = series_formula_sweep_serial(60);
  CHECK(par.pairs_checked == ser.pairs_checked);
  CHECK(par.pairs_checked > 0);
  CHECK(par.mismatches == 0);
  CHECK(ser.mismatches == 0);
}

TEST_CASE("certificate verification is mode-independent") {
  const auto cert = load_certificate(cert_path("tau"));
  const auto par = verify_certificate(cert, {.parallel = true});
  const auto ser = verify_certificate(cert, {.parallel = false});
  CHECK(par.passed());
  CHECK(ser.passed());
  CHECK(par.grid_rows == ser.grid_rows);
  CHECK(par.grid_cols == ser.grid_cols);
}
