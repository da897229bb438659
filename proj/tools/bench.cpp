#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "graceful/certificate.hpp"
#include "graceful/labeling.hpp"
#include "graceful/sweeps.hpp"

#ifndef GRACEFUL_CERT_DIR
#define GRACEFUL_CERT_DIR "certificates"
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double timed(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const std::string& name, double serial_s, double parallel_s) {
  std::cout << std::left << std::setw(44) << name << std::right << std::fixed
            << std::setprecision(3) << std::setw(9) << serial_s << std::setw(9) << parallel_s
            << std::setw(8) << std::setprecision(2)
            << (parallel_s > 0 ? serial_s / parallel_s : 0.0) << "\n";
}

}  // namespace

int main() {
  std::cout << std::left << std::setw(44) << "kernel" << std::right << std::setw(9) << "serial"
            << std::setw(9) << "parallel" << std::setw(8) << "speedup" << "\n";
  int rc = 0;

  {
    std::vector<graceful::LabelSetPair> s, p;
    const double ts = timed([&] { s = graceful::enumerate_alpha_graceful_serial(4, 5); });
    const double tp = timed([&] { p = graceful::enumerate_alpha_graceful(4, 5); });
    row("enumerate K(4,5), " + std::to_string(s.size()) + " labelings", ts, tp);
    if (s != p) {
      std::cerr << "enumeration results disagree\n";
      rc = 1;
    }
  }
  {
    std::vector<graceful::MainTableRow> s, p;
    const double ts = timed([&] { s = graceful::main_table_serial(60); });
    const double tp = timed([&] { p = graceful::main_table(60); });
    row("count table n <= 60", ts, tp);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i].count != p[i].count || s[i].s4 != p[i].s4) {
        std::cerr << "table rows disagree at n = " << s[i].n << "\n";
        rc = 1;
      }
  }
  {
    graceful::SweepResult s, p;
    const double ts = timed([&] { s = graceful::series_formula_sweep_serial(120); });
    const double tp = timed([&] { p = graceful::series_formula_sweep(120); });
    row("series sweep, values <= 120", ts, tp);
    if (s.pairs_checked != p.pairs_checked || s.mismatches != p.mismatches) {
      std::cerr << "sweep results disagree\n";
      rc = 1;
    }
  }
  const std::string dir = GRACEFUL_CERT_DIR;
  const std::pair<const char*, std::optional<long>> certs[] = {
      {"phi", 8}, {"tau", std::nullopt}, {"sigma", std::nullopt}};
  for (const auto& [name, k] : certs) {
    const auto cert = graceful::load_certificate(dir + "/" + name + ".json", k);
    graceful::VerifyOptions serial_opts, parallel_opts;
    serial_opts.parallel = false;
    parallel_opts.parallel = true;
    bool ok_s = false, ok_p = false;
    const double ts = timed([&] { ok_s = graceful::verify_certificate(cert, serial_opts).passed(); });
    const double tp =
        timed([&] { ok_p = graceful::verify_certificate(cert, parallel_opts).passed(); });
    row(std::string("verify certificate ") + name + (k ? " (k=8)" : ""), ts, tp);
    if (!ok_s || !ok_p) {
      std::cerr << "certificate " << name << " failed to verify\n";
      rc = 1;
    }
  }
  return rc;
}
