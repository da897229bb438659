#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graceful/acceptance.hpp"
#include "graceful/bfile.hpp"
#include "graceful/certificate.hpp"
#include "graceful/counting.hpp"
#include "graceful/labeling.hpp"
#include "graceful/recurrences.hpp"
#include "graceful/sweeps.hpp"

#ifndef GRACEFUL_CERT_DIR
#define GRACEFUL_CERT_DIR "certificates"
#endif

namespace {

using graceful::ExponentMultiset;
using graceful::Int;
using graceful::LabelSetPair;
using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string cert_dir = GRACEFUL_CERT_DIR;
  bool serial = false;
};

[[noreturn]] void reject(const std::string& msg) { throw std::invalid_argument(msg); }

void no_bfile(const Options& opt) {
  if (opt.format == "bfile") reject("this subcommand has no sequence-file output");
}

unsigned parse_positive(const std::string& item) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(item, &used);
  } catch (const std::exception&) {
    reject("bad list entry: " + item);
  }
  if (used != item.size() || v == 0 || v > 1000000) reject("bad list entry: " + item);
  return static_cast<unsigned>(v);
}

ExponentMultiset parse_profile(const std::string& text) {
  std::vector<unsigned> exps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) exps.push_back(parse_positive(item));
  if (exps.empty()) reject("empty exponent list");
  return ExponentMultiset(std::move(exps));
}

std::vector<long> parse_labels(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      reject("bad label: " + item);
    }
    if (used != item.size()) reject("bad label: " + item);
    out.push_back(v);
  }
  if (out.empty()) reject("empty label list");
  return out;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json pair_json(const LabelSetPair& p) { return json{{"left", p.left}, {"right", p.right}}; }

int do_count(const Options& opt, const ExponentMultiset& a, const ExponentMultiset& b,
             bool check) {
  no_bfile(opt);
  const Int circle_count = graceful::count_A_circle(a, b);
  bool agree = true;
  Int interleave_count;
  if (check) {
    interleave_count = graceful::count_A_interleave(a, b);
    agree = interleave_count == circle_count;
  }
  if (opt.format == "json") {
    json j{{"count", circle_count.get_str()},
           {"exp_a", a.to_string()},
           {"exp_b", b.to_string()}};
    if (check) {
      j["routes"] = {{"circle", circle_count.get_str()},
                     {"interleave", interleave_count.get_str()}};
      j["agree"] = agree;
    }
    emit_json(j);
  } else {
    std::cout << circle_count.get_str() << "\n";
  }
  if (!agree) {
    std::cerr << "count mismatch: circle " << circle_count.get_str() << ", interleave "
              << interleave_count.get_str() << "\n";
    return 1;
  }
  return 0;
}

int do_pairs(const Options& opt, long a, long b, bool count_only) {
  no_bfile(opt);
  if (a < 1 || b < 1) reject("part sizes must be at least 1");
  const auto pairs = graceful::enumerate_alpha_graceful(a, b);
  if (opt.format == "json") {
    json j{{"a", a}, {"b", b}, {"count", std::to_string(pairs.size())}};
    if (!count_only) {
      json list = json::array();
      for (const auto& p : pairs) list.push_back(pair_json(p));
      j["pairs"] = list;
    }
    emit_json(j);
  } else {
    if (count_only) {
      std::cout << pairs.size() << "\n";
    } else {
      for (const auto& p : pairs) std::cout << p.to_string() << "\n";
    }
  }
  return 0;
}

int do_series(const Options& opt, std::uint64_t a, std::uint64_t b) {
  no_bfile(opt);
  const Int n = graceful::count_canonical_series(a, b);
  if (opt.format == "json")
    emit_json(json{{"a", a}, {"b", b}, {"series", n.get_str()}});
  else
    std::cout << n.get_str() << "\n";
  return 0;
}

int do_peel(const Options& opt, const std::string& left, const std::string& right) {
  no_bfile(opt);
  LabelSetPair pair{parse_labels(left), parse_labels(right)};
  if (!graceful::is_alpha_graceful(pair)) reject("input pair is not alpha-graceful");
  const LabelSetPair peeled = graceful::peel_to_unit(pair);
  const bool unit = peeled == LabelSetPair{{0}, {1}};
  if (opt.format == "json")
    emit_json(json{{"input", pair_json(pair)}, {"peeled", pair_json(peeled)}, {"unit", unit}});
  else
    std::cout << peeled.to_string() << "\n";
  return unit ? 0 : 1;
}

int do_theta(const Options& opt, const ExponentMultiset& m, std::optional<long> k, bool check) {
  if (k) {
    no_bfile(opt);
    if (*k < 0) reject("k must be nonnegative");
    const Int v = graceful::theta_formula(static_cast<unsigned>(*k), m);
    if (check && v != graceful::theta_chain(static_cast<unsigned>(*k), m)) {
      std::cerr << "theta routes disagree at k = " << *k << "\n";
      return 1;
    }
    if (opt.format == "json")
      emit_json(json{{"exp", m.to_string()}, {"k", *k}, {"theta", v.get_str()}});
    else
      std::cout << v.get_str() << "\n";
    return 0;
  }
  const auto values = graceful::theta_profile(m);
  if (check)
    for (std::size_t kk = 0; kk < values.size(); ++kk)
      if (values[kk] != graceful::theta_chain(static_cast<unsigned>(kk), m)) {
        std::cerr << "theta routes disagree at k = " << kk << "\n";
        return 1;
      }
  if (opt.format == "json") {
    json list = json::array();
    for (std::size_t kk = 0; kk < values.size(); ++kk)
      list.push_back(json{{"k", kk}, {"theta", values[kk].get_str()}});
    emit_json(json{{"exp", m.to_string()}, {"values", list}});
  } else {
    std::cout << graceful::format_bfile(0, values);
  }
  return 0;
}

int do_debruijn(const Options& opt, unsigned k, std::optional<long> n, std::optional<long> n_max) {
  if (n.has_value() == n_max.has_value()) reject("debruijn needs exactly one of -n and --n-max");
  if (n) {
    if (*n < 0) reject("n must be nonnegative");
    const Int v = graceful::debruijn_S(k, static_cast<unsigned>(*n));
    if (opt.format == "json")
      emit_json(json{{"k", k}, {"n", *n}, {"value", v.get_str()}});
    else if (opt.format == "bfile")
      std::cout << graceful::format_bfile(*n, {v});
    else
      std::cout << v.get_str() << "\n";
    return 0;
  }
  if (*n_max < 0) reject("--n-max must be nonnegative");
  std::vector<Int> values;
  for (long i = 0; i <= *n_max; ++i)
    values.push_back(graceful::debruijn_S(k, static_cast<unsigned>(i)));
  if (opt.format == "json") {
    json list = json::array();
    for (long i = 0; i <= *n_max; ++i)
      list.push_back(json{{"n", i}, {"value", values[static_cast<std::size_t>(i)].get_str()}});
    emit_json(json{{"k", k}, {"values", list}});
  } else {
    std::cout << graceful::format_bfile(0, values);
  }
  return 0;
}

int do_table(const Options& opt, bool main_table, long n_max) {
  if (!main_table) reject("table needs --main");
  if (n_max < 0) reject("--n-max must be nonnegative");
  const auto rows =
      opt.serial ? graceful::main_table_serial(n_max) : graceful::main_table(n_max);
  bool all_equal = true;
  for (const auto& r : rows) all_equal = all_equal && r.count == r.s4;
  if (opt.format == "json") {
    json list = json::array();
    for (const auto& r : rows)
      list.push_back(json{{"n", r.n}, {"count", r.count.get_str()}, {"s4", r.s4.get_str()}});
    emit_json(json{{"rows", list}, {"all_equal", all_equal}});
  } else if (opt.format == "bfile") {
    std::vector<Int> counts;
    for (const auto& r : rows) counts.push_back(r.count);
    std::cout << graceful::format_bfile(0, counts);
  } else {
    for (const auto& r : rows)
      std::cout << r.n << " " << r.count.get_str() << " " << r.s4.get_str() << "\n";
  }
  return all_equal ? 0 : 1;
}

json check_json(const graceful::CheckResult& c) {
  return json{{"passed", c.passed}, {"detail", c.detail}};
}

int do_verify_certificate(const Options& opt, const std::string& name, std::optional<long> k) {
  no_bfile(opt);
  const bool is_path = name.find('/') != std::string::npos || name.ends_with(".json");
  const std::string path = is_path ? name : opt.cert_dir + "/" + name + ".json";
  const auto cert = graceful::load_certificate(path, k);
  graceful::VerifyOptions vo;
  vo.parallel = !opt.serial;
  const auto rep = graceful::verify_certificate(cert, vo);
  if (opt.format == "json") {
    json j{{"name", rep.name},
           {"n_min", rep.n_min},
           {"passed", rep.passed()},
           {"checks",
            {{"structure", check_json(rep.structure)},
             {"boundary", check_json(rep.condition_a)},
             {"support", check_json(rep.condition_b)},
             {"telescoping", check_json(rep.condition_c)},
             {"recurrence", check_json(rep.recurrence)}}},
           {"grid", {{"rows", rep.grid_rows}, {"cols", rep.grid_cols}}}};
    if (rep.k) j["k"] = *rep.k;
    emit_json(j);
  } else {
    std::cout << rep.to_text();
  }
  return rep.passed() ? 0 : 1;
}

int do_verify_identity(const Options& opt, graceful::Identity which, long k_max, long n_max) {
  no_bfile(opt);
  const auto rep = graceful::direct_identity_check(which, k_max, n_max);
  if (opt.format == "json") {
    json j{{"identity", which == graceful::Identity::A ? "A" : "B"},
           {"passed", rep.passed},
           {"detail", rep.detail}};
    if (which == graceful::Identity::B) {
      j["n0"] = {{"t", rep.t0.get_str()},
                 {"s4", rep.s0.get_str()},
                 {"unequal_as_required", rep.n0_inequality_ok}};
    }
    emit_json(j);
  } else {
    std::cout << (rep.passed ? "PASS" : "FAIL") << " -- " << rep.detail << "\n";
  }
  return rep.passed ? 0 : 1;
}

int do_singular(const Options& opt, long k) {
  no_bfile(opt);
  const auto rep = graceful::singular_case_check(k);
  if (opt.format == "json")
    emit_json(json{{"k", k}, {"l", rep.ell}, {"passed", rep.passed}, {"detail", rep.detail}});
  else
    std::cout << (rep.passed ? "PASS" : "FAIL") << " -- " << rep.detail << "\n";
  return rep.passed ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"exact counting of graceful labelings of complete bipartite graphs,\n"
               "with independently checked formulas and telescoping certificates"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "bfile"}))
      ->capture_default_str();
  app.add_option("--cert-dir", opt.cert_dir, "certificate data directory")->capture_default_str();
  app.add_flag("--serial", opt.serial, "disable parallel kernels");

  auto* count_cmd = app.add_subcommand("count", "count the labelings for one pair of part sizes");
  std::uint64_t count_a = 0, count_b = 0;
  std::string count_exp_a, count_exp_b;
  bool count_check = false;
  auto* oa = count_cmd->add_option("-a", count_a, "left part size (>= 1)");
  auto* ob = count_cmd->add_option("-b", count_b, "right part size (>= 1)");
  auto* oea = count_cmd->add_option("--exp-a", count_exp_a, "left exponent profile, e.g. 2,2");
  auto* oeb = count_cmd->add_option("--exp-b", count_exp_b, "right exponent profile");
  oa->excludes(oea);
  ob->excludes(oeb);
  count_cmd->add_flag("--check", count_check, "compute by both formula routes and compare");

  auto* oracle_cmd = app.add_subcommand("oracle", "independent set-pair oracles");
  oracle_cmd->require_subcommand(1);
  auto* pairs_cmd = oracle_cmd->add_subcommand("pairs", "enumerate every labeling of K(a,b)");
  long pairs_a = 0, pairs_b = 0;
  bool pairs_count_only = false;
  pairs_cmd->add_option("-a", pairs_a, "left part size")->required();
  pairs_cmd->add_option("-b", pairs_b, "right part size")->required();
  pairs_cmd->add_flag("--count-only", pairs_count_only, "print only the number of labelings");
  auto* series_cmd = oracle_cmd->add_subcommand("series", "count canonical multiplication series");
  std::uint64_t series_a = 0, series_b = 0;
  series_cmd->add_option("-a", series_a, "left part size")->required();
  series_cmd->add_option("-b", series_b, "right part size")->required();
  auto* peel_cmd = oracle_cmd->add_subcommand("peel", "peel a labeling back to the unit");
  std::string peel_left, peel_right;
  peel_cmd->add_option("--left", peel_left, "left labels, e.g. 0,1")->required();
  peel_cmd->add_option("--right", peel_right, "right labels, e.g. 2,4")->required();

  auto* theta_cmd = app.add_subcommand("theta", "strict divisor-chain counts");
  std::string theta_exp;
  std::uint64_t theta_a = 0;
  long theta_k = 0;
  bool theta_check = false;
  auto* te = theta_cmd->add_option("--exp", theta_exp, "exponent profile, e.g. 2,1");
  auto* ta = theta_cmd->add_option("-a", theta_a, "integer whose profile is used");
  ta->excludes(te);
  auto* tk = theta_cmd->add_option("-k", theta_k, "chain length (omit for the whole profile)");
  theta_cmd->add_flag("--check", theta_check, "compare the lattice and formula routes");

  auto* deb_cmd = app.add_subcommand("debruijn", "alternating binomial power sums");
  unsigned deb_k = 0;
  long deb_n = 0, deb_nmax = 0;
  deb_cmd->add_option("-k", deb_k, "power")->required();
  auto* dn = deb_cmd->add_option("-n", deb_n, "single index");
  auto* dm = deb_cmd->add_option("--n-max", deb_nmax, "emit indices 0..n-max");
  dn->excludes(dm);

  auto* table_cmd = app.add_subcommand("table", "side-by-side count tables");
  bool table_main = false;
  long table_nmax = -1;
  table_cmd->add_flag("--main", table_main, "square-profile count vs the fourth-power sum");
  table_cmd->add_option("--n-max", table_nmax, "last row")->required();

  auto* verify_cmd = app.add_subcommand("verify", "identity and certificate verification");
  verify_cmd->require_subcommand(1);
  auto* va_cmd = verify_cmd->add_subcommand("identity-A", "two sums, one value, by summation");
  long va_kmax = 10, va_nmax = 10;
  va_cmd->add_option("--k-max", va_kmax, "largest k")->capture_default_str();
  va_cmd->add_option("--n-max", va_nmax, "largest n")->capture_default_str();
  auto* vb_cmd =
      verify_cmd->add_subcommand("identity-B", "count sum vs power sum, with the n = 0 probe");
  long vb_nmax = 30;
  vb_cmd->add_option("--n-max", vb_nmax, "largest n")->capture_default_str();
  auto* vc_cmd = verify_cmd->add_subcommand("certificate", "verify one telescoping certificate");
  std::string cert_name;
  long cert_k = 0;
  vc_cmd->add_option("name", cert_name, "certificate name or path")->required();
  auto* ck = vc_cmd->add_option("-k", cert_k, "fixed parameter, when the certificate takes one");
  auto* vs_cmd = verify_cmd->add_subcommand("singular", "check the half-integer boundary case");
  long sing_k = 0;
  vs_cmd->add_option("-k", sing_k, "power")->required();

  auto* self_cmd = app.add_subcommand("selftest", "run the full acceptance battery");

  // Let --format/--cert-dir/--serial appear after the subcommand too.
  const std::function<void(CLI::App*)> allow_global = [&](CLI::App* cmd) {
    cmd->fallthrough(true);
    for (CLI::App* sub : cmd->get_subcommands({})) allow_global(sub);
  };
  for (CLI::App* sub : app.get_subcommands({})) allow_global(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (count_cmd->parsed()) {
    if (!oa->count() && !oea->count()) reject("count needs -a or --exp-a");
    if (!ob->count() && !oeb->count()) reject("count needs -b or --exp-b");
    const ExponentMultiset a =
        oa->count() ? ExponentMultiset::of_integer(count_a) : parse_profile(count_exp_a);
    const ExponentMultiset b =
        ob->count() ? ExponentMultiset::of_integer(count_b) : parse_profile(count_exp_b);
    return do_count(opt, a, b, count_check);
  }
  if (pairs_cmd->parsed()) return do_pairs(opt, pairs_a, pairs_b, pairs_count_only);
  if (series_cmd->parsed()) return do_series(opt, series_a, series_b);
  if (peel_cmd->parsed()) return do_peel(opt, peel_left, peel_right);
  if (theta_cmd->parsed()) {
    if (!te->count() && !ta->count()) reject("theta needs --exp or -a");
    const ExponentMultiset m =
        te->count() ? parse_profile(theta_exp) : ExponentMultiset::of_integer(theta_a);
    return do_theta(opt, m, tk->count() ? std::optional<long>(theta_k) : std::nullopt,
                    theta_check);
  }
  if (deb_cmd->parsed())
    return do_debruijn(opt, deb_k, dn->count() ? std::optional<long>(deb_n) : std::nullopt,
                       dm->count() ? std::optional<long>(deb_nmax) : std::nullopt);
  if (table_cmd->parsed()) return do_table(opt, table_main, table_nmax);
  if (va_cmd->parsed()) return do_verify_identity(opt, graceful::Identity::A, va_kmax, va_nmax);
  if (vb_cmd->parsed()) return do_verify_identity(opt, graceful::Identity::B, 0, vb_nmax);
  if (vc_cmd->parsed())
    return do_verify_certificate(opt, cert_name,
                                 ck->count() ? std::optional<long>(cert_k) : std::nullopt);
  if (vs_cmd->parsed()) return do_singular(opt, sing_k);
  if (self_cmd->parsed()) {
    graceful::AcceptanceOptions ao;
    ao.cert_dir = opt.cert_dir;
    ao.parallel = !opt.serial;
    return graceful::run_acceptance(std::cout, ao) == 0 ? 0 : 1;
  }
  reject("no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
