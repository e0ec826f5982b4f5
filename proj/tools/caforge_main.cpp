#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "caforge/adapters.hpp"
#include "caforge/ca.hpp"
#include "caforge/dickson.hpp"
#include "caforge/errors.hpp"
#include "caforge/linear.hpp"
#include "caforge/report.hpp"
#include "caforge/suzuki.hpp"
#include "caforge/version.hpp"

namespace {

using namespace caforge;

bool factor_prime_power(std::uint64_t q, std::uint64_t& p, std::uint32_t& m) {
  if (q < 2) return false;
  std::uint64_t d = 2;
  while (q % d != 0) {
    ++d;
    if (d * d > q) {
      d = q;
      break;
    }
  }
  p = d;
  m = 0;
  std::uint64_t t = q;
  while (t % p == 0) {
    t /= p;
    ++m;
  }
  return t == 1;
}

std::uint64_t psl_order(std::uint64_t q) {
  return q * (q * q - 1) / (q % 2 == 0 ? 1 : 2);
}

std::optional<ReportCache>& cache_slot() {
  static std::optional<ReportCache> cache;
  return cache;
}

void init_cache(const std::string& flag_path) {
  std::string path = flag_path;
  if (path.empty()) {
    if (const char* env = std::getenv("CA_FORGE_CACHE")) path = env;
  }
  if (!path.empty()) cache_slot().emplace(path);
}

std::string resolve_method(const std::string& method, std::uint64_t q,
                           std::uint64_t oracle_bound) {
  if (method != "auto") return method;
  return psl_order(q) <= oracle_bound ? "oracle" : "maximal-class";
}

ReportRecord compute_record(std::uint64_t q, const std::string& method,
                            std::uint64_t oracle_bound) {
  std::uint64_t p = 0;
  std::uint32_t m = 0;
  factor_prime_power(q, p, m);
  if (psl_order(q) > kDefaultGroupBound)
    throw bound_error("group order " + std::to_string(psl_order(q)) +
                      " exceeds the construction bound");
  ReportRecord rec;
  rec.q = q;
  rec.p = p;
  rec.m = m;
  PredicateReport pred = theorem_predicate(q);
  rec.predicate_answer = pred.value;
  rec.predicate_reason = pred.reason;
  rec.method = method;
  rec.engine_version = kEngineVersion;

  const auto t0 = std::chrono::steady_clock::now();
  FieldPtr f = make_field(static_cast<std::uint32_t>(p), m);
  VerifyResult vr;
  if (method == "oracle")
    vr = brute_force_minimal_non_ca(psl2(f), oracle_bound);
  else
    vr = is_minimal_non_ca_psl(f);
  const auto t1 = std::chrono::steady_clock::now();

  rec.computed_answer = vr.minimal_non_ca;
  rec.per_class = vr.per_class;
  rec.agree = rec.predicate_answer == rec.computed_answer;
  rec.wall_time_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
  return rec;
}

void print_human(const ReportRecord& r) {
  std::cout << "q=" << r.q << " (p=" << r.p << ", m=" << r.m << ")\n"
            << "  predicate: " << (r.predicate_answer ? "true" : "false")
            << " [" << r.predicate_reason << "]\n"
            << "  computed:  " << (r.computed_answer ? "true" : "false")
            << " via " << r.method << " (" << r.wall_time_ms << " ms)\n"
            << "  agreement: " << (r.agree ? "yes" : "NO") << "\n";
  for (const ClassEvidence& c : r.per_class)
    std::cout << "    class " << c.case_id << "  order " << c.order << "  "
              << (c.ca ? "CA    " : "non-CA") << "  " << c.schmidt << "\n";
}

// Runs one q end to end: cache replay or fresh computation. Returns the
// record that was (or would have been) emitted.
ReportRecord run_one(std::uint64_t q, const std::string& method_flag,
                     std::uint64_t oracle_bound, bool json) {
  const std::string method = resolve_method(method_flag, q, oracle_bound);
  if (cache_slot()) {
    auto hit = cache_slot()->lookup(q, method, kEngineVersion);
    if (hit) {
      auto rec = parse_json_line(*hit);
      if (rec) {
        std::cerr << "cache hit: q=" << q << " method=" << method << "\n";
        if (json)
          std::cout << *hit << "\n";
        else
          print_human(*rec);
        return *rec;
      }
    }
  }
  ReportRecord rec = compute_record(q, method, oracle_bound);
  const std::string line = to_json_line(rec);
  if (cache_slot()) cache_slot()->append(rec, line);
  if (json)
    std::cout << line << "\n";
  else
    print_human(rec);
  return rec;
}

// Small-group name from order plus invariants, for inspection output.
std::string iso_name(const Group& g) {
  const std::uint64_t n = g.order();
  if (n > 2000) return "";
  const Fingerprint fp = iso_fingerprint(g);
  if (n == 12 && fp == iso_fingerprint(alt(4))) return "alt4";
  if (n == 24 && fp == iso_fingerprint(sym(4))) return "sym4";
  if (n == 60 && fp == iso_fingerprint(alt(5))) return "alt5";
  if (fp == iso_fingerprint(cyclic(static_cast<std::uint32_t>(n))))
    return "cyclic-" + std::to_string(n);
  if (n >= 4 && n % 2 == 0 &&
      fp == iso_fingerprint(dihedral(static_cast<std::uint32_t>(n))))
    return "dihedral-" + std::to_string(n);
  return "";
}

int do_inspect(std::uint64_t q) {
  std::uint64_t p = 0;
  std::uint32_t m = 0;
  if (!factor_prime_power(q, p, m) || q < 4) {
    std::cerr << "inspect: q must be a prime power >= 4\n";
    return 2;
  }
  if (psl_order(q) > kDefaultGroupBound) {
    std::cerr << "inspect: group too large to construct\n";
    return 3;
  }
  FieldPtr f = make_field(static_cast<std::uint32_t>(p), m);
  std::cout << "q = " << q << " = " << p << "^" << m << "\n";
  std::cout << "modulus coefficients (constant first):";
  for (fe c : f->modulus()) std::cout << " " << c;
  std::cout << "\n";
  std::cout << "projective group order: " << psl_order(q) << "\n";
  PredicateReport pred = theorem_predicate(q);
  std::cout << "arithmetic criterion: " << (pred.value ? "true" : "false")
            << " [" << pred.reason << "]\n";

  Group psl = psl2(f);
  CAReport top = ca_analyze(psl);
  std::cout << "centralizers all abelian: " << (top.ca ? "yes" : "no");
  if (!top.ca && top.witness)
    std::cout << " (witness element code " << *top.witness << ")";
  std::cout << "\n\nmaximal subgroup families:\n";
  for (const MaximalClassSpec& spec : applicable_classes(*f)) {
    Group rep = construct_class_rep(psl, f, spec);
    std::string name = iso_name(rep);
    std::string schmidt = "-";
    if (rep.order() <= kDefaultOracleBound)
      schmidt = to_string(schmidt_case(rep).label);
    std::cout << "  case " << spec.case_id << "  order " << rep.order()
              << (spec.two_classes ? "  (two classes)" : "") << "  "
              << (is_ca(rep) ? "CA    " : "non-CA") << "  " << schmidt << "  "
              << spec.description << (name.empty() ? "" : " [" + name + "]")
              << "\n";
  }
  return 0;
}

int do_suzuki(std::uint32_t n) {
  SuzukiLemmaReport rep = verify_suzuki_lemma(n);
  std::cout << "stabilizer over GF(2^" << 2 * n + 1 << "): order " << rep.order
            << ", degree upstairs " << rep.degree << "\n"
            << "  kernel: order " << rep.kernel_order << ", exponent "
            << rep.kernel_exponent << ", "
            << (rep.kernel_non_abelian ? "non-abelian" : "abelian")
            << ", center order " << rep.kernel_center_order << "\n";
  if (rep.kernel_witness)
    std::cout << "  kernel witness pair: " << rep.kernel_witness->first << " "
              << rep.kernel_witness->second << "\n";
  std::cout << "  complement: order " << rep.complement_order << ", "
            << (rep.complement_cyclic ? "cyclic" : "non-cyclic") << "\n"
            << "  centralizers all abelian: "
            << (rep.stabilizer_ca ? "yes" : "no") << "\n"
            << "  all checks: " << (rep.ok ? "pass" : "FAIL") << "\n";
  return rep.ok ? 0 : 1;
}

int do_selftest() {
  int failures = 0;
  auto check = [&](bool ok, const std::string& name) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  {
    FieldPtr f9 = make_field(3, 2);
    check(f9->modulus() == std::vector<fe>({1, 0, 1}), "field 9 modulus");
    FieldPtr f8 = make_field(2, 3);
    check(f8->modulus() == std::vector<fe>({1, 1, 0, 1}), "field 8 modulus");
    FieldPtr f7 = make_field(7, 1);
    bool inv_ok = true;
    for (fe x = 1; x < 7; ++x)
      if (f7->mul(x, f7->inv(x)) != 1) inv_ok = false;
    check(inv_ok, "field 7 inverses");
  }
  {
    bool orders_ok = true;
    for (std::uint64_t q : {4ull, 5ull, 7ull, 9ull}) {
      std::uint64_t p = 0;
      std::uint32_t m = 0;
      factor_prime_power(q, p, m);
      Group g = psl2(make_field(static_cast<std::uint32_t>(p), m));
      if (g.order() != psl_order(q)) orders_ok = false;
    }
    check(orders_ok, "projective group orders");
  }
  check(iso_fingerprint(dihedral(12)) ==
            iso_fingerprint(perm_group(
                6, {{1, 2, 3, 4, 5, 0}, {0, 5, 4, 3, 2, 1}})),
        "dihedral representations agree");
  check(theorem_predicate(11).value && !theorem_predicate(17).value,
        "arithmetic criterion samples");
  check(verify_suzuki_lemma(1).ok, "twisted stabilizer shape");
  std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification engine for the centralizer-abelian classification "
               "of projective special linear groups"};
  app.set_version_flag("--version", kEngineVersion);
  app.require_subcommand(1);

  std::string method = "auto";
  std::string cache_path;
  std::uint64_t oracle_bound = kDefaultOracleBound;
  bool json = false;
  std::uint64_t q = 0, qmin = 0, qmax = 0;
  unsigned jobs = 0;
  std::uint32_t suzuki_n = 0;
  bool suzuki_set = false;

  auto* verify = app.add_subcommand("verify", "check one prime power q");
  verify->add_option("q", q, "prime power >= 4")->required();
  verify->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "oracle", "maximal-class"}));
  verify->add_flag("--json", json, "one JSON record per line");
  verify->add_option("--cache", cache_path, "report cache file");
  verify->add_option("--oracle-bound", oracle_bound,
                     "largest group order enumerated exhaustively");

  auto* sweep = app.add_subcommand("sweep", "check every prime power in a range");
  sweep->add_option("qmin", qmin)->required();
  sweep->add_option("qmax", qmax)->required();
  sweep->add_option("--jobs", jobs, "worker threads for the scan kernels");
  sweep->add_flag("--json", json);
  sweep->add_option("--cache", cache_path);
  sweep->add_option("--oracle-bound", oracle_bound);

  auto* inspect = app.add_subcommand("inspect", "describe the group at q");
  inspect->add_option("q", q);
  inspect->add_option("--suzuki", suzuki_n, "inspect the twisted stabilizer")
      ->check(CLI::Range(1u, 3u));

  auto* selftest = app.add_subcommand("selftest", "quick built-in checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) {
      std::uint64_t p = 0;
      std::uint32_t m = 0;
      if (!factor_prime_power(q, p, m) || q < 4) {
        std::cerr << "verify: q must be a prime power >= 4\n";
        return 2;
      }
      init_cache(cache_path);
      ReportRecord rec = run_one(q, method, oracle_bound, json);
      return rec.agree ? 0 : 1;
    }
    if (app.got_subcommand(sweep)) {
      if (qmin > qmax) {
        std::cerr << "sweep: empty range\n";
        return 2;
      }
      init_cache(cache_path);
#ifdef _OPENMP
      if (jobs > 0) omp_set_num_threads(static_cast<int>(jobs));
#endif
      bool all_agree = true;
      std::size_t count = 0;
      for (std::uint64_t v = std::max<std::uint64_t>(qmin, 4); v <= qmax; ++v) {
        std::uint64_t p = 0;
        std::uint32_t m = 0;
        if (!factor_prime_power(v, p, m)) continue;
        ReportRecord rec = run_one(v, method, oracle_bound, json);
        all_agree = all_agree && rec.agree;
        ++count;
      }
      if (!json)
        std::cout << "sweep: " << count << " values checked, "
                  << (all_agree ? "all in agreement" : "DISAGREEMENT FOUND")
                  << "\n";
      return all_agree ? 0 : 1;
    }
    if (app.got_subcommand(inspect)) {
      suzuki_set = inspect->count("--suzuki") > 0;
      if (suzuki_set) return do_suzuki(suzuki_n);
      if (inspect->count("q") == 0) {
        std::cerr << "inspect: give q or --suzuki n\n";
        return 2;
      }
      return do_inspect(q);
    }
    if (app.got_subcommand(selftest)) return do_selftest();
  } catch (const bound_error& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
