// qbound: exact bound checking, classification, and constructive
// verification for quantum CSS code parameters.
//
// Exit codes: 0 = every checked bound satisfied / verification passed,
// 1 = a bound violated or verification failed, 2 = usage or input error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qecc/json_io.hpp"
#include "qecc/matrix.hpp"
#include "qecc/reference.hpp"

namespace {

using nlohmann::json;
using namespace qecc;

enum ExitCode { kOk = 0, kViolated = 1, kUsage = 2 };

std::uint64_t default_budget() {
  if (const char* env = std::getenv("QECC_BOUNDS_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("QECC_BOUNDS_BUDGET is not a valid integer");
    }
  }
  return kDefaultBudget;
}

void print_verdict_human(std::ostream& os, const BoundVerdict& v) {
  os << v.bound << ": ";
  if (!v.applicable) {
    os << "n/a";
    if (!v.note.empty()) os << " (" << v.note << ")";
    os << "\n";
    return;
  }
  os << v.lhs << " <= " << v.rhs << " : " << (v.satisfied ? "OK" : "FAIL");
  if (v.equality) os << " (equality)";
  if (!v.note.empty()) os << "  [" << v.note << "]";
  os << "\n";
}

void print_verdict_tsv(std::ostream& os, const BoundVerdict& v) {
  os << v.bound << "\t" << (v.applicable ? "yes" : "no") << "\t"
     << (!v.applicable ? "-" : v.satisfied ? "ok" : "fail") << "\t" << v.lhs << "\t" << v.rhs << "\t" << v.note
     << "\n";
}

struct CheckResult {
  QuantumParams params;
  std::vector<BoundVerdict> verdicts;
  Classification classification;
  bool all_ok = false;
};

CheckResult run_check(const QuantumParams& p) {
  CheckResult r{p, {}, classify(p), false};
  const BoundVerdict qhb = qhb_check(p);
  r.verdicts.push_back(qhb);
  if (p.css && p.k) {
    // the feasibility set already contains the quantum Singleton verdict
    const CssFeasibility f = css_feasibility(p.n, *p.k, p.d, p.q);
    r.verdicts.insert(r.verdicts.end(), f.verdicts.begin(), f.verdicts.end());
    r.verdicts.insert(r.verdicts.end(), f.per_k1.begin(), f.per_k1.end());
    r.all_ok = qhb.satisfied && f.css_possible;
  } else {
    const BoundVerdict singleton = quantum_singleton_check(p);
    r.verdicts.push_back(singleton);
    r.all_ok = qhb.satisfied && singleton.satisfied;
  }
  return r;
}

void emit_check(std::ostream& os, const CheckResult& r, const std::string& format) {
  if (format == "json") {
    json j{{"params", r.params}, {"verdicts", r.verdicts}, {"classification", r.classification},
           {"all_bounds_satisfied", r.all_ok}};
    os << j.dump(2) << "\n";
  } else if (format == "tsv") {
    os << "bound\tapplicable\tstatus\tlhs\trhs\tnote\n";
    for (const auto& v : r.verdicts) print_verdict_tsv(os, v);
    os << "classification\tyes\t" << to_string(r.classification.category) << "\t\t\t\n";
  } else {
    for (const auto& v : r.verdicts) print_verdict_human(os, v);
    os << "classification: " << to_string(r.classification.category) << "\n";
  }
}

int cmd_check(int n, std::optional<int> k, const std::string& K_str, int d, int q, bool css,
              const std::string& format) {
  QuantumParams p;
  if (k) {
    p = QuantumParams::from_k(n, *k, d, q, css);
  } else {
    if (K_str.empty()) throw std::invalid_argument("one of --k or --K is required");
    p = QuantumParams::from_K(n, BigInt(K_str), d, q, css);
    if (css && !p.k) throw std::invalid_argument("--css requires K to be an integral power of q");
  }
  if (css && !is_prime_power(q)) throw std::invalid_argument("--css requires a prime-power alphabet");
  const CheckResult r = run_check(p);
  emit_check(std::cout, r, format);
  return r.all_ok ? kOk : kViolated;
}

json pair_summary(const CssPair& pair) {
  return json{{"n", pair.n},   {"k1", pair.k1}, {"k2", pair.k2},
              {"k", pair.k},   {"d", pair.d},   {"q", pair.c2.field()->q()}};
}

int cmd_css_verify(const std::string& c1_path, const std::string& c2_path, std::uint64_t budget,
                   const std::string& format) {
  const LinearCode c1 = LinearCode::from_generator(read_matrix_file(c1_path));
  const LinearCode c2 = LinearCode::from_generator(read_matrix_file(c2_path));
  CssPair pair = [&] {
    try {
      return CssPair::make(c1, c2, budget);
    } catch (const std::invalid_argument& e) {
      json j{{"verified", false}, {"error", e.what()}};
      std::cout << j.dump(2) << "\n";
      std::exit(kViolated);
    }
  }();
  const CheckResult r = run_check(css_params(pair));
  if (format == "json") {
    json j{{"verified", true},
           {"pair", pair_summary(pair)},
           {"params", r.params},
           {"verdicts", r.verdicts},
           {"classification", r.classification},
           {"all_bounds_satisfied", r.all_ok}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "pair: [[" << pair.n << "," << pair.k << "," << pair.d << "]]_" << pair.c2.field()->q()
              << " from k1=" << pair.k1 << ", k2=" << pair.k2 << "\n";
    emit_check(std::cout, r, format);
  }
  return r.all_ok ? kOk : kViolated;
}

int cmd_derive(const std::string& c1_path, const std::string& c2_path, const std::string& out_d,
               const std::string& out_dprime, std::uint64_t budget, const std::string& format) {
  const LinearCode c1 = LinearCode::from_generator(read_matrix_file(c1_path));
  const LinearCode c2 = LinearCode::from_generator(read_matrix_file(c2_path));
  const CssPair pair = CssPair::make(c1, c2, budget);
  const DerivedCodes derived = lemma1_derive(pair);
  const DerivedReport report = verify_derived(pair, derived, budget);

  if (!out_d.empty()) {
    std::ofstream f(out_d);
    if (!f) throw std::invalid_argument("cannot write " + out_d);
    write_matrix(f, derived.primal.tail.generator());
  }
  if (!out_dprime.empty()) {
    std::ofstream f(out_dprime);
    if (!f) throw std::invalid_argument("cannot write " + out_dprime);
    write_matrix(f, derived.from_dual.tail.generator());
  }

  if (format == "json") {
    json j{{"pair", pair_summary(pair)},
           {"report", report},
           {"d_generator", matrix_to_string(derived.primal.tail.generator())},
           {"dprime_generator", matrix_to_string(derived.from_dual.tail.generator())},
           {"column_permutation", derived.primal.perm},
           {"column_permutation_dual", derived.from_dual.perm}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "pair: [[" << pair.n << "," << pair.k << "," << pair.d << "]]_" << pair.c2.field()->q() << "\n"
              << "D  : [" << report.d_length << "," << report.d_dim << "," << report.d_min_weight << "]\n"
              << "D' : [" << report.dprime_length << "," << report.dprime_dim << "," << report.dprime_min_weight
              << "]\n"
              << "lemma1_holds: " << (report.lemma1_holds ? "yes" : "no") << "\n"
              << "D generator:\n"
              << matrix_to_string(derived.primal.tail.generator()) << "D' generator:\n"
              << matrix_to_string(derived.from_dual.tail.generator());
  }
  return report.lemma1_holds ? kOk : kViolated;
}

int cmd_scan(int n_max, std::vector<int> qs, bool css, const std::string& out, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  ScanReport rep = scan_range(n_max, std::move(qs), css);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  json j = rep;
  if (timing) j["runtime_ms"] = ms.count();
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out);
    if (!f) throw std::invalid_argument("cannot write " + out);
    f << j.dump(2) << "\n";
  }
  std::cerr << "scanned " << rep.total << " parameter sets in " << ms.count() << " ms; " << rep.open.size()
            << " open\n";
  return kOk;
}

int cmd_oracle(const OracleOptions& opt, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  OracleReport rep = oracle_exhaustive_css(opt);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  json j = rep;
  if (timing) j["runtime_ms"] = ms.count();
  std::cout << j.dump(2) << "\n";
  std::cerr << "checked " << rep.pairs_checked << " nested pairs in " << ms.count() << " ms; "
            << rep.failures.size() << " failures\n";
  return rep.failures.empty() ? kOk : kViolated;
}

int cmd_table1(const std::string& format) {
  const auto rows = table1();
  if (format == "json") {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back(json{{"q", r.q}, {"delta", r.delta_str()}, {"one_minus_delta", r.one_minus_delta_str()}});
    std::cout << j.dump(2) << "\n";
  } else if (format == "human") {
    std::cout << "q      delta   1-delta\n";
    for (const auto& r : rows)
      std::cout << r.q << (r.q < 10 ? "      " : "     ") << r.delta_str() << "   " << r.one_minus_delta_str()
                << "\n";
  } else {
    // three rows by nine columns, labels first, matching the printed table
    std::cout << "q";
    for (const auto& r : rows) std::cout << "\t" << r.q;
    std::cout << "\ndelta";
    for (const auto& r : rows) std::cout << "\t" << r.delta_str();
    std::cout << "\n1-delta";
    for (const auto& r : rows) std::cout << "\t" << r.one_minus_delta_str();
    std::cout << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quantum-code bound checks, parameter classification, and CSS pair verification"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::uint64_t budget = 0;
  try {
    budget = default_budget();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  // check
  auto* check = app.add_subcommand("check", "evaluate every applicable bound for [[n,k,d]]_q / ((n,K,d))_q");
  int n = 0, d = 0, q = 0;
  std::optional<int> k;
  std::string K_str;
  bool css = false;
  std::string check_format = "json";
  check->add_option("--n", n, "code length")->required();
  auto* kopt = check->add_option("--k", k, "dimension exponent, K = q^k");
  check->add_option("--K", K_str, "dimension as a decimal integer (for non-integral k)")->excludes(kopt);
  check->add_option("--d", d, "minimum distance")->required();
  check->add_option("--q", q, "alphabet size")->required();
  check->add_flag("--css", css, "treat the parameters as a CSS code");
  check->add_option("--format", check_format, "output format")->check(CLI::IsMember({"json", "tsv", "human"}));

  // css-verify
  auto* cssv = app.add_subcommand("css-verify", "build the CSS code of two nested generator files and check it");
  std::string c1_path, c2_path;
  std::string cssv_format = "json";
  cssv->add_option("--c1", c1_path, "generator matrix file of the inner code C1")->required();
  cssv->add_option("--c2", c2_path, "generator matrix file of the outer code C2")->required();
  cssv->add_option("--budget", budget, "work limit in codeword evaluations");
  cssv->add_option("--format", cssv_format, "output format")->check(CLI::IsMember({"json", "human"}));

  // derive
  auto* derive = app.add_subcommand("derive", "derive the two classical codes implied by a nested pair");
  std::string d1_path, d2_path, out_d, out_dprime;
  std::string derive_format = "json";
  derive->add_option("--c1", d1_path, "generator matrix file of the inner code C1")->required();
  derive->add_option("--c2", d2_path, "generator matrix file of the outer code C2")->required();
  derive->add_option("--out-d", out_d, "write the generator of D here");
  derive->add_option("--out-dprime", out_dprime, "write the generator of D' here");
  derive->add_option("--budget", budget, "work limit in codeword evaluations");
  derive->add_option("--format", derive_format, "output format")->check(CLI::IsMember({"json", "human"}));

  // scan
  auto* scan = app.add_subcommand("scan", "classify every parameter set in a range");
  int n_max = 10;
  std::vector<int> q_list;
  bool scan_css = false, timing = false;
  std::string scan_out;
  scan->add_option("--n-max", n_max, "largest code length")->required();
  scan->add_option("--q", q_list, "alphabet sizes (repeat or comma separate)")->required()->delimiter(',');
  scan->add_flag("--css", scan_css, "classify as CSS codes");
  scan->add_option("--out", scan_out, "write the JSON report here instead of stdout");
  scan->add_flag("--timing", timing, "include runtime_ms in the report");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "enumerate nested pairs and test constructions against bounds");
  OracleOptions opt;
  opt.budget = budget;
  bool oracle_timing = false;
  oracle->add_option("--q", opt.q, "alphabet size (2 or 3)");
  oracle->add_option("--n-max", opt.n_max, "largest code length");
  oracle->add_option("--budget", opt.budget, "work limit (pairs and per-pair codewords)");
  oracle->add_option("--seed", opt.seed, "seed for the sampled phase");
  oracle->add_option("--samples", opt.samples_per_n, "samples per length beyond the exhaustive range");
  oracle->add_flag("--timing", oracle_timing, "include runtime_ms in the report");

  // table1
  auto* tbl = app.add_subcommand("table1", "threshold table: q, delta = ceil3(2e/q^2), 1-delta for q=3..11");
  std::string tbl_format = "tsv";
  tbl->add_option("--format", tbl_format, "output format")->check(CLI::IsMember({"json", "tsv", "human"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(n, k, K_str, d, q, css, check_format);
    if (*cssv) return cmd_css_verify(c1_path, c2_path, budget, cssv_format);
    if (*derive) return cmd_derive(d1_path, d2_path, out_d, out_dprime, budget, derive_format);
    if (*scan) return cmd_scan(n_max, q_list, scan_css, scan_out, timing);
    if (*oracle) return cmd_oracle(opt, oracle_timing);
    if (*tbl) return cmd_table1(tbl_format);
  } catch (const WorkLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
