#ifndef QECC_SCAN_HPP
#define QECC_SCAN_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qecc/bounds.hpp"
#include "qecc/css.hpp"

namespace qecc {

enum class Category {
  kSatisfiesHamming,
  kImpossibleThm1,
  kImpossibleCssQ5,
  kImpossibleCssStructural,
  kImpossibleMdsNondegenerate,
  kOpenDegenerateCandidate,
};

std::string to_string(Category c);
Category category_from_string(const std::string& s);
bool is_impossible(Category c);

struct Classification {
  QuantumParams params;
  Category category = Category::kOpenDegenerateCandidate;
  std::vector<BoundVerdict> reasons;
};

// Decide what the implemented theorems say about a parameter set, in a
// fixed order:
//   1. Hamming bound satisfied               -> SATISFIES_HAMMING
//   2. quantum Singleton met with equality   -> IMPOSSIBLE_MDS_NONDEGENERATE
//      (MDS codes are nondegenerate, so they cannot violate Hamming)
//   3. threshold condition applies           -> IMPOSSIBLE_THM1
//   4. CSS and prime power q >= 5            -> IMPOSSIBLE_CSS_Q5
//   5. CSS and structural feasibility fails  -> IMPOSSIBLE_CSS_STRUCTURAL
//   6. otherwise                             -> OPEN_DEGENERATE_CANDIDATE
// The reason chain records every verdict examined, in order.
Classification classify(const QuantumParams& p);

struct OpenEntry {
  int n = 0, k = 0, d = 0, q = 0;
  bool css = false;

  friend auto operator<=>(const OpenEntry&, const OpenEntry&) = default;
};

struct ScanReport {
  int schema_version = 1;
  int n_max = 0;
  std::vector<int> qs;
  bool css = false;
  std::uint64_t total = 0;
  std::map<std::string, std::uint64_t> counts;  // keyed by category name
  std::vector<OpenEntry> open;                  // sorted by (n, k, d, q)

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

using OpenCallback = std::function<void(const OpenEntry&)>;

// Classify every (n <= n_max, 1 <= k < n, 2 <= d <= n, q in qs) with
// K = q^k. OPEN entries are streamed to the callback in canonical order.
ScanReport scan_range(int n_max, std::vector<int> qs, bool css, const OpenCallback& on_open = {});

// Number of k-dimensional subspaces of F_q^n.
BigInt gaussian_binomial(int n, int k, int q);

// Visit the unique RREF generator of every k-dimensional subspace of
// F_q^n (k >= 1).
void for_each_rref_subspace(const FieldPtr& field, int n, int k,
                            const std::function<void(const CodeMatrix&)>& fn);

struct OracleOptions {
  int q = 2;
  int n_max = 5;
  std::uint64_t budget = kDefaultBudget;  // caps pairs examined and per-pair scans
  std::uint64_t seed = 1;
  int samples_per_n = 10000;  // sampling density beyond the exhaustive range
};

struct OracleFailure {
  int n = 0, k1 = 0, k2 = 0;
  std::string check;
  std::string detail;

  friend auto operator<=>(const OracleFailure&, const OracleFailure&) = default;
};

struct OracleReport {
  int schema_version = 1;
  int q = 0, n_max = 0;
  std::uint64_t budget = 0, seed = 0;
  int exhaustive_n_limit = 0;
  int samples_per_n = 0;
  bool complete = true;  // false when the budget truncated the sweep
  std::uint64_t pairs_checked = 0;
  std::map<int, std::uint64_t> pairs_per_n;
  std::vector<OracleFailure> failures;  // sorted, canonical

  friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

// The per-pair ground-truth assertions: quantum Griesmer, the binary
// error-correction ceiling, the constructive derivation, and consistency
// with classify. Split out so the harness can feed corrupted parameters
// and watch the checks trip.
std::vector<OracleFailure> oracle_assertions(const CssPair& pair, const QuantumParams& params,
                                             std::uint64_t budget);

// Enumerate nested pairs C1 ⊂ C2 exhaustively for n up to the per-field
// limit (6 for q = 2, 4 for q = 3), by seeded random sampling beyond, and
// run the assertions on the realized parameters of every pair.
OracleReport oracle_exhaustive_css(const OracleOptions& opt);

}  // namespace qecc

#endif
