#ifndef QECC_CODE_HPP
#define QECC_CODE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qecc/matrix.hpp"
#include "qecc/numeric.hpp"

namespace qecc {

// Default work limit for brute-force scans, counted in codeword
// evaluations. Overridable per call and via the CLI.
inline constexpr std::uint64_t kDefaultBudget = 1ull << 24;

// A classical [n, k] linear code over GF(q), held in canonical form: the
// generator is the RREF of whatever matrix the code was built from, with
// zero rows dropped. Two codes are equal iff they have the same row space,
// because the RREF is unique.
class LinearCode {
 public:
  // pre: m has at least one row and one column
  static LinearCode from_generator(const CodeMatrix& m);
  // the k = 0 code of length n
  static LinearCode zero(FieldPtr field, int n);

  int length() const { return n_; }
  int dim() const { return k_; }
  const FieldPtr& field() const { return gen_.field(); }
  const CodeMatrix& generator() const { return gen_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(std::span<const int> word) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  LinearCode(CodeMatrix gen, std::vector<int> pivots, int n);

  CodeMatrix gen_;  // k x n, RREF
  std::vector<int> pivots_;
  int n_, k_;
};

// Dual code under the standard inner product; dim n - k.
LinearCode dual(const LinearCode& c);

// true iff every generator row of c1 lies in c2.
// Throws std::invalid_argument on mismatched length or field.
bool is_subcode(const LinearCode& c1, const LinearCode& c2);

// Exact minimum Hamming weight over all q^k - 1 nonzero codewords.
// Throws WorkLimitError if q^k exceeds the budget, std::invalid_argument
// for the zero code.
int min_weight(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

// Minimum weight over codewords of c2 not in c1; membership in c1 is
// tested through its parity check, i.e. the generator of dual(c1).
// pre: c1 is a strict subcode of c2; q^{k2} within budget.
int coset_min_weight(const LinearCode& c2, const LinearCode& c1, std::uint64_t budget = kDefaultBudget);

}  // namespace qecc

#endif
