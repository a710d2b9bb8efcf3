#ifndef QECC_CSS_HPP
#define QECC_CSS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "qecc/bounds.hpp"
#include "qecc/code.hpp"

namespace qecc {

// Nested pair C1 ⊂ C2 with the derived quantum parameters. The quantum
// distance is min{ wt(C2 \ C1), wt(C1^perp \ C2^perp) }, computed by brute
// force at construction.
struct CssPair {
  LinearCode c1, c2;
  int n = 0, k1 = 0, k2 = 0, k = 0;
  int d = 0;

  // Throws std::invalid_argument unless c1 is a strict subcode of c2
  // (so k = k2 - k1 >= 1); WorkLimitError if a coset scan would exceed
  // the budget.
  static CssPair make(LinearCode c1, LinearCode c2, std::uint64_t budget = kDefaultBudget);
};

// [[n, k2-k1, d]]_q parameters of the pair.
QuantumParams css_params(const CssPair& pair);
// Convenience: build the pair and package its parameters in one step.
QuantumParams css_params(const LinearCode& c1, const LinearCode& c2, std::uint64_t budget = kDefaultBudget);

// One side of the constructive derivation: the outer code's generator in
// the block form
//     [ I_{k1} | P       ]
//     [ 0      | I_k  A' ]
// after an explicit column permutation that front-loads the pivots.
// perm[i] is the original column shown at permuted position i, so applying
// the inverse permutation to the block rows recovers a generator of the
// outer code.
struct SideDerivation {
  std::vector<int> perm;
  CodeMatrix block;  // (k1 + k) x n, permuted coordinates
  LinearCode tail;   // rows [I_k | A'], a code of length n - k1 and dim k
};

// The two classical codes implied by a CSS pair: D of length n - k1 from
// (C1, C2), and D' of length k + k1 from the dual pair (C2^perp, C1^perp).
// Both have dimension exactly k and minimum weight >= d.
struct DerivedCodes {
  SideDerivation primal;     // tail = D
  SideDerivation from_dual;  // tail = D'
};

SideDerivation derive_side(const LinearCode& inner, const LinearCode& outer);
DerivedCodes lemma1_derive(const CssPair& pair);

struct DerivedReport {
  int d_length = 0, d_dim = 0, d_min_weight = 0;
  int dprime_length = 0, dprime_dim = 0, dprime_min_weight = 0;
  bool lemma1_holds = false;

  friend bool operator==(const DerivedReport&, const DerivedReport&) = default;
};

// Check the derivation against the pair: both dimensions must equal k and
// both brute-force minimum weights must reach the pair's distance d.
DerivedReport verify_derived(const CssPair& pair, const DerivedCodes& derived,
                             std::uint64_t budget = kDefaultBudget);

// Random nested pair for property sweeps: C2 from random generator rows
// (re-drawn until nonzero), C1 as the span of random C2 codewords,
// rejected until strictly smaller.
CssPair random_nested_pair(const FieldPtr& field, int n, std::mt19937_64& rng,
                           std::uint64_t budget = kDefaultBudget);

}  // namespace qecc

#endif
