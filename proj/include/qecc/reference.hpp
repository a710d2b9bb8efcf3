#ifndef QECC_REFERENCE_HPP
#define QECC_REFERENCE_HPP

#include <cstdint>
#include <vector>

#include "qecc/code.hpp"
#include "qecc/matrix.hpp"

namespace qecc::ref {

// Serial reference implementations, written independently of the main
// kernels and kept for testing and benchmarking. Nothing here is used by
// the production code paths.

// Rank by plain forward elimination (no back substitution, no pivot
// normalization beyond what elimination needs).
int rank_forward_elim(const CodeMatrix& m);

// Minimum weight by enumerating every nonzero message and recomputing the
// full codeword from scratch each time.
int min_weight_serial(const LinearCode& code);

// Minimum weight over codewords of c2 that are not in c1. Membership in c1
// is decided against an explicit sorted table of all c1 codewords, not a
// parity check.
int coset_min_weight_serial(const LinearCode& c2, const LinearCode& c1);

// All codewords of a code, as digit vectors, in message order.
std::vector<std::vector<int>> all_codewords(const LinearCode& code);

}  // namespace qecc::ref

#endif
