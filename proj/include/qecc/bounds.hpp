#ifndef QECC_BOUNDS_HPP
#define QECC_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qecc/numeric.hpp"

namespace qecc {

// Parameters ((n, K, d))_q. K is kept as an exact big integer; k is the
// integer exponent when K happens to be a power of q (always the case for
// CSS codes, where k = k2 - k1).
struct QuantumParams {
  int n = 0;
  BigInt K = 0;
  int d = 0;
  int q = 0;
  bool css = false;
  std::optional<int> k;

  int t() const { return (d - 1) / 2; }

  static QuantumParams from_k(int n, int k, int d, int q, bool css);
  static QuantumParams from_K(int n, BigInt K, int d, int q, bool css);

  friend bool operator==(const QuantumParams&, const QuantumParams&) = default;
};

// Record of one bound evaluation. Every bound is normalized so that
// satisfied <=> lhs <= rhs; lhs/rhs are decimal strings because q^n
// overflows machine words immediately. All comparisons happen in exact
// integer arithmetic before the values are rendered.
struct BoundVerdict {
  std::string bound;
  bool applicable = true;
  bool satisfied = false;
  bool equality = false;  // lhs == rhs; only meaningful when applicable
  std::string lhs;
  std::string rhs;
  std::string note;

  friend bool operator==(const BoundVerdict&, const BoundVerdict&) = default;
};

// Sum over j = 0..t of C(a, j) * w^j, with C(a, j) = 0 for j > a.
BigInt sphere_sum(long long a, int t, const BigInt& w);

// Quantum Hamming bound: K * sum_{j<=t} C(n,j)(q^2-1)^j <= q^n.
BoundVerdict qhb_check(const QuantumParams& p);

// Quantum Singleton bound as K * q^{2(d-1)} <= q^n; equality marks the
// code MDS, which makes it provably nondegenerate.
BoundVerdict quantum_singleton_check(const QuantumParams& p);

struct ClassicalBoundSet {
  BoundVerdict singleton, hamming, griesmer;
};

// Classical Singleton / Hamming / Griesmer for an [n, k, d]_q code.
ClassicalBoundSet classical_bounds(int n, int k, int d, int q);

// CSS analogue of the Griesmer bound, evaluated in integers as
// n + k >= 2 * sum_{i<k} ceil(d / q^i).
BoundVerdict quantum_griesmer_css(int n, int k, int d, int q);

// Sharpened Singleton-type bound for CSS codes with d >= q, evaluated as
// 2d(q+1) - 4q <= q(n-k). Not applicable when d < q.
BoundVerdict cor_tight_singleton(int n, int k, int d, int q);

// Error-correction ceiling for binary CSS codes: t <= floor((n-k+1)/6).
int rains_css_max_t(int n, int k);
BoundVerdict rains_error_limit(int n, int k, int d);

// Feasible window for the inner-code dimension k1 of a CSS pair:
// [d-1, n-k-d+1] clipped to [0, n-k]. Empty window = no such CSS code.
struct K1Window {
  int lo = 0, hi = -1;
  bool empty() const { return lo > hi; }
};
K1Window k1_feasible_range(int n, int k, int d);
BoundVerdict k1_window_verdict(int n, int k, int d);

// Product of the two shortened classical Hamming bounds:
// q^k * S(n-k1) * S(k1+k) <= q^n with S(a) = sum_{j<=t} C(a,j)(q-1)^j.
BoundVerdict combined_css_hamming(int n, int k, int d, int q, int k1);

struct CssFeasibility {
  std::vector<BoundVerdict> verdicts;  // structural bounds, paper order
  K1Window window;
  std::vector<BoundVerdict> per_k1;    // combined bound, one per k1 in window
  bool css_possible = false;
};

// Aggregate structural feasibility of [[n,k,d]]_q as a CSS code:
// all applicable bounds hold, the k1 window is nonempty, and at least one
// k1 in the window passes the combined Hamming product.
CssFeasibility css_feasibility(int n, int k, int d, int q);

}  // namespace qecc

#endif
