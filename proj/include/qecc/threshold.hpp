#ifndef QECC_THRESHOLD_HPP
#define QECC_THRESHOLD_HPP

#include <string>
#include <vector>

#include "qecc/numeric.hpp"

namespace qecc {

// Comparisons closer to the boundary than this are reported as
// indeterminate rather than guessed; the working type carries 168
// significand bits, so the gap between honest margins and rounding noise
// is enormous.
inline const Real kMarginEps = Real("1e-30");

// 2e / q^2, the threshold on delta above which the entropy argument closes.
// Defined for q >= 2; the theorem itself needs q >= 3 (for q = 2 the value
// exceeds 1 and no code qualifies).
Real delta_threshold(int q);

// Binary entropy h(x) = -x log2 x - (1-x) log2(1-x), with h(0) = h(1) = 0.
Real binary_entropy(const Real& x);

struct Table1Row {
  int q = 0;
  int delta_milli = 0;  // ceiling of delta at the third decimal, in units of 1/1000

  std::string delta_str() const;            // e.g. "0.605"
  std::string one_minus_delta_str() const;  // e.g. "0.395"
};

// Threshold table for q = 3..11. The printed three-decimal values round
// delta by ceiling (0.60406... -> 0.605), and 1 - delta is one minus the
// rounded value.
std::vector<Table1Row> table1();

enum class Thm1Status {
  kApplies,                // k + d <= (1 - 2e/q^2) n with decisive margin
  kDoesNotApply,           // strict failure with decisive margin
  kIndeterminate,          // margin within the precision guard band
  kNotApplicable,          // q < 3
  kSingletonInconsistent,  // K > q^{n-2d+2}: no code exists, statement vacuous
};

std::string to_string(Thm1Status s);

struct ThresholdReport {
  int q = 0;
  Real delta{};
  Real one_minus_delta{};
  Thm1Status status = Thm1Status::kNotApplicable;
  Real margin{};  // (1 - delta) n - (log_q K + d)
  int precision_bits = kRealPrecisionBits;
};

Thm1Status classify_margin(const Real& margin);

// Does the threshold condition certify that an ((n, K, d))_q code obeys the
// quantum Hamming bound? Decisive only beyond the precision guard band.
//
// The certificate is a statement about codes, and its derivation leans on
// the quantum Singleton bound, which every code obeys. Parameter tuples
// with K > q^{n-2d+2} describe no code at all, so the condition is
// reported as kSingletonInconsistent for them rather than kApplies (the
// exact-arithmetic conclusion genuinely fails on such tuples).
ThresholdReport thm1_applies(int n, const BigInt& K, int d, int q);

// Diagnostic T = q^{delta n + d} / sum_{j<=t} C(n,j)(q^2-1)^j. T >= 1
// whenever the threshold condition holds at delta = 2e/q^2.
Real capacity_T(int n, int d, int q, const Real& delta);

// Left-hand side of the entropy condition:
// h(t/n) log_q 2 + (t/n) log_q(1 - q^-2) - 1/n.
Real qhbcond_lhs(int n, int t, int q);

// f(x) = x - h(x/2) log_q 2 = x + (x/2) log_q(x/2) + (1-x/2) log_q(1-x/2),
// for x in (0, 2). Nonnegative for x >= 2e/q^2 when q >= 3.
Real f_function(const Real& x, int q);

// f'(x) = (1/2) log_q(q^2 x / (2 - x)); positive for x > 2/(q^2+1).
Real f_derivative(const Real& x, int q);

}  // namespace qecc

#endif
