#ifndef QECC_NUMERIC_HPP
#define QECC_NUMERIC_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qecc {

// Exact integer arithmetic for every bound comparison; no floating point
// is allowed to decide a bound.
using BigInt = boost::multiprecision::cpp_int;

// Working type for the entropy/threshold computations. 168 significand bits.
using Real = boost::multiprecision::cpp_bin_float_50;

inline constexpr int kRealPrecisionBits = 168;

// Thrown when a brute-force scan would exceed its work limit. Callers get
// this instead of an approximate answer.
class WorkLimitError : public std::runtime_error {
 public:
  explicit WorkLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Binomial coefficient with the convention C(a,b) = 0 for b < 0 or b > a.
// The shortened-length sums in the CSS feasibility check rely on this.
BigInt binomial(long long a, long long b);

// base^exp for exp >= 0.
BigInt ipow(const BigInt& base, unsigned long exp);

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  return (a + b - 1) / b;
}

bool is_prime(int p);

// true iff q = p^m for some prime p and m >= 1; outputs p and m if requested
bool is_prime_power(int q, int* p_out = nullptr, int* m_out = nullptr);

// If K == q^k for an integer k >= 0, returns k; otherwise -1.
int exact_log(const BigInt& K, int q);

// Mixer used to derive independent per-trial seeds, so parallel sweeps are
// reproducible regardless of thread count.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace qecc

#endif
