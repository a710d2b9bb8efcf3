#include "qecc/numeric.hpp"

namespace qecc {

BigInt binomial(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // exact: r is C(a-b+i, i) after this step
  }
  return r;
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r = 1, b = base;
  while (exp != 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_prime_power(int q, int* p_out, int* m_out) {
  if (q < 2) return false;
  int p = q;
  for (int d = 2; static_cast<long long>(d) * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int m = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (m_out) *m_out = m;
  return true;
}

int exact_log(const BigInt& K, int q) {
  if (q < 2 || K < 1) return -1;
  BigInt v = K;
  int k = 0;
  while (v > 1) {
    if (v % q != 0) return -1;
    v /= q;
    ++k;
  }
  return k;
}

}  // namespace qecc
