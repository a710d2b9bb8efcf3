#include "qecc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace qecc {
namespace {

void validate_common(int n, int d, int q) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (q < 2) throw std::invalid_argument("q must be >= 2");
}

BoundVerdict make_verdict(std::string name, const BigInt& lhs, const BigInt& rhs, std::string note = {}) {
  BoundVerdict v;
  v.bound = std::move(name);
  v.applicable = true;
  v.satisfied = lhs <= rhs;
  v.equality = lhs == rhs;
  v.lhs = lhs.str();
  v.rhs = rhs.str();
  v.note = std::move(note);
  return v;
}

BigInt griesmer_sum(int k, int d, int q) {
  BigInt sum = 0;
  BigInt qi = 1;
  for (int i = 0; i < k; ++i) {
    if (qi >= d) {
      sum += k - i;  // remaining ceilings are all 1
      break;
    }
    sum += ceil_div(BigInt(d), qi);
    qi *= q;
  }
  return sum;
}

}  // namespace

QuantumParams QuantumParams::from_k(int n, int k, int d, int q, bool css) {
  validate_common(n, d, q);
  if (k < 1) throw std::invalid_argument("k must be >= 1 (K > 1)");
  QuantumParams p;
  p.n = n;
  p.K = ipow(q, static_cast<unsigned long>(k));
  p.d = d;
  p.q = q;
  p.css = css;
  p.k = k;
  return p;
}

QuantumParams QuantumParams::from_K(int n, BigInt K, int d, int q, bool css) {
  validate_common(n, d, q);
  if (K < 2) throw std::invalid_argument("K must be >= 2");
  QuantumParams p;
  p.n = n;
  p.K = std::move(K);
  p.d = d;
  p.q = q;
  p.css = css;
  const int k = exact_log(p.K, q);
  if (k >= 0) p.k = k;
  return p;
}

BigInt sphere_sum(long long a, int t, const BigInt& w) {
  BigInt sum = 0;
  BigInt wj = 1;
  for (int j = 0; j <= t; ++j) {
    sum += binomial(a, j) * wj;
    wj *= w;
  }
  return sum;
}

BoundVerdict qhb_check(const QuantumParams& p) {
  const BigInt s = sphere_sum(p.n, p.t(), BigInt(p.q) * p.q - 1);
  return make_verdict("quantum_hamming", p.K * s, ipow(p.q, p.n));
}

BoundVerdict quantum_singleton_check(const QuantumParams& p) {
  // K <= q^{n-2d+2}, kept integral as K * q^{2(d-1)} <= q^n
  auto v = make_verdict("quantum_singleton", p.K * ipow(p.q, 2ul * (p.d - 1)), ipow(p.q, p.n));
  if (v.equality) v.note = "mds";
  return v;
}

ClassicalBoundSet classical_bounds(int n, int k, int d, int q) {
  validate_common(n, d, q);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int t = (d - 1) / 2;
  ClassicalBoundSet s;
  s.singleton = make_verdict("classical_singleton", BigInt(k) + d, BigInt(n) + 1);
  s.hamming =
      make_verdict("classical_hamming", ipow(q, k) * sphere_sum(n, t, BigInt(q) - 1), ipow(q, n));
  s.griesmer = make_verdict("classical_griesmer", griesmer_sum(k, d, q), n);
  return s;
}

BoundVerdict quantum_griesmer_css(int n, int k, int d, int q) {
  validate_common(n, d, q);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  auto v = make_verdict("quantum_griesmer_css", 2 * griesmer_sum(k, d, q), BigInt(n) + k);
  if (v.equality) v.note = "meets the quantum Griesmer bound";
  return v;
}

BoundVerdict cor_tight_singleton(int n, int k, int d, int q) {
  validate_common(n, d, q);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (d < q) {
    BoundVerdict v;
    v.bound = "css_tight_singleton";
    v.applicable = false;
    v.note = "requires d >= q";
    return v;
  }
  return make_verdict("css_tight_singleton", 2 * BigInt(d) * (q + 1) - 4 * q, BigInt(q) * (n - k));
}

int rains_css_max_t(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("bad (n, k)");
  return (n - k + 1) / 6;
}

BoundVerdict rains_error_limit(int n, int k, int d) {
  const int t = (d - 1) / 2;
  auto v = make_verdict("css_rains_error_limit", t, rains_css_max_t(n, k));
  v.note = "binary CSS codes only";
  return v;
}

K1Window k1_feasible_range(int n, int k, int d) {
  validate_common(n, d, 2);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  K1Window w;
  w.lo = std::max(d - 1, 0);
  w.hi = std::min(n - k - d + 1, n - k);
  if (w.hi < 0 || w.lo > n - k) {
    w.lo = 0;
    w.hi = -1;
  }
  return w;
}

BoundVerdict k1_window_verdict(int n, int k, int d) {
  const K1Window w = k1_feasible_range(n, k, d);
  BoundVerdict v;
  v.bound = "css_k1_window";
  v.applicable = true;
  v.satisfied = !w.empty();
  v.equality = !w.empty() && w.lo == w.hi;
  if (w.empty()) {
    v.lhs = std::to_string(std::max(d - 1, 0));
    v.rhs = std::to_string(std::min(n - k - d + 1, n - k));
    v.note = "empty window: no inner-code dimension admits these parameters";
  } else {
    v.lhs = std::to_string(w.lo);
    v.rhs = std::to_string(w.hi);
  }
  return v;
}

BoundVerdict combined_css_hamming(int n, int k, int d, int q, int k1) {
  validate_common(n, d, q);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k1 < 0 || k1 > n - k) throw std::invalid_argument("k1 out of [0, n-k]");
  const int t = (d - 1) / 2;
  const BigInt w = BigInt(q) - 1;
  const BigInt lhs = ipow(q, k) * sphere_sum(n - k1, t, w) * sphere_sum(k1 + k, t, w);
  auto v = make_verdict("combined_css_hamming", lhs, ipow(q, n));
  v.note = "k1=" + std::to_string(k1);
  return v;
}

CssFeasibility css_feasibility(int n, int k, int d, int q) {
  validate_common(n, d, q);
  if (k < 1) throw std::invalid_argument("k must be >= 1");

  CssFeasibility f;
  f.verdicts.push_back(quantum_singleton_check(QuantumParams::from_k(n, k, d, q, true)));
  f.verdicts.push_back(quantum_griesmer_css(n, k, d, q));
  f.verdicts.push_back(cor_tight_singleton(n, k, d, q));
  if (q == 2) f.verdicts.push_back(rains_error_limit(n, k, d));
  f.verdicts.push_back(k1_window_verdict(n, k, d));

  f.window = k1_feasible_range(n, k, d);
  bool any_k1 = false;
  for (int k1 = f.window.lo; k1 <= f.window.hi; ++k1) {
    f.per_k1.push_back(combined_css_hamming(n, k, d, q, k1));
    any_k1 = any_k1 || f.per_k1.back().satisfied;
  }
  const bool structural_ok = std::all_of(f.verdicts.begin(), f.verdicts.end(),
                                         [](const BoundVerdict& v) { return !v.applicable || v.satisfied; });
  f.css_possible = structural_ok && !f.window.empty() && any_k1;
  return f;
}

}  // namespace qecc
