#include "qecc/threshold.hpp"

#include <stdexcept>

#include "qecc/bounds.hpp"

namespace qecc {
namespace {

const Real& euler_e() {
  static const Real e = exp(Real(1));
  return e;
}

const Real& ln2() {
  static const Real v = log(Real(2));
  return v;
}

Real log_base(int q, const Real& x) { return log(x) / log(Real(q)); }

}  // namespace

Real delta_threshold(int q) {
  if (q < 2) throw std::domain_error("q must be >= 2");
  return 2 * euler_e() / (Real(q) * q);
}

Real binary_entropy(const Real& x) {
  if (x < 0 || x > 1) throw std::domain_error("entropy argument outside [0, 1]");
  if (x == 0 || x == 1) return 0;
  return -x * log(x) / ln2() - (1 - x) * log(1 - x) / ln2();
}

std::string Table1Row::delta_str() const {
  std::string s = std::to_string(delta_milli);
  while (s.size() < 3) s.insert(s.begin(), '0');
  return "0." + s;
}

std::string Table1Row::one_minus_delta_str() const {
  std::string s = std::to_string(1000 - delta_milli);
  while (s.size() < 3) s.insert(s.begin(), '0');
  return "0." + s;
}

std::vector<Table1Row> table1() {
  std::vector<Table1Row> rows;
  for (int q = 3; q <= 11; ++q) {
    const Real scaled = delta_threshold(q) * 1000;
    auto milli = static_cast<long long>(scaled);  // truncates
    if (Real(milli) < scaled) ++milli;            // ceiling
    rows.push_back({q, static_cast<int>(milli)});
  }
  return rows;
}

std::string to_string(Thm1Status s) {
  switch (s) {
    case Thm1Status::kApplies: return "applies";
    case Thm1Status::kDoesNotApply: return "does_not_apply";
    case Thm1Status::kIndeterminate: return "indeterminate";
    case Thm1Status::kNotApplicable: return "not_applicable";
    case Thm1Status::kSingletonInconsistent: return "singleton_inconsistent";
  }
  return "?";
}

Thm1Status classify_margin(const Real& margin) {
  if (margin > kMarginEps) return Thm1Status::kApplies;
  if (margin < -kMarginEps) return Thm1Status::kDoesNotApply;
  return Thm1Status::kIndeterminate;
}

ThresholdReport thm1_applies(int n, const BigInt& K, int d, int q) {
  if (n < 1 || d < 1 || K < 2 || q < 2) throw std::invalid_argument("bad parameters");
  ThresholdReport r;
  r.q = q;
  r.delta = delta_threshold(q);
  r.one_minus_delta = 1 - r.delta;
  r.margin = r.one_minus_delta * n - (log_base(q, Real(K)) + d);
  if (q < 3) {
    r.status = Thm1Status::kNotApplicable;
  } else if (K * ipow(q, 2ul * (d - 1)) > ipow(q, n)) {
    r.status = Thm1Status::kSingletonInconsistent;
  } else {
    r.status = classify_margin(r.margin);
  }
  return r;
}

Real capacity_T(int n, int d, int q, const Real& delta) {
  if (n < 1 || d < 1 || q < 2) throw std::invalid_argument("bad parameters");
  if (!(delta > 0) || delta > 1) throw std::domain_error("delta outside (0, 1]");
  const int t = (d - 1) / 2;
  const BigInt s = sphere_sum(n, t, BigInt(q) * q - 1);
  return exp((delta * n + d) * log(Real(q))) / Real(s);
}

Real qhbcond_lhs(int n, int t, int q) {
  if (n < 1 || t < 0 || t > n || q < 2) throw std::domain_error("bad (n, t, q)");
  const Real tn = Real(t) / n;
  const Real logq2 = log_base(q, Real(2));
  return binary_entropy(tn) * logq2 + tn * log_base(q, 1 - Real(1) / (Real(q) * q)) - Real(1) / n;
}

Real f_function(const Real& x, int q) {
  if (q < 2) throw std::domain_error("q must be >= 2");
  if (!(x > 0) || !(x < 2)) throw std::domain_error("x outside (0, 2)");
  const Real half = x / 2;
  return x + half * log_base(q, half) + (1 - half) * log_base(q, 1 - half);
}

Real f_derivative(const Real& x, int q) {
  if (q < 2) throw std::domain_error("q must be >= 2");
  if (!(x > 0) || !(x < 2)) throw std::domain_error("x outside (0, 2)");
  return log_base(q, Real(q) * q * x / (2 - x)) / 2;
}

}  // namespace qecc
