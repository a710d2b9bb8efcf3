#include "qecc/field.hpp"

#include <stdexcept>
#include <string>

#include "qecc/numeric.hpp"

namespace qecc {
namespace {

// Dense polynomials over GF(p), coefficients low degree first, for the
// one-time modulus search and multiplication table construction.

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& mod, int p) {
  // mod is monic
  const int dm = static_cast<int>(mod.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    int c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      int& t = a[i - dm + j];
      t = (t - c * mod[j]) % p;
      if (t < 0) t += p;
    }
  }
  a.resize(dm);
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

int poly_degree(const std::vector<int>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// Remainder of a by b (b nonzero), both low-first.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
  const int db = poly_degree(b);
  int lead_inv = 0;
  for (int x = 1; x < p; ++x)
    if (b[db] * x % p == 1) lead_inv = x;
  int da = poly_degree(a);
  while (da >= db) {
    int c = a[da] * lead_inv % p;
    for (int j = 0; j <= db; ++j) {
      int& t = a[da - db + j];
      t = (t - c * b[j]) % p;
      if (t < 0) t += p;
    }
    da = poly_degree(a);
  }
  return a;
}

bool poly_is_zero(const std::vector<int>& a) { return poly_degree(a) < 0; }

// Irreducibility over GF(p) by trial division against every monic polynomial
// of degree 1..deg/2. Fine at this scale (deg <= 8, p <= 251).
bool is_irreducible(const std::vector<int>& f, int p) {
  const int d = poly_degree(f);
  if (d < 1) return false;
  for (int e = 1; 2 * e <= d; ++e) {
    // enumerate monic divisor candidates of degree e by base-p counter
    std::vector<int> g(e + 1, 0);
    g[e] = 1;
    long long total = 1;
    for (int i = 0; i < e; ++i) total *= p;
    for (long long idx = 0; idx < total; ++idx) {
      long long v = idx;
      for (int i = 0; i < e; ++i) {
        g[i] = static_cast<int>(v % p);
        v /= p;
      }
      if (poly_is_zero(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(int p, int m) : p_(p), m_(m), q_(1) {
  for (int i = 0; i < m; ++i) q_ *= p;

  // Smallest monic irreducible modulus of degree m, ordered by the base-p
  // encoding of the coefficient vector.
  if (m == 1) {
    modulus_ = {0, 1};  // x
  } else {
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= p;
    std::vector<int> f(m + 1, 0);
    f[m] = 1;
    bool found = false;
    for (long long idx = 0; idx < total && !found; ++idx) {
      long long v = idx;
      for (int i = 0; i < m; ++i) {
        f[i] = static_cast<int>(v % p);
        v /= p;
      }
      if (is_irreducible(f, p)) {
        modulus_ = f;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");
  }

  // Build the arithmetic tables. Elements <-> base-p digit vectors.
  auto decode = [&](int a) {
    std::vector<int> c(m_, 0);
    for (int i = 0; i < m_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  };
  auto enc = [&](const std::vector<int>& c) {
    int v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p_ + c[i];
    return v;
  };

  add_.assign(static_cast<size_t>(q_) * q_, 0);
  mul_.assign(static_cast<size_t>(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, -1);

  for (int a = 0; a < q_; ++a) {
    auto ca = decode(a);
    std::vector<int> cn(m_);
    for (int i = 0; i < m_; ++i) cn[i] = (p_ - ca[i]) % p_;
    neg_[a] = enc(cn);
    for (int b = 0; b < q_; ++b) {
      auto cb = decode(b);
      std::vector<int> cs(m_);
      for (int i = 0; i < m_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
      add_[static_cast<size_t>(a) * q_ + b] = enc(cs);
      auto cm = poly_mod(poly_mul(ca, cb, p_), modulus_, p_);
      cm.resize(m_);
      int prod = enc(cm);
      mul_[static_cast<size_t>(a) * q_ + b] = prod;
      if (prod == 1) inv_[a] = b;
    }
  }
}

std::shared_ptr<const Field> Field::make(int p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("p not prime: " + std::to_string(p));
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > 256) throw std::invalid_argument("field order p^m exceeds 256");
  }
  return std::shared_ptr<const Field>(new Field(p, m));
}

int Field::inv(int a) const {
  if (a == 0) throw std::domain_error("inversion of zero");
  return inv_[a];
}

int Field::div(int a, int b) const {
  if (b == 0) throw std::domain_error("division by zero");
  return mul(a, inv_[b]);
}

std::vector<int> Field::coeffs(int a) const {
  std::vector<int> c(m_, 0);
  for (int i = 0; i < m_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

int Field::encode(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != m_) throw std::invalid_argument("coefficient vector has wrong length");
  int v = 0;
  for (int i = m_ - 1; i >= 0; --i) {
    if (coeffs[i] < 0 || coeffs[i] >= p_) throw std::invalid_argument("coefficient out of range");
    v = v * p_ + coeffs[i];
  }
  return v;
}

FieldElement::FieldElement(FieldPtr field, int value) : field_(std::move(field)), value_(value) {
  if (value_ < 0 || value_ >= field_->q()) throw std::invalid_argument("element encoding out of range");
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field()->same_as(*b.field())) throw std::invalid_argument("mixed fields");
  return *a.field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return {a.field(), common_field(a, b).add(a.value(), b.value())};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return {a.field(), common_field(a, b).sub(a.value(), b.value())};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return {a.field(), common_field(a, b).mul(a.value(), b.value())};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return {a.field(), common_field(a, b).div(a.value(), b.value())};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field()->same_as(*b.field()) && a.value() == b.value();
}

}  // namespace qecc
