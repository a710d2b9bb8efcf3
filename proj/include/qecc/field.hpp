#ifndef QECC_FIELD_HPP
#define QECC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace qecc {

// GF(p^m) with a fixed modulus polynomial, p prime, q = p^m <= 256.
//
// Elements are encoded as integers in [0, q): the element with polynomial
// coefficients (c_0, ..., c_{m-1}) (low degree first) is encoded as
// sum c_i p^i. The modulus is the monic irreducible polynomial of degree m
// whose coefficient vector has the smallest such encoding, found by
// exhaustive search at construction; this makes element encodings
// reproducible across runs. For m = 1 the modulus is x and arithmetic is
// plain mod p.
//
// All arithmetic is table driven. A Field is immutable after construction
// and safe to share between threads.
class Field {
 public:
  // Throws std::invalid_argument if p is not prime, m < 1, or p^m > 256.
  static std::shared_ptr<const Field> make(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }

  // Modulus coefficients, low degree first, length m+1, monic.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }

  // Throw std::domain_error on zero input.
  int inv(int a) const;
  int div(int a, int b) const;

  std::vector<int> coeffs(int a) const;            // base-p digits, length m
  int encode(const std::vector<int>& coeffs) const;

  bool same_as(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

 private:
  Field(int p, int m);

  int p_, m_, q_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_;  // q*q flat tables
  std::vector<int> neg_, inv_;  // inv_[0] = -1 sentinel
};

using FieldPtr = std::shared_ptr<const Field>;

// A single element bound to its field. Mixed-field arithmetic throws
// std::invalid_argument; inverting or dividing by zero throws
// std::domain_error.
class FieldElement {
 public:
  FieldElement(FieldPtr field, int value);

  int value() const { return value_; }
  const FieldPtr& field() const { return field_; }
  std::vector<int> coeffs() const { return field_->coeffs(value_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  int value_;
};

}  // namespace qecc

#endif
