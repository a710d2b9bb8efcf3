#ifndef QECC_MATRIX_HPP
#define QECC_MATRIX_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qecc/field.hpp"

namespace qecc {

// Dense rectangular matrix over one field, entries stored as integer
// encodings in [0, q).
class CodeMatrix {
 public:
  CodeMatrix(FieldPtr field, int rows, int cols);
  static CodeMatrix from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  int at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, int v);

  std::span<const int> row(int r) const {
    return {entries_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }
  std::span<int> row(int r) {
    return {entries_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }

  friend bool operator==(const CodeMatrix& a, const CodeMatrix& b);

 private:
  FieldPtr field_;
  int rows_, cols_;
  std::vector<int> entries_;
};

struct RrefResult {
  CodeMatrix matrix;
  int rank;
  std::vector<int> pivots;  // strictly increasing pivot columns
};

// Reduced row echelon form by Gauss-Jordan elimination. The RREF of a
// matrix is unique, so it doubles as a canonical form for row spaces.
// An empty or all-zero matrix yields rank 0.
RrefResult rref(const CodeMatrix& m);

// Text format:
//   q=p^m modulus=c0,c1,...,cm
//   <row of space-separated integer-encoded elements>
//   ...
// Parsing checks that the declared modulus matches the field's canonical
// modulus. Malformed input throws std::invalid_argument.
CodeMatrix read_matrix(std::istream& in);
CodeMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const CodeMatrix& m);
std::string matrix_to_string(const CodeMatrix& m);

}  // namespace qecc

#endif
