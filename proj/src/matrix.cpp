#include "qecc/matrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qecc {

CodeMatrix::CodeMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

CodeMatrix CodeMatrix::from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  CodeMatrix m(std::move(field), r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void CodeMatrix::set(int r, int c, int v) {
  if (v < 0 || v >= field_->q()) throw std::invalid_argument("entry out of field range");
  entries_[static_cast<size_t>(r) * cols_ + c] = v;
}

bool operator==(const CodeMatrix& a, const CodeMatrix& b) {
  return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RrefResult rref(const CodeMatrix& m) {
  const Field& f = *m.field();
  CodeMatrix r = m;
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
    int sel = -1;
    for (int i = lead; i < r.rows(); ++i) {
      if (r.at(i, col) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != lead) {
      for (int j = 0; j < r.cols(); ++j) {
        int t = r.at(lead, j);
        r.set(lead, j, r.at(sel, j));
        r.set(sel, j, t);
      }
    }
    // normalize pivot to 1, then clear the column everywhere else
    const int pinv = f.inv(r.at(lead, col));
    for (int j = col; j < r.cols(); ++j) r.set(lead, j, f.mul(pinv, r.at(lead, j)));
    for (int i = 0; i < r.rows(); ++i) {
      if (i == lead) continue;
      const int c = r.at(i, col);
      if (c == 0) continue;
      for (int j = col; j < r.cols(); ++j) r.set(i, j, f.sub(r.at(i, j), f.mul(c, r.at(lead, j))));
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), static_cast<int>(pivots.size()), std::move(pivots)};
}

CodeMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty matrix input");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  int p = 0, m = 0;
  std::vector<int> modulus;
  {
    std::istringstream hs(line);
    std::string qtok, mtok;
    hs >> qtok >> mtok;
    if (qtok.rfind("q=", 0) != 0 || mtok.rfind("modulus=", 0) != 0)
      throw std::invalid_argument("bad matrix header: " + line);
    const std::string qs = qtok.substr(2);
    const auto caret = qs.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("bad field spec: " + qtok);
    p = std::stoi(qs.substr(0, caret));
    m = std::stoi(qs.substr(caret + 1));
    std::istringstream cs(mtok.substr(8));
    std::string item;
    while (std::getline(cs, item, ',')) modulus.push_back(std::stoi(item));
  }
  FieldPtr field = Field::make(p, m);
  if (modulus != field->modulus())
    throw std::invalid_argument("modulus in file does not match canonical modulus for this field");

  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<int> row;
    int v;
    while (ls >> v) row.push_back(v);
    if (row.empty()) continue;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix has no rows");
  const size_t n = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("ragged matrix rows");
  return CodeMatrix::from_rows(std::move(field), rows);
}

CodeMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const CodeMatrix& m) {
  const Field& f = *m.field();
  out << "q=" << f.p() << "^" << f.m() << " modulus=";
  for (size_t i = 0; i < f.modulus().size(); ++i) {
    if (i) out << ",";
    out << f.modulus()[i];
  }
  out << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << " ";
      out << m.at(i, j);
    }
    out << "\n";
  }
}

std::string matrix_to_string(const CodeMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

}  // namespace qecc
