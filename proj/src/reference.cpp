#include "qecc/reference.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qecc::ref {

int rank_forward_elim(const CodeMatrix& m) {
  const Field& f = *m.field();
  std::vector<std::vector<int>> a(m.rows());
  for (int i = 0; i < m.rows(); ++i) a[i] = std::vector<int>(m.row(i).begin(), m.row(i).end());

  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int sel = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[sel], a[rank]);
    for (int i = rank + 1; i < m.rows(); ++i) {
      if (a[i][col] == 0) continue;
      // a_i -= (a_i[col] / a_rank[col]) * a_rank
      const int factor = f.div(a[i][col], a[rank][col]);
      for (int j = col; j < m.cols(); ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<int>> all_codewords(const LinearCode& code) {
  const Field& f = *code.field();
  const int q = f.q(), k = code.dim(), n = code.length();
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= q;

  std::vector<std::vector<int>> words;
  words.reserve(static_cast<size_t>(total));
  for (long long idx = 0; idx < total; ++idx) {
    long long v = idx;
    std::vector<int> w(n, 0);
    for (int j = 0; j < k; ++j) {
      const int s = static_cast<int>(v % q);
      v /= q;
      if (s == 0) continue;
      auto row = code.generator().row(j);
      for (int c = 0; c < n; ++c) w[c] = f.add(w[c], f.mul(s, row[c]));
    }
    words.push_back(std::move(w));
  }
  return words;
}

int min_weight_serial(const LinearCode& code) {
  if (code.dim() < 1) throw std::invalid_argument("zero code");
  int best = std::numeric_limits<int>::max();
  auto words = all_codewords(code);
  for (size_t i = 1; i < words.size(); ++i) {
    int w = 0;
    for (int v : words[i]) w += v != 0;
    best = std::min(best, w);
  }
  return best;
}

int coset_min_weight_serial(const LinearCode& c2, const LinearCode& c1) {
  auto inner = all_codewords(c1);
  std::sort(inner.begin(), inner.end());
  int best = std::numeric_limits<int>::max();
  for (const auto& w : all_codewords(c2)) {
    if (std::binary_search(inner.begin(), inner.end(), w)) continue;
    int wt = 0;
    for (int v : w) wt += v != 0;
    best = std::min(best, wt);
  }
  if (best == std::numeric_limits<int>::max()) throw std::invalid_argument("coset is empty");
  return best;
}

}  // namespace qecc::ref
