#include "qecc/code.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qecc {

LinearCode::LinearCode(CodeMatrix gen, std::vector<int> pivots, int n)
    : gen_(std::move(gen)), pivots_(std::move(pivots)), n_(n), k_(gen_.rows()) {}

LinearCode LinearCode::from_generator(const CodeMatrix& m) {
  if (m.rows() < 1 || m.cols() < 1) throw std::invalid_argument("generator matrix must be nonempty");
  RrefResult r = rref(m);
  CodeMatrix gen(m.field(), r.rank, m.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < m.cols(); ++j) gen.set(i, j, r.matrix.at(i, j));
  return LinearCode(std::move(gen), std::move(r.pivots), m.cols());
}

LinearCode LinearCode::zero(FieldPtr field, int n) {
  if (n < 1) throw std::invalid_argument("code length must be >= 1");
  return LinearCode(CodeMatrix(std::move(field), 0, n), {}, n);
}

bool LinearCode::contains(std::span<const int> word) const {
  if (static_cast<int>(word.size()) != n_) throw std::invalid_argument("word length mismatch");
  const Field& f = *field();
  std::vector<int> w(word.begin(), word.end());
  for (int i = 0; i < k_; ++i) {
    const int coef = w[pivots_[i]];
    if (coef == 0) continue;
    auto row = gen_.row(i);
    for (int j = 0; j < n_; ++j) w[j] = f.sub(w[j], f.mul(coef, row[j]));
  }
  return std::all_of(w.begin(), w.end(), [](int v) { return v == 0; });
}

bool operator==(const LinearCode& a, const LinearCode& b) {
  return a.n_ == b.n_ && a.k_ == b.k_ && a.gen_ == b.gen_;
}

LinearCode dual(const LinearCode& c) {
  const Field& f = *c.field();
  const int n = c.length(), k = c.dim();
  if (k == n) return LinearCode::zero(c.field(), n);

  // Nullspace basis from the RREF: one row per free column.
  std::vector<bool> is_pivot(n, false);
  for (int p : c.pivots()) is_pivot[p] = true;
  std::vector<std::vector<int>> rows;
  rows.reserve(n - k);
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> v(n, 0);
    v[free] = 1;
    for (int i = 0; i < k; ++i) v[c.pivots()[i]] = f.neg(c.generator().at(i, free));
    rows.push_back(std::move(v));
  }
  return LinearCode::from_generator(CodeMatrix::from_rows(c.field(), rows));
}

bool is_subcode(const LinearCode& c1, const LinearCode& c2) {
  if (c1.length() != c2.length()) throw std::invalid_argument("length mismatch");
  if (!c1.field()->same_as(*c2.field())) throw std::invalid_argument("field mismatch");
  for (int i = 0; i < c1.dim(); ++i)
    if (!c2.contains(c1.generator().row(i))) return false;
  return true;
}

namespace {

// Message space scan. Messages over GF(q)^k are walked as a base-q odometer
// on element encodings; stepping the odometer touches O(1) digits
// amortized, and each digit change adds a precomputed scaled generator row
// to the current codeword (and, for coset scans, to the running syndrome).

struct ScanSetup {
  const Field* f;
  int n = 0;          // codeword length
  int k = 0;          // message digits
  int q = 0;
  int syn_len = 0;    // syndrome length, 0 = plain weight scan
  std::vector<int> scaled;      // [(j*q + s)*n + c] = s * gen_row_j[c]
  std::vector<int> syn_scaled;  // [(j*q + s)*syn_len + c] = s * (H * gen_row_j)[c]
};

ScanSetup make_setup(const LinearCode& code, const CodeMatrix* parity) {
  ScanSetup t;
  t.f = code.field().get();
  t.n = code.length();
  t.k = code.dim();
  t.q = t.f->q();
  t.scaled.assign(static_cast<size_t>(t.k) * t.q * t.n, 0);
  for (int j = 0; j < t.k; ++j) {
    auto row = code.generator().row(j);
    for (int s = 0; s < t.q; ++s)
      for (int c = 0; c < t.n; ++c) t.scaled[(static_cast<size_t>(j) * t.q + s) * t.n + c] = t.f->mul(s, row[c]);
  }
  if (parity) {
    t.syn_len = parity->rows();
    t.syn_scaled.assign(static_cast<size_t>(t.k) * t.q * t.syn_len, 0);
    for (int j = 0; j < t.k; ++j) {
      auto row = code.generator().row(j);
      std::vector<int> hrow(t.syn_len, 0);
      for (int r = 0; r < t.syn_len; ++r) {
        int acc = 0;
        for (int c = 0; c < t.n; ++c) acc = t.f->add(acc, t.f->mul(parity->at(r, c), row[c]));
        hrow[r] = acc;
      }
      for (int s = 0; s < t.q; ++s)
        for (int r = 0; r < t.syn_len; ++r)
          t.syn_scaled[(static_cast<size_t>(j) * t.q + s) * t.syn_len + r] = t.f->mul(s, hrow[r]);
    }
  }
  return t;
}

// Minimum weight over message indices in [lo, hi), 0 < lo <= hi <= q^k.
// When the setup carries a syndrome, words with zero syndrome are skipped.
int scan_chunk(const ScanSetup& t, std::uint64_t lo, std::uint64_t hi) {
  const Field& f = *t.f;
  std::vector<int> digits(t.k, 0);
  {
    std::uint64_t v = lo;
    for (int j = 0; j < t.k; ++j) {
      digits[j] = static_cast<int>(v % t.q);
      v /= t.q;
    }
  }
  std::vector<int> cur(t.n, 0), synd(t.syn_len, 0);
  auto apply = [&](int j, int delta) {
    const int* sr = &t.scaled[(static_cast<size_t>(j) * t.q + delta) * t.n];
    for (int c = 0; c < t.n; ++c) cur[c] = f.add(cur[c], sr[c]);
    if (t.syn_len) {
      const int* ss = &t.syn_scaled[(static_cast<size_t>(j) * t.q + delta) * t.syn_len];
      for (int c = 0; c < t.syn_len; ++c) synd[c] = f.add(synd[c], ss[c]);
    }
  };
  for (int j = 0; j < t.k; ++j)
    if (digits[j]) apply(j, digits[j]);

  int best = std::numeric_limits<int>::max();
  for (std::uint64_t idx = lo;;) {
    bool in_subcode = false;
    if (t.syn_len) {
      in_subcode = std::all_of(synd.begin(), synd.end(), [](int v) { return v == 0; });
    }
    if (!in_subcode) {
      int w = 0;
      for (int c = 0; c < t.n; ++c) w += cur[c] != 0;
      best = std::min(best, w);
    }
    if (++idx >= hi) break;
    // odometer step: rollovers subtract (q-1), then one digit gains one
    int j = 0;
    while (digits[j] == t.q - 1) {
      apply(j, f.neg(t.q - 1));
      digits[j] = 0;
      ++j;
    }
    apply(j, f.sub(digits[j] + 1, digits[j]));
    ++digits[j];
  }
  return best;
}

int parallel_min_scan(const ScanSetup& t, std::uint64_t count) {
  int best = std::numeric_limits<int>::max();
#pragma omp parallel reduction(min : best)
  {
    const int tid = omp_get_thread_num();
    const int nt = omp_get_num_threads();
    const std::uint64_t total = count - 1;  // message 0 excluded
    const std::uint64_t lo = 1 + total * tid / nt;
    const std::uint64_t hi = 1 + total * (tid + 1) / nt;
    if (lo < hi) best = std::min(best, scan_chunk(t, lo, hi));
  }
  return best;
}

std::uint64_t checked_message_count(const LinearCode& c, std::uint64_t budget, const char* op) {
  const BigInt total = ipow(c.field()->q(), static_cast<unsigned long>(c.dim()));
  if (total > budget)
    throw WorkLimitError(std::string(op) + ": work limit exceeded (" + total.str() + " codewords, budget " +
                         std::to_string(budget) + ")");
  return total.convert_to<std::uint64_t>();
}

}  // namespace

int min_weight(const LinearCode& c, std::uint64_t budget) {
  if (c.dim() < 1) throw std::invalid_argument("min_weight: zero code has no nonzero codeword");
  const std::uint64_t count = checked_message_count(c, budget, "min_weight");
  return parallel_min_scan(make_setup(c, nullptr), count);
}

int coset_min_weight(const LinearCode& c2, const LinearCode& c1, std::uint64_t budget) {
  if (!is_subcode(c1, c2) || c1.dim() >= c2.dim())
    throw std::invalid_argument("coset_min_weight: not a strict subcode");
  const std::uint64_t count = checked_message_count(c2, budget, "coset_min_weight");
  const LinearCode c1_dual = dual(c1);
  return parallel_min_scan(make_setup(c2, &c1_dual.generator()), count);
}

}  // namespace qecc
