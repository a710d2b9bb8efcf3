#include "qecc/css.hpp"

#include <algorithm>
#include <stdexcept>

namespace qecc {
namespace {

CodeMatrix permute_columns(const CodeMatrix& m, const std::vector<int>& perm) {
  CodeMatrix out(m.field(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, perm[j]));
  return out;
}

// perm followed by perm2: position i shows original column perm[perm2[i]].
std::vector<int> compose(const std::vector<int>& perm, const std::vector<int>& perm2) {
  std::vector<int> r(perm2.size());
  for (size_t i = 0; i < perm2.size(); ++i) r[i] = perm[perm2[i]];
  return r;
}

// Permutation that puts the given columns first (in order) and the rest
// after (in their original order).
std::vector<int> front_load(int n, const std::vector<int>& front) {
  std::vector<bool> taken(n, false);
  std::vector<int> perm;
  perm.reserve(n);
  for (int c : front) {
    perm.push_back(c);
    taken[c] = true;
  }
  for (int c = 0; c < n; ++c)
    if (!taken[c]) perm.push_back(c);
  return perm;
}

}  // namespace

CssPair CssPair::make(LinearCode c1, LinearCode c2, std::uint64_t budget) {
  if (!is_subcode(c1, c2) || c1.dim() >= c2.dim())
    throw std::invalid_argument("css: C1 must be a strict subcode of C2");
  CssPair p{std::move(c1), std::move(c2)};
  p.n = p.c2.length();
  p.k1 = p.c1.dim();
  p.k2 = p.c2.dim();
  p.k = p.k2 - p.k1;
  const int dz = coset_min_weight(p.c2, p.c1, budget);
  const int dx = coset_min_weight(dual(p.c1), dual(p.c2), budget);
  p.d = std::min(dz, dx);
  return p;
}

QuantumParams css_params(const CssPair& pair) {
  return QuantumParams::from_k(pair.n, pair.k, pair.d, pair.c2.field()->q(), true);
}

QuantumParams css_params(const LinearCode& c1, const LinearCode& c2, std::uint64_t budget) {
  return css_params(CssPair::make(c1, c2, budget));
}

SideDerivation derive_side(const LinearCode& inner, const LinearCode& outer) {
  if (!is_subcode(inner, outer) || inner.dim() >= outer.dim())
    throw std::invalid_argument("derive_side: inner must be a strict subcode of outer");
  const Field& f = *outer.field();
  const int n = outer.length();
  const int k1 = inner.dim();
  const int k = outer.dim() - k1;

  // Front-load the inner code's pivot columns; its RREF becomes [I_{k1} | P].
  std::vector<int> perm = front_load(n, inner.pivots());
  CodeMatrix top = permute_columns(inner.generator(), perm);

  // Reduce the outer generator against the top block so the first k1
  // coordinates vanish, leaving coset representatives of C2/C1.
  CodeMatrix rest = permute_columns(outer.generator(), perm);
  for (int r = 0; r < rest.rows(); ++r) {
    for (int i = 0; i < k1; ++i) {
      const int c = rest.at(r, i);
      if (c == 0) continue;
      for (int j = 0; j < n; ++j) rest.set(r, j, f.sub(rest.at(r, j), f.mul(c, top.at(i, j))));
    }
  }
  RrefResult w = rref(rest);  // k nonzero rows, pivots all >= k1
  if (w.rank != k) throw std::logic_error("derive_side: coset block has wrong rank");

  // Second permutation inside the tail puts the coset block in the form
  // [0 | I_k | A'].
  std::vector<int> tail_perm(n);
  for (int i = 0; i < k1; ++i) tail_perm[i] = i;
  {
    std::vector<bool> taken(n, false);
    int pos = k1;
    for (int i = 0; i < w.rank; ++i) {
      tail_perm[pos++] = w.pivots[i];
      taken[w.pivots[i]] = true;
    }
    for (int c = k1; c < n; ++c)
      if (!taken[c]) tail_perm[pos++] = c;
  }
  top = permute_columns(top, tail_perm);
  CodeMatrix bottom = permute_columns(w.matrix, tail_perm);

  SideDerivation out{compose(perm, tail_perm), CodeMatrix(outer.field(), k1 + k, n),
                     LinearCode::zero(outer.field(), 1)};
  for (int i = 0; i < k1; ++i)
    for (int j = 0; j < n; ++j) out.block.set(i, j, top.at(i, j));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) out.block.set(k1 + i, j, bottom.at(i, j));

  CodeMatrix tail_gen(outer.field(), k, n - k1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n - k1; ++j) tail_gen.set(i, j, bottom.at(i, k1 + j));
  out.tail = LinearCode::from_generator(tail_gen);
  return out;
}

DerivedCodes lemma1_derive(const CssPair& pair) {
  DerivedCodes d{derive_side(pair.c1, pair.c2), derive_side(dual(pair.c2), dual(pair.c1))};
  return d;
}

DerivedReport verify_derived(const CssPair& pair, const DerivedCodes& derived, std::uint64_t budget) {
  DerivedReport r;
  r.d_length = derived.primal.tail.length();
  r.d_dim = derived.primal.tail.dim();
  r.d_min_weight = min_weight(derived.primal.tail, budget);
  r.dprime_length = derived.from_dual.tail.length();
  r.dprime_dim = derived.from_dual.tail.dim();
  r.dprime_min_weight = min_weight(derived.from_dual.tail, budget);
  r.lemma1_holds = r.d_dim == pair.k && r.dprime_dim == pair.k && r.d_min_weight >= pair.d &&
                   r.dprime_min_weight >= pair.d;
  return r;
}

CssPair random_nested_pair(const FieldPtr& field, int n, std::mt19937_64& rng, std::uint64_t budget) {
  const int q = field->q();
  std::uniform_int_distribution<int> elem(0, q - 1);
  for (;;) {
    std::uniform_int_distribution<int> nrows(1, n);
    const int r = nrows(rng);
    std::vector<std::vector<int>> rows(r, std::vector<int>(n));
    for (auto& row : rows)
      for (int& v : row) v = elem(rng);
    LinearCode c2 = LinearCode::from_generator(CodeMatrix::from_rows(field, rows));
    const int k2 = c2.dim();
    if (k2 == 0) continue;

    std::uniform_int_distribution<int> scount(0, k2 - 1);
    const int s = scount(rng);
    LinearCode c1 = LinearCode::zero(field, n);
    if (s > 0) {
      std::vector<std::vector<int>> words(s, std::vector<int>(n, 0));
      const Field& f = *field;
      for (auto& w : words) {
        for (int j = 0; j < k2; ++j) {
          const int m = elem(rng);
          if (m == 0) continue;
          auto row = c2.generator().row(j);
          for (int c = 0; c < n; ++c) w[c] = f.add(w[c], f.mul(m, row[c]));
        }
      }
      c1 = LinearCode::from_generator(CodeMatrix::from_rows(field, words));
    }
    if (c1.dim() >= c2.dim()) continue;  // not strict, reject
    return CssPair::make(std::move(c1), std::move(c2), budget);
  }
}

}  // namespace qecc
