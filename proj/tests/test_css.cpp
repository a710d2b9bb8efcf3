#include <doctest.h>

#include <algorithm>
#include <random>

#include "qecc/css.hpp"
#include "qecc/reference.hpp"

using namespace qecc;

namespace {

FieldPtr gf2() {
  static FieldPtr f = Field::make(2, 1);
  return f;
}

LinearCode hamming74() {
  return LinearCode::from_generator(CodeMatrix::from_rows(gf2(), {{1, 0, 0, 0, 0, 1, 1},
                                                                  {0, 1, 0, 0, 1, 0, 1},
                                                                  {0, 0, 1, 0, 1, 1, 0},
                                                                  {0, 0, 0, 1, 1, 1, 1}}));
}

CssPair steane() { return CssPair::make(dual(hamming74()), hamming74()); }

// Undo the recorded column permutation of a block-form matrix.
CodeMatrix unpermute(const CodeMatrix& block, const std::vector<int>& perm) {
  CodeMatrix out(block.field(), block.rows(), block.cols());
  for (int i = 0; i < block.rows(); ++i)
    for (int j = 0; j < block.cols(); ++j) out.set(i, perm[j], block.at(i, j));
  return out;
}

int ref_pair_distance(const CssPair& p) {
  const int dz = ref::coset_min_weight_serial(p.c2, p.c1);
  const int dx = ref::coset_min_weight_serial(dual(p.c1), dual(p.c2));
  return std::min(dz, dx);
}

}  // namespace

TEST_CASE("steane parameters [[7,1,3]]_2") {
  const CssPair p = steane();
  CHECK(p.k1 == 3);
  CHECK(p.k2 == 4);
  CHECK(p.k == 1);
  CHECK(p.d == 3);
  CHECK(p.d == ref_pair_distance(p));

  const QuantumParams qp = css_params(p);
  CHECK(qp.n == 7);
  CHECK(qp.k == 1);
  CHECK(qp.d == 3);
  CHECK(qp.q == 2);
  CHECK(qp.css);
  CHECK(qp.K == 2);
}

TEST_CASE("[[4,1,2]]_2 from span{1100,0011} over span{1111}") {
  const LinearCode c2 = LinearCode::from_generator(CodeMatrix::from_rows(gf2(), {{1, 1, 0, 0}, {0, 0, 1, 1}}));
  const LinearCode c1 = LinearCode::from_generator(CodeMatrix::from_rows(gf2(), {{1, 1, 1, 1}}));
  REQUIRE(is_subcode(c1, c2));
  const CssPair p = CssPair::make(c1, c2);
  CHECK(p.k == 1);
  CHECK(p.d == ref_pair_distance(p));
  CHECK(p.d == 2);
}

TEST_CASE("css pair rejects non-strict nesting") {
  const LinearCode h = hamming74();
  CHECK_THROWS_AS(CssPair::make(h, h), std::invalid_argument);
  const LinearCode rep = LinearCode::from_generator(CodeMatrix::from_rows(gf2(), {{1, 1, 1, 1, 1, 1, 1}}));
  CHECK_THROWS_AS(CssPair::make(rep, dual(h)), std::invalid_argument);  // not nested
}

TEST_CASE("lemma1 derivation on the steane pair gives two [4,1,>=3]_2 codes") {
  const CssPair p = steane();
  const DerivedCodes dc = lemma1_derive(p);
  CHECK(dc.primal.tail.length() == 4);
  CHECK(dc.primal.tail.dim() == 1);
  CHECK(dc.from_dual.tail.length() == 4);
  CHECK(dc.from_dual.tail.dim() == 1);
  CHECK(min_weight(dc.primal.tail) >= 3);
  CHECK(min_weight(dc.from_dual.tail) >= 3);
  CHECK(ref::min_weight_serial(dc.primal.tail) >= 3);
  CHECK(ref::min_weight_serial(dc.from_dual.tail) >= 3);

  const DerivedReport rep = verify_derived(p, dc);
  CHECK(rep.lemma1_holds);
  CHECK(rep.d_length == 4);
  CHECK(rep.dprime_length == 4);
}

TEST_CASE("tampered derivation is rejected") {
  const CssPair p = steane();
  DerivedCodes dc = lemma1_derive(p);
  // inject a weight-1 row in place of D's generator
  dc.primal.tail = LinearCode::from_generator(CodeMatrix::from_rows(gf2(), {{1, 0, 0, 0}}));
  CHECK_FALSE(verify_derived(p, dc).lemma1_holds);
}

TEST_CASE("derivation with k1 = 0 degenerates to a completion of C2") {
  const LinearCode c2 = LinearCode::from_generator(CodeMatrix::from_rows(gf2(), {{1, 1, 0, 0}, {0, 0, 1, 1}}));
  const CssPair p = CssPair::make(LinearCode::zero(gf2(), 4), c2);
  const DerivedCodes dc = lemma1_derive(p);
  CHECK(dc.primal.tail.length() == 4);  // full length n
  CHECK(dc.primal.tail.dim() == 2);
  CHECK(dc.from_dual.tail.length() == 2);  // length k
  CHECK(dc.from_dual.tail.dim() == 2);
  CHECK(verify_derived(p, dc).lemma1_holds);
}

TEST_CASE("block form round-trips through the recorded permutation") {
  std::mt19937_64 rng(5);
  for (int q : {2, 3}) {
    auto f = Field::make(q, 1);
    for (int trial = 0; trial < 25; ++trial) {
      const CssPair p = random_nested_pair(f, 6, rng);
      const DerivedCodes dc = lemma1_derive(p);
      CHECK(LinearCode::from_generator(unpermute(dc.primal.block, dc.primal.perm)) == p.c2);
      CHECK(LinearCode::from_generator(unpermute(dc.from_dual.block, dc.from_dual.perm)) == dual(p.c1));
    }
  }
}

TEST_CASE("random nested pairs over GF(3), n = 6, derive and verify") {
  std::mt19937_64 rng(9);
  auto f3 = Field::make(3, 1);
  for (int trial = 0; trial < 30; ++trial) {
    const CssPair p = random_nested_pair(f3, 6, rng);
    CHECK(p.d == ref_pair_distance(p));
    const DerivedCodes dc = lemma1_derive(p);
    const DerivedReport rep = verify_derived(p, dc);
    CHECK(rep.lemma1_holds);
    CHECK(rep.d_dim == p.k);
    CHECK(rep.dprime_dim == p.k);
    CHECK(rep.d_length + rep.dprime_length == p.n + p.k);
    // the pair distance never exceeds either derived minimum weight
    CHECK(p.d <= rep.d_min_weight);
    CHECK(p.d <= rep.dprime_min_weight);
  }
}

TEST_CASE("property sweep: derivation holds for q in {2,3,4,5}, n <= 8") {
  for (int q : {2, 3, 4, 5}) {
    auto f = q == 4 ? Field::make(2, 2) : Field::make(q, 1);
    for (int trial = 0; trial < 50; ++trial) {
      std::mt19937_64 rng(splitmix64(0xABCDull ^ (static_cast<std::uint64_t>(q) << 32) ^ trial));
      const int n = 2 + static_cast<int>(rng() % 7);
      const CssPair p = random_nested_pair(f, n, rng);
      REQUIRE(verify_derived(p, lemma1_derive(p)).lemma1_holds);
    }
  }
}
