#include <doctest.h>

#include <random>
#include <sstream>

#include "qecc/matrix.hpp"
#include "qecc/reference.hpp"

using namespace qecc;

namespace {

CodeMatrix random_matrix(const FieldPtr& f, int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> elem(0, f->q() - 1);
  CodeMatrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, elem(rng));
  return m;
}

CodeMatrix transpose(const CodeMatrix& m) {
  CodeMatrix t(m.field(), m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.set(j, i, m.at(i, j));
  return t;
}

}  // namespace

TEST_CASE("rref of the identity") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto f = Field::make(p, m);
    const int k = 4;
    CodeMatrix id(f, k, k);
    for (int i = 0; i < k; ++i) id.set(i, i, 1);
    const RrefResult r = rref(id);
    CHECK(r.matrix == id);
    CHECK(r.rank == k);
    CHECK(r.pivots == std::vector<int>{0, 1, 2, 3});
  }
}

TEST_CASE("rref with dependent rows over GF(2)") {
  auto f = Field::make(2, 1);
  const RrefResult r = rref(CodeMatrix::from_rows(f, {{1, 1}, {1, 1}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<int>{0});
  CHECK(r.matrix == CodeMatrix::from_rows(f, {{1, 1}, {0, 0}}));
}

TEST_CASE("[[1,2],[2,1]] over GF(3) is singular") {
  // det = 1*1 - 2*2 = -3 = 0 mod 3; the independent elimination oracle
  // agrees that the rank is 1
  auto f = Field::make(3, 1);
  const CodeMatrix m = CodeMatrix::from_rows(f, {{1, 2}, {2, 1}});
  CHECK(ref::rank_forward_elim(m) == 1);
  const RrefResult r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<int>{0});
  CHECK(r.matrix == CodeMatrix::from_rows(f, {{1, 2}, {0, 0}}));
}

TEST_CASE("empty matrix has rank 0") {
  auto f = Field::make(2, 1);
  CodeMatrix m(f, 0, 3);
  CHECK(rref(m).rank == 0);
}

TEST_CASE("rref is idempotent on random square matrices") {
  std::mt19937_64 rng(7);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = Field::make(p, m);
    for (int trial = 0; trial < 50; ++trial) {
      const CodeMatrix a = random_matrix(f, 5, 5, rng);
      const RrefResult once = rref(a);
      const RrefResult twice = rref(once.matrix);
      CHECK(once.matrix == twice.matrix);
      CHECK(once.rank == twice.rank);
    }
  }
}

TEST_CASE("rank equals rank of the transpose") {
  std::mt19937_64 rng(11);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto f = Field::make(p, m);
    for (int trial = 0; trial < 50; ++trial) {
      const CodeMatrix a = random_matrix(f, 4, 6, rng);
      CHECK(rref(a).rank == rref(transpose(a)).rank);
      CHECK(rref(a).rank == ref::rank_forward_elim(a));
    }
  }
}

TEST_CASE("matrix text format round-trips") {
  auto f = Field::make(2, 2);
  const CodeMatrix m = CodeMatrix::from_rows(f, {{0, 1, 2, 3}, {3, 2, 1, 0}});
  std::stringstream ss;
  write_matrix(ss, m);
  CHECK(ss.str().rfind("q=2^2 modulus=1,1,1\n", 0) == 0);
  CHECK(read_matrix(ss) == m);
}

TEST_CASE("matrix parser rejects malformed input") {
  {
    std::stringstream ss("garbage\n1 0\n");
    CHECK_THROWS_AS(read_matrix(ss), std::invalid_argument);
  }
  {
    std::stringstream ss("q=2^1 modulus=0,1\n1 0\n1\n");
    CHECK_THROWS_AS(read_matrix(ss), std::invalid_argument);  // ragged
  }
  {
    std::stringstream ss("q=2^1 modulus=1,1\n1 0\n");
    CHECK_THROWS_AS(read_matrix(ss), std::invalid_argument);  // wrong modulus
  }
  {
    std::stringstream ss("q=2^1 modulus=0,1\n1 2\n");
    CHECK_THROWS_AS(read_matrix(ss), std::invalid_argument);  // entry out of range
  }
  {
    std::stringstream ss("q=2^1 modulus=0,1\n");
    CHECK_THROWS_AS(read_matrix(ss), std::invalid_argument);  // no rows
  }
}
