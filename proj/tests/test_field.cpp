#include <doctest.h>

#include <vector>

#include "qecc/field.hpp"

using namespace qecc;

TEST_CASE("prime field construction") {
  auto f = Field::make(2, 1);
  CHECK(f->q() == 2);
  CHECK(f->modulus() == std::vector<int>{0, 1});  // x
  CHECK(f->add(1, 1) == 0);
}

TEST_CASE("GF(4) has the unique irreducible quadratic as modulus") {
  // independent exhaustive check: x^2 + bx + c over GF(2) with no root
  std::vector<std::vector<int>> irreducible;
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c) {
      bool has_root = false;
      for (int x = 0; x < 2; ++x)
        if ((x * x + b * x + c) % 2 == 0) has_root = true;
      if (!has_root) irreducible.push_back({c, b, 1});
    }
  REQUIRE(irreducible.size() == 1);

  auto f = Field::make(2, 2);
  CHECK(f->modulus() == irreducible[0]);
  CHECK(f->modulus() == std::vector<int>{1, 1, 1});  // x^2 + x + 1
}

TEST_CASE("GF(4): alpha * alpha = alpha + 1") {
  auto f = Field::make(2, 2);
  const int alpha = f->encode({0, 1});
  CHECK(f->mul(alpha, alpha) == f->add(alpha, 1));
  CHECK(f->mul(alpha, alpha) == 3);
}

TEST_CASE("GF(5): inverse of 2 is 3") {
  auto f = Field::make(5, 1);
  CHECK(f->inv(2) == 3);
  CHECK(f->mul(2, 3) == 1);
}

TEST_CASE("smallest-encoding modulus choice") {
  CHECK(Field::make(2, 3)->modulus() == std::vector<int>{1, 1, 0, 1});  // x^3 + x + 1
  CHECK(Field::make(3, 2)->modulus() == std::vector<int>{1, 0, 1});     // x^2 + 1
}

TEST_CASE("construction errors") {
  CHECK_THROWS_WITH_AS(Field::make(6, 1), doctest::Contains("not prime"), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 9), std::invalid_argument);  // 512 > 256
  CHECK_NOTHROW(Field::make(2, 8));                           // 256 is the ceiling
}

TEST_CASE("element arithmetic errors") {
  auto f2 = Field::make(2, 1);
  auto f3 = Field::make(3, 1);
  FieldElement a(f2, 1), b(f3, 1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(FieldElement(f3, 0).inverse(), std::domain_error);
  CHECK_THROWS_AS(a / FieldElement(f2, 0), std::domain_error);
  CHECK_THROWS_AS(FieldElement(f2, 2), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
    auto f = Field::make(p, m);
    const int q = f->q();
    for (int a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
      CHECK(f->mul(a, 1) == a);
      CHECK(f->add(a, 0) == a);
    }
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (int c = 0; c < q; ++c) {
          REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
  }
}

TEST_CASE("coefficient encoding round-trips") {
  auto f = Field::make(3, 2);
  for (int a = 0; a < 9; ++a) CHECK(f->encode(f->coeffs(a)) == a);
}
