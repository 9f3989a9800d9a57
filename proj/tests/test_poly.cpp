#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "rulinglab/poly.hpp"

using namespace rulinglab;

TEST_CASE("HalfLaurent arithmetic") {
  HalfLaurent z = HalfLaurent::monomial(2);
  HalfLaurent zi = HalfLaurent::monomial(-2);
  CHECK(z * zi == HalfLaurent::one());
  CHECK((z + zi) - z == zi);
  CHECK((z - z).is_zero());
  CHECK(z.scaled(3) == z + z + z);
  HalfLaurent p = z * z + z.scaled(2) + HalfLaurent::one();  // (z+1)^2
  HalfLaurent q = z + HalfLaurent::one();
  CHECK(q * q == p);
}

TEST_CASE("HalfLaurent big coefficients") {
  HalfLaurent two(BigInt(2));
  HalfLaurent p = HalfLaurent::one();
  for (int i = 0; i < 100; ++i) p *= two;
  BigInt want = BigInt(1) << 100;
  CHECK(p.terms().at(0) == want);
}

TEST_CASE("HalfLaurent str and parse") {
  HalfLaurent p = HalfLaurent::monomial(-4) + HalfLaurent::monomial(-2) + HalfLaurent::one();
  CHECK(p.str() == "z^-2 + z^-1 + 1");
  CHECK(HalfLaurent::parse(p.str()) == p);
  CHECK(HalfLaurent::zero().str() == "0");
  CHECK(HalfLaurent::parse("0").is_zero());
  HalfLaurent h = HalfLaurent::monomial(-1);  // z^{-1/2}
  CHECK(HalfLaurent::parse(h.str()) == h);
  HalfLaurent m = HalfLaurent::monomial(2, -3) + HalfLaurent::monomial(0, 1);
  CHECK(HalfLaurent::parse(m.str()) == m);
  CHECK_THROWS_AS(HalfLaurent::parse("z^^2"), std::invalid_argument);
  CHECK_THROWS_AS(HalfLaurent::parse("q + 1"), std::invalid_argument);
}

TEST_CASE("MultiLaurent arithmetic and substitution") {
  MultiLaurent A = MultiLaurent::A(), B = MultiLaurent::B();
  MultiLaurent z = MultiLaurent::z_half(2), one = MultiLaurent::one();
  // the A,B substitution is a ring map sending A - B to z
  MultiLaurent p = (A - B) * (A - B) + A * B;
  MultiLaurent q = ml_substitute_AB(p);
  CHECK(q == z * z - z + one);  // z^2 + (z-1)(-1)
  CHECK(ml_substitute_AB(A) == z - one);
  CHECK(ml_substitute_AB(B) == MultiLaurent(BigInt(-1)));
  CHECK(ml_substitute_AB(p * p) == q * q);
}

TEST_CASE("MultiLaurent a-degree and coefficient extraction") {
  MultiLaurent p = MultiLaurent::a(-1) + MultiLaurent::a(-4) * MultiLaurent::z_half(2);
  CHECK(p.deg_a() == -1);
  CHECK(ml_coefficient_of_a(p, -1) == HalfLaurent::one());
  CHECK(ml_coefficient_of_a(p, -4) == HalfLaurent::monomial(2));
  CHECK(ml_coefficient_of_a(p, 0).is_zero());
  MultiLaurent withAB = MultiLaurent::A() * MultiLaurent::a(-1);
  CHECK_THROWS(ml_coefficient_of_a(withAB, -1));
}
