#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amech/field.hpp"
#include "oracle.hpp"

using amech::FieldContext;
using amech::Residue;
using amech::Vec2;

namespace {
Residue r(std::uint32_t v) { return Residue{v}; }
}  // namespace

TEST_CASE("primality and construction") {
  CHECK(amech::is_prime(2));
  CHECK(amech::is_prime(19));
  CHECK_FALSE(amech::is_prime(1));
  CHECK_FALSE(amech::is_prime(21));
  CHECK_THROWS_AS(FieldContext(21), std::invalid_argument);
  CHECK_THROWS_AS(FieldContext(0), std::invalid_argument);
  CHECK(FieldContext(19).prime() == 19);
  CHECK(FieldContext::shared(19) == FieldContext::shared(19));
}

TEST_CASE("addition and subtraction at p=19") {
  const FieldContext f(19);
  CHECK(f.add(r(18), r(2)) == r(1));
  CHECK(f.add(r(0), r(7)) == r(7));
  CHECK(f.add(r(14), r(15)).value == oracle::mod(14 + 15, 19));

  CHECK(f.sub(r(0), r(4)) == r(15));
  CHECK(f.sub(r(7), r(7)) == r(0));
  CHECK(f.sub(r(3), r(16)).value == oracle::mod(3 - 16, 19));
}

TEST_CASE("inverse and division at p=19") {
  const FieldContext f(19);
  CHECK(f.inv(r(1)) == r(1));
  CHECK(f.inv(r(18)) == r(18));
  CHECK(f.inv(r(2)).value == oracle::brute_inverse(2, 19));
  CHECK(f.inv(r(2)) == r(10));

  CHECK(f.div(r(6), r(3)) == r(2));
  CHECK(f.div(r(3), r(2)).value == oracle::mod(3 * oracle::brute_inverse(2, 19), 19));
  CHECK(f.div(r(0), r(5)) == r(0));

  CHECK_THROWS_AS(f.inv(r(0)), amech::DivisionByZero);
  CHECK_THROWS_AS(f.div(r(4), r(0)), amech::DivisionByZero);
}

TEST_CASE("inverse table agrees with brute force for several primes") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 19u, 101u, 997u}) {
    const FieldContext f(p);
    for (std::uint32_t a = 1; a < p; ++a)
      REQUIRE(f.inv(r(a)).value == oracle::brute_inverse(a, p));
  }
}

TEST_CASE("vector average") {
  const FieldContext f(19);
  const std::vector<Vec2> mid{{r(4), r(4)}, {r(6), r(6)}};
  CHECK(f.vec_avg(mid) == Vec2{r(5), r(5)});
  const std::vector<Vec2> single{{r(7), r(0)}};
  CHECK(f.vec_avg(single) == Vec2{r(7), r(0)});
  const std::vector<Vec2> half{{r(1), r(0)}, {r(2), r(0)}};
  CHECK(f.vec_avg(half).x.value == oracle::mod(3 * oracle::brute_inverse(2, 19), 19));
  CHECK(f.vec_avg(half) == Vec2{r(11), r(0)});

  CHECK_THROWS_AS(f.vec_avg({}), std::invalid_argument);
  std::vector<Vec2> too_many(19, Vec2{r(1), r(1)});
  CHECK_THROWS_AS(f.vec_avg(too_many), std::invalid_argument);
}

TEST_CASE("field identities, exhaustive at p=19") {
  const FieldContext f(19);
  for (std::uint32_t a = 0; a < 19; ++a) {
    for (std::uint32_t b = 0; b < 19; ++b) {
      REQUIRE(f.sub(f.add(r(a), r(b)), r(b)) == r(a));
      REQUIRE(f.add(f.sub(r(a), r(b)), r(b)) == r(a));
      REQUIRE(f.mul(r(a), r(b)).value == oracle::mod(std::int64_t{a} * b, 19));
      if (b != 0) REQUIRE(f.div(f.mul(r(a), r(b)), r(b)) == r(a));
    }
    if (a != 0) REQUIRE(f.inv(f.inv(r(a))) == r(a));
    REQUIRE(f.neg(r(a)).value == oracle::mod(-std::int64_t{a}, 19));
  }
}

TEST_CASE("average of k identical vectors is that vector") {
  const FieldContext f(19);
  for (std::uint32_t k = 1; k < 19; ++k) {
    for (std::uint32_t vx = 0; vx < 19; vx += 3) {
      const Vec2 v{r(vx), r((vx * 7) % 19)};
      std::vector<Vec2> vs(k, v);
      REQUIRE(f.vec_avg(vs) == v);
    }
  }
}

TEST_CASE("reduce maps any integer into range") {
  const FieldContext f(19);
  CHECK(f.reduce(-1) == r(18));
  CHECK(f.reduce(38) == r(0));
  CHECK(f.reduce(-39) == r(18));
  CHECK(f.contains(18));
  CHECK_FALSE(f.contains(19));
  CHECK_FALSE(f.contains(-1));
}
