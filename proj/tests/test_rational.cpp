#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "oracles.hpp"
#include "sandwich/linalg.hpp"

using namespace sandwich;

TEST_CASE("rationals are kept in lowest terms") {
  Rat r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rat(0, -7) == Rat(0));
  CHECK(Rat(0, -7).den() == 1);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("string form round-trips") {
  CHECK(Rat(-3, 2).str() == "-3/2");
  CHECK(Rat(4).str() == "4");
  CHECK(Rat::parse("-3/2") == Rat(-3, 2));
  CHECK(Rat::parse("10/4") == Rat(5, 2));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse("x"));
  CHECK_THROWS(Rat::parse(""));
}

TEST_CASE("overflow is reported, not wrapped") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(Rat(big) + Rat(1), std::overflow_error);
  CHECK_THROWS_AS(Rat(big) * Rat(2), std::overflow_error);
  CHECK(Rat(big) * Rat(1, big) == Rat(1));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("field laws on random rationals") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 2000; ++it) {
    Rat a = oracle::random_rat(rng), b = oracle::random_rat(rng), c = oracle::random_rat(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rat(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rat::parse(a.str()) == a);
    // Ordering agrees with cross-multiplication.
    bool less = static_cast<__int128>(a.num()) * b.den() < static_cast<__int128>(b.num()) * a.den();
    CHECK((a < b) == less);
  }
}

TEST_CASE("vector operations") {
  RatVec v{1, Rat(1, 2), -2};
  RatVec w{0, 2, 1};
  CHECK(v.dot(w) == Rat(-1));
  CHECK((v + w) == RatVec{1, Rat(5, 2), -1});
  CHECK((Rat(2) * v) == RatVec{2, 1, -4});
  CHECK(v.leading_sign() == 1);
  CHECK((-v).leading_sign() == -1);
  CHECK(RatVec(3).is_zero());
  CHECK(v.str() == "(1, 1/2, -2)");
  CHECK(RatVec::unit(3, 1) == RatVec{0, 1, 0});
}

TEST_CASE("matrix inverse on random invertible matrices") {
  std::mt19937_64 rng(12);
  int tested = 0;
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 1 + it % 5;
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = oracle::random_rat(rng, 6);
    if (!m.is_invertible()) {
      CHECK_THROWS_AS((void)m.inverse(), std::domain_error);
      continue;
    }
    ++tested;
    RatMat inv = m.inverse();
    CHECK(m * inv == RatMat::identity(n));
    CHECK(inv * m == RatMat::identity(n));
    CHECK(m.transpose().transpose() == m);
    CHECK((m * inv).key() == RatMat::identity(n).key());
  }
  CHECK(tested > 200);
}

TEST_CASE("rank and singular matrices") {
  RatMat m = RatMat::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  CHECK(m.rank() == 2);
  CHECK_FALSE(m.is_invertible());
  CHECK(RatMat::from_columns({{1, 0}, {1, 1}}, 2)(0, 1) == Rat(1));
}

TEST_CASE("matrix keys separate shapes") {
  CHECK(RatMat(1, 2).key() != RatMat(2, 1).key());
  CHECK(RatMat::identity(2).key() == "1,0;0,1");
}
