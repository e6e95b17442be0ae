#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sandwich/linalg.hpp"

using namespace sandwich;

TEST_CASE("rank and independent subsets") {
  std::vector<RatVec> vs{{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  CHECK(rank_of(vs) == 2);
  auto ind = independent_subset(vs);
  REQUIRE(ind.size() == 2);
  CHECK(ind[0] == vs[0]);
  CHECK(ind[1] == vs[2]);
}

TEST_CASE("projector agrees with I - h h^T / |h|^2") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 2 + it % 4;
    RatVec h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = oracle::random_rat(rng, 5);
    if (h.is_zero()) continue;
    // Basis of the hyperplane orthogonal to h.
    std::vector<RatVec> perp;
    std::size_t piv = 0;
    while (h[piv].is_zero()) ++piv;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == piv) continue;
      RatVec v = RatVec::unit(n, j) - (h[j] / h[piv]) * RatVec::unit(n, piv);
      perp.push_back(v);
    }
    RatMat want = RatMat::identity(n);
    Rat hh = h.dot(h);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) want(i, j) -= h[i] * h[j] / hh;
    CHECK(orthogonal_projector(perp, n) == want);
  }
  CHECK(orthogonal_projector({}, 3) == RatMat(3, 3));
}

TEST_CASE("frames extract coordinates exactly") {
  Frame f({{1, 1, 0}, {0, 1, -1}});
  CHECK(f.dim() == 2);
  CHECK(f.ambient_dim() == 3);
  auto c = f.coordinates({2, 5, -3});
  REQUIRE(c);
  CHECK(*c == RatVec{2, 3});
  CHECK(f.vector(*c) == RatVec{2, 5, -3});
  CHECK_FALSE(f.coordinates({1, 0, 0}));
  CHECK_THROWS_AS(Frame({{1, 0}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Frame({{1, 0}, {1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("root sets are sorted and indexed") {
  RootSet s({{0, 1}, {1, 0}, {0, 1}, {-1, 0}});
  CHECK(s.size() == 3);
  CHECK(s.contains({1, 0}));
  CHECK_FALSE(s.contains({1, 1}));
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(*s.index_of(s[i]) == i);
  CHECK(std::is_sorted(s.begin(), s.end()));
}
