#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sandwich/symplectic.hpp"

using namespace sandwich;

namespace {

HatSystem c_hat(int m) {
  RootSystem rs = build_root_system("C", m + 1);
  return restrict_hat(align(rs, RatVec::unit(static_cast<std::size_t>(m + 1), 0)));
}

std::vector<IndexPerm> all_perms(std::size_t m) {
  std::vector<std::uint32_t> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = static_cast<std::uint32_t>(i);
  std::vector<IndexPerm> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST_CASE("index permutations") {
  IndexPerm a(std::vector<std::uint32_t>{1, 2, 0});
  IndexPerm b(std::vector<std::uint32_t>{0, 2, 1});
  CHECK(a.str() == "[2,3,1]");
  CHECK(compose(a, b)(1) == a(b(1)));
  CHECK(compose(a, a.inverse()).is_identity());
  CHECK(IndexPerm::identity(3).is_identity());
  CHECK_THROWS_AS(IndexPerm(std::vector<std::uint32_t>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(IndexPerm(std::vector<std::uint32_t>{2, 0}), std::invalid_argument);
}

TEST_CASE("phase space layout") {
  PhaseSpace ps = build_phase_space(c_hat(2));
  CHECK(ps.dim() == 4);
  CHECK(ps.basis_labels == std::vector<std::string>{"x1", "x2", "y1", "y2"});
  CHECK(ps.label_roots[0] == RatVec{0, 1, 0});
  CHECK(ps.label_roots[3] == RatVec{0, 0, -1});
  CHECK(ps.omega(0, 2) == Rat(1));
  CHECK(ps.omega(2, 0) == Rat(-1));
  CHECK(ps.omega.transpose() == -ps.omega);
  CHECK(ps.center_normalization == Rat(1));
}

TEST_CASE("generators and lifts preserve the symplectic form") {
  for (int m = 1; m <= 5; ++m) {
    CAPTURE(m);
    PhaseSpace ps = build_phase_space(c_hat(m));
    for (int i = 1; i <= m; ++i) {
      RatMat s = s_generator(ps, i).matrix;
      CHECK(is_symplectic(ps, s));
      CHECK(s * s == RatMat::identity(ps.dim()));
    }
    for (const auto& tau : all_perms(static_cast<std::size_t>(m))) {
      SympMap t = lift_permutation(ps, tau);
      CHECK(is_symplectic(ps, t.matrix));
      // T_tau sends x_i to x_tau(i).
      for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) CHECK(t.matrix(tau(i), i) == Rat(1));
    }
    CHECK_THROWS_AS(s_generator(ps, 0), std::out_of_range);
    CHECK_THROWS_AS(s_generator(ps, m + 1), std::out_of_range);
  }
  // A non-symplectic map is recognized.
  PhaseSpace ps = build_phase_space(c_hat(2));
  RatMat d = RatMat::identity(4);
  d(0, 0) = 2;
  CHECK_FALSE(is_symplectic(ps, d));
}

TEST_CASE("S_i relations: involutions that commute, product -I") {
  PhaseSpace ps = build_phase_space(c_hat(4));
  RatMat prod = RatMat::identity(8);
  for (int i = 1; i <= 4; ++i) {
    for (int k = 1; k <= 4; ++k) {
      RatMat a = s_generator(ps, i).matrix, b = s_generator(ps, k).matrix;
      CHECK(a * b == b * a);
    }
    prod = prod * s_generator(ps, i).matrix;
  }
  CHECK(prod == -RatMat::identity(8));
}

TEST_CASE("mu is a bijective homomorphism") {
  for (int m = 1; m <= 4; ++m) {
    CAPTURE(m);
    HatSystem h = c_hat(m);
    FiniteGroup w_hat = hat_weyl(h);
    FiniteGroup w_script = script_w(build_phase_space(h));
    CHECK(w_script.order() == (std::size_t{1} << m));
    Report r = mu_isomorphism(w_hat, w_script);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.witness);
      CHECK(c.passed());
    }
    // Signs on pi_hat coordinates match signs on x coordinates.
    auto img = mu_images(w_hat, w_script);
    for (std::size_t i = 0; i < w_hat.order(); ++i)
      for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k)
        CHECK(w_hat[i].matrix()(k, k) == w_script[img[i]].matrix()(k, k));
  }
}

TEST_CASE("mu rejects mismatched inputs") {
  FiniteGroup w2 = hat_weyl(c_hat(2));
  FiniteGroup s3 = script_w(build_phase_space(c_hat(3)));
  CHECK_THROWS_AS(mu_isomorphism(w2, s3), std::invalid_argument);
  FiniteGroup bare(w2.elements(), w2.generators());
  CHECK_THROWS_AS(mu_isomorphism(bare, script_w(build_phase_space(c_hat(2)))), std::invalid_argument);
}
