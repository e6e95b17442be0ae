#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sandwich/sandwich.hpp"

using namespace sandwich;

namespace {

Alignment c_alignment(int m) {
  RootSystem rs = build_root_system("C", m + 1);
  return align(rs, RatVec::unit(static_cast<std::size_t>(m + 1), 0));
}

void require_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.witness);
    CHECK(c.passed());
  }
}

}  // namespace

TEST_CASE("C_{M+1} with h = e1: partition, center and hat system") {
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    const auto n = static_cast<std::size_t>(m + 1);
    Alignment a = c_alignment(m);
    CHECK(a.r_zero.size() == static_cast<std::size_t>(2 * m * m));
    CHECK(a.r_minus.size() == static_cast<std::size_t>(2 * m + 1));
    CHECK(a.r_zero_simple.size() == static_cast<std::size_t>(m));
    // r_minus = {-2e1} ∪ {-e1 ± ej}.
    CHECK(a.r_minus.contains(Rat(-2) * RatVec::unit(n, 0)));
    for (std::size_t j = 1; j < n; ++j) {
      CHECK(a.r_minus.contains(RatVec::unit(n, j) - RatVec::unit(n, 0)));
      CHECK(a.r_minus.contains(-RatVec::unit(n, j) - RatVec::unit(n, 0)));
    }

    CenterReport c = nilradical_center(a);
    CHECK(c.is_class_c);
    CHECK(c.dimension == 1);
    REQUIRE(c.center_roots.size() == 1);
    CHECK(c.center_roots[0] == Rat(-2) * RatVec::unit(n, 0));

    HatSystem h = restrict_hat(a);
    CHECK(h.M == m);
    CHECK(h.zeta.is_zero());
    CHECK(h.phi.size() == static_cast<std::size_t>(2 * m));
    REQUIRE(h.pi_hat.size() == static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < h.pi_hat.size(); ++i) CHECK(h.pi_hat[i] == RatVec::unit(n, i + 1));
    // One fiber per restricted root plus zeta, each a single root.
    CHECK(h.fibers.size() == static_cast<std::size_t>(2 * m + 1));
    for (const auto& [v, reps] : h.fibers) CHECK(reps.size() == 1);
    CHECK(h.fibers.at(h.zeta) == std::vector<RatVec>{Rat(-2) * RatVec::unit(n, 0)});
  }
}

TEST_CASE("restriction is the orthogonal projector away from h") {
  Alignment a = c_alignment(3);
  RatMat want = RatMat::identity(4);
  want(0, 0) = 0;
  CHECK(a.restriction == want);
}

TEST_CASE("negative controls are rejected at the class-C gate") {
  SUBCASE("B3, h = e1: abelian nilradical") {
    Alignment a = align(build_root_system("B", 3), {1, 0, 0});
    CenterReport c = nilradical_center(a);
    CHECK_FALSE(c.is_class_c);
    CHECK(c.center_roots.size() == 5);
    try {
      (void)restrict_hat(a);
      FAIL("expected ClassCError");
    } catch (const ClassCError& e) {
      CHECK(e.report.center_roots.size() == 5);
    }
  }
  SUBCASE("A2, h = (2, -1, -1)") {
    Alignment a = align(build_root_system("A", 2), {2, -1, -1});
    CHECK(a.r_zero.size() == 2);
    CHECK(a.r_minus.size() == 2);
    CenterReport c = nilradical_center(a);
    CHECK_FALSE(c.is_class_c);
    CHECK(c.center_roots.size() == 2);
    CHECK_THROWS_AS((void)restrict_hat(a), ClassCError);
  }
}

TEST_CASE("one-dimensional center with dependent restricted roots is rejected") {
  // B3 with h = e1 + e2 has center {-e1-e2}, but six restricted roots in a plane.
  Alignment a = align(build_root_system("B", 3), {1, 1, 0});
  CHECK(nilradical_center(a).is_class_c);
  CHECK_THROWS_AS((void)restrict_hat(a), AlignmentError);
}

TEST_CASE("alignment input errors") {
  RootSystem rs = build_root_system("C", 3);
  CHECK_THROWS_AS(align(rs, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(align(rs, {0, 0, 0}), std::invalid_argument);
  // Generic h: r_zero is empty.
  CHECK_THROWS_AS(align(rs, {3, 2, 1}), AlignmentError);
  // h = 2e1 + e2 leaves r_zero = {±2e3} of rank 1 only.
  CHECK_THROWS_AS(align(rs, {2, 1, 0}), AlignmentError);
}

TEST_CASE("axioms on hat systems and on r_zero") {
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    Alignment a = c_alignment(m);
    HatSystem h = restrict_hat(a);
    Report hat = verify_axioms(h);
    require_all_pass(hat);
    CHECK(hat.checks.size() == 5);
    require_all_pass(verify_axioms(a.r_zero, a.r_zero_simple));
    CHECK(sum_collapse_check(h));
  }
}

TEST_CASE("deleting a root breaks symmetry with a witness") {
  HatSystem h = restrict_hat(c_alignment(3));
  std::vector<RatVec> kept(h.phi.begin() + 1, h.phi.end());
  const RatVec removed = h.phi[0];
  Report r = verify_axioms(RootSet(kept), h.basis);
  const CheckResult* sym = r.find("symmetry");
  REQUIRE(sym);
  CHECK(sym->failed());
  CHECK(sym->witness.find((-removed).str()) != std::string::npos);
  CHECK_FALSE(r.ok());

  Alignment a = c_alignment(3);
  std::vector<RatVec> r0(a.r_zero.begin() + 1, a.r_zero.end());
  CHECK(verify_axioms(RootSet(r0), a.r_zero_simple).find("symmetry")->failed());
}

TEST_CASE("hat reflections follow the Euclidean formula and generate (Z/2)^M") {
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    HatSystem h = restrict_hat(c_alignment(m));
    DomainPtr dom = h.domain();
    for (const auto& alpha : h.phi) {
      GroupElement s = reflection(dom, alpha);
      for (const auto& v : h.phi) CHECK(s.apply(v) == oracle::reflect(v, alpha));
    }
    FiniteGroup w = hat_weyl(h);
    CHECK(w.order() == (std::size_t{1} << m));
    require_all_pass(verify_relations(h, w));
    require_all_pass(verify_group_axioms(w));
    if (m <= 4) require_all_pass(verify_reflection_laws(dom));
  }
}

TEST_CASE("product of the simple hat reflections is -I") {
  HatSystem h = restrict_hat(c_alignment(4));
  DomainPtr dom = h.domain();
  GroupElement prod = GroupElement::identity(4, dom);
  for (const auto& a : h.pi_hat) prod = element_multiply(prod, reflection(dom, a));
  CHECK(prod.matrix() == -RatMat::identity(4));
}

TEST_CASE("sum collapse fails on a system that is closed under addition") {
  // A2 roots read as a hat system: (e1-e2) + (e2-e3) is again a root.
  RootSystem rs = build_root_system("A", 2);
  HatSystem h;
  h.M = 2;
  h.zeta = RatVec(3);
  h.phi = rs.roots;
  h.pi_hat = rs.simple_roots;
  h.basis = rs.simple_roots;
  CHECK_FALSE(sum_collapse_check(h));
  CHECK(check_sum_collapse(h).failed());
}
