#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "oracles.hpp"
#include "sandwich/kernels.hpp"

using namespace sandwich;

namespace {

struct Weyl {
  DomainPtr dom;
  std::vector<GroupElement> gens;
  std::vector<oracle::IntPerm> perms;
};

Weyl weyl(const char* t, int r) {
  RootSystem rs = build_root_system(t, r);
  Weyl w{std::make_shared<const RootDomain>(rs.roots, rs.simple_roots), {}, {}};
  for (const auto& a : rs.simple_roots) {
    w.gens.push_back(reflection(w.dom, a));
    w.perms.push_back(oracle::reflection_perm(rs.roots, a));
  }
  return w;
}

std::vector<std::string> keys(const FiniteGroup& g) {
  std::vector<std::string> k;
  for (const auto& e : g.elements()) k.push_back(e.key());
  return k;
}

GroupElement evaluate(const FiniteGroup& g, std::size_t i) {
  GroupElement x = GroupElement::identity(g.dim(), g[i].domain());
  for (auto k : g.word(i)) x = element_multiply(x, g.generators()[k]);
  return x;
}

struct ThreadGuard {
  int saved = thread_count();
  ~ThreadGuard() { set_thread_count(saved); }
};

}  // namespace

TEST_CASE("closure orders match the permutation-group oracle") {
  for (auto [t, r] : {std::pair{"A", 3}, std::pair{"B", 3}, std::pair{"C", 4}, std::pair{"D", 4}, std::pair{"G2", 2},
                      std::pair{"F4", 4}}) {
    CAPTURE(t);
    Weyl w = weyl(t, r);
    FiniteGroup g = group_closure(w.gens);
    CHECK(g.order() == oracle::perm_group_order(w.perms));
    CHECK(verify_group_axioms(g).ok());
  }
  CHECK(group_closure(weyl("C", 5).gens).order() == oracle::hyperoctahedral_order(5));
}

TEST_CASE("parallel and serial kernels agree under any thread count") {
  ThreadGuard guard;
  Weyl w = weyl("C", 4);
  set_thread_count(1);
  FiniteGroup serial = group_closure_serial(w.gens);
  auto table_serial = multiplication_table_serial(serial);
  RootSystem e6 = build_root_system("E6", 6);
  KillingTable k_serial = killing_table_serial(e6.roots);

  for (int threads : {1, 2, 3, 4}) {
    CAPTURE(threads);
    set_thread_count(threads);
    FiniteGroup par = group_closure(w.gens);
    CHECK(keys(par) == keys(serial));
    for (std::size_t i = 0; i < par.order(); ++i) {
      CHECK(par.word(i).size() == serial.word(i).size());
      CHECK(evaluate(par, i) == par[i]);
    }
    CHECK(multiplication_table(par) == table_serial);
    KillingTable k = killing_table(e6.roots);
    CHECK(k.values == k_serial.values);
    CHECK(k.q == k_serial.q);
    CHECK(k.p == k_serial.p);
  }
}

TEST_CASE("parallel closure is reproducible including words") {
  ThreadGuard guard;
  Weyl w = weyl("B", 4);
  set_thread_count(1);
  FiniteGroup a = group_closure(w.gens);
  set_thread_count(4);
  FiniteGroup b = group_closure(w.gens);
  REQUIRE(a.order() == b.order());
  for (std::size_t i = 0; i < a.order(); ++i) CHECK(a.word(i) == b.word(i));
}

TEST_CASE("killing table matches pairwise Cartan numbers") {
  RootSystem rs = build_root_system("G2", 2);
  KillingTable k = killing_table(rs.roots);
  for (std::size_t b = 0; b < rs.roots.size(); ++b)
    for (std::size_t a = 0; a < rs.roots.size(); ++a) CHECK(k.at(b, a) == oracle::cartan(rs.roots[b], rs.roots[a]));
}

TEST_CASE("closure cap is enforced") {
  Weyl w = weyl("C", 4);
  ClosureOptions opts;
  opts.cap = 100;
  CHECK_THROWS_AS(group_closure(w.gens, opts), ClosureCapExceeded);
  CHECK_THROWS_AS(group_closure_serial(w.gens, opts), ClosureCapExceeded);
  opts.cap = 384;
  CHECK(group_closure(w.gens, opts).order() == 384);
}

TEST_CASE("empty generator set gives the trivial group") {
  ClosureOptions opts;
  opts.dimension = 3;
  FiniteGroup g = group_closure({}, opts);
  CHECK(g.order() == 1);
  CHECK(g[0].matrix() == RatMat::identity(3));
}

TEST_CASE("find-first helpers return the smallest match") {
  std::vector<int> v(10000, 0);
  v[7777] = 1;
  v[4242] = 1;
  auto pred = [&](std::size_t i) { return v[i] == 1; };
  CHECK(parallel_find_first(v.size(), pred) == 4242);
  CHECK(serial_find_first(v.size(), pred) == 4242);
  CHECK(parallel_find_first(10, [](std::size_t) { return false; }) == 10);
}

TEST_CASE("random words multiply associatively and permute the roots") {
  Weyl w = weyl("F4", 4);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, w.gens.size() - 1), len(0, 12);
  auto random_element = [&] {
    GroupElement x = GroupElement::identity(w.dom->dim(), w.dom);
    for (std::size_t n = len(rng); n > 0; --n) x = element_multiply(x, w.gens[pick(rng)]);
    return x;
  };
  for (int it = 0; it < 200; ++it) {
    GroupElement a = random_element(), b = random_element(), c = random_element();
    CHECK(element_multiply(element_multiply(a, b), c) == element_multiply(a, element_multiply(b, c)));
    // The composed action equals the recomputed one.
    GroupElement ab = element_multiply(a, b);
    GroupElement fresh(ab.matrix(), w.dom);
    CHECK(ab.action() == fresh.action());
  }
}
