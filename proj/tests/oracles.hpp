#pragma once

// Independent reference computations. Nothing here calls the chain,
// reflection or closure code under test; everything goes through plain
// Euclidean geometry or brute-force enumeration.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "sandwich/linalg.hpp"
#include "sandwich/rational.hpp"

namespace oracle {

using sandwich::Rat;
using sandwich::RatVec;
using sandwich::RootSet;

/// 2(b, a)/(a, a); must be an integer for genuine root systems.
inline int cartan(const RatVec& b, const RatVec& a) {
  Rat r = Rat(2) * b.dot(a) / a.dot(a);
  if (!r.is_integer()) throw std::logic_error("non-integral Cartan number");
  return static_cast<int>(r.num());
}

/// v - 2(v, a)/(a, a) a.
inline RatVec reflect(const RatVec& v, const RatVec& a) { return v - (Rat(2) * v.dot(a) / a.dot(a)) * a; }

struct BruteChain {
  int q = 0;
  int p = 0;
  bool contiguous = true;
};

/// Scans b + j a for |j| <= reach, admitting zero.
inline BruteChain brute_chain(const RootSet& s, const RatVec& b, const RatVec& a, int reach = 8) {
  auto in = [&](int j) {
    RatVec v = b + Rat(j) * a;
    return v.is_zero() || s.contains(v);
  };
  BruteChain c;
  while (c.q < reach && in(-(c.q + 1))) ++c.q;
  while (c.p < reach && in(c.p + 1)) ++c.p;
  for (int j = -reach; j <= reach; ++j)
    if (in(j) && (j < -c.q || j > c.p)) c.contiguous = false;
  return c;
}

using IntPerm = std::vector<std::uint32_t>;

inline IntPerm reflection_perm(const RootSet& roots, const RatVec& a) {
  IntPerm p(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    auto j = roots.index_of(reflect(roots[i], a));
    if (!j) throw std::logic_error("reflection leaves the root set");
    p[i] = static_cast<std::uint32_t>(*j);
  }
  return p;
}

/// Order of the permutation group generated by `gens` (plain BFS on
/// permutation vectors).
inline std::size_t perm_group_order(const std::vector<IntPerm>& gens) {
  if (gens.empty()) return 1;
  const std::size_t n = gens.front().size();
  IntPerm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<IntPerm> seen{id};
  std::vector<IntPerm> todo{id};
  while (!todo.empty()) {
    IntPerm g = std::move(todo.back());
    todo.pop_back();
    for (const auto& s : gens) {
      IntPerm h(n);
      for (std::size_t i = 0; i < n; ++i) h[i] = s[g[i]];
      if (seen.insert(h).second) todo.push_back(std::move(h));
    }
  }
  return seen.size();
}

inline std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// |W(C_m)| = 2^m m!.
inline std::size_t hyperoctahedral_order(std::size_t m) { return (std::size_t{1} << m) * factorial(m); }

inline RatVec unit(std::size_t n, std::size_t i) { return RatVec::unit(n, i); }

/// Uniform rational with numerator in [-lim, lim] and denominator in [1, lim].
inline Rat random_rat(std::mt19937_64& rng, std::int64_t lim = 50) {
  std::uniform_int_distribution<std::int64_t> n(-lim, lim), d(1, lim);
  return Rat(n(rng), d(rng));
}

}  // namespace oracle
