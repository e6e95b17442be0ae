#include "sandwich/roots.hpp"

#include <stdexcept>

namespace sandwich {

namespace {

RatVec e(std::size_t n, std::size_t i, Rat s = 1) {
  RatVec v(n);
  v[i] = s;
  return v;
}

RatVec ee(std::size_t n, std::size_t i, Rat si, std::size_t j, Rat sj) {
  RatVec v(n);
  v[i] += si;
  v[j] += sj;
  return v;
}

void add_pm_pairs(std::vector<RatVec>& out, std::size_t n, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    for (std::size_t j = i + 1; j < hi; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) out.push_back(ee(n, i, si, j, sj));
}

std::vector<RatVec> e8_roots() {
  std::vector<RatVec> r;
  add_pm_pairs(r, 8, 0, 8);
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    RatVec v(8);
    for (std::size_t i = 0; i < 8; ++i) v[i] = Rat((mask >> i) & 1U ? -1 : 1, 2);
    r.push_back(v);
  }
  return r;
}

// Bourbaki simple roots of E8; E7 and E6 use the leading 7 and 6 of them.
std::vector<RatVec> e8_simple() {
  Rat h(1, 2);
  RatVec a1{h, -h, -h, -h, -h, -h, -h, h};
  std::vector<RatVec> s{a1, ee(8, 0, 1, 1, 1)};
  for (std::size_t i = 0; i < 6; ++i) s.push_back(ee(8, i, -1, i + 1, 1));
  return s;
}

RootSystem make(RootType t, int rank, std::vector<RatVec> roots, std::vector<RatVec> simple) {
  RootSystem rs;
  rs.type = t;
  rs.rank = rank;
  rs.roots = RootSet(std::move(roots));
  rs.simple_roots = std::move(simple);
  return rs;
}

}  // namespace

std::string_view to_string(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::E6: return "E6";
    case RootType::E7: return "E7";
    case RootType::E8: return "E8";
    case RootType::F4: return "F4";
    case RootType::G2: return "G2";
  }
  return "?";
}

std::string RootSystem::label() const {
  switch (type) {
    case RootType::A:
    case RootType::B:
    case RootType::C:
    case RootType::D: return std::string(to_string(type)) + std::to_string(rank);
    default: return std::string(to_string(type));
  }
}

RootSystem build_root_system(std::string_view label, int rank) {
  auto bad = [&](const char* why) {
    return std::invalid_argument("invalid root system (" + std::string(label) + ", " +
                                 std::to_string(rank) + "): " + why);
  };
  if (rank < 1) throw bad("rank must be positive");
  const auto n = static_cast<std::size_t>(rank);

  if (label == "A") {
    std::vector<RatVec> roots, simple;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j)
        if (i != j) roots.push_back(ee(n + 1, i, 1, j, -1));
    for (std::size_t i = 0; i < n; ++i) simple.push_back(ee(n + 1, i, 1, i + 1, -1));
    return make(RootType::A, rank, roots, simple);
  }
  if (label == "B" || label == "C") {
    const bool is_c = label == "C";
    std::vector<RatVec> roots, simple;
    add_pm_pairs(roots, n, 0, n);
    for (std::size_t i = 0; i < n; ++i) {
      roots.push_back(e(n, i, is_c ? 2 : 1));
      roots.push_back(e(n, i, is_c ? -2 : -1));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(ee(n, i, 1, i + 1, -1));
    simple.push_back(e(n, n - 1, is_c ? 2 : 1));
    return make(is_c ? RootType::C : RootType::B, rank, roots, simple);
  }
  if (label == "D") {
    if (rank < 2) throw bad("type D needs rank >= 2");
    std::vector<RatVec> roots, simple;
    add_pm_pairs(roots, n, 0, n);
    for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(ee(n, i, 1, i + 1, -1));
    simple.push_back(ee(n, n - 2, 1, n - 1, 1));
    return make(RootType::D, rank, roots, simple);
  }
  if (label == "E" || label == "E6" || label == "E7" || label == "E8") {
    if (label.size() == 2 && label[1] - '0' != rank) throw bad("label and rank disagree");
    if (rank < 6 || rank > 8) throw bad("type E needs rank 6, 7 or 8");
    auto all = e8_roots();
    auto simple = e8_simple();
    simple.resize(n);
    std::vector<RatVec> roots;
    for (const auto& r : all) {
      if (rank <= 7 && r[6] + r[7] != Rat(0)) continue;
      if (rank == 6 && r[5] != r[6]) continue;
      roots.push_back(r);
    }
    auto t = rank == 6 ? RootType::E6 : (rank == 7 ? RootType::E7 : RootType::E8);
    return make(t, rank, roots, simple);
  }
  if (label == "F" || label == "F4") {
    if (rank != 4) throw bad("type F needs rank 4");
    std::vector<RatVec> roots;
    add_pm_pairs(roots, 4, 0, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      roots.push_back(e(4, i, 1));
      roots.push_back(e(4, i, -1));
    }
    for (unsigned mask = 0; mask < 16; ++mask) {
      RatVec v(4);
      for (std::size_t i = 0; i < 4; ++i) v[i] = Rat((mask >> i) & 1U ? -1 : 1, 2);
      roots.push_back(v);
    }
    Rat h(1, 2);
    std::vector<RatVec> simple{ee(4, 1, 1, 2, -1), ee(4, 2, 1, 3, -1), e(4, 3), RatVec{h, -h, -h, -h}};
    return make(RootType::F4, 4, roots, simple);
  }
  if (label == "G" || label == "G2") {
    if (rank != 2) throw bad("type G needs rank 2");
    std::vector<RatVec> roots;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        if (i == j) continue;
        roots.push_back(ee(3, i, 1, j, -1));
        std::size_t k = 3 - i - j;
        RatVec v(3);
        v[i] = 2;
        v[j] = -1;
        v[k] = -1;
        roots.push_back(v);
        roots.push_back(-v);
      }
    std::vector<RatVec> simple{ee(3, 0, 1, 1, -1), RatVec{-2, 1, 1}};
    return make(RootType::G2, 2, roots, simple);
  }
  throw bad("unknown type label");
}

std::vector<RatVec> simple_roots_of(const RootSet& roots, const std::vector<RatVec>& positive) {
  RootSet pos(positive);
  std::vector<RatVec> simple;
  for (const auto& a : pos) {
    if (!roots.contains(a)) throw std::invalid_argument("simple_roots_of: positive vector is not a root");
    bool decomposable = false;
    for (const auto& b : pos) {
      if (b == a) continue;
      if (pos.contains(a - b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  return simple;
}

// ---------------------------------------------------------------------------

RootDomain::RootDomain(RootSet roots, std::vector<RatVec> basis)
    : roots_(std::move(roots)), frame_(std::move(basis)) {
  for (const auto& b : frame_.basis())
    if (!roots_.contains(b)) throw std::invalid_argument("domain: basis vector " + b.str() + " not in membership");
  coords_.reserve(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    auto c = frame_.coordinates(roots_[i]);
    if (!c) throw std::invalid_argument("domain: basis does not span " + roots_[i].str());
    by_coords_.emplace(*c, i);
    coords_.push_back(std::move(*c));
  }
}

std::optional<std::size_t> RootDomain::index_of_coords(const RatVec& c) const {
  auto it = by_coords_.find(c);
  if (it == by_coords_.end()) return std::nullopt;
  return it->second;
}

Chain root_chain(const RootSet& membership, const RatVec& beta, const RatVec& alpha) {
  auto admitted = [&](const RatVec& v) { return v.is_zero() || membership.contains(v); };
  if (!admitted(beta)) throw std::invalid_argument("root_chain: beta " + beta.str() + " not in membership ∪ {0}");
  if (!admitted(alpha)) throw std::invalid_argument("root_chain: alpha " + alpha.str() + " not in membership ∪ {0}");

  Chain c{beta, alpha, 0, 0, {}};
  if (!alpha.is_zero()) {
    // Chain elements are distinct, so neither scan can exceed |membership| + 1 steps.
    const auto limit = static_cast<int>(membership.size()) + 1;
    RatVec v = beta;
    while (c.p <= limit && admitted(v += alpha)) ++c.p;
    v = beta;
    while (c.q <= limit && admitted(v -= alpha)) ++c.q;
  }
  RatVec v = beta - Rat(c.q) * alpha;
  for (int j = -c.q; j <= c.p; ++j, v += alpha) c.elements.push_back(v);
  return c;
}

int killing_integer(const RootSet& membership, const RatVec& beta, const RatVec& alpha) {
  Chain c = root_chain(membership, beta, alpha);
  return c.q - c.p;
}

LinFunc extend_functional(const RootDomain& domain, const RatVec& alpha) {
  const auto& basis = domain.frame().basis();
  LinFunc k{RatVec(basis.size())};
  if (alpha.is_zero()) return k;
  for (std::size_t i = 0; i < basis.size(); ++i) k.covector[i] = killing_integer(domain.roots(), basis[i], alpha);
  return k;
}

}  // namespace sandwich
