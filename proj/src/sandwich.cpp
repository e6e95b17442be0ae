#include "sandwich/sandwich.hpp"

#include <algorithm>
#include <memory>

namespace sandwich {

namespace {

std::string idx_str(std::size_t i) { return std::to_string(i); }

}  // namespace

DomainPtr Alignment::ambient_domain() const {
  return std::make_shared<const RootDomain>(ambient.roots, ambient.simple_roots);
}

DomainPtr Alignment::r_zero_domain() const { return std::make_shared<const RootDomain>(r_zero, r_zero_simple); }

Alignment align(const RootSystem& ambient, const RatVec& h_star, const AlignOptions& opts) {
  if (h_star.size() != ambient.dim())
    throw std::invalid_argument("h_star has " + idx_str(h_star.size()) + " coordinates, ambient space has " +
                                idx_str(ambient.dim()));
  if (h_star.is_zero()) throw std::invalid_argument("h_star must be nonzero");

  Alignment a;
  a.ambient = ambient;
  a.h_star = h_star;
  std::vector<RatVec> zero, minus;
  for (const auto& r : ambient.roots) {
    int s = r.dot(h_star).sign();
    if (s == 0) zero.push_back(r);
    if (s < 0) minus.push_back(r);
  }
  a.r_zero = RootSet(zero);
  a.r_minus = RootSet(minus);

  if (a.r_zero.empty()) throw AlignmentError("no roots vanish on h_star");
  const std::size_t want = static_cast<std::size_t>(ambient.rank) - 1;
  const std::size_t got = rank_of(a.r_zero.items());
  if (got != want)
    throw AlignmentError("roots vanishing on h_star span dimension " + idx_str(got) + ", expected " + idx_str(want));

  a.restriction = orthogonal_projector(a.r_zero.items(), ambient.dim());

  Frame ambient_frame(ambient.simple_roots);
  std::vector<RatVec> positive;
  for (const auto& r : a.r_zero) {
    auto c = ambient_frame.coordinates(r);
    if (c && c->leading_sign() > 0 && std::all_of(c->begin(), c->end(), [](const Rat& x) { return x.sign() >= 0; }))
      positive.push_back(r);
  }
  a.r_zero_simple = simple_roots_of(a.r_zero, positive);

  if (opts.verify_r_zero) {
    auto rep = verify_axioms(a.r_zero, a.r_zero_simple);
    if (const auto* f = rep.first_failure())
      throw AlignmentError("roots vanishing on h_star fail axiom '" + f->name + "': " + f->witness);
  }
  return a;
}

CenterReport nilradical_center(const Alignment& a) {
  CenterReport r;
  for (const auto& x : a.r_minus) {
    bool central = std::none_of(a.r_minus.begin(), a.r_minus.end(),
                                [&](const RatVec& y) { return a.ambient.roots.contains(x + y); });
    if (central) r.center_roots.push_back(x);
  }
  r.dimension = r.center_roots.size();
  r.is_class_c = r.dimension == 1;
  return r;
}

ClassCError::ClassCError(CenterReport r)
    : std::runtime_error("nilradical center has dimension " + std::to_string(r.dimension) + ", not 1"),
      report(std::move(r)) {}

HatSystem restrict_hat(const Alignment& a) {
  CenterReport center = nilradical_center(a);
  if (!center.is_class_c) throw ClassCError(std::move(center));

  HatSystem h;
  h.zeta = RatVec(a.ambient.dim());
  for (const auto& r : a.r_minus) h.fibers[a.restriction.apply(r)].push_back(r);
  if (!h.fibers.count(h.zeta)) throw AlignmentError("no root of r_minus restricts to zero");

  std::vector<RatVec> phi;
  for (const auto& [v, fiber] : h.fibers)
    if (!v.is_zero()) phi.push_back(v);
  h.phi = RootSet(phi);

  for (const auto& v : h.phi)
    if (v.leading_sign() > 0) h.pi_hat.push_back(v);
  std::sort(h.pi_hat.begin(), h.pi_hat.end(), std::greater<>{});
  if (rank_of(h.pi_hat) != h.pi_hat.size()) throw AlignmentError("positive restricted roots are linearly dependent");
  h.basis = h.pi_hat;
  h.M = static_cast<int>(h.pi_hat.size());
  return h;
}

DomainPtr HatSystem::domain() const { return std::make_shared<const RootDomain>(phi, basis); }

// ---------------------------------------------------------------------------

AxiomReport verify_axioms(const RootSet& phi, const std::vector<RatVec>& basis) {
  AxiomReport rep;
  const std::size_t n = phi.size();

  // 1: phi is a set of nonzero vectors spanned by the independent basis drawn from it.
  {
    std::string w;
    for (const auto& v : phi)
      if (v.is_zero()) w = "zero vector in phi";
    for (const auto& b : basis)
      if (w.empty() && !phi.contains(b)) w = "basis vector " + b.str() + " not in phi";
    if (w.empty() && rank_of(basis) != basis.size()) w = "basis is linearly dependent";
    if (w.empty()) {
      std::vector<RatVec> all = basis;
      all.insert(all.end(), phi.begin(), phi.end());
      if (rank_of(all) != basis.size()) w = "basis does not span phi";
    }
    rep.add(CheckResult::from("span", w.empty(), w));
  }

  // 2
  {
    std::size_t bad = serial_find_first(n, [&](std::size_t i) { return !phi.contains(-phi[i]); });
    rep.add(CheckResult::from("symmetry", bad == n, bad < n ? phi[bad].str() + " is in phi but its negative is not" : ""));
  }

  KillingTable k = killing_table(phi);

  // 3: every chain found by the bounded scan stopped short of the bound.
  {
    const auto bound = static_cast<int>(n) + 1;
    std::size_t bad = serial_find_first(k.values.size(), [&](std::size_t i) { return k.q[i] > bound || k.p[i] > bound; });
    std::string w;
    if (bad < k.values.size()) {
      std::size_t b = bad / std::max<std::size_t>(n, 1), al = bad % std::max<std::size_t>(n, 1);
      w = "chain through " + (b < n ? phi[b].str() : std::string("0")) + " along " + phi[al].str() + " is unbounded";
    }
    rep.add(CheckResult::from("chains", w.empty(), w));
  }

  // 4
  {
    struct Triple {
      std::size_t b1, b2, sum;
    };
    std::vector<Triple> triples;
    auto row = [&](const RatVec& v) -> std::optional<std::size_t> {
      if (v.is_zero()) return k.zero_row();
      return phi.index_of(v);
    };
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) {
        RatVec s = (i < n ? phi[i] : RatVec(phi.dim())) + (j < n ? phi[j] : RatVec(phi.dim()));
        if (auto r = row(s)) triples.push_back({i, j, *r});
      }
    std::size_t bad = parallel_find_first(n, [&](std::size_t al) {
      for (const auto& t : triples)
        if (k.at(t.sum, al) != k.at(t.b1, al) + k.at(t.b2, al)) return true;
      return false;
    });
    std::string w;
    if (bad < n) {
      for (const auto& t : triples)
        if (k.at(t.sum, bad) != k.at(t.b1, bad) + k.at(t.b2, bad)) {
          auto name = [&](std::size_t r) { return r < n ? phi[r].str() : std::string("0"); };
          w = "<" + name(t.sum) + ", " + phi[bad].str() + "> != <" + name(t.b1) + ", " + phi[bad].str() + "> + <" +
              name(t.b2) + ", " + phi[bad].str() + ">";
          break;
        }
    }
    rep.add(CheckResult::from("additivity", bad == n, w));
  }

  // 5
  {
    std::size_t bad = serial_find_first(n, [&](std::size_t i) { return k.at(i, i) != 2; });
    rep.add(CheckResult::from("normalization", bad == n,
                              bad < n ? "<" + phi[bad].str() + ", " + phi[bad].str() + "> = " + idx_str(k.at(bad, bad)) : ""));
  }
  return rep;
}

AxiomReport verify_axioms(const HatSystem& h) { return verify_axioms(h.phi, h.basis); }

CheckResult check_sum_collapse(const HatSystem& h) {
  for (const auto& a : h.phi)
    for (const auto& b : h.phi) {
      RatVec s = a + b;
      if (!s.is_zero() && h.phi.contains(s))
        return CheckResult::fail("sum_collapse", a.str() + " + " + b.str() + " = " + s.str());
    }
  return CheckResult::pass("sum_collapse");
}

bool sum_collapse_check(const HatSystem& h) { return check_sum_collapse(h).passed(); }

FiniteGroup hat_weyl(const HatSystem& h, std::size_t cap) {
  DomainPtr dom = h.domain();
  std::vector<GroupElement> gens;
  for (const auto& a : h.pi_hat) gens.push_back(reflection(dom, a));
  ClosureOptions opts;
  opts.cap = cap;
  opts.dimension = h.basis.size();
  opts.domain = dom;
  return group_closure(gens, opts);
}

Report verify_relations(const HatSystem& h, const FiniteGroup& w) {
  Report rep;
  const auto& s = w.generators();
  const std::size_t m = s.size();
  const std::size_t dim = h.basis.size();
  const RatMat id = RatMat::identity(dim);
  DomainPtr dom = h.domain();

  {
    std::size_t bad = serial_find_first(m, [&](std::size_t i) { return element_multiply(s[i], s[i]).matrix() != id; });
    rep.add(CheckResult::from("involution", bad == m, "generator " + idx_str(bad + 1) + " squared is not the identity"));
  }
  {
    std::size_t bad = serial_find_first(m * m, [&](std::size_t k) {
      return element_multiply(s[k / m], s[k % m]) != element_multiply(s[k % m], s[k / m]);
    });
    rep.add(CheckResult::from("commutation", bad == m * m,
                              "generators " + idx_str(bad / std::max<std::size_t>(m, 1) + 1) + " and " +
                                  idx_str(bad % std::max<std::size_t>(m, 1) + 1) + " do not commute"));
  }
  {
    GroupElement prod = GroupElement::identity(dim, dom);
    for (const auto& g : s) prod = element_multiply(prod, g);
    rep.add(CheckResult::from("product_minus_identity", prod.matrix() == -id,
                              "product of generators is " + prod.key()));
  }
  {
    const std::size_t n = w.order();
    auto table = multiplication_table(w);
    std::size_t bad = parallel_find_first(n * n, [&](std::size_t k) {
      return table[k] == kNotInGroup || table[k] != table[(k % n) * n + k / n];
    });
    rep.add(CheckResult::from("abelian", bad == n * n,
                              bad < n * n ? "elements " + w[bad / n].key() + " and " + w[bad % n].key() + " do not commute" : ""));
  }
  {
    std::string wit;
    for (std::size_t i = 0; i < m && wit.empty(); ++i)
      for (std::size_t j = 0; j < m && wit.empty(); ++j) {
        RatVec want = i == j ? -h.pi_hat[i] : h.pi_hat[j];
        if (s[i].apply(h.pi_hat[j]) != want) wit = "sigma_" + idx_str(i + 1) + " on root " + idx_str(j + 1);
      }
    rep.add(CheckResult::from("simple_images", wit.empty(), wit));
  }
  {
    std::string wit;
    for (std::size_t i = 0; i < m && wit.empty(); ++i)
      for (std::size_t j = 0; j < m && wit.empty(); ++j) {
        if (i == j) continue;
        GroupElement ji = element_multiply(s[j], s[i]);
        for (std::size_t k = 0; k < m && wit.empty(); ++k) {
          RatVec want = k == i ? -h.pi_hat[i] : (k == j ? -h.pi_hat[j] : h.pi_hat[k]);
          if (ji.apply(h.pi_hat[k]) != want)
            wit = "sigma_" + idx_str(j + 1) + " sigma_" + idx_str(i + 1) + " on root " + idx_str(k + 1);
        }
      }
    rep.add(CheckResult::from("pair_images", wit.empty(), wit));
  }
  {
    std::string wit;
    for (const auto& a : h.phi) {
      if (!h.phi.contains(-a)) continue;
      GroupElement pos = reflection(dom, a), neg = reflection(dom, -a);
      if (element_multiply(neg, pos).matrix() != id) {
        wit = "sigma at " + (-a).str() + " is not the inverse of sigma at " + a.str();
        break;
      }
      if (!w.contains(pos)) {
        wit = "sigma at " + a.str() + " is outside the group";
        break;
      }
    }
    rep.add(CheckResult::from("negative_reflections", wit.empty(), wit));
  }
  {
    std::vector<GroupElement> all;
    for (const auto& a : h.phi) all.push_back(reflection(dom, a));
    ClosureOptions opts;
    opts.dimension = dim;
    opts.domain = dom;
    FiniteGroup full = group_closure(all, opts);
    bool same = full.order() == w.order();
    for (std::size_t i = 0; same && i < full.order(); ++i) same = full[i] == w[i];
    rep.add(CheckResult::from("generated_by_simple", same,
                              "all reflections generate order " + idx_str(full.order()) + ", simple ones " +
                                  idx_str(w.order())));
  }
  return rep;
}

Report verify_reflection_laws(const DomainPtr& domain) {
  Report rep;
  const RootSet& roots = domain->roots();
  const std::size_t n = roots.size();
  const RatMat id = RatMat::identity(domain->dim());
  std::vector<GroupElement> sigma(n);
  parallel_for(n, [&](std::size_t i) { sigma[i] = reflection(domain, roots[i]); });

  {
    std::size_t bad = parallel_find_first(n, [&](std::size_t i) { return element_multiply(sigma[i], sigma[i]).matrix() != id; });
    rep.add(CheckResult::from("involution", bad == n, bad < n ? "sigma at " + roots[bad].str() + " squared" : ""));
  }
  {
    auto chain_fails = [&](std::size_t k) {
      const RatVec& a = roots[k % n];
      const RatVec& b = roots[k / n];
      Chain c = root_chain(roots, b, a);
      for (int j = -c.q; j <= c.p; ++j) {
        RatVec v = b + Rat(j) * a;
        if (sigma[k % n].apply(v) != b + Rat(c.p - (c.q + j)) * a) return true;
      }
      return false;
    };
    std::size_t bad = parallel_find_first(n * n, chain_fails);
    rep.add(CheckResult::from("chain_formula", bad == n * n,
                              bad < n * n ? "beta " + roots[bad / n].str() + ", alpha " + roots[bad % n].str() : ""));
  }
  {
    std::size_t bad = serial_find_first(n, [&](std::size_t i) { return !sigma[i].permutes_domain(); });
    rep.add(CheckResult::from("bijective", bad == n, bad < n ? "sigma at " + roots[bad].str() : ""));
  }
  {
    std::size_t bad = serial_find_first(n, [&](std::size_t i) {
      auto neg = roots.index_of(-roots[i]);
      return neg && element_multiply(sigma[*neg], sigma[i]).matrix() != id;
    });
    rep.add(CheckResult::from("negation_inverse", bad == n, bad < n ? "alpha " + roots[bad].str() : ""));
  }
  return rep;
}

}  // namespace sandwich
