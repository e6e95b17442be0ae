#include "sandwich/semidirect.hpp"

#include <map>
#include <random>

namespace sandwich {

namespace {

std::string num(std::size_t i) { return std::to_string(i); }

RatMat block_diag(const RatMat& a, const RatMat& b) {
  RatMat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

}  // namespace

InducedMap induced_action(const Alignment& a, const HatSystem& h, const GroupElement& sigma) {
  auto push = [&](const RatVec& beta) {
    RatVec img = sigma.apply(beta);
    if (img.dot(a.h_star).sign() >= 0)
      throw InducedActionError("element moves " + beta.str() + " to " + img.str() + ", outside r_minus");
    return a.restriction.apply(img);
  };

  std::map<RatVec, RatVec> s;
  for (const auto& [v, fiber] : h.fibers) {
    RatVec first = push(fiber.front());
    for (std::size_t k = 1; k < fiber.size(); ++k)
      if (push(fiber[k]) != first)
        throw InducedActionError("induced map not well defined at " + v.str() + ": representatives " +
                                 fiber.front().str() + " and " + fiber[k].str() + " disagree");
    s.emplace(v, std::move(first));
  }
  if (auto z = s.find(h.zeta); z == s.end() || !z->second.is_zero())
    throw InducedActionError("induced map does not fix zeta");

  std::map<RatVec, RatVec> seen;
  for (const auto& v : h.phi) {
    auto it = s.find(v);
    if (it == s.end()) throw InducedActionError("restricted root " + v.str() + " has no fiber");
    if (!h.phi.contains(it->second))
      throw InducedActionError("image " + it->second.str() + " of " + v.str() + " is not in phi");
    if (auto [pos, fresh] = seen.emplace(it->second, v); !fresh)
      throw InducedActionError("induced map sends " + pos->second.str() + " and " + v.str() + " to the same root");
  }

  const auto m = static_cast<std::size_t>(h.M);
  InducedMap im{sigma, RatMat(m, m), {}, std::vector<int>(m, 0)};
  std::vector<std::uint32_t> tau(m);
  for (std::size_t i = 0; i < m; ++i) {
    const RatVec& u = s.at(h.pi_hat[i]);
    for (std::size_t j = 0; j < m; ++j) {
      if (h.pi_hat[j] == u) im.signs[i] = 1;
      else if (h.pi_hat[j] == -u) im.signs[i] = -1;
      else continue;
      tau[i] = static_cast<std::uint32_t>(j);
      im.matrix_on_hat(j, i) = im.signs[i];
      break;
    }
    if (im.signs[i] == 0) throw InducedActionError("image of " + h.pi_hat[i].str() + " is not ±pi_hat");
  }
  im.tau = IndexPerm(std::move(tau));
  return im;
}

FiniteGroup base_weyl(const Alignment& a, std::size_t cap) {
  DomainPtr dom = a.ambient_domain();
  std::vector<GroupElement> gens;
  for (const auto& r : a.r_zero_simple) gens.push_back(reflection(dom, r));
  ClosureOptions opts;
  opts.cap = cap;
  opts.dimension = dom->dim();
  opts.domain = dom;
  return group_closure(gens, opts);
}

std::vector<InducedMap> induced_actions(const Alignment& a, const HatSystem& h, const FiniteGroup& w_base) {
  std::vector<InducedMap> out(w_base.order());
  parallel_for(w_base.order(), [&](std::size_t i) { out[i] = induced_action(a, h, w_base[i]); });
  return out;
}

CheckResult check_rminus_stability(const Alignment& a, const FiniteGroup& w_base) {
  const std::size_t nr = a.r_minus.size();
  const std::size_t total = w_base.order() * nr;
  std::size_t bad = parallel_find_first(total, [&](std::size_t k) {
    return w_base[k / nr].apply(a.r_minus[k % nr]).dot(a.h_star).sign() >= 0;
  });
  if (bad == total) return CheckResult::pass("rminus_stability");
  const auto& g = w_base[bad / nr];
  const auto& beta = a.r_minus[bad % nr];
  return CheckResult::fail("rminus_stability",
                           "element " + g.key() + " sends " + beta.str() + " to " + g.apply(beta).str());
}

Report tau_homomorphism_check(const Alignment& a, const HatSystem& h, const FiniteGroup& w_base,
                              const VerifyLimits& limits) {
  Report rep;
  auto ims = induced_actions(a, h, w_base);
  GroupTable t(w_base, limits.full_table);
  const std::size_t n = w_base.order();
  const std::size_t ng = t.generator_count();
  auto tau = [&](std::uint32_t i) -> const IndexPerm& { return ims[i].tau; };

  rep.add(CheckResult::from("identity", tau(t.identity()).is_identity(),
                            "identity induces " + tau(t.identity()).str()));
  {
    std::string wit;
    for (std::size_t x = 0; x < ng && wit.empty(); ++x)
      for (std::size_t y = 0; y < ng && wit.empty(); ++y) {
        auto xy = t.mul_gen(t.generator(x), y);
        if (xy == kNotInGroup || tau(xy) != compose(tau(t.generator(x)), tau(t.generator(y))))
          wit = "generators " + num(x + 1) + ", " + num(y + 1);
      }
    rep.add(CheckResult::from("generator_pairs", wit.empty(), wit));
  }
  {
    std::size_t bad = parallel_find_first(n * ng, [&](std::size_t k) {
      auto g = static_cast<std::uint32_t>(k / ng);
      auto gs = t.mul_gen(g, k % ng);
      return gs == kNotInGroup || tau(gs) != compose(tau(g), tau(t.generator(k % ng)));
    });
    rep.add(CheckResult::from("cayley_edges", bad == n * ng,
                              bad < n * ng ? "element " + w_base[bad / ng].key() + ", generator " + num(bad % ng + 1) : ""));
  }
  if (t.has_full_table()) {
    std::size_t bad = parallel_find_first(n * n, [&](std::size_t k) {
      auto x = static_cast<std::uint32_t>(k / n), y = static_cast<std::uint32_t>(k % n);
      auto xy = t.mul(x, y);
      return xy == kNotInGroup || tau(xy) != compose(tau(x), tau(y));
    });
    rep.add(CheckResult::from("full_table", bad == n * n,
                              bad < n * n ? "elements " + w_base[bad / n].key() + " and " + w_base[bad % n].key() : ""));
  } else {
    rep.add(CheckResult::skip("full_table", "group order " + num(n) + " above the table limit"));
  }
  return rep;
}

Automorphism phi_of(const PhaseSpace& ps, const FiniteGroup& w_script, const InducedMap& im) {
  Automorphism a{lift_permutation(ps, im.tau), {}};
  RatMat tinv = a.lift.matrix.inverse();
  a.images.resize(w_script.order());
  for (std::size_t i = 0; i < w_script.order(); ++i) {
    RatMat c = a.lift.matrix * w_script[i].matrix() * tinv;
    auto j = w_script.index_of(c.key());
    if (!j) throw InducedActionError("conjugating " + w_script[i].key() + " by T" + im.tau.str() + " leaves the group");
    a.images[i] = static_cast<std::uint32_t>(*j);
  }
  return a;
}

PhiTable build_phi_table(const PhaseSpace& ps, const FiniteGroup& w_script, const std::vector<InducedMap>& induced) {
  PhiTable t;
  t.tau.resize(induced.size());
  t.phi.resize(induced.size());
  parallel_for(induced.size(), [&](std::size_t i) {
    t.tau[i] = induced[i].tau;
    t.phi[i] = phi_of(ps, w_script, induced[i]);
  });
  return t;
}

CheckResult check_lift_conjugation(const PhaseSpace& ps, const std::vector<InducedMap>& induced) {
  const auto m = static_cast<std::size_t>(ps.M);
  std::vector<RatMat> s(m);
  for (std::size_t i = 0; i < m; ++i) s[i] = s_generator(ps, static_cast<int>(i + 1)).matrix;
  std::size_t bad = parallel_find_first(induced.size() * m, [&](std::size_t k) {
    const auto& im = induced[k / m];
    RatMat t = lift_permutation(ps, im.tau).matrix;
    return t * s[k % m] * t.inverse() != s[im.tau(k % m)];
  });
  if (bad == induced.size() * m) return CheckResult::pass("conjugation");
  return CheckResult::fail("conjugation", "T" + induced[bad / m].tau.str() + " S_" + num(bad % m + 1) +
                                              " T^-1 differs from S_" + num(induced[bad / m].tau(bad % m) + 1));
}

// ---------------------------------------------------------------------------

GroupTable::GroupTable(const FiniteGroup& g, std::size_t full_table_limit) : g_(&g) {
  const std::size_t n = g.order();
  ngen_ = g.generators().size();
  for (const auto& s : g.generators()) {
    auto i = g.index_of(s);
    if (!i) throw std::invalid_argument("group table: generator missing from element list");
    gen_idx_.push_back(static_cast<std::uint32_t>(*i));
  }
  auto id = g.identity_index();
  if (!id) throw std::invalid_argument("group table: identity missing");
  id_ = static_cast<std::uint32_t>(*id);

  by_gen_.assign(n * ngen_, kNotInGroup);
  inv_.assign(n, kNotInGroup);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t k = 0; k < ngen_; ++k)
      if (auto j = g.index_of(element_multiply(g[i], g.generators()[k]))) by_gen_[i * ngen_ + k] = static_cast<std::uint32_t>(*j);
    if (auto j = g.index_of(g[i].matrix().inverse().key())) inv_[i] = static_cast<std::uint32_t>(*j);
  });
  if (n <= full_table_limit) full_ = multiplication_table(g);
}

std::uint32_t GroupTable::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == id_) return b;
  if (b == id_) return a;
  if (!full_.empty()) return full_[static_cast<std::size_t>(a) * g_->order() + b];
  if (g_->has_words()) {
    for (auto k : g_->word(b)) {
      a = by_gen_[static_cast<std::size_t>(a) * ngen_ + k];
      if (a == kNotInGroup) return a;
    }
    return a;
  }
  auto j = g_->index_of(element_multiply((*g_)[a], (*g_)[b]));
  return j ? static_cast<std::uint32_t>(*j) : kNotInGroup;
}

Report phi_homomorphism_check(const FiniteGroup& w_script, const FiniteGroup& w_base, const PhiTable& phi,
                              const VerifyLimits& limits) {
  Report rep;
  GroupTable ws(w_script, std::max<std::size_t>(limits.full_table, w_script.order()));
  GroupTable wb(w_base, limits.full_table);
  const std::size_t nw = w_script.order(), nb = w_base.order();
  const std::size_t gw = ws.generator_count(), gb = wb.generator_count();

  {
    std::size_t bad = parallel_find_first(nb, [&](std::size_t s) {
      const auto& img = phi.phi[s].images;
      std::vector<bool> hit(nw, false);
      for (auto x : img) {
        if (hit[x]) return true;
        hit[x] = true;
      }
      for (std::uint32_t w = 0; w < nw; ++w)
        for (std::size_t k = 0; k < gw; ++k)
          if (img[ws.mul_gen(w, k)] != ws.mul(img[w], img[ws.generator(k)])) return true;
      return false;
    });
    rep.add(CheckResult::from("phi_automorphism", bad == nb,
                              bad < nb ? "phi of " + w_base[bad].key() + " is not an automorphism" : ""));
  }
  {
    auto composes = [&](std::uint32_t g, std::uint32_t h, std::uint32_t gh) {
      if (gh == kNotInGroup) return false;
      for (std::uint32_t w = 0; w < nw; ++w)
        if (phi.phi[gh].images[w] != phi.phi[g].images[phi.phi[h].images[w]]) return false;
      return true;
    };
    std::size_t bad = parallel_find_first(nb * gb, [&](std::size_t k) {
      auto g = static_cast<std::uint32_t>(k / gb);
      return !composes(g, wb.generator(k % gb), wb.mul_gen(g, k % gb));
    });
    std::string wit = bad < nb * gb ? "element " + w_base[bad / gb].key() + ", generator " + num(bad % gb + 1) : "";
    if (wit.empty() && wb.has_full_table()) {
      bad = parallel_find_first(nb * nb, [&](std::size_t k) {
        auto g = static_cast<std::uint32_t>(k / nb), h = static_cast<std::uint32_t>(k % nb);
        return !composes(g, h, wb.mul(g, h));
      });
      if (bad < nb * nb) wit = "elements " + w_base[bad / nb].key() + " and " + w_base[bad % nb].key();
    }
    rep.add(CheckResult::from("phi_homomorphism", wit.empty(), wit));
  }
  return rep;
}

// ---------------------------------------------------------------------------

SemidirectGroup::SemidirectGroup(const FiniteGroup& w_script, const FiniteGroup& w_base, PhiTable phi,
                                 std::size_t cap, const VerifyLimits& limits)
    : ws_(w_script, std::max<std::size_t>(limits.full_table, w_script.order())),
      wb_(w_base, limits.full_table),
      phi_(std::move(phi)) {
  if (phi_.phi.size() != w_base.order()) throw std::invalid_argument("semidirect: phi table does not cover W_R");
  for (std::size_t k = 0; k < wb_.generator_count(); ++k) generators_.push_back({ws_.identity(), wb_.generator(k)});
  for (std::size_t k = 0; k < ws_.generator_count(); ++k) generators_.push_back({ws_.generator(k), wb_.identity()});

  const std::size_t nb = wb_.order();
  member_.assign(ws_.order() * nb, false);
  auto slot = [&](SdpElement x) { return static_cast<std::size_t>(x.w) * nb + x.sigma; };

  std::vector<SdpElement> found{identity()};
  member_[slot(identity())] = true;
  for (std::size_t head = 0; head < found.size(); ++head) {
    const SdpElement x = found[head];
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      const SdpElement& g = generators_[k];
      // Right multiplication by a generator: one side of the pair is trivial.
      SdpElement y = k < wb_.generator_count() ? SdpElement{x.w, wb_.mul_gen(x.sigma, k)}
                                               : SdpElement{ws_.mul(x.w, phi_.phi[x.sigma].images[g.w]), x.sigma};
      if (y.w == kNotInGroup || y.sigma == kNotInGroup) throw std::logic_error("semidirect: product left the factors");
      if (member_[slot(y)]) continue;
      member_[slot(y)] = true;
      found.push_back(y);
      if (found.size() > cap) throw ClosureCapExceeded("semidirect closure exceeded the element cap of " + num(cap));
    }
  }
  elements_ = std::move(found);
  std::sort(elements_.begin(), elements_.end());
}

bool SemidirectGroup::contains(SdpElement x) const {
  if (x.w >= ws_.order() || x.sigma >= wb_.order()) return false;
  return member_[static_cast<std::size_t>(x.w) * wb_.order() + x.sigma];
}

SdpElement SemidirectGroup::multiply(SdpElement a, SdpElement b) const {
  if (a.w >= ws_.order() || b.w >= ws_.order() || a.sigma >= wb_.order() || b.sigma >= wb_.order())
    throw std::out_of_range("sdp_multiply: unresolved element");
  return {ws_.mul(a.w, phi_.phi[a.sigma].images[b.w]), wb_.mul(a.sigma, b.sigma)};
}

SdpElement SemidirectGroup::inverse(SdpElement a) const {
  std::uint32_t s_inv = wb_.inverse(a.sigma);
  return {phi_.phi[s_inv].images[ws_.inverse(a.w)], s_inv};
}

std::string SemidirectGroup::key(SdpElement x) const {
  return ws_.group()[x.w].key() + " | " + wb_.group()[x.sigma].key();
}

SdpElement sdp_multiply(const SemidirectGroup& g, SdpElement a, SdpElement b) { return g.multiply(a, b); }

SemidirectGroup build_semidirect(const FiniteGroup& w_script, const FiniteGroup& w_base, PhiTable phi,
                                 std::size_t cap, const VerifyLimits& limits) {
  return SemidirectGroup(w_script, w_base, std::move(phi), cap, limits);
}

Report verify_semidirect_axioms(const SemidirectGroup& g, const VerifyLimits& limits) {
  Report rep;
  const auto& el = g.elements();
  const std::size_t n = el.size();
  const SdpElement e = g.identity();

  rep.add(CheckResult::from("order", n == g.expected_order(),
                            "order " + num(n) + ", expected " + num(g.expected_order())));
  {
    std::size_t bad = parallel_find_first(n, [&](std::size_t i) {
      return g.multiply(e, el[i]) != el[i] || g.multiply(el[i], e) != el[i];
    });
    rep.add(CheckResult::from("identity", bad == n, bad < n ? g.key(el[bad]) : ""));
  }
  {
    std::size_t bad = parallel_find_first(n, [&](std::size_t i) {
      SdpElement inv = g.inverse(el[i]);
      return !g.contains(inv) || g.multiply(el[i], inv) != e || g.multiply(inv, el[i]) != e;
    });
    rep.add(CheckResult::from("inverses", bad == n, bad < n ? g.key(el[bad]) : ""));
  }
  {
    auto assoc_fails = [&](SdpElement a, SdpElement b, SdpElement c) {
      return g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c));
    };
    if (n <= limits.exhaustive_associativity) {
      std::size_t bad = parallel_find_first(n * n, [&](std::size_t k) {
        for (std::size_t c = 0; c < n; ++c)
          if (assoc_fails(el[k / n], el[k % n], el[c])) return true;
        return false;
      });
      rep.add(CheckResult::from("associativity", bad == n * n,
                                bad < n * n ? "first failing pair " + g.key(el[bad / n]) + " ; " + g.key(el[bad % n]) : ""));
    } else {
      constexpr std::size_t kSamples = 200000;
      std::mt19937_64 rng(0x5a4d5eedULL);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      std::vector<std::size_t> idx(3 * kSamples);
      for (auto& x : idx) x = pick(rng);
      std::size_t bad = parallel_find_first(kSamples, [&](std::size_t s) {
        return assoc_fails(el[idx[3 * s]], el[idx[3 * s + 1]], el[idx[3 * s + 2]]);
      });
      CheckResult r = CheckResult::from("associativity", bad == kSamples,
                                        bad < kSamples ? "sampled triple " + num(bad) + " fails" : "");
      if (r.passed()) r.witness = "sampled " + num(kSamples) + " triples";
      rep.add(std::move(r));
    }
  }
  {
    const std::size_t nw = g.script_table().order(), nb = g.base_table().order();
    std::size_t bad = parallel_find_first(nb * nw, [&](std::size_t k) {
      auto s = static_cast<std::uint32_t>(k / nw), w = static_cast<std::uint32_t>(k % nw);
      SdpElement c = g.multiply(g.multiply(g.gamma(s), g.lambda(w)), g.inverse(g.gamma(s)));
      return c != g.lambda(g.phi().phi[s].images[w]);
    });
    rep.add(CheckResult::from("conjugation_is_phi", bad == nb * nw,
                              bad < nb * nw ? "sigma " + num(bad / nw) + ", w " + num(bad % nw) : ""));
  }
  return rep;
}

ExactSeqReport exact_sequence_check(const SemidirectGroup& g) {
  ExactSeqReport r;
  const auto& el = g.elements();
  const std::size_t n = el.size();
  const std::size_t nw = g.script_table().order(), nb = g.base_table().order();
  const std::uint32_t one_b = g.base_table().identity();

  {
    std::size_t kernel = 0;
    for (const auto& x : el)
      if (g.pi(x) == one_b) ++kernel;
    bool all_in = true;
    for (std::uint32_t w = 0; w < nw; ++w) all_in = all_in && g.contains(g.lambda(w));
    r.image_equals_kernel = all_in && kernel == nw;
    if (!r.image_equals_kernel)
      r.witnesses.push_back("kernel of projection has " + num(kernel) + " elements, image of inclusion " + num(nw));
  }
  {
    std::size_t bad = parallel_find_first(n * nw, [&](std::size_t k) {
      const SdpElement& x = el[k / nw];
      SdpElement c = g.multiply(g.multiply(x, g.lambda(static_cast<std::uint32_t>(k % nw))), g.inverse(x));
      return !g.contains(c) || g.pi(c) != one_b;
    });
    r.image_normal = bad == n * nw;
    if (!r.image_normal) r.witnesses.push_back("conjugate of w " + num(bad % nw) + " by " + g.key(el[bad / nw]) + " leaves the image");
  }
  {
    std::string wit;
    const auto& wb = g.base_table();
    for (std::uint32_t s = 0; s < nb && wit.empty(); ++s) {
      if (!g.contains(g.gamma(s)) || g.pi(g.gamma(s)) != s) wit = "section fails at sigma " + num(s);
      for (std::size_t k = 0; k < wb.generator_count() && wit.empty(); ++k)
        if (g.multiply(g.gamma(s), g.gamma(wb.generator(k))) != g.gamma(wb.mul_gen(s, k)))
          wit = "section is not multiplicative at sigma " + num(s) + ", generator " + num(k + 1);
      for (std::uint32_t w = 0; w < nw && wit.empty(); ++w)
        if (g.multiply(g.lambda(g.script_table().inverse(w)), SdpElement{w, s}) != g.gamma(s))
          wit = "section depends on the chosen w " + num(w);
    }
    r.splitting_ok = wit.empty();
    if (!wit.empty()) r.witnesses.push_back(wit);
  }
  r.order_product_ok = n == nw * nb;
  if (!r.order_product_ok) r.witnesses.push_back("order " + num(n) + " != " + num(nw) + " * " + num(nb));
  return r;
}

CheckResult check_matrix_realization(const SemidirectGroup& g, std::size_t cap) {
  const auto& ws = g.script_table().group();
  const auto& wb = g.base_table().group();
  auto rho = [&](SdpElement x) {
    return block_diag(ws[x.w].matrix() * g.phi().phi[x.sigma].lift.matrix, wb[x.sigma].matrix());
  };
  std::vector<GroupElement> gens;
  for (const auto& x : g.generators()) gens.emplace_back(rho(x));
  ClosureOptions opts;
  opts.cap = cap;
  opts.dimension = ws.dim() + wb.dim();
  FiniteGroup model = group_closure(gens, opts);
  if (model.order() != g.expected_order())
    return CheckResult::fail("matrix_realization", "matrix model has order " + num(model.order()) + ", expected " +
                                                       num(g.expected_order()));

  const auto& el = g.elements();
  const std::size_t ng = g.generators().size();
  std::size_t bad = parallel_find_first(el.size() * ng, [&](std::size_t k) {
    const SdpElement& x = el[k / ng];
    const SdpElement& s = g.generators()[k % ng];
    return rho(x) * rho(s) != rho(g.multiply(x, s));
  });
  if (bad < el.size() * ng)
    return CheckResult::fail("matrix_realization", "model disagrees with the pair law at " + g.key(el[bad / ng]));
  return CheckResult::pass("matrix_realization");
}

}  // namespace sandwich
