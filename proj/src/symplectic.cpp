#include "sandwich/symplectic.hpp"

#include <stdexcept>

namespace sandwich {

IndexPerm::IndexPerm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || hit[x]) throw std::invalid_argument("not a permutation: " + str());
    hit[x] = true;
  }
}

IndexPerm IndexPerm::identity(std::size_t m) {
  std::vector<std::uint32_t> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = static_cast<std::uint32_t>(i);
  return IndexPerm(std::move(v));
}

bool IndexPerm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

IndexPerm IndexPerm::inverse() const {
  std::vector<std::uint32_t> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[images_[i]] = static_cast<std::uint32_t>(i);
  return IndexPerm(std::move(v));
}

IndexPerm compose(const IndexPerm& a, const IndexPerm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<std::uint32_t> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.images_[b.images_[i]];
  return IndexPerm(std::move(v));
}

std::string IndexPerm::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i] + 1);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

bool is_symplectic(const PhaseSpace& ps, const RatMat& m) {
  if (m.rows() != ps.dim() || m.cols() != ps.dim()) return false;
  return m.transpose() * ps.omega * m == ps.omega;
}

PhaseSpace build_phase_space(const HatSystem& h) {
  PhaseSpace ps;
  ps.M = h.M;
  const auto m = static_cast<std::size_t>(h.M);
  for (std::size_t i = 0; i < m; ++i) {
    ps.basis_labels.push_back("x" + std::to_string(i + 1));
    ps.label_roots.push_back(h.pi_hat[i]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    ps.basis_labels.push_back("y" + std::to_string(i + 1));
    ps.label_roots.push_back(-h.pi_hat[i]);
  }
  ps.omega = RatMat(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    ps.omega(i, m + i) = 1;
    ps.omega(m + i, i) = -1;
  }
  return ps;
}

SympMap s_generator(const PhaseSpace& ps, int i) {
  if (i < 1 || i > ps.M) throw std::out_of_range("s_generator: index " + std::to_string(i) + " outside 1.." + std::to_string(ps.M));
  const auto m = static_cast<std::size_t>(ps.M);
  const auto k = static_cast<std::size_t>(i - 1);
  RatMat s = RatMat::identity(2 * m);
  s(k, k) = -1;
  s(m + k, m + k) = -1;
  return {s};
}

SympMap lift_permutation(const PhaseSpace& ps, const IndexPerm& tau) {
  const auto m = static_cast<std::size_t>(ps.M);
  if (tau.size() != m) throw std::invalid_argument("lift_permutation: permutation of size " + std::to_string(tau.size()));
  RatMat t(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    t(tau(i), i) = 1;
    t(m + tau(i), m + i) = 1;
  }
  return {t};
}

FiniteGroup script_w(const PhaseSpace& ps, std::size_t cap) {
  std::vector<GroupElement> gens;
  for (int i = 1; i <= ps.M; ++i) gens.emplace_back(s_generator(ps, i).matrix);
  ClosureOptions opts;
  opts.cap = cap;
  opts.dimension = ps.dim();
  return group_closure(gens, opts);
}

std::vector<std::uint32_t> mu_images(const FiniteGroup& w_hat, const FiniteGroup& w_script) {
  if (w_hat.generators().size() != w_script.generators().size())
    throw std::invalid_argument("mu: generator counts differ (" + std::to_string(w_hat.generators().size()) + " vs " +
                                std::to_string(w_script.generators().size()) + ")");
  if (!w_hat.has_words()) throw std::invalid_argument("mu: source group carries no generator words");
  const auto& s = w_script.generators();
  std::vector<std::uint32_t> img(w_hat.order(), kNotInGroup);
  for (std::size_t i = 0; i < w_hat.order(); ++i) {
    GroupElement g = GroupElement::identity(w_script.dim());
    for (auto k : w_hat.word(i)) g = element_multiply(g, s[k]);
    if (auto j = w_script.index_of(g)) img[i] = static_cast<std::uint32_t>(*j);
  }
  return img;
}

Report mu_isomorphism(const FiniteGroup& w_hat, const FiniteGroup& w_script) {
  Report rep;
  auto img = mu_images(w_hat, w_script);
  const std::size_t n = w_hat.order();
  const auto& gh = w_hat.generators();
  const auto& gs = w_script.generators();

  {
    std::string wit;
    for (std::size_t k = 0; k < gh.size() && wit.empty(); ++k) {
      auto i = w_hat.index_of(gh[k]);
      auto j = w_script.index_of(gs[k]);
      if (!i || !j || img[*i] != *j) wit = "generator " + std::to_string(k + 1) + " is not sent to its partner";
    }
    rep.add(CheckResult::from("generators", wit.empty(), wit));
  }

  // Every Cayley-graph edge g -> g·s_k must map to mu(g) -> mu(g)·S_k; together
  // with the word-based definition this is independence of the chosen word.
  {
    std::string wit;
    for (std::size_t i = 0; i < n && wit.empty(); ++i)
      for (std::size_t k = 0; k < gh.size() && wit.empty(); ++k) {
        auto gi = w_hat.index_of(element_multiply(w_hat[i], gh[k]));
        if (img[i] == kNotInGroup || !gi) {
          wit = "element " + w_hat[i].key() + " has no image";
          continue;
        }
        auto want = w_script.index_of(element_multiply(w_script[img[i]], gs[k]));
        if (!want || img[*gi] != *want) wit = "two words for " + w_hat[*gi].key() + " have different images";
      }
    rep.add(CheckResult::from("well_defined", wit.empty(), wit));
  }

  {
    auto th = multiplication_table(w_hat);
    auto ts = multiplication_table(w_script);
    const std::size_t m = w_script.order();
    std::size_t bad = parallel_find_first(n * n, [&](std::size_t k) {
      std::uint32_t a = img[k / n], b = img[k % n], ab = th[k];
      return a == kNotInGroup || b == kNotInGroup || ab == kNotInGroup || img[ab] != ts[a * m + b];
    });
    rep.add(CheckResult::from("homomorphism", bad == n * n,
                              bad < n * n ? "mu(ab) != mu(a)mu(b) for a = " + w_hat[bad / n].key() + ", b = " + w_hat[bad % n].key()
                                          : ""));
  }

  {
    std::vector<bool> hit(w_script.order(), false);
    std::string wit;
    for (std::size_t i = 0; i < n && wit.empty(); ++i) {
      if (img[i] == kNotInGroup) wit = "no image for " + w_hat[i].key();
      else if (hit[img[i]]) wit = "image " + w_script[img[i]].key() + " hit twice";
      else hit[img[i]] = true;
    }
    if (wit.empty() && n != w_script.order())
      wit = "orders differ: " + std::to_string(n) + " vs " + std::to_string(w_script.order());
    rep.add(CheckResult::from("bijective", wit.empty(), wit));
  }
  return rep;
}

}  // namespace sandwich
