#include "sandwich/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "sandwich/kernels.hpp"

namespace sandwich {

GroupElement::GroupElement(RatMat m, DomainPtr domain) : m_(std::move(m)), domain_(std::move(domain)) {
  if (!m_.is_square()) throw std::invalid_argument("group element: matrix is not square");
  if (domain_ && domain_->dim() != m_.rows())
    throw std::invalid_argument("group element: matrix size does not match domain");
  if (!m_.is_invertible()) throw std::invalid_argument("group element: matrix is singular");
  key_ = m_.key();
  compute_action();
}

GroupElement::GroupElement(RatMat m, DomainPtr domain, Unchecked)
    : m_(std::move(m)), key_(m_.key()), domain_(std::move(domain)) {}

GroupElement GroupElement::identity(std::size_t n, DomainPtr domain) {
  return GroupElement(RatMat::identity(n), std::move(domain));
}

void GroupElement::compute_action() {
  action_.reset();
  if (!domain_) return;
  const auto& roots = domain_->roots();
  Perm perm(roots.size());
  std::vector<bool> hit(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    auto j = domain_->index_of_coords(m_.apply(domain_->coords(i)));
    if (!j || hit[*j]) return;
    hit[*j] = true;
    perm[i] = static_cast<std::uint32_t>(*j);
  }
  action_ = std::move(perm);
}

RatVec GroupElement::apply(const RatVec& v) const {
  if (!domain_) throw std::logic_error("group element has no domain frame");
  auto c = domain_->frame().coordinates(v);
  if (!c) throw std::invalid_argument("vector " + v.str() + " outside the domain span");
  return domain_->frame().vector(m_.apply(*c));
}

GroupElement element_multiply(const GroupElement& a, const GroupElement& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("element_multiply: dimension mismatch");
  DomainPtr dom = a.domain_ == b.domain_ ? a.domain_ : nullptr;
  GroupElement r(a.m_ * b.m_, dom, GroupElement::Unchecked{});
  if (dom && a.action_ && b.action_) {
    Perm p(b.action_->size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = (*a.action_)[(*b.action_)[i]];
    r.action_ = std::move(p);
  } else {
    r.compute_action();
  }
  return r;
}

GroupElement reflection(const DomainPtr& domain, const RatVec& alpha) {
  if (!domain) throw std::invalid_argument("reflection: null domain");
  const std::size_t n = domain->dim();
  if (alpha.is_zero()) return GroupElement::identity(n, domain);
  if (!domain->roots().contains(alpha))
    throw std::invalid_argument("reflection: " + alpha.str() + " is not in the membership set");
  LinFunc k = extend_functional(*domain, alpha);
  RatVec a = *domain->frame().coordinates(alpha);
  RatMat m = RatMat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= a[i] * k.covector[j];
  return GroupElement(std::move(m), domain);
}

// ---------------------------------------------------------------------------

FiniteGroup::FiniteGroup(std::vector<GroupElement> elements, std::vector<GroupElement> generators,
                         std::vector<std::vector<std::uint16_t>> words)
    : generators_(std::move(generators)) {
  if (!words.empty() && words.size() != elements.size())
    throw std::invalid_argument("finite group: word count mismatch");
  std::vector<std::size_t> order(elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return elements[x].key() < elements[y].key(); });
  elements_.reserve(elements.size());
  for (std::size_t i : order) {
    if (!elements_.empty() && elements_.back().key() == elements[i].key()) continue;
    elements_.push_back(std::move(elements[i]));
    if (!words.empty()) words_.push_back(std::move(words[i]));
  }
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i].key(), static_cast<std::uint32_t>(i));
}

std::optional<std::size_t> FiniteGroup::index_of(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FiniteGroup::identity_index() const {
  if (elements_.empty()) return std::nullopt;
  return index_of(RatMat::identity(dim()).key());
}

Report verify_group_axioms(const FiniteGroup& g) {
  Report r;
  const std::size_t n = g.order();
  auto table = multiplication_table(g);

  std::size_t bad = serial_find_first(n * n, [&](std::size_t k) { return table[k] == kNotInGroup; });
  r.add(CheckResult::from("closure", bad == n * n,
                          bad < n * n ? "product of elements " + std::to_string(bad / n) + " and " +
                                            std::to_string(bad % n) + " leaves the set"
                                      : ""));

  auto id = g.identity_index();
  r.add(CheckResult::from("identity", id.has_value() || n == 0, "identity matrix missing"));

  std::size_t no_inv = n;
  if (id) {
    no_inv = serial_find_first(n, [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j)
        if (table[i * n + j] == *id) return false;
      return true;
    });
  }
  r.add(CheckResult::from("inverses", id && no_inv == n,
                          id ? "element " + std::to_string(no_inv) + " (" +
                                   (no_inv < n ? g[no_inv].key() : std::string{}) + ") has no inverse"
                             : "no identity"));
  return r;
}

}  // namespace sandwich
