#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sandwich/report.hpp"
#include "sandwich/roots.hpp"

namespace sandwich {

using Perm = std::vector<std::uint32_t>;

/// Invertible matrix acting on frame coordinates, with a cached canonical
/// key and (when built over a domain that it preserves) its permutation of
/// the domain's root set.
class GroupElement {
 public:
  GroupElement() = default;
  /// Throws std::invalid_argument if the matrix is singular or does not
  /// match the domain dimension.
  explicit GroupElement(RatMat m, DomainPtr domain = nullptr);

  static GroupElement identity(std::size_t n, DomainPtr domain = nullptr);

  [[nodiscard]] const RatMat& matrix() const noexcept { return m_; }
  [[nodiscard]] const std::string& key() const noexcept { return key_; }
  [[nodiscard]] std::size_t dim() const noexcept { return m_.rows(); }
  [[nodiscard]] const DomainPtr& domain() const noexcept { return domain_; }
  /// action()[i] = index of the image of roots()[i]; absent when the
  /// matrix does not permute the domain's roots (or there is no domain).
  [[nodiscard]] const std::optional<Perm>& action() const noexcept { return action_; }
  [[nodiscard]] bool permutes_domain() const noexcept { return action_.has_value(); }

  /// Applies to an ambient vector through the domain frame. Throws if
  /// there is no domain or v lies outside the frame's span.
  [[nodiscard]] RatVec apply(const RatVec& v) const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.key_ == b.key_; }

 private:
  friend GroupElement element_multiply(const GroupElement& a, const GroupElement& b);
  struct Unchecked {};
  GroupElement(RatMat m, DomainPtr domain, Unchecked);
  void compute_action();

  RatMat m_;
  std::string key_;
  DomainPtr domain_;
  std::optional<Perm> action_;
};

/// Matrix product a·b; the cached action is composed when both share a
/// domain. Throws std::invalid_argument on dimension mismatch.
GroupElement element_multiply(const GroupElement& a, const GroupElement& b);

/// Matrix of v -> v - k_alpha(v) alpha over the domain frame.
/// alpha = 0 gives the identity. Throws if alpha is not in roots ∪ {0}.
GroupElement reflection(const DomainPtr& domain, const RatVec& alpha);

/// A finite set of group elements with generators, enumerated in canonical
/// key order. Groups produced by closure also record, for every element, a
/// shortest word in the generators (generator indices, applied left to
/// right: element = g[w0]·g[w1]·...).
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Wraps an element list without checking the group axioms.
  FiniteGroup(std::vector<GroupElement> elements, std::vector<GroupElement> generators,
              std::vector<std::vector<std::uint16_t>> words = {});

  [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
  [[nodiscard]] const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  [[nodiscard]] const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
  [[nodiscard]] const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  [[nodiscard]] bool has_words() const noexcept { return !words_.empty(); }
  [[nodiscard]] const std::vector<std::uint16_t>& word(std::size_t i) const { return words_.at(i); }
  [[nodiscard]] std::optional<std::size_t> index_of(const std::string& key) const;
  [[nodiscard]] std::optional<std::size_t> index_of(const GroupElement& g) const { return index_of(g.key()); }
  [[nodiscard]] bool contains(const GroupElement& g) const { return index_of(g).has_value(); }
  /// Index of the identity matrix, if present.
  [[nodiscard]] std::optional<std::size_t> identity_index() const;
  /// Matrix dimension of the elements (0 for an empty group).
  [[nodiscard]] std::size_t dim() const noexcept { return elements_.empty() ? 0 : elements_.front().dim(); }

 private:
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> generators_;
  std::vector<std::vector<std::uint16_t>> words_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// Exhaustive closure / identity / inverse check. Checks: "closure",
/// "identity", "inverses".
Report verify_group_axioms(const FiniteGroup& g);

}  // namespace sandwich
