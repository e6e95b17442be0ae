#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sandwich/rational.hpp"

namespace sandwich {

/// Dimension of the span of `vs`.
std::size_t rank_of(std::span<const RatVec> vs);

/// Greedy maximal independent subsequence of `vs`, in input order.
std::vector<RatVec> independent_subset(std::span<const RatVec> vs);

/// Exact orthogonal projector onto span(vs) in the ambient coordinates.
/// Returns the zero matrix of size `dim` when vs is empty.
RatMat orthogonal_projector(std::span<const RatVec> vs, std::size_t dim);

/// An ordered linearly independent list of ambient vectors, with exact
/// coordinate extraction for vectors in its span.
class Frame {
 public:
  Frame() = default;
  /// Throws std::invalid_argument if the basis is empty-with-unknown-dim,
  /// ragged, or linearly dependent.
  explicit Frame(std::vector<RatVec> basis);

  /// Number of basis vectors.
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  [[nodiscard]] const std::vector<RatVec>& basis() const noexcept { return basis_; }

  /// Coordinates of v in this basis, or nullopt when v is outside the span.
  [[nodiscard]] std::optional<RatVec> coordinates(const RatVec& v) const;
  /// Ambient vector with the given coordinates.
  [[nodiscard]] RatVec vector(const RatVec& coords) const;

 private:
  std::vector<RatVec> basis_;
  std::size_t ambient_dim_ = 0;
  RatMat left_inverse_;  // (B^T B)^{-1} B^T
};

/// A finite set of vectors with a stable sorted enumeration and O(1) lookup.
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(std::vector<RatVec> vs);

  [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
  [[nodiscard]] bool empty() const noexcept { return items_.empty(); }
  [[nodiscard]] bool contains(const RatVec& v) const { return index_.count(v) != 0; }
  [[nodiscard]] std::optional<std::size_t> index_of(const RatVec& v) const;
  [[nodiscard]] const RatVec& operator[](std::size_t i) const { return items_[i]; }
  [[nodiscard]] auto begin() const { return items_.begin(); }
  [[nodiscard]] auto end() const { return items_.end(); }
  [[nodiscard]] const std::vector<RatVec>& items() const noexcept { return items_; }
  /// Ambient dimension, 0 when empty.
  [[nodiscard]] std::size_t dim() const noexcept { return items_.empty() ? 0 : items_.front().size(); }

  friend bool operator==(const RootSet& a, const RootSet& b) { return a.items_ == b.items_; }

 private:
  std::vector<RatVec> items_;
  std::unordered_map<RatVec, std::size_t, RatVecHash> index_;
};

}  // namespace sandwich
