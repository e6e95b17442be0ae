#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sandwich/linalg.hpp"

namespace sandwich {

enum class RootType { A, B, C, D, E6, E7, E8, F4, G2 };

std::string_view to_string(RootType t);

/// A classical or exceptional root system in Bourbaki coordinates.
struct RootSystem {
  RootType type = RootType::A;
  int rank = 0;
  RootSet roots;
  std::vector<RatVec> simple_roots;

  [[nodiscard]] std::size_t dim() const noexcept { return roots.dim(); }
  /// "C3", "E8", ...
  [[nodiscard]] std::string label() const;

  friend bool operator==(const RootSystem&, const RootSystem&) = default;
};

/// Accepts "A".."D" with any admissible rank, and "E", "E6", "F", "F4",
/// "G", "G2" with the matching fixed rank. Throws std::invalid_argument.
RootSystem build_root_system(std::string_view type_label, int rank);

/// Simple roots of a root set with respect to a positivity test: the
/// positive roots that are not a sum of two positive roots.
std::vector<RatVec> simple_roots_of(const RootSet& roots, const std::vector<RatVec>& positive);

/// A membership set together with a spanning frame drawn from it. Group
/// elements built over a domain act on frame coordinates and cache their
/// permutation of the membership set.
class RootDomain {
 public:
  /// Throws std::invalid_argument unless `basis` is independent, contained
  /// in `roots`, and spans every vector of `roots`.
  RootDomain(RootSet roots, std::vector<RatVec> basis);

  [[nodiscard]] const RootSet& roots() const noexcept { return roots_; }
  [[nodiscard]] const Frame& frame() const noexcept { return frame_; }
  [[nodiscard]] std::size_t dim() const noexcept { return frame_.dim(); }
  /// Frame coordinates of roots()[i].
  [[nodiscard]] const RatVec& coords(std::size_t i) const { return coords_[i]; }
  /// Index of the root whose frame coordinates are `c`.
  [[nodiscard]] std::optional<std::size_t> index_of_coords(const RatVec& c) const;

 private:
  RootSet roots_;
  Frame frame_;
  std::vector<RatVec> coords_;
  std::unordered_map<RatVec, std::size_t, RatVecHash> by_coords_;
};

using DomainPtr = std::shared_ptr<const RootDomain>;

/// Root string beta + j*alpha, -q <= j <= p, inside membership ∪ {0}.
struct Chain {
  RatVec base;
  RatVec direction;
  int q = 0;
  int p = 0;
  std::vector<RatVec> elements;
};

/// Maximal contiguous string through beta in direction alpha. The zero
/// vector is always admitted. alpha = 0 yields the degenerate chain (0, 0).
/// Throws std::invalid_argument if beta or alpha is outside membership ∪ {0}.
Chain root_chain(const RootSet& membership, const RatVec& beta, const RatVec& alpha);

/// q - p of the extremal chain.
int killing_integer(const RootSet& membership, const RatVec& beta, const RatVec& alpha);

/// Linear functional given by its values on frame basis vectors.
struct LinFunc {
  RatVec covector;

  /// Evaluates on frame coordinates.
  [[nodiscard]] Rat operator()(const RatVec& coords) const { return covector.dot(coords); }
};

/// The linear extension k_alpha of beta -> <beta, alpha> from the frame
/// basis. alpha = 0 gives the zero functional.
LinFunc extend_functional(const RootDomain& domain, const RatVec& alpha);

}  // namespace sandwich
