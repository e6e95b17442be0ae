#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sandwich/group.hpp"
#include "sandwich/kernels.hpp"
#include "sandwich/sandwich.hpp"

namespace sandwich {

/// Permutation of {0, ..., M-1}. Printed 1-based.
class IndexPerm {
 public:
  IndexPerm() = default;
  /// Throws std::invalid_argument unless `images` is a bijection of {0..M-1}.
  explicit IndexPerm(std::vector<std::uint32_t> images);
  static IndexPerm identity(std::size_t m);

  [[nodiscard]] std::size_t size() const noexcept { return images_.size(); }
  [[nodiscard]] std::uint32_t operator()(std::size_t i) const { return images_[i]; }
  [[nodiscard]] const std::vector<std::uint32_t>& images() const noexcept { return images_; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] IndexPerm inverse() const;
  /// (a ∘ b)(i) = a(b(i)).
  friend IndexPerm compose(const IndexPerm& a, const IndexPerm& b);
  friend bool operator==(const IndexPerm&, const IndexPerm&) = default;
  [[nodiscard]] std::string str() const;

 private:
  std::vector<std::uint32_t> images_;
};

/// Y = L+ ⊕ L- with basis (x_1..x_M, y_1..y_M) and Omega(x_i, y_k) = δ_ik.
/// The center vector X_zeta stays outside Y; only its label and the
/// normalization nu(X_zeta) = 1 are kept.
struct PhaseSpace {
  int M = 0;
  std::vector<std::string> basis_labels;
  /// Hat root represented by each basis vector: x_i <-> pi_hat[i], y_i <-> -pi_hat[i].
  std::vector<RatVec> label_roots;
  RatMat omega;
  std::string center_label = "X_zeta";
  Rat center_normalization = 1;

  [[nodiscard]] std::size_t dim() const noexcept { return 2 * static_cast<std::size_t>(M); }
};

/// Linear map of Y; valid iff matrix^T · omega · matrix = omega.
struct SympMap {
  RatMat matrix;
};

bool is_symplectic(const PhaseSpace& ps, const RatMat& m);

PhaseSpace build_phase_space(const HatSystem& h);

/// S_i: -1 on the plane span{x_i, y_i}, +1 elsewhere. `i` is 1-based.
/// Throws std::out_of_range for i outside 1..M.
SympMap s_generator(const PhaseSpace& ps, int i);

/// T_tau: x_i -> x_tau(i), y_i -> y_tau(i). Throws std::invalid_argument
/// when tau has the wrong size.
SympMap lift_permutation(const PhaseSpace& ps, const IndexPerm& tau);

/// Closure of {S_1, ..., S_M}.
FiniteGroup script_w(const PhaseSpace& ps, std::size_t cap = kDefaultClosureCap);

/// Extends sigma_i -> S_i along the recorded words of w_hat and checks
/// "generators", "well_defined", "homomorphism" and "bijective". Throws
/// std::invalid_argument when the generator counts differ or w_hat has no
/// words.
Report mu_isomorphism(const FiniteGroup& w_hat, const FiniteGroup& w_script);

/// Images of mu as indices into w_script (index i of w_hat -> image index).
std::vector<std::uint32_t> mu_images(const FiniteGroup& w_hat, const FiniteGroup& w_script);

}  // namespace sandwich
