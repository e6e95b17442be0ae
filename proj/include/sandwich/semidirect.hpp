#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sandwich/group.hpp"
#include "sandwich/sandwich.hpp"
#include "sandwich/symplectic.hpp"

namespace sandwich {

/// Size limits for exhaustive verification. Above them the checks fall back
/// to Cayley-graph edges (which still prove homomorphism properties) or a
/// seeded sample (associativity only).
struct VerifyLimits {
  std::size_t full_table = 1024;
  std::size_t exhaustive_associativity = 256;
  std::size_t matrix_realization = 20000;
};

/// Action of one element of W_R on the hat system.
struct InducedMap {
  GroupElement source;
  /// Columns: pi_hat coordinates of s(pi_hat[i]).
  RatMat matrix_on_hat;
  IndexPerm tau;
  /// +1 when s(pi_hat[i]) lies in pi_hat, -1 when in -pi_hat.
  std::vector<int> signs;
};

class InducedActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The map s on the hat system induced by sigma (an element of W_R acting on
/// ambient vectors). Every fiber representative of every restricted root is
/// pushed through sigma and projected; all representatives must agree.
/// Throws InducedActionError if sigma moves a root out of r_minus, fiber
/// images disagree, or the image of a hat root leaves phi.
InducedMap induced_action(const Alignment& a, const HatSystem& h, const GroupElement& sigma);

/// W_R: closure of the reflections at the simple roots of r_zero, acting on
/// ambient roots over the ambient simple-root frame.
FiniteGroup base_weyl(const Alignment& a, std::size_t cap = kDefaultClosureCap);

/// induced_action for every element of w_base, computed in parallel.
std::vector<InducedMap> induced_actions(const Alignment& a, const HatSystem& h, const FiniteGroup& w_base);

/// <g(beta), h_star> < 0 for every g in w_base and beta in r_minus.
CheckResult check_rminus_stability(const Alignment& a, const FiniteGroup& w_base);

/// Checks "identity", "generator_pairs", "cayley_edges" and, for groups up
/// to limits.full_table, "full_table".
Report tau_homomorphism_check(const Alignment& a, const HatSystem& h, const FiniteGroup& w_base,
                              const VerifyLimits& limits = {});

/// Conjugation by the lift T_tau, realized as a permutation of w_script.
struct Automorphism {
  SympMap lift;
  std::vector<std::uint32_t> images;  // index of T w T^{-1} for each w
};

/// Throws InducedActionError (with witness) if conjugation leaves w_script.
Automorphism phi_of(const PhaseSpace& ps, const FiniteGroup& w_script, const InducedMap& im);

/// phi tabulated over all of W_R (same indexing as w_base).
struct PhiTable {
  std::vector<IndexPerm> tau;
  std::vector<Automorphism> phi;
};

PhiTable build_phi_table(const PhaseSpace& ps, const FiniteGroup& w_script, const std::vector<InducedMap>& induced);

/// T_tau · S_i · T_tau^{-1} = S_{tau(i)} for every element of W_R and every i.
CheckResult check_lift_conjugation(const PhaseSpace& ps, const std::vector<InducedMap>& induced);

/// Multiplication of a finite group by index, with a full table for small
/// groups and right-multiplication-by-generator tables always.
class GroupTable {
 public:
  GroupTable(const FiniteGroup& g, std::size_t full_table_limit);

  [[nodiscard]] std::size_t order() const noexcept { return g_->order(); }
  [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  [[nodiscard]] std::uint32_t mul_gen(std::uint32_t a, std::size_t k) const { return by_gen_[a * ngen_ + k]; }
  [[nodiscard]] std::uint32_t inverse(std::uint32_t a) const { return inv_[a]; }
  [[nodiscard]] std::uint32_t identity() const noexcept { return id_; }
  [[nodiscard]] std::uint32_t generator(std::size_t k) const { return gen_idx_[k]; }
  [[nodiscard]] std::size_t generator_count() const noexcept { return ngen_; }
  [[nodiscard]] bool has_full_table() const noexcept { return !full_.empty(); }
  [[nodiscard]] const FiniteGroup& group() const noexcept { return *g_; }

 private:
  const FiniteGroup* g_;
  std::size_t ngen_ = 0;
  std::vector<std::uint32_t> full_, by_gen_, inv_, gen_idx_;
  std::uint32_t id_ = 0;
};

/// Checks "phi_automorphism" (each phi_sigma is a bijective homomorphism of
/// w_script) and "phi_homomorphism" (phi_{gh} = phi_g ∘ phi_h), the latter
/// over all pairs up to limits.full_table and over Cayley edges always.
Report phi_homomorphism_check(const FiniteGroup& w_script, const FiniteGroup& w_base, const PhiTable& phi,
                              const VerifyLimits& limits = {});

/// (w, sigma) with indices into w_script and w_base.
struct SdpElement {
  std::uint32_t w = 0;
  std::uint32_t sigma = 0;
  friend auto operator<=>(const SdpElement&, const SdpElement&) = default;
};

/// W_script ⋊_phi W_R with (w, s)·(w', s') = (w phi_s(w'), s s').
class SemidirectGroup {
 public:
  SemidirectGroup(const FiniteGroup& w_script, const FiniteGroup& w_base, PhiTable phi, std::size_t cap,
                  const VerifyLimits& limits = {});

  [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
  [[nodiscard]] const std::vector<SdpElement>& elements() const noexcept { return elements_; }
  [[nodiscard]] const std::vector<SdpElement>& generators() const noexcept { return generators_; }
  [[nodiscard]] bool contains(SdpElement x) const;
  [[nodiscard]] SdpElement multiply(SdpElement a, SdpElement b) const;
  [[nodiscard]] SdpElement identity() const noexcept { return {ws_.identity(), wb_.identity()}; }
  /// (phi_{s^{-1}}(w^{-1}), s^{-1}).
  [[nodiscard]] SdpElement inverse(SdpElement a) const;
  [[nodiscard]] SdpElement lambda(std::uint32_t w) const noexcept { return {w, wb_.identity()}; }
  [[nodiscard]] std::uint32_t pi(SdpElement x) const noexcept { return x.sigma; }
  [[nodiscard]] SdpElement gamma(std::uint32_t s) const noexcept { return {ws_.identity(), s}; }
  [[nodiscard]] std::string key(SdpElement x) const;

  [[nodiscard]] const GroupTable& script_table() const noexcept { return ws_; }
  [[nodiscard]] const GroupTable& base_table() const noexcept { return wb_; }
  [[nodiscard]] const PhiTable& phi() const noexcept { return phi_; }
  [[nodiscard]] std::size_t expected_order() const noexcept { return ws_.order() * wb_.order(); }

 private:
  GroupTable ws_;
  GroupTable wb_;
  PhiTable phi_;
  std::vector<SdpElement> generators_;
  std::vector<SdpElement> elements_;
  std::vector<bool> member_;
};

SdpElement sdp_multiply(const SemidirectGroup& g, SdpElement a, SdpElement b);

/// Generated from {(1, sigma_alpha)} ∪ {(S_i, 1)}. Throws
/// ClosureCapExceeded past `cap` elements.
SemidirectGroup build_semidirect(const FiniteGroup& w_script, const FiniteGroup& w_base, PhiTable phi,
                                 std::size_t cap = kDefaultClosureCap, const VerifyLimits& limits = {});

/// Checks "order", "identity", "inverses", "associativity" and
/// "conjugation_is_phi".
Report verify_semidirect_axioms(const SemidirectGroup& g, const VerifyLimits& limits = {});

struct ExactSeqReport {
  bool image_equals_kernel = false;
  bool image_normal = false;
  bool splitting_ok = false;
  bool order_product_ok = false;
  std::vector<std::string> witnesses;

  [[nodiscard]] bool ok() const noexcept {
    return image_equals_kernel && image_normal && splitting_ok && order_product_ok;
  }
};

ExactSeqReport exact_sequence_check(const SemidirectGroup& g);

/// Faithful matrix model (w, s) -> diag(w·T_tau(s), s) on Y ⊕ U. Checks the
/// closure of the generator images has order |W_script|·|W_R| and that the
/// model multiplies like the pair law along every Cayley edge.
CheckResult check_matrix_realization(const SemidirectGroup& g, std::size_t cap = kDefaultClosureCap);

}  // namespace sandwich
