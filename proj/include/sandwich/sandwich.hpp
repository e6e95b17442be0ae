#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "sandwich/group.hpp"
#include "sandwich/kernels.hpp"
#include "sandwich/report.hpp"
#include "sandwich/roots.hpp"

namespace sandwich {

/// Partition of an ambient root system by the sign of <alpha, h_star>.
struct Alignment {
  RootSystem ambient;
  RatVec h_star;
  RootSet r_zero;   // <alpha, h_star> = 0
  RootSet r_minus;  // <alpha, h_star> < 0
  /// Orthogonal projector onto span(r_zero), ambient coordinates.
  RatMat restriction;
  /// Simple roots of r_zero for the ambient positivity.
  std::vector<RatVec> r_zero_simple;

  /// Frame for the ambient space: all ambient roots over the ambient simple roots.
  [[nodiscard]] DomainPtr ambient_domain() const;
  /// r_zero over its simple roots.
  [[nodiscard]] DomainPtr r_zero_domain() const;

  friend bool operator==(const Alignment&, const Alignment&) = default;
};

class AlignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AlignOptions {
  /// Run the full axiom check on r_zero. The scan utility turns this off.
  bool verify_r_zero = true;
};

/// Throws std::invalid_argument for a malformed h_star and AlignmentError
/// when r_zero does not span a subspace of dimension rank - 1 (or fails the
/// axioms).
Alignment align(const RootSystem& ambient, const RatVec& h_star, const AlignOptions& opts = {});

struct CenterReport {
  std::vector<RatVec> center_roots;
  std::size_t dimension = 0;
  bool is_class_c = false;

  friend bool operator==(const CenterReport&, const CenterReport&) = default;
};

/// Roots of r_minus whose root vectors commute with the whole nilradical:
/// alpha with alpha + beta never a root for beta in r_minus.
CenterReport nilradical_center(const Alignment& a);

/// The restricted system of the nilradical. zeta is the zero vector;
/// phi = pi_hat ⊔ (-pi_hat); fibers map each restricted vector (including
/// zeta) to the roots of r_minus that restrict to it.
struct HatSystem {
  int M = 0;
  RatVec zeta;
  RootSet phi;
  std::vector<RatVec> pi_hat;
  std::map<RatVec, std::vector<RatVec>> fibers;
  std::vector<RatVec> basis;

  /// phi over the pi_hat basis. Throws if pi_hat does not span phi.
  [[nodiscard]] DomainPtr domain() const;

  friend bool operator==(const HatSystem&, const HatSystem&) = default;
};

class ClassCError : public std::runtime_error {
 public:
  explicit ClassCError(CenterReport r);
  CenterReport report;
};

/// Projects r_minus onto span(r_zero). Throws ClassCError when the center is
/// not one-dimensional and AlignmentError when the zero image is missing or
/// the positive restricted roots are dependent.
HatSystem restrict_hat(const Alignment& a);

/// Checks, in order: "span", "symmetry", "chains", "additivity",
/// "normalization" (axioms 1 through 5). Chains are taken in phi ∪ {0}.
using AxiomReport = Report;
AxiomReport verify_axioms(const RootSet& phi, const std::vector<RatVec>& basis);
AxiomReport verify_axioms(const HatSystem& h);

/// Every sum of two elements of phi that lands in phi ∪ {zeta} is zeta.
bool sum_collapse_check(const HatSystem& h);
CheckResult check_sum_collapse(const HatSystem& h);

/// Closure of the reflections at pi_hat acting on pi_hat coordinates.
FiniteGroup hat_weyl(const HatSystem& h, std::size_t cap = kDefaultClosureCap);

/// Involution, commutation, product = -identity, abelianness, images of
/// simple roots under one and two reflections, negative-root reflections,
/// and generation by the simple reflections.
Report verify_relations(const HatSystem& h, const FiniteGroup& w);

/// Reflection laws over every root of the domain: involution, chain
/// formula sigma_a(b + j a) = b + (p - (q + j)) a, bijectivity on the
/// roots, and sigma_a = sigma_{-a}^{-1}.
Report verify_reflection_laws(const DomainPtr& domain);

}  // namespace sandwich
