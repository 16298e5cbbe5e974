#pragma once

#include "liptrop/lip.hpp"
#include "liptrop/report.hpp"
#include "liptrop/sampler.hpp"

namespace liptrop {

/// The composition operator Φ_T(f) = f ∘ T⁻¹ induced by a group isomorphism
/// T between the carriers. `checked` enforces that T is isometric (the
/// Banach–Stone shape); `unchecked` admits candidates so the lemma suite can
/// vet them and expose the violation.
class CompositionIso {
 public:
  static CompositionIso checked(Context source, Context target, GroupIso t);
  static CompositionIso unchecked(Context source, Context target, GroupIso t);

  const Context& source() const { return source_; }
  const Context& target() const { return target_; }
  const GroupIso& carrier_map() const { return t_; }

  LipFn apply(const LipFn& f) const;

 private:
  CompositionIso(Context source, Context target, GroupIso t);

  Context source_;
  Context target_;
  GroupIso t_;
  std::vector<int> t_inverse_;
};

LipFn phi_apply(const CompositionIso& phi, const LipFn& f);

/// All isometric monoid isomorphisms Lip¹₊(X) -> Lip¹₊(Y): by the
/// representation theorem these are exactly the Φ_T for isometric group
/// isomorphisms T, so the group enumeration filtered by the isometry check
/// exhausts them.
std::vector<CompositionIso> enumerate_isometric_monoid_isos(const Context& x, const Context& y,
                                                            int order_cap = default_order_cap);

/// Is_m(Lip¹₊(X)): the isometric monoid automorphism group of a context.
std::vector<CompositionIso> is_m_group(const Context& x, int order_cap = default_order_cap);

struct IsoDecision {
  enum class Reason {
    witness_found,
    order_mismatch,
    element_order_mismatch,
    abelian_mismatch,
    exhausted_search,
  };

  bool isomorphic = false;
  std::optional<GroupIso> witness;
  std::optional<CompositionIso> phi;  // induced operator between the discrete contexts
  Reason reason = Reason::exhausted_search;
  std::string certificate;  // discriminating invariant for negative verdicts
};

const char* iso_reason_name(IsoDecision::Reason reason);

/// Corollary-style decision for the discrete-metric monoids (G*, ⊕):
/// isomorphic as monoids iff the groups are isomorphic.
IsoDecision decide_monoid_iso(const GroupPtr& g, const GroupPtr& h,
                              int order_cap = default_order_cap);

/// The non-isometric monoid isomorphism f ↦ f + inf f on Lip¹₊.
LipFn noniso_morphism_apply(const LipFn& f);

/// Checks the non-isometric example: monoid morphism, bijectivity onto
/// Lip¹₊ (preimage h - (min h)/2), order preservation, and the concrete
/// isometry violation rho(Φ(1),Φ(0)) = 2/3 vs rho(1,0) = 1/2.
Report verify_noniso_example(const Context& ctx, Sampler& sampler, int samples);

/// The full battery of necessary conditions for a candidate composition
/// operator: carrier isometry, constants, inf preservation, translation of
/// deltas, +r translation, order equivalence, finite-min commutation,
/// rho/d_inf/theta_inf isometry, cone preservation, and the monoid morphism
/// law. Any violation is reported with its witness.
Report verify_lemma_suite(const CompositionIso& phi, Sampler& sampler, int samples);

}  // namespace liptrop
