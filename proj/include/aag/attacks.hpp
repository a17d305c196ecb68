#pragma once

#include <utility>

#include "aag/linalg.hpp"
#include "aag/pc_presentation.hpp"
#include "aag/protocol.hpp"

namespace aag {

/// The conjugacy equations contradict each other; on protocol-generated
/// input this means the transcript was corrupted or tampered with.
struct InconsistentSystemError : std::runtime_error {
  InconsistentSystemError()
      : std::runtime_error("conjugacy system is inconsistent (malformed transcript)") {}
};

/// Every candidate in the tried solution family had a non-invertible unit
/// part, so no group element could be produced.
struct NoInvertibleCandidateError : std::runtime_error {
  NoInvertibleCandidateError()
      : std::runtime_error("no solution with invertible unit part found") {}
};

/// The data of one side of an attack: pairs (b_i, b_i') with b_i' the
/// conjugate of b_i by the secret being recovered. Unit parts agree within
/// each pair (conjugation fixes the unit component).
struct ConjugacySystem {
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
};

/// Zips a public tuple with its published conjugates, checking lengths and
/// the per-pair unit agreement (disagreement raises InconsistentSystemError).
ConjugacySystem make_conjugacy_system(const std::vector<GroupElement>& tuple,
                                      const std::vector<GroupElement>& conjugates);

/// Flattens the equations S(1 - B_i) + T_i C = T_i' over the field into an
/// (N*n) x (2n) rational system in the power-basis coordinates of the
/// unknown (S, C), S-block first.
std::pair<MatQ, VecQ> build_fba_system(const ConjugacySystem& sys);

struct FbaSolution {
  GroupElement candidate;        // lives in F* x| F, lifted = true
  bool uniqueness = false;       // flattened rank was full (2n)
  bool residual_checked = false; // every equation re-verified through g_conj
};

/// Solves the flattened system. Unique solutions are returned as-is; affine
/// families yield the particular solution, shifted through the kernel basis
/// until the unit part C is nonzero. Every returned candidate is re-verified
/// against the original equations.
FbaSolution solve_fba(const ConjugacySystem& sys);

struct FbaAttackResult {
  GroupElement key;  // [A', B']
  FbaSolution alice;
  FbaSolution bob;
};

/// Field-based attack: recovers A' from (bob_public, alice_conjugates) and
/// B' from (alice_public, bob_conjugates), then forms their commutator.
FbaAttackResult fba_attack_full(const PublicView& view);
GroupElement fba_attack(const PublicView& view);

/// The eavesdropper data transported into the deduced model.
struct DeducedView {
  std::vector<DeducedElement> alice_public;
  std::vector<DeducedElement> bob_public;
  std::vector<DeducedElement> alice_conjugates;
  std::vector<DeducedElement> bob_conjugates;
};

DeducedView to_deduced_view(const PublicView& view, const PlatformSpec& spec,
                            const DeducedGroup& dg);

struct DeducedConjugacySystem {
  std::vector<std::pair<DeducedElement, DeducedElement>> pairs;
};

DeducedConjugacySystem make_deduced_system(const std::vector<DeducedElement>& tuple,
                                           const std::vector<DeducedElement>& conjugates);

/// Q-basis H_1..H_l of the matrix algebra Q[C_1..C_m]: worklist closure
/// starting from the identity, adjoining products with the C_i while they
/// stay linearly independent. Every H_a C_i lies in the returned span.
std::vector<MatQ> algebra_basis(const DeducedGroup& dg);

/// The rational system of the deduced-model attack: unknowns are the n
/// coordinates of the translation row v and the l coefficients of the unit
/// part C = sum c_a H_a, stacked (v, c).
struct Fba2System {
  std::vector<MatQ> unit_parts;                  // B_i
  std::vector<RowVecQ> translations;             // t_i
  std::vector<RowVecQ> conjugated_translations;  // t_i'
  std::vector<MatQ> field_basis;                 // H_1..H_l
  MatQ matrix;                                   // (N*n) x (n+l)
  VecQ rhs;

  Index algebra_dimension() const { return static_cast<Index>(field_basis.size()); }
};

Fba2System build_fba2_system(const DeducedConjugacySystem& sys, const DeducedGroup& dg);

struct Fba2Solution {
  DeducedElement candidate;
  bool uniqueness = false;
  bool residual_checked = false;
};

/// Deduced-model analogue of solve_fba: solves over Q, reconstructs
/// C' = sum c_a H_a, retries kernel shifts until C' is invertible, and
/// re-verifies every pair by definitional conjugation.
Fba2Solution solve_fba2(const DeducedConjugacySystem& sys, const DeducedGroup& dg);

struct Fba2AttackResult {
  DeducedElement key;
  Fba2Solution alice;
  Fba2Solution bob;
};

Fba2AttackResult fba2_attack_full(const DeducedView& view, const DeducedGroup& dg);
DeducedElement fba2_attack(const DeducedView& view, const DeducedGroup& dg);

/// Operational success criterion: the candidate equals the transcript's true
/// shared key, exactly (transported into the deduced model when comparing a
/// deduced candidate).
bool attack_success(const GroupElement& candidate, const Transcript& t);
bool attack_success(const DeducedElement& candidate, const Transcript& t,
                    const PlatformSpec& spec, const DeducedGroup& dg);

}  // namespace aag
