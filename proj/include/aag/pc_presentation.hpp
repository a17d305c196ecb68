#pragma once

#include <map>
#include <memory>

#include "aag/platform.hpp"

namespace aag {

/// Polycyclic presentation of U_F x| O_F on generators g_1..g_{m+n}:
/// g_1..g_m are the unit generators (g_1 torsion of order k), g_{m+1}..
/// g_{m+n} the translation generators. Unit generators commute pairwise,
/// translation generators commute pairwise, and conjugation acts by
///   g_{m+j}^(g_i)    = prod_k g_{m+k}^(a[i][j][k])
///   g_{m+j}^(g_i^-1) = prod_k g_{m+k}^(b[i][j][k]).
struct PcPresentation {
  int unit_count = 0;       // m
  Index dimension = 0;      // n
  /// Generator index (0-based) -> relative order, for the finite indices.
  std::map<int, int> torsion;
  /// conj_exponents[i].row(j) = a_ij*, the exponents above; integer entries.
  std::vector<MatQ> conj_exponents;
  /// inv_conj_exponents[i].row(j) = b_ij*.
  std::vector<MatQ> inv_conj_exponents;

  int generator_count() const { return unit_count + static_cast<int>(dimension); }
};

/// The deduced semidirect product <C_1..C_m> x| Z^n read off a presentation.
struct DeducedGroup {
  std::vector<MatQ> action_matrices;    // C_i, n x n, integer entries
  std::vector<MatQ> action_inverses;    // C_i^-1, also integral
  Index dimension = 0;
  std::shared_ptr<const PcPresentation> source;
};

/// Pair (C, s) with C in <C_1..C_m> and s a row vector acted on from the
/// right; multiplication is (C,s)(D,t) = (CD, sD + t).
struct DeducedElement {
  MatQ unit_part;
  RowVecQ vector_part;

  bool operator==(const DeducedElement& other) const {
    return unit_part.rows() == other.unit_part.rows() &&
           (unit_part.array() == other.unit_part.array()).all() &&
           (vector_part.array() == other.vector_part.array()).all();
  }
};

/// Reads the conjugation relations off the platform: a_ij* are the basis
/// coordinates of O_j U_i, b_ij* those of O_j U_i^-1. Throws when a
/// coordinate is non-integral (fixture not closed) or when the a- and
/// b-matrices of some generator fail to be mutually inverse.
PcPresentation build_presentation(const PlatformSpec& spec);

/// Assembles C_i from the a_ij* rows and verifies the deduced-group
/// invariants: integral inverses and pairwise commutativity.
DeducedGroup action_matrices(const PcPresentation& pc);

DeducedElement deduced_identity(const DeducedGroup& dg);
DeducedElement deduced_mul(const DeducedElement& x, const DeducedElement& y);
DeducedElement deduced_inv(const DeducedElement& x);
DeducedElement deduced_commutator(const DeducedElement& a, const DeducedElement& b);

/// The isomorphism tau on words: generator i <= m maps to (C_i, 0),
/// generator m+j to (E, e_j); the word is evaluated by deduced_mul.
DeducedElement tau(const GroupWord& word, const DeducedGroup& dg);

/// Transports a matrix-pair element into the deduced model: the unit part
/// becomes the matrix of right multiplication on the basis O (row j = the
/// coordinates of O_j * C), the translation part its coordinate row.
DeducedElement to_deduced(const GroupElement& g, const PlatformSpec& spec,
                          const DeducedGroup& dg);

struct WordNotFoundError : std::runtime_error {
  WordNotFoundError()
      : std::runtime_error(
            "pair_to_word: unit part not reachable within the exponent bound") {}
};

/// Inverts tau on a pair: the Z^n part is read off directly, the unit part
/// found by bounded search over exponent vectors with max-norm <= bound
/// (torsion exponent kept in [0, k)). Returns the normal-form word
/// g_1^(a_1)..g_m^(a_m) g_{m+1}^(v_1)..g_{m+n}^(v_n).
GroupWord pair_to_word(const DeducedElement& x, const DeducedGroup& dg, int bound);

/// Human-readable relation listing for CLI inspection.
std::string presentation_dump(const PcPresentation& pc);

}  // namespace aag
