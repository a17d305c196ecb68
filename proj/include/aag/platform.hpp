#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aag/number_field.hpp"
#include "aag/random.hpp"

namespace aag {

struct FixtureError : std::runtime_error {
  explicit FixtureError(const std::string& what) : std::runtime_error(what) {}
};

/// Element of U_F x| O_F as a pair (unit part, translation part). Elements
/// produced by lifting an attack solution into F* x| F carry lifted = true;
/// the flag is bookkeeping and takes no part in equality.
struct GroupElement {
  FieldElement unit;
  FieldElement translation;
  bool lifted = false;

  bool operator==(const GroupElement& other) const {
    return unit == other.unit && translation == other.translation;
  }
};

/// Word over an ambient generating tuple: letters (index, exponent) with
/// exponent +-1 and 0-based indices.
struct GroupWord {
  struct Letter {
    int index;
    int exponent;
    bool operator==(const Letter&) const = default;
  };
  std::vector<Letter> letters;

  bool operator==(const GroupWord&) const = default;
};

/// A concrete platform: the field, an integral basis O_1..O_n, a finitely
/// generated unit subgroup U_1..U_m with U_1 the torsion generator, and
/// table metadata. All invariants are verified by load_platform.
class PlatformSpec {
 public:
  std::string name;
  FieldHandle field;
  std::vector<FieldElement> basis;
  std::vector<FieldElement> units;
  int torsion_order = 1;
  std::optional<std::pair<int, int>> signature;
  std::optional<int> expected_hirsch_length;
  std::string notes;

  Index degree() const { return field->degree(); }
  int unit_count() const { return static_cast<int>(units.size()); }

  /// Infinite-cyclic factor count of the fixture-generated group:
  /// free unit generators plus the translation lattice rank.
  int hirsch_length() const {
    const int torsion_generators = torsion_order >= 2 ? 1 : 0;
    return unit_count() - torsion_generators + static_cast<int>(degree());
  }

  GroupElement identity() const;
  /// The m+n protocol generators: (U_1,0)..(U_m,0), (1,O_1)..(1,O_n).
  std::vector<GroupElement> generators() const;
};

GroupElement g_mul(const GroupElement& x, const GroupElement& y);
GroupElement g_inv(const GroupElement& x);
/// Conjugate g^x = x^-1 g x through the closed form (D, S(E-D) + TC) for
/// g = (D,T), x = (C,S).
GroupElement g_conj(const GroupElement& g, const GroupElement& x);
GroupElement commutator(const GroupElement& a, const GroupElement& b);

/// Uniform random word: independent letters (index < gen_count, sign +-1).
GroupWord random_word(Rng& rng, std::size_t gen_count, std::size_t length);

/// Left-to-right product of gens[letter.index]^letter.exponent.
GroupElement eval_word(const GroupWord& word, const std::vector<GroupElement>& gens);

GroupWord concat(const GroupWord& a, const GroupWord& b);

/// Exact coordinates of e in a Q-linearly independent basis; throws when e
/// lies outside the span (impossible for a true field basis).
VecQ coords_in_basis(const FieldElement& e, const std::vector<FieldElement>& basis);

/// True when the translation part has integral coordinates in the platform
/// basis, the checkable half of strictness (unit-subgroup membership is
/// tracked through words, never recovered from a bare pair).
bool has_integral_translation(const GroupElement& g, const PlatformSpec& spec);

/// Parses and fully validates a platform fixture document (JSON).
PlatformSpec load_platform(const std::string& text);
PlatformSpec load_platform_file(const std::string& path);
std::string platform_to_json(const PlatformSpec& spec);

/// Exhaustive scan of {sum a_i O_i : |a_i| <= height_bound} for elements of
/// norm +-1, deduplicated up to sign; the field's one is always included.
/// Fixture-generation oracle, not a unit-group algorithm.
std::vector<FieldElement> search_units(const FieldHandle& field,
                                       const std::vector<FieldElement>& basis,
                                       int height_bound);

}  // namespace aag
