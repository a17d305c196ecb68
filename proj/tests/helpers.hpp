#pragma once

#include <string>
#include <vector>

#include "aag/linalg.hpp"
#include "aag/platform.hpp"

namespace aag::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(AAG_FIXTURE_DIR) + "/" + name + ".json";
}

inline VecQ qvec(std::vector<long long> entries) {
  VecQ v(static_cast<Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v[static_cast<Index>(i)] = Rational(entries[i]);
  return v;
}

inline MatQ qmat(std::vector<std::vector<long long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.front().size());
  MatQ m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j)
      m(i, j) = Rational(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return m;
}

inline bool mat_eq(const MatQ& a, const MatQ& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

inline bool vec_eq(const VecQ& a, const VecQ& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

/// Faithful affine representation of the group of pairs (C, S): the block
/// matrix [[to_matrix(C)^T, 0], [coords(S)^T, 1]]. An independent oracle for
/// the group law: products, inverses and conjugates of pairs must commute
/// with this embedding.
inline MatQ affine_image(const GroupElement& g) {
  const Index n = g.unit.coeffs().size();
  MatQ block = MatQ::Zero(n + 1, n + 1);
  block.topLeftCorner(n, n) = to_matrix(g.unit).transpose();
  block.bottomLeftCorner(1, n) = g.translation.coeffs().transpose();
  block(n, n) = Rational(1);
  return block;
}

/// Word evaluation through the affine oracle instead of the group law.
inline MatQ affine_eval(const GroupWord& word, const std::vector<GroupElement>& gens) {
  const Index n = gens.front().unit.coeffs().size();
  MatQ acc = MatQ::Identity(n + 1, n + 1);
  for (const GroupWord::Letter& letter : word.letters) {
    const MatQ image = affine_image(gens[static_cast<std::size_t>(letter.index)]);
    acc = acc * (letter.exponent == 1 ? image : inverse(image));
  }
  return acc;
}

/// Uniform random pair with word-length walks: keeps coordinates small
/// enough for bulk property tests while exercising every generator.
inline GroupElement random_element(Rng& rng, const PlatformSpec& spec, std::size_t length) {
  return eval_word(random_word(rng, spec.generators().size(), length), spec.generators());
}

}  // namespace aag::testing
