#include "aag/pc_presentation.hpp"

#include <algorithm>
#include <sstream>

namespace aag {

PcPresentation build_presentation(const PlatformSpec& spec) {
  PcPresentation pc;
  pc.unit_count = spec.unit_count();
  pc.dimension = spec.degree();
  if (spec.torsion_order >= 2) pc.torsion[0] = spec.torsion_order;

  const Index n = pc.dimension;
  for (int i = 0; i < pc.unit_count; ++i) {
    const FieldElement& u = spec.units[static_cast<std::size_t>(i)];
    const FieldElement u_inv = fe_inv(u);
    MatQ a(n, n), b(n, n);
    for (Index j = 0; j < n; ++j) {
      const FieldElement& o = spec.basis[static_cast<std::size_t>(j)];
      a.row(j) = coords_in_basis(o * u, spec.basis).transpose();
      b.row(j) = coords_in_basis(o * u_inv, spec.basis).transpose();
    }
    if (!is_integral(a) || !is_integral(b))
      throw std::domain_error("presentation relations are non-integral; fixture not closed");
    if (!((a * b).array() == MatQ::Identity(n, n).array()).all())
      throw std::domain_error("conjugation exponent matrices of g_" + std::to_string(i + 1) +
                              " and its inverse are not mutually inverse");
    pc.conj_exponents.push_back(std::move(a));
    pc.inv_conj_exponents.push_back(std::move(b));
  }
  return pc;
}

DeducedGroup action_matrices(const PcPresentation& pc) {
  DeducedGroup dg;
  dg.dimension = pc.dimension;
  dg.source = std::make_shared<PcPresentation>(pc);
  for (const MatQ& a : pc.conj_exponents) dg.action_matrices.push_back(a);
  for (const MatQ& b : pc.inv_conj_exponents) dg.action_inverses.push_back(b);

  for (std::size_t i = 0; i < dg.action_matrices.size(); ++i) {
    for (std::size_t j = i + 1; j < dg.action_matrices.size(); ++j) {
      const MatQ left = dg.action_matrices[i] * dg.action_matrices[j];
      const MatQ right = dg.action_matrices[j] * dg.action_matrices[i];
      if (!((left.array() == right.array()).all()))
        throw std::domain_error("action matrices do not commute");
    }
  }
  return dg;
}

DeducedElement deduced_identity(const DeducedGroup& dg) {
  return DeducedElement{MatQ::Identity(dg.dimension, dg.dimension),
                        RowVecQ::Zero(dg.dimension)};
}

DeducedElement deduced_mul(const DeducedElement& x, const DeducedElement& y) {
  if (x.unit_part.cols() != y.unit_part.rows() ||
      x.vector_part.size() != y.vector_part.size())
    throw std::invalid_argument("deduced_mul: dimension mismatch");
  return DeducedElement{x.unit_part * y.unit_part,
                        x.vector_part * y.unit_part + y.vector_part};
}

DeducedElement deduced_inv(const DeducedElement& x) {
  const MatQ inv = inverse(x.unit_part);
  return DeducedElement{inv, -(x.vector_part * inv)};
}

DeducedElement deduced_commutator(const DeducedElement& a, const DeducedElement& b) {
  return deduced_mul(deduced_mul(deduced_inv(a), deduced_inv(b)), deduced_mul(a, b));
}

DeducedElement tau(const GroupWord& word, const DeducedGroup& dg) {
  const int m = static_cast<int>(dg.action_matrices.size());
  const int total = m + static_cast<int>(dg.dimension);
  DeducedElement acc = deduced_identity(dg);
  for (const auto& letter : word.letters) {
    if (letter.index < 0 || letter.index >= total)
      throw std::out_of_range("tau: generator index out of range");
    DeducedElement gen = deduced_identity(dg);
    if (letter.index < m) {
      gen.unit_part = letter.exponent >= 0
                          ? dg.action_matrices[static_cast<std::size_t>(letter.index)]
                          : dg.action_inverses[static_cast<std::size_t>(letter.index)];
    } else {
      gen.vector_part[letter.index - m] = letter.exponent >= 0 ? 1 : -1;
    }
    acc = deduced_mul(acc, gen);
  }
  return acc;
}

DeducedElement to_deduced(const GroupElement& g, const PlatformSpec& spec,
                          const DeducedGroup& dg) {
  const Index n = dg.dimension;
  MatQ unit(n, n);
  for (Index j = 0; j < n; ++j) {
    unit.row(j) =
        coords_in_basis(spec.basis[static_cast<std::size_t>(j)] * g.unit, spec.basis).transpose();
  }
  return DeducedElement{std::move(unit),
                        coords_in_basis(g.translation, spec.basis).transpose()};
}

GroupWord pair_to_word(const DeducedElement& x, const DeducedGroup& dg, int bound) {
  if (bound < 0) throw std::invalid_argument("pair_to_word: bound must be >= 0");
  if (!is_integral(MatQ(x.vector_part)))
    throw WordNotFoundError();
  const int m = static_cast<int>(dg.action_matrices.size());
  const Index n = dg.dimension;
  const auto& torsion = dg.source->torsion;

  // Exponent ranges: torsion generators stay in [0, order), free generators
  // sweep [-bound, bound]. Shells of increasing max-norm make the search
  // breadth-first, so the first hit is a shortest normal form.
  std::vector<int> lo(static_cast<std::size_t>(m)), hi(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto it = torsion.find(i);
    if (it != torsion.end()) {
      lo[static_cast<std::size_t>(i)] = 0;
      hi[static_cast<std::size_t>(i)] = it->second - 1;
    } else {
      lo[static_cast<std::size_t>(i)] = -bound;
      hi[static_cast<std::size_t>(i)] = bound;
    }
  }

  std::vector<std::vector<int>> candidates;
  std::vector<int> exps = lo;
  while (true) {
    candidates.push_back(exps);
    int pos = 0;
    while (pos < m && exps[static_cast<std::size_t>(pos)] ==
                          hi[static_cast<std::size_t>(pos)]) {
      exps[static_cast<std::size_t>(pos)] = lo[static_cast<std::size_t>(pos)];
      ++pos;
    }
    if (pos == m) break;
    ++exps[static_cast<std::size_t>(pos)];
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     int na = 0, nb = 0;
                     for (int v : a) na = std::max(na, std::abs(v));
                     for (int v : b) nb = std::max(nb, std::abs(v));
                     return na < nb;
                   });

  auto matrix_power = [&](int i, int e) {
    const MatQ& base = e >= 0 ? dg.action_matrices[static_cast<std::size_t>(i)]
                              : dg.action_inverses[static_cast<std::size_t>(i)];
    MatQ acc = MatQ::Identity(n, n);
    for (int step = 0; step < std::abs(e); ++step) acc = acc * base;
    return acc;
  };

  for (const std::vector<int>& a : candidates) {
    MatQ prod = MatQ::Identity(n, n);
    for (int i = 0; i < m; ++i) {
      if (a[static_cast<std::size_t>(i)] != 0)
        prod = prod * matrix_power(i, a[static_cast<std::size_t>(i)]);
    }
    if (!((prod.array() == x.unit_part.array()).all())) continue;

    GroupWord word;
    for (int i = 0; i < m; ++i) {
      const int e = a[static_cast<std::size_t>(i)];
      for (int step = 0; step < std::abs(e); ++step)
        word.letters.push_back({i, e > 0 ? 1 : -1});
    }
    for (Index j = 0; j < n; ++j) {
      const Rational& v = x.vector_part[j];
      const Integer count = numerator(v);
      const int e = static_cast<int>(count);
      for (int step = 0; step < std::abs(e); ++step)
        word.letters.push_back({m + static_cast<int>(j), e > 0 ? 1 : -1});
    }
    return word;
  }
  throw WordNotFoundError();
}

std::string presentation_dump(const PcPresentation& pc) {
  std::ostringstream out;
  const int m = pc.unit_count;
  const Index n = pc.dimension;
  out << "generators: g1..g" << pc.generator_count() << "  (g1..g" << m
      << " units, g" << m + 1 << "..g" << pc.generator_count() << " translations)\n";
  for (const auto& [index, order] : pc.torsion)
    out << "g" << index + 1 << "^" << order << " = e\n";
  out << "[gi, gj] = e for 1 <= i < j <= " << m << "\n";
  out << "[gi, gj] = e for " << m + 1 << " <= i < j <= " << pc.generator_count() << "\n";

  auto write_row = [&](const MatQ& mat, Index j) {
    bool empty = true;
    for (Index k = 0; k < n; ++k) {
      const Rational& e = mat(j, k);
      if (e == 0) continue;
      empty = false;
      out << " g" << m + 1 + k;
      if (e != 1) out << "^" << e;
    }
    if (empty) out << " e";
  };

  for (int i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      out << "g" << m + 1 + j << "^g" << i + 1 << " =";
      write_row(pc.conj_exponents[static_cast<std::size_t>(i)], j);
      out << "   ";
      out << "g" << m + 1 + j << "^g" << i + 1 << "^-1 =";
      write_row(pc.inv_conj_exponents[static_cast<std::size_t>(i)], j);
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace aag
