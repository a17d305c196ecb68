#include "aag/attacks.hpp"

#include <stdexcept>

namespace aag {

ConjugacySystem make_conjugacy_system(const std::vector<GroupElement>& tuple,
                                      const std::vector<GroupElement>& conjugates) {
  if (tuple.empty()) throw std::invalid_argument("conjugacy system must be nonempty");
  if (tuple.size() != conjugates.size())
    throw std::invalid_argument("tuple and conjugate tuple lengths differ");
  ConjugacySystem sys;
  sys.pairs.reserve(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (!(tuple[i].unit == conjugates[i].unit)) throw InconsistentSystemError();
    sys.pairs.emplace_back(tuple[i], conjugates[i]);
  }
  return sys;
}

std::pair<MatQ, VecQ> build_fba_system(const ConjugacySystem& sys) {
  if (sys.pairs.empty()) throw std::invalid_argument("conjugacy system must be nonempty");
  const FieldHandle field = sys.pairs.front().first.unit.field();
  const Index n = field->degree();
  const Index rows = static_cast<Index>(sys.pairs.size()) * n;
  const FieldElement one = field->one();

  MatQ mat(rows, 2 * n);
  VecQ rhs(rows);
  for (std::size_t i = 0; i < sys.pairs.size(); ++i) {
    const auto& [g, conj] = sys.pairs[i];
    const Index r = static_cast<Index>(i) * n;
    mat.block(r, 0, n, n) = to_matrix(one - g.unit);
    mat.block(r, n, n, n) = to_matrix(g.translation);
    rhs.segment(r, n) = conj.translation.coeffs();
  }
  return {std::move(mat), std::move(rhs)};
}

FbaSolution solve_fba(const ConjugacySystem& sys) {
  const auto [mat, rhs] = build_fba_system(sys);
  const SolveResult res = solve(mat, rhs);
  if (res.inconsistent()) throw InconsistentSystemError();

  const FieldHandle field = sys.pairs.front().first.unit.field();
  const Index n = field->degree();

  std::vector<VecQ> candidates;
  candidates.push_back(res.particular);
  for (const VecQ& k : res.kernel_basis) candidates.push_back(res.particular + k);

  for (const VecQ& v : candidates) {
    const VecQ unit_coeffs = v.segment(n, n);
    if ((unit_coeffs.array() == 0).all()) continue;
    const GroupElement candidate{field->element(unit_coeffs), field->element(v.segment(0, n)),
                                 true};
    for (const auto& [g, conj] : sys.pairs) {
      if (!(g_conj(g, candidate) == conj))
        throw std::logic_error("solve_fba: solution fails a conjugacy equation");
    }
    return FbaSolution{candidate, res.unique(), true};
  }
  throw NoInvertibleCandidateError();
}

FbaAttackResult fba_attack_full(const PublicView& view) {
  FbaSolution alice = solve_fba(make_conjugacy_system(view.bob_public, view.alice_conjugates));
  FbaSolution bob = solve_fba(make_conjugacy_system(view.alice_public, view.bob_conjugates));
  GroupElement key = commutator(alice.candidate, bob.candidate);
  return FbaAttackResult{std::move(key), std::move(alice), std::move(bob)};
}

GroupElement fba_attack(const PublicView& view) { return fba_attack_full(view).key; }

DeducedView to_deduced_view(const PublicView& view, const PlatformSpec& spec,
                            const DeducedGroup& dg) {
  auto transport = [&](const std::vector<GroupElement>& tuple) {
    std::vector<DeducedElement> out;
    out.reserve(tuple.size());
    for (const GroupElement& g : tuple) out.push_back(to_deduced(g, spec, dg));
    return out;
  };
  return DeducedView{transport(view.alice_public), transport(view.bob_public),
                     transport(view.alice_conjugates), transport(view.bob_conjugates)};
}

DeducedConjugacySystem make_deduced_system(const std::vector<DeducedElement>& tuple,
                                           const std::vector<DeducedElement>& conjugates) {
  if (tuple.empty()) throw std::invalid_argument("conjugacy system must be nonempty");
  if (tuple.size() != conjugates.size())
    throw std::invalid_argument("tuple and conjugate tuple lengths differ");
  DeducedConjugacySystem sys;
  sys.pairs.reserve(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (!((tuple[i].unit_part.array() == conjugates[i].unit_part.array()).all()))
      throw InconsistentSystemError();
    sys.pairs.emplace_back(tuple[i], conjugates[i]);
  }
  return sys;
}

namespace {

VecQ flatten(const MatQ& m) {
  VecQ v(m.rows() * m.cols());
  Index pos = 0;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) v[pos++] = m(r, c);
  return v;
}

bool in_span(const std::vector<VecQ>& span, const VecQ& v) {
  MatQ mat(v.size(), static_cast<Index>(span.size()));
  for (std::size_t j = 0; j < span.size(); ++j)
    mat.col(static_cast<Index>(j)) = span[j];
  return !solve(mat, v).inconsistent();
}

}  // namespace

std::vector<MatQ> algebra_basis(const DeducedGroup& dg) {
  const Index n = dg.dimension;
  std::vector<MatQ> basis{MatQ::Identity(n, n)};
  std::vector<VecQ> flat{flatten(basis.front())};
  for (std::size_t next = 0; next < basis.size(); ++next) {
    for (const MatQ& c : dg.action_matrices) {
      const MatQ product = basis[next] * c;
      const VecQ fp = flatten(product);
      if (in_span(flat, fp)) continue;
      basis.push_back(product);
      flat.push_back(fp);
    }
  }
  return basis;
}

Fba2System build_fba2_system(const DeducedConjugacySystem& sys, const DeducedGroup& dg) {
  if (sys.pairs.empty()) throw std::invalid_argument("conjugacy system must be nonempty");
  const Index n = dg.dimension;

  Fba2System out;
  out.field_basis = algebra_basis(dg);
  const Index l = out.algebra_dimension();

  const Index rows = static_cast<Index>(sys.pairs.size()) * n;
  out.matrix = MatQ(rows, n + l);
  out.rhs = VecQ(rows);
  for (std::size_t i = 0; i < sys.pairs.size(); ++i) {
    const auto& [g, conj] = sys.pairs[i];
    out.unit_parts.push_back(g.unit_part);
    out.translations.push_back(g.vector_part);
    out.conjugated_translations.push_back(conj.vector_part);

    const Index r = static_cast<Index>(i) * n;
    out.matrix.block(r, 0, n, n) = (MatQ::Identity(n, n) - g.unit_part).transpose();
    for (Index a = 0; a < l; ++a)
      out.matrix.block(r, n + a, n, 1) =
          (g.vector_part * out.field_basis[static_cast<std::size_t>(a)]).transpose();
    out.rhs.segment(r, n) = conj.vector_part.transpose();
  }
  return out;
}

Fba2Solution solve_fba2(const DeducedConjugacySystem& sys, const DeducedGroup& dg) {
  const Fba2System fsys = build_fba2_system(sys, dg);
  const SolveResult res = solve(fsys.matrix, fsys.rhs);
  if (res.inconsistent()) throw InconsistentSystemError();

  const Index n = dg.dimension;
  const Index l = fsys.algebra_dimension();

  std::vector<VecQ> candidates;
  candidates.push_back(res.particular);
  for (const VecQ& k : res.kernel_basis) candidates.push_back(res.particular + k);

  for (const VecQ& v : candidates) {
    MatQ unit = MatQ::Zero(n, n);
    for (Index a = 0; a < l; ++a)
      unit += v[n + a] * fsys.field_basis[static_cast<std::size_t>(a)];
    if (rank(unit) < n) continue;
    const DeducedElement candidate{std::move(unit), v.segment(0, n).transpose()};
    for (const auto& [g, conj] : sys.pairs) {
      const DeducedElement replayed =
          deduced_mul(deduced_mul(deduced_inv(candidate), g), candidate);
      if (!(replayed == conj))
        throw std::logic_error("solve_fba2: solution fails a conjugacy equation");
    }
    return Fba2Solution{candidate, res.unique(), true};
  }
  throw NoInvertibleCandidateError();
}

Fba2AttackResult fba2_attack_full(const DeducedView& view, const DeducedGroup& dg) {
  Fba2Solution alice =
      solve_fba2(make_deduced_system(view.bob_public, view.alice_conjugates), dg);
  Fba2Solution bob =
      solve_fba2(make_deduced_system(view.alice_public, view.bob_conjugates), dg);
  DeducedElement key = deduced_commutator(alice.candidate, bob.candidate);
  return Fba2AttackResult{std::move(key), std::move(alice), std::move(bob)};
}

DeducedElement fba2_attack(const DeducedView& view, const DeducedGroup& dg) {
  return fba2_attack_full(view, dg).key;
}

bool attack_success(const GroupElement& candidate, const Transcript& t) {
  return candidate == t.shared_key;
}

bool attack_success(const DeducedElement& candidate, const Transcript& t,
                    const PlatformSpec& spec, const DeducedGroup& dg) {
  return candidate == to_deduced(t.shared_key, spec, dg);
}

}  // namespace aag
