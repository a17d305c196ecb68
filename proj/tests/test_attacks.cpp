#include <doctest.h>

#include "aag/attacks.hpp"
#include "helpers.hpp"

using namespace aag;
using namespace aag::testing;

namespace {

ProtocolParams attack_params(std::uint64_t seed, int word_length = 5) {
  ProtocolParams p;
  p.alice_tuple_size = 6;
  p.bob_tuple_size = 5;
  p.private_word_length = word_length;
  p.gen_word_length = 4;
  p.seed = seed;
  return p;
}

}  // namespace

TEST_CASE("golden conjugacy instance solves to the frozen secret") {
  const PlatformSpec spec = load_platform_file(fixture_path("x^2-x-1"));
  const FieldHandle field = spec.field;
  const FieldElement theta = field->generator();
  const FieldElement one = field->one();

  // Secret x = (theta, 1) acting on b_1 = (theta, 1) and b_2 = (theta^2, 0).
  const GroupElement secret{theta, one};
  const std::vector<GroupElement> tuple = {{theta, one}, {theta * theta, field->zero()}};
  const std::vector<GroupElement> conjugates = {g_conj(tuple[0], secret),
                                                g_conj(tuple[1], secret)};

  // Frozen conjugates, derived by hand from (D, S(E-D) + TC).
  CHECK(conjugates[0] == tuple[0]);
  CHECK(conjugates[1].unit == theta * theta);
  CHECK(conjugates[1].translation == -theta);

  const ConjugacySystem sys = make_conjugacy_system(tuple, conjugates);
  const auto [matrix, rhs] = build_fba_system(sys);
  REQUIRE(matrix.rows() == 4);
  REQUIRE(matrix.cols() == 4);
  CHECK(rank(matrix) == 4);
  // First block row: S-columns carry to_matrix(1 - theta), C-columns
  // to_matrix(1); right side is the conjugate translation.
  CHECK(mat_eq(MatQ(matrix.topLeftCorner(2, 2)), to_matrix(one - theta)));
  CHECK(mat_eq(MatQ(matrix.topRightCorner(2, 2)), MatQ(MatQ::Identity(2, 2))));
  CHECK(rhs[0] == 1);
  CHECK(rhs[1] == 0);

  const FbaSolution sol = solve_fba(sys);
  CHECK(sol.uniqueness);
  CHECK(sol.residual_checked);
  CHECK(sol.candidate.lifted);
  CHECK(sol.candidate.unit == theta);
  CHECK(sol.candidate.translation == one);
}

TEST_CASE("conjugacy system construction validates its input") {
  const PlatformSpec spec = load_platform_file(fixture_path("x^2-x-1"));
  const Transcript t = run_protocol(spec, attack_params(3));
  CHECK_THROWS_AS(make_conjugacy_system({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_conjugacy_system(t.alice_public, t.alice_conjugates),
                  std::invalid_argument);  // mismatched sizes (6 vs bob's count)

  // Tampering with a unit part breaks the conjugation invariant immediately.
  std::vector<GroupElement> conj = t.bob_conjugates;
  conj[0].unit = conj[0].unit * spec.field->generator();
  CHECK_THROWS_AS(make_conjugacy_system(t.alice_public, conj), InconsistentSystemError);
}

TEST_CASE("field attack recovers the exact shared key across platforms and seeds") {
  for (const char* name : {"x^2-x-1", "x^5-x^3-1", "x^7-x^3-1"}) {
    CAPTURE(name);
    const PlatformSpec spec = load_platform_file(fixture_path(name));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Transcript t = run_protocol(spec, attack_params(seed));
      const FbaAttackResult result = fba_attack_full(public_view(t));
      CHECK(result.alice.residual_checked);
      CHECK(result.bob.residual_checked);
      CHECK(attack_success(result.key, t));
    }
  }
}

TEST_CASE("recovered secrets conjugate the published tuples correctly") {
  const PlatformSpec spec = load_platform_file(fixture_path("x^5-x^3-1"));
  const Transcript t = run_protocol(spec, attack_params(9));
  const PublicView view = public_view(t);
  const FbaAttackResult result = fba_attack_full(view);
  for (std::size_t i = 0; i < view.bob_public.size(); ++i)
    CHECK(g_conj(view.bob_public[i], result.alice.candidate) == view.alice_conjugates[i]);
  for (std::size_t i = 0; i < view.alice_public.size(); ++i)
    CHECK(g_conj(view.alice_public[i], result.bob.candidate) == view.bob_conjugates[i]);
}

TEST_CASE("single trivial-unit equation leaves an affine system that still solves") {
  const PlatformSpec spec = load_platform_file(fixture_path("x^2-x-1"));
  const FieldHandle field = spec.field;
  const GroupElement secret{field->generator(), field->one()};
  // B_1 = E: the S-block vanishes and the system cannot be unique.
  const std::vector<GroupElement> tuple = {{field->one(), field->generator()}};
  const std::vector<GroupElement> conjugates = {g_conj(tuple[0], secret)};

  const FbaSolution sol = solve_fba(make_conjugacy_system(tuple, conjugates));
  CHECK_FALSE(sol.uniqueness);
  CHECK(sol.residual_checked);
  CHECK_FALSE(sol.candidate.unit.is_zero());
  CHECK(g_conj(tuple[0], sol.candidate) == conjugates[0]);
}

TEST_CASE("tampered translation makes the system inconsistent") {
  const PlatformSpec spec = load_platform_file(fixture_path("x^2-x-1"));
  const Transcript t = run_protocol(spec, attack_params(12));
  std::vector<GroupElement> conj = t.bob_conjugates;
  conj[0].translation = conj[0].translation + spec.field->one();
  const ConjugacySystem sys = make_conjugacy_system(t.alice_public, conj);
  CHECK_THROWS_AS(solve_fba(sys), InconsistentSystemError);
}

TEST_CASE("deduced view transports the public data faithfully") {
  const PlatformSpec spec = load_platform_file(fixture_path("x^5-x^3-1"));
  const DeducedGroup dg = action_matrices(build_presentation(spec));
  const Transcript t = run_protocol(spec, attack_params(15));
  const PublicView view = public_view(t);
  const DeducedView deduced = to_deduced_view(view, spec, dg);
  REQUIRE(deduced.alice_public.size() == view.alice_public.size());
  REQUIRE(deduced.bob_conjugates.size() == view.bob_conjugates.size());
  for (std::size_t i = 0; i < view.alice_public.size(); ++i)
    CHECK(deduced.alice_public[i] == to_deduced(view.alice_public[i], spec, dg));
}

TEST_CASE("algebra basis spans all unit actions and their products") {
  for (const char* name : {"x^2-x-1", "x^5-x^3-1", "x^9-7x^3-1"}) {
    CAPTURE(name);
    const PlatformSpec spec = load_platform_file(fixture_path(name));
    const DeducedGroup dg = action_matrices(build_presentation(spec));
    const std::vector<MatQ> basis = algebra_basis(dg);
    REQUIRE(!basis.empty());
    CHECK(basis.size() <= static_cast<std::size_t>(dg.dimension));

    // Stack basis elements as columns of a flat system; every C_i and every
    // product H_a C_i must solve against it.
    const Index n = dg.dimension;
    MatQ flat(n * n, static_cast<Index>(basis.size()));
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          flat(i * n + j, static_cast<Index>(a)) = basis[a](i, j);
    auto in_span = [&](const MatQ& m) {
      VecQ target(n * n);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) target[i * n + j] = m(i, j);
      return !solve(flat, target).inconsistent();
    };
    for (const MatQ& c : dg.action_matrices) {
      CHECK(in_span(c));
      for (const MatQ& h : basis) CHECK(in_span(MatQ(h * c)));
    }
    for (const MatQ& c : dg.action_inverses) CHECK(in_span(c));
  }
}

TEST_CASE("deduced attack recovers the transported shared key") {
  for (const char* name : {"x^2-x-1", "x^5-x^3-1", "x^7-x^3-1"}) {
    CAPTURE(name);
    const PlatformSpec spec = load_platform_file(fixture_path(name));
    const DeducedGroup dg = action_matrices(build_presentation(spec));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Transcript t = run_protocol(spec, attack_params(seed));
      const DeducedView view = to_deduced_view(public_view(t), spec, dg);
      const Fba2AttackResult result = fba2_attack_full(view, dg);
      CHECK(result.alice.residual_checked);
      CHECK(result.bob.residual_checked);
      CHECK(attack_success(result.key, t, spec, dg));
      CHECK(result.key == to_deduced(t.shared_key, spec, dg));
    }
  }
}

TEST_CASE("deduced system dimensions follow the algebra basis") {
  const PlatformSpec spec = load_platform_file(fixture_path("x^2-x-1"));
  const DeducedGroup dg = action_matrices(build_presentation(spec));
  const Transcript t = run_protocol(spec, attack_params(21));
  const DeducedView view = to_deduced_view(public_view(t), spec, dg);
  const DeducedConjugacySystem sys =
      make_deduced_system(view.alice_public, view.bob_conjugates);
  const Fba2System built = build_fba2_system(sys, dg);
  CHECK(built.algebra_dimension() == 2);
  CHECK(built.matrix.rows() == static_cast<Index>(sys.pairs.size()) * 2);
  CHECK(built.matrix.cols() == 2 + 2);
  CHECK(built.field_basis.size() == 2);
}

TEST_CASE("tampered deduced system is rejected") {
  const PlatformSpec spec = load_platform_file(fixture_path("x^2-x-1"));
  const DeducedGroup dg = action_matrices(build_presentation(spec));
  const Transcript t = run_protocol(spec, attack_params(25));
  DeducedView view = to_deduced_view(public_view(t), spec, dg);

  SUBCASE("unit tamper fails pairing") {
    view.bob_conjugates[0].unit_part = MatQ(Rational(2) * view.bob_conjugates[0].unit_part);
    CHECK_THROWS_AS(make_deduced_system(view.alice_public, view.bob_conjugates),
                    InconsistentSystemError);
  }
  SUBCASE("translation tamper fails the solve") {
    view.bob_conjugates[0].vector_part[0] += 1;
    const DeducedConjugacySystem sys =
        make_deduced_system(view.alice_public, view.bob_conjugates);
    CHECK_THROWS_AS(solve_fba2(sys, dg), InconsistentSystemError);
  }
}

TEST_CASE("attack_success is exact equality with the true key") {
  const PlatformSpec spec = load_platform_file(fixture_path("x^2-x-1"));
  const DeducedGroup dg = action_matrices(build_presentation(spec));
  const Transcript t = run_protocol(spec, attack_params(31));
  CHECK(attack_success(t.shared_key, t));
  CHECK_FALSE(attack_success(spec.identity(), t));
  CHECK(attack_success(to_deduced(t.shared_key, spec, dg), t, spec, dg));
  CHECK_FALSE(attack_success(deduced_identity(dg), t, spec, dg));
}

TEST_CASE("attack works on a transcript rehydrated from JSON") {
  const PlatformSpec spec = load_platform_file(fixture_path("x^5-x^3-1"));
  const Transcript t = run_protocol(spec, attack_params(41));
  const Transcript back = transcript_from_json(transcript_to_json(t, spec), spec);
  CHECK(attack_success(fba_attack(public_view(back)), back));
}
