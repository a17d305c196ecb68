// Acceptance gate: each criterion prints exactly one PASS/FAIL line and the
// process exit code reports the verdict, so a test runner can gate on any
// subset. Run as: acceptance <criterion 1..8>.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "aag/attacks.hpp"
#include "aag/bench.hpp"

using namespace aag;

namespace {

const std::vector<std::string> kSmallPlatforms = {
    "x^2-x-1", "x^5-x^3-1", "x^7-x^3-1", "x^9-7x^3-1", "x^11-x^3-1"};
const std::vector<std::string> kAllPlatforms = {
    "x^2-x-1",    "x^5-x^3-1", "x^7-x^3-1", "x^9-7x^3-1",
    "x^11-x^3-1", "x^15-x-2",  "x^20-x-1"};

std::string fixture_path(const std::string& name) {
  return std::string(AAG_FIXTURE_DIR) + "/" + name + ".json";
}

struct Failure {
  std::string detail;
};

void require(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

ProtocolParams desk_params(std::uint64_t seed, int word_length) {
  ProtocolParams p;
  p.alice_tuple_size = 20;
  p.bob_tuple_size = 20;
  p.private_word_length = word_length;
  p.gen_word_length = 10;
  p.seed = seed;
  return p;
}

/// Criterion 1: both key-computation routes agree with the commutator of the
/// secrets on every run, across the five benchmark platforms of degree <= 11,
/// 25 seeded runs for each private-word length in {5, 100}.
void criterion_key_agreement() {
  for (const std::string& name : kSmallPlatforms) {
    const PlatformSpec spec = load_platform_file(fixture_path(name));
    for (const int length : {5, 100}) {
      for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const Transcript t = run_protocol(spec, desk_params(seed, length));
        const PublicView view = public_view(t);
        const GroupElement expected = commutator(t.alice_secret, t.bob_secret);
        require(t.shared_key == expected, name + ": stored key is not the commutator");
        require(alice_key(view, t.alice_private_word, t.alice_secret) == expected,
                name + ": alice route disagrees (seed " + std::to_string(seed) + ")");
        require(bob_key(view, t.bob_private_word, t.bob_secret) == expected,
                name + ": bob route disagrees (seed " + std::to_string(seed) + ")");
      }
    }
  }
}

void run_attack_grid(AttackKind kind) {
  for (const std::string& name : kSmallPlatforms) {
    const PlatformSpec spec = load_platform_file(fixture_path(name));
    const DeducedGroup dg = action_matrices(build_presentation(spec));
    for (const int length : {5, 100}) {
      int successes = 0;
      const int trials = 30;
      for (int trial = 0; trial < trials; ++trial) {
        const TrialResult r = run_trial(spec, dg, kind,
                                        desk_params(100 + trial, length), 600.0);
        require(r.error.empty(),
                name + " L=" + std::to_string(length) + ": attack error: " + r.error);
        if (r.success) ++successes;
      }
      require(successes == trials, name + " L=" + std::to_string(length) + ": " +
                                       std::to_string(successes) + "/" +
                                       std::to_string(trials) + " below 100%");
    }
  }
}

/// Criteria 2 and 3: the attacks recover the exact shared key on every one of
/// 30 trials per platform and word length, with zero tolerance.
void criterion_fba() { run_attack_grid(AttackKind::Fba); }
void criterion_fba2() { run_attack_grid(AttackKind::Fba2); }

/// Criterion 4: the full grid, including the two large platforms, stays far
/// inside the 600 s per-trial budget.
void criterion_budget() {
  for (const std::string& name : kAllPlatforms) {
    const PlatformSpec spec = load_platform_file(fixture_path(name));
    const DeducedGroup dg = action_matrices(build_presentation(spec));
    for (const AttackKind kind : {AttackKind::Fba, AttackKind::Fba2}) {
      for (const int length : {5, 100}) {
        for (int trial = 0; trial < 3; ++trial) {
          const TrialResult r = run_trial(spec, dg, kind,
                                          desk_params(200 + trial, length), 600.0);
          require(!r.timed_out && r.millis <= 600000.0,
                  name + " " + attack_name(kind) + " L=" + std::to_string(length) +
                      ": trial took " + std::to_string(r.millis) + " ms");
          require(r.success, name + " " + attack_name(kind) +
                                 ": unexpected failure inside the budget check");
        }
      }
    }
  }
}

/// Criterion 5: the matrix-pair model and the deduced model are isomorphic:
/// 1000 random products per platform commute with the transport, and the
/// closed-form conjugation matches the definitional one.
void criterion_model_equivalence() {
  for (const std::string& name : kAllPlatforms) {
    const PlatformSpec spec = load_platform_file(fixture_path(name));
    const DeducedGroup dg = action_matrices(build_presentation(spec));
    const std::vector<GroupElement> gens = spec.generators();
    const std::size_t word_length = spec.degree() >= 15 ? 4 : 8;
    Rng rng(901);
    const Index n = dg.dimension;
    for (int round = 0; round < 1000; ++round) {
      const GroupElement x = eval_word(random_word(rng, gens.size(), word_length), gens);
      const GroupElement y = eval_word(random_word(rng, gens.size(), word_length), gens);
      const DeducedElement dx = to_deduced(x, spec, dg);
      const DeducedElement dy = to_deduced(y, spec, dg);
      require(to_deduced(g_mul(x, y), spec, dg) == deduced_mul(dx, dy),
              name + ": transport is not multiplicative");
      if (round % 10 == 0) {
        require(to_deduced(g_inv(x), spec, dg) == deduced_inv(dx),
                name + ": transport does not respect inversion");
        const DeducedElement definitional = deduced_mul(deduced_mul(deduced_inv(dx), dy), dx);
        const DeducedElement closed{
            dy.unit_part, dx.vector_part * (MatQ::Identity(n, n) - dy.unit_part) +
                              dy.vector_part * dx.unit_part};
        require(definitional == closed, name + ": conjugation closed form mismatch");
      }
    }
  }
}

/// Criterion 6: tau respects words (200 per platform), inverse pairing, and
/// the commutativity of the deduced action matrices.
void criterion_tau() {
  for (const std::string& name : kAllPlatforms) {
    const PlatformSpec spec = load_platform_file(fixture_path(name));
    const DeducedGroup dg = action_matrices(build_presentation(spec));
    const std::vector<GroupElement> gens = spec.generators();
    Rng rng(902);
    for (int round = 0; round < 200; ++round) {
      const GroupWord w = random_word(rng, gens.size(), 8);
      const DeducedElement image = tau(w, dg);
      require(to_deduced(eval_word(w, gens), spec, dg) == image,
              name + ": tau disagrees with evaluate-then-transport");

      GroupWord reversed;
      for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        reversed.letters.push_back({it->index, -it->exponent});
      require(deduced_mul(image, tau(reversed, dg)) == deduced_identity(dg),
              name + ": tau breaks inverse pairing");
    }
    for (std::size_t i = 0; i < dg.action_matrices.size(); ++i)
      for (std::size_t j = i + 1; j < dg.action_matrices.size(); ++j) {
        const MatQ ab = dg.action_matrices[i] * dg.action_matrices[j];
        const MatQ ba = dg.action_matrices[j] * dg.action_matrices[i];
        require((ab.array() == ba.array()).all(), name + ": action matrices do not commute");
      }
  }
}

/// Criterion 7: on instances small enough to enumerate, every private word
/// consistent with the published conjugates derives the same shared key, and
/// the true word is among them (both sides, 20 seeds).
void criterion_brute_force() {
  const PlatformSpec spec = load_platform_file(fixture_path("x^2-x-1"));

  std::vector<GroupWord> words;
  for (int i = 0; i < 2; ++i)
    for (int e : {1, -1}) words.push_back(GroupWord{{{i, e}}});
  for (int i = 0; i < 2; ++i)
    for (int e1 : {1, -1})
      for (int j = 0; j < 2; ++j)
        for (int e2 : {1, -1}) words.push_back(GroupWord{{{i, e1}, {j, e2}}});

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    ProtocolParams p;
    p.alice_tuple_size = 2;
    p.bob_tuple_size = 2;
    p.private_word_length = 2;
    p.gen_word_length = 3;
    p.seed = seed;
    const Transcript t = run_protocol(spec, p);
    const PublicView view = public_view(t);

    int alice_consistent = 0;
    for (const GroupWord& w : words) {
      const GroupElement candidate = eval_word(w, view.alice_public);
      bool consistent = true;
      for (std::size_t i = 0; i < view.bob_public.size(); ++i)
        if (!(g_conj(view.bob_public[i], candidate) == view.alice_conjugates[i])) {
          consistent = false;
          break;
        }
      if (!consistent) continue;
      ++alice_consistent;
      require(alice_key(view, w, candidate) == t.shared_key,
              "seed " + std::to_string(seed) + ": consistent alice word gives a wrong key");
    }
    require(alice_consistent >= 1,
            "seed " + std::to_string(seed) + ": true alice word not found by enumeration");

    int bob_consistent = 0;
    for (const GroupWord& w : words) {
      const GroupElement candidate = eval_word(w, view.bob_public);
      bool consistent = true;
      for (std::size_t i = 0; i < view.alice_public.size(); ++i)
        if (!(g_conj(view.alice_public[i], candidate) == view.bob_conjugates[i])) {
          consistent = false;
          break;
        }
      if (!consistent) continue;
      ++bob_consistent;
      require(bob_key(view, w, candidate) == t.shared_key,
              "seed " + std::to_string(seed) + ": consistent bob word gives a wrong key");
    }
    require(bob_consistent >= 1,
            "seed " + std::to_string(seed) + ": true bob word not found by enumeration");
  }
}

/// Criterion 8: degenerate and adversarial inputs behave as documented: a
/// single trivial-unit equation yields an affine system that still solves and
/// verifies, and tampered transcripts raise the inconsistency error.
void criterion_degenerate() {
  const PlatformSpec spec = load_platform_file(fixture_path("x^2-x-1"));
  const FieldHandle field = spec.field;

  const GroupElement secret{field->generator(), field->one()};
  const std::vector<GroupElement> tuple = {{field->one(), field->generator()}};
  const std::vector<GroupElement> conjugates = {g_conj(tuple[0], secret)};
  const FbaSolution sol = solve_fba(make_conjugacy_system(tuple, conjugates));
  require(!sol.uniqueness, "single-equation system reported a unique solution");
  require(sol.residual_checked, "degenerate solution skipped re-verification");
  require(g_conj(tuple[0], sol.candidate) == conjugates[0],
          "degenerate solution does not satisfy its own equation");

  ProtocolParams p;
  p.alice_tuple_size = 5;
  p.bob_tuple_size = 5;
  p.private_word_length = 5;
  p.gen_word_length = 4;
  p.seed = 77;
  const Transcript t = run_protocol(spec, p);

  std::vector<GroupElement> tampered = t.bob_conjugates;
  tampered[0].translation = tampered[0].translation + field->one();
  bool threw = false;
  try {
    solve_fba(make_conjugacy_system(t.alice_public, tampered));
  } catch (const InconsistentSystemError&) {
    threw = true;
  }
  require(threw, "tampered translation was not rejected as inconsistent");

  std::vector<GroupElement> unit_tampered = t.bob_conjugates;
  unit_tampered[0].unit = unit_tampered[0].unit * field->generator();
  threw = false;
  try {
    make_conjugacy_system(t.alice_public, unit_tampered);
  } catch (const InconsistentSystemError&) {
    threw = true;
  }
  require(threw, "tampered unit part was not rejected");
}

struct Criterion {
  const char* description;
  void (*run)();
};

const Criterion kCriteria[] = {
    {"key agreement identity on all degree<=11 platforms, L in {5,100}",
     criterion_key_agreement},
    {"field attack succeeds on 30/30 trials per platform and length",
     criterion_fba},
    {"deduced attack succeeds on 30/30 trials per platform and length",
     criterion_fba2},
    {"every trial on all seven platforms finishes far below 600 s",
     criterion_budget},
    {"matrix-pair and deduced models are isomorphic on 1000 products each",
     criterion_model_equivalence},
    {"tau is a homomorphism with inverse pairing and commuting actions",
     criterion_tau},
    {"exhaustive word search agrees with the key on 20 seeded instances",
     criterion_brute_force},
    {"degenerate systems solve and tampered transcripts are rejected",
     criterion_degenerate},
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <criterion 1.." << std::size(kCriteria) << ">\n";
    return 2;
  }
  const int index = std::atoi(argv[1]);
  if (index < 1 || index > static_cast<int>(std::size(kCriteria))) {
    std::cerr << "criterion out of range\n";
    return 2;
  }
  const Criterion& criterion = kCriteria[static_cast<std::size_t>(index - 1)];

  const auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    criterion.run();
  } catch (const Failure& f) {
    failure = f.detail;
  } catch (const std::exception& e) {
    failure = std::string("unexpected exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::ostringstream line;
  line << (failure.empty() ? "PASS" : "FAIL") << " criterion " << index << ": "
       << criterion.description;
  if (!failure.empty()) line << " [" << failure << "]";
  line << " (" << std::fixed << secs << " s)";
  std::cout << line.str() << "\n";
  return failure.empty() ? 0 : 1;
}
