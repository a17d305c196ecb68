#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "aag/attacks.hpp"

namespace aag {

enum class AttackKind { Fba, Fba2 };

inline const char* attack_name(AttackKind kind) {
  return kind == AttackKind::Fba ? "fba" : "fba2";
}

struct BenchConfig {
  std::vector<std::string> fixture_paths;
  int alice_tuple_size = 20;
  int bob_tuple_size = 20;
  std::vector<int> word_lengths = {5, 100};
  int trials = 100;
  std::uint64_t base_seed = 1;
  bool run_fba = true;
  bool run_fba2 = true;
  int gen_word_length = 10;
  double timeout_secs = 600.0;
};

struct TrialResult {
  bool success = false;
  bool rank_deficient = false;  // either side's system had a nontrivial kernel
  bool timed_out = false;
  std::string error;  // attack exception text, empty on clean runs
  double millis = 0.0;
};

struct BenchRow {
  std::string platform;
  int hirsch = 0;
  std::optional<int> expected_hirsch;
  AttackKind attack = AttackKind::Fba;
  int word_length = 0;  // L
  int trials = 0;
  int successes = 0;
  int rank_deficient = 0;
  int timeouts = 0;
  double mean_ms = 0.0;
  double total_ms = 0.0;

  double rate() const {
    return trials > 0 ? 100.0 * static_cast<double>(successes) / trials : 0.0;
  }
};

/// One seeded protocol run followed by one attack. The clock covers the
/// attack and the key comparison; a post-hoc overrun of timeout_secs
/// downgrades the trial to a tagged failure.
TrialResult run_trial(const PlatformSpec& spec, const DeducedGroup& dg, AttackKind kind,
                      const ProtocolParams& params, double timeout_secs);

/// Full grid: fixture x attack x L, trials seeded base_seed + index.
/// Per-trial attack errors count as failures and never abort the sweep.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Plain table with the published length-based-attack reference columns
/// alongside the measured rows.
std::string format_table(const std::vector<BenchRow>& rows);

/// Stable schema: platform,hirsch,attack,L,trials,successes,rate,mean_ms,rank_deficient.
std::string format_csv(const std::vector<BenchRow>& rows);

}  // namespace aag
