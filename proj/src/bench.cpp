#include "aag/bench.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace aag {

TrialResult run_trial(const PlatformSpec& spec, const DeducedGroup& dg, AttackKind kind,
                      const ProtocolParams& params, double timeout_secs) {
  const Transcript transcript = run_protocol(spec, params);
  const PublicView view = public_view(transcript);

  TrialResult result;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (kind == AttackKind::Fba) {
      const FbaAttackResult attack = fba_attack_full(view);
      result.success = attack_success(attack.key, transcript);
      result.rank_deficient = !attack.alice.uniqueness || !attack.bob.uniqueness;
    } else {
      const DeducedView deduced = to_deduced_view(view, spec, dg);
      const Fba2AttackResult attack = fba2_attack_full(deduced, dg);
      result.success = attack_success(attack.key, transcript, spec, dg);
      result.rank_deficient = !attack.alice.uniqueness || !attack.bob.uniqueness;
    }
  } catch (const std::exception& e) {
    result.success = false;
    result.error = e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  result.millis = std::chrono::duration<double, std::milli>(stop - start).count();
  if (result.millis > timeout_secs * 1000.0) {
    result.timed_out = true;
    result.success = false;
  }
  return result;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("bench: trials must be >= 1");
  std::vector<BenchRow> rows;
  for (const std::string& path : config.fixture_paths) {
    const PlatformSpec spec = load_platform_file(path);
    const DeducedGroup dg = action_matrices(build_presentation(spec));
    std::vector<AttackKind> kinds;
    if (config.run_fba) kinds.push_back(AttackKind::Fba);
    if (config.run_fba2) kinds.push_back(AttackKind::Fba2);

    for (const AttackKind kind : kinds) {
      for (const int word_length : config.word_lengths) {
        BenchRow row;
        row.platform = spec.name;
        row.hirsch = spec.hirsch_length();
        row.expected_hirsch = spec.expected_hirsch_length;
        row.attack = kind;
        row.word_length = word_length;
        row.trials = config.trials;
        for (int trial = 0; trial < config.trials; ++trial) {
          ProtocolParams params;
          params.alice_tuple_size = config.alice_tuple_size;
          params.bob_tuple_size = config.bob_tuple_size;
          params.private_word_length = word_length;
          params.gen_word_length = config.gen_word_length;
          params.seed = config.base_seed + static_cast<std::uint64_t>(trial);
          const TrialResult r = run_trial(spec, dg, kind, params, config.timeout_secs);
          row.successes += r.success ? 1 : 0;
          row.rank_deficient += r.rank_deficient ? 1 : 0;
          row.timeouts += r.timed_out ? 1 : 0;
          row.total_ms += r.millis;
        }
        row.mean_ms = row.total_ms / config.trials;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

namespace {

struct LbaReference {
  const char* platform;
  const char* time;
  const char* rate;
};

// Published length-based-attack measurements, reprinted for comparison; the
// two largest platforms were not measured.
constexpr LbaReference kLbaTable[] = {
    {"x^2-x-1", "0.20 h", "100%"},  {"x^5-x^3-1", "76.87 h", "35%"},
    {"x^7-x^3-1", "94.43 h", "8%"}, {"x^9-7x^3-1", "95.18 h", "5%"},
    {"x^11-x^3-1", "95.05 h", "5%"},
};

const LbaReference* lba_lookup(const std::string& platform) {
  for (const LbaReference& ref : kLbaTable)
    if (platform == ref.platform) return &ref;
  return nullptr;
}

std::string hirsch_cell(const BenchRow& row) {
  std::string cell = std::to_string(row.hirsch);
  if (row.expected_hirsch && *row.expected_hirsch != row.hirsch)
    cell += " (exp " + std::to_string(*row.expected_hirsch) + ")";
  return cell;
}

std::string fixed2(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << value;
  return out.str();
}

}  // namespace

std::string format_table(const std::vector<BenchRow>& rows) {
  const std::vector<std::string> header = {"platform", "h(G)",    "attack",  "L",
                                           "trials",   "success", "rate",    "mean_ms",
                                           "rankdef",  "timeout", "LBA time", "LBA rate"};
  std::vector<std::vector<std::string>> table{header};
  for (const BenchRow& row : rows) {
    const LbaReference* lba = lba_lookup(row.platform);
    table.push_back({row.platform, hirsch_cell(row), attack_name(row.attack),
                     std::to_string(row.word_length), std::to_string(row.trials),
                     std::to_string(row.successes), fixed2(row.rate()) + "%",
                     fixed2(row.mean_ms), std::to_string(row.rank_deficient),
                     std::to_string(row.timeouts), lba ? lba->time : "--",
                     lba ? lba->rate : "--"});
  }

  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : table)
    for (std::size_t c = 0; c < line.size(); ++c)
      widths[c] = std::max(widths[c], line[c].size());

  std::ostringstream out;
  for (const auto& line : table) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(widths[c]) + 2) << line[c];
    }
    out << "\n";
  }
  return out.str();
}

std::string format_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "platform,hirsch,attack,L,trials,successes,rate,mean_ms,rank_deficient\n";
  for (const BenchRow& row : rows) {
    out << row.platform << ',' << row.hirsch << ',' << attack_name(row.attack) << ','
        << row.word_length << ',' << row.trials << ',' << row.successes << ','
        << fixed2(row.rate()) << ',' << fixed2(row.mean_ms) << ',' << row.rank_deficient
        << "\n";
  }
  return out.str();
}

}  // namespace aag
