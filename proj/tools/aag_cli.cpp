#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "aag/bench.hpp"

namespace {

constexpr int kExitFixture = 2;
constexpr int kExitAttack = 3;
constexpr int kExitInternal = 4;

std::string resolve_platform(const std::string& value) {
  if (value.find('/') != std::string::npos || std::filesystem::exists(value)) return value;
  const char* env_dir = std::getenv("AAG_FIXTURE_DIR");
  const std::string dir = env_dir != nullptr ? env_dir : "fixtures";
  return dir + "/" + value + ".json";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw aag::FixtureError("cannot write file: " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw aag::FixtureError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string element_str(const aag::GroupElement& g) {
  return "(" + g.unit.str() + ", " + g.translation.str() + ")";
}

std::string deduced_str(const aag::DeducedElement& x) {
  std::ostringstream out;
  out << "unit rows [";
  for (aag::Index r = 0; r < x.unit_part.rows(); ++r) {
    out << (r > 0 ? "; " : "");
    for (aag::Index c = 0; c < x.unit_part.cols(); ++c)
      out << (c > 0 ? " " : "") << x.unit_part(r, c);
  }
  out << "], vector [";
  for (aag::Index c = 0; c < x.vector_part.size(); ++c)
    out << (c > 0 ? " " : "") << x.vector_part[c];
  out << "]";
  return out.str();
}

struct CommonOptions {
  std::string platform;
  std::uint64_t seed = 1;
  int n1 = 20;
  int n2 = 20;
  int word_length = 5;
  int gen_word_length = 10;
};

void add_instance_flags(CLI::App* cmd, CommonOptions& opts, bool with_instance_params) {
  cmd->add_option("--platform", opts.platform, "platform name or fixture path")->required();
  if (with_instance_params) {
    cmd->add_option("--seed", opts.seed, "PRNG seed");
    cmd->add_option("--n1", opts.n1, "Alice tuple size");
    cmd->add_option("--n2", opts.n2, "Bob tuple size");
    cmd->add_option("-L,--word-length", opts.word_length, "private word length");
    cmd->add_option("--gen-word-length", opts.gen_word_length,
                    "letters per public tuple element");
  }
}

aag::ProtocolParams to_params(const CommonOptions& opts) {
  aag::ProtocolParams params;
  params.alice_tuple_size = opts.n1;
  params.bob_tuple_size = opts.n2;
  params.private_word_length = opts.word_length;
  params.gen_word_length = opts.gen_word_length;
  params.seed = opts.seed;
  return params;
}

int cmd_simulate(const CommonOptions& opts, const std::string& emit) {
  const aag::PlatformSpec spec = aag::load_platform_file(resolve_platform(opts.platform));
  const aag::Transcript t = aag::run_protocol(spec, to_params(opts));

  std::cout << "platform " << spec.name << " (degree " << spec.degree() << ", h(G) "
            << spec.hirsch_length() << ")\n";
  std::cout << "seed " << opts.seed << ", N1 " << opts.n1 << ", N2 " << opts.n2 << ", L "
            << opts.word_length << "\n";
  std::cout << "key agreement: both computation routes equal [A, B]\n";
  std::cout << "shared key " << element_str(t.shared_key) << "\n";
  std::cout << aag::public_view_to_json(aag::public_view(t), spec);
  if (!emit.empty()) {
    write_file(emit, aag::transcript_to_json(t, spec));
    std::cout << "transcript written to " << emit << "\n";
  }
  return 0;
}

int cmd_attack(const CommonOptions& opts, const std::string& attack,
               const std::string& transcript_path) {
  const aag::PlatformSpec spec = aag::load_platform_file(resolve_platform(opts.platform));
  const aag::Transcript t =
      transcript_path.empty()
          ? aag::run_protocol(spec, to_params(opts))
          : aag::transcript_from_json(read_file(transcript_path), spec);
  const aag::PublicView view = aag::public_view(t);

  bool all_succeeded = true;
  const auto print_verdict = [&](const char* name, const std::string& key, bool success,
                                 bool unique, double ms) {
    std::cout << name << ": candidate key " << key << "\n";
    std::cout << name << ": success " << (success ? "true" : "false") << ", unique "
              << (unique ? "true" : "false") << ", " << ms << " ms\n";
    all_succeeded = all_succeeded && success;
  };

  if (attack == "fba" || attack == "both") {
    const auto start = std::chrono::steady_clock::now();
    const aag::FbaAttackResult r = aag::fba_attack_full(view);
    const bool success = aag::attack_success(r.key, t);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    print_verdict("fba", element_str(r.key), success,
                  r.alice.uniqueness && r.bob.uniqueness, ms);
  }
  if (attack == "fba2" || attack == "both") {
    const aag::DeducedGroup dg = aag::action_matrices(aag::build_presentation(spec));
    const auto start = std::chrono::steady_clock::now();
    const aag::DeducedView deduced = aag::to_deduced_view(view, spec, dg);
    const aag::Fba2AttackResult r = aag::fba2_attack_full(deduced, dg);
    const bool success = aag::attack_success(r.key, t, spec, dg);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    print_verdict("fba2", deduced_str(r.key), success,
                  r.alice.uniqueness && r.bob.uniqueness, ms);
  }
  return all_succeeded ? 0 : kExitAttack;
}

int cmd_bench(aag::BenchConfig config, const std::string& format, const std::string& emit) {
  for (std::string& path : config.fixture_paths) path = resolve_platform(path);
  const std::vector<aag::BenchRow> rows = aag::run_bench(config);
  const std::string output =
      format == "csv" ? aag::format_csv(rows) : aag::format_table(rows);
  std::cout << output;
  if (!emit.empty()) write_file(emit, output);
  return 0;
}

int cmd_platform(const std::string& platform) {
  const aag::PlatformSpec spec = aag::load_platform_file(resolve_platform(platform));
  std::cout << "platform " << spec.name << "\n";
  std::cout << "defining polynomial " << spec.field->poly().str() << "\n";
  std::cout << "degree n = " << spec.degree() << "\n";
  std::cout << "unit generators m = " << spec.unit_count()
            << " (torsion order " << spec.torsion_order << ")\n";
  if (spec.signature)
    std::cout << "signature (" << spec.signature->first << ", " << spec.signature->second
              << ")\n";
  std::cout << "h(G) computed = " << spec.hirsch_length();
  if (spec.expected_hirsch_length) {
    std::cout << ", expected = " << *spec.expected_hirsch_length;
    if (spec.hirsch_length() < *spec.expected_hirsch_length)
      std::cout << "  [unit generators span less than the full unit group]";
  }
  std::cout << "\n";
  if (!spec.notes.empty()) std::cout << "notes: " << spec.notes << "\n";
  const aag::PcPresentation pc = aag::build_presentation(spec);
  std::cout << "\n" << aag::presentation_dump(pc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commutator key establishment over unit-lattice platform groups, with the "
               "field-based linear attacks and a success-rate benchmark"};
  app.require_subcommand(1);

  CommonOptions sim_opts;
  std::string sim_emit;
  CLI::App* simulate = app.add_subcommand("simulate", "run one protocol exchange");
  add_instance_flags(simulate, sim_opts, true);
  simulate->add_option("--emit", sim_emit, "write the full transcript to a file");

  CommonOptions atk_opts;
  std::string atk_attack = "both";
  std::string atk_transcript;
  CLI::App* attack = app.add_subcommand("attack", "run the attacks on one instance");
  add_instance_flags(attack, atk_opts, true);
  attack->add_option("--attack", atk_attack, "attack selection")
      ->check(CLI::IsMember({"fba", "fba2", "both"}));
  attack->add_option("--transcript", atk_transcript,
                     "attack a stored transcript instead of a fresh instance");

  aag::BenchConfig bench_config;
  std::string bench_attack = "both";
  std::string bench_format = "table";
  std::string bench_emit;
  CLI::App* bench = app.add_subcommand("bench", "reproduce the success-rate tables");
  bench->add_option("--platform", bench_config.fixture_paths,
                    "platform names or fixture paths (repeatable)")
      ->required();
  bench->add_option("--seed", bench_config.base_seed, "base seed; trial i uses seed + i");
  bench->add_option("--n1", bench_config.alice_tuple_size, "Alice tuple size");
  bench->add_option("--n2", bench_config.bob_tuple_size, "Bob tuple size");
  bench->add_option("-L,--word-length", bench_config.word_lengths,
                    "private word lengths (repeatable)");
  bench->add_option("--trials", bench_config.trials, "trials per row");
  bench->add_option("--attack", bench_attack, "attack selection")
      ->check(CLI::IsMember({"fba", "fba2", "both"}));
  bench->add_option("--gen-word-length", bench_config.gen_word_length,
                    "letters per public tuple element");
  bench->add_option("--format", bench_format, "output format")
      ->check(CLI::IsMember({"table", "csv"}));
  bench->add_option("--emit", bench_emit, "also write the output to a file");
  bench->add_option("--timeout-secs", bench_config.timeout_secs,
                    "per-trial wall-clock budget; overruns count as failures");

  std::string platform_name;
  CLI::App* platform = app.add_subcommand("platform", "inspect a platform fixture");
  platform->add_option("--platform", platform_name, "platform name or fixture path")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return cmd_simulate(sim_opts, sim_emit);
    if (attack->parsed()) return cmd_attack(atk_opts, atk_attack, atk_transcript);
    if (bench->parsed()) {
      bench_config.run_fba = bench_attack == "fba" || bench_attack == "both";
      bench_config.run_fba2 = bench_attack == "fba2" || bench_attack == "both";
      return cmd_bench(bench_config, bench_format, bench_emit);
    }
    if (platform->parsed()) return cmd_platform(platform_name);
  } catch (const aag::FixtureError& e) {
    std::cerr << "fixture error: " << e.what() << "\n";
    return kExitFixture;
  } catch (const aag::InconsistentSystemError& e) {
    std::cerr << "attack error: " << e.what() << "\n";
    return kExitAttack;
  } catch (const aag::NoInvertibleCandidateError& e) {
    std::cerr << "attack error: " << e.what() << "\n";
    return kExitAttack;
  } catch (const std::logic_error& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
