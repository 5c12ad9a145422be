// Command-line driver for the algebraic-mechanics lattice gas.
//
// Exit status: 0 on success (or when the checked property holds),
// 1 when a checked property is violated, 2 on usage, parse or I/O errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "amech/apparatus.hpp"
#include "amech/dynamics.hpp"
#include "amech/ensemble.hpp"
#include "amech/experiments.hpp"
#include "amech/fixtures.hpp"
#include "amech/random.hpp"
#include "amech/state_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

struct InputOptions {
  std::uint32_t p = 19;
  std::string input;
  std::string fixture;
  std::uint32_t random_block = 0;
  std::uint64_t seed = 1;
  std::uint32_t block_edge = 3;

  bool explicit_source() const { return !input.empty() || !fixture.empty() || random_block > 0; }
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

void add_input_options(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("--p", o.p, "Prime modulus (board is p x p)")->capture_default_str();
  auto* in = cmd->add_option("--input", o.input, "Configuration file");
  auto* fx = cmd->add_option("--fixture", o.fixture, "Built-in configuration")
                 ->check(CLI::IsMember({"a0", "a1"}));
  auto* rb = cmd->add_option("--random-block", o.random_block,
                             "k x k block in the top-left corner with seeded random velocities");
  in->excludes(fx)->excludes(rb);
  fx->excludes(rb);
  cmd->add_option("--seed", o.seed, "Seed for randomized inputs")->capture_default_str();
  cmd->add_option("--block-edge", o.block_edge, "Edge length of the measuring blocks")
      ->capture_default_str();
}

amech::Configuration load(const InputOptions& o) {
  if (o.random_block > 0) {
    amech::Rng rng(o.seed);
    return amech::random_block(o.p, o.random_block, rng);
  }
  if (!o.input.empty()) {
    // The file header fixes p; --p is not consulted.
    try {
      return amech::parse_config(read_file(o.input));
    } catch (const amech::ParseError& e) {
      throw UsageError(o.input + ": " + e.what());
    }
  }
  amech::Configuration c = amech::fixture(o.fixture.empty() ? "a0" : o.fixture);
  if (c.prime() != o.p)
    throw UsageError("fixture is defined for p=" + std::to_string(c.prime()) + ", not p=" +
                     std::to_string(o.p));
  return c;
}

amech::BlockCounts load_counts(const std::string& literal, const std::string& file,
                               const amech::Apparatus& a) {
  if (!literal.empty()) return amech::parse_block_counts(literal, a);
  return amech::parse_block_counts(read_file(file), a);
}

std::string format_bits(double bits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", bits);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible lattice gas over F_p: evolution, entropy and reversal experiments"};
  app.require_subcommand(1);

  InputOptions io;
  std::string out_path;

  // evolve
  auto* evolve = app.add_subcommand("evolve", "Render boards and S_A along the evolution");
  add_input_options(evolve, io);
  std::uint64_t evolve_steps = 10;
  std::vector<std::uint64_t> at;
  bool evolve_reverse = false;
  evolve->add_option("--steps", evolve_steps, "Show T = 0..N")->capture_default_str();
  evolve->add_option("--at", at, "Show only these T (comma separated)")->delimiter(',');
  evolve->add_flag("--reverse", evolve_reverse, "Reverse all velocities before evolving");
  evolve->add_option("--out", out_path, "Write the final configuration here");

  // entropy-series
  auto* series = app.add_subcommand("entropy-series", "CSV of S_A toward future and past");
  add_input_options(series, io);
  std::uint64_t fwd = 50, back = 50;
  bool per_stage = false;
  series->add_option("--steps", fwd, "Steps toward the future")->capture_default_str();
  series->add_option("--steps-back", back, "Steps toward the past")->capture_default_str();
  series->add_flag("--per-stage", per_stage, "Sample every stage instead of every step");
  series->add_option("--out", out_path, "CSV path (default: standard output)");

  // demo
  auto* demo = app.add_subcommand("demo", "Evolve, reverse, evolve, reverse; check exact return");
  add_input_options(demo, io);
  std::uint64_t demo_steps = 50;
  std::size_t sweep = 0, sweep_particles = 81;
  demo->add_option("--steps", demo_steps)->capture_default_str();
  demo->add_option("--sweep", sweep, "Also check this many seeded random configurations");
  demo->add_option("--particles", sweep_particles, "Particles per random configuration")
      ->capture_default_str();

  // recur
  auto* recur = app.add_subcommand("recur", "Search for an exact return to the initial state");
  add_input_options(recur, io);
  std::uint64_t horizon = 1000;
  bool expect_none = false;
  recur->add_option("--horizon", horizon, "Steps to scan")->capture_default_str();
  recur->add_flag("--expect-none", expect_none, "Exit 1 if a recurrence is found");

  // sample
  auto* sample = app.add_subcommand(
      "sample", "Random microstate with given block counts (default: counts of the input)");
  add_input_options(sample, io);
  std::string counts_literal, counts_file;
  auto* cl = sample->add_option("--counts", counts_literal,
                                "Block counts, rows separated by ';', entries by ','");
  auto* cf = sample->add_option("--counts-file", counts_file, "Block counts file");
  cl->excludes(cf);
  sample->add_option("--out", out_path, "Write the configuration here");

  // ref-entropy
  auto* ref = app.add_subcommand("ref-entropy", "Closed-form entropies of n labeled particles");
  add_input_options(ref, io);
  std::uint64_t ref_n = 81;
  std::uint32_t region = 9;
  ref->add_option("--n", ref_n, "Number of particles")->capture_default_str();
  ref->add_option("--region", region, "Side of the square region description")
      ->capture_default_str();
  auto* rcl = ref->add_option("--counts", counts_literal, "Block counts for the measured entry");
  auto* rcf = ref->add_option("--counts-file", counts_file, "Block counts file");
  rcl->excludes(rcf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*evolve) {
      amech::Configuration c = load(io);
      if (evolve_reverse) c = amech::reverse_velocities(std::move(c));
      if (at.empty())
        for (std::uint64_t t = 0; t <= evolve_steps; ++t) at.push_back(t);
      const amech::Apparatus a(c.prime(), io.block_edge);
      auto run = amech::run_evolution(std::move(c), a, at);
      for (const auto& f : run.frames) std::cout << amech::format_frame(f);
      if (!out_path.empty()) write_file(out_path, amech::serialize_config(run.final_state));
      return kOk;
    }

    if (*series) {
      const amech::Configuration c = load(io);
      const amech::Apparatus a(c.prime(), io.block_edge);
      const auto csv = amech::emit_entropy_csv(amech::entropy_series(c, a, fwd, back, per_stage));
      if (out_path.empty())
        std::cout << csv;
      else
        write_file(out_path, csv);
      return kOk;
    }

    if (*demo) {
      const amech::Configuration c = load(io);
      bool all = amech::roundtrip_holds(c, demo_steps);
      std::cout << "round trip over " << demo_steps << " steps: " << (all ? "exact" : "MISMATCH")
                << "\n";
      if (sweep > 0) {
        amech::Rng rng(io.seed);
        std::vector<amech::Configuration> ensemble;
        ensemble.reserve(sweep);
        for (std::size_t i = 0; i < sweep; ++i)
          ensemble.push_back(amech::random_configuration(io.p, sweep_particles, rng));
        const auto ok = amech::roundtrip_ensemble(ensemble, demo_steps);
        std::size_t good = 0;
        for (auto v : ok) good += v;
        std::cout << "random sweep: " << good << "/" << sweep << " exact\n";
        all = all && good == sweep;
      }
      return all ? kOk : kViolated;
    }

    if (*recur) {
      const amech::Configuration c = load(io);
      const auto t = amech::first_recurrence(c, horizon);
      if (t) {
        std::cout << "first recurrence at step " << *t << "\n";
        return expect_none ? kViolated : kOk;
      }
      std::cout << "no recurrence within " << horizon << " steps\n";
      return kOk;
    }

    if (*sample) {
      const amech::Apparatus a(io.p, io.block_edge);
      const amech::BlockCounts m =
          counts_literal.empty() && counts_file.empty()
              ? amech::coarse_grain(load(io), a)
              : load_counts(counts_literal, counts_file, a);
      amech::Rng rng(io.seed);
      const amech::Configuration c = amech::sample_microstate(m, a, rng);
      const std::string s = format_bits(amech::macrostate_entropy(m, a).bits);
      if (out_path.empty()) {
        std::cout << amech::serialize_config(c) << "# S_A=" << s << " bit\n";
      } else {
        write_file(out_path, amech::serialize_config(c));
        std::cout << "S_A=" << s << " bit\n";
      }
      return kOk;
    }

    if (*ref) {
      const auto r = amech::reference_entropies(io.p, ref_n, region);
      auto row = [](const char* name, amech::EntropyBits s) {
        std::printf("%-20s %14.6f bit\n", name, s.bits);
      };
      std::printf("p=%u n=%llu\n", io.p, static_cast<unsigned long long>(ref_n));
      row("blind", r.blind);
      row("arranged-pattern", r.arranged_pattern);
      row("within-region", r.within_region);
      row("labeled-positions", r.labeled_positions);
      row("exact", r.exact);
      if (!counts_literal.empty() || !counts_file.empty() || io.explicit_source()) {
        const amech::Apparatus a(io.p, io.block_edge);
        const amech::BlockCounts m = !counts_literal.empty() || !counts_file.empty()
                                         ? load_counts(counts_literal, counts_file, a)
                                         : amech::coarse_grain(load(io), a);
        row("block-counts", amech::macrostate_entropy(m, a));
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
