#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amech/apparatus.hpp"
#include "amech/dynamics.hpp"
#include "amech/state_io.hpp"

namespace amech {

struct Frame {
  std::uint64_t step = 0;
  EntropyBits entropy;
  std::string board;
};

struct EvolutionRun {
  std::vector<Frame> frames;
  Configuration final_state;
};

/// Evolves step by step up to the largest requested step, capturing the
/// board and S_A at each requested step. Duplicates in `at_steps` are ignored.
EvolutionRun run_evolution(Configuration initial, const Apparatus& a,
                           std::vector<std::uint64_t> at_steps);

/// "====== T=<step> S=<bits> bit" followed by the board.
std::string format_frame(const Frame& f);

/// S_A sampled once per step (or once per stage with per_stage) for
/// `forward` steps into the future and `backward` steps into the past.
/// The past is reached by reversing all velocities and running forward;
/// those samples get negative indices. Result is ordered by index.
std::vector<EntropySample> entropy_series(const Configuration& initial, const Apparatus& a,
                                          std::uint64_t forward, std::uint64_t backward,
                                          bool per_stage = false);

struct GrowthSummary {
  EntropyBits at_zero;
  double mean_future = 0.0;
  double mean_past = 0.0;
  EntropyBits min;
  EntropyBits max;
};

/// Mean of S over |index| in [from, to] for each direction, plus S(0) and
/// the extremes over the whole series. Throws if index 0 is missing.
GrowthSummary summarize_growth(const std::vector<EntropySample>& series, std::int64_t from,
                               std::int64_t to);

/// Evolve, reverse, evolve, reverse; true if the start state comes back exactly.
bool roundtrip_holds(const Configuration& c, std::uint64_t steps);

/// First step count T in [1, horizon] with advance_steps(c, T) == c.
std::optional<std::uint64_t> first_recurrence(const Configuration& c, std::uint64_t horizon);

}  // namespace amech
