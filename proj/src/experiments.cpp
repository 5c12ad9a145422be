#include "amech/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace amech {

EvolutionRun run_evolution(Configuration initial, const Apparatus& a,
                           std::vector<std::uint64_t> at_steps) {
  std::sort(at_steps.begin(), at_steps.end());
  at_steps.erase(std::unique(at_steps.begin(), at_steps.end()), at_steps.end());

  EvolutionRun run{{}, std::move(initial)};
  Configuration& c = run.final_state;
  const std::uint64_t last = at_steps.empty() ? 0 : at_steps.back();
  auto next = at_steps.begin();
  for (std::uint64_t t = 0;; ++t) {
    if (next != at_steps.end() && *next == t) {
      run.frames.push_back({t, macrostate_entropy(coarse_grain(c, a), a), render_board(c)});
      ++next;
    }
    if (t >= last) break;
    for (std::uint32_t s = 0; s < c.prime(); ++s) apply_stage(c);
  }
  return run;
}

std::string format_frame(const Frame& f) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "====== T=%llu S=%.6f bit\n",
                static_cast<unsigned long long>(f.step), f.entropy.bits);
  return buf + f.board;
}

std::vector<EntropySample> entropy_series(const Configuration& initial, const Apparatus& a,
                                          std::uint64_t forward, std::uint64_t backward,
                                          bool per_stage) {
  auto entropy = [&](const Configuration& c) { return macrostate_entropy(coarse_grain(c, a), a); };
  const std::uint64_t stride = per_stage ? 1 : initial.prime();
  const std::uint64_t mult = per_stage ? initial.prime() : 1;

  std::vector<EntropySample> past;
  Configuration c = reverse_velocities(initial);
  for (std::uint64_t k = 1; k <= backward * mult; ++k) {
    for (std::uint64_t s = 0; s < stride; ++s) apply_stage(c);
    past.push_back({-static_cast<std::int64_t>(k), entropy(c)});
  }

  std::vector<EntropySample> out(past.rbegin(), past.rend());
  c = initial;
  out.push_back({0, entropy(c)});
  for (std::uint64_t k = 1; k <= forward * mult; ++k) {
    for (std::uint64_t s = 0; s < stride; ++s) apply_stage(c);
    out.push_back({static_cast<std::int64_t>(k), entropy(c)});
  }
  return out;
}

GrowthSummary summarize_growth(const std::vector<EntropySample>& series, std::int64_t from,
                               std::int64_t to) {
  GrowthSummary g;
  bool have_zero = false;
  double sum_f = 0, sum_p = 0;
  std::size_t n_f = 0, n_p = 0;
  g.min = {1e300};
  g.max = {-1e300};
  for (const EntropySample& s : series) {
    g.min = std::min(g.min, s.entropy);
    g.max = std::max(g.max, s.entropy);
    if (s.step == 0) {
      g.at_zero = s.entropy;
      have_zero = true;
    } else if (s.step >= from && s.step <= to) {
      sum_f += s.entropy.bits;
      ++n_f;
    } else if (-s.step >= from && -s.step <= to) {
      sum_p += s.entropy.bits;
      ++n_p;
    }
  }
  if (!have_zero) throw std::invalid_argument("series has no sample at index 0");
  g.mean_future = n_f ? sum_f / static_cast<double>(n_f) : 0.0;
  g.mean_past = n_p ? sum_p / static_cast<double>(n_p) : 0.0;
  return g;
}

bool roundtrip_holds(const Configuration& c, std::uint64_t steps) {
  Configuration d = advance_steps(c, steps);
  apply_reverse_velocities(d);
  d = advance_steps(std::move(d), steps);
  apply_reverse_velocities(d);
  return d == c;
}

std::optional<std::uint64_t> first_recurrence(const Configuration& c, std::uint64_t horizon) {
  Configuration d = c;
  for (std::uint64_t t = 1; t <= horizon; ++t) {
    for (std::uint32_t s = 0; s < d.prime(); ++s) apply_stage(d);
    if (d == c) return t;
  }
  return std::nullopt;
}

}  // namespace amech
