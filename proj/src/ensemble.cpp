#include "amech/ensemble.hpp"

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "amech/experiments.hpp"

namespace amech {

int ensemble_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Configuration> advance_ensemble(std::vector<Configuration> ensemble,
                                            std::uint64_t steps) {
  const auto n = static_cast<std::ptrdiff_t>(ensemble.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    Configuration& c = ensemble[static_cast<std::size_t>(i)];
    const std::uint64_t stages = steps * c.prime();
    for (std::uint64_t s = 0; s < stages; ++s) apply_stage(c);
  }
  return ensemble;
}

std::vector<Configuration> advance_ensemble_serial(std::vector<Configuration> ensemble,
                                                   std::uint64_t steps) {
  for (Configuration& c : ensemble) c = advance_steps(std::move(c), steps);
  return ensemble;
}

std::vector<std::uint8_t> roundtrip_ensemble(std::span<const Configuration> ensemble,
                                             std::uint64_t steps) {
  std::vector<std::uint8_t> ok(ensemble.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(ensemble.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    ok[k] = roundtrip_holds(ensemble[k], steps) ? 1 : 0;
  }
  return ok;
}

std::vector<std::uint8_t> roundtrip_ensemble_serial(std::span<const Configuration> ensemble,
                                                    std::uint64_t steps) {
  std::vector<std::uint8_t> ok;
  ok.reserve(ensemble.size());
  for (const Configuration& c : ensemble) ok.push_back(roundtrip_holds(c, steps) ? 1 : 0);
  return ok;
}

std::vector<EntropyBits> ensemble_entropy(std::span<const Configuration> ensemble,
                                          const Apparatus& a) {
  std::vector<EntropyBits> out(ensemble.size());
  const auto n = static_cast<std::ptrdiff_t>(ensemble.size());
#pragma omp parallel for
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = macrostate_entropy(coarse_grain(ensemble[k], a), a);
  }
  return out;
}

}  // namespace amech
