#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "amech/apparatus.hpp"
#include "amech/dynamics.hpp"

namespace amech {

// Ensemble kernels. Each member evolves independently, so members are
// distributed over OpenMP threads when the library is built with OpenMP.
// The *_serial variants are the plain loops the parallel versions must
// reproduce exactly.

int ensemble_threads();

std::vector<Configuration> advance_ensemble(std::vector<Configuration> ensemble,
                                            std::uint64_t steps);
std::vector<Configuration> advance_ensemble_serial(std::vector<Configuration> ensemble,
                                                   std::uint64_t steps);

/// Per member: evolve `steps` steps, reverse velocities, evolve `steps`
/// steps, reverse again, and compare with the start. 1 if equal.
std::vector<std::uint8_t> roundtrip_ensemble(std::span<const Configuration> ensemble,
                                             std::uint64_t steps);
std::vector<std::uint8_t> roundtrip_ensemble_serial(std::span<const Configuration> ensemble,
                                                    std::uint64_t steps);

std::vector<EntropyBits> ensemble_entropy(std::span<const Configuration> ensemble,
                                          const Apparatus& a);

}  // namespace amech
