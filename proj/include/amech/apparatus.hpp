#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "amech/dynamics.hpp"
#include "amech/random.hpp"

namespace amech {

/// Entropy in bits (base-2 logarithm of a microstate count).
struct EntropyBits {
  double bits = 0.0;

  friend auto operator<=>(EntropyBits, EntropyBits) = default;
};

/// Block-counting measuring device.
///
/// The p x p board is padded up to a multiple of the block edge and cut into
/// grid_dim x grid_dim square blocks. Padding cells can hold no particles, so
/// a block's number of real cells is w(bx) * w(by) with
/// w(b) = min(edge, p - edge * b). For p = 19 and edge 3 that gives 9 in the
/// interior, 3 along the last block row and column, and 1 in the corner.
class Apparatus {
 public:
  /// Throws std::invalid_argument unless p is prime and 1 <= block_edge <= p.
  explicit Apparatus(std::uint32_t p, std::uint32_t block_edge = 3);

  std::uint32_t prime() const { return p_; }
  std::uint32_t block_edge() const { return edge_; }
  std::uint32_t grid_dim() const { return grid_dim_; }

  /// Width of block column (or row) b in real cells.
  std::uint32_t block_width(std::uint32_t b) const;
  std::uint64_t real_cells(std::uint32_t bx, std::uint32_t by) const {
    return static_cast<std::uint64_t>(block_width(bx)) * block_width(by);
  }

 private:
  std::uint32_t p_;
  std::uint32_t edge_;
  std::uint32_t grid_dim_;
};

/// Particle counts per block, indexed (bx, by).
class BlockCounts {
 public:
  explicit BlockCounts(std::uint32_t grid_dim);

  std::uint32_t grid_dim() const { return grid_dim_; }
  std::uint64_t at(std::uint32_t bx, std::uint32_t by) const { return counts_[index(bx, by)]; }
  std::uint64_t& at(std::uint32_t bx, std::uint32_t by) { return counts_[index(bx, by)]; }
  std::uint64_t total() const;

  /// Row-major by block row: element (by * grid_dim + bx).
  const std::vector<std::uint64_t>& raw() const { return counts_; }

  friend bool operator==(const BlockCounts&, const BlockCounts&) = default;

 private:
  std::size_t index(std::uint32_t bx, std::uint32_t by) const;

  std::uint32_t grid_dim_;
  std::vector<std::uint64_t> counts_;
};

/// Counts particles per block. Labels and velocities are dropped.
BlockCounts coarse_grain(const Configuration& c, const Apparatus& a);

/// ld(n!) by direct summation of ld k.
double log2_factorial(std::uint64_t n);

/// ld of the number of microstates compatible with the measured counts:
///   2N ld p + sum_j N_j ld|b_j| + ld N! - sum_j ld N_j!
EntropyBits macrostate_entropy(const BlockCounts& m, const Apparatus& a);

/// Same number as macrostate_entropy, as a count: 2^result microstates.
double microstate_count_ld(const BlockCounts& m, const Apparatus& a);

/// Closed-form entropies of progressively more detailed descriptions of n
/// labeled particles on the p x p board.
struct ReferenceEntropies {
  EntropyBits blind;              ///< nothing known but n: 4n ld p
  EntropyBits arranged_pattern;   ///< known occupied cells, labels free: 2n ld p + ld n!
  EntropyBits within_region;      ///< all in a known r x r region: 2n ld p + n ld r^2
  EntropyBits labeled_positions;  ///< every label's cell known: 2n ld p
  EntropyBits exact;              ///< full microstate known: 0
};

ReferenceEntropies reference_entropies(std::uint32_t p, std::uint64_t n,
                                       std::uint32_t region_side = 9);

/// Random microstate compatible with m: N_j particles placed uniformly on
/// block j's real cells, velocities uniform over F_p^2. Blocks are visited
/// bx-major; labels follow generation order. Draw order per particle is
/// x, y, vx, vy.
Configuration sample_microstate(const BlockCounts& m, const Apparatus& a, Rng& rng);

}  // namespace amech
