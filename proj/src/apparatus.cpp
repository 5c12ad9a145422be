#include "amech/apparatus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace amech {

Apparatus::Apparatus(std::uint32_t p, std::uint32_t block_edge) : p_(p), edge_(block_edge) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (block_edge < 1 || block_edge > p)
    throw std::invalid_argument("block edge must lie in [1, p]");
  grid_dim_ = (p + edge_ - 1) / edge_;
}

std::uint32_t Apparatus::block_width(std::uint32_t b) const {
  if (b >= grid_dim_) throw std::out_of_range("block index outside the grid");
  return std::min(edge_, p_ - edge_ * b);
}

BlockCounts::BlockCounts(std::uint32_t grid_dim)
    : grid_dim_(grid_dim), counts_(static_cast<std::size_t>(grid_dim) * grid_dim, 0) {}

std::size_t BlockCounts::index(std::uint32_t bx, std::uint32_t by) const {
  if (bx >= grid_dim_ || by >= grid_dim_) throw std::out_of_range("block index outside the grid");
  return static_cast<std::size_t>(by) * grid_dim_ + bx;
}

std::uint64_t BlockCounts::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

BlockCounts coarse_grain(const Configuration& c, const Apparatus& a) {
  if (c.prime() != a.prime()) throw std::invalid_argument("apparatus and configuration disagree on p");
  BlockCounts m(a.grid_dim());
  const std::uint32_t e = a.block_edge();
  for (const Particle& q : c.particles()) ++m.at(q.pos.x.value / e, q.pos.y.value / e);
  return m;
}

double log2_factorial(std::uint64_t n) {
  double sum = 0.0;
  for (std::uint64_t k = 2; k <= n; ++k) sum += std::log2(static_cast<double>(k));
  return sum;
}

EntropyBits macrostate_entropy(const BlockCounts& m, const Apparatus& a) {
  if (m.grid_dim() != a.grid_dim()) throw std::invalid_argument("block grid size mismatch");
  const std::uint64_t n = m.total();
  double s = 2.0 * static_cast<double>(n) * std::log2(static_cast<double>(a.prime()));
  s += log2_factorial(n);
  for (std::uint32_t by = 0; by < m.grid_dim(); ++by) {
    for (std::uint32_t bx = 0; bx < m.grid_dim(); ++bx) {
      const std::uint64_t nj = m.at(bx, by);
      if (nj == 0) continue;
      s += static_cast<double>(nj) * std::log2(static_cast<double>(a.real_cells(bx, by)));
      s -= log2_factorial(nj);
    }
  }
  return EntropyBits{s};
}

double microstate_count_ld(const BlockCounts& m, const Apparatus& a) {
  return macrostate_entropy(m, a).bits;
}

ReferenceEntropies reference_entropies(std::uint32_t p, std::uint64_t n, std::uint32_t region_side) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const double nd = static_cast<double>(n);
  const double ldp = std::log2(static_cast<double>(p));
  ReferenceEntropies r;
  r.blind = {4.0 * nd * ldp};
  r.arranged_pattern = {2.0 * nd * ldp + log2_factorial(n)};
  r.within_region = {2.0 * nd * ldp + 2.0 * nd * std::log2(static_cast<double>(region_side))};
  r.labeled_positions = {2.0 * nd * ldp};
  r.exact = {0.0};
  return r;
}

Configuration sample_microstate(const BlockCounts& m, const Apparatus& a, Rng& rng) {
  if (m.grid_dim() != a.grid_dim()) throw std::invalid_argument("block grid size mismatch");
  const std::uint32_t p = a.prime();
  const std::uint32_t e = a.block_edge();
  std::vector<Particle> ps;
  ps.reserve(m.total());
  std::int64_t label = 0;
  for (std::uint32_t bx = 0; bx < a.grid_dim(); ++bx) {
    for (std::uint32_t by = 0; by < a.grid_dim(); ++by) {
      const std::uint64_t nj = m.at(bx, by);
      for (std::uint64_t i = 0; i < nj; ++i) {
        Particle q;
        q.label = label++;
        q.pos.x = Residue{static_cast<std::uint32_t>(bx * e + rng.below(a.block_width(bx)))};
        q.pos.y = Residue{static_cast<std::uint32_t>(by * e + rng.below(a.block_width(by)))};
        q.vel.x = Residue{static_cast<std::uint32_t>(rng.below(p))};
        q.vel.y = Residue{static_cast<std::uint32_t>(rng.below(p))};
        ps.push_back(q);
      }
    }
  }
  return Configuration(p, std::move(ps));
}

}  // namespace amech
