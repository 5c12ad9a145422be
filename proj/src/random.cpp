#include "amech/random.hpp"

#include <stdexcept>

namespace amech {

namespace {

Residue draw(Rng& rng, std::uint32_t p) {
  return Residue{static_cast<std::uint32_t>(rng.below(p))};
}

}  // namespace

Configuration random_configuration(std::uint32_t p, std::size_t n, Rng& rng) {
  std::vector<Particle> ps;
  ps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Particle q;
    q.label = static_cast<std::int64_t>(i);
    q.pos = {draw(rng, p), draw(rng, p)};
    q.vel = {draw(rng, p), draw(rng, p)};
    ps.push_back(q);
  }
  return Configuration(p, std::move(ps));
}

Configuration random_block(std::uint32_t p, std::uint32_t k, Rng& rng) {
  if (k > p) throw std::invalid_argument("block does not fit on the board");
  std::vector<Particle> ps;
  ps.reserve(static_cast<std::size_t>(k) * k);
  for (std::uint32_t i = 0; i < k * k; ++i) {
    Particle q;
    q.label = i;
    q.pos = {Residue{i / k}, Residue{i % k}};
    q.vel = {draw(rng, p), draw(rng, p)};
    ps.push_back(q);
  }
  return Configuration(p, std::move(ps));
}

}  // namespace amech
