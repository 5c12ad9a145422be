#include "amech/dynamics.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>

namespace amech {

Configuration::Configuration(std::uint32_t p) : field_(FieldContext::shared(p)) {}

Configuration::Configuration(std::uint32_t p, std::vector<Particle> particles)
    : field_(FieldContext::shared(p)), particles_(std::move(particles)) {
  std::unordered_set<std::int64_t> labels;
  labels.reserve(particles_.size());
  for (const Particle& q : particles_) {
    for (Residue r : {q.pos.x, q.pos.y, q.vel.x, q.vel.y})
      if (r.value >= p)
        throw std::invalid_argument("particle " + std::to_string(q.label) +
                                    " has a coordinate outside [0, p)");
    if (!labels.insert(q.label).second)
      throw std::invalid_argument("duplicate particle label " + std::to_string(q.label));
  }
}

void apply_motion(Configuration& c) {
  const FieldContext& f = c.field();
  for (Particle& q : c.particles()) q.pos = f.add(q.pos, q.vel);
}

void apply_inverse_motion(Configuration& c) {
  const FieldContext& f = c.field();
  for (Particle& q : c.particles()) q.pos = f.sub(q.pos, q.vel);
}

void apply_scattering(Configuration& c) {
  const FieldContext& f = c.field();
  const std::uint64_t p = f.prime();
  std::span<Particle> ps = c.particles();
  if (ps.size() < 2) return;

  // Sort (cell, index) pairs so each occupied cell becomes one contiguous run.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> order(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    order[i] = {ps[i].pos.y.value * p + ps[i].pos.x.value, static_cast<std::uint32_t>(i)};
  std::sort(order.begin(), order.end());

  std::size_t begin = 0;
  while (begin < order.size()) {
    std::size_t end = begin + 1;
    while (end < order.size() && order[end].first == order[begin].first) ++end;
    const std::size_t k = end - begin;
    // A lone particle is reflected onto itself; k >= p is excluded by the rules.
    if (k >= 2 && k < p) {
      std::uint64_t sx = 0, sy = 0;
      for (std::size_t j = begin; j < end; ++j) {
        sx += ps[order[j].second].vel.x.value;
        sy += ps[order[j].second].vel.y.value;
      }
      const Residue inv_k = f.inv(Residue{static_cast<std::uint32_t>(k)});
      const Vec2 avg = f.scale({f.reduce(static_cast<std::int64_t>(sx % p)),
                                f.reduce(static_cast<std::int64_t>(sy % p))},
                               inv_k);
      const Vec2 twice = f.add(avg, avg);
      for (std::size_t j = begin; j < end; ++j) {
        Particle& q = ps[order[j].second];
        q.vel = f.sub(twice, q.vel);
      }
    }
    begin = end;
  }
}

void apply_stage(Configuration& c) {
  apply_motion(c);
  apply_scattering(c);
  apply_motion(c);
}

void apply_inverse_stage(Configuration& c) {
  apply_inverse_motion(c);
  apply_scattering(c);
  apply_inverse_motion(c);
}

void apply_reverse_velocities(Configuration& c) {
  const FieldContext& f = c.field();
  for (Particle& q : c.particles()) q.vel = f.neg(q.vel);
}

Configuration motion_phase(Configuration c) {
  apply_motion(c);
  return c;
}

Configuration scattering_phase(Configuration c) {
  apply_scattering(c);
  return c;
}

Configuration stage(Configuration c) {
  apply_stage(c);
  return c;
}

Configuration advance_stages(Configuration c, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) apply_stage(c);
  return c;
}

Configuration advance_steps(Configuration c, std::uint64_t n) {
  const std::uint64_t stages = n * c.prime();
  return advance_stages(std::move(c), stages);
}

Configuration reverse_velocities(Configuration c) {
  apply_reverse_velocities(c);
  return c;
}

Configuration inverse_stage(Configuration c) {
  apply_inverse_stage(c);
  return c;
}

Vec2 total_momentum(const Configuration& c) {
  const FieldContext& f = c.field();
  Vec2 sum{};
  for (const Particle& q : c.particles()) sum = f.add(sum, q.vel);
  return sum;
}

namespace reference {

Configuration scattering_phase(Configuration c) {
  const FieldContext& f = c.field();
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::size_t>> cells;
  std::span<Particle> ps = c.particles();
  for (std::size_t i = 0; i < ps.size(); ++i)
    cells[{ps[i].pos.x.value, ps[i].pos.y.value}].push_back(i);

  for (const auto& [cell, members] : cells) {
    if (members.size() >= f.prime()) continue;
    std::vector<Vec2> vs;
    for (std::size_t i : members) vs.push_back(ps[i].vel);
    const Vec2 avg = f.vec_avg(vs);
    for (std::size_t i : members) {
      // v' = avg - (v - avg)
      ps[i].vel = f.sub(avg, f.sub(ps[i].vel, avg));
    }
  }
  return c;
}

Configuration stage(Configuration c) {
  return motion_phase(reference::scattering_phase(motion_phase(std::move(c))));
}

}  // namespace reference

}  // namespace amech
