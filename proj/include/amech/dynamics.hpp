#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "amech/field.hpp"

namespace amech {

struct Particle {
  std::int64_t label = 0;
  Vec2 pos;
  Vec2 vel;

  friend bool operator==(const Particle&, const Particle&) = default;
};

/// A microstate: labeled particles on the p x p board.
///
/// Particle order is part of the state and is never changed by evolution, so
/// the particle with label i keeps its index. Several particles may share a
/// cell. Equality is exact per-index comparison of label, position and
/// velocity, plus equality of p.
class Configuration {
 public:
  /// Empty configuration over F_p. Throws std::invalid_argument if p is not prime.
  explicit Configuration(std::uint32_t p);

  /// Throws std::invalid_argument on out-of-range coordinates or duplicate labels.
  Configuration(std::uint32_t p, std::vector<Particle> particles);

  std::uint32_t prime() const { return field_->prime(); }
  const FieldContext& field() const { return *field_; }

  std::size_t size() const { return particles_.size(); }
  bool empty() const { return particles_.empty(); }

  std::span<const Particle> particles() const { return particles_; }
  /// Mutable view for the evolution kernels. Coordinates written through it
  /// must stay in [0, p); labels must not be touched.
  std::span<Particle> particles() { return particles_; }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.prime() == b.prime() && a.particles_ == b.particles_;
  }

 private:
  std::shared_ptr<const FieldContext> field_;
  std::vector<Particle> particles_;
};

// In-place kernels. The value-returning operations below are thin wrappers.
void apply_motion(Configuration& c);
void apply_inverse_motion(Configuration& c);
void apply_scattering(Configuration& c);
void apply_stage(Configuration& c);
void apply_inverse_stage(Configuration& c);
void apply_reverse_velocities(Configuration& c);

/// Every position advances by its velocity.
Configuration motion_phase(Configuration c);

/// In every cell holding 1 <= k < p particles each velocity v becomes
/// 2*avg - v, where avg is the F_p mean velocity of the cell. Cells with
/// k >= p are left alone. The update is independent per cell, so the result
/// does not depend on iteration order.
Configuration scattering_phase(Configuration c);

/// Motion, Scattering, Motion.
Configuration stage(Configuration c);
Configuration advance_stages(Configuration c, std::uint64_t n);
/// One step is p stages.
Configuration advance_steps(Configuration c, std::uint64_t n);

Configuration reverse_velocities(Configuration c);

/// Exact inverse of stage(): inverse motion, scattering (self-inverse),
/// inverse motion.
Configuration inverse_stage(Configuration c);

/// Sum of all velocities in F_p.
Vec2 total_momentum(const Configuration& c);

namespace reference {

/// Straightforward scattering that groups particles by cell in an ordered
/// map, kept as a cross-check for the sorted-run kernel.
Configuration scattering_phase(Configuration c);

/// stage() built from reference::scattering_phase.
Configuration stage(Configuration c);

}  // namespace reference

}  // namespace amech
