#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace amech {

/// An element of F_p. The modulus lives in the FieldContext that produced it.
struct Residue {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(Residue, Residue) = default;
};

/// A pair of residues: a position (x, y) or a velocity (vx, vy).
struct Vec2 {
  Residue x;
  Residue y;

  friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
};

/// Thrown by inv/div when the divisor is zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in F_p") {}
};

bool is_prime(std::uint64_t n);

/// Arithmetic modulo a prime p with a precomputed inverse table.
/// Immutable after construction; share freely between threads.
class FieldContext {
 public:
  static constexpr std::uint32_t kMaxPrime = 65521;

  /// Throws std::invalid_argument if p is not a prime in [2, kMaxPrime].
  explicit FieldContext(std::uint32_t p);

  /// Process-wide cached context for p.
  static std::shared_ptr<const FieldContext> shared(std::uint32_t p);

  std::uint32_t prime() const { return p_; }

  bool contains(std::int64_t v) const { return v >= 0 && v < static_cast<std::int64_t>(p_); }

  /// Reduces any integer into [0, p).
  Residue reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Residue{static_cast<std::uint32_t>(r)};
  }

  Residue add(Residue a, Residue b) const {
    std::uint32_t s = a.value + b.value;
    return Residue{s >= p_ ? s - p_ : s};
  }
  Residue sub(Residue a, Residue b) const {
    return Residue{a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  Residue neg(Residue a) const { return Residue{a.value == 0 ? 0 : p_ - a.value}; }
  Residue mul(Residue a, Residue b) const {
    return Residue{static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.value) * b.value) % p_)};
  }
  Residue inv(Residue a) const {
    if (a.value == 0) throw DivisionByZero{};
    return Residue{inverse_[a.value]};
  }
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  Vec2 add(Vec2 a, Vec2 b) const { return {add(a.x, b.x), add(a.y, b.y)}; }
  Vec2 sub(Vec2 a, Vec2 b) const { return {sub(a.x, b.x), sub(a.y, b.y)}; }
  Vec2 neg(Vec2 a) const { return {neg(a.x), neg(a.y)}; }
  Vec2 scale(Vec2 a, Residue k) const { return {mul(a.x, k), mul(a.y, k)}; }

  /// Componentwise average (sum / count) of 1 <= count < p velocities.
  /// Throws std::invalid_argument when the count is not invertible.
  Vec2 vec_avg(std::span<const Vec2> vs) const;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> inverse_;
};

}  // namespace amech
