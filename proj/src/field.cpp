#include "amech/field.hpp"

#include <map>
#include <mutex>
#include <string>

namespace amech {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldContext::FieldContext(std::uint32_t p) : p_(p) {
  if (p > kMaxPrime || !is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not a supported prime");
  // inv(i) = -(p / i) * inv(p mod i), valid since p mod i < i.
  inverse_.assign(p, 0);
  if (p > 1) inverse_[1] = 1;
  for (std::uint32_t i = 2; i < p; ++i) {
    std::uint64_t q = p / i;
    std::uint64_t t = (q * inverse_[p % i]) % p;
    inverse_[i] = static_cast<std::uint32_t>((p - t) % p);
  }
}

std::shared_ptr<const FieldContext> FieldContext::shared(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const FieldContext>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const FieldContext>(p);
  cache.emplace(p, ctx);
  return ctx;
}

Vec2 FieldContext::vec_avg(std::span<const Vec2> vs) const {
  if (vs.empty() || vs.size() >= p_)
    throw std::invalid_argument("vec_avg needs 1 <= count < p");
  std::uint64_t sx = 0, sy = 0;
  for (const Vec2& v : vs) {
    sx += v.x.value;
    sy += v.y.value;
  }
  Residue k = inv(Residue{static_cast<std::uint32_t>(vs.size())});
  return scale({Residue{static_cast<std::uint32_t>(sx % p_)},
                Residue{static_cast<std::uint32_t>(sy % p_)}},
               k);
}

}  // namespace amech
