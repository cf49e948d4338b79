#pragma once

#include <cstdint>

namespace qtor::modp {

inline constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t s = static_cast<std::uint64_t>(z & kP) + static_cast<std::uint64_t>(z >> 61);
  return s >= kP ? s - kP : s;
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kP ? s - kP : s;
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t k) {
  std::uint64_t r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

inline std::uint64_t inv(std::uint64_t a) { return pow(a, kP - 2); }

// Residue of a small signed integer.
inline std::uint64_t of(long v) {
  long r = v % static_cast<long>(kP);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(kP) : r);
}

}  // namespace qtor::modp
