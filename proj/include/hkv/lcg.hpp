#pragma once

#include <cstdint>

namespace hkv {

// x_{n+1} = 6364136223846793005·x_n + 1442695040888963407 (mod 2^64).
class Lcg64 {
public:
  explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ = 6364136223846793005ULL * state_ + 1442695040888963407ULL;
    return state_;
  }

  // Uniform integer in [lo, hi], drawn from the high bits.
  std::int64_t range(std::int64_t lo, std::int64_t hi) noexcept {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>((next() >> 32) % span);
  }

  std::uint64_t state() const noexcept { return state_; }

private:
  std::uint64_t state_;
};

}  // namespace hkv
