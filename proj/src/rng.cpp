#include "lepage/rng.hpp"

namespace lepage {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(SeededStream s) {
  // Mix seed and stream through splitmix64 so that nearby pairs land far
  // apart in state space; all-zero state is unreachable this way.
  std::uint64_t mix = s.seed;
  std::uint64_t a = splitmix64(mix);
  mix ^= 0xD1B54A32D192ED03ULL + s.stream * 0x9E3779B97F4A7C15ULL;
  std::uint64_t b = splitmix64(mix);
  state_[0] = a;
  state_[1] = b;
  state_[2] = splitmix64(mix);
  state_[3] = splitmix64(mix);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_open_double() {
  double u;
  do {
    u = next_double();
  } while (u == 0.0);
  return u;
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection on the biased band.
  std::uint64_t x = next_u64();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  std::uint64_t lo = static_cast<std::uint64_t>(m);
  if (lo < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (lo < threshold) {
      x = next_u64();
      m = static_cast<__uint128_t>(x) * bound;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace lepage
