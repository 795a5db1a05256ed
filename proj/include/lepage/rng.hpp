#pragma once

// Counter-seeded xoshiro256** generator. Each (seed, stream) pair owns an
// independent substream; the same pair reproduces the same sequence bit for
// bit on any platform, which is what makes Monte Carlo output independent of
// worker partitioning: replication r always draws from stream r.

#include <cstdint>

namespace lepage {

struct SeededStream {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

class Rng {
 public:
  explicit Rng(SeededStream s);
  Rng(std::uint64_t seed, std::uint64_t stream) : Rng(SeededStream{seed, stream}) {}

  std::uint64_t next_u64();

  // Uniform double in [0,1) with 53 random bits.
  double next_double();

  // Uniform double in (0,1), safe as input to logarithmic inversions.
  double next_open_double();

  // Uniform integer in [0, bound), bound >= 1 (Lemire rejection method).
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_[4];
};

}  // namespace lepage
