#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace rankability {

// Deterministic random source. Every stochastic operation in the library
// takes one of these explicitly; (seed, stream) pairs give independent
// streams so per-sample and per-tree generation stays reproducible no
// matter how work is ordered or parallelized.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53 random bits.
  double next_double();

  double uniform(double lo, double hi);

  bool bernoulli(double p);

  // Uniform in {0, ..., bound - 1}; bound must be positive.
  std::size_t next_index(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace rankability
