#include "rankability/rng.hpp"

#include "rankability/error.hpp"

namespace rankability {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed & 0xffffffffu),
      static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream & 0xffffffffu),
      static_cast<std::uint32_t>(stream >> 32),
  };
  engine_.seed(seq);
}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * next_double();
}

bool Rng::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(Errc::bad_probability, "bernoulli probability outside [0, 1]");
  return next_double() < p;
}

std::size_t Rng::next_index(std::size_t bound) {
  if (bound == 0) throw Error(Errc::invalid_input, "next_index bound must be positive");
  // Fixed-point multiply keeps the draw branch-free and deterministic; the
  // bias is below 2^-53 for any bound this library uses.
  return static_cast<std::size_t>(
      (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
}

}  // namespace rankability
