#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace holeplex {

// Seeded draws that are bit-identical across platforms. mt19937_64 output is
// fixed by the standard; std::uniform_int_distribution is not, so bounded
// draws are done here by rejection.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t min = (0 - bound) % bound;
    std::uint64_t v = next();
    while (v < min) v = next();
    return v % bound;
  }

  bool coin() { return (next() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace holeplex
