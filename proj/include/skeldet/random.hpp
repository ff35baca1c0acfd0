#pragma once

#include <cstdint>
#include <random>

namespace skeldet {

/// Deterministic generator for instance sampling.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws use rejection sampling on raw 64-bit outputs rather
/// than std::uniform_int_distribution (implementation-defined), so a seed
/// produces the same instances with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi]; requires lo <= hi.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo;
    if (span == UINT64_MAX) {
      return next();
    }
    const std::uint64_t range = span + 1;
    // 2^64 mod range; draws at or above it split evenly into residues.
    const std::uint64_t threshold = (0 - range) % range;
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw < threshold);
    return lo + draw % range;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace skeldet
