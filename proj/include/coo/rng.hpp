#ifndef COO_RNG_HPP
#define COO_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include "coo/numeric.hpp"

namespace coo {

// splitmix64 finalizer, used only to derive engine seeds and substream keys.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Deterministic random stream with named substreams.
//
// All randomness in the library flows from a single 64-bit seed through
// substream(...) paths, so results are independent of thread scheduling:
// a substream's output depends only on (seed, path), never on which
// thread runs it.  The engine is std::mt19937_64, whose output sequence
// is pinned by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(seed), engine_(mix64(seed)) {}

  Rng substream(std::uint64_t id) const {
    return Rng(mix64(key_ ^ mix64(id)));
  }
  Rng substream(std::uint64_t a, std::uint64_t b) const {
    return substream(a).substream(b);
  }

  std::uint64_t next() { return engine_(); }

  // Uniform double in [0, 1), 53 bits; conversion pinned here rather than
  // via std::uniform_real_distribution, whose algorithm is unspecified.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t rem = (UINT64_MAX % bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = next();
      if (rem == 0 || x <= UINT64_MAX - rem) return x % bound;
    }
  }

  // Uniform big integer in [0, bound), exact, by masked rejection.
  BigInt below_big(const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("Rng::below_big: bound must be positive");
    if (bound == 1) return BigInt(0);
    const unsigned bits = boost::multiprecision::msb(BigInt(bound - 1)) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned excess = words * 64 - bits;
    for (;;) {
      BigInt v = 0;
      for (unsigned w = 0; w < words; ++w) {
        v <<= 64;
        v |= next();
      }
      v >>= excess;
      if (v < bound) return v;
    }
  }

 private:
  std::uint64_t key_;
  std::mt19937_64 engine_;
};

}  // namespace coo

#endif  // COO_RNG_HPP
