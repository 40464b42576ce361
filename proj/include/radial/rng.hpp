#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "radial/rational.hpp"

namespace radial {

/// Deterministic RNG: mt19937_64 raw outputs only, so streams are identical
/// across platforms (std distributions are not portable).
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : eng_(seed) {}

  uint64_t u64() { return eng_(); }

  // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  int64_t in_range(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(u64() % span);
  }

  // Rational jitter k / 2^denom_pow with k in [-mag, mag].
  Rational jitter(int denom_pow, int64_t mag) {
    int64_t k = in_range(-mag, mag);
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), denom_pow);
    return Rational(mpz_class(static_cast<long>(k)), den);
  }

 private:
  std::mt19937_64 eng_;
};

inline uint64_t subseed(uint64_t base, std::string_view tag, uint64_t index = 0) {
  uint64_t h = 1469598103934665603ULL ^ base;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  h ^= index + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  // splitmix finalizer
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

}  // namespace radial
