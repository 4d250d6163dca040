#pragma once

#include <cstdint>
#include <string>

namespace qpb {

/// xoshiro256** seeded through splitmix64. Self-contained so that streams are
/// bit-identical across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& w : state_) {
      // splitmix64 step
      x += 0x9e3779b97f4a7c15ULL;
      uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      w = z ^ (z >> 31);
    }
  }

  uint64_t next_u64() {
    uint64_t* s = state_;
    uint64_t result = rotl(s[1] * 5, 7) * 9;
    uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). Rejection-free modulo is fine here: n is tiny
  /// (Pauli choices, outcome buckets) so the bias is far below 2^-50.
  uint32_t next_below(uint32_t n) {
    return static_cast<uint32_t>(next_u64() % n);
  }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  static uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
  uint64_t state_[4];
};

/// Deterministic seed derivation from a run seed plus an identity string
/// (protocol, sub-chip, path, variant, attempt...). SHA-256 based so unrelated
/// identities never share streams.
uint64_t derive_seed(uint64_t base, const std::string& identity);

}  // namespace qpb
