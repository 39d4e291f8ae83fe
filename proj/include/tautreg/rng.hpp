#pragma once

#include <cmath>
#include <cstdint>

namespace tautreg {

/// Counter-based deterministic random number generator.
///
/// The generator is SplitMix64 run in counter mode: draw i of a stream with
/// key k is `mix64(k + (i+1) * GOLDEN)`, where GOLDEN = 0x9E3779B97F4A7C15
/// and mix64 is the standard SplitMix64 finalizer
///
///   z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9;
///   z ^= z >> 27;  z *= 0x94D049BB133111EB;
///   z ^= z >> 31.
///
/// Stream keys are derived from (master seed, stream a, stream b) by chained
/// mixing, so per-trial streams of an experiment are independent of ordering
/// and can be regenerated in isolation. Draws are reproducible bit-for-bit
/// for a given key. Uniform doubles take the top 53 bits shifted into (0,1);
/// normal pairs use the Box-Muller transform
///
///   r = sqrt(-2 ln u1),  z0 = r cos(2 pi u2),  z1 = r sin(2 pi u2).
class CounterRng {
public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  /// Stream key for a (master, a, b) triple; a and b index substreams
  /// (e.g. noise-level index and trial index in a rate experiment).
  static std::uint64_t stream_key(std::uint64_t master, std::uint64_t a = 0,
                                  std::uint64_t b = 0) {
    std::uint64_t k = mix64(master + kGolden);
    k = mix64(k ^ ((a + 1) * kGolden));
    k = mix64(k ^ ((b + 1) * 0xC2B2AE3D27D4EB4Full));
    return k;
  }

  explicit CounterRng(std::uint64_t key) : key_(key) {}

  CounterRng(std::uint64_t master, std::uint64_t a, std::uint64_t b)
      : key_(stream_key(master, a, b)) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

  /// Uniform double in the open interval (0, 1).
  double next_uniform() {
    const std::uint64_t bits = next_u64() >> 11; // top 53 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal draw (Box-Muller; caches the second variate).
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
  }

private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

} // namespace tautreg
