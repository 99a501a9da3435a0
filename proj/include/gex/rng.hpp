#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace gex {

// Counter-based generator: splitmix64 over a 128-bit (stream, counter) pair,
// normals via Box-Muller. Counter addressing makes replicate-level
// parallelism reproducible regardless of worker count.
inline constexpr std::string_view kRngName = "splitmix64-boxmuller/v1";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stable seed derivation, e.g. per-replicate seeds hash(master, index).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0) {
  std::uint64_t h = splitmix64(master ^ 0x6a09e667f3bcc908ULL);
  h = splitmix64(h ^ splitmix64(a));
  h = splitmix64(h ^ splitmix64(b ^ 0xbb67ae8584caa73bULL));
  return h;
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : stream_(splitmix64(seed)) {}

  // 64 uniform bits at an absolute counter position.
  std::uint64_t bits_at(std::uint64_t counter) const {
    return splitmix64(stream_ ^ splitmix64(counter ^ 0x243f6a8885a308d3ULL));
  }

  std::uint64_t next_bits() { return bits_at(counter_++); }

  // Uniform in (0,1); never returns 0 so log() below is safe.
  double next_uniform() {
    return (static_cast<double>(next_bits() >> 11) + 0.5) * 0x1.0p-53;
  }

  // One standard normal; Box-Muller consumes two uniforms per pair.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace gex
