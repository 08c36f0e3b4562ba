#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace gendist {

// Counter-based splittable generator. Every output is a pure function of
// (key, counter), so a fixed seed replays a fixed stream and child streams
// derived with split() are independent of how much the parent has drawn.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(mix(seed + kGolden)) {}

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGolden); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal, Box-Muller
  double gauss() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  // integer in [0, n); n must be nonzero
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  // independent child stream keyed by `stream`; does not advance this rng
  Rng split(std::uint64_t stream) const {
    Rng child(0);
    child.key_ = mix(key_ ^ mix(stream + kGolden2));
    return child;
  }

  // stable derived seed for handing to components that take a plain integer
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    return Rng(seed).split(stream).key_;
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kGolden2 = 0xC2B2AE3D27D4EB4Full;
  static constexpr double kTwoPi = 6.28318530717958647692;

  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace gendist
