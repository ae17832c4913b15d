#pragma once
// Counter-based splittable random streams.
//
// A stream is an immutable 64-bit key plus a draw counter; outputs walk the
// SplitMix64 output function over key + counter. split(tag) derives a child
// key without consuming draws, so the stream assigned to a work item depends
// only on (master seed, tags) and never on scheduling or draw order elsewhere.

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace overmeta {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// SplitMix64 output mix.
inline std::uint64_t fmix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

// FNV-1a, used to key streams by stable string identities.
inline std::uint64_t fnv1a(const char* data, std::size_t n) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace detail

enum class SubGaussianFamily { Gaussian, Rademacher, UniformBounded };

inline const char* family_name(SubGaussianFamily f) {
  switch (f) {
    case SubGaussianFamily::Gaussian: return "gaussian";
    case SubGaussianFamily::Rademacher: return "rademacher";
    case SubGaussianFamily::UniformBounded: return "uniform_bounded";
  }
  return "?";
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed)
      : key_(detail::fmix64(seed + detail::kGolden)) {}

  // Derives an independent child stream; does not consume draws here.
  RandomStream split(std::uint64_t tag) const {
    return RandomStream(FromKey{}, detail::fmix64((key_ ^ kSplitSalt) +
                                                  detail::kGolden * (tag + 1)));
  }

  std::uint64_t next_u64() {
    return detail::fmix64(key_ + detail::kGolden * ++counter_);
  }

  // Uniform on [0, 1).
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal, Box-Muller; the second value of each pair is cached.
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0,1] keeps the log finite
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  double next_rademacher() { return (next_u64() >> 63) ? 1.0 : -1.0; }

  // Uniform on [-sqrt(3), sqrt(3)]: zero mean, unit variance, bounded support.
  double next_uniform_bounded() { return kSqrt3 * (2.0 * next_unit() - 1.0); }

  // Zero-mean, unit-variance draw from the requested family.
  double next_standard(SubGaussianFamily family) {
    switch (family) {
      case SubGaussianFamily::Gaussian: return next_gaussian();
      case SubGaussianFamily::Rademacher: return next_rademacher();
      case SubGaussianFamily::UniformBounded: return next_uniform_bounded();
    }
    throw std::logic_error("unknown sub-Gaussian family");
  }

 private:
  struct FromKey {};
  RandomStream(FromKey, std::uint64_t key) : key_(key) {}

  static constexpr std::uint64_t kSplitSalt = 0xA5A50F0FF0F05A5Aull;
  static constexpr double kPi = 3.141592653589793238462643383279502884;
  static constexpr double kSqrt3 = 1.732050807568877293527446341505872367;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace overmeta
