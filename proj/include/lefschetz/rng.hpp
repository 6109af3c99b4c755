#pragma once

#include <cstdint>
#include <string_view>

namespace lefschetz {

// Deterministic splitmix64 stream. Streams are derived from a root seed plus a
// (name, index) pair, so adding a new named stream never perturbs existing ones.
class Rng {
 public:
  explicit Rng(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw in [0, n).
  std::uint64_t below(std::uint64_t n) {
    for (;;) {
      std::uint64_t r = next();
      std::uint64_t v = r % n;
      if (r - v <= ~std::uint64_t{0} - (n - 1)) return v;
    }
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Independent stream for (root seed, stream name, stream index).
inline Rng derive_stream(std::uint64_t root, std::string_view name, std::uint64_t index = 0) {
  Rng mix(root ^ fnv1a64(name));
  std::uint64_t a = mix.next();
  Rng mix2(a ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  return Rng(mix2.next());
}

}  // namespace lefschetz
