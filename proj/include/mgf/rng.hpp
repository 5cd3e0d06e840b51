#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

namespace mgf {

/// Deterministic splitmix64 stream. All randomness in the library flows
/// through this so that runs are reproducible bit-for-bit across platforms
/// (std:: distributions are implementation-defined and must not be used).
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }

  std::complex<double> uniform_complex(double re_lo, double re_hi, double im_lo, double im_hi) {
    double re = uniform(re_lo, re_hi);
    double im = uniform(im_lo, im_hi);
    return {re, im};
  }

 private:
  uint64_t state_;
};

/// FNV-1a over arbitrary bytes; used for input digests in reports.
inline uint64_t fnv1a(const void* data, size_t len, uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
  return fnv1a(&b, sizeof(b), fnv1a(&a, sizeof(a)));
}

inline uint64_t hash_string(std::string_view s, uint64_t h0 = 0xcbf29ce484222325ULL) {
  return fnv1a(s.data(), s.size(), h0);
}

}  // namespace mgf
