#ifndef HSREG_RNG_HPP
#define HSREG_RNG_HPP

#include <cstdint>
#include <random>

namespace hsreg {

// SplitMix64 finalizer; used to turn (seed, stream) pairs into well-mixed
// engine seeds so substreams are independent regardless of how work is
// partitioned across draws, chains, or jobs.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(mix64(seed) ^ mix64(stream * 0xD6E8FEB86659FD93ull + 1));
}

/// mt19937_64 wrapped with explicitly-coded variate transforms, so draws are
/// reproducible independent of standard library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform on (0,1), 53-bit mantissa, never exactly 0 or 1
  double uniform() {
    double u = (engine_() >> 11) * 0x1.0p-53;
    return u == 0.0 ? 0x1.0p-54 : u;
  }

  // standard normal via Marsaglia polar; caches the spare deviate
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

  // Gamma(shape, 1) via Marsaglia-Tsang; shape < 1 boosted through
  // Gamma(shape+1) * U^(1/shape)
  double gamma(double shape) {
    if (shape < 1.0) {
      double u = uniform();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  double chi_square(double df) { return 2.0 * gamma(0.5 * df); }

  // Student-t as a Gaussian scaled by the square root of an inverse-chi^2
  double student_t(double dof) {
    return normal() / std::sqrt(chi_square(dof) / dof);
  }

  double half_student_t(double dof, double scale) {
    return scale * std::abs(student_t(dof));
  }

  double half_cauchy(double scale) {
    // |tan(pi (u - 1/2))| is a standard half-Cauchy draw
    return scale * std::abs(std::tan(M_PI * (uniform() - 0.5)));
  }

  double half_normal(double scale) { return scale * std::abs(normal()); }

  double exponential() { return -std::log(uniform()); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace hsreg

#endif
