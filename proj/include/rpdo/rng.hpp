#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace rpdo {

// Deterministic random source. All randomness in experiments and tests
// flows from one seeded instance; distributions are implemented inline
// (Box-Muller, bit-shift uniforms) so streams do not depend on the
// standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  std::uint64_t integer(std::uint64_t n) {  // [0, n)
    return gen_() % n;
  }

  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  std::complex<double> complex_gaussian() {
    const double a = gaussian(), b = gaussian();
    return {a * M_SQRT1_2, b * M_SQRT1_2};
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace rpdo
