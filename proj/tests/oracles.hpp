#pragma once

// Test-only reference computations, kept independent of the library code
// paths they are used to check.

#include "cfpoly/bignum.hpp"
#include "cfpoly/interval.hpp"

namespace cfpoly::oracles {

// erf(x) by its Taylor series with an explicit alternating-series remainder
// enclosure, summed at the given precision. Valid for |x| <= 2.
IvBox erf_series(const BigNum& x, long prec);

// Splitmix64: tiny deterministic generator for reproducible random tests.
class Rng {
 public:
  explicit Rng(unsigned long long seed) : s_(seed) {}
  unsigned long long next() {
    unsigned long long z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, 1)
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
  // uniform in [a, b)
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  long integer(long lo, long hi) {  // inclusive range
    return lo + static_cast<long>(next() % static_cast<unsigned long long>(hi - lo + 1));
  }

 private:
  unsigned long long s_;
};

}  // namespace cfpoly::oracles
