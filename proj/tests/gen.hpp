#pragma once

// small hand-rolled generators for the property tests

#include <cstdint>
#include <random>
#include <vector>

#include "ckforms/rational.hpp"

namespace ckforms::testing {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

  // small numerators and denominators, zero with probability `zeros`
  Rational rational(int num = 6, int den = 4, double zeros = 0.2) {
    if (coin(zeros)) return 0;
    Rational q(integer(-num, num), integer(1, den));
    q.canonicalize();
    return q;
  }

  QMatrix matrix(std::size_t r, std::size_t c, double zeros = 0.2) {
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(6, 4, zeros);
    return m;
  }

  // rank at most k, as a product of random factors
  QMatrix low_rank(std::size_t r, std::size_t c, std::size_t k) {
    return matrix(r, k, 0.1) * matrix(k, c, 0.1);
  }

  QMatrix symmetric(std::size_t n, double zeros = 0.3) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rational(5, 3, zeros);
    return m;
  }
};

}  // namespace ckforms::testing
