#pragma once

#include "qsuper/algebra.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qsuper {

// seeded generators for property checks; std::mt19937_64 keeps runs reproducible
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // small nonzero scalar r * q^k with r in [-3, 3]
  CycScalar scalar(const Algebra& a) {
    int r = 0;
    while (r == 0) r = uniform(-3, 3);
    return a.scalar(r) * a.q(uniform(0, a.p() - 1));
  }

  // PBW monomial with each exponent drawn inside its bound, at most `max_letters` letters
  Monomial monomial(const Algebra& a, int max_letters) {
    Monomial m;
    int n = uniform(0, max_letters);
    for (int t = 0; t < n; ++t) {
      int l = uniform(0, a.letter_count() - 1);
      m.e[l] = static_cast<std::uint8_t>(uniform(0, a.letters()[l].bound - 1));
    }
    return m;
  }

  Element element(const Algebra& a, int terms, int max_letters) {
    Element x = a.zero();
    for (int t = 0; t < terms; ++t) x.add_term(monomial(a, max_letters), scalar(a));
    return x;
  }

  // word in the letters of the algebra
  std::vector<int> word(const Algebra& a, int max_len) {
    std::vector<int> w(uniform(0, max_len));
    for (int& l : w) l = uniform(0, a.letter_count() - 1);
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qsuper
