#pragma once

// Deterministic random values for property tests.

#include <random>
#include <vector>

#include "witt/derivation.hpp"
#include "witt/jacobi.hpp"
#include "witt/polynomial.hpp"
#include "witt/tame.hpp"

namespace witt::gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Small rational, possibly zero.
inline Rational small_rational(Rng& rng) {
  Rational q(uniform(rng, -4, 4), uniform(rng, 1, 3));
  q.canonicalize();
  return q;
}

inline Rational nonzero_rational(Rng& rng) {
  static const std::vector<Rational> pool = {Rational(2), Rational(-1), Rational(1, 2), Rational(3, 2),
                                             Rational(-2, 3), Rational(3), Rational(-1, 3)};
  return pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
}

inline Monomial monomial(Rng& rng, std::size_t arity, unsigned max_degree) {
  std::vector<std::uint32_t> e(arity, 0);
  const int deg = uniform(rng, 0, static_cast<int>(max_degree));
  for (int k = 0; k < deg; ++k) e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(arity) - 1))]++;
  return Monomial(std::move(e));
}

inline Polynomial polynomial(Rng& rng, std::size_t arity, unsigned max_degree, int max_terms = 4) {
  std::vector<Polynomial::Term> terms;
  const int count = uniform(rng, 0, max_terms);
  for (int k = 0; k < count; ++k) terms.push_back({monomial(rng, arity, max_degree), small_rational(rng)});
  return Polynomial::from_terms(arity, std::move(terms));
}

inline Derivation derivation(Rng& rng, std::size_t arity, unsigned max_degree, int max_terms = 3) {
  std::vector<Polynomial> c;
  for (std::size_t j = 0; j < arity; ++j) c.push_back(polynomial(rng, arity, max_degree, max_terms));
  return Derivation(std::move(c));
}

inline PolyMatrix matrix(Rng& rng, std::size_t dim, std::size_t arity, unsigned max_degree) {
  PolyMatrix m(dim, arity);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = polynomial(rng, arity, max_degree, 3);
  return m;
}

inline TameGenerator generator(Rng& rng, std::size_t arity, unsigned max_power = 4) {
  switch (uniform(rng, 0, 2)) {
    case 0:
      return Swap{static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(arity) - 1))};
    case 1:
      return Scale{nonzero_rational(rng)};
    default: {
      const unsigned p = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_power)));
      return Shear{p, uniform(rng, 0, 1) == 0 ? Rational(1) : nonzero_rational(rng)};
    }
  }
}

/// Word of length 0..max_length over all three generator kinds.
inline TameWord word(Rng& rng, std::size_t arity, int max_length = 6, unsigned max_power = 4) {
  std::vector<TameGenerator> g;
  const int len = uniform(rng, 0, max_length);
  for (int k = 0; k < len; ++k) g.push_back(generator(rng, arity, max_power));
  return TameWord(arity, std::move(g));
}

}  // namespace witt::gen
