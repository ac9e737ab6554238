#pragma once

// Test-only reference computations. Each one takes a different route from
// the library code it is compared against.

#include <algorithm>
#include <numeric>
#include <vector>

#include "witt/derivation.hpp"
#include "witt/jacobi.hpp"
#include "witt/polynomial.hpp"

namespace witt::oracle {

/// Leibniz formula: sum over permutations of sign * prod m(i, perm(i)).
inline Polynomial leibniz_determinant(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(m.arity());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial prod = Polynomial::constant(m.arity(), inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod = prod * m(i, perm[i]);
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Explicit 3x3 cofactor expansion along the first row.
inline Polynomial cofactor3(const PolyMatrix& m) {
  auto minor2 = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
  };
  return m(0, 0) * minor2(1, 2, 1, 2) - m(0, 1) * minor2(1, 2, 0, 2) + m(0, 2) * minor2(1, 2, 0, 1);
}

/// [d1, d2] as the operator commutator evaluated on p.
inline Polynomial commutator(const Derivation& d1, const Derivation& d2, const Polynomial& p) {
  return apply(d1, apply(d2, p)) - apply(d2, apply(d1, p));
}

/// Product f_1^k1 ... f_n^kn by repeated multiplication.
inline Polynomial power_product(std::span<const Polynomial> f, const Monomial& k) {
  Polynomial out = Polynomial::constant(f.front().arity(), 1);
  for (std::size_t i = 0; i < k.arity(); ++i)
    for (std::uint32_t e = 0; e < k[i]; ++e) out = out * f[i];
  return out;
}

/// sigma_f applied monomial by monomial: c x^k d_j -> c f^k theta_j.
inline Derivation sigma_monomialwise(const JacobiTuple& f, const Derivation& d) {
  Derivation out(f.arity());
  for (std::size_t j = 1; j <= d.arity(); ++j)
    for (const auto& t : d.coefficient(j).terms())
      out += (power_product(f.components(), t.monomial) * t.coeff) * f.theta(j);
  return out;
}

/// Naive substitution: sum of c * prod f_i^k_i, term by term.
inline Polynomial substitute_naive(const Polynomial& p, std::span<const Polynomial> f) {
  Polynomial out(f.front().arity());
  for (const auto& t : p.terms()) out += power_product(f, t.monomial) * t.coeff;
  return out;
}

}  // namespace witt::oracle
