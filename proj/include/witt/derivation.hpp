#pragma once

// Elements of the Witt algebra W_n: derivations sum_i P_i d_i of the
// polynomial ring in n variables.

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "witt/polynomial.hpp"

namespace witt {

class Derivation {
 public:
  /// The zero derivation.
  explicit Derivation(std::size_t arity);
  /// coefficients[j-1] multiplies d_j; all must share arity = count.
  explicit Derivation(std::vector<Polynomial> coefficients);

  /// d_j, 1-based.
  static Derivation partial(std::size_t arity, std::size_t j);
  /// The basis element x^m d_j.
  static Derivation basis(const Monomial& m, std::size_t j);

  std::size_t arity() const noexcept { return coeffs_.size(); }
  /// Coefficient of d_j, 1-based.
  const Polynomial& coefficient(std::size_t j) const;
  std::span<const Polynomial> coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;

  Derivation operator-() const;
  Derivation& operator+=(const Derivation& other);
  Derivation& operator-=(const Derivation& other);
  Derivation& operator*=(const Rational& scalar);

  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(Derivation d, const Rational& s) { return d *= s; }
  friend Derivation operator*(const Rational& s, Derivation d) { return d *= s; }
  /// Module action of A_n on W_n.
  friend Derivation operator*(const Polynomial& p, const Derivation& d);

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

/// d(p) = sum_i P_i * dp/dx_i.
Polynomial apply(const Derivation& d, const Polynomial& p);

/// Lie bracket [d1, d2]; coefficient j is sum_i (P_i d_i Q_j - Q_i d_i P_j).
Derivation bracket(const Derivation& d1, const Derivation& d2);

/// Every x^k d_j with |k| <= max_degree. Ordered by total degree, then by
/// j ascending, then by monomial in descending grlex. Count n*C(n+d, n).
std::vector<Derivation> basis_elements(std::size_t arity, unsigned max_degree);

/// Monomials of total degree exactly `degree`, descending grlex.
std::vector<Monomial> monomials_of_degree(std::size_t arity, unsigned degree);

/// The Lie generating set {d_j, x_i^2 d_j}; requires arity >= 2.
std::vector<Derivation> generating_set(std::size_t arity);

/// Canonical text: one term per monomial and index, grouped by j ascending,
/// e.g. `x1^2*d1 - x2*d2`. The zero derivation prints as `0`.
std::string to_string(const Derivation& d);
std::ostream& operator<<(std::ostream& os, const Derivation& d);

}  // namespace witt
