#pragma once

// Exact sparse multivariate polynomials over the rationals.
//
// A Polynomial carries its arity n and a list of terms kept in canonical
// form: no zero coefficients, no repeated monomials, terms sorted in
// descending graded-lexicographic order with x1 > x2 > ... > xn.
//
// Variable indices in the public API are 1-based (x1..xn), matching the
// text form. Monomial::operator[] is 0-based like any container.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace witt {

using Rational = mpq_class;

/// Canonical text of a rational: `a` or `a/b`, denominator positive.
std::string to_string(const Rational& q);

class Monomial {
 public:
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {}
  Monomial(std::initializer_list<std::uint32_t> exponents) : exps_(exponents) {}

  /// x_var, 1-based.
  static Monomial variable(std::size_t arity, std::size_t var);

  std::size_t arity() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other) to hold for (*this) / divisor.
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic comparison: higher total degree is greater, ties
/// broken lexicographically with x1 most significant.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
  };

  /// The zero polynomial in `arity` variables.
  explicit Polynomial(std::size_t arity);

  static Polynomial constant(std::size_t arity, const Rational& value);
  static Polynomial variable(std::size_t arity, std::size_t var);
  static Polynomial monomial(const Monomial& m, const Rational& coeff = 1);
  /// Builds a canonical polynomial from arbitrary terms: duplicates are
  /// merged and zero coefficients dropped.
  static Polynomial from_terms(std::size_t arity, std::vector<Term> terms);

  std::size_t arity() const noexcept { return arity_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; the zero polynomial has degree -1.
  std::int64_t degree() const noexcept;
  Rational coefficient(const Monomial& m) const;
  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  Polynomial pow(unsigned exponent) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// True when the term list satisfies every canonical-form invariant.
  bool is_canonical() const;

 private:
  Polynomial(std::size_t arity, std::vector<Term> sorted_terms);

  std::size_t arity_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// d/dx_var p, with var 1-based.
Polynomial partial_derivative(const Polynomial& p, std::size_t var);

/// Simultaneous substitution x_i -> images[i-1]. The result has the arity
/// shared by the images.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// The constant value of p if it has no term of positive degree.
std::optional<Rational> is_constant(const Polynomial& p);

/// Quotient of an exact division. Throws InvalidArgument when the divisor
/// is zero or does not divide the dividend.
Polynomial exact_divide(const Polynomial& dividend, const Polynomial& divisor);

/// Canonical text form, e.g. `2*x1^2*x2 - 1/3*x3 + 5`.
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Text of a single monomial with coefficient 1, e.g. `x1^2*x3`; empty for 1.
std::string monomial_text(const Monomial& m);

}  // namespace witt
