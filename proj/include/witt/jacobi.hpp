#pragma once

// Jacobi tuples: n-tuples of polynomials in n variables whose Jacobian
// determinant is a nonzero constant, together with their dual frame of
// derivations theta_1..theta_n satisfying theta_j(f_i) = delta_ij.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "witt/derivation.hpp"
#include "witt/errors.hpp"
#include "witt/polynomial.hpp"

namespace witt {

/// Square matrix of polynomials sharing one arity. Indices are 0-based.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t dim, std::size_t arity);

  static PolyMatrix identity(std::size_t dim, std::size_t arity);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t arity() const noexcept { return arity_; }

  const Polynomial& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Polynomial& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

  PolyMatrix transpose() const;
  /// Drops one row and one column.
  PolyMatrix minor(std::size_t row, std::size_t col) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t dim_;
  std::size_t arity_;
  std::vector<Polynomial> entries_;
};

/// Entry (i, j) is d f_i / d x_j.
PolyMatrix jacobi_matrix(std::span<const Polynomial> f);

/// Exact determinant: cofactor expansion for dim <= 3, fraction-free
/// elimination above.
Polynomial determinant(const PolyMatrix& m);
/// Laplace expansion along the first row, recursively.
Polynomial determinant_cofactor(const PolyMatrix& m);
/// Bareiss fraction-free elimination with row pivoting.
Polynomial determinant_bareiss(const PolyMatrix& m);

/// Transpose of the cofactor matrix, so m * adjugate(m) = det(m) * I.
PolyMatrix adjugate(const PolyMatrix& m);

class NotJacobi : public Error {
 public:
  enum class Reason { NonConstant, Zero };

  NotJacobi(Reason reason, Polynomial det);

  Reason reason() const noexcept { return reason_; }
  const Polynomial& determinant() const noexcept { return det_; }

 private:
  Reason reason_;
  Polynomial det_;
};

class JacobiTuple {
 public:
  /// Validates f: computes the Jacobian, rejects non-constant or zero
  /// determinants, builds the theta-frame and checks the Kronecker contract.
  static JacobiTuple make(std::vector<Polynomial> f);
  /// (x1, ..., xn).
  static JacobiTuple identity(std::size_t arity);

  std::size_t arity() const noexcept { return components_.size(); }
  std::span<const Polynomial> components() const noexcept { return components_; }
  const Polynomial& component(std::size_t i) const { return components_.at(i - 1); }
  /// The constant value c of the Jacobian determinant.
  const Rational& jacobian() const noexcept { return jacobian_; }
  /// theta_1..theta_n: rows of the inverse transpose of the Jacobi matrix.
  std::span<const Derivation> theta() const noexcept { return theta_; }
  const Derivation& theta(std::size_t j) const { return theta_.at(j - 1); }

  friend bool operator==(const JacobiTuple& a, const JacobiTuple& b) { return a.components_ == b.components_; }

 private:
  JacobiTuple(std::vector<Polynomial> components, Rational jacobian, std::vector<Derivation> theta)
      : components_(std::move(components)), jacobian_(std::move(jacobian)), theta_(std::move(theta)) {}

  std::vector<Polynomial> components_;
  Rational jacobian_;
  std::vector<Derivation> theta_;
};

JacobiTuple try_jacobi_tuple(std::vector<Polynomial> f);

/// Semigroup product f.g = h with h_i = g_i(f_1, ..., f_n).
JacobiTuple compose(const JacobiTuple& f, const JacobiTuple& g);

/// Tuple text form, e.g. `(x1, x2 + x1^3)`.
std::string to_string(std::span<const Polynomial> tuple);
std::string to_string(const JacobiTuple& f);

}  // namespace witt
