#include "witt/jacobi.hpp"

#include <utility>

namespace witt {

// ---------------------------------------------------------------------------
// PolyMatrix
// ---------------------------------------------------------------------------

PolyMatrix::PolyMatrix(std::size_t dim, std::size_t arity)
    : dim_(dim), arity_(arity), entries_(dim * dim, Polynomial(arity)) {
  if (dim == 0) throw InvalidArgument("PolyMatrix: dimension must be at least 1");
}

PolyMatrix PolyMatrix::identity(std::size_t dim, std::size_t arity) {
  PolyMatrix m(dim, arity);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = Polynomial::constant(arity, 1);
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(dim_, arity_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::minor(std::size_t row, std::size_t col) const {
  PolyMatrix m(dim_ - 1, arity_);
  for (std::size_t i = 0, mi = 0; i < dim_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, mj = 0; j < dim_; ++j) {
      if (j == col) continue;
      m(mi, mj++) = (*this)(i, j);
    }
    ++mi;
  }
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_) throw ArityMismatch(a.dim_, b.dim_, "PolyMatrix multiply (dimension)");
  if (a.arity_ != b.arity_) throw ArityMismatch(a.arity_, b.arity_, "PolyMatrix multiply");
  PolyMatrix c(a.dim_, a.arity_);
  for (std::size_t i = 0; i < a.dim_; ++i)
    for (std::size_t j = 0; j < a.dim_; ++j)
      for (std::size_t k = 0; k < a.dim_; ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

PolyMatrix jacobi_matrix(std::span<const Polynomial> f) {
  const std::size_t n = f.size();
  if (n == 0) throw InvalidArgument("jacobi_matrix: empty tuple");
  for (const auto& p : f)
    if (p.arity() != n) throw ArityMismatch(n, p.arity(), "jacobi_matrix");
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = partial_derivative(f[i], j + 1);
  return m;
}

// ---------------------------------------------------------------------------
// Determinants
// ---------------------------------------------------------------------------

Polynomial determinant_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Polynomial det(m.arity());
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Polynomial term = m(0, j) * determinant_cofactor(m.minor(0, j));
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

Polynomial determinant_bareiss(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  PolyMatrix a = m;
  bool negate = false;
  Polynomial prev = Polynomial::constant(m.arity(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a(r, k).is_zero()) ++r;
      if (r == n) return Polynomial(m.arity());
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity guarantees the division is exact.
        a(i, j) = exact_divide(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = Polynomial(m.arity());
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

Polynomial determinant(const PolyMatrix& m) {
  return m.dim() <= 3 ? determinant_cofactor(m) : determinant_bareiss(m);
}

PolyMatrix adjugate(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  PolyMatrix adj(n, m.arity());
  if (n == 1) {
    adj(0, 0) = Polynomial::constant(m.arity(), 1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial cof = determinant(m.minor(i, j));
      adj(j, i) = (i + j) % 2 == 0 ? std::move(cof) : -cof;
    }
  }
  return adj;
}

// ---------------------------------------------------------------------------
// Jacobi tuples
// ---------------------------------------------------------------------------

namespace {

std::string not_jacobi_message(NotJacobi::Reason reason, const Polynomial& det) {
  if (reason == NotJacobi::Reason::Zero) return "not a Jacobi tuple: Jacobian determinant is 0";
  return "not a Jacobi tuple: Jacobian determinant " + to_string(det) + " is not constant";
}

}  // namespace

NotJacobi::NotJacobi(Reason reason, Polynomial det)
    : Error(not_jacobi_message(reason, det)), reason_(reason), det_(std::move(det)) {}

JacobiTuple JacobiTuple::make(std::vector<Polynomial> f) {
  const std::size_t n = f.size();
  const PolyMatrix jac = jacobi_matrix(f);
  Polynomial det = determinant(jac);
  auto c = is_constant(det);
  if (!c) throw NotJacobi(NotJacobi::Reason::NonConstant, std::move(det));
  if (*c == 0) throw NotJacobi(NotJacobi::Reason::Zero, std::move(det));

  // theta_j = sum_l (adj(l, j) / c) d_l, i.e. row j of (M^-1)^T.
  const PolyMatrix adj = adjugate(jac);
  const Rational inv = 1 / *c;
  std::vector<Derivation> theta;
  theta.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Polynomial> coeffs;
    coeffs.reserve(n);
    for (std::size_t l = 0; l < n; ++l) coeffs.push_back(adj(l, j) * inv);
    theta.emplace_back(std::move(coeffs));
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (apply(theta[j], f[i]) != Polynomial::constant(n, i == j ? 1 : 0))
        throw InternalError("JacobiTuple: Kronecker contract violated at theta_" + std::to_string(j + 1) +
                            "(f_" + std::to_string(i + 1) + ")");
    }
  }
  return JacobiTuple(std::move(f), *c, std::move(theta));
}

JacobiTuple JacobiTuple::identity(std::size_t arity) {
  std::vector<Polynomial> f;
  for (std::size_t i = 1; i <= arity; ++i) f.push_back(Polynomial::variable(arity, i));
  return make(std::move(f));
}

JacobiTuple try_jacobi_tuple(std::vector<Polynomial> f) { return JacobiTuple::make(std::move(f)); }

JacobiTuple compose(const JacobiTuple& f, const JacobiTuple& g) {
  if (f.arity() != g.arity()) throw ArityMismatch(f.arity(), g.arity(), "compose");
  std::vector<Polynomial> h;
  h.reserve(f.arity());
  for (const auto& gi : g.components()) h.push_back(substitute(gi, f.components()));
  try {
    JacobiTuple result = JacobiTuple::make(std::move(h));
    if (result.jacobian() != f.jacobian() * g.jacobian())
      throw InternalError("compose: Jacobian constant is not the product of the factors");
    return result;
  } catch (const NotJacobi& e) {
    throw InternalError(std::string("compose: product failed revalidation: ") + e.what());
  }
}

std::string to_string(std::span<const Polynomial> tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(tuple[i]);
  }
  return out + ")";
}

std::string to_string(const JacobiTuple& f) { return to_string(f.components()); }

}  // namespace witt
