#include "witt/derivation.hpp"

#include <algorithm>

#include "witt/errors.hpp"

namespace witt {

Derivation::Derivation(std::size_t arity) {
  if (arity == 0) throw InvalidArgument("Derivation: arity must be at least 1");
  coeffs_.assign(arity, Polynomial(arity));
}

Derivation::Derivation(std::vector<Polynomial> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw InvalidArgument("Derivation: arity must be at least 1");
  for (const auto& p : coeffs_)
    if (p.arity() != coeffs_.size()) throw ArityMismatch(coeffs_.size(), p.arity(), "Derivation");
}

Derivation Derivation::partial(std::size_t arity, std::size_t j) {
  return basis(Monomial(arity), j);
}

Derivation Derivation::basis(const Monomial& m, std::size_t j) {
  Derivation d(m.arity());
  if (j < 1 || j > m.arity()) throw IndexOutOfRange(j, m.arity(), "Derivation::basis");
  d.coeffs_[j - 1] = Polynomial::monomial(m);
  return d;
}

const Polynomial& Derivation::coefficient(std::size_t j) const {
  if (j < 1 || j > arity()) throw IndexOutOfRange(j, arity(), "Derivation::coefficient");
  return coeffs_[j - 1];
}

bool Derivation::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Derivation Derivation::operator-() const {
  Derivation r(*this);
  for (auto& p : r.coeffs_) p = -p;
  return r;
}

Derivation& Derivation::operator+=(const Derivation& other) {
  if (other.arity() != arity()) throw ArityMismatch(arity(), other.arity(), "Derivation add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& other) {
  if (other.arity() != arity()) throw ArityMismatch(arity(), other.arity(), "Derivation sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Derivation& Derivation::operator*=(const Rational& scalar) {
  for (auto& p : coeffs_) p *= scalar;
  return *this;
}

Derivation operator*(const Polynomial& p, const Derivation& d) {
  if (p.arity() != d.arity()) throw ArityMismatch(d.arity(), p.arity(), "Polynomial * Derivation");
  Derivation r(d);
  for (auto& c : r.coeffs_) c = p * c;
  return r;
}

Polynomial apply(const Derivation& d, const Polynomial& p) {
  if (p.arity() != d.arity()) throw ArityMismatch(d.arity(), p.arity(), "apply");
  Polynomial out(p.arity());
  for (std::size_t i = 1; i <= d.arity(); ++i) {
    const auto& c = d.coefficient(i);
    if (c.is_zero()) continue;
    out += c * partial_derivative(p, i);
  }
  return out;
}

Derivation bracket(const Derivation& d1, const Derivation& d2) {
  if (d1.arity() != d2.arity()) throw ArityMismatch(d1.arity(), d2.arity(), "bracket");
  const std::size_t n = d1.arity();
  std::vector<Polynomial> out;
  out.reserve(n);
  // [d1, d2]_j = d1(Q_j) - d2(P_j).
  for (std::size_t j = 1; j <= n; ++j) out.push_back(apply(d1, d2.coefficient(j)) - apply(d2, d1.coefficient(j)));
  return Derivation(std::move(out));
}

std::vector<Monomial> monomials_of_degree(std::size_t arity, unsigned degree) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(arity, 0);
  // Lexicographically descending compositions of `degree` into `arity` parts.
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == arity) {
      exps[pos] = remaining;
      out.emplace_back(exps);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      exps[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<Derivation> basis_elements(std::size_t arity, unsigned max_degree) {
  if (arity == 0) throw InvalidArgument("basis_elements: arity must be at least 1");
  std::vector<Derivation> out;
  for (unsigned deg = 0; deg <= max_degree; ++deg) {
    const auto monos = monomials_of_degree(arity, deg);
    for (std::size_t j = 1; j <= arity; ++j)
      for (const auto& m : monos) out.push_back(Derivation::basis(m, j));
  }
  return out;
}

std::vector<Derivation> generating_set(std::size_t arity) {
  if (arity < 2) throw ArityTooSmall(arity, 2, "generating_set");
  std::vector<Derivation> out;
  for (std::size_t j = 1; j <= arity; ++j) out.push_back(Derivation::partial(arity, j));
  for (std::size_t i = 1; i <= arity; ++i) {
    Monomial sq = Monomial::variable(arity, i) * Monomial::variable(arity, i);
    for (std::size_t j = 1; j <= arity; ++j) out.push_back(Derivation::basis(sq, j));
  }
  return out;
}

std::string to_string(const Derivation& d) {
  std::string out;
  for (std::size_t j = 1; j <= d.arity(); ++j) {
    const std::string dj = "d" + std::to_string(j);
    for (const auto& t : d.coefficient(j).terms()) {
      const bool negative = sgn(t.coeff) < 0;
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      Rational mag = abs(t.coeff);
      if (mag != 1) out += to_string(mag) + '*';
      if (auto mono = monomial_text(t.monomial); !mono.empty()) out += mono + '*';
      out += dj;
    }
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Derivation& d) { return os << to_string(d); }

}  // namespace witt
