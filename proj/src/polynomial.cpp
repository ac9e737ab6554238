#include "witt/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "witt/errors.hpp"

namespace witt {

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial Monomial::variable(std::size_t arity, std::size_t var) {
  if (var < 1 || var > arity) throw IndexOutOfRange(var, arity, "Monomial::variable");
  Monomial m(arity);
  m.exps_[var - 1] = 1;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exponents() <=> b.exponents();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  return grlex_compare(a.monomial, b.monomial) > 0;
}

void require_same_arity(const Polynomial& a, const Polynomial& b, const char* where) {
  if (a.arity() != b.arity()) throw ArityMismatch(a.arity(), b.arity(), where);
}

}  // namespace

Polynomial::Polynomial(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw InvalidArgument("Polynomial: arity must be at least 1");
}

Polynomial::Polynomial(std::size_t arity, std::vector<Term> sorted_terms)
    : arity_(arity), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(std::size_t arity, const Rational& value) {
  Polynomial p(arity);
  if (value != 0) p.terms_.push_back({Monomial(arity), value});
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t var) {
  return monomial(Monomial::variable(arity, var));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& coeff) {
  Polynomial p(m.arity());
  if (coeff != 0) p.terms_.push_back({m, coeff});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t arity, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.arity() != arity)
      throw ArityMismatch(arity, t.monomial.arity(), "Polynomial::from_terms");
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  Polynomial p(arity);
  p.terms_ = std::move(merged);
  return p;
}

std::int64_t Polynomial::degree() const noexcept {
  // Leading term has maximal total degree under grlex.
  return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.front().monomial.degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return grlex_compare(t.monomial, key) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge of two canonical term lists; sign = +1 or -1 applies to b.
std::vector<Polynomial::Term> merge_terms(std::span<const Polynomial::Term> a,
                                          std::span<const Polynomial::Term> b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = grlex_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_arity(*this, other, "add");
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_arity(*this, other, "sub");
  if (other.is_zero()) return *this;
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_arity(a, b, "mul");
  const std::size_t n = a.arity();
  if (a.is_zero() || b.is_zero()) return Polynomial(n);

  // Multiplying by a single term preserves the monomial order.
  if (a.size() == 1 || b.size() == 1) {
    const auto& single = a.size() == 1 ? a.terms_.front() : b.terms_.front();
    const auto& other = a.size() == 1 ? b : a;
    std::vector<Polynomial::Term> out;
    out.reserve(other.size());
    for (const auto& t : other.terms_) out.push_back({t.monomial * single.monomial, t.coeff * single.coeff});
    return Polynomial(n, std::move(out));
  }

  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  Rational prod;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(ta.monomial * tb.monomial, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::vector<Polynomial::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), term_greater);
  return Polynomial(n, std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(arity_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

bool Polynomial::is_canonical() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (t.coeff == 0 || t.monomial.arity() != arity_) return false;
    if (t.coeff.get_den() <= 0) return false;
    if (mpz_class g = gcd(t.coeff.get_num(), t.coeff.get_den()); g != 1) return false;
    if (i > 0 && !term_greater(terms_[i - 1], t)) return false;
  }
  return true;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

// ---------------------------------------------------------------------------
// Calculus and substitution
// ---------------------------------------------------------------------------

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var < 1 || var > p.arity()) throw IndexOutOfRange(var, p.arity(), "partial_derivative");
  const std::size_t k = var - 1;
  std::vector<Polynomial::Term> out;
  for (const auto& t : p.terms()) {
    auto e = t.monomial[k];
    if (e == 0) continue;
    auto exps = t.monomial.exponents();
    exps[k] -= 1;
    out.push_back({Monomial(std::move(exps)), t.coeff * e});
  }
  return Polynomial::from_terms(p.arity(), std::move(out));
}

namespace {

class HornerSubstitution {
 public:
  HornerSubstitution(std::span<const Polynomial> images, std::size_t target_arity)
      : images_(images), arity_(target_arity), powers_(images.size()) {}

  Polynomial run(std::vector<const Polynomial::Term*> terms) { return eval(std::move(terms), 0); }

 private:
  const Polynomial& power(std::size_t var, std::uint32_t k) {
    auto& cache = powers_[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(arity_, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images_[var]);
    return cache[k];
  }

  // Horner in variable `var` over the given terms; lower variables recurse.
  Polynomial eval(std::vector<const Polynomial::Term*> terms, std::size_t var) {
    if (var == images_.size()) {
      Rational sum = 0;
      for (const auto* t : terms) sum += t->coeff;
      return Polynomial::constant(arity_, sum);
    }
    std::stable_sort(terms.begin(), terms.end(), [var](const auto* a, const auto* b) {
      return a->monomial[var] > b->monomial[var];
    });
    Polynomial result(arity_);
    std::uint32_t prev = 0;
    bool first = true;
    for (std::size_t i = 0; i < terms.size();) {
      const std::uint32_t e = terms[i]->monomial[var];
      std::size_t j = i;
      while (j < terms.size() && terms[j]->monomial[var] == e) ++j;
      if (!first) result *= power(var, prev - e);
      result += eval({terms.begin() + static_cast<std::ptrdiff_t>(i), terms.begin() + static_cast<std::ptrdiff_t>(j)},
                     var + 1);
      prev = e;
      first = false;
      i = j;
    }
    if (prev > 0) result *= power(var, prev);
    return result;
  }

  std::span<const Polynomial> images_;
  std::size_t arity_;
  std::vector<std::vector<Polynomial>> powers_;
};

}  // namespace

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.arity()) throw ArityMismatch(p.arity(), images.size(), "substitute");
  const std::size_t target = images.front().arity();
  for (const auto& f : images)
    if (f.arity() != target) throw ArityMismatch(target, f.arity(), "substitute");
  if (p.is_zero()) return Polynomial(target);

  std::vector<const Polynomial::Term*> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back(&t);
  return HornerSubstitution(images, target).run(std::move(terms));
}

std::optional<Rational> is_constant(const Polynomial& p) {
  if (p.is_zero()) return Rational(0);
  if (p.size() == 1 && p.leading_term().monomial.is_one()) return p.leading_term().coeff;
  return std::nullopt;
}

Polynomial exact_divide(const Polynomial& dividend, const Polynomial& divisor) {
  require_same_arity(dividend, divisor, "exact_divide");
  if (divisor.is_zero()) throw InvalidArgument("exact_divide: division by zero polynomial");
  const auto& lead = divisor.leading_term();
  Polynomial remainder = dividend;
  std::vector<Polynomial::Term> quotient;
  while (!remainder.is_zero()) {
    const auto& r = remainder.leading_term();
    if (!lead.monomial.divides(r.monomial))
      throw InvalidArgument("exact_divide: divisor does not divide dividend");
    Polynomial::Term q{r.monomial / lead.monomial, r.coeff / lead.coeff};
    remainder -= Polynomial::monomial(q.monomial, q.coeff) * divisor;
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(dividend.arity(), std::move(quotient));
}

// ---------------------------------------------------------------------------
// Text
// ---------------------------------------------------------------------------

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(t.coeff);
    std::string mono = monomial_text(t.monomial);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + '*' + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace witt
