#include "witt/tame.hpp"

#include <algorithm>

namespace witt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational rational_pow(const Rational& base, long exponent) {
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

void validate_generator(const TameGenerator& g, std::size_t arity) {
  std::visit(overloaded{
                 [&](const Swap& s) {
                   if (arity < 2) throw ArityTooSmall(arity, 2, "swap generator");
                   if (s.index < 1 || s.index + 1 > arity)
                     throw InvalidArgument("swap s" + std::to_string(s.index) + " needs 1 <= i <= " +
                                           std::to_string(arity - 1));
                 },
                 [&](const Scale& s) {
                   if (s.factor == 0) throw InvalidArgument("scale factor must be nonzero");
                 },
                 [&](const Shear&) {
                   if (arity < 2) throw ArityTooSmall(arity, 2, "shear generator");
                 },
             },
             g);
}

TameGenerator inverse(const TameGenerator& g) {
  return std::visit(overloaded{
                        [](const Swap& s) -> TameGenerator { return s; },
                        [](const Scale& s) -> TameGenerator { return Scale{1 / s.factor}; },
                        [](const Shear& s) -> TameGenerator { return Shear{s.power, -s.coeff}; },
                    },
                    g);
}

JacobiTuple generator_tuple(const TameGenerator& g, std::size_t arity) {
  validate_generator(g, arity);
  std::vector<Polynomial> f;
  for (std::size_t i = 1; i <= arity; ++i) f.push_back(Polynomial::variable(arity, i));
  std::visit(overloaded{
                 [&](const Swap& s) { std::swap(f[s.index - 1], f[s.index]); },
                 [&](const Scale& s) { f[0] *= s.factor; },
                 [&](const Shear& s) { f[1] += Polynomial::variable(arity, 1).pow(s.power) * s.coeff; },
             },
             g);
  return JacobiTuple::make(std::move(f));
}

TameWord::TameWord(std::size_t arity, std::vector<TameGenerator> generators)
    : arity_(arity), gens_(std::move(generators)) {
  if (arity == 0) throw InvalidArgument("TameWord: arity must be at least 1");
  for (const auto& g : gens_) validate_generator(g, arity_);
}

TameWord operator+(const TameWord& a, const TameWord& b) {
  if (a.arity_ != b.arity_) throw ArityMismatch(a.arity_, b.arity_, "TameWord concatenation");
  std::vector<TameGenerator> gens = a.gens_;
  gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
  return TameWord(a.arity_, std::move(gens));
}

JacobiTuple to_tuple(const TameWord& w) {
  JacobiTuple t = JacobiTuple::identity(w.arity());
  for (const auto& g : w.generators()) t = compose(t, generator_tuple(g, w.arity()));
  return t;
}

TameWord invert(const TameWord& w) {
  std::vector<TameGenerator> gens;
  gens.reserve(w.generators().size());
  for (auto it = w.generators().rbegin(); it != w.generators().rend(); ++it) gens.push_back(inverse(*it));
  return TameWord(w.arity(), std::move(gens));
}

JacobiTuple nagata() {
  const Polynomial x1 = Polynomial::variable(3, 1);
  const Polynomial x2 = Polynomial::variable(3, 2);
  const Polynomial x3 = Polynomial::variable(3, 3);
  const Polynomial w = x2 * x2 + x1 * x3;
  return JacobiTuple::make({x1 - Rational(2) * w * x2 - w * w * x3, x2 + w * x3, x3});
}

Derivation w2_action(const TameGenerator& g, const Derivation& u, W2Formula formula) {
  if (u.arity() != 2) throw ArityMismatch(2, u.arity(), "w2_action");
  validate_generator(g, 2);
  const Polynomial x1 = Polynomial::variable(2, 1);
  const Polynomial x2 = Polynomial::variable(2, 2);
  const bool literal = formula == W2Formula::PaperLiteral;

  Derivation out(2);
  for (std::size_t m = 1; m <= 2; ++m) {
    for (const auto& t : u.coefficient(m).terms()) {
      const auto i = t.monomial[0];
      const auto j = t.monomial[1];
      std::visit(overloaded{
                     [&](const Swap&) {
                       // x1^i x2^j d_m -> x2^i x1^j d_{3-m}
                       out += Polynomial::monomial(Monomial{j, i}, t.coeff) * Derivation::partial(2, 3 - m);
                     },
                     [&](const Scale& s) {
                       long e = static_cast<long>(i);
                       if (m == 1 && !literal) e -= 1;
                       out += Polynomial::monomial(t.monomial, t.coeff * rational_pow(s.factor, e)) *
                              Derivation::partial(2, m);
                     },
                     [&](const Shear& s) {
                       const Polynomial shifted = x2 + x1.pow(s.power) * s.coeff;
                       const Polynomial coeff = Polynomial::monomial(Monomial{i, 0}, t.coeff) * shifted.pow(j);
                       if (m == 2) {
                         out += coeff * Derivation::partial(2, 2);
                         return;
                       }
                       Derivation frame = Derivation::partial(2, 1);
                       if (s.power > 0) {
                         const Rational factor = literal ? s.coeff : s.coeff * s.power;
                         frame -= (x1.pow(s.power - 1) * factor) * Derivation::partial(2, 2);
                       } else if (literal) {
                         throw InvalidArgument("paper-literal shear display is undefined for p = 0");
                       }
                       out += coeff * frame;
                     },
                 },
                 g);
    }
  }
  return out;
}

VerificationReport cross_check_w2(const TameGenerator& g, unsigned degree, W2Formula formula) {
  const auto sigma = WittEndomorphism::from_tuple(generator_tuple(g, 2));
  return compare_on_basis(
      formula == W2Formula::Normative ? "w2-cross-check" : "w2-cross-check-paper-literal", 2, degree,
      [&](const Derivation& u) { return w2_action(g, u, formula); }, [&](const Derivation& u) { return sigma(u); },
      {.threads = 1});
}

std::string to_string(const TameGenerator& g) {
  return std::visit(overloaded{
                        [](const Swap& s) { return "s" + std::to_string(s.index); },
                        [](const Scale& s) { return "t(" + to_string(s.factor) + ")"; },
                        [](const Shear& s) {
                          if (s.coeff == 1) return "psi(" + std::to_string(s.power) + ")";
                          return "shear(" + std::to_string(s.power) + "," + to_string(s.coeff) + ")";
                        },
                    },
                    g);
}

std::string to_string(const TameWord& w) {
  std::string out;
  for (const auto& g : w.generators()) {
    if (!out.empty()) out += "; ";
    out += to_string(g);
  }
  return out;
}

}  // namespace witt
