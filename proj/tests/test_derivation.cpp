#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "witt/derivation.hpp"
#include "witt/errors.hpp"

using namespace witt;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
Derivation d(std::size_t n, std::size_t j) { return Derivation::partial(n, j); }

}  // namespace

TEST_CASE("apply") {
  CHECK(apply(d(1, 1), x(1, 1) * x(1, 1)) == Rational(2) * x(1, 1));
  const Derivation euler = x(2, 1) * d(2, 1) + x(2, 2) * d(2, 2);
  CHECK(apply(euler, x(2, 1) * x(2, 2)) == Rational(2) * x(2, 1) * x(2, 2));
  gen::Rng rng(5);
  CHECK(apply(gen::derivation(rng, 3, 3), Polynomial::constant(3, 1)).is_zero());
  CHECK_THROWS_AS(apply(d(2, 1), x(3, 1)), ArityMismatch);
}

TEST_CASE("bracket") {
  CHECK(bracket(d(1, 1), x(1, 1) * d(1, 1)) == d(1, 1));
  const auto x1 = x(2, 1), x2 = x(2, 2);
  CHECK(bracket(x1 * d(2, 2), x2 * d(2, 1)) == x1 * d(2, 1) - x2 * d(2, 2));
  gen::Rng rng(6);
  const auto u = gen::derivation(rng, 2, 3);
  CHECK(bracket(u, u).is_zero());
  CHECK_THROWS_AS(bracket(d(2, 1), d(3, 1)), ArityMismatch);
}

TEST_CASE("basis enumeration") {
  auto b10 = basis_elements(1, 0);
  REQUIRE(b10.size() == 1);
  CHECK(b10[0] == d(1, 1));

  const auto x1 = x(2, 1), x2 = x(2, 2);
  const std::vector<Derivation> expected = {d(2, 1), d(2, 2), x1 * d(2, 1), x2 * d(2, 1), x1 * d(2, 2), x2 * d(2, 2)};
  CHECK(basis_elements(2, 1) == expected);
  CHECK(basis_elements(2, 2).size() == 12);
  CHECK(basis_elements(2, 3).size() == 20);
  CHECK(basis_elements(3, 2).size() == 30);
  CHECK(basis_elements(3, 3).size() == 60);
}

TEST_CASE("generating set") {
  const auto gs = generating_set(2);
  CHECK(gs.size() == 6);
  const auto x1 = x(2, 1), x2 = x(2, 2);
  for (const auto& want : {d(2, 1), d(2, 2), x1 * x1 * d(2, 1), x1 * x1 * d(2, 2), x2 * x2 * d(2, 1),
                           x2 * x2 * d(2, 2)})
    CHECK(std::count(gs.begin(), gs.end(), want) == 1);
  CHECK(generating_set(3).size() == 12);
  CHECK_THROWS_AS(generating_set(1), ArityTooSmall);
}

TEST_CASE("text form") {
  const auto x1 = x(2, 1), x2 = x(2, 2);
  CHECK(to_string(x1 * x1 * d(2, 1) - x2 * d(2, 2)) == "x1^2*d1 - x2*d2");
  CHECK(to_string(Derivation(2)) == "0");
  CHECK(to_string(Rational(-1, 2) * d(2, 1) + (x1 + Polynomial::constant(2, 3)) * d(2, 2)) ==
        "-1/2*d1 + x1*d2 + 3*d2");
}

TEST_CASE("bracket equals the operator commutator") {
  gen::Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    const auto a = gen::derivation(rng, n, 3), b = gen::derivation(rng, n, 3);
    const auto br = bracket(a, b);
    for (unsigned deg = 0; deg <= 3; ++deg)
      for (const auto& m : monomials_of_degree(n, deg)) {
        const auto p = Polynomial::monomial(m);
        CHECK(apply(br, p) == oracle::commutator(a, b, p));
      }
  }
}

TEST_CASE("antisymmetry, Jacobi identity, bilinearity") {
  gen::Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    const auto a = gen::derivation(rng, n, 2), b = gen::derivation(rng, n, 2), c = gen::derivation(rng, n, 2);
    CHECK(bracket(a, b) == -bracket(b, a));
    const auto jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    CHECK(jac.is_zero());
    const Rational s = gen::small_rational(rng);
    CHECK(bracket(s * a + b, c) == s * bracket(a, c) + bracket(b, c));
    CHECK(bracket(a, s * b + c) == s * bracket(a, b) + bracket(a, c));
  }
}
