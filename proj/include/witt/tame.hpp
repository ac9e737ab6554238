#pragma once

// Tame automorphism words over swaps, scalings and elementary shears, the
// Nagata automorphism of A_3, and the closed-form action of the generators
// on W_2.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "witt/derivation.hpp"
#include "witt/endomorphism.hpp"
#include "witt/jacobi.hpp"

namespace witt {

/// s_i: exchanges x_i and x_{i+1}.
struct Swap {
  std::size_t index = 1;
  friend bool operator==(const Swap&, const Swap&) = default;
};

/// tau_a: x1 -> a*x1.
struct Scale {
  Rational factor{1};
  friend bool operator==(const Scale&, const Scale&) = default;
};

/// x2 -> x2 + coeff*x1^power. psi_p is Shear{p, 1}.
struct Shear {
  unsigned power = 0;
  Rational coeff{1};
  friend bool operator==(const Shear&, const Shear&) = default;
};

using TameGenerator = std::variant<Swap, Scale, Shear>;

/// Throws InvalidArgument / ArityTooSmall if g is not a valid generator in
/// `arity` variables.
void validate_generator(const TameGenerator& g, std::size_t arity);
TameGenerator inverse(const TameGenerator& g);
/// (g(x1), ..., g(xn)).
JacobiTuple generator_tuple(const TameGenerator& g, std::size_t arity);

/// A finite word of generators acting left to right as polynomial maps:
/// to_tuple(w1 ++ w2) = compose(to_tuple(w1), to_tuple(w2)).
class TameWord {
 public:
  explicit TameWord(std::size_t arity, std::vector<TameGenerator> generators = {});

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<TameGenerator>& generators() const noexcept { return gens_; }
  bool empty() const noexcept { return gens_.empty(); }

  /// Concatenation.
  friend TameWord operator+(const TameWord& a, const TameWord& b);
  friend bool operator==(const TameWord&, const TameWord&) = default;

 private:
  std::size_t arity_;
  std::vector<TameGenerator> gens_;
};

JacobiTuple to_tuple(const TameWord& w);
TameWord invert(const TameWord& w);

/// The Nagata automorphism of A_3, with w = x2^2 + x1*x3:
///   (x1 - 2*w*x2 - w^2*x3, x2 + w*x3, x3).
JacobiTuple nagata();

enum class W2Formula {
  /// Closed forms that agree with sigma_f for the generator's tuple.
  Normative,
  /// The published displays as printed: a^i on d1 terms for tau_a and no
  /// factor p on the d2 correction for psi_p.
  PaperLiteral,
};

/// Image of a derivation of W_2 under the automorphism induced by g,
/// evaluated term by term from the closed-form displays.
Derivation w2_action(const TameGenerator& g, const Derivation& u, W2Formula formula = W2Formula::Normative);

/// Compares w2_action against sigma of generator_tuple(g, 2) on every basis
/// element of W_2 with degree <= `degree`.
VerificationReport cross_check_w2(const TameGenerator& g, unsigned degree, W2Formula formula = W2Formula::Normative);

/// `s1`, `t(3/2)`, `psi(4)`, `shear(4,-1)`.
std::string to_string(const TameGenerator& g);
/// Generators joined by `; `; the empty word prints as the empty string.
std::string to_string(const TameWord& w);

}  // namespace witt
