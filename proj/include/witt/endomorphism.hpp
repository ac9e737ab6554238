#pragma once

// The Witt-algebra endomorphism sigma_f attached to a Jacobi tuple f:
//   sigma_f(x^k d_j) = f_1^k1 ... f_n^kn theta_j,
// and the exhaustive verification engine for its algebraic properties.

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "witt/derivation.hpp"
#include "witt/jacobi.hpp"

namespace witt {

class WittEndomorphism {
 public:
  static WittEndomorphism from_tuple(JacobiTuple f) { return WittEndomorphism(std::move(f)); }

  const JacobiTuple& tuple() const noexcept { return tuple_; }
  std::size_t arity() const noexcept { return tuple_.arity(); }

  /// sum_j P_j d_j  ->  sum_j P_j(f) theta_j.
  Derivation operator()(const Derivation& d) const;

 private:
  explicit WittEndomorphism(JacobiTuple f) : tuple_(std::move(f)) {}

  JacobiTuple tuple_;
};

Derivation apply(const WittEndomorphism& e, const Derivation& d);

/// sigma_{outer.f . inner.f}, which acts as outer after inner.
WittEndomorphism compose(const WittEndomorphism& outer, const WittEndomorphism& inner);

using DerivationMap = std::function<Derivation(const Derivation&)>;

struct Counterexample {
  /// The basis element(s) the check was evaluated on.
  std::vector<Derivation> inputs;
  Derivation lhs;
  Derivation rhs;
};

struct VerificationReport {
  std::string check;
  std::size_t arity = 0;
  unsigned degree = 0;
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// The failing case that comes first in enumeration order.
  std::optional<Counterexample> counterexample;
  std::chrono::duration<double> elapsed{0};

  bool passed() const noexcept { return failures == 0; }
};

struct VerifyOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Checks map([u, v]) == [map(u), map(v)] for every ordered pair of
/// basis elements of degree <= `degree`. `map` must be safe to call
/// concurrently.
VerificationReport verify_lie_homomorphism(std::size_t arity, unsigned degree, const DerivationMap& map,
                                           VerifyOptions options = {});

VerificationReport verify_endomorphism(const WittEndomorphism& e, unsigned degree, VerifyOptions options = {});

/// Checks sigma_{f.g}(u) == sigma_f(sigma_g(u)) on every basis element u.
VerificationReport verify_xi_homomorphism(const JacobiTuple& f, const JacobiTuple& g, unsigned degree,
                                          VerifyOptions options = {});

/// Checks that no nonzero basis element is sent to zero.
VerificationReport verify_nonzero_images(const WittEndomorphism& e, unsigned degree);

/// Compares two maps on every basis element of degree <= `degree`.
VerificationReport compare_on_basis(std::string check, std::size_t arity, unsigned degree, const DerivationMap& lhs,
                                    const DerivationMap& rhs, VerifyOptions options = {});

}  // namespace witt
