#include "witt/endomorphism.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace witt {

Derivation WittEndomorphism::operator()(const Derivation& d) const {
  if (d.arity() != arity()) throw ArityMismatch(arity(), d.arity(), "WittEndomorphism::apply");
  Derivation out(arity());
  for (std::size_t j = 1; j <= arity(); ++j) {
    const auto& p = d.coefficient(j);
    if (p.is_zero()) continue;
    out += substitute(p, tuple_.components()) * tuple_.theta(j);
  }
  return out;
}

Derivation apply(const WittEndomorphism& e, const Derivation& d) { return e(d); }

WittEndomorphism compose(const WittEndomorphism& outer, const WittEndomorphism& inner) {
  return WittEndomorphism::from_tuple(compose(outer.tuple(), inner.tuple()));
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  std::size_t failures = 0;
  std::size_t first_index = 0;
  std::optional<Counterexample> first;
};

// Runs check(i) for i in [0, count). Aggregation only keeps counts and the
// lowest failing index, so the result does not depend on scheduling.
template <typename Check>
Outcome run_indexed(std::size_t count, unsigned threads, const Check& check) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

  Outcome total;
  std::mutex mutex;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;

  auto worker = [&] {
    Outcome local;
    try {
      for (std::size_t i = next++; i < count; i = next++) {
        if (auto cx = check(i)) {
          if (local.failures++ == 0 || i < local.first_index) {
            local.first_index = i;
            local.first = std::move(cx);
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(mutex);
      if (!error) error = std::current_exception();
      return;
    }
    std::lock_guard lock(mutex);
    if (local.failures == 0) return;
    if (total.failures == 0 || local.first_index < total.first_index) {
      total.first_index = local.first_index;
      total.first = std::move(local.first);
    }
    total.failures += local.failures;
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return total;
}

VerificationReport finish(std::string check, std::size_t arity, unsigned degree, std::size_t checked, Outcome outcome,
                          Clock::time_point start) {
  VerificationReport report;
  report.check = std::move(check);
  report.arity = arity;
  report.degree = degree;
  report.checked = checked;
  report.failures = outcome.failures;
  report.counterexample = std::move(outcome.first);
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace

VerificationReport verify_lie_homomorphism(std::size_t arity, unsigned degree, const DerivationMap& map,
                                           VerifyOptions options) {
  const auto start = Clock::now();
  const auto basis = basis_elements(arity, degree);
  const std::size_t m = basis.size();

  std::vector<std::optional<Derivation>> images(m);
  run_indexed(m, options.threads, [&](std::size_t i) -> std::optional<Counterexample> {
    images[i] = map(basis[i]);
    return std::nullopt;
  });

  auto outcome = run_indexed(m * m, options.threads, [&](std::size_t k) -> std::optional<Counterexample> {
    const auto& u = basis[k / m];
    const auto& v = basis[k % m];
    Derivation lhs = map(bracket(u, v));
    Derivation rhs = bracket(*images[k / m], *images[k % m]);
    if (lhs == rhs) return std::nullopt;
    return Counterexample{{u, v}, std::move(lhs), std::move(rhs)};
  });
  return finish("lie-homomorphism", arity, degree, m * m, std::move(outcome), start);
}

VerificationReport verify_endomorphism(const WittEndomorphism& e, unsigned degree, VerifyOptions options) {
  return verify_lie_homomorphism(e.arity(), degree, [&e](const Derivation& d) { return e(d); }, options);
}

VerificationReport compare_on_basis(std::string check, std::size_t arity, unsigned degree, const DerivationMap& lhs,
                                    const DerivationMap& rhs, VerifyOptions options) {
  const auto start = Clock::now();
  const auto basis = basis_elements(arity, degree);
  auto outcome = run_indexed(basis.size(), options.threads, [&](std::size_t i) -> std::optional<Counterexample> {
    Derivation a = lhs(basis[i]);
    Derivation b = rhs(basis[i]);
    if (a == b) return std::nullopt;
    return Counterexample{{basis[i]}, std::move(a), std::move(b)};
  });
  return finish(std::move(check), arity, degree, basis.size(), std::move(outcome), start);
}

VerificationReport verify_xi_homomorphism(const JacobiTuple& f, const JacobiTuple& g, unsigned degree,
                                          VerifyOptions options) {
  if (f.arity() != g.arity()) throw ArityMismatch(f.arity(), g.arity(), "verify_xi_homomorphism");
  const auto sf = WittEndomorphism::from_tuple(f);
  const auto sg = WittEndomorphism::from_tuple(g);
  const auto sfg = WittEndomorphism::from_tuple(compose(f, g));
  return compare_on_basis(
      "xi-homomorphism", f.arity(), degree, [&](const Derivation& u) { return sfg(u); },
      [&](const Derivation& u) { return sf(sg(u)); }, options);
}

VerificationReport verify_nonzero_images(const WittEndomorphism& e, unsigned degree) {
  const auto start = Clock::now();
  const auto basis = basis_elements(e.arity(), degree);
  auto outcome = run_indexed(basis.size(), 1, [&](std::size_t i) -> std::optional<Counterexample> {
    Derivation image = e(basis[i]);
    if (!image.is_zero()) return std::nullopt;
    return Counterexample{{basis[i]}, std::move(image), Derivation(e.arity())};
  });
  return finish("nonzero-images", e.arity(), degree, basis.size(), std::move(outcome), start);
}

}  // namespace witt
