#pragma once

#include <cstdint>
#include <optional>

namespace mag {

// Problem-shape inputs for parameter selection. `sigma` is the observed
// distinct byte count; `sigma_prime` the reduced alphabet size (0 = pick by
// rule). `n` only scales the predicted cost; the (q, k) choice is independent
// of it.
struct TuningInput {
  std::uint32_t sigma = 256;
  std::uint32_t sigma_prime = 0;
  std::uint64_t r = 1;
  std::uint64_t m = 1;
  std::uint64_t n = 1u << 20;
  unsigned word_bits = 64;
};

struct TuningResult {
  unsigned q = 1;
  unsigned k = 1;
  std::uint32_t sigma_prime = 256;
  double rho = 0.0;          // log_sigma'(r*m) / m
  double predicted_p = 0.0;  // class match probability at one position
  double predicted_cost = 0.0;
};

// Expected superimposed class size: sigma_eff * (1 - (1 - 1/sigma_eff)^n_super).
double expected_class_size(double sigma_eff, double n_super);

// Probability that one position admits a random symbol:
// 1 - (1 - 1/sigma_eff)^n_super. The engine applies it with
// sigma_eff = sigma'^q and n_super = q*r.
double match_probability(double sigma_eff, double n_super);

// sigma' rule: user override wins; otherwise observed sigma when it is small
// enough (<= 64) to be worth mapping, else the full byte alphabet.
std::uint32_t resolve_sigma_prime(std::uint32_t sigma_observed, std::uint32_t user_choice);

// Largest q with sigma'^q within the table budget and m >= 2q-1, capped at kMaxQ.
unsigned max_feasible_q(const TuningInput& ti);

// q = round(log_sigma'(r*m)) clamped to [1, kMaxQ], lowered until feasible.
// Requires ti.sigma_prime resolved (> 0).
unsigned choose_q(const TuningInput& ti);

// Closed-form stride seed
//   m/log_sigma'(rm) * log_sigma'(1/rho) / (log_sigma'(rm) + log_sigma'(1/rho))
// with rho = log_sigma'(rm)/m, as a real value before rounding.
double strided_k_seed(const TuningInput& ti, unsigned q);

// Seed rounded and clamped to [1, L_q], then refined over k in [seed-2,
// seed+2] by predicted cost.
unsigned choose_k(const TuningInput& ti, unsigned q);

// Expected work for a scan: n_q/k filter reads plus
// n_q * p^m' * (2q-1) * r * m verification cost, with p the class match
// probability and m' the (possibly word-truncated) alignment length.
double predicted_cost(const TuningInput& ti, unsigned q, unsigned k);

// Joint selection: analytic seeds for q and k, then a local grid over both
// (the best k depends on q and vice versa). Fixed values are honored as-is.
TuningResult tune(const TuningInput& ti, std::optional<unsigned> fixed_q = std::nullopt,
                  std::optional<unsigned> fixed_k = std::nullopt);

}  // namespace mag
