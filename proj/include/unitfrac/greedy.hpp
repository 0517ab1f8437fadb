#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "unitfrac/rational.hpp"

namespace unitfrac {

/// Optional limit on the decimal size of any produced denominator.
struct ExpandOptions {
  std::optional<std::size_t> digit_guard;
};

/// θ together with its first m greedy denominators and the exact error
/// e_m = θ − Σ 1/a_n.
struct Expansion {
  Rational theta;
  std::vector<BigInt> terms;
  Rational error;

  /// Smallest n (1-based) such that a_{k+1} = a_k² − a_k + 1 for every
  /// computed pair k ≥ n. Empty if there are fewer than two terms or the last
  /// pair does not satisfy it.
  std::optional<std::size_t> recurrence_start() const;

  friend bool operator==(const Expansion&, const Expansion&) = default;
};

/// Runs the greedy algorithm one term at a time, carrying the error exactly.
class GreedyStepper {
 public:
  explicit GreedyStepper(const Rational& theta, ExpandOptions options = {});

  /// Emits a_{k+1} = G(e_k) and updates e_{k+1} = e_k − 1/a_{k+1}.
  BigInt next();

  const Rational& error() const { return error_; }
  std::size_t steps() const { return steps_; }

 private:
  Rational error_;
  std::size_t steps_ = 0;
  ExpandOptions options_;
};

/// The fraction p/q as a value in (0, 1]. Throws DomainError otherwise.
Rational unit_interval_fraction(const BigInt& p, const BigInt& q);

/// G(θ) = ⌊1/θ⌋ + 1, so that 1/G(θ) < θ ≤ 1/(G(θ) − 1).
BigInt g_func(const Rational& theta);

Expansion expand(const Rational& theta, std::size_t m, const ExpandOptions& options = {});

/// Smallest m ≥ 1 with p | q + m.
BigInt upsilon(const BigInt& p, const BigInt& q);

/// Smallest ℓ ≥ 0 with p | q + ℓ. Requires gcd(p, q) = 1 and 1 ≤ p ≤ q.
BigInt ell_index(const BigInt& p, const BigInt& q);

struct DeltaResult {
  std::size_t steps = 0;   ///< Δ(p/q)
  BigInt reciprocal;       ///< the integer (p/q − Σ_{n≤Δ} 1/a_n)⁻¹
};

/// Δ(p/q): smallest m ≥ 0 whose error term has an integral reciprocal.
/// Requires gcd(p, q) = 1 and 0 < p/q ≤ 1.
DeltaResult delta_index(const BigInt& p, const BigInt& q, const ExpandOptions& options = {});

/// Φ(θ) = 1 / (G(θ) − 1/θ) on (0, 1].
Rational phi(const Rational& theta);

/// b = ⌊N/e⌋ + 1: N/b is the largest fraction with numerator N below e.
BigInt superior_denominator(const Rational& e, const BigInt& N);

/// All four equivalent conditions comparing 1/a_m against N/b_m.
struct StepReport {
  std::size_t m = 0;
  BigInt N;
  BigInt a_m;
  BigInt a_next;          ///< a_{m+1}
  BigInt b_m;
  Rational error_before;  ///< e_{m−1}
  Rational phi_value;     ///< Φ(e_{m−1})
  bool cond_i = false;    ///< a_{m+1} ≥ N a_m² − a_m + 1
  bool cond_ii = false;   ///< b_m = N a_m
  bool cond_iii = false;  ///< Φ(e_{m−1}) ≥ N
  bool cond_iv = false;   ///< e_{m−1} ≤ N / (N a_m − 1)
};

/// Throws InvariantError if the four conditions disagree.
StepReport step_report(const Rational& theta, std::size_t m, const BigInt& N);

enum class Family { PDividesQPlus1, UpsilonDividesQ, Upsilon2OddQ, General };

std::string_view to_string(Family family);

struct UpsilonProfile {
  BigInt p;
  BigInt q;
  BigInt upsilon;
  BigInt ell;
  std::size_t delta = 0;
  Family family = Family::General;
};

/// Reduces p/q first; the returned profile carries the reduced pair.
UpsilonProfile upsilon_profile(const BigInt& p, const BigInt& q, const ExpandOptions& options = {});

/// Closed-form terms when Υ(p,q) | q:
/// a_1 = (q+Υ)/p, a_n = (q/Υ)·∏_{i<n} a_i + 1.
std::vector<BigInt> closed_form_upsilon_divides_q(const BigInt& p, const BigInt& q, std::size_t m);

/// Closed-form terms for odd q with Υ(p,q) = 2:
/// a_1 = (q+2)/p, a_2 = ⌊q a_1 / 2⌋ + 1, a_n = q·∏_{i<n} a_i + 1.
std::vector<BigInt> closed_form_upsilon2_odd_q(const BigInt& p, const BigInt& q, std::size_t m);

/// Closed-form terms when p | q + 1: a_1 = (q+1)/p, a_{n+1} = q·∏_{i≤n} a_i + 1.
std::vector<BigInt> closed_form_p_divides_q_plus_1(const BigInt& p, const BigInt& q, std::size_t m);

struct RecurrenceCheck {
  bool holds = false;                         ///< for every ℓ+1 ≤ n < horizon
  BigInt ell;
  std::optional<std::size_t> observed_start;  ///< see Expansion::recurrence_start
};

/// Checks a_{n+1} = a_n² − a_n + 1 for ℓ+1 ≤ n < horizon on 𝒢(p/q).
RecurrenceCheck eventual_quadratic_recurrence(const BigInt& p, const BigInt& q, std::size_t horizon);

enum class GrowthVariant {
  Quadratic,  ///< c_{n+1} ≥ N c_n² − c_n + 1
  Cubic,      ///< c_{n+1} ≥ c_n³ − c_n + 1
};

struct GrowthCheck {
  bool holds = false;
  std::optional<std::size_t> first_violation;  ///< 1-based n of the failing pair
  std::optional<std::size_t> m_N;              ///< cubic only: first m with c_m ≥ N
};

/// Finite-prefix growth test. Nothing is claimed about the tail.
GrowthCheck growth_condition_check(std::span<const BigInt> seq, const BigInt& N,
                                   GrowthVariant variant = GrowthVariant::Quadratic);

}  // namespace unitfrac
