#pragma once

#include <cstdint>
#include <vector>

#include "unitfrac/rational.hpp"
#include "unitfrac/report.hpp"

namespace unitfrac {

/// Both sides of the two-term floor inequality
///
///   ⌊qu(u+s) / (s(q+c) + cu)⌋  >  (qu+v)u(u+s) / (squ + vs + cu(u+s)) − 1
///
/// with c = 2 for the Υ = 2 lemma and c = 3 for the Υ = 3 lemmas.
/// `holds` is decided on integers after clearing the denominator.
struct FloorInequality {
  BigInt lhs;    ///< the floor
  Rational rhs;  ///< right side, exact
  bool holds = false;
};

FloorInequality evaluate_floor_inequality(std::int64_t q, std::int64_t u, std::int64_t s, std::int64_t v,
                                          std::int64_t c);

/// c = 2: all q ≤ q_max, u | q+2 with (q+2)/u ≥ 3, 1 ≤ s < u, v ∈ {1,2}.
/// No exceptions expected. Points are (q, u, s, v).
VerificationReport verify_lp1(std::int64_t q_max, unsigned jobs = 1);

/// c = 3: all q ≤ q_max, u | q+3 with (q+3)/u ≥ 4, 1 ≤ s < u, v ∈ {1,2,3}.
/// Expected exceptions at (q, u) ∈ {(17,2), (61,8)}. Points are (q, u, s, v).
VerificationReport verify_lp11(std::int64_t q_max, unsigned jobs = 1);

/// The s = 1, v = 3 slice of the c = 3 inequality over the same (q, u) box,
/// with the same two expected exceptions. Points are (q, u).
VerificationReport verify_lp50(std::int64_t q_max, unsigned jobs = 1);

/// ⌊61(8+s)/(8s+3)⌋ > 3912(8+s)/(513s+192) − 1 for every s ≥ 1 except 155,
/// where both sides equal 7. Checked exactly for s ≤ s_exact_max; beyond
/// s = 155 the threshold argument is verified symbolically. Points are (s).
VerificationReport verify_lp12(std::int64_t s_exact_max = 10000);

/// Full two-term search at every p/q that a c = 3 exception maps to
/// (p = (q+3)/u), plus controls 8/61 and 10/27: 10/17 must tie exactly with
/// {(2,12),(3,4)}, every other point must have greedy as the unique best.
/// Points are (p, q).
VerificationReport tie_bridge_check(std::int64_t q_max, unsigned jobs = 1);

/// A (u, s, k) for which ku² − 2cu − cs = (ks+c)ℓ + (ks + offset) has an
/// integral ℓ ≥ 0.
struct RemainderSurvivor {
  std::int64_t u = 0;
  std::int64_t s = 0;
  std::int64_t k = 0;
  std::int64_t ell = 0;

  friend bool operator==(const RemainderSurvivor&, const RemainderSurvivor&) = default;
};

/// Brute-force search used by the case analyses: k and u over inclusive
/// ranges, s_min ≤ s ≤ u − 1.
std::vector<RemainderSurvivor> remainder_survivors(std::int64_t c, std::int64_t offset, std::int64_t k_lo,
                                                   std::int64_t k_hi, std::int64_t u_lo, std::int64_t u_hi,
                                                   std::int64_t s_min = 1);

/// Whether a·n² ≡ b (mod m) has a solution.
bool congruence_solvable(std::int64_t a, std::int64_t b, std::int64_t m);

/// u in [u_lo, u_hi] with 3(u+1)² = ℓ(k+3) + j for an integer ℓ ≥ 0.
std::vector<std::int64_t> square_remainder_solutions(std::int64_t k, std::int64_t j, std::int64_t u_lo,
                                                     std::int64_t u_hi);

}  // namespace unitfrac
