#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "unitfrac/rational.hpp"
#include "unitfrac/report.hpp"

namespace unitfrac {

/// Denominators of an m-term sum, stored nondecreasing.
using Tuple = std::vector<BigInt>;

Rational reciprocal_sum(const Tuple& xs);

enum class SearchStatus { Complete, Inconclusive };

std::string_view to_string(SearchStatus status);

/// Outcome of an exact best-underapproximation search.
///
/// `optimal_tuples` is the full argmax set (sorted, no duplicates); ties are
/// never broken. When `status` is Inconclusive the search ran out of budget
/// and only `theta`, `m`, the greedy fields and `nodes` are meaningful.
struct UnderapproxResult {
  Rational theta;
  std::size_t m = 0;
  Tuple greedy_terms;
  Rational greedy_sum;
  std::vector<Tuple> optimal_tuples;
  Rational optimal_sum;
  bool greedy_is_best = false;
  bool unique = false;
  SearchStatus status = SearchStatus::Complete;
  std::uint64_t nodes = 0;
};

/// Admissible range for x_i at one level of the branch-and-bound.
struct SearchBounds {
  std::size_t level = 0;  ///< 1-based index i
  BigInt lower;
  BigInt upper;
  bool empty() const { return lower > upper; }
};

/// lower = max(x_{i−1}, ⌊1/(θ−s)⌋ + 1); upper = ⌊r/(B−s)⌋ with r = m − i + 1
/// remaining terms. Requires s < θ and s < B.
SearchBounds level_bounds(std::size_t level, std::size_t m, const Rational& theta,
                          const Rational& partial_sum, const BigInt& previous, const Rational& incumbent);

/// Exhaustive two-term search: x_1 over [G(θ), ⌊2/S⌋] with S the greedy sum,
/// partner x_2 = G(θ − 1/x_1).
UnderapproxResult best_two_term(const Rational& theta);

/// Every sorted pair other than the greedy pair with S ≤ 1/x_1 + 1/x_2 < θ.
std::vector<Tuple> competing_pairs(const Rational& theta);

inline constexpr std::uint64_t kDefaultSearchBudget = 200'000'000;

/// Complete branch-and-bound over nondecreasing m-tuples, incumbent seeded
/// with the greedy sum. Exceeding `budget` nodes yields status Inconclusive.
UnderapproxResult best_m_term(const Rational& theta, std::size_t m,
                              std::uint64_t budget = kDefaultSearchBudget);

/// a_1+1 ≤ x_1 ≤ 2a_1−1 ≤ x_2 < a_1x_1/(x_1−a_1) and x_2 ≤ a_2−1.
/// Throws DomainError unless (x_1,x_2) is a sorted non-greedy pair with
/// 1/a_1 + 1/a_2 ≤ 1/x_1 + 1/x_2 < θ.
bool na23_bounds_check(const Rational& theta, const BigInt& x1, const BigInt& x2);

/// Prefix-product domination ∏_{i≤k} a_i ≤ ∏_{i≤k} x_i for every k. When it
/// holds, Σ1/x < Σ1/a is asserted (InvariantError otherwise).
bool muirhead_certificate(const Tuple& x, const Tuple& a);

/// One row of the two-term threshold sweep.
struct ThresholdRow {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t upsilon = 0;
  bool greedy_is_best = false;
  bool unique = false;
  std::vector<Tuple> ties;    ///< full optimal set when greedy is best but not unique
  std::vector<Tuple> losses;  ///< pairs strictly beating greedy
};

struct ThresholdSweep {
  VerificationReport report;
  std::vector<ThresholdRow> rows;  ///< every reduced p/q, ordered by (q, p)
};

/// Every reduced p/q with p < q ≤ q_max: for Υ ≤ 3 greedy must be the unique
/// best two-term underapproximation, except the 10/17 tie {(2,12),(3,4)}.
/// Rows with Υ ≥ 4 are recorded without assertion.
ThresholdSweep verify_threshold_sweep(std::int64_t q_max, unsigned jobs = 1);

}  // namespace unitfrac
