#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "unitfrac/rational.hpp"
#include "unitfrac/report.hpp"
#include "unitfrac/underapprox.hpp"

namespace unitfrac {

/// Witness that greedy is not the best two-term underapproximation of
/// p/q = (k+1)/((k+1)kv − k), a fraction with Υ(p,q) = k and k | q.
struct Counterexample {
  std::int64_t k = 0;
  BigInt p;
  BigInt q;
  std::int64_t v = 0;
  std::optional<std::int64_t> s;  ///< bracket parameter; absent for k ≡ 0 (mod 4) and table rows
  Tuple greedy_pair;              ///< (a_1, a_2)
  Tuple beating_pair;             ///< (x_1, x_2)
  Rational margin;                ///< (1/x_1 + 1/x_2) − (1/a_1 + 1/a_2) > 0

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct TableEntry {
  std::int64_t k;
  std::int64_t v;
};

/// (k, v) rows for k ≡ 2 (mod 4), 6 ≤ k ≤ 46.
std::span<const TableEntry> table_k2();
/// (k, v) rows for k ≡ 3 (mod 4), 7 ≤ k ≤ 23.
std::span<const TableEntry> table_k3();

/// Whether (k(kv+1)((k+1)v−1) + k + 1/v) / (2k+1 + 1/(kv²)) exceeds
/// ⌊k(kv+1)((k+1)v−1)/(2k+1)⌋ + 1, evaluated exactly.
bool check_s5(std::int64_t k, std::int64_t v);

struct BeatingPair {
  BigInt p;
  BigInt q;
  Tuple greedy;   ///< (kv, kv((k+1)v−1) + 1)
  Tuple beating;  ///< (kv+1, ⌊k((k+1)v−1)(kv+1)/(2k+1)⌋ + 1)
};

/// Requires check_s5(k, v). Verifies 1/a_1+1/a_2 < 1/x_1+1/x_2 < p/q exactly
/// and that the formulas agree with the greedy algorithm; throws
/// InvariantError otherwise.
BeatingPair beating_pair(std::int64_t k, std::int64_t v);

struct VChoice {
  std::int64_t v = 0;
  std::optional<std::int64_t> s;
  bool from_table = false;
};

/// The v used for a given k ≥ 4, chosen by k mod 4.
VChoice choose_v(std::int64_t k);

Counterexample construct(std::int64_t k);

enum class FractionalClaim {
  KOne,    ///< k = 4j+1, v = 2s+5:  {x} = (5j+2+3s+(s−2)(s−1)/2)/(8j+3)
  KTwo,    ///< k = 4j+2, v = 4s+20: {x} = (2s²+18s+4j+43)/(8j+5)
  KThree,  ///< k = 4j+3, v = 4s+8:  {x} = (2s²+6s+4j+8)/(8j+7)
};

/// Bracket parameter s for j under a claim's rule; asserts exactly one s fits.
std::int64_t bracket_s(FractionalClaim claim, std::int64_t j);

/// Inclusive j range covered by bracket s.
std::pair<std::int64_t, std::int64_t> bracket_range(FractionalClaim claim, std::int64_t s);

/// For every admissible j ≤ j_max, compares {x} with the claimed closed form
/// and ⌊x⌋ + 1 with the claimed polynomial. Points are (j, s).
VerificationReport check_fractional_claims(FractionalClaim claim, std::int64_t j_max);

/// The quadratic in j whose negativity is equivalent to the (k, v) choice
/// working for residue case `residue` (1, 2 or 3).
BigInt root_quadratic(int residue, std::int64_t s, std::int64_t j);

/// For each s up to s_max, evaluates the quadratic at both ends of the
/// bracket; it opens upward, so negativity at both ends covers the bracket.
/// Points are (s, j).
VerificationReport check_root_interval(int residue, std::int64_t s_max);

/// check_s5 on every table row.
VerificationReport verify_tables();

/// construct(k) for every 4 ≤ k ≤ k_max, checking Υ = k, k | q and the strict
/// inequalities. Points are (k).
VerificationReport verify_constructions(std::int64_t k_max, unsigned jobs = 1);

}  // namespace unitfrac
