#include "unitfrac/counterexample.hpp"

#include <array>
#include <string>

#include "unitfrac/greedy.hpp"
#include "unitfrac/parallel.hpp"

namespace unitfrac {
namespace {

// Brute-force (k, v) solutions for small j where the bracket formulas do not
// apply yet.
constexpr std::array<TableEntry, 11> kTableK2{{
    {6, 8}, {10, 11}, {14, 12}, {18, 12}, {22, 12}, {26, 15},
    {30, 16}, {34, 16}, {38, 16}, {42, 16}, {46, 16},
}};
constexpr std::array<TableEntry, 5> kTableK3{{
    {7, 8}, {11, 13}, {15, 12}, {19, 12}, {23, 12},
}};

BigInt big(std::int64_t n) { return BigInt(static_cast<long>(n)); }

// k(kv+1)((k+1)v−1), the numerator shared by both sides of the inequality.
BigInt s5_core(const BigInt& k, const BigInt& v) { return k * (k * v + 1) * ((k + 1) * v - 1); }

std::int64_t claim_k(FractionalClaim claim, std::int64_t j) {
  switch (claim) {
    case FractionalClaim::KOne: return 4 * j + 1;
    case FractionalClaim::KTwo: return 4 * j + 2;
    case FractionalClaim::KThree: return 4 * j + 3;
  }
  return 0;
}

std::int64_t claim_v(FractionalClaim claim, std::int64_t s) {
  switch (claim) {
    case FractionalClaim::KOne: return 2 * s + 5;
    case FractionalClaim::KTwo: return 4 * s + 20;
    case FractionalClaim::KThree: return 4 * s + 8;
  }
  return 0;
}

std::int64_t claim_min_s(FractionalClaim claim) {
  switch (claim) {
    case FractionalClaim::KOne: return 1;
    case FractionalClaim::KTwo: return 0;
    case FractionalClaim::KThree: return 2;
  }
  return 0;
}

std::int64_t claim_min_j(FractionalClaim claim) { return bracket_range(claim, claim_min_s(claim)).first; }

Rational claimed_fraction(FractionalClaim claim, const BigInt& j, const BigInt& s) {
  switch (claim) {
    case FractionalClaim::KOne:
      return Rational::make(5 * j + 2 + 3 * s + (s - 2) * (s - 1) / 2, 8 * j + 3);
    case FractionalClaim::KTwo:
      return Rational::make(2 * s * s + 18 * s + 4 * j + 43, 8 * j + 5);
    case FractionalClaim::KThree:
      return Rational::make(2 * s * s + 6 * s + 4 * j + 8, 8 * j + 7);
  }
  return {};
}

// ⌊x⌋ + 1 as the polynomial in (j, s) that the claims' proofs produce.
BigInt claimed_ceiling(FractionalClaim claim, const BigInt& j, const BigInt& s) {
  BigInt j2 = j * j;
  BigInt s2 = s * s;
  switch (claim) {
    case FractionalClaim::KOne:
      return 32 * j2 * s2 + 160 * j2 * s + 200 * j2 + 20 * j * s2 + 100 * j * s + 125 * j +
             (5 * s2 + 27 * s) / 2 + 18;
    case FractionalClaim::KTwo:
      return 960 + 3600 * j + 3200 * j2 + 382 * s + 1440 * j * s + 1280 * j2 * s + 38 * s2 +
             144 * j * s2 + 128 * j2 * s2;
    case FractionalClaim::KThree:
      return 332 + 832 * j + 512 * j2 + 330 * s + 832 * j * s + 512 * j2 * s + 82 * s2 +
             208 * j * s2 + 128 * j2 * s2;
  }
  return {};
}

FractionalClaim claim_for_residue(int residue) {
  switch (residue) {
    case 1: return FractionalClaim::KOne;
    case 2: return FractionalClaim::KTwo;
    case 3: return FractionalClaim::KThree;
    default: throw DomainError("residue case must be 1, 2 or 3");
  }
}

const char* claim_id(FractionalClaim claim) {
  switch (claim) {
    case FractionalClaim::KOne: return "claim-k1";
    case FractionalClaim::KTwo: return "claim-k2";
    case FractionalClaim::KThree: return "claim-k3";
  }
  return "claim";
}

}  // namespace

std::span<const TableEntry> table_k2() { return kTableK2; }
std::span<const TableEntry> table_k3() { return kTableK3; }

bool check_s5(std::int64_t k, std::int64_t v) {
  if (k < 4) throw DomainError("k must be at least 4");
  if (v < 1) throw DomainError("v must be at least 1");
  BigInt K = big(k);
  BigInt V = big(v);
  BigInt core = s5_core(K, V);
  Rational lhs = (Rational(core + K) + Rational::unit(V)) /
                 (Rational(2 * K + 1) + Rational::unit(K * V * V));
  BigInt rhs = floor(Rational::make(core, 2 * K + 1)) + 1;
  return lhs > Rational(rhs);
}

BeatingPair beating_pair(std::int64_t k, std::int64_t v) {
  if (!check_s5(k, v)) {
    throw DomainError("(k, v) = (" + std::to_string(k) + ", " + std::to_string(v) + ") does not satisfy the inequality");
  }
  BigInt K = big(k);
  BigInt V = big(v);
  BeatingPair out;
  out.p = K + 1;
  out.q = (K + 1) * K * V - K;
  out.greedy = {K * V, K * V * ((K + 1) * V - 1) + 1};
  out.beating = {K * V + 1, floor(Rational::make(K * ((K + 1) * V - 1) * (K * V + 1), 2 * K + 1)) + 1};

  Rational theta = Rational::make(out.p, out.q);
  if (expand(theta, 2).terms != out.greedy) throw InvariantError("greedy pair formula disagrees with expand");
  if (g_func(theta - Rational::unit(out.beating[0])) != out.beating[1]) {
    throw InvariantError("x_2 formula disagrees with G(p/q - 1/x_1)");
  }
  Rational greedy_sum = reciprocal_sum(out.greedy);
  Rational beating_sum = reciprocal_sum(out.beating);
  if (!(greedy_sum < beating_sum && beating_sum < theta)) {
    throw InvariantError("beating pair fails the strict inequalities at k=" + std::to_string(k) +
                         " v=" + std::to_string(v));
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> bracket_range(FractionalClaim claim, std::int64_t s) {
  switch (claim) {
    case FractionalClaim::KOne: return {s * (s + 1) / 2, (s + 1) * (s + 2) / 2 - 1};
    case FractionalClaim::KTwo: return {12 + s * (s + 7), 11 + (s + 1) * (s + 8)};
    case FractionalClaim::KThree: return {s * (s + 1), (s + 1) * (s + 2) - 1};
  }
  return {0, -1};
}

std::int64_t bracket_s(FractionalClaim claim, std::int64_t j) {
  if (j < claim_min_j(claim)) throw DomainError("j = " + std::to_string(j) + " below the bracket rule's range");
  std::optional<std::int64_t> found;
  int matches = 0;
  for (std::int64_t s = claim_min_s(claim); bracket_range(claim, s).first <= j; ++s) {
    if (j <= bracket_range(claim, s).second) {
      found = s;
      ++matches;
    }
  }
  if (matches != 1) throw InvariantError("bracket rule admits " + std::to_string(matches) + " values of s");
  return *found;
}

VChoice choose_v(std::int64_t k) {
  if (k < 4) throw DomainError("k must be at least 4");
  std::int64_t j = k / 4;
  auto lookup = [&](std::span<const TableEntry> table) {
    for (const auto& e : table) {
      if (e.k == k) return VChoice{e.v, std::nullopt, true};
    }
    throw InvariantError("no table row for k = " + std::to_string(k));
  };
  switch (k % 4) {
    case 0:
      return {1, std::nullopt, false};
    case 1: {
      std::int64_t s = bracket_s(FractionalClaim::KOne, j);
      return {claim_v(FractionalClaim::KOne, s), s, false};
    }
    case 2: {
      if (j <= 11) return lookup(kTableK2);
      std::int64_t s = bracket_s(FractionalClaim::KTwo, j);
      return {claim_v(FractionalClaim::KTwo, s), s, false};
    }
    default: {
      if (j <= 5) return lookup(kTableK3);
      std::int64_t s = bracket_s(FractionalClaim::KThree, j);
      return {claim_v(FractionalClaim::KThree, s), s, false};
    }
  }
}

Counterexample construct(std::int64_t k) {
  VChoice choice = choose_v(k);
  if (!check_s5(k, choice.v)) {
    throw InvariantError("chosen v = " + std::to_string(choice.v) + " fails for k = " + std::to_string(k));
  }
  BeatingPair bp = beating_pair(k, choice.v);
  BigInt K = big(k);
  if (upsilon(bp.p, bp.q) != K) throw InvariantError("constructed fraction has Upsilon != k");
  if (!mpz_divisible_p(bp.q.get_mpz_t(), K.get_mpz_t())) throw InvariantError("k does not divide q");

  Counterexample c;
  c.k = k;
  c.p = bp.p;
  c.q = bp.q;
  c.v = choice.v;
  c.s = choice.s;
  c.greedy_pair = bp.greedy;
  c.beating_pair = bp.beating;
  c.margin = reciprocal_sum(bp.beating) - reciprocal_sum(bp.greedy);
  return c;
}

VerificationReport check_fractional_claims(FractionalClaim claim, std::int64_t j_max) {
  VerificationReport report;
  report.lemma_id = claim_id(claim);
  std::int64_t j_min = claim_min_j(claim);
  report.range_descr = std::to_string(j_min) + " <= j <= " + std::to_string(j_max);
  for (std::int64_t j = j_min; j <= j_max; ++j) {
    std::int64_t s = bracket_s(claim, j);
    BigInt K = big(claim_k(claim, j));
    BigInt V = big(claim_v(claim, s));
    Rational x = Rational::make(s5_core(K, V), 2 * K + 1);
    BigInt fl = floor(x);
    Rational frac = x - Rational(fl);
    Rational expected = claimed_fraction(claim, big(j), big(s));
    ++report.points_checked;
    if (frac != expected) {
      report.failures.push_back({{j, s}, "fractional_part", "observed " + frac.str() + " claimed " + expected.str()});
    }
    BigInt ceiling = claimed_ceiling(claim, big(j), big(s));
    if (fl + 1 != ceiling) {
      report.failures.push_back({{j, s}, "floor_plus_one", "observed " + BigInt(fl + 1).get_str() +
                                                              " claimed " + ceiling.get_str()});
    }
  }
  report.normalize();
  return report;
}

BigInt root_quadratic(int residue, std::int64_t s_in, std::int64_t j_in) {
  BigInt s = big(s_in);
  BigInt j = big(j_in);
  BigInt s2 = s * s;
  BigInt s3 = s2 * s;
  BigInt s4 = s3 * s;
  switch (residue) {
    case 1:
      return (8 * s2 + 40 * s + 50) * j * j - (4 * s4 + 32 * s3 + 85 * s2 + 79 * s + 10) * j -
             (s4 + 8 * s3 + 22 * s2 + 23 * s + 6);
    case 2:
      return (64 * s + 320) * j * j - (64 * s3 + 896 * s2 + 4088 * s + 6048) * j -
             (32 * s3 + 448 * s2 + 2061 * s + 3108);
    case 3:
      return 64 * (s + 2) * j * j - 8 * (8 * s3 + 40 * s2 + 51 * s + 7) * j -
             (48 * s3 + 240 * s2 + 343 * s + 115);
    default:
      throw DomainError("residue case must be 1, 2 or 3");
  }
}

VerificationReport check_root_interval(int residue, std::int64_t s_max) {
  FractionalClaim claim = claim_for_residue(residue);
  if (s_max < 2) throw DomainError("s_max must be at least 2");
  VerificationReport report;
  report.lemma_id = "roots-k" + std::to_string(residue);
  std::int64_t s_min = claim_min_s(claim);
  report.range_descr = std::to_string(s_min) + " <= s <= " + std::to_string(s_max) + ", bracket endpoints";
  for (std::int64_t s = s_min; s <= s_max; ++s) {
    auto [lo, hi] = bracket_range(claim, s);
    for (std::int64_t j : {lo, hi}) {
      ++report.points_checked;
      BigInt value = root_quadratic(residue, s, j);
      if (value >= 0) {
        report.failures.push_back({{s, j}, "nonnegative", "quadratic = " + value.get_str()});
      }
      // The quadratic is a rearrangement of the (k, v) inequality itself.
      if (!check_s5(claim_k(claim, j), claim_v(claim, s))) {
        report.failures.push_back({{s, j}, "s5_false", "direct inequality fails"});
      }
    }
  }
  report.normalize();
  return report;
}

VerificationReport verify_tables() {
  VerificationReport report;
  report.lemma_id = "tables";
  report.range_descr = "table rows for k = 4j+2 (j <= 11) and k = 4j+3 (j <= 5)";
  for (auto table : {table_k2(), table_k3()}) {
    for (const auto& e : table) {
      ++report.points_checked;
      if (!check_s5(e.k, e.v)) report.failures.push_back({{e.k, e.v}, "s5_false", ""});
    }
  }
  return report;
}

VerificationReport verify_constructions(std::int64_t k_max, unsigned jobs) {
  if (k_max < 4) throw DomainError("k_max must be at least 4");
  auto n = static_cast<std::size_t>(k_max - 3);
  auto outcomes = parallel_map(n, jobs, [](std::size_t i) -> std::optional<Failure> {
    std::int64_t k = static_cast<std::int64_t>(i) + 4;
    try {
      construct(k);
    } catch (const std::exception& e) {
      return Failure{{k}, "construct", e.what()};
    }
    return std::nullopt;
  });
  VerificationReport report;
  report.lemma_id = "construct";
  report.range_descr = "4 <= k <= " + std::to_string(k_max);
  report.points_checked = n;
  for (auto& o : outcomes) {
    if (o) report.failures.push_back(std::move(*o));
  }
  return report;
}

}  // namespace unitfrac
