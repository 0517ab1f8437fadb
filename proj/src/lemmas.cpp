#include "unitfrac/lemmas.hpp"

#include <set>
#include <string>
#include <utility>

#include "unitfrac/parallel.hpp"
#include "unitfrac/underapprox.hpp"

namespace unitfrac {
namespace {

BigInt big(std::int64_t n) { return BigInt(static_cast<long>(n)); }

std::string detail_of(const FloorInequality& f) { return "lhs=" + f.lhs.get_str() + " rhs=" + f.rhs.str(); }

// Sweeps the c-inequality over q ∈ [q_min, q_max], u | q+c with (q+c)/u ≥ c+1.
// `emit` decides which (s, v) to test for a given u and how points look.
template <typename PointsFn>
VerificationReport sweep_floor_inequality(std::int64_t c, std::int64_t q_min, std::int64_t q_max, unsigned jobs,
                                          PointsFn points_for) {
  if (q_max < q_min) throw DomainError("q_max must be at least " + std::to_string(q_min));
  auto n = static_cast<std::size_t>(q_max - q_min + 1);
  auto partial = parallel_map(n, jobs, [&](std::size_t i) {
    VerificationReport r;
    std::int64_t q = q_min + static_cast<std::int64_t>(i);
    for (std::int64_t u = 2; u <= (q + c) / (c + 1); ++u) {
      if ((q + c) % u != 0) continue;
      for (auto [s, v, point] : points_for(q, u)) {
        ++r.points_checked;
        FloorInequality f = evaluate_floor_inequality(q, u, s, v, c);
        if (!f.holds) r.failures.push_back({point, "violated", detail_of(f)});
      }
    }
    return r;
  });
  VerificationReport out;
  for (const auto& r : partial) out.absorb(r);
  return out;
}

struct SvPoint {
  std::int64_t s;
  std::int64_t v;
  Point point;
};

std::vector<SvPoint> full_sv(std::int64_t q, std::int64_t u, std::int64_t v_max) {
  std::vector<SvPoint> out;
  for (std::int64_t s = 1; s < u; ++s) {
    for (std::int64_t v = 1; v <= v_max; ++v) out.push_back({s, v, {q, u, s, v}});
  }
  return out;
}

const std::vector<ExpectedException> kUpsilon3Exceptions{{{17, 2}, ""}, {{61, 8}, ""}};

}  // namespace

FloorInequality evaluate_floor_inequality(std::int64_t q_in, std::int64_t u_in, std::int64_t s_in,
                                          std::int64_t v_in, std::int64_t c_in) {
  BigInt q = big(q_in), u = big(u_in), s = big(s_in), v = big(v_in), c = big(c_in);
  BigInt left_num = q * u * (u + s);
  BigInt left_den = s * (q + c) + c * u;
  BigInt right_num = (q * u + v) * u * (u + s);
  BigInt right_den = s * q * u + v * s + c * u * (u + s);
  if (left_den <= 0 || right_den <= 0) throw DomainError("floor inequality parameters out of range");

  FloorInequality f;
  mpz_fdiv_q(f.lhs.get_mpz_t(), left_num.get_mpz_t(), left_den.get_mpz_t());
  f.rhs = Rational::make(right_num, right_den) - Rational(1);
  // lhs > N/D − 1  ⇔  (lhs + 1)·D > N
  f.holds = (f.lhs + 1) * right_den > right_num;
  return f;
}

VerificationReport verify_lp1(std::int64_t q_max, unsigned jobs) {
  VerificationReport r = sweep_floor_inequality(2, 4, q_max, jobs, [](std::int64_t q, std::int64_t u) {
    return full_sv(q, u, 2);
  });
  r.lemma_id = "lp1";
  r.range_descr = "4 <= q <= " + std::to_string(q_max) + ", u | q+2, (q+2)/u >= 3, 1 <= s < u, v in {1,2}";
  return r;
}

VerificationReport verify_lp11(std::int64_t q_max, unsigned jobs) {
  VerificationReport r = sweep_floor_inequality(3, 5, q_max, jobs, [](std::int64_t q, std::int64_t u) {
    return full_sv(q, u, 3);
  });
  r.lemma_id = "lp11";
  r.range_descr = "5 <= q <= " + std::to_string(q_max) + ", u | q+3, (q+3)/u >= 4, 1 <= s < u, v in {1,2,3}";
  r.expected_exceptions = kUpsilon3Exceptions;
  return r;
}

VerificationReport verify_lp50(std::int64_t q_max, unsigned jobs) {
  VerificationReport r = sweep_floor_inequality(3, 5, q_max, jobs, [](std::int64_t q, std::int64_t u) {
    return std::vector<SvPoint>{{1, 3, {q, u}}};
  });
  r.lemma_id = "lp50";
  r.range_descr = "5 <= q <= " + std::to_string(q_max) + ", u | q+3, (q+3)/u >= 4, s = 1, v = 3";
  r.expected_exceptions = kUpsilon3Exceptions;
  return r;
}

VerificationReport verify_lp12(std::int64_t s_exact_max) {
  constexpr std::int64_t kEquality = 155;
  if (s_exact_max < kEquality + 1) throw DomainError("exact range must extend past s = 155");
  VerificationReport r;
  r.lemma_id = "lp12";
  r.range_descr = "1 <= s <= " + std::to_string(s_exact_max) + " exactly; s >= 156 by threshold argument";
  r.expected_exceptions = {{{kEquality}, "equality"}};

  for (std::int64_t s = 1; s <= s_exact_max; ++s) {
    BigInt S = big(s);
    BigInt lhs;
    BigInt left_num = 61 * (8 + S);
    BigInt left_den = 8 * S + 3;
    mpz_fdiv_q(lhs.get_mpz_t(), left_num.get_mpz_t(), left_den.get_mpz_t());
    Rational rhs = Rational::make(3912 * (8 + S), 513 * S + 192) - Rational(1);
    ++r.points_checked;
    if (!(Rational(lhs) > rhs)) {
      std::string kind = Rational(lhs) == rhs ? "equality" : "violated";
      r.failures.push_back({{s}, kind, "lhs=" + lhs.get_str() + " rhs=" + rhs.str()});
    }
  }

  // Tail: both sides are rewritten as 8 − (3s−464)/(8s+3) and
  // 7 − (192s−29760)/(513s+192). After clearing denominators each rewrite is
  // a polynomial identity of degree ≤ 2 in s, so three sample points prove it.
  auto tail_failure = [&](const std::string& what) { r.failures.push_back({{kEquality + 1}, "tail_argument", what}); };
  for (long s = 1; s <= 3; ++s) {
    Rational S(s);
    Rational left = Rational(61) * (Rational(8) + S) / (Rational(8) * S + Rational(3));
    Rational left_rewrite = Rational(8) - (Rational(3) * S - Rational(464)) / (Rational(8) * S + Rational(3));
    Rational right = Rational(3912) * (Rational(8) + S) / (Rational(513) * S + Rational(192)) - Rational(1);
    Rational right_rewrite = Rational(7) - (Rational(192) * S - Rational(29760)) / (Rational(513) * S + Rational(192));
    if (left != left_rewrite) tail_failure("left rewrite is not an identity");
    if (right != right_rewrite) tail_failure("right rewrite is not an identity");
  }
  // (3s−464)/(8s+3) < 1 ⇔ 5s + 467 > 0, true for s ≥ 0, so the floor is ≥ 7.
  // (192s−29760)/(513s+192) is increasing (192·192 + 29760·513 > 0) and
  // positive from s = 156 on, so the right side stays below 7.
  if (!(BigInt(192) * 192 + BigInt(29760) * 513 > 0)) tail_failure("correction term not increasing");
  if (!(BigInt(192) * (kEquality + 1) - 29760 > 0)) tail_failure("correction term not positive at s = 156");
  if (!(BigInt(192) * kEquality - 29760 == 0)) tail_failure("correction term not zero at s = 155");
  r.points_checked += 1;

  r.normalize();
  return r;
}

VerificationReport tie_bridge_check(std::int64_t q_max, unsigned jobs) {
  if (q_max < 61) throw DomainError("q_max must be at least 61");
  VerificationReport exceptions = verify_lp11(q_max, jobs);
  std::set<std::pair<std::int64_t, std::int64_t>> targets{{8, 61}, {10, 27}};
  for (const auto& f : exceptions.failures) {
    std::int64_t q = f.point[0];
    std::int64_t u = f.point[1];
    targets.emplace((q + 3) / u, q);
  }

  VerificationReport r;
  r.lemma_id = "tie-bridge";
  r.range_descr = "p/q from c = 3 exceptions with q <= " + std::to_string(q_max) + ", plus 8/61 and 10/27";
  const std::vector<Tuple> tie{{BigInt(2), BigInt(12)}, {BigInt(3), BigInt(4)}};
  for (auto [p, q] : targets) {
    ++r.points_checked;
    UnderapproxResult best = best_two_term(Rational::make(big(p), big(q)));
    std::string detail = "optimal_sum=" + best.optimal_sum.str() + " count=" + std::to_string(best.optimal_tuples.size());
    if (p == 10 && q == 17) {
      if (!best.greedy_is_best || best.optimal_tuples != tie) r.failures.push_back({{p, q}, "tie_set", detail});
    } else if (!best.greedy_is_best || !best.unique) {
      r.failures.push_back({{p, q}, "not_unique_best", detail});
    }
  }
  r.normalize();
  return r;
}

std::vector<RemainderSurvivor> remainder_survivors(std::int64_t c, std::int64_t offset, std::int64_t k_lo,
                                                   std::int64_t k_hi, std::int64_t u_lo, std::int64_t u_hi,
                                                   std::int64_t s_min) {
  std::vector<RemainderSurvivor> out;
  for (std::int64_t u = u_lo; u <= u_hi; ++u) {
    for (std::int64_t s = s_min; s < u; ++s) {
      for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        std::int64_t numerator = k * u * u - 2 * c * u - c * s - (k * s + offset);
        std::int64_t divisor = k * s + c;
        if (numerator >= 0 && numerator % divisor == 0) out.push_back({u, s, k, numerator / divisor});
      }
    }
  }
  return out;
}

bool congruence_solvable(std::int64_t a, std::int64_t b, std::int64_t m) {
  if (m < 1) throw DomainError("modulus must be positive");
  for (std::int64_t n = 0; n < m; ++n) {
    if (((a * n % m) * n - b) % m == 0) return true;
  }
  return false;
}

std::vector<std::int64_t> square_remainder_solutions(std::int64_t k, std::int64_t j, std::int64_t u_lo,
                                                     std::int64_t u_hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t u = u_lo; u <= u_hi; ++u) {
    std::int64_t numerator = 3 * (u + 1) * (u + 1) - j;
    if (numerator >= 0 && numerator % (k + 3) == 0) out.push_back(u);
  }
  return out;
}

}  // namespace unitfrac
