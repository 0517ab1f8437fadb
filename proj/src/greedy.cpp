#include "unitfrac/greedy.hpp"

#include <string>

namespace unitfrac {
namespace {

BigInt sylvester_next(const BigInt& a) { return a * a - a + 1; }

BigInt gcd_of(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool divides(const BigInt& d, const BigInt& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

void require_positive_pair(const BigInt& p, const BigInt& q) {
  if (p < 1 || q < 1) {
    throw DomainError("need positive p and q, got " + p.get_str() + ", " + q.get_str());
  }
}

void require_reduced_unit_fraction(const BigInt& p, const BigInt& q) {
  require_positive_pair(p, q);
  if (p > q) throw DomainError("p/q must lie in (0,1], got " + p.get_str() + "/" + q.get_str());
  if (gcd_of(p, q) != 1) {
    throw DomainError(p.get_str() + "/" + q.get_str() + " is not in lowest terms");
  }
}

void require_unit_interval(const Rational& theta) {
  if (!theta.is_positive() || theta > Rational(1)) {
    throw DomainError("theta must lie in (0,1], got " + theta.str());
  }
}

}  // namespace

std::optional<std::size_t> Expansion::recurrence_start() const {
  if (terms.size() < 2) return std::nullopt;
  // Pair n (1-based) is (a_n, a_{n+1}) = (terms[n-1], terms[n]).
  auto pair_holds = [&](std::size_t n) { return terms[n] == sylvester_next(terms[n - 1]); };
  std::size_t n = terms.size() - 1;
  if (!pair_holds(n)) return std::nullopt;
  while (n > 1 && pair_holds(n - 1)) --n;
  return n;
}

GreedyStepper::GreedyStepper(const Rational& theta, ExpandOptions options)
    : error_(theta), options_(options) {
  require_unit_interval(theta);
}

BigInt GreedyStepper::next() {
  BigInt a = g_func(error_);
  if (options_.digit_guard) {
    std::size_t digits = decimal_digits(a);
    if (digits > *options_.digit_guard) throw DigitGuardExceeded(*options_.digit_guard, digits);
  }
  error_ -= Rational::unit(a);
  ++steps_;
  return a;
}

Rational unit_interval_fraction(const BigInt& p, const BigInt& q) {
  require_positive_pair(p, q);
  Rational theta = Rational::make(p, q);
  require_unit_interval(theta);
  return theta;
}

BigInt g_func(const Rational& theta) {
  require_unit_interval(theta);
  return floor_of_reciprocal(theta) + 1;
}

Expansion expand(const Rational& theta, std::size_t m, const ExpandOptions& options) {
  if (m == 0) throw DomainError("expansion length must be at least 1");
  GreedyStepper stepper(theta, options);
  Expansion out{theta, {}, theta};
  out.terms.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.terms.push_back(stepper.next());
  out.error = stepper.error();
  return out;
}

BigInt upsilon(const BigInt& p, const BigInt& q) {
  require_positive_pair(p, q);
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  return r == 0 ? p : BigInt(p - r);
}

BigInt ell_index(const BigInt& p, const BigInt& q) {
  require_reduced_unit_fraction(p, q);
  return divides(p, q) ? BigInt(0) : upsilon(p, q);
}

DeltaResult delta_index(const BigInt& p, const BigInt& q, const ExpandOptions& options) {
  require_reduced_unit_fraction(p, q);
  // The reduced numerator of e_m strictly decreases, so this terminates
  // within p steps.
  GreedyStepper stepper(Rational::make(p, q), options);
  while (stepper.error().num() != 1) stepper.next();
  return {stepper.steps(), stepper.error().den()};
}

Rational phi(const Rational& theta) {
  return reciprocal(Rational(g_func(theta)) - reciprocal(theta));
}

BigInt superior_denominator(const Rational& e, const BigInt& N) {
  if (!e.is_positive()) throw DomainError("superior_denominator needs e > 0, got " + e.str());
  if (N < 1) throw DomainError("numerator N must be positive");
  return floor(Rational(N) / e) + 1;
}

StepReport step_report(const Rational& theta, std::size_t m, const BigInt& N) {
  if (m == 0) throw DomainError("step index m must be at least 1");
  if (N < 1) throw DomainError("numerator N must be positive");
  GreedyStepper stepper(theta);
  for (std::size_t k = 1; k < m; ++k) stepper.next();

  StepReport r;
  r.m = m;
  r.N = N;
  r.error_before = stepper.error();
  r.a_m = stepper.next();
  r.a_next = stepper.next();
  r.b_m = superior_denominator(r.error_before, N);
  r.phi_value = phi(r.error_before);

  r.cond_i = r.a_next >= N * r.a_m * r.a_m - r.a_m + 1;
  r.cond_ii = r.b_m == N * r.a_m;
  r.cond_iii = r.phi_value >= Rational(N);
  r.cond_iv = r.error_before <= Rational::make(N, N * r.a_m - 1);

  if (r.cond_i != r.cond_ii || r.cond_ii != r.cond_iii || r.cond_iii != r.cond_iv) {
    throw InvariantError("step conditions disagree at theta=" + theta.str() +
                         " m=" + std::to_string(m) + " N=" + N.get_str());
  }
  return r;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::PDividesQPlus1: return "PDividesQPlus1";
    case Family::UpsilonDividesQ: return "UpsilonDividesQ";
    case Family::Upsilon2OddQ: return "Upsilon2OddQ";
    case Family::General: return "General";
  }
  return "General";
}

UpsilonProfile upsilon_profile(const BigInt& p, const BigInt& q, const ExpandOptions& options) {
  require_positive_pair(p, q);
  BigInt g = gcd_of(p, q);
  UpsilonProfile prof;
  prof.p = p / g;
  prof.q = q / g;
  prof.upsilon = upsilon(prof.p, prof.q);
  prof.ell = ell_index(prof.p, prof.q);
  prof.delta = delta_index(prof.p, prof.q, options).steps;
  if (prof.upsilon == 1) {
    prof.family = Family::PDividesQPlus1;
  } else if (divides(prof.upsilon, prof.q)) {
    prof.family = Family::UpsilonDividesQ;
  } else if (prof.upsilon == 2 && mpz_odd_p(prof.q.get_mpz_t())) {
    prof.family = Family::Upsilon2OddQ;
  } else {
    prof.family = Family::General;
  }
  return prof;
}

std::vector<BigInt> closed_form_upsilon_divides_q(const BigInt& p, const BigInt& q, std::size_t m) {
  unit_interval_fraction(p, q);
  BigInt ups = upsilon(p, q);
  if (!divides(ups, q)) {
    throw DomainError("Upsilon(" + p.get_str() + "," + q.get_str() + ") = " + ups.get_str() +
                      " does not divide q");
  }
  std::vector<BigInt> terms;
  if (m == 0) return terms;
  terms.push_back((q + ups) / p);
  BigInt product = terms.back();
  BigInt scale = q / ups;
  while (terms.size() < m) {
    terms.push_back(scale * product + 1);
    product *= terms.back();
  }
  return terms;
}

std::vector<BigInt> closed_form_upsilon2_odd_q(const BigInt& p, const BigInt& q, std::size_t m) {
  unit_interval_fraction(p, q);
  if (!mpz_odd_p(q.get_mpz_t())) throw DomainError("q must be odd, got " + q.get_str());
  if (upsilon(p, q) != 2) throw DomainError("Upsilon(p,q) must equal 2");
  std::vector<BigInt> terms;
  if (m == 0) return terms;
  terms.push_back((q + 2) / p);
  BigInt product = terms.back();
  if (m >= 2) {
    BigInt half;
    BigInt twice = q * terms[0];
    mpz_fdiv_q_2exp(half.get_mpz_t(), twice.get_mpz_t(), 1);
    terms.push_back(half + 1);
    product *= terms.back();
  }
  while (terms.size() < m) {
    terms.push_back(q * product + 1);
    product *= terms.back();
  }
  return terms;
}

std::vector<BigInt> closed_form_p_divides_q_plus_1(const BigInt& p, const BigInt& q, std::size_t m) {
  unit_interval_fraction(p, q);
  if (!divides(p, q + 1)) throw DomainError("p must divide q + 1");
  std::vector<BigInt> terms;
  if (m == 0) return terms;
  terms.push_back((q + 1) / p);
  BigInt product = terms.back();
  while (terms.size() < m) {
    terms.push_back(q * product + 1);
    product *= terms.back();
  }
  if (p == 1) {
    for (std::size_t n = 1; n < terms.size(); ++n) {
      if (terms[n] != sylvester_next(terms[n - 1])) {
        throw InvariantError("p = 1 closed form is not a_n^2 - a_n + 1");
      }
    }
  }
  return terms;
}

RecurrenceCheck eventual_quadratic_recurrence(const BigInt& p, const BigInt& q, std::size_t horizon) {
  RecurrenceCheck out;
  out.ell = ell_index(p, q);
  if (horizon == 0) {
    out.holds = true;
    return out;
  }
  Expansion e = expand(Rational::make(p, q), horizon);
  out.observed_start = e.recurrence_start();
  out.holds = true;
  // Pairs n with ℓ+1 ≤ n < horizon, i.e. terms[n-1] -> terms[n].
  for (std::size_t n = 1; n < horizon; ++n) {
    if (BigInt(static_cast<unsigned long>(n)) < out.ell + 1) continue;
    if (e.terms[n] != sylvester_next(e.terms[n - 1])) {
      out.holds = false;
      break;
    }
  }
  return out;
}

GrowthCheck growth_condition_check(std::span<const BigInt> seq, const BigInt& N, GrowthVariant variant) {
  if (seq.empty()) throw DomainError("growth check needs a nonempty sequence");
  if (seq[0] < 2) throw DomainError("growth check needs c_1 >= 2");
  if (N < 1) throw DomainError("N must be positive");

  GrowthCheck out;
  out.holds = true;
  for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
    const BigInt& c = seq[n];
    BigInt bound = variant == GrowthVariant::Quadratic ? BigInt(N * c * c - c + 1)
                                                       : BigInt(c * c * c - c + 1);
    if (seq[n + 1] < bound) {
      out.holds = false;
      out.first_violation = n + 1;
      break;
    }
  }
  if (variant == GrowthVariant::Cubic) {
    for (std::size_t n = 0; n < seq.size(); ++n) {
      if (seq[n] >= N) {
        out.m_N = n + 1;
        break;
      }
    }
    if (out.holds && out.m_N && BigInt(static_cast<unsigned long>(*out.m_N)) > N) {
      throw InvariantError("cubic growth sequence has m_N > N");
    }
  }
  return out;
}

}  // namespace unitfrac
