#include "unitfrac/underapprox.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "unitfrac/greedy.hpp"
#include "unitfrac/parallel.hpp"

namespace unitfrac {
namespace {

Tuple sorted_pair(const BigInt& a, const BigInt& b) { return a <= b ? Tuple{a, b} : Tuple{b, a}; }

std::string tuple_str(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i].get_str();
  return s + ")";
}

void finish(UnderapproxResult& r, std::set<Tuple> best, const Rational& best_sum) {
  r.optimal_tuples.assign(best.begin(), best.end());
  r.optimal_sum = best_sum;
  r.greedy_is_best = best_sum == r.greedy_sum;
  r.unique = r.optimal_tuples.size() == 1;
  if (r.optimal_sum < r.greedy_sum || r.optimal_sum >= r.theta) {
    throw InvariantError("search optimum outside [greedy sum, theta)");
  }
  bool has_greedy = std::binary_search(r.optimal_tuples.begin(), r.optimal_tuples.end(), r.greedy_terms);
  if (has_greedy != r.greedy_is_best) throw InvariantError("greedy tuple membership mismatch");
}

class BranchAndBound {
 public:
  BranchAndBound(const Rational& theta, std::size_t m, std::uint64_t budget)
      : theta_(theta), m_(m), budget_(budget) {}

  void seed(const Tuple& tuple, const Rational& sum) {
    best_sum_ = sum;
    best_ = {tuple};
  }

  bool run() {
    current_.reserve(m_);
    explore(Rational(0), BigInt(1));
    return !exhausted_;
  }

  std::uint64_t nodes() const { return nodes_; }
  const Rational& best_sum() const { return best_sum_; }
  std::set<Tuple>& best() { return best_; }

 private:
  bool charge() {
    if (++nodes_ > budget_) exhausted_ = true;
    return !exhausted_;
  }

  void offer(Tuple tuple, const Rational& sum) {
    std::sort(tuple.begin(), tuple.end());
    if (sum > best_sum_) {
      best_sum_ = sum;
      best_.clear();
      ++version_;
    }
    if (sum == best_sum_) best_.insert(std::move(tuple));
  }

  // Raises the incumbent above a partial sum that already reached it, so the
  // ⌊r/(B−s)⌋ bound stays finite.
  void complete_greedily(const Rational& s) {
    Tuple tuple = current_;
    Rational sum = s;
    while (tuple.size() < m_) {
      if (!charge()) return;
      BigInt x = g_func(theta_ - sum);
      sum += Rational::unit(x);
      tuple.push_back(x);
    }
    offer(std::move(tuple), sum);
  }

  void explore(const Rational& s, const BigInt& previous) {
    std::size_t level = current_.size() + 1;
    if (level == m_) {
      if (!charge()) return;
      BigInt x = std::max(previous, g_func(theta_ - s));
      Tuple tuple = current_;
      tuple.push_back(x);
      offer(std::move(tuple), s + Rational::unit(x));
      return;
    }
    if (s >= best_sum_) {
      complete_greedily(s);
      if (exhausted_) return;
    }
    SearchBounds bounds = level_bounds(level, m_, theta_, s, previous, best_sum_);
    std::uint64_t seen_version = version_;
    for (BigInt x = bounds.lower; x <= bounds.upper; ++x) {
      if (!charge()) return;
      current_.push_back(x);
      explore(s + Rational::unit(x), x);
      current_.pop_back();
      if (exhausted_) return;
      if (version_ != seen_version) {
        seen_version = version_;
        bounds.upper = level_bounds(level, m_, theta_, s, previous, best_sum_).upper;
      }
    }
  }

  Rational theta_;
  std::size_t m_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint64_t version_ = 0;
  bool exhausted_ = false;
  Rational best_sum_;
  std::set<Tuple> best_;
  Tuple current_;
};

}  // namespace

Rational reciprocal_sum(const Tuple& xs) {
  Rational sum;
  for (const auto& x : xs) sum += Rational::unit(x);
  return sum;
}

std::string_view to_string(SearchStatus status) {
  return status == SearchStatus::Complete ? "complete" : "inconclusive";
}

SearchBounds level_bounds(std::size_t level, std::size_t m, const Rational& theta,
                          const Rational& partial_sum, const BigInt& previous, const Rational& incumbent) {
  if (level == 0 || level > m) throw DomainError("search level out of range");
  if (partial_sum >= theta) throw DomainError("partial sum already reaches theta");
  if (partial_sum >= incumbent) throw DomainError("partial sum already reaches the incumbent");
  SearchBounds b;
  b.level = level;
  b.lower = std::max<BigInt>(previous, floor_of_reciprocal(theta - partial_sum) + 1);
  auto remaining = static_cast<long>(m - level + 1);
  b.upper = floor(Rational(remaining) / (incumbent - partial_sum));
  return b;
}

UnderapproxResult best_two_term(const Rational& theta) {
  Expansion g = expand(theta, 2);
  UnderapproxResult r;
  r.theta = theta;
  r.m = 2;
  r.greedy_terms = g.terms;
  r.greedy_sum = theta - g.error;

  std::set<Tuple> best{r.greedy_terms};
  Rational best_sum = r.greedy_sum;
  // Any optimal pair has 1/x_1 ≥ (sum)/2 ≥ S/2.
  BigInt upper = floor(Rational(2) / r.greedy_sum);
  for (BigInt x1 = g.terms[0]; x1 <= upper; ++x1) {
    ++r.nodes;
    BigInt x2 = g_func(theta - Rational::unit(x1));
    Rational sum = Rational::unit(x1) + Rational::unit(x2);
    if (sum > best_sum) {
      best_sum = sum;
      best.clear();
    }
    if (sum == best_sum) best.insert(sorted_pair(x1, x2));
  }
  finish(r, std::move(best), best_sum);
  return r;
}

std::vector<Tuple> competing_pairs(const Rational& theta) {
  Expansion g = expand(theta, 2);
  Rational greedy_sum = theta - g.error;
  std::set<Tuple> out;
  BigInt upper = floor(Rational(2) / greedy_sum);
  for (BigInt x1 = g.terms[0]; x1 <= upper; ++x1) {
    Rational first = Rational::unit(x1);
    // x_2 ≥ max(x_1, G(θ − 1/x_1)) and 1/x_2 ≥ S − 1/x_1.
    BigInt lo = std::max(x1, g_func(theta - first));
    BigInt hi = floor(reciprocal(greedy_sum - first));
    for (BigInt x2 = lo; x2 <= hi; ++x2) {
      Tuple pair{x1, x2};
      if (pair != g.terms) out.insert(std::move(pair));
    }
  }
  return {out.begin(), out.end()};
}

UnderapproxResult best_m_term(const Rational& theta, std::size_t m, std::uint64_t budget) {
  if (m == 0) throw DomainError("m must be at least 1");
  Expansion g = expand(theta, m);
  UnderapproxResult r;
  r.theta = theta;
  r.m = m;
  r.greedy_terms = g.terms;
  r.greedy_sum = theta - g.error;

  BranchAndBound search(theta, m, budget);
  search.seed(r.greedy_terms, r.greedy_sum);
  bool complete = search.run();
  r.nodes = search.nodes();
  if (!complete) {
    r.status = SearchStatus::Inconclusive;
    return r;
  }
  finish(r, std::move(search.best()), search.best_sum());
  return r;
}

bool na23_bounds_check(const Rational& theta, const BigInt& x1, const BigInt& x2) {
  Expansion g = expand(theta, 2);
  const BigInt& a1 = g.terms[0];
  const BigInt& a2 = g.terms[1];
  if (x1 < 2 || x1 > x2) throw DomainError("need 2 <= x1 <= x2");
  if (x1 == a1 && x2 == a2) throw DomainError("pair equals the greedy pair");
  Rational sum = Rational::unit(x1) + Rational::unit(x2);
  if (sum < theta - g.error || sum >= theta) {
    throw DomainError("pair sum " + sum.str() + " is not in [greedy sum, theta)");
  }
  if (x1 < a1 + 1 || x1 > 2 * a1 - 1 || x2 < 2 * a1 - 1) return false;
  if (!(x2 * (x1 - a1) < a1 * x1)) return false;
  return x2 <= a2 - 1;
}

bool muirhead_certificate(const Tuple& x, const Tuple& a) {
  if (x.size() != a.size()) throw DomainError("tuples differ in length");
  if (x.empty()) throw DomainError("tuples must be nonempty");
  auto check_sorted_positive = [](const Tuple& t) {
    if (t.front() < 1) throw DomainError("tuple entries must be positive");
    if (!std::is_sorted(t.begin(), t.end())) throw DomainError("tuple must be nondecreasing");
  };
  check_sorted_positive(x);
  check_sorted_positive(a);
  if (x == a) throw DomainError("tuples must differ");

  BigInt px = 1;
  BigInt pa = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    px *= x[i];
    pa *= a[i];
    if (pa > px) return false;
  }
  if (!(reciprocal_sum(x) < reciprocal_sum(a))) {
    throw InvariantError("prefix products dominate but " + tuple_str(x) + " does not lose to " + tuple_str(a));
  }
  return true;
}

ThresholdSweep verify_threshold_sweep(std::int64_t q_max, unsigned jobs) {
  if (q_max < 2) throw DomainError("q_max must be at least 2");
  std::vector<std::pair<std::int64_t, std::int64_t>> fractions;
  for (std::int64_t q = 2; q <= q_max; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1) fractions.emplace_back(p, q);
    }
  }

  struct Outcome {
    ThresholdRow row;
    std::vector<Failure> failures;
    bool asserted = false;
  };
  const Tuple tie_1017{BigInt(2), BigInt(12)};
  const Tuple tie_1017b{BigInt(3), BigInt(4)};

  auto outcomes = parallel_map(fractions.size(), jobs, [&](std::size_t i) {
    auto [p, q] = fractions[i];
    Rational theta = Rational::make(BigInt(p), BigInt(q));
    UnderapproxResult best = best_two_term(theta);
    Outcome o;
    o.row.p = p;
    o.row.q = q;
    o.row.upsilon = to_int64(upsilon(BigInt(p), BigInt(q)));
    o.row.greedy_is_best = best.greedy_is_best;
    o.row.unique = best.unique;
    if (best.greedy_is_best && !best.unique) o.row.ties = best.optimal_tuples;
    for (auto& pair : competing_pairs(theta)) {
      if (reciprocal_sum(pair) > best.greedy_sum) o.row.losses.push_back(std::move(pair));
    }
    if (o.row.upsilon <= 3) {
      o.asserted = true;
      std::string detail = "optimal=" + best.optimal_sum.str();
      for (const auto& t : best.optimal_tuples) detail += " " + tuple_str(t);
      if (!best.greedy_is_best) o.failures.push_back({{p, q}, "not_best", detail});
      if (!best.unique) o.failures.push_back({{p, q}, "not_unique", detail});
      if (p == 10 && q == 17 && best.optimal_tuples != std::vector<Tuple>{tie_1017, tie_1017b}) {
        o.failures.push_back({{p, q}, "tie_set", detail});
      }
    }
    return o;
  });

  ThresholdSweep sweep;
  sweep.report.lemma_id = "threshold";
  sweep.report.range_descr = "reduced p/q, 1 <= p < q <= " + std::to_string(q_max) + ", Upsilon(p,q) <= 3";
  sweep.report.expected_exceptions = {{{10, 17}, "not_unique"}};
  for (auto& o : outcomes) {
    if (o.asserted) ++sweep.report.points_checked;
    for (auto& f : o.failures) sweep.report.failures.push_back(std::move(f));
    sweep.rows.push_back(std::move(o.row));
  }
  sweep.report.normalize();
  return sweep;
}

}  // namespace unitfrac
