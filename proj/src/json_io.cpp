#include "unitfrac/json_io.hpp"

#include <ostream>
#include <string>

#include "unitfrac/errors.hpp"

namespace unitfrac {
namespace {

json tuple_to_json(const Tuple& t) {
  json out = json::array();
  for (const auto& x : t) out.push_back(bigint_to_json(x));
  return out;
}

Tuple tuple_from_json(const json& j) {
  Tuple out;
  for (const auto& x : j) out.push_back(bigint_from_json(x));
  return out;
}

json tuples_to_json(const std::vector<Tuple>& ts) {
  json out = json::array();
  for (const auto& t : ts) out.push_back(tuple_to_json(t));
  return out;
}

std::vector<Tuple> tuples_from_json(const json& j) {
  std::vector<Tuple> out;
  for (const auto& t : j) out.push_back(tuple_from_json(t));
  return out;
}

Family family_from_string(const std::string& s) {
  for (Family f : {Family::PDividesQPlus1, Family::UpsilonDividesQ, Family::Upsilon2OddQ, Family::General}) {
    if (to_string(f) == s) return f;
  }
  throw DomainError("unknown family '" + s + "'");
}

std::string csv_tuples(const std::vector<Tuple>& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ' ';
    for (std::size_t k = 0; k < ts[i].size(); ++k) out += (k ? ";" : "") + ts[i][k].get_str();
  }
  return out;
}

}  // namespace

json bigint_to_json(const BigInt& n) { return n.get_str(); }

BigInt bigint_from_json(const json& j) {
  if (!j.is_string()) throw DomainError("integers are encoded as decimal strings");
  return parse_bigint(j.get<std::string>());
}

void to_json(json& j, const Rational& r) { j = {{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

void from_json(const json& j, Rational& r) {
  BigInt num = bigint_from_json(j.at("num"));
  BigInt den = bigint_from_json(j.at("den"));
  r = Rational::make(num, den);
  if (r.num() != num || r.den() != den) throw DomainError("rational is not in canonical form");
}

void to_json(json& j, const Expansion& e) {
  auto start = e.recurrence_start();
  j = {{"theta", e.theta}, {"terms", tuple_to_json(e.terms)}, {"error", e.error}};
  j["recurrence_start"] = start ? json(*start) : json(nullptr);
}

void from_json(const json& j, Expansion& e) {
  e.theta = j.at("theta").get<Rational>();
  e.terms = tuple_from_json(j.at("terms"));
  e.error = j.at("error").get<Rational>();
  // recurrence_start is derived from the terms; a mismatch means a corrupt document.
  auto start = e.recurrence_start();
  const json& stored = j.at("recurrence_start");
  if (stored.is_null() ? start.has_value() : (!start || stored.get<std::size_t>() != *start)) {
    throw DomainError("recurrence_start does not match the terms");
  }
}

void to_json(json& j, const UnderapproxResult& r) {
  j = {{"theta", r.theta},
       {"m", r.m},
       {"greedy_terms", tuple_to_json(r.greedy_terms)},
       {"greedy_sum", r.greedy_sum},
       {"optimal_tuples", tuples_to_json(r.optimal_tuples)},
       {"optimal_sum", r.optimal_sum},
       {"greedy_is_best", r.greedy_is_best},
       {"unique", r.unique},
       {"status", std::string(to_string(r.status))},
       {"nodes", r.nodes}};
}

void from_json(const json& j, UnderapproxResult& r) {
  r.theta = j.at("theta").get<Rational>();
  r.m = j.at("m").get<std::size_t>();
  r.greedy_terms = tuple_from_json(j.at("greedy_terms"));
  r.greedy_sum = j.at("greedy_sum").get<Rational>();
  r.optimal_tuples = tuples_from_json(j.at("optimal_tuples"));
  r.optimal_sum = j.at("optimal_sum").get<Rational>();
  r.greedy_is_best = j.at("greedy_is_best").get<bool>();
  r.unique = j.at("unique").get<bool>();
  auto status = j.at("status").get<std::string>();
  if (status == "complete") {
    r.status = SearchStatus::Complete;
  } else if (status == "inconclusive") {
    r.status = SearchStatus::Inconclusive;
  } else {
    throw DomainError("unknown search status '" + status + "'");
  }
  r.nodes = j.at("nodes").get<std::uint64_t>();
}

void to_json(json& j, const StepReport& s) {
  j = {{"m", s.m},
       {"N", bigint_to_json(s.N)},
       {"a_m", bigint_to_json(s.a_m)},
       {"a_next", bigint_to_json(s.a_next)},
       {"b_m", bigint_to_json(s.b_m)},
       {"error_before", s.error_before},
       {"phi", s.phi_value},
       {"cond_i", s.cond_i},
       {"cond_ii", s.cond_ii},
       {"cond_iii", s.cond_iii},
       {"cond_iv", s.cond_iv}};
}

void from_json(const json& j, StepReport& s) {
  s.m = j.at("m").get<std::size_t>();
  s.N = bigint_from_json(j.at("N"));
  s.a_m = bigint_from_json(j.at("a_m"));
  s.a_next = bigint_from_json(j.at("a_next"));
  s.b_m = bigint_from_json(j.at("b_m"));
  s.error_before = j.at("error_before").get<Rational>();
  s.phi_value = j.at("phi").get<Rational>();
  s.cond_i = j.at("cond_i").get<bool>();
  s.cond_ii = j.at("cond_ii").get<bool>();
  s.cond_iii = j.at("cond_iii").get<bool>();
  s.cond_iv = j.at("cond_iv").get<bool>();
}

void to_json(json& j, const UpsilonProfile& u) {
  j = {{"p", bigint_to_json(u.p)},
       {"q", bigint_to_json(u.q)},
       {"upsilon", bigint_to_json(u.upsilon)},
       {"ell", bigint_to_json(u.ell)},
       {"delta", u.delta},
       {"family", std::string(to_string(u.family))}};
}

void from_json(const json& j, UpsilonProfile& u) {
  u.p = bigint_from_json(j.at("p"));
  u.q = bigint_from_json(j.at("q"));
  u.upsilon = bigint_from_json(j.at("upsilon"));
  u.ell = bigint_from_json(j.at("ell"));
  u.delta = j.at("delta").get<std::size_t>();
  u.family = family_from_string(j.at("family").get<std::string>());
}

void to_json(json& j, const Counterexample& c) {
  j = {{"k", c.k},
       {"p", bigint_to_json(c.p)},
       {"q", bigint_to_json(c.q)},
       {"v", c.v},
       {"greedy_pair", tuple_to_json(c.greedy_pair)},
       {"beating_pair", tuple_to_json(c.beating_pair)},
       {"margin", c.margin}};
  j["s"] = c.s ? json(*c.s) : json(nullptr);
}

void from_json(const json& j, Counterexample& c) {
  c.k = j.at("k").get<std::int64_t>();
  c.p = bigint_from_json(j.at("p"));
  c.q = bigint_from_json(j.at("q"));
  c.v = j.at("v").get<std::int64_t>();
  const json& s = j.at("s");
  c.s = s.is_null() ? std::nullopt : std::optional<std::int64_t>(s.get<std::int64_t>());
  c.greedy_pair = tuple_from_json(j.at("greedy_pair"));
  c.beating_pair = tuple_from_json(j.at("beating_pair"));
  c.margin = j.at("margin").get<Rational>();
}

void to_json(json& j, const Failure& f) { j = {{"point", f.point}, {"kind", f.kind}, {"detail", f.detail}}; }

void from_json(const json& j, Failure& f) {
  f.point = j.at("point").get<Point>();
  f.kind = j.at("kind").get<std::string>();
  f.detail = j.at("detail").get<std::string>();
}

void to_json(json& j, const ExpectedException& e) { j = {{"point", e.prefix}, {"kind", e.kind}}; }

void from_json(const json& j, ExpectedException& e) {
  e.prefix = j.at("point").get<Point>();
  e.kind = j.at("kind").get<std::string>();
}

void to_json(json& j, const VerificationReport& r) {
  j = {{"lemma_id", r.lemma_id},
       {"range_descr", r.range_descr},
       {"points_checked", r.points_checked},
       {"failures", r.failures},
       {"expected_exceptions", r.expected_exceptions},
       {"passed", r.passed()}};
}

void from_json(const json& j, VerificationReport& r) {
  r.lemma_id = j.at("lemma_id").get<std::string>();
  r.range_descr = j.at("range_descr").get<std::string>();
  r.points_checked = j.at("points_checked").get<std::uint64_t>();
  r.failures = j.at("failures").get<std::vector<Failure>>();
  r.expected_exceptions = j.at("expected_exceptions").get<std::vector<ExpectedException>>();
}

void to_json(json& j, const ThresholdRow& r) {
  j = {{"p", r.p},
       {"q", r.q},
       {"upsilon", r.upsilon},
       {"greedy_is_best", r.greedy_is_best},
       {"unique", r.unique},
       {"ties", tuples_to_json(r.ties)},
       {"losses", tuples_to_json(r.losses)}};
}

void from_json(const json& j, ThresholdRow& r) {
  r.p = j.at("p").get<std::int64_t>();
  r.q = j.at("q").get<std::int64_t>();
  r.upsilon = j.at("upsilon").get<std::int64_t>();
  r.greedy_is_best = j.at("greedy_is_best").get<bool>();
  r.unique = j.at("unique").get<bool>();
  r.ties = tuples_from_json(j.at("ties"));
  r.losses = tuples_from_json(j.at("losses"));
}

void write_threshold_csv(std::ostream& out, std::span<const ThresholdRow> rows) {
  out << "p,q,upsilon,greedy_is_best,unique,ties,losses\n";
  for (const auto& r : rows) {
    out << r.p << ',' << r.q << ',' << r.upsilon << ',' << (r.greedy_is_best ? "true" : "false") << ','
        << (r.unique ? "true" : "false") << ',' << csv_tuples(r.ties) << ',' << csv_tuples(r.losses) << '\n';
  }
}

}  // namespace unitfrac
