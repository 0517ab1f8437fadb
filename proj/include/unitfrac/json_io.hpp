#pragma once

#include <iosfwd>
#include <span>

#include "json.hpp"
#include "unitfrac/counterexample.hpp"
#include "unitfrac/greedy.hpp"
#include "unitfrac/rational.hpp"
#include "unitfrac/report.hpp"
#include "unitfrac/underapprox.hpp"

// Big integers travel as decimal strings everywhere so no value is ever
// squeezed through a double.
namespace unitfrac {

using nlohmann::json;

json bigint_to_json(const BigInt& n);
BigInt bigint_from_json(const json& j);

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);

void to_json(json& j, const Expansion& e);
void from_json(const json& j, Expansion& e);

void to_json(json& j, const UnderapproxResult& r);
void from_json(const json& j, UnderapproxResult& r);

void to_json(json& j, const StepReport& s);
void from_json(const json& j, StepReport& s);

void to_json(json& j, const UpsilonProfile& u);
void from_json(const json& j, UpsilonProfile& u);

void to_json(json& j, const Counterexample& c);
void from_json(const json& j, Counterexample& c);

void to_json(json& j, const Failure& f);
void from_json(const json& j, Failure& f);

void to_json(json& j, const ExpectedException& e);
void from_json(const json& j, ExpectedException& e);

void to_json(json& j, const VerificationReport& r);
void from_json(const json& j, VerificationReport& r);

void to_json(json& j, const ThresholdRow& r);
void from_json(const json& j, ThresholdRow& r);

/// Header plus one line per (p, q); tuple lists are written as
/// space-separated "a;b" pairs.
void write_threshold_csv(std::ostream& out, std::span<const ThresholdRow> rows);

}  // namespace unitfrac
