#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace unitfrac {

/// A point in a swept parameter box, e.g. (q, u, s, v).
using Point = std::vector<std::int64_t>;

struct Failure {
  Point point;
  std::string kind;    ///< short tag, e.g. "violated" or "not_unique"
  std::string detail;  ///< observed values at the point

  friend bool operator==(const Failure&, const Failure&) = default;
};

/// Failures whose point starts with `prefix` (and whose kind matches, unless
/// `kind` is empty) are anticipated by the statement being verified.
struct ExpectedException {
  Point prefix;
  std::string kind;

  bool matches(const Failure& f) const;
  friend bool operator==(const ExpectedException&, const ExpectedException&) = default;
};

struct VerificationReport {
  std::string lemma_id;
  std::string range_descr;
  std::uint64_t points_checked = 0;
  std::vector<Failure> failures;
  std::vector<ExpectedException> expected_exceptions;

  bool is_expected(const Failure& f) const;
  std::vector<Failure> unexpected_failures() const;
  /// failures ⊆ expected_exceptions
  bool passed() const { return unexpected_failures().empty(); }
  /// passed() and every expected exception was actually observed.
  bool exceptions_exact() const;

  /// Sort failures by point then kind; merged reports compare equal
  /// regardless of worker order.
  void normalize();
  void absorb(const VerificationReport& other);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

}  // namespace unitfrac
