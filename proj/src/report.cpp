#include "unitfrac/report.hpp"

#include <algorithm>
#include <tuple>

namespace unitfrac {

bool ExpectedException::matches(const Failure& f) const {
  if (!kind.empty() && kind != f.kind) return false;
  if (f.point.size() < prefix.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), f.point.begin());
}

bool VerificationReport::is_expected(const Failure& f) const {
  return std::any_of(expected_exceptions.begin(), expected_exceptions.end(),
                     [&](const ExpectedException& e) { return e.matches(f); });
}

std::vector<Failure> VerificationReport::unexpected_failures() const {
  std::vector<Failure> out;
  std::copy_if(failures.begin(), failures.end(), std::back_inserter(out),
               [&](const Failure& f) { return !is_expected(f); });
  return out;
}

bool VerificationReport::exceptions_exact() const {
  if (!passed()) return false;
  return std::all_of(expected_exceptions.begin(), expected_exceptions.end(), [&](const ExpectedException& e) {
    return std::any_of(failures.begin(), failures.end(), [&](const Failure& f) { return e.matches(f); });
  });
}

void VerificationReport::normalize() {
  std::sort(failures.begin(), failures.end(), [](const Failure& a, const Failure& b) {
    return std::tie(a.point, a.kind, a.detail) < std::tie(b.point, b.kind, b.detail);
  });
}

void VerificationReport::absorb(const VerificationReport& other) {
  points_checked += other.points_checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  normalize();
}

}  // namespace unitfrac
