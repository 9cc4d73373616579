#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nsk {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool pass() const;
  void add(std::string name, bool pass, std::string detail = {});
};

/// Least-squares line y = slope x + intercept.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// max/min of two positive constants; 1 when both vanish.
double drift(double a, double b);

SuiteResult relative_quantity_suite(std::uint64_t seed);
SuiteResult rarefaction_suite();
SuiteResult shock_profile_suite();
SuiteResult interaction_suite();
SuiteResult hardy_legendre_suite(std::uint64_t seed);
SuiteResult scheme_suite();

std::vector<SuiteResult> all_suites(std::uint64_t seed);

/// "PASS name (1.2 s)" followed by one indented line per check.
std::string format_suite(const SuiteResult& r, bool details = true);

} // namespace nsk
