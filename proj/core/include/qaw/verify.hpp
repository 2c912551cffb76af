#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qaw/expr.hpp"
#include "qaw/hall.hpp"
#include "qaw/linalg.hpp"
#include "qaw/uaw.hpp"

namespace qaw {

struct UnknownCheck : std::runtime_error {
  explicit UnknownCheck(const std::string& name) : std::runtime_error("unknown check: " + name) {}
};
struct BadParams : std::runtime_error {
  explicit BadParams(const std::string& what) : std::runtime_error(what) {}
};

using Params = std::map<std::string, long>;

struct CheckResult {
  std::string name;
  Params params;
  bool passed = false;
  std::string witness;  // nonempty whenever passed is false
  double elapsed_ms = 0.0;
};

struct SuiteReport {
  std::vector<CheckResult> results;
  bool all_passed = true;
  /// Classification of elimination pivots collected by the rank checks.
  std::string pivot_factor_summary;
  std::vector<std::pair<std::string, int>> pivot_factor_counts;
  bool pivot_factors_ok = true;
};

/// Registry of named, parameterized checks, each verifying one statement
/// mechanically, over a shared (memoized) computation context.
class Verifier {
 public:
  Verifier();
  ~Verifier();
  Verifier(const Verifier&) = delete;
  Verifier& operator=(const Verifier&) = delete;

  /// Names in registry order, with the parameter names each check takes.
  std::vector<std::pair<std::string, std::vector<std::string>>> checks() const;
  bool has_check(const std::string& name) const;

  CheckResult run_check(const std::string& name, const Params& params = {});

  /// Run all checks matching a shell-style pattern; parameterized checks are
  /// instantiated with all parameter tuples in [1, range].
  SuiteReport run_suite(const std::string& pattern = "*", long range = 4);

  struct Context;

 private:
  std::unique_ptr<Context> ctx_;
};

/// Shell-style pattern match supporting '*' and '?'.
bool glob_match(const std::string& pattern, const std::string& name);

/// Deterministic sample generators used by the property checks and tests.
namespace sampling {
Word random_word(uint64_t seed, size_t max_len);
LieTreePtr random_tree(uint64_t seed, int max_len);
RatFunc random_scalar(uint64_t seed);
UawElement random_uaw(uint64_t seed, uint32_t max_degree, size_t terms);
FreeElement random_free(uint64_t seed, size_t max_len, size_t terms);
std::string random_expr_text(uint64_t seed, int max_depth);
}  // namespace sampling

}  // namespace qaw
