#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fbr/biset.hpp"
#include "fbr/fiber_change.hpp"

namespace fbr::cli {

struct SuiteResult {
  SuiteResult(std::string suite_name, std::string group_name, int fiber)
      : suite(std::move(suite_name)), group(std::move(group_name)), n(fiber) {}

  std::string suite;
  std::string group;
  int n = 0;
  long checks = 0;
  long failure_count = 0;
  std::vector<std::string> failures;  // first few counterexamples, verbatim
  std::vector<std::string> notes;

  bool passed() const { return failure_count == 0; }
  void check(bool ok, const std::string& what);
  void note(const std::string& what);
  nlohmann::json to_json() const;
};

std::string element_label(const FBElement& x);

/// Conductor formula on coprime fibers; two-sided divisibility on all fibers.
SuiteResult verify_thm51(const RingPtr& ring);
/// Idempotents: sum to one, orthogonal, species indicators.
SuiteResult verify_splitting(const RingPtr& ring);
/// Integrality criterion on image points, |G|-multiples and conductor minimality.
SuiteResult verify_boltje(const RingPtr& ring);
/// Residual subgroup identities, restriction fibers, the normalizer divisibility,
/// and the restriction/induction identities of idempotents.
SuiteResult verify_lemmas(const GroupPtr& group, int n, RingCache& cache);
/// Naturality of f with elementary bisets out of `group`.
SuiteResult verify_naturality(const GroupPtr& group, const FiberMap& f, RingCache& cache);

/// The elementary bisets starting or ending at G used by the naturality suite.
std::vector<BisetSpec> elementary_bisets(const GroupPtr& group);

}  // namespace fbr::cli
