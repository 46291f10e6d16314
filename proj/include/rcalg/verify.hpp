#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rcalg/algebra.hpp"

namespace rcalg {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

struct VerifyOptions {
  // Built-in name or JSON path; each suite has its own default set.
  std::optional<std::string> algebra;
  std::optional<unsigned> max_n;
  std::optional<unsigned> order;
  // Parallel fans the independent checks out over OpenMP threads.
  Exec exec = Exec::Parallel;
};

// thm-main1, kk, ck, psi, sl2, rrc-shape, relation, ramanujan.
const std::vector<std::string>& suite_names();

// Throws ValidationError for an unknown suite or algebra. Failures of
// individual checks, including exceptions raised inside them, are reported
// as failing checks; the order of checks does not depend on scheduling.
SuiteReport run_suite(const std::string& suite, const VerifyOptions& options = {});

// {"suite": ..., "pass": ..., "checks": [{"name", "status", "detail"}]}
nlohmann::ordered_json report_to_json(const SuiteReport& report);
std::string report_to_text(const SuiteReport& report);

// Generator pairs of the mirror quintic system used for the closure sweep.
const std::vector<std::pair<std::string, std::string>>& mirror_closure_pairs();

}  // namespace rcalg
