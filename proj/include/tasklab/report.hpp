// Deterministic analysis reports: a titled narrative plus a machine block
// of key=value status lines.  Reports carry input fingerprints and the
// budgets in force, never timestamps or machine identifiers, so the same
// analysis renders byte-identical text on every run.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tasklab/model.hpp"
#include "tasklab/solver.hpp"
#include "tasklab/task.hpp"

namespace tasklab {

struct Report {
  std::string title;
  // label -> fingerprint or parameter rendering, in emission order
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> narrative;
  std::vector<std::pair<std::string, std::string>> status;
  // Absent when a budget ran out: partial statistics carry no verdict.
  std::optional<std::string> verdict;

  void note(std::string line) { narrative.push_back(std::move(line)); }
  void put(std::string key, std::string value) {
    status.push_back({std::move(key), std::move(value)});
  }
};

std::uint64_t fnv1a64(std::string_view data);
// 16 lowercase hex digits of fnv1a64.
std::string fingerprint(std::string_view data);

std::string task_fingerprint(const TaskSpec& t);
std::string model_fingerprint(const Model& m);

// Canonical text rendering; equal reports render equal bytes.
std::string render_report(const Report& r);

// Common header fields: task/model fingerprints and the budget in force.
void describe_inputs(Report& r, const TaskSpec& task, const Model& m,
                     const Budget& budget);

}  // namespace tasklab
