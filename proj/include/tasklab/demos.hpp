// Named end-to-end analyses over the built-in repertoire.  Each demo runs a
// fixed pipeline, records machine-readable status lines, and checks its
// expected outcomes: every expectation gets an expect.<label> PASS/FAIL
// line, and the verdict is ALL-GREEN only when all of them pass.  When a
// budget runs out mid-pipeline the report keeps the partial statistics and
// carries no verdict.
#pragma once

#include <string>
#include <vector>

#include "tasklab/report.hpp"

namespace tasklab {

std::vector<std::string> demo_names();

// Throws std::runtime_error on an unknown name.
Report run_demo(const std::string& name, const Budget& budget = {});

}  // namespace tasklab
