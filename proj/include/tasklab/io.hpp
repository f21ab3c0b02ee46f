// Text formats for tasks and models, plus the named instances the
// command-line tool accepts in place of file paths.
//
// Both formats are line oriented; '#' starts a comment and blank lines are
// skipped.  Simplices are written as whitespace-separated name:value pairs,
// sorted by name, with values in the Term::parse grammar (terms never
// contain whitespace).
//
// Task files:
//   TASK <name>
//   PROCS <n>
//   VALUES <term> ...        optional whitelist; parsing rejects strays
//   INPUT_FACETS             one simplex per line
//   OUTPUT_FACETS
//   DELTA                    lines "<input> -> <image> | <image> | ..."
//   IDS <N>                  optional: augment inputs with ids from [1..N]
//
// Simplices absent from DELTA inherit the restrictions of their facets'
// images.  parse_task_text(task_text(t)) reproduces t exactly.
//
// Model files:
//   MODEL wait_free <n>
//   MODEL f_resilient <n> <f>
//   MODEL local <n>          + EDGES block of directed "u v" lines
//   MODEL wf_local <n>       + EDGES block of undirected "u v" lines
//   MODEL h_local <n>        + HYPEREDGES block of "u v w ..." lines
//   MODEL dyn <n>            + one GRAPH block (of directed edge lines)
//                              per family member
//   MODEL facets <n>         + FACETS block of simplex lines whose values
//                              are channel sets such as {{1},{1,2}}
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tasklab/model.hpp"
#include "tasklab/task.hpp"

namespace tasklab {

std::string simplex_text(const Simplex& s);
Simplex parse_simplex_text(const std::string& text);

std::string task_text(const TaskSpec& t);
TaskSpec parse_task_text(const std::string& text);

Model parse_model_text(const std::string& text);

std::string read_text_file(const std::string& path);

// Built-in instances by name, so runs do not need files for the repertoire
// covered by the demos.  Unknown names return nullopt.
std::optional<TaskSpec> builtin_task(const std::string& name);
std::optional<Model> builtin_model(const std::string& name);
std::vector<std::string> builtin_task_names();
std::vector<std::string> builtin_model_names();

// Resolution used by the tool: a built-in name wins, otherwise the string
// is a path to a file in the format above.
TaskSpec resolve_task(const std::string& name_or_path);
Model resolve_model(const std::string& name_or_path);

}  // namespace tasklab
