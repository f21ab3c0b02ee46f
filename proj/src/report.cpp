#include "tasklab/report.hpp"

#include <sstream>

#include "tasklab/io.hpp"

namespace tasklab {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fingerprint(std::string_view data) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string task_fingerprint(const TaskSpec& t) {
  return fingerprint(task_text(t));
}

std::string model_fingerprint(const Model& m) {
  return fingerprint(m.description() + "\n" + m.complex().str());
}

std::string render_report(const Report& r) {
  std::ostringstream out;
  out << "=== " << r.title << " ===\n";
  for (const auto& [label, value] : r.inputs)
    out << label << " " << value << "\n";
  if (!r.narrative.empty()) out << "\n";
  for (const std::string& line : r.narrative) out << line << "\n";
  out << "\n--- status ---\n";
  for (const auto& [key, value] : r.status)
    out << key << " = " << value << "\n";
  if (r.verdict) out << "verdict = " << *r.verdict << "\n";
  return out.str();
}

void describe_inputs(Report& r, const TaskSpec& task, const Model& m,
                     const Budget& budget) {
  r.inputs.push_back({"task", task.name + " fp=" + task_fingerprint(task)});
  r.inputs.push_back(
      {"model", m.description() + " fp=" + model_fingerprint(m)});
  std::ostringstream b;
  b << "search_nodes=" << budget.search_nodes
    << " enumeration=" << budget.enumeration
    << " max_facets=" << budget.max_facets;
  r.inputs.push_back({"budget", b.str()});
}

}  // namespace tasklab
