#include "tasklab/task.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tasklab {

const std::vector<Simplex>& TaskSpec::delta_of(const Simplex& s) const {
  auto it = delta.find(s);
  if (it == delta.end())
    throw std::runtime_error("task " + name + ": delta undefined on " + s.str());
  return it->second;
}

bool TaskSpec::delta_allows(const Simplex& input, const Simplex& output) const {
  const auto& images = delta_of(input);
  return std::binary_search(images.begin(), images.end(), output);
}

TaskSpec make_task(std::string name, int n, Complex inputs, Complex outputs,
                   std::map<Simplex, std::vector<Simplex>> delta) {
  TaskSpec t;
  t.name = std::move(name);
  t.n = n;
  t.inputs = std::move(inputs);
  t.outputs = std::move(outputs);

  for (auto& [s, images] : delta) {
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
  }

  for (const Simplex& s : t.inputs.all_simplices()) {
    auto it = delta.find(s);
    if (it != delta.end()) {
      t.delta[s] = it->second;
      continue;
    }
    // Inherit the projections of the images of every facet above s.
    std::set<Simplex> derived;
    for (const Simplex& f : t.inputs.facets()) {
      if (!f.has_face(s)) continue;
      auto fit = delta.find(f);
      if (fit == delta.end()) continue;
      for (const Simplex& img : fit->second) derived.insert(img.project(s.names()));
    }
    t.delta[s] = {derived.begin(), derived.end()};
  }

  for (const auto& [s, images] : t.delta) {
    for (const Simplex& img : images) {
      if (img.names() != s.names())
        throw std::runtime_error("task " + t.name + ": image names differ on " + s.str());
      if (!t.outputs.contains(img))
        throw std::runtime_error("task " + t.name + ": image " + img.str() +
                                 " is not an output simplex");
    }
  }
  return t;
}

std::vector<TaskIssue> validate_task(const TaskSpec& t) {
  std::vector<TaskIssue> issues;
  for (const auto& [s, images] : t.delta) {
    if (images.empty()) issues.push_back({"empty delta image", s});
    // Carrier-map monotonicity: images of a coface must project into the
    // images of the face.
    for (const Simplex& big : t.inputs.all_simplices()) {
      if (big == s || !big.has_face(s)) continue;
      for (const Simplex& img : t.delta_of(big)) {
        Simplex proj = img.project(s.names());
        if (!std::binary_search(images.begin(), images.end(), proj)) {
          issues.push_back({"image of coface " + big.str() +
                                " projects outside delta of the face",
                            s});
          break;
        }
      }
    }
  }
  return issues;
}

TaskSpec augment_with_ids(const TaskSpec& t, int N) {
  if (N < t.n) throw std::runtime_error("id space smaller than process count");
  std::vector<Simplex> facets;
  std::map<Simplex, std::vector<Simplex>> delta;

  // Distinct id tuples over the facet's names.
  for (const Simplex& f : t.inputs.facets()) {
    std::vector<ProcName> names = f.names();
    std::vector<int> ids(names.size(), 0);
    std::function<void(std::size_t, std::vector<int>&)> rec =
        [&](std::size_t k, std::vector<int>& chosen) {
          if (k == names.size()) {
            std::vector<Vertex> verts;
            for (std::size_t a = 0; a < names.size(); ++a) {
              Term x = *f.value_at(names[a]);
              verts.push_back({names[a],
                               Term::tuple({Term::integer(chosen[a]), x})});
            }
            Simplex augmented(std::move(verts));
            facets.push_back(augmented);
            delta[augmented] = t.delta_of(f);
            return;
          }
          for (int id = 1; id <= N; ++id) {
            if (std::find(chosen.begin(), chosen.end(), id) != chosen.end()) continue;
            chosen.push_back(id);
            rec(k + 1, chosen);
            chosen.pop_back();
          }
        };
    std::vector<int> chosen;
    rec(0, chosen);
  }

  TaskSpec out;
  out.name = t.name + "+ids";
  out.n = t.n;
  out.inputs = Complex::closure_of(facets);
  out.outputs = t.outputs;

  // Faces forward to the original task's delta of the stripped simplex.
  for (const Simplex& s : out.inputs.all_simplices()) {
    std::vector<Vertex> stripped;
    for (const Vertex& v : s.vertices())
      stripped.push_back({v.name, v.value.items()[1]});
    out.delta[s] = t.delta_of(Simplex(std::move(stripped)));
  }
  return out;
}

}  // namespace tasklab
