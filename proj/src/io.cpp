#include "tasklab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tasklab {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Lines with comments stripped; empty lines dropped.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (!split_ws(line).empty()) out.push_back(line);
  }
  return out;
}

Vertex parse_pair(const std::string& word) {
  auto colon = word.find(':');
  if (colon == std::string::npos || colon == 0)
    throw std::runtime_error("expected name:value, got \"" + word + "\"");
  int name = 0;
  try {
    std::size_t used = 0;
    name = std::stoi(word.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(word);
  } catch (const std::exception&) {
    throw std::runtime_error("bad process name in \"" + word + "\"");
  }
  return {name, Term::parse(word.substr(colon + 1))};
}

Simplex simplex_from_words(const std::vector<std::string>& words,
                           std::size_t begin, std::size_t end) {
  std::vector<Vertex> verts;
  for (std::size_t k = begin; k < end; ++k) verts.push_back(parse_pair(words[k]));
  return Simplex(std::move(verts));
}

int parse_int(const std::string& w, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(w, &used);
    if (used != w.size()) throw std::invalid_argument(w);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("bad ") + what + ": \"" + w + "\"");
  }
}

}  // namespace

std::string simplex_text(const Simplex& s) {
  std::ostringstream out;
  const auto& vs = s.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << " ";
    out << vs[i].name << ":" << vs[i].value.str();
  }
  return out.str();
}

Simplex parse_simplex_text(const std::string& text) {
  std::vector<std::string> words = split_ws(text);
  if (words.empty()) throw std::runtime_error("empty simplex text");
  return simplex_from_words(words, 0, words.size());
}

std::string task_text(const TaskSpec& t) {
  std::ostringstream out;
  out << "TASK " << (t.name.empty() ? std::string("unnamed") : t.name) << "\n";
  out << "PROCS " << t.n << "\n";

  std::set<Term> values;
  for (const Simplex& s : t.inputs.all_simplices())
    for (const Vertex& v : s.vertices()) values.insert(v.value);
  for (const Simplex& s : t.outputs.all_simplices())
    for (const Vertex& v : s.vertices()) values.insert(v.value);
  out << "VALUES";
  for (const Term& v : values) out << " " << v.str();
  out << "\n";

  out << "INPUT_FACETS\n";
  for (const Simplex& s : t.inputs.facets()) out << simplex_text(s) << "\n";
  out << "OUTPUT_FACETS\n";
  for (const Simplex& s : t.outputs.facets()) out << simplex_text(s) << "\n";
  out << "DELTA\n";
  for (const auto& [sigma, images] : t.delta) {
    out << simplex_text(sigma) << " ->";
    for (std::size_t i = 0; i < images.size(); ++i)
      out << (i ? " | " : " ") << simplex_text(images[i]);
    out << "\n";
  }
  return out.str();
}

TaskSpec parse_task_text(const std::string& text) {
  std::vector<std::string> lines = content_lines(text);
  std::string name = "unnamed";
  int n = 0;
  int ids = 0;
  std::optional<std::set<Term>> whitelist;
  std::vector<Simplex> input_facets, output_facets;
  std::map<Simplex, std::vector<Simplex>> delta;

  auto guard_value = [&](const Simplex& s) {
    if (!whitelist) return;
    for (const Vertex& v : s.vertices())
      if (!whitelist->count(v.value))
        throw std::runtime_error("value " + v.value.str() +
                                 " is not declared in VALUES");
  };

  enum class Section { None, Inputs, Outputs, Delta };
  Section section = Section::None;
  for (const std::string& line : lines) {
    std::vector<std::string> words = split_ws(line);
    const std::string& head = words[0];
    if (head == "TASK") {
      if (words.size() < 2) throw std::runtime_error("TASK wants a name");
      name = words[1];
      for (std::size_t k = 2; k < words.size(); ++k) name += " " + words[k];
      section = Section::None;
    } else if (head == "PROCS") {
      if (words.size() != 2) throw std::runtime_error("PROCS wants one count");
      n = parse_int(words[1], "process count");
      section = Section::None;
    } else if (head == "IDS") {
      if (words.size() != 2) throw std::runtime_error("IDS wants one count");
      ids = parse_int(words[1], "id count");
      section = Section::None;
    } else if (head == "VALUES") {
      if (!whitelist) whitelist.emplace();
      for (std::size_t k = 1; k < words.size(); ++k)
        whitelist->insert(Term::parse(words[k]));
      section = Section::None;
    } else if (head == "INPUT_FACETS") {
      section = Section::Inputs;
    } else if (head == "OUTPUT_FACETS") {
      section = Section::Outputs;
    } else if (head == "DELTA") {
      section = Section::Delta;
    } else if (section == Section::Inputs) {
      input_facets.push_back(parse_simplex_text(line));
      guard_value(input_facets.back());
    } else if (section == Section::Outputs) {
      output_facets.push_back(parse_simplex_text(line));
      guard_value(output_facets.back());
    } else if (section == Section::Delta) {
      auto arrow = std::find(words.begin(), words.end(), "->");
      if (arrow == words.end())
        throw std::runtime_error("DELTA line lacks \"->\": " + line);
      std::size_t cut = static_cast<std::size_t>(arrow - words.begin());
      Simplex sigma = simplex_from_words(words, 0, cut);
      guard_value(sigma);
      std::vector<Simplex> images;
      std::size_t begin = cut + 1;
      for (std::size_t k = begin; k <= words.size(); ++k) {
        if (k == words.size() || words[k] == "|") {
          if (k > begin) {
            images.push_back(simplex_from_words(words, begin, k));
            guard_value(images.back());
          }
          begin = k + 1;
        }
      }
      delta[sigma] = std::move(images);
    } else {
      throw std::runtime_error("unexpected line outside any section: " + line);
    }
  }

  if (n <= 0) throw std::runtime_error("task file lacks a positive PROCS");
  TaskSpec t = make_task(name, n, Complex::closure_of(std::move(input_facets)),
                         Complex::closure_of(std::move(output_facets)),
                         std::move(delta));
  if (ids > 0) t = augment_with_ids(t, ids);
  return t;
}

Model parse_model_text(const std::string& text) {
  std::vector<std::string> lines = content_lines(text);
  if (lines.empty()) throw std::runtime_error("empty model file");
  std::vector<std::string> header = split_ws(lines[0]);
  if (header[0] != "MODEL" || header.size() < 3)
    throw std::runtime_error("model file starts \"MODEL <kind> <n> ...\"");
  const std::string kind = header[1];
  int n = parse_int(header[2], "process count");

  if (kind == "wait_free") {
    if (header.size() != 3 || lines.size() != 1)
      throw std::runtime_error("wait_free takes only a process count");
    return Model::wait_free(n);
  }
  if (kind == "f_resilient") {
    if (header.size() != 4 || lines.size() != 1)
      throw std::runtime_error("f_resilient takes a count and a bound");
    return Model::f_resilient(n, parse_int(header[3], "resilience bound"));
  }

  std::size_t at = 1;
  auto expect = [&](const char* sect) {
    if (at >= lines.size() || split_ws(lines[at])[0] != sect)
      throw std::runtime_error(std::string("expected section ") + sect);
    ++at;
  };

  if (kind == "local" || kind == "wf_local") {
    expect("EDGES");
    std::vector<std::pair<int, int>> edges;
    for (; at < lines.size(); ++at) {
      std::vector<std::string> w = split_ws(lines[at]);
      if (w.size() != 2) throw std::runtime_error("edge line wants two names");
      edges.push_back({parse_int(w[0], "name"), parse_int(w[1], "name")});
    }
    if (kind == "wf_local") return Model::wf_local(Graph{n, std::move(edges)});
    Digraph d;
    d.n = n;
    for (auto [u, v] : edges) d.arcs.push_back({u, v});
    return Model::local(d);
  }
  if (kind == "h_local") {
    expect("HYPEREDGES");
    Hypergraph h;
    h.n = n;
    for (; at < lines.size(); ++at) {
      std::vector<std::string> w = split_ws(lines[at]);
      std::vector<int> edge;
      for (const std::string& x : w) edge.push_back(parse_int(x, "name"));
      h.edges.push_back(std::move(edge));
    }
    return Model::h_local(h);
  }
  if (kind == "dyn") {
    std::vector<Digraph> family;
    for (; at < lines.size(); ++at) {
      std::vector<std::string> w = split_ws(lines[at]);
      if (w[0] == "GRAPH") {
        family.push_back(Digraph{n, {}});
        continue;
      }
      if (family.empty()) throw std::runtime_error("edges before any GRAPH");
      if (w.size() != 2) throw std::runtime_error("edge line wants two names");
      family.back().arcs.push_back(
          {parse_int(w[0], "name"), parse_int(w[1], "name")});
    }
    return Model::dyn(family);
  }
  if (kind == "facets") {
    expect("FACETS");
    std::vector<Simplex> facets;
    for (; at < lines.size(); ++at) facets.push_back(parse_simplex_text(lines[at]));
    return Model::from_facets(n, std::move(facets));
  }
  throw std::runtime_error("unknown model kind \"" + kind + "\"");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::optional<TaskSpec> builtin_task(const std::string& name) {
  if (name == "fig2") return fig2_task();
  if (name == "consensus2") return consensus_task(2);
  if (name == "consensus3") return consensus_task(3);
  if (name == "renaming2") return perfect_renaming_task(2);
  if (name == "twostar") return two_star_coloring_task(3);
  if (name == "coloring-c4") return coloring_task(cycle_graph(4), 3);
  if (name == "coloring-c5") return coloring_task(cycle_graph(5), 3);
  if (name == "mis-c4") return mis_task(cycle_graph(4));
  if (name == "mis-c5") return mis_task(cycle_graph(5));
  if (name == "gmis-hypertree")
    return gmis_task(Hypergraph{3, {{1, 2, 3}}}, {1});
  if (name == "coloring-path3")
    return hypergraph_coloring_task(Hypergraph{3, {{1, 2}, {2, 3}}}, 3);
  return std::nullopt;
}

std::optional<Model> builtin_model(const std::string& name) {
  if (name == "waitfree2") return Model::wait_free(2);
  if (name == "waitfree3") return Model::wait_free(3);
  if (name == "localc3") return Model::local(fig2_cycle());
  if (name == "localc4") return Model::local(cycle_digraph(4));
  if (name == "localc5") return Model::local(cycle_digraph(5));
  if (name == "twostar")
    return Model::local([] {
      Graph g = two_star_graph(3);
      Digraph d;
      d.n = g.n;
      for (auto [u, v] : g.edges) {
        d.arcs.push_back({u, v});
        d.arcs.push_back({v, u});
      }
      return d;
    }());
  if (name == "hlocal-hypertree")
    return Model::h_local(Hypergraph{3, {{1, 2, 3}}});
  if (name == "hlocal-path3")
    return Model::h_local(Hypergraph{3, {{1, 2}, {2, 3}}});
  if (name == "hlocal-edge2") return Model::h_local(Hypergraph{2, {{1, 2}}});
  return std::nullopt;
}

std::vector<std::string> builtin_task_names() {
  return {"fig2",       "consensus2",     "consensus3", "renaming2",
          "twostar",    "coloring-c4",    "coloring-c5", "mis-c4",
          "mis-c5",     "gmis-hypertree", "coloring-path3"};
}

std::vector<std::string> builtin_model_names() {
  return {"waitfree2", "waitfree3",       "localc3",      "localc4",
          "localc5",   "twostar",         "hlocal-hypertree",
          "hlocal-path3", "hlocal-edge2"};
}

TaskSpec resolve_task(const std::string& name_or_path) {
  if (auto t = builtin_task(name_or_path)) return *t;
  return parse_task_text(read_text_file(name_or_path));
}

Model resolve_model(const std::string& name_or_path) {
  if (auto m = builtin_model(name_or_path)) return *m;
  return parse_model_text(read_text_file(name_or_path));
}

}  // namespace tasklab
