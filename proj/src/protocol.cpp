#include "tasklab/protocol.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tasklab {

namespace {
const char* kRoundHead = "rd";
}

Term next_view(ProcName i, const ChannelSet& Ei, const Simplex& state) {
  std::vector<Term> entries;
  ChannelSet channels = Ei;
  std::sort(channels.begin(), channels.end());
  for (const Channel& e : channels) {
    std::vector<Term> members;
    for (ProcName j : e) {
      auto view = state.value_at(j);
      if (!view)
        throw std::runtime_error("communication step: channel member " +
                                 std::to_string(j) + " has no view");
      members.push_back(Term::tuple({Term::integer(j), *view}));
    }
    entries.push_back(Term::tuple({channel_term(e), Term::list(std::move(members))}));
  }
  (void)i;
  return Term::tuple({Term::atom(kRoundHead), Term::list(std::move(entries))});
}

Simplex communication_step(const Simplex& state, const Simplex& pattern) {
  if (state.names() != pattern.names())
    throw std::runtime_error("communication step: name sets differ");
  std::vector<Vertex> verts;
  for (const Vertex& pv : pattern.vertices())
    verts.push_back({pv.name, next_view(pv.name, pattern_from_term(pv.value), state)});
  return Simplex(std::move(verts));
}

bool is_round_view(const Term& view) {
  return view.kind() == Term::Kind::Tuple && view.items().size() == 2 &&
         view.items()[0].is_atom() && view.items()[0].atom_name() == kRoundHead &&
         view.items()[1].kind() == Term::Kind::List;
}

Term view_input(const Term& view) {
  Term cur = view;
  while (is_round_view(cur)) {
    bool found = false;
    for (const Term& entry : cur.items()[1].items()) {
      const Term& label = entry.items()[0];
      if (label.items().size() == 1) {  // self-loop channel
        const Term& members = entry.items()[1];
        cur = members.items()[0].items()[1];
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("view lacks a self-loop channel");
  }
  return cur;
}

namespace {

// First-occurrence renaming over the rd-structure: collects names in entry
// order (channel labels first, then member names), then rewrites them.
// Round-0 payloads are left untouched.
void collect_names(const Term& view, std::map<long long, long long>& rename) {
  if (!is_round_view(view)) return;
  for (const Term& entry : view.items()[1].items()) {
    for (const Term& m : entry.items()[0].items())
      rename.emplace(m.int_value(), static_cast<long long>(rename.size()) + 1);
    for (const Term& pair : entry.items()[1].items())
      rename.emplace(pair.items()[0].int_value(),
                     static_cast<long long>(rename.size()) + 1);
  }
  for (const Term& entry : view.items()[1].items())
    for (const Term& pair : entry.items()[1].items())
      collect_names(pair.items()[1], rename);
}

Term apply_rename(const Term& view, const std::map<long long, long long>& rename) {
  if (!is_round_view(view)) return view;
  std::vector<Term> entries;
  for (const Term& entry : view.items()[1].items()) {
    std::vector<Term> label;
    for (const Term& m : entry.items()[0].items())
      label.push_back(Term::integer(rename.at(m.int_value())));
    std::vector<Term> members;
    for (const Term& pair : entry.items()[1].items())
      members.push_back(Term::tuple({Term::integer(rename.at(pair.items()[0].int_value())),
                                     apply_rename(pair.items()[1], rename)}));
    entries.push_back(Term::tuple({Term::set(std::move(label)), Term::list(std::move(members))}));
  }
  return Term::tuple({Term::atom(kRoundHead), Term::list(std::move(entries))});
}

}  // namespace

Term canonical_view(const Term& view, Mode mode) {
  if (mode == Mode::NameAware || !is_round_view(view)) return view;
  std::map<long long, long long> rename;
  collect_names(view, rename);
  return apply_rename(view, rename);
}

ProtocolComplex initial_protocol(const Complex& inputs, const Model& m) {
  ProtocolComplex p;
  p.rounds = 0;
  p.complex = inputs;
  for (const Simplex& s : inputs.all_simplices())
    if (m.names_closed(s.names())) p.reachable[s] = {s};
  return p;
}

ProtocolComplex advance(const ProtocolComplex& p, const Model& m) {
  ProtocolComplex q;
  q.rounds = p.rounds + 1;

  std::vector<Simplex> images;
  for (const Simplex& s : p.complex.all_simplices()) {
    for (const Simplex& phi : m.closed_with_names(s.names()))
      images.push_back(communication_step(s, phi));
  }
  q.complex = Complex::closure_of(std::move(images));
  if (!p.complex.empty() && !q.complex.is_pure())
    throw std::runtime_error("protocol complex lost purity");

  for (const auto& [origin, reach] : p.reachable) {
    std::set<Simplex> next;
    const auto patterns = m.closed_with_names(origin.names());
    for (const Simplex& s : reach)
      for (const Simplex& phi : patterns) next.insert(communication_step(s, phi));
    q.reachable[origin] = {next.begin(), next.end()};
  }
  return q;
}

ProtocolComplex protocol_complex(const Complex& inputs, const Model& m, int t) {
  if (t < 0) throw std::runtime_error("round count must be nonnegative");
  ProtocolComplex p = initial_protocol(inputs, m);
  for (int r = 0; r < t; ++r) p = advance(p, m);
  return p;
}

}  // namespace tasklab
