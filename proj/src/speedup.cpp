#include "tasklab/speedup.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "tasklab/checkers.hpp"
#include "tasklab/protocol.hpp"

namespace tasklab {

namespace {

const char* kHead = "sv";

// A member set of output values at one name, as a bitmask over the sorted
// value list; families are sorted lists of distinct nonempty masks.
using Mask = unsigned;
using Family = std::vector<Mask>;
using CellKey = std::pair<Channel, ChannelSet>;

std::vector<Term> member_values(Mask mask, const std::vector<Term>& outs) {
  std::vector<Term> vals;
  for (std::size_t j = 0; j < outs.size(); ++j)
    if (mask & (1u << j)) vals.push_back(outs[j]);
  return vals;
}

// Cells of one name sharing a channel set.
struct PatternGroup {
  ChannelSet E;
  std::vector<Channel> channels;  // all channels incident to the name, sorted
  std::vector<bool> bound;        // channel belongs to E
};

struct NameUniverse {
  ProcName i = 0;
  std::vector<Term> xs;    // input values at i
  std::vector<Term> outs;  // output values at i
  std::vector<PatternGroup> groups;
  std::set<CellKey> forced;  // cells required to copy their self-loop family
};

NameUniverse make_universe(const TaskSpec& task, const Model& m, ProcName i) {
  NameUniverse u;
  u.i = i;
  u.xs = task.inputs.values_at(i);
  u.outs = task.outputs.values_at(i);
  if (u.outs.size() > 4)
    throw std::runtime_error(
        "speedup construction: more than four output values at name " +
        std::to_string(i));
  std::vector<Channel> chans = m.channels_at(i);
  for (const ChannelSet& E : m.patterns_at(i)) {
    PatternGroup g;
    g.E = E;
    for (const Channel& e : chans) {
      g.channels.push_back(e);
      g.bound.push_back(std::binary_search(E.begin(), E.end(), e));
    }
    u.groups.push_back(std::move(g));
  }
  return u;
}

// Cells (e, E) whose family must copy the self-loop family of E: some
// closed pattern gives name i the channel set E and some other name j an
// incident channel e containing i while E never hears j.
void mark_forced(const Model& m, NameUniverse& u) {
  for (const Simplex& phi : m.closed_simplices()) {
    auto pat = phi.value_at(u.i);
    if (!pat) continue;
    ChannelSet E = pattern_from_term(*pat);
    std::set<ProcName> heard;
    for (const Channel& f : E) heard.insert(f.begin(), f.end());
    for (const Vertex& pv : phi.vertices()) {
      if (pv.name == u.i || heard.count(pv.name)) continue;
      for (const Channel& e : pattern_from_term(pv.value))
        if (std::binary_search(e.begin(), e.end(), u.i)) u.forced.insert({e, E});
    }
  }
}

// All families over the nonempty masks of width k.
std::vector<Family> all_families(int k) {
  int mcount = (1 << k) - 1;
  std::vector<Family> fams;
  for (unsigned bits = 0; bits < (1u << mcount); ++bits) {
    Family f;
    for (int mm = 1; mm <= mcount; ++mm)
      if (bits & (1u << (mm - 1))) f.push_back(static_cast<Mask>(mm));
    fams.push_back(std::move(f));
  }
  return fams;
}

// Vertex rule on one pattern group: every complete pick of one member per
// bound family leaves a common value.  An empty bound family admits no
// complete pick, so it passes by itself.
bool intersection_rule(const PatternGroup& g, const std::vector<Family>& chosen,
                       int k) {
  std::set<Mask> states = {static_cast<Mask>((1u << k) - 1)};
  for (std::size_t c = 0; c < g.channels.size(); ++c) {
    if (!g.bound[c]) continue;
    const Family& f = chosen[c];
    if (f.empty()) return true;
    std::set<Mask> next;
    for (Mask s : states)
      for (Mask mm : f) next.insert(s & mm);
    states = std::move(next);
  }
  return states.count(0) == 0;
}

enum class PoolKind { VertexRule, FacetPool };

// Assignments of one family per cell of the group.  Under FacetPool the
// self-loop cell ranges over singleton families only and forced cells copy
// it; both kinds respect the vertex rule.
std::vector<std::vector<Family>> group_assignments(
    const PatternGroup& g, const std::set<CellKey>& forced,
    const std::vector<Family>& fams, PoolKind kind, int k, long long& left) {
  const std::size_t cellc = g.channels.size();
  std::size_t self_idx = cellc;
  for (std::size_t c = 0; c < cellc; ++c)
    if (g.channels[c].size() == 1) self_idx = c;

  std::vector<std::size_t> order;
  if (kind == PoolKind::FacetPool && self_idx < cellc) order.push_back(self_idx);
  for (std::size_t c = 0; c < cellc; ++c)
    if (!(kind == PoolKind::FacetPool && c == self_idx)) order.push_back(c);

  std::vector<Family> singletons;
  for (Mask mm = 1; mm < (1u << k); ++mm) singletons.push_back({mm});

  std::vector<std::vector<Family>> out;
  std::vector<Family> chosen(cellc);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == order.size()) {
      if (--left < 0)
        throw std::runtime_error(
            "speedup construction exceeded the enumeration budget");
      if (intersection_rule(g, chosen, k)) out.push_back(chosen);
      return;
    }
    std::size_t c = order[pos];
    bool is_self = c == self_idx;
    if (kind == PoolKind::FacetPool && !is_self && self_idx < cellc &&
        forced.count({g.channels[c], g.E})) {
      chosen[c] = chosen[self_idx];
      rec(pos + 1);
      return;
    }
    const std::vector<Family>& dom =
        (kind == PoolKind::FacetPool && is_self) ? singletons : fams;
    for (const Family& f : dom) {
      chosen[c] = f;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

struct PoolValue {
  Term term;
  Term x;
  std::map<CellKey, std::vector<std::vector<Term>>> cells;
};

std::vector<PoolValue> name_values(const TaskSpec& task, const Model& m,
                                   ProcName i, PoolKind kind,
                                   const Budget& budget) {
  NameUniverse u = make_universe(task, m, i);
  if (kind == PoolKind::FacetPool) mark_forced(m, u);
  const int k = static_cast<int>(u.outs.size());
  std::vector<Family> fams = all_families(k);
  long long left = budget.enumeration;

  std::vector<PoolValue> out;
  if (u.xs.empty() || u.groups.empty()) return out;
  std::vector<std::vector<std::vector<Family>>> per_group;
  for (const PatternGroup& g : u.groups) {
    per_group.push_back(group_assignments(g, u.forced, fams, kind, k, left));
    if (per_group.back().empty()) return out;
  }

  std::vector<std::size_t> idx(u.groups.size(), 0);
  while (true) {
    if (--left < 0)
      throw std::runtime_error(
          "speedup construction exceeded the enumeration budget");
    std::map<CellKey, std::vector<std::vector<Term>>> cells;
    for (std::size_t gi = 0; gi < u.groups.size(); ++gi) {
      const PatternGroup& g = u.groups[gi];
      const std::vector<Family>& chosen = per_group[gi][idx[gi]];
      for (std::size_t c = 0; c < g.channels.size(); ++c) {
        std::vector<std::vector<Term>> members;
        for (Mask mm : chosen[c]) members.push_back(member_values(mm, u.outs));
        cells[{g.channels[c], g.E}] = std::move(members);
      }
    }
    for (const Term& x : u.xs) {
      SpeedupValue sv;
      sv.x = x;
      sv.cells = cells;
      PoolValue pv;
      pv.x = x;
      pv.cells = cells;
      pv.term = speedup_value_term(sv);
      out.push_back(std::move(pv));
    }
    std::size_t gi = 0;
    while (gi < idx.size() && ++idx[gi] == per_group[gi].size()) {
      idx[gi] = 0;
      ++gi;
    }
    if (gi == idx.size()) break;
  }
  std::sort(out.begin(), out.end(),
            [](const PoolValue& a, const PoolValue& b) { return a.term < b.term; });
  return out;
}

// Acceptability of selected members on one channel: every value tuple drawn
// from them must extend the x values to an output allowed for some input
// simplex containing those x values.
struct CompatCache {
  const TaskSpec* task = nullptr;
  std::map<std::tuple<Channel, std::vector<Term>, std::vector<std::vector<Term>>>,
           bool>
      memo;

  bool check(const Channel& e, const std::vector<Term>& xs,
             const std::vector<std::vector<Term>>& members) {
    auto key = std::make_tuple(e, xs, members);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = eval(e, xs, members);
    memo.emplace(std::move(key), ok);
    return ok;
  }

  bool eval(const Channel& e, const std::vector<Term>& xs,
            const std::vector<std::vector<Term>>& members) const {
    std::vector<Vertex> xv;
    for (std::size_t a = 0; a < e.size(); ++a) xv.push_back({e[a], xs[a]});
    Simplex xface(std::move(xv));
    std::vector<const Simplex*> taus;
    for (const Simplex& tau : task->inputs.all_simplices())
      if (tau.has_face(xface)) taus.push_back(&tau);
    if (taus.empty()) return false;
    for (const auto& mem : members)
      if (mem.empty()) return false;

    std::vector<std::size_t> pick(e.size(), 0);
    while (true) {
      std::vector<Vertex> yv;
      for (std::size_t a = 0; a < e.size(); ++a)
        yv.push_back({e[a], members[a][pick[a]]});
      Simplex yface(std::move(yv));
      bool found = false;
      for (const Simplex* tau : taus) {
        for (const Simplex& img : task->delta_of(*tau))
          if (img.has_face(yface)) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
      std::size_t a = 0;
      while (a < pick.size() && ++pick[a] == members[a].size()) {
        pick[a] = 0;
        ++a;
      }
      if (a == pick.size()) break;
    }
    return true;
  }
};

// One joint-selector obligation: a channel of some closed pattern together
// with the channel sets its members run there.
struct SelectorGroup {
  Channel e;
  std::vector<std::pair<ProcName, ChannelSet>> rows;
};

std::vector<SelectorGroup> selector_groups(const Model& m) {
  std::set<std::pair<Channel, std::vector<std::pair<ProcName, ChannelSet>>>> seen;
  for (const Simplex& phi : m.closed_simplices()) {
    std::map<ProcName, ChannelSet> pats;
    std::set<Channel> chans;
    for (const Vertex& pv : phi.vertices()) {
      pats[pv.name] = pattern_from_term(pv.value);
      for (const Channel& e : pats[pv.name]) chans.insert(e);
    }
    for (const Channel& e : chans) {
      std::vector<std::pair<ProcName, ChannelSet>> rows;
      for (ProcName j : e) rows.push_back({j, pats.at(j)});
      seen.insert({e, std::move(rows)});
    }
  }
  std::vector<SelectorGroup> out;
  for (const auto& [e, rows] : seen) out.push_back({e, rows});
  return out;
}

// Search for one member per (name, channel, channel set) triple satisfying
// every obligation whose names are all present in the candidate.  The same
// choice serves every closed pattern referencing the triple.
bool joint_selector_exists(const std::vector<SelectorGroup>& groups,
                           const std::map<ProcName, const PoolValue*>& cand,
                           CompatCache& cc) {
  std::map<std::tuple<ProcName, Channel, ChannelSet>, int> varid;
  std::vector<const std::vector<std::vector<Term>>*> domains;
  struct Ob {
    const SelectorGroup* g = nullptr;
    std::vector<int> vars;
    std::vector<Term> xs;
  };
  std::vector<Ob> obs;
  for (const SelectorGroup& sg : groups) {
    bool all = true;
    for (const auto& [j, E] : sg.rows)
      if (!cand.count(j)) {
        all = false;
        break;
      }
    if (!all) continue;
    Ob ob;
    ob.g = &sg;
    for (const auto& [j, E] : sg.rows) {
      auto key = std::make_tuple(j, sg.e, E);
      auto it = varid.find(key);
      int id;
      if (it == varid.end()) {
        id = static_cast<int>(domains.size());
        auto cit = cand.at(j)->cells.find({sg.e, E});
        if (cit == cand.at(j)->cells.end() || cit->second.empty()) return false;
        varid.emplace(std::move(key), id);
        domains.push_back(&cit->second);
      } else {
        id = it->second;
      }
      ob.vars.push_back(id);
      ob.xs.push_back(cand.at(j)->x);
    }
    obs.push_back(std::move(ob));
  }

  std::vector<std::vector<const Ob*>> check_at(domains.size());
  for (const Ob& ob : obs) {
    int last = *std::max_element(ob.vars.begin(), ob.vars.end());
    check_at[last].push_back(&ob);
  }
  std::vector<int> pick(domains.size(), -1);
  std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
    if (v == domains.size()) return true;
    for (std::size_t c = 0; c < domains[v]->size(); ++c) {
      pick[v] = static_cast<int>(c);
      bool ok = true;
      for (const Ob* ob : check_at[v]) {
        std::vector<std::vector<Term>> mem;
        for (int id : ob->vars) mem.push_back((*domains[id])[pick[id]]);
        if (!cc.check(ob->g->e, ob->xs, mem)) {
          ok = false;
          break;
        }
      }
      if (ok && rec(v + 1)) return true;
    }
    pick[v] = -1;
    return false;
  };
  return rec(0);
}

Term input_key(const std::vector<ProcName>& names, const std::vector<Term>& xs) {
  std::vector<Term> ns;
  for (ProcName i : names) ns.push_back(Term::integer(i));
  return Term::tuple({Term::list(std::move(ns)), Term::list(xs)});
}

}  // namespace

Term speedup_value_term(const SpeedupValue& v) {
  std::vector<Term> entries;
  for (const auto& [key, fam] : v.cells) {
    std::vector<Term> members;
    for (const auto& s : fam) {
      std::vector<Term> vals = s;
      members.push_back(Term::set(std::move(vals)));
    }
    entries.push_back(Term::tuple(
        {Term::tuple({channel_term(key.first), pattern_term(key.second)}),
         Term::set(std::move(members))}));
  }
  return Term::tuple({Term::atom(kHead), v.x, Term::list(std::move(entries))});
}

SpeedupValue decode_speedup_value(const Term& t) {
  if (t.kind() != Term::Kind::Tuple || t.items().size() != 3 ||
      !t.items()[0].is_atom() || t.items()[0].atom_name() != kHead)
    throw std::runtime_error("not a speedup value: " + t.str());
  SpeedupValue v;
  v.x = t.items()[1];
  for (const Term& entry : t.items()[2].items()) {
    const Term& key = entry.items()[0];
    CellKey ck{channel_from_term(key.items()[0]),
               pattern_from_term(key.items()[1])};
    std::vector<std::vector<Term>> members;
    for (const Term& s : entry.items()[1].items()) members.push_back(s.items());
    v.cells[ck] = std::move(members);
  }
  return v;
}

std::vector<std::vector<Term>> family_at(const Term& value, const Channel& e,
                                         const ChannelSet& E) {
  SpeedupValue v = decode_speedup_value(value);
  auto it = v.cells.find({e, E});
  if (it == v.cells.end())
    throw std::runtime_error(
        "speedup value has no cell for the given channel and channel set");
  return it->second;
}

std::vector<Term> enumerate_vertex_values(const TaskSpec& task, const Model& m,
                                          ProcName i, const Budget& budget) {
  std::vector<Term> out;
  for (PoolValue& pv : name_values(task, m, i, PoolKind::VertexRule, budget))
    out.push_back(std::move(pv.term));
  std::sort(out.begin(), out.end());
  return out;
}

TaskSpec build_speedup_task(const TaskSpec& task, const Model& m,
                            const Budget& budget) {
  if (task.n != m.n())
    throw std::runtime_error("speedup construction: task and model disagree on n");
  const int n = m.n();

  std::vector<std::vector<PoolValue>> pool(n + 1);
  for (ProcName i = 1; i <= n; ++i)
    pool[i] = name_values(task, m, i, PoolKind::FacetPool, budget);

  std::vector<SelectorGroup> groups = selector_groups(m);
  CompatCache cc{&task, {}};

  long long left = budget.enumeration;
  std::vector<Simplex> facets;
  std::map<ProcName, const PoolValue*> cand;
  std::function<void(ProcName)> rec = [&](ProcName i) {
    if (i > n) {
      std::vector<Vertex> verts;
      for (const auto& [j, pv] : cand) verts.push_back({j, pv->term});
      facets.push_back(Simplex(std::move(verts)));
      if (facets.size() > budget.max_facets)
        throw std::runtime_error("speedup construction exceeded the facet budget");
      return;
    }
    for (const PoolValue& v : pool[i]) {
      if (--left < 0)
        throw std::runtime_error(
            "speedup construction exceeded the enumeration budget");
      cand[i] = &v;
      if (joint_selector_exists(groups, cand, cc)) rec(i + 1);
      cand.erase(i);
    }
  };
  rec(1);

  Complex outputs = Complex::closure_of(std::move(facets));

  std::map<Term, std::vector<Simplex>> buckets;
  for (const Simplex& s : outputs.all_simplices()) {
    std::vector<Term> xs;
    for (const Vertex& v : s.vertices())
      xs.push_back(decode_speedup_value(v.value).x);
    buckets[input_key(s.names(), xs)].push_back(s);
  }
  std::map<Simplex, std::vector<Simplex>> delta;
  for (const Simplex& s : task.inputs.all_simplices()) {
    std::vector<Term> xs;
    for (const Vertex& v : s.vertices()) xs.push_back(v.value);
    auto it = buckets.find(input_key(s.names(), xs));
    delta[s] = it == buckets.end() ? std::vector<Simplex>{} : it->second;
  }
  return make_task(task.name + "*", n, task.inputs, std::move(outputs),
                   std::move(delta));
}

std::map<Term, Term> speedup_values_from_solution(const TaskSpec& task,
                                                  const Model& m, int t,
                                                  const SolveResult& sol) {
  if (sol.status != SolveStatus::Solvable)
    throw std::runtime_error("speedup values require a solvable result");
  if (sol.rounds != t)
    throw std::runtime_error("solution round count differs from the horizon");
  if (t < 1) throw std::runtime_error("speedup values need a horizon of at least 1");
  ProtocolComplex prev = protocol_complex(task.inputs, m, t - 1);

  auto solution_value = [&](ProcName i, const Term& view) -> Term {
    Term key = class_key({i, view}, sol.mode);
    auto it = sol.assignment.find(key);
    if (it == sol.assignment.end())
      throw std::runtime_error("solution does not cover a reached view");
    return it->second;
  };

  std::map<Term, Term> out;
  for (const Vertex& v : prev.complex.vertices()) {
    SpeedupValue val;
    val.x = view_input(v.value);
    Complex st_v = prev.complex.star_closure(v);
    for (const ChannelSet& E : m.patterns_at(v.name)) {
      std::optional<Simplex> phi;
      for (const Simplex& c : m.closed_simplices())
        if (c.has_vertex({v.name, pattern_term(E)})) {
          phi = c;
          break;
        }
      for (const Channel& e : m.channels_at(v.name)) {
        std::set<std::vector<Term>> fam;
        if (phi) {
          for (const Simplex& sigma : st_v.simplices_with_names(e)) {
            std::set<Term> vals;
            Complex st_sigma = prev.complex.star_closure(sigma);
            for (const Simplex& rho : st_sigma.simplices_with_names(phi->names())) {
              Simplex img = communication_step(rho, *phi);
              vals.insert(solution_value(v.name, *img.value_at(v.name)));
            }
            fam.insert(std::vector<Term>(vals.begin(), vals.end()));
          }
        }
        val.cells[{e, E}] =
            std::vector<std::vector<Term>>(fam.begin(), fam.end());
      }
    }
    Term key = class_key(v, sol.mode);
    Term term = speedup_value_term(val);
    auto [it, inserted] = out.emplace(std::move(key), term);
    if (!inserted && !(it->second == term))
      throw std::runtime_error(
          "solution induces conflicting speedup values in one class");
  }
  return out;
}

Simplex one_round_outputs(const TaskSpec& task, const Simplex& speedup_simplex,
                          const Simplex& phi) {
  if (speedup_simplex.names() != phi.names())
    throw std::runtime_error("speedup outputs and pattern name sets differ");
  if (!Model::is_closed(phi))
    throw std::runtime_error("one-round outputs need a closed pattern");

  std::map<ProcName, SpeedupValue> vals;
  std::map<ProcName, ChannelSet> pats;
  std::set<Channel> chans;
  for (const Vertex& pv : phi.vertices()) {
    pats[pv.name] = pattern_from_term(pv.value);
    for (const Channel& e : pats[pv.name]) chans.insert(e);
    vals.emplace(pv.name,
                 decode_speedup_value(*speedup_simplex.value_at(pv.name)));
  }

  CompatCache cc{&task, {}};
  std::map<std::pair<ProcName, Channel>, std::vector<Term>> selected;
  for (const Channel& e : chans) {
    std::vector<const std::vector<std::vector<Term>>*> doms;
    std::vector<Term> xs;
    for (ProcName j : e) {
      const SpeedupValue& v = vals.at(j);
      auto it = v.cells.find({e, pats.at(j)});
      if (it == v.cells.end() || it->second.empty())
        throw std::runtime_error("missing family on an active channel");
      doms.push_back(&it->second);
      xs.push_back(v.x);
    }
    std::vector<std::size_t> pick(e.size(), 0);
    bool found = false;
    while (true) {
      std::vector<std::vector<Term>> mem;
      for (std::size_t a = 0; a < e.size(); ++a) mem.push_back((*doms[a])[pick[a]]);
      if (cc.check(e, xs, mem)) {
        for (std::size_t a = 0; a < e.size(); ++a) selected[{e[a], e}] = mem[a];
        found = true;
        break;
      }
      std::size_t a = 0;
      while (a < pick.size() && ++pick[a] == doms[a]->size()) {
        pick[a] = 0;
        ++a;
      }
      if (a == pick.size()) break;
    }
    if (!found)
      throw std::runtime_error("no acceptable joint choice on channel " +
                               channel_term(e).str());
  }

  std::vector<Vertex> outv;
  for (const auto& [i, E] : pats) {
    std::vector<Term> common;
    bool first = true;
    for (const Channel& e : E) {
      const std::vector<Term>& s = selected.at({i, e});
      if (first) {
        common = s;
        first = false;
      } else {
        std::vector<Term> inter;
        std::set_intersection(common.begin(), common.end(), s.begin(), s.end(),
                              std::back_inserter(inter));
        common = std::move(inter);
      }
    }
    if (common.empty())
      throw std::runtime_error("selected members share no output value at name " +
                               std::to_string(i));
    outv.push_back({i, common.front()});
  }
  return Simplex(std::move(outv));
}

Extraction check_includes_original(const TaskSpec& speedup,
                                   const TaskSpec& original,
                                   const Budget& budget) {
  std::vector<std::pair<ProcName, Term>> vars;
  std::map<std::pair<ProcName, Term>, int> varid;
  std::vector<std::vector<Term>> domains;
  for (ProcName i : speedup.outputs.names()) {
    for (const Term& v : speedup.outputs.values_at(i)) {
      varid[{i, v}] = static_cast<int>(vars.size());
      vars.push_back({i, v});
      domains.push_back(original.outputs.values_at(i));
    }
  }

  struct C {
    std::vector<int> vars;
    std::vector<ProcName> names;
    const std::vector<Simplex>* allowed = nullptr;
  };
  std::vector<C> cons;
  for (const Simplex& sigma : speedup.inputs.facets()) {
    const std::vector<Simplex>& allowed = original.delta_of(sigma);
    for (const Simplex& s : speedup.delta_of(sigma)) {
      C c;
      c.allowed = &allowed;
      for (const Vertex& v : s.vertices()) {
        c.vars.push_back(varid.at({v.name, v.value}));
        c.names.push_back(v.name);
      }
      cons.push_back(std::move(c));
    }
  }

  Extraction ex;
  if (vars.empty()) {
    ex.exists = true;
    return ex;
  }
  std::vector<std::vector<const C*>> check_at(vars.size());
  for (const C& c : cons) {
    int last = *std::max_element(c.vars.begin(), c.vars.end());
    check_at[last].push_back(&c);
  }

  std::vector<int> pick(vars.size(), -1);
  long long nodes = 0;
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == vars.size()) return true;
    for (std::size_t d = 0; d < domains[k].size(); ++d) {
      if (++nodes > budget.search_nodes)
        throw std::runtime_error("extraction search exceeded the node budget");
      pick[k] = static_cast<int>(d);
      bool ok = true;
      for (const C* c : check_at[k]) {
        std::vector<Vertex> verts;
        for (std::size_t a = 0; a < c->vars.size(); ++a)
          verts.push_back(
              {c->names[a], domains[c->vars[a]][pick[c->vars[a]]]});
        Simplex img(std::move(verts));
        bool fine = std::binary_search(c->allowed->begin(), c->allowed->end(),
                                       img);
        if (!fine) {
          ok = false;
          break;
        }
      }
      if (ok && rec(k + 1)) return true;
    }
    pick[k] = -1;
    return false;
  };
  if (!rec(0)) return ex;

  ex.exists = true;
  for (std::size_t k = 0; k < vars.size(); ++k)
    ex.read[vars[k].first][vars[k].second] = domains[k][pick[k]];
  return ex;
}

SpeedupPairVerdict verify_speedup_pair(const TaskSpec& task, const Model& m,
                                       int t, Mode mode, const Budget& budget) {
  if (t < 1) throw std::runtime_error("speedup pair needs a horizon of at least 1");
  SpeedupPairVerdict v;
  v.direct = solve(task, m, t, mode, budget);
  TaskSpec sp = build_speedup_task(task, m, budget);
  v.reduced = solve(sp, m, t - 1, mode, budget);
  v.agree = v.direct.status != SolveStatus::BudgetExceeded &&
            v.reduced.status != SolveStatus::BudgetExceeded &&
            (v.direct.status == SolveStatus::Solvable) ==
                (v.reduced.status == SolveStatus::Solvable);
  return v;
}

IterateResult iterate_speedup(const TaskSpec& task, const Model& m, int t,
                              const Budget& budget) {
  IterateResult res;
  TaskSpec cur = task;
  for (int h = t; h >= 1; --h) {
    CheckabilityResult edge = check_edge_checkability(cur, m, budget);
    IndependenceResult ind = check_t_independence(cur.inputs, m, h - 1, budget);
    if (!edge.holds || !ind.holds) {
      res.status = IterateStatus::HypothesisLost;
      std::ostringstream d;
      d << "at horizon " << h << ": ";
      if (!edge.holds) d << "task " << cur.name << " is not edge-checkable";
      if (!edge.holds && !ind.holds) d << " and ";
      if (!ind.holds) d << "the inputs are not " << (h - 1) << "-independent";
      res.detail = d.str();
      return res;
    }
    IterateStep step;
    step.horizon = h;
    step.edge_checkable = edge.holds;
    step.independent = ind.holds;
    step.built = build_speedup_task(cur, m, budget);
    cur = step.built;
    res.steps.push_back(std::move(step));
  }
  res.status = IterateStatus::Completed;
  return res;
}

}  // namespace tasklab
