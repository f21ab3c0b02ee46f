#include "tasklab/checkers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tasklab {

namespace {

std::string channel_str(const Channel& e) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
  out << "}";
  return out.str();
}

}  // namespace

std::string IndependenceWitness::str() const {
  std::ostringstream out;
  out << "pattern " << phi.str() << ", channel " << channel_str(channel)
      << ", base " << base.str() << ", collection {";
  for (std::size_t i = 0; i < collection.size(); ++i)
    out << (i ? ", " : "") << collection[i].str();
  out << "}";
  if (merge_conflict)
    out << ": the union is not a chromatic simplex";
  else
    out << ": union " << merged.str() << " is not a protocol simplex";
  return out.str();
}

bool independence_instance_holds(const Complex& protocol,
                                 const std::vector<Simplex>& collection) {
  Simplex acc;
  for (const Simplex& s : collection) {
    auto merged = Simplex::merge(acc, s);
    if (!merged) return false;
    acc = *merged;
  }
  if (acc.empty()) return true;
  return protocol.contains(acc);
}

IndependenceResult check_t_independence(const Complex& inputs, const Model& m,
                                        int t, const Budget& budget) {
  IndependenceResult res;
  ProtocolComplex p = protocol_complex(inputs, m, t);
  const Complex& P = p.complex;

  // The condition for (phi, e) depends only on e and on the channel sets of
  // the listeners in e, so equal restrictions are checked once.
  std::set<std::pair<Channel, std::map<ProcName, ChannelSet>>> seen;

  for (const Simplex& phi : m.closed_simplices()) {
    std::map<ProcName, ChannelSet> pattern;
    std::set<Channel> channels;
    for (const Vertex& v : phi.vertices()) {
      ChannelSet cs = pattern_from_term(v.value);
      channels.insert(cs.begin(), cs.end());
      pattern[v.name] = std::move(cs);
    }
    for (const Channel& e : channels) {
      std::map<ProcName, ChannelSet> restriction;
      for (ProcName j : e) restriction[j] = pattern.at(j);
      if (!seen.insert({e, restriction}).second) continue;

      for (const Simplex& base : P.simplices_with_names(e)) {
        // One slot per (listener j in e, channel f in E_j \ {e}); its
        // candidates are the protocol simplices on names f that carry the
        // base view of j.
        struct Slot {
          std::vector<Simplex> candidates;
        };
        std::vector<Slot> slots;
        for (ProcName j : e) {
          Term vj = *base.value_at(j);
          for (const Channel& f : pattern.at(j)) {
            if (f == e) continue;
            Slot slot;
            for (const Simplex& s : P.simplices_with_names(f))
              if (*s.value_at(j) == vj) slot.candidates.push_back(s);
            slots.push_back(std::move(slot));
          }
        }
        bool feasible = true;
        for (const Slot& s : slots)
          if (s.candidates.empty()) feasible = false;
        if (!feasible) continue;  // no complete collection exists

        std::vector<std::size_t> pick(slots.size(), 0);
        while (true) {
          if (++res.instances > budget.enumeration)
            throw std::runtime_error("independence check exceeded the enumeration budget");
          std::vector<Simplex> collection;
          collection.reserve(slots.size());
          for (std::size_t k = 0; k < slots.size(); ++k)
            collection.push_back(slots[k].candidates[pick[k]]);

          Simplex acc;
          bool conflict = false;
          for (const Simplex& s : collection) {
            auto merged = Simplex::merge(acc, s);
            if (!merged) {
              conflict = true;
              break;
            }
            acc = *merged;
          }
          if (conflict || (!acc.empty() && !P.contains(acc))) {
            res.holds = false;
            res.witness = IndependenceWitness{phi,      e,        base,
                                              collection, conflict, acc};
            return res;
          }

          std::size_t k = 0;
          while (k < pick.size() && ++pick[k] == slots[k].candidates.size()) {
            pick[k] = 0;
            ++k;
          }
          if (k == pick.size()) break;
        }
      }
    }
  }
  return res;
}

std::string CheckabilityWitness::str() const {
  std::ostringstream out;
  out << "input " << sigma.str() << ", labeling " << tau.str() << ", pattern "
      << phi.str() << ": ";
  if (delta_accepts)
    out << "delta accepts but " << detail;
  else
    out << "every local test passes (" << detail << ") yet delta rejects";
  return out.str();
}

namespace {

CheckabilityResult check_checkability(const TaskSpec& task, const Model& m,
                                      bool per_channel, const Budget& budget) {
  CheckabilityResult res;
  for (const Simplex& sigma : task.inputs.all_simplices()) {
    std::vector<ProcName> names = sigma.names();
    std::vector<Simplex> phis = m.closed_with_names(names);
    if (phis.empty()) continue;

    std::vector<std::vector<Term>> values;
    values.reserve(names.size());
    for (ProcName nm : names) values.push_back(task.outputs.values_at(nm));
    bool any_empty = false;
    for (const auto& v : values)
      if (v.empty()) any_empty = true;
    if (any_empty) continue;

    std::vector<std::size_t> pick(names.size(), 0);
    while (true) {
      std::vector<Vertex> labeled;
      for (std::size_t k = 0; k < names.size(); ++k)
        labeled.push_back({names[k], values[k][pick[k]]});
      Simplex tau(std::move(labeled));
      bool lhs = task.delta_allows(sigma, tau);

      for (const Simplex& phi : phis) {
        if (++res.instances > budget.enumeration)
          throw std::runtime_error("checkability check exceeded the enumeration budget");
        bool rhs = true;
        std::string detail;
        for (const Vertex& pv : phi.vertices()) {
          ChannelSet channels = pattern_from_term(pv.value);
          if (per_channel) {
            for (const Channel& e : channels) {
              if (!task.delta_allows(sigma.project(e), tau.project(e))) {
                rhs = false;
                std::ostringstream d;
                d << "process " << pv.name << " rejects channel " << channel_str(e);
                detail = d.str();
                break;
              }
            }
          } else {
            std::set<ProcName> ji;
            for (const Channel& e : channels) ji.insert(e.begin(), e.end());
            std::vector<ProcName> J(ji.begin(), ji.end());
            if (!task.delta_allows(sigma.project(J), tau.project(J))) {
              rhs = false;
              std::ostringstream d;
              d << "process " << pv.name << " rejects its reachable set";
              detail = d.str();
              break;
            }
          }
          if (!rhs) break;
        }
        if (lhs != rhs) {
          res.holds = false;
          if (detail.empty()) detail = "all per-process tests accept";
          res.witness = CheckabilityWitness{sigma, phi, tau, lhs, detail};
          return res;
        }
      }

      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == values[k].size()) {
        pick[k] = 0;
        ++k;
      }
      if (k == pick.size()) break;
    }
  }
  return res;
}

}  // namespace

CheckabilityResult check_local_checkability(const TaskSpec& task, const Model& m,
                                            const Budget& budget) {
  return check_checkability(task, m, /*per_channel=*/false, budget);
}

CheckabilityResult check_edge_checkability(const TaskSpec& task, const Model& m,
                                           const Budget& budget) {
  return check_checkability(task, m, /*per_channel=*/true, budget);
}

}  // namespace tasklab
