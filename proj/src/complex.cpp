#include "tasklab/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tasklab {

std::string Vertex::str() const {
  std::ostringstream out;
  out << "(" << name << ":" << value.str() << ")";
  return out.str();
}

Simplex::Simplex(std::vector<Vertex> verts) : verts_(std::move(verts)) {
  std::sort(verts_.begin(), verts_.end());
  for (std::size_t i = 1; i < verts_.size(); ++i)
    if (verts_[i - 1].name == verts_[i].name)
      throw std::runtime_error("simplex has two vertices with name " +
                               std::to_string(verts_[i].name));
}

Simplex Simplex::single(ProcName name, const Term& value) {
  return Simplex({{name, value}});
}

std::vector<ProcName> Simplex::names() const {
  std::vector<ProcName> out;
  out.reserve(verts_.size());
  for (const Vertex& v : verts_) out.push_back(v.name);
  return out;
}

std::optional<Term> Simplex::value_at(ProcName name) const {
  for (const Vertex& v : verts_)
    if (v.name == name) return v.value;
  return std::nullopt;
}

bool Simplex::has_vertex(const Vertex& v) const {
  auto val = value_at(v.name);
  return val && *val == v.value;
}

bool Simplex::has_face(const Simplex& face) const {
  return std::includes(verts_.begin(), verts_.end(), face.verts_.begin(),
                       face.verts_.end());
}

Simplex Simplex::project(const std::vector<ProcName>& J) const {
  std::vector<Vertex> out;
  for (const Vertex& v : verts_)
    if (std::find(J.begin(), J.end(), v.name) != J.end()) out.push_back(v);
  return Simplex(std::move(out));
}

std::optional<Simplex> Simplex::merge(const Simplex& a, const Simplex& b) {
  std::vector<Vertex> out = a.verts_;
  for (const Vertex& v : b.verts_) {
    auto val = a.value_at(v.name);
    if (val) {
      if (*val != v.value) return std::nullopt;
    } else {
      out.push_back(v);
    }
  }
  return Simplex(std::move(out));
}

std::vector<Simplex> Simplex::faces() const {
  std::vector<Simplex> out;
  std::size_t k = verts_.size();
  for (std::size_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) sub.push_back(verts_[i]);
    out.push_back(Simplex(std::move(sub)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Simplex::str() const {
  std::ostringstream out;
  out << "<";
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i) out << " ";
    out << verts_[i].name << ":" << verts_[i].value.str();
  }
  out << ">";
  return out.str();
}

Complex Complex::closure_of(std::vector<Simplex> simplices) {
  simplices.erase(std::remove_if(simplices.begin(), simplices.end(),
                                 [](const Simplex& s) { return s.empty(); }),
                  simplices.end());
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

  Complex c;
  // Keep maximal simplices only.
  for (const Simplex& s : simplices) {
    bool maximal = true;
    for (const Simplex& t : simplices) {
      if (t.size() > s.size() && t.has_face(s)) {
        maximal = false;
        break;
      }
    }
    if (maximal) c.facets_.push_back(s);
  }

  std::set<Simplex> all;
  for (const Simplex& f : c.facets_)
    for (Simplex& face : f.faces()) all.insert(std::move(face));
  c.faces_.assign(all.begin(), all.end());
  return c;
}

int Complex::dim() const {
  int d = -1;
  for (const Simplex& f : facets_) d = std::max(d, f.dim());
  return d;
}

bool Complex::is_pure() const {
  if (facets_.empty()) return true;
  int d = dim();
  for (const Simplex& f : facets_)
    if (f.dim() != d) return false;
  return true;
}

bool Complex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  return std::binary_search(faces_.begin(), faces_.end(), s);
}

bool Complex::contains_vertex(const Vertex& v) const {
  return contains(Simplex(std::vector<Vertex>{v}));
}

std::vector<Vertex> Complex::vertices() const {
  std::vector<Vertex> out;
  for (const Simplex& s : faces_)
    if (s.size() == 1) out.push_back(s.vertices()[0]);
  return out;
}

std::vector<ProcName> Complex::names() const {
  std::set<ProcName> seen;
  for (const Simplex& f : facets_)
    for (const Vertex& v : f.vertices()) seen.insert(v.name);
  return {seen.begin(), seen.end()};
}

std::vector<Term> Complex::values_at(ProcName name) const {
  std::set<Term> seen;
  for (const Simplex& f : facets_) {
    auto val = f.value_at(name);
    if (val) seen.insert(*val);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Simplex> Complex::simplices_with_names(
    const std::vector<ProcName>& names) const {
  std::vector<Simplex> out;
  for (const Simplex& s : faces_)
    if (s.names() == names) out.push_back(s);
  return out;
}

Complex Complex::skeleton(const std::vector<ProcName>& J) const {
  std::vector<Simplex> projected;
  for (const Simplex& f : facets_) {
    Simplex p = f.project(J);
    if (!p.empty()) projected.push_back(std::move(p));
  }
  return closure_of(std::move(projected));
}

Complex Complex::star_closure(const Simplex& s) const {
  std::vector<Simplex> carrier;
  for (const Simplex& f : facets_)
    if (f.has_face(s)) carrier.push_back(f);
  return closure_of(std::move(carrier));
}

std::string Complex::str() const {
  std::ostringstream out;
  out << "complex dim=" << dim() << " facets=" << facets_.size() << "\n";
  for (const Simplex& f : facets_) out << "  " << f.str() << "\n";
  return out.str();
}

Complex pseudosphere(const std::vector<std::pair<ProcName, std::vector<Term>>>& spec) {
  for (const auto& [name, vals] : spec)
    if (vals.empty())
      throw std::runtime_error("pseudosphere: empty value set at name " +
                               std::to_string(name));
  std::vector<Simplex> facets;
  std::vector<std::size_t> idx(spec.size(), 0);
  while (true) {
    std::vector<Vertex> verts;
    for (std::size_t i = 0; i < spec.size(); ++i)
      verts.push_back({spec[i].first, spec[i].second[idx[i]]});
    facets.push_back(Simplex(std::move(verts)));
    std::size_t i = 0;
    while (i < spec.size() && ++idx[i] == spec[i].second.size()) idx[i++] = 0;
    if (i == spec.size()) break;
  }
  return Complex::closure_of(std::move(facets));
}

Complex pseudosphere(int n, const std::vector<Term>& values) {
  std::vector<std::pair<ProcName, std::vector<Term>>> spec;
  for (int i = 1; i <= n; ++i) spec.emplace_back(i, values);
  return pseudosphere(spec);
}

}  // namespace tasklab
