#include "tasklab/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tasklab {

struct Term::Node {
  Kind kind;
  long long num = 0;
  std::string sym;
  std::vector<Term> kids;
  std::size_t hash = 0;
};

namespace {

std::size_t fnv1a(std::size_t seed, std::uint64_t x) {
  std::size_t h = seed;
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::size_t node_hash(Term::Kind kind, long long num, const std::string& sym,
                      const std::vector<Term>& kids) {
  std::size_t h = 0xcbf29ce484222325ull;
  h = fnv1a(h, static_cast<std::uint64_t>(kind));
  h = fnv1a(h, static_cast<std::uint64_t>(num));
  for (char c : sym) h = fnv1a(h, static_cast<unsigned char>(c));
  for (const Term& k : kids) h = fnv1a(h, k.hash());
  return h;
}

int kind_rank(Term::Kind k) { return static_cast<int>(k); }

}  // namespace

static std::shared_ptr<const Term::Node> make_node(Term::Kind kind,
                                                   long long num,
                                                   std::string sym,
                                                   std::vector<Term> kids) {
  auto n = std::make_shared<Term::Node>();
  n->kind = kind;
  n->num = num;
  n->sym = std::move(sym);
  n->kids = std::move(kids);
  n->hash = node_hash(kind, num, n->sym, n->kids);
  return n;
}

Term::Term() : node_(make_node(Kind::Tuple, 0, "", {})) {}

Term Term::integer(long long v) { return Term(make_node(Kind::Int, v, "", {})); }

Term Term::atom(const std::string& name) {
  if (name.empty()) throw std::runtime_error("atom name must be nonempty");
  return Term(make_node(Kind::Atom, 0, name, {}));
}

Term Term::tuple(std::vector<Term> items) {
  return Term(make_node(Kind::Tuple, 0, "", std::move(items)));
}

Term Term::list(std::vector<Term> items) {
  return Term(make_node(Kind::List, 0, "", std::move(items)));
}

Term Term::set(std::vector<Term> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return Term(make_node(Kind::Set, 0, "", std::move(items)));
}

Term::Kind Term::kind() const { return node_->kind; }

long long Term::int_value() const {
  if (kind() != Kind::Int) throw std::runtime_error("term is not an integer");
  return node_->num;
}

const std::string& Term::atom_name() const {
  if (kind() != Kind::Atom) throw std::runtime_error("term is not an atom");
  return node_->sym;
}

const std::vector<Term>& Term::items() const {
  if (kind() == Kind::Int || kind() == Kind::Atom)
    throw std::runtime_error("term has no items");
  return node_->kids;
}

std::size_t Term::hash() const { return node_->hash; }

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (node_->hash != o.node_->hash) return false;
  return (*this <=> o) == std::strong_ordering::equal;
}

std::strong_ordering Term::operator<=>(const Term& o) const {
  if (node_ == o.node_) return std::strong_ordering::equal;
  if (int c = kind_rank(kind()) - kind_rank(o.kind()); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  switch (kind()) {
    case Kind::Int:
      return node_->num <=> o.node_->num;
    case Kind::Atom:
      return node_->sym.compare(o.node_->sym) <=> 0;
    default: {
      const auto& a = node_->kids;
      const auto& b = o.node_->kids;
      std::size_t m = std::min(a.size(), b.size());
      for (std::size_t i = 0; i < m; ++i)
        if (auto c = a[i] <=> b[i]; c != std::strong_ordering::equal) return c;
      return a.size() <=> b.size();
    }
  }
}

std::string Term::str() const {
  std::ostringstream out;
  switch (kind()) {
    case Kind::Int:
      out << node_->num;
      break;
    case Kind::Atom:
      out << node_->sym;
      break;
    case Kind::Tuple:
    case Kind::List:
    case Kind::Set: {
      char open = kind() == Kind::Tuple ? '(' : kind() == Kind::List ? '[' : '{';
      char close = kind() == Kind::Tuple ? ')' : kind() == Kind::List ? ']' : '}';
      out << open;
      for (std::size_t i = 0; i < node_->kids.size(); ++i) {
        if (i) out << ',';
        out << node_->kids[i].str();
      }
      out << close;
      break;
    }
  }
  return out.str();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    std::ostringstream out;
    out << "term parse error at offset " << pos << ": " << msg;
    throw std::runtime_error(out.str());
  }

  char peek() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    return s[pos];
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  std::vector<Term> parse_items(char close) {
    std::vector<Term> items;
    skip_ws();
    if (peek() == close) {
      ++pos;
      return items;
    }
    while (true) {
      items.push_back(parse_term());
      char c = peek();
      if (c == ',') {
        ++pos;
        continue;
      }
      if (c == close) {
        ++pos;
        return items;
      }
      fail(std::string("expected ',' or '") + close + "'");
    }
  }

  Term parse_term() {
    char c = peek();
    if (c == '(') { ++pos; return Term::tuple(parse_items(')')); }
    if (c == '[') { ++pos; return Term::list(parse_items(']')); }
    if (c == '{') { ++pos; return Term::set(parse_items('}')); }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      if (c == '-') ++pos;
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        fail("expected digits");
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Term::integer(std::stoll(s.substr(start, pos - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
              s[pos] == '.' || s[pos] == '+' || s[pos] == '\''))
        ++pos;
      return Term::atom(s.substr(start, pos - start));
    }
    fail("unexpected character");
  }
};

}  // namespace

Term Term::parse(const std::string& text) {
  Parser p{text};
  Term t = p.parse_term();
  if (!p.at_end()) p.fail("trailing characters");
  return t;
}

}  // namespace tasklab
