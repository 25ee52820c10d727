#include "mhyp/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mhyp {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

Signature::Signature(std::vector<std::pair<std::string, int>> symbols)
    : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& [name, arity] : symbols_) {
    if (name.empty()) throw DomainError("signature: empty symbol name");
    if (arity < 1) throw DomainError("signature: symbol '" + name + "' has arity < 1");
    if (!seen.insert(name).second)
      throw DomainError("signature: duplicate symbol '" + name + "'");
  }
}

Signature Signature::binary(const std::string& name) { return Signature{{name, 2}}; }

std::optional<std::size_t> Signature::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].first == name) return i;
  return std::nullopt;
}

int Signature::arity_of(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw DomainError("unknown operation symbol '" + name + "'");
  return symbols_[*i].second;
}

std::string Signature::describe() const {
  std::string out;
  for (const auto& [name, arity] : symbols_) {
    if (!out.empty()) out += ",";
    out += name + "/" + std::to_string(arity);
  }
  return out;
}

Term Term::var(int index) {
  if (index < 1) throw DomainError("variable index must be positive");
  auto node = std::make_shared<Node>();
  node->var = index;
  node->max_var = index;
  node->hash = mix(0x5641u, static_cast<std::size_t>(index));
  return Term(std::move(node));
}

Term Term::app(std::string symbol, std::vector<Term> children) {
  if (children.empty()) throw DomainError("application of '" + symbol + "' with no arguments");
  auto node = std::make_shared<Node>();
  node->symbol = std::move(symbol);
  node->children = std::move(children);
  std::size_t h = mix(0x4150u, std::hash<std::string>{}(node->symbol));
  for (const Term& c : node->children) {
    node->depth = std::max(node->depth, c.depth() + 1);
    node->nodes += c.node_count();
    node->max_var = std::max(node->max_var, c.max_var_index());
    h = mix(h, c.hash());
  }
  node->hash = h;
  return Term(std::move(node));
}

int Term::var_index() const {
  if (!is_var()) throw DomainError("var_index on an application term");
  return node_->var;
}

const std::string& Term::symbol() const {
  if (is_var()) throw DomainError("symbol of a variable term");
  return node_->symbol;
}

const std::vector<Term>& Term::children() const {
  if (is_var()) throw DomainError("children of a variable term");
  return node_->children;
}

int compare(const Term& a, const Term& b) {
  if (a.is_var() != b.is_var()) return a.is_var() ? -1 : 1;
  if (a.is_var()) return a.var_index() - b.var_index();
  if (int c = a.symbol().compare(b.symbol()); c != 0) return c;
  const auto& ca = a.children();
  const auto& cb = b.children();
  for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i)
    if (int c = compare(ca[i], cb[i]); c != 0) return c;
  return static_cast<int>(ca.size()) - static_cast<int>(cb.size());
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash || node_->nodes != other.node_->nodes) return false;
  return compare(*this, other) == 0;
}

bool Term::operator<(const Term& other) const { return compare(*this, other) < 0; }

bool Equation::operator<(const Equation& other) const {
  if (int c = compare(lhs, other.lhs); c != 0) return c < 0;
  return compare(rhs, other.rhs) < 0;
}

Address Address::child(int i) const {
  Address out(*this);
  out.path.push_back(i);
  return out;
}

std::string Address::str() const {
  if (path.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(path[i]);
  }
  return out;
}

int VarNames::index_for(const std::string& name) {
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  int index = 1;
  while (used_.count(index)) ++index;
  used_.insert(index);
  by_name_[name] = index;
  by_index_[index] = name;
  return index;
}

std::string VarNames::display(int index) const {
  if (auto it = by_index_.find(index); it != by_index_.end()) return it->second;
  return "x" + std::to_string(index);
}

namespace {

struct Parser {
  const std::string& text;
  const Signature& sig;
  VarNames& names;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool is_ident_char(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected an identifier", pos);
    while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  static std::optional<int> indexed_var(const std::string& id) {
    if (id.size() < 2 || id[0] != 'x') return std::nullopt;
    for (std::size_t i = 1; i < id.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(id[i]))) return std::nullopt;
    return std::stoi(id.substr(1));
  }

  Term term() {
    skip_ws();
    std::size_t at = pos;
    std::string id = ident();
    if (peek_is('(')) {
      auto sym = sig.index_of(id);
      if (!sym) throw ParseError("unknown operation symbol '" + id + "'", at);
      expect('(');
      std::vector<Term> children;
      children.push_back(term());
      while (peek_is(',')) {
        expect(',');
        children.push_back(term());
      }
      expect(')');
      int arity = sig.arity(*sym);
      if (static_cast<int>(children.size()) != arity)
        throw ParseError("symbol '" + id + "' expects " + std::to_string(arity) +
                             " arguments, got " + std::to_string(children.size()),
                         at);
      return Term::app(id, std::move(children));
    }
    if (auto index = indexed_var(id)) {
      if (*index < 1) throw ParseError("variable index must be positive", at);
      names.note_explicit(*index);
      return Term::var(*index);
    }
    if (sig.contains(id))
      throw ParseError("operation symbol '" + id + "' used without arguments", at);
    return Term::var(names.index_for(id));
  }
};

}  // namespace

Term parse_term(const std::string& text, const Signature& sig, VarNames& names) {
  Parser p{text, sig, names};
  Term t = p.term();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input after term", p.pos);
  return t;
}

Term parse_term(const std::string& text, const Signature& sig) {
  VarNames names;
  return parse_term(text, sig, names);
}

Equation parse_equation(const std::string& text, const Signature& sig, VarNames& names) {
  auto split = text.find('=');
  if (split == std::string::npos) throw ParseError("expected '<term> = <term>'", text.size());
  Term lhs = parse_term(text.substr(0, split), sig, names);
  Term rhs = parse_term(text.substr(split + 1), sig, names);
  return Equation{lhs, rhs};
}

namespace {

void format_into(const Term& t, const VarNames* names, std::string& out) {
  if (t.is_var()) {
    out += names ? names->display(t.var_index()) : "x" + std::to_string(t.var_index());
    return;
  }
  out += t.symbol();
  out += '(';
  const auto& children = t.children();
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) out += ',';
    format_into(children[i], names, out);
  }
  out += ')';
}

}  // namespace

std::string format_term(const Term& t) {
  std::string out;
  format_into(t, nullptr, out);
  return out;
}

std::string format_term(const Term& t, const VarNames& names) {
  std::string out;
  format_into(t, &names, out);
  return out;
}

std::string format_equation(const Equation& e) {
  return format_term(e.lhs) + " = " + format_term(e.rhs);
}

std::string format_equation(const Equation& e, const VarNames& names) {
  return format_term(e.lhs, names) + " = " + format_term(e.rhs, names);
}

namespace {

void collect_addresses(const Term& t, Address& prefix, std::vector<Address>& out) {
  if (t.is_var()) return;
  out.push_back(prefix);
  const auto& children = t.children();
  for (std::size_t i = 0; i < children.size(); ++i) {
    prefix.path.push_back(static_cast<int>(i) + 1);
    collect_addresses(children[i], prefix, out);
    prefix.path.pop_back();
  }
}

}  // namespace

std::vector<Address> addresses(const Term& t) {
  std::vector<Address> out;
  Address prefix;
  collect_addresses(t, prefix, out);
  return out;
}

bool valid_address(const Term& t, const Address& a) {
  const Term* cur = &t;
  for (int step : a.path) {
    if (cur->is_var()) return false;
    if (step < 1 || step > static_cast<int>(cur->children().size())) return false;
    cur = &cur->children()[step - 1];
  }
  return !cur->is_var();
}

Term subterm_at(const Term& t, const Address& a) {
  const Term* cur = &t;
  for (int step : a.path) {
    if (cur->is_var())
      throw DomainError("invalid address " + a.str() + ": descends into a variable");
    if (step < 1 || step > static_cast<int>(cur->children().size()))
      throw DomainError("invalid address " + a.str() + ": child index out of range");
    cur = &cur->children()[step - 1];
  }
  return *cur;
}

int first_variable(const Term& t) {
  const Term* cur = &t;
  while (!cur->is_var()) cur = &cur->children().front();
  return cur->var_index();
}

int last_variable(const Term& t) {
  const Term* cur = &t;
  while (!cur->is_var()) cur = &cur->children().back();
  return cur->var_index();
}

Term substitute(const Term& t, const std::map<int, Term>& binding) {
  if (t.is_var()) {
    auto it = binding.find(t.var_index());
    return it == binding.end() ? t : it->second;
  }
  std::vector<Term> children;
  children.reserve(t.children().size());
  bool changed = false;
  for (const Term& c : t.children()) {
    children.push_back(substitute(c, binding));
    changed = changed || children.back() != c;
  }
  return changed ? Term::app(t.symbol(), std::move(children)) : t;
}

namespace {

void collect_variables(const Term& t, std::set<int>& out) {
  if (t.is_var()) {
    out.insert(t.var_index());
    return;
  }
  for (const Term& c : t.children()) collect_variables(c, out);
}

}  // namespace

std::set<int> variables(const Term& t) {
  std::set<int> out;
  collect_variables(t, out);
  return out;
}

bool well_formed(const Term& t, const Signature& sig) {
  if (t.is_var()) return true;
  auto i = sig.index_of(t.symbol());
  if (!i || sig.arity(*i) != static_cast<int>(t.children().size())) return false;
  for (const Term& c : t.children())
    if (!well_formed(c, sig)) return false;
  return true;
}

std::vector<Term> terms_up_to_depth(const Signature& sig, int max_depth, int var_count,
                                    std::size_t cap) {
  if (max_depth < 0 || var_count < 1) throw DomainError("terms_up_to_depth: bad bounds");
  std::vector<Term> level;
  for (int i = 1; i <= var_count; ++i) level.push_back(Term::var(i));
  std::vector<Term> all = level;
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<Term> next = all;  // everything of depth < d
    for (std::size_t s = 0; s < sig.size(); ++s) {
      int arity = sig.arity(s);
      // odometer over child tuples drawn from the previous accumulation
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        bool has_new = false;  // at least one child of depth exactly d-1
        for (int j = 0; j < arity; ++j)
          if (all[idx[j]].depth() == d - 1) has_new = true;
        if (has_new) {
          std::vector<Term> children;
          children.reserve(arity);
          for (int j = 0; j < arity; ++j) children.push_back(all[idx[j]]);
          next.push_back(Term::app(sig.name(s), std::move(children)));
          if (next.size() > cap)
            throw BoundsError("term universe exceeds cap of " + std::to_string(cap));
        }
        int k = arity - 1;
        while (k >= 0 && ++idx[k] == all.size()) idx[k--] = 0;
        if (k < 0) break;
      }
    }
    all = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Term& a, const Term& b) {
    if (a.node_count() != b.node_count()) return a.node_count() < b.node_count();
    return format_term(a) < format_term(b);
  });
  return all;
}

Term random_term(std::mt19937_64& rng, const Signature& sig, int max_depth, int var_count) {
  std::uniform_int_distribution<int> var_pick(1, var_count);
  if (max_depth == 0) return Term::var(var_pick(rng));
  // lean toward applications near the root so samples are not mostly leaves
  std::uniform_int_distribution<int> leaf_pick(0, 99);
  if (leaf_pick(rng) < 30) return Term::var(var_pick(rng));
  std::uniform_int_distribution<std::size_t> sym_pick(0, sig.size() - 1);
  std::size_t s = sym_pick(rng);
  std::vector<Term> children;
  for (int j = 0; j < sig.arity(s); ++j)
    children.push_back(random_term(rng, sig, max_depth - 1, var_count));
  return Term::app(sig.name(s), std::move(children));
}

}  // namespace mhyp
