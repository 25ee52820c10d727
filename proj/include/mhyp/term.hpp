#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mhyp {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// Violated preconditions and malformed inputs outside of text parsing.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configurable resource cap was exceeded (pool size, universe size, map blowup).
struct BoundsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An ordered list of operation symbols with fixed arities >= 1.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<std::pair<std::string, int>> symbols);
  Signature(std::initializer_list<std::pair<std::string, int>> symbols)
      : Signature(std::vector<std::pair<std::string, int>>(symbols)) {}

  /// The single binary symbol `f`, the signature of almost every worked example.
  static Signature binary(const std::string& name = "f");

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(std::size_t i) const { return symbols_.at(i).first; }
  int arity(std::size_t i) const { return symbols_.at(i).second; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  int arity_of(const std::string& name) const;  // throws DomainError on unknown symbol
  bool contains(const std::string& name) const { return index_of(name).has_value(); }

  bool operator==(const Signature& other) const { return symbols_ == other.symbols_; }
  bool operator!=(const Signature& other) const { return !(*this == other); }

  std::string describe() const;  // "f/2,g/3"

 private:
  std::vector<std::pair<std::string, int>> symbols_;
};

/// An immutable term tree: a variable x_i (i >= 1) or an application of an
/// operation symbol to child terms. Copies are cheap (shared nodes).
class Term {
 public:
  static Term var(int index);
  static Term app(std::string symbol, std::vector<Term> children);

  bool is_var() const { return node_->var != 0; }
  int var_index() const;                      // pre: is_var()
  const std::string& symbol() const;          // pre: !is_var()
  const std::vector<Term>& children() const;  // pre: !is_var()

  int depth() const { return node_->depth; }  // variables have depth 0
  std::size_t node_count() const { return node_->nodes; }
  int max_var_index() const { return node_->max_var; }
  std::size_t hash() const { return node_->hash; }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  bool operator<(const Term& other) const;  // structural order: vars by index, then apps

 private:
  struct Node {
    int var = 0;  // 0 = application
    std::string symbol;
    std::vector<Term> children;
    int depth = 0;
    std::size_t nodes = 1;
    int max_var = 0;
    std::size_t hash = 0;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

int compare(const Term& a, const Term& b);

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// A Dewey position: a sequence of 1-based child indices, empty = root.
struct Address {
  std::vector<int> path;

  Address() = default;
  Address(std::initializer_list<int> p) : path(p) {}
  explicit Address(std::vector<int> p) : path(std::move(p)) {}

  bool is_root() const { return path.empty(); }
  Address child(int i) const;
  std::string str() const;  // "ε" for the root, else "1.2"

  bool operator==(const Address& other) const { return path == other.path; }
  bool operator!=(const Address& other) const { return path != other.path; }
  bool operator<(const Address& other) const { return path < other.path; }
};

struct Equation {
  Term lhs;
  Term rhs;

  bool operator==(const Equation& other) const { return lhs == other.lhs && rhs == other.rhs; }
  bool operator!=(const Equation& other) const { return !(*this == other); }
  bool operator<(const Equation& other) const;
};

/// Session-scoped variable naming: named variables (y, z, ...) are aliased to
/// x1, x2, ... in order of first appearance; explicit x<i> always means index i.
/// Sharing one VarNames across several parse calls keeps names consistent, which
/// is how multi-term scenarios are set up.
class VarNames {
 public:
  int index_for(const std::string& name);
  void note_explicit(int index) { used_.insert(index); }
  std::string display(int index) const;  // alias if known, else "x<i>"
  bool has_alias(int index) const { return by_index_.count(index) != 0; }

 private:
  std::map<std::string, int> by_name_;
  std::map<int, std::string> by_index_;
  std::set<int> used_;
};

// Parsing and printing. Grammar: term := var | name "(" term ("," term)* ")";
// var := "x" digits | letter-name; whitespace insignificant.
Term parse_term(const std::string& text, const Signature& sig, VarNames& names);
Term parse_term(const std::string& text, const Signature& sig);
std::string format_term(const Term& t);
std::string format_term(const Term& t, const VarNames& names);

Equation parse_equation(const std::string& text, const Signature& sig, VarNames& names);
std::string format_equation(const Equation& e);
std::string format_equation(const Equation& e, const VarNames& names);

/// All addresses of operation-symbol occurrences, in preorder. Variables
/// contribute none, so a variable term has an empty address set.
std::vector<Address> addresses(const Term& t);

/// Does the path land on an application node?
bool valid_address(const Term& t, const Address& a);

/// The subtree rooted at `a`. Unlike addresses(), this accepts paths landing on
/// variable leaves as well. Throws DomainError if the path leaves the tree.
Term subterm_at(const Term& t, const Address& a);

int first_variable(const Term& t);  // leftmost variable in the written form
int last_variable(const Term& t);   // rightmost variable in the written form

/// Simultaneous replacement of variables; unbound variables stay fixed.
Term substitute(const Term& t, const std::map<int, Term>& binding);

std::set<int> variables(const Term& t);

/// Arities check out against the signature at every application node.
bool well_formed(const Term& t, const Signature& sig);

/// All terms over x1..x<var_count> with depth <= max_depth, sorted by
/// (node count, formatted text). Throws BoundsError past `cap`.
std::vector<Term> terms_up_to_depth(const Signature& sig, int max_depth, int var_count,
                                    std::size_t cap = 200000);

Term random_term(std::mt19937_64& rng, const Signature& sig, int max_depth, int var_count);

}  // namespace mhyp
