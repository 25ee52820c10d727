#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhyp/coloration.hpp"
#include "mhyp/hypersubstitution.hpp"
#include "mhyp/term.hpp"

namespace mhyp {

/// A finite algebra: carrier {0..k-1} with one dense operation table per
/// symbol, row-major with the last argument varying fastest.
class FiniteAlgebra {
 public:
  FiniteAlgebra(Signature sig, int carrier, std::vector<std::vector<int>> tables);

  int carrier() const { return carrier_; }
  const Signature& signature() const { return sig_; }
  const std::vector<int>& table(std::size_t symbol_index) const { return tables_.at(symbol_index); }
  int apply(std::size_t symbol_index, const std::vector<int>& args) const;

  bool same_tables(const FiniteAlgebra& other) const;
  std::string table_key() const;  // dedup key: carrier + flattened tables

 private:
  Signature sig_;
  int carrier_;
  std::vector<std::vector<int>> tables_;
};

using Assignment = std::map<int, int>;  // variable index -> carrier element

/// Inductive evaluation over the tables. Throws DomainError on an unassigned
/// variable or an element out of range.
int eval(const FiniteAlgebra& A, const Term& t, const Assignment& assignment);

struct Satisfaction {
  bool holds = false;
  Assignment witness;  // a failing assignment when !holds

  explicit operator bool() const { return holds; }
};

/// Does the identity hold under every assignment to its variables? On failure
/// the first counter-assignment in lexicographic order is returned.
Satisfaction satisfies(const FiniteAlgebra& A, const Equation& e);

bool satisfies_all(const FiniteAlgebra& A, const std::vector<Equation>& eqs);

/// Same carrier, each symbol reinterpreted as the term operation of its image.
FiniteAlgebra derived_algebra(const FiniteAlgebra& A, const Hypersubstitution& s);

/// Each fundamental term f(x1..xn) is transformed by the multi-hypersubstitution
/// under the rule, then tabulated.
FiniteAlgebra derived_algebra_mhyp(const FiniteAlgebra& A, const MultiHypersubstitution& rho,
                                   const ColorationRule& rule);

struct TermOperation {
  int arity = 0;
  std::vector<int> table;
  Term witness = Term::var(1);  // a term inducing this table
};

struct CloneResult {
  std::vector<TermOperation> ops;
  bool complete = false;  // reached the composition fixpoint within the bound
};

/// BFS closure of the m-ary term operations: start from the projections,
/// repeatedly compose the basic operations with everything found. Each result
/// carries the first (hence shortest) witness term discovered for its table.
/// When `max_ops` is hit the partial set is returned flagged incomplete.
CloneResult clone_upto(const FiniteAlgebra& A, int arity, std::size_t max_ops);

struct HyperSat {
  bool holds = false;
  bool complete = false;  // clone-complete result; pool results are pool-relative
  std::optional<Hypersubstitution> counterexample;
  std::optional<Equation> failed;  // the transformed identity that broke
  Assignment witness;

  explicit operator bool() const { return holds; }
};

/// Check every transformed identity over the pool.
HyperSat hypersatisfies_pool(const FiniteAlgebra& A, const Equation& e, const HypPool& pool);

/// Decide hypersatisfaction by ranging each symbol over the m-ary clone of A;
/// complete exactly when every clone enumeration reached its fixpoint.
HyperSat hypersatisfies_clone(const FiniteAlgebra& A, const Equation& e, std::size_t clone_bound);

// Stock models over the binary signature {f/2}, used throughout the test
// scenarios: left-zero, right-zero, semilattice (min), zero (constant 0),
// rect-band (the 4-element product of left-zero and right-zero), trivial.
FiniteAlgebra builtin_algebra(const std::string& name);
std::vector<std::string> builtin_algebra_names();

}  // namespace mhyp
