#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mhyp/algebra.hpp"
#include "mhyp/coloration.hpp"
#include "mhyp/hypersubstitution.hpp"
#include "mhyp/term.hpp"

namespace mhyp {

/// A finite, deterministic stand-in for the set of all terms: either the full
/// enumeration up to a depth (capped) or a seeded sample within that depth.
struct TermUniverse {
  Signature sig;
  int max_depth = 2;
  int variable_count = 3;
  std::size_t max_terms = 20000;

  struct Sample {
    std::size_t count = 0;
    std::uint64_t seed = 0;
  };
  std::optional<Sample> sample;

  std::vector<Term> terms() const;
  std::string describe() const;
};

using EquationSet = std::set<Equation>;

EquationSet parse_equations(const std::vector<std::string>& lines, const Signature& sig);
std::vector<std::string> format_equations(const EquationSet& s);

/// A named list of finite algebras over one signature.
struct AlgebraCatalog {
  std::vector<std::pair<std::string, FiniteAlgebra>> members;

  void add(std::string name, FiniteAlgebra a);
  std::size_t size() const { return members.size(); }
  bool contains_tables(const FiniteAlgebra& a) const;
  std::vector<std::string> names() const;
};

/// The five default models over {f/2} used by the bundled scenarios:
/// left-zero, right-zero, semilattice, zero, rect-band.
AlgebraCatalog standard_catalog();

/// Named equation bases over {f/2}: rb, vhs, band, nb, regb, sl.
EquationSet variety_basis(const std::string& name);
std::vector<std::string> variety_basis_names();

/// All pairs (s, t) from the universe (both orientations, reflexive pairs
/// included) that hold in every member of the catalog.
EquationSet id_bounded(const AlgebraCatalog& K, const TermUniverse& U);

/// The members of the catalog satisfying every equation of the set.
AlgebraCatalog mod_catalog(const EquationSet& S, const AlgebraCatalog& K);

/// Transformed identities over every hypersubstitution of the pool.
EquationSet chi_E_M(const EquationSet& S, const HypPool& M);

struct ChiProvenance {
  Equation parent;
  MultiHypersubstitution rho;
};

struct ChiResult {
  EquationSet eqs;
  std::map<Equation, ChiProvenance> provenance;  // absent for carried-over seeds
};

/// The one-step colored closure, pool-relative: for each equation, the
/// multi-hypersubstitutions range over every map from the colors occurring in
/// its two terms into the pool. That is exhaustive relative to the pool since
/// the extension only ever reads the occurring colors. Throws BoundsError when
/// the per-equation map count exceeds `map_cap`.
ChiResult chi_e_C(const EquationSet& S, const HypPool& pool, const ColorationRule& rule,
                  std::size_t map_cap = 1000000);

struct ChiIterateResult {
  EquationSet eqs;  // accumulated union, seeds included
  bool fixpoint = false;
  int rounds_run = 0;
  std::map<Equation, ChiProvenance> provenance;
};

ChiIterateResult chi_E_C_iterate(const EquationSet& S, const HypPool& pool,
                                 const ColorationRule& rule, int max_rounds,
                                 std::size_t map_cap = 1000000, std::size_t eq_cap = 500000);

/// Catalogs of derived algebras, deduplicated by table equality.
AlgebraCatalog chi_A_M(const AlgebraCatalog& K, const HypPool& M);

/// Multi-hypersubstitution version; the maps range over the colors of the
/// fundamental terms, which are the only colors a derived algebra reads.
AlgebraCatalog chi_A_C(const AlgebraCatalog& K, const HypPool& pool, const ColorationRule& rule,
                       std::size_t map_cap = 1000000);

/// Members whose identities absorb the iterated colored closure of S.
/// Computed both directly (per-equation closures) and as
/// mod_catalog(chi_E_C_iterate(S, ...), K); the two routes are compared and a
/// mismatch raises logic_error.
AlgebraCatalog c_mod(const EquationSet& S, const AlgebraCatalog& K, const HypPool& pool,
                     const ColorationRule& rule, int rounds, std::size_t map_cap = 1000000,
                     std::size_t eq_cap = 500000);

/// Pairs from the universe whose iterated colored closure lies inside the
/// identities of every member. Closure terms may leave the universe; they are
/// still checked by satisfaction.
EquationSet c_id(const AlgebraCatalog& K, const TermUniverse& U, const HypPool& pool,
                 const ColorationRule& rule, int rounds, std::size_t map_cap = 1000000,
                 std::size_t eq_cap = 500000);

struct SolidityReport {
  enum class Verdict { NoViolationWithinBounds, Violated };
  Verdict verdict = Verdict::NoViolationWithinBounds;

  // violation payload: the transformation applied, the equation it was applied
  // to, the transformed equation that failed, and the failing assignment
  std::optional<Hypersubstitution> sigma;
  std::optional<MultiHypersubstitution> rho;
  std::optional<Equation> source;
  std::optional<Equation> failed;
  Assignment witness;

  // bounds the verdict is relative to
  std::string pool_desc;
  std::string universe_desc;
  std::string rule_desc;
  int rounds = 0;

  bool violated() const { return verdict == Verdict::Violated; }
  void print(std::ostream& out) const;  // key/value lines, machine-parseable
};

/// Bounded hyperidentity audit of a model against a base: every pool member is
/// applied to the base (and, unless basis_only, to the model's identities over
/// the universe), and each image is checked on the model. The base must hold in
/// the model to begin with.
SolidityReport is_M_solid_bounded(const EquationSet& base, const FiniteAlgebra& A,
                                  const HypPool& M, const TermUniverse& U,
                                  bool basis_only = false);

/// Bounded colored-solidity audit: the model's identities over the universe
/// are closed under the colored closure and every closure equation is checked
/// on the model. Violations are sound (they replay on the model); absence of a
/// violation is evidence relative to the printed bounds only.
SolidityReport is_C_colored_solid_bounded(const EquationSet& base, const FiniteAlgebra& A,
                                          const ColorationRule& rule, const HypPool& pool,
                                          const TermUniverse& U, int rounds,
                                          std::size_t map_cap = 1000000,
                                          std::size_t eq_cap = 500000);

}  // namespace mhyp
