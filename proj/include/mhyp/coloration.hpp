#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "mhyp/hypersubstitution.hpp"
#include "mhyp/term.hpp"

namespace mhyp {

using Color = std::uint64_t;

/// A total computable assignment of a color to every operation-symbol address
/// of every non-variable term. Rules are immutable values; `spec()` is the
/// round-trippable text form used on the command line.
class ColorationRule {
 public:
  /// The color at address `a` of term `t`. Throws DomainError unless `a`
  /// lands on an application node of `t`.
  Color color(const Term& t, const Address& a) const;

  const std::string& spec() const;

  static ColorationRule uniform(Color c);
  /// Color 1 when the first and last variable of the term agree, else 2.
  static ColorationRule rb_first_last();
  /// c_in on the designated term, c_out on every other term.
  static ColorationRule singleton(Term s0, Color c_in, Color c_out);
  /// On s0 the first address in preorder gets c_root and the rest c_rest;
  /// every other term is colored c_other throughout.
  static ColorationRule leftmost_special(Term s0, Color c_root, Color c_rest, Color c_other);
  /// Every address of t is colored by the rank of t itself under a fixed
  /// bijection between terms and the naturals (see term_rank).
  static ColorationRule enumeration(Signature sig);
  /// Terms using exactly one variable are colored by `inner`; the rest get 1.
  static ColorationRule one_variable_split(ColorationRule inner);
  static ColorationRule term_equals(Term t0, Color c_eq, Color c_ne);
  /// Color 0 on the two designated nested terms built from `k_symbol`,
  /// color 1 everywhere else (in particular on the fundamental term).
  static ColorationRule prop63(const Signature& sig, const std::string& k_symbol);
  /// Explicit per-(term, address) table with a mandatory default.
  static ColorationRule finite_table(std::map<std::pair<Term, Address>, Color> table,
                                     Color fallback);

  /// CLI spec strings: uniform:<c>, rb-firstlast, singleton:<term>:<c_in>:<c_out>,
  /// leftmost-special:<term>:<c_root>:<c_rest>:<c_other>, enumeration,
  /// one-var-split:<inner>, term-equals:<term>:<c_eq>:<c_ne>, prop63:<k-symbol>.
  static ColorationRule parse(const std::string& spec, const Signature& sig, VarNames& names);
  static ColorationRule parse(const std::string& spec, const Signature& sig);

  struct Impl;
  explicit ColorationRule(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const Impl> impl_;
};

/// A total map from colors to hypersubstitutions with finite support:
/// an explicit table over finitely many colors plus a default.
class MultiHypersubstitution {
 public:
  explicit MultiHypersubstitution(Hypersubstitution fallback,
                                  std::map<Color, Hypersubstitution> table = {});

  static MultiHypersubstitution constant(Hypersubstitution h);

  const Hypersubstitution& at(Color c) const;
  const Hypersubstitution& fallback() const { return fallback_; }
  const std::map<Color, Hypersubstitution>& table() const { return table_; }
  const Signature& signature() const { return fallback_.signature(); }

  std::string describe() const;  // "default: <...>; 0: <...>"

 private:
  Hypersubstitution fallback_;
  std::map<Color, Hypersubstitution> table_;
};

/// The extension of a multi-hypersubstitution to a colored term: variables are
/// fixed; each application node, colored at its address in the ORIGINAL term,
/// is rewritten by the hypersubstitution its color selects, with recursively
/// transformed children substituted in. The recursion carries address prefixes
/// of the input term, never addresses of intermediate results.
Term apply_mhyp(const MultiHypersubstitution& rho, const ColorationRule& rule, const Term& t);

Equation apply_mhyp(const MultiHypersubstitution& rho, const ColorationRule& rule,
                    const Equation& e);

/// Some(n) when every address of t has color n; None for variable terms
/// (they have no addresses) and for mixed colorings. When this returns n,
/// apply_mhyp agrees with apply_hyp(rho.at(n), t); that equivalence is kept
/// out of apply_mhyp itself so the two routes stay independently testable.
std::optional<Color> uniform_color(const ColorationRule& rule, const Term& t);

/// A bijection between terms over the signature (with variables x1, x2, ...)
/// and the naturals: alternatives (variable | each symbol) are interleaved by
/// residue, payloads packed with the Cantor pairing function. Throws
/// BoundsError if the rank overflows 64 bits.
std::uint64_t term_rank(const Term& t, const Signature& sig);

}  // namespace mhyp
