#pragma once

#include <string>
#include <vector>

#include "mhyp/term.hpp"

namespace mhyp {

/// A map sending each n-ary operation symbol to a term over x1..xn.
class Hypersubstitution {
 public:
  Hypersubstitution(Signature sig, std::vector<Term> images);

  static Hypersubstitution identity(const Signature& sig);

  const Signature& signature() const { return sig_; }
  const Term& image(std::size_t symbol_index) const { return images_.at(symbol_index); }
  const Term& image(const std::string& symbol) const;

  /// Per-symbol structural equality of image terms; extensional equality on
  /// all terms follows from equality on the generators.
  bool operator==(const Hypersubstitution& other) const;
  bool operator!=(const Hypersubstitution& other) const { return !(*this == other); }
  bool operator<(const Hypersubstitution& other) const;

  std::string describe() const;  // "f -> f(x2,x1)" joined with "; "

 private:
  Signature sig_;
  std::vector<Term> images_;
};

/// The unique extension to all terms: variables fixed, applications replaced
/// by the symbol's image with recursively transformed children substituted in.
Term apply_hyp(const Hypersubstitution& s, const Term& t);

Equation apply_hyp(const Hypersubstitution& s, const Equation& e);

/// Composition: the result maps each symbol f to apply_hyp(s1, s2(f)).
Hypersubstitution compose_hyp(const Hypersubstitution& s1, const Hypersubstitution& s2);

/// Named elements: "id", "swap" (binary symbols only, f -> f(x2,x1)),
/// "proj-first" (f -> x1), "proj-last" (f -> x_n).
Hypersubstitution named_hyp(const std::string& name, const Signature& sig);

/// A finite ordered set of hypersubstitutions, standing in wherever the
/// infinite monoid is quantified over. Results computed against a pool are
/// pool-relative: counterexamples are genuine, absences are evidence only.
struct HypPool {
  std::vector<Hypersubstitution> members;
  std::vector<std::string> names;  // parallel to members

  std::size_t size() const { return members.size(); }
  void add(std::string name, Hypersubstitution h);
  const std::string& name_of(std::size_t i) const { return names.at(i); }

  bool contains_identity() const;
  std::optional<std::size_t> index_of_identity() const;
  bool closed_under_composition() const;

  std::string describe() const;
};

/// Every hypersubstitution whose image terms have depth <= max_depth, in a
/// deterministic order (per-symbol images sorted by formatted text, then the
/// cartesian product in odometer order). Throws BoundsError past max_size.
HypPool enumerate_hyps(const Signature& sig, int max_depth, std::size_t max_size = 20000);

}  // namespace mhyp
