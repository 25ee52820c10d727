#include "mhyp/algebra.hpp"

#include <algorithm>
#include <unordered_set>

namespace mhyp {

namespace {

std::size_t power_checked(int base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > (std::size_t(1) << 40)) throw BoundsError("operation table too large");
    out *= static_cast<std::size_t>(base);
  }
  return out;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(Signature sig, int carrier, std::vector<std::vector<int>> tables)
    : sig_(std::move(sig)), carrier_(carrier), tables_(std::move(tables)) {
  if (carrier_ < 1) throw DomainError("algebra: carrier size must be >= 1");
  if (tables_.size() != sig_.size())
    throw DomainError("algebra: expected one table per symbol");
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    std::size_t expected = power_checked(carrier_, sig_.arity(i));
    if (tables_[i].size() != expected)
      throw DomainError("algebra: table for '" + sig_.name(i) + "' has " +
                        std::to_string(tables_[i].size()) + " entries, expected " +
                        std::to_string(expected));
    for (int v : tables_[i])
      if (v < 0 || v >= carrier_)
        throw DomainError("algebra: table entry " + std::to_string(v) + " out of range for '" +
                          sig_.name(i) + "'");
  }
}

int FiniteAlgebra::apply(std::size_t symbol_index, const std::vector<int>& args) const {
  const auto& table = tables_.at(symbol_index);
  std::size_t idx = 0;
  for (int a : args) {
    if (a < 0 || a >= carrier_) throw DomainError("algebra: element out of range");
    idx = idx * static_cast<std::size_t>(carrier_) + static_cast<std::size_t>(a);
  }
  return table[idx];
}

bool FiniteAlgebra::same_tables(const FiniteAlgebra& other) const {
  return carrier_ == other.carrier_ && sig_ == other.sig_ && tables_ == other.tables_;
}

std::string FiniteAlgebra::table_key() const {
  std::string key = std::to_string(carrier_) + "|";
  for (const auto& table : tables_) {
    for (int v : table) key += std::to_string(v) + ",";
    key += ";";
  }
  return key;
}

namespace {

// assignment as a flat vector indexed by variable (index-1); -1 = unassigned
int eval_fast(const FiniteAlgebra& A, const Term& t, const std::vector<int>& asg) {
  if (t.is_var()) {
    int i = t.var_index();
    if (i > static_cast<int>(asg.size()) || asg[i - 1] < 0)
      throw DomainError("eval: variable x" + std::to_string(i) + " is unassigned");
    return asg[i - 1];
  }
  auto sym = A.signature().index_of(t.symbol());
  if (!sym) throw DomainError("eval: unknown symbol '" + t.symbol() + "'");
  std::size_t idx = 0;
  for (const Term& c : t.children())
    idx = idx * static_cast<std::size_t>(A.carrier()) +
          static_cast<std::size_t>(eval_fast(A, c, asg));
  return A.table(*sym)[idx];
}

}  // namespace

int eval(const FiniteAlgebra& A, const Term& t, const Assignment& assignment) {
  std::vector<int> asg(static_cast<std::size_t>(std::max(1, t.max_var_index())), -1);
  for (const auto& [var, value] : assignment) {
    if (var < 1) throw DomainError("eval: variable index must be positive");
    if (value < 0 || value >= A.carrier()) throw DomainError("eval: element out of range");
    if (var <= static_cast<int>(asg.size())) asg[var - 1] = value;
  }
  return eval_fast(A, t, asg);
}

Satisfaction satisfies(const FiniteAlgebra& A, const Equation& e) {
  std::set<int> vars = variables(e.lhs);
  for (int v : variables(e.rhs)) vars.insert(v);
  std::vector<int> var_list(vars.begin(), vars.end());
  int max_var = var_list.empty() ? 1 : var_list.back();

  std::vector<int> asg(static_cast<std::size_t>(std::max(1, max_var)), -1);
  std::vector<std::size_t> odometer(var_list.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < var_list.size(); ++i)
      asg[var_list[i] - 1] = static_cast<int>(odometer[i]);
    if (eval_fast(A, e.lhs, asg) != eval_fast(A, e.rhs, asg)) {
      Assignment witness;
      for (std::size_t i = 0; i < var_list.size(); ++i)
        witness[var_list[i]] = static_cast<int>(odometer[i]);
      return Satisfaction{false, std::move(witness)};
    }
    // last variable varies fastest
    int k = static_cast<int>(var_list.size()) - 1;
    while (k >= 0 && ++odometer[k] == static_cast<std::size_t>(A.carrier())) odometer[k--] = 0;
    if (k < 0) break;
  }
  return Satisfaction{true, {}};
}

bool satisfies_all(const FiniteAlgebra& A, const std::vector<Equation>& eqs) {
  return std::all_of(eqs.begin(), eqs.end(),
                     [&](const Equation& e) { return satisfies(A, e).holds; });
}

namespace {

std::vector<int> tabulate(const FiniteAlgebra& A, const Term& t, int arity) {
  std::size_t size = 1;
  for (int i = 0; i < arity; ++i) size *= static_cast<std::size_t>(A.carrier());
  std::vector<int> table(size);
  std::vector<int> asg(static_cast<std::size_t>(arity), 0);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t rest = idx;
    for (int i = arity - 1; i >= 0; --i) {
      asg[i] = static_cast<int>(rest % static_cast<std::size_t>(A.carrier()));
      rest /= static_cast<std::size_t>(A.carrier());
    }
    table[idx] = eval_fast(A, t, asg);
  }
  return table;
}

}  // namespace

FiniteAlgebra derived_algebra(const FiniteAlgebra& A, const Hypersubstitution& s) {
  if (s.signature() != A.signature())
    throw DomainError("derived_algebra: signature mismatch");
  std::vector<std::vector<int>> tables;
  for (std::size_t i = 0; i < A.signature().size(); ++i)
    tables.push_back(tabulate(A, s.image(i), A.signature().arity(i)));
  return FiniteAlgebra(A.signature(), A.carrier(), std::move(tables));
}

FiniteAlgebra derived_algebra_mhyp(const FiniteAlgebra& A, const MultiHypersubstitution& rho,
                                   const ColorationRule& rule) {
  const Signature& sig = A.signature();
  if (rho.signature() != sig) throw DomainError("derived_algebra_mhyp: signature mismatch");
  std::vector<std::vector<int>> tables;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    std::vector<Term> vars;
    for (int j = 1; j <= sig.arity(i); ++j) vars.push_back(Term::var(j));
    Term fundamental = Term::app(sig.name(i), std::move(vars));
    tables.push_back(tabulate(A, apply_mhyp(rho, rule, fundamental), sig.arity(i)));
  }
  return FiniteAlgebra(sig, A.carrier(), std::move(tables));
}

CloneResult clone_upto(const FiniteAlgebra& A, int arity, std::size_t max_ops) {
  if (arity < 1) throw DomainError("clone_upto: arity must be >= 1");
  if (max_ops < static_cast<std::size_t>(arity))
    throw DomainError("clone_upto: bound must cover the projections");

  std::size_t size = 1;
  for (int i = 0; i < arity; ++i) size *= static_cast<std::size_t>(A.carrier());

  CloneResult result;
  std::unordered_set<std::string> seen;
  auto key_of = [](const std::vector<int>& table) {
    std::string key;
    key.reserve(table.size());
    for (int v : table) key += static_cast<char>('0' + v);
    return key;
  };
  auto add = [&](std::vector<int> table, Term witness) {
    if (!seen.insert(key_of(table)).second) return false;
    result.ops.push_back(TermOperation{arity, std::move(table), std::move(witness)});
    return true;
  };

  for (int p = 0; p < arity; ++p) {
    std::vector<int> table(size);
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::size_t rest = idx;
      int value = 0;
      for (int i = arity - 1; i >= 0; --i) {
        int digit = static_cast<int>(rest % static_cast<std::size_t>(A.carrier()));
        rest /= static_cast<std::size_t>(A.carrier());
        if (i == p) value = digit;
      }
      table[idx] = value;
    }
    add(std::move(table), Term::var(p + 1));
  }

  const Signature& sig = A.signature();
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t snapshot = result.ops.size();
    for (std::size_t s = 0; s < sig.size(); ++s) {
      int n = sig.arity(s);
      std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
      while (true) {
        std::vector<int> table(size);
        for (std::size_t idx = 0; idx < size; ++idx) {
          std::vector<int> args(static_cast<std::size_t>(n));
          for (int j = 0; j < n; ++j) args[j] = result.ops[pick[j]].table[idx];
          table[idx] = A.apply(s, args);
        }
        std::vector<Term> children;
        for (int j = 0; j < n; ++j) children.push_back(result.ops[pick[j]].witness);
        if (add(std::move(table), Term::app(sig.name(s), std::move(children)))) {
          grew = true;
          if (result.ops.size() > max_ops) return result;  // incomplete
        }
        int k = n - 1;
        while (k >= 0 && ++pick[k] == snapshot) pick[k--] = 0;
        if (k < 0) break;
      }
    }
  }
  result.complete = true;
  return result;
}

HyperSat hypersatisfies_pool(const FiniteAlgebra& A, const Equation& e, const HypPool& pool) {
  for (const Hypersubstitution& s : pool.members) {
    Equation image = apply_hyp(s, e);
    Satisfaction sat = satisfies(A, image);
    if (!sat.holds)
      return HyperSat{false, false, s, image, std::move(sat.witness)};
  }
  return HyperSat{true, false, std::nullopt, std::nullopt, {}};
}

HyperSat hypersatisfies_clone(const FiniteAlgebra& A, const Equation& e,
                              std::size_t clone_bound) {
  const Signature& sig = A.signature();
  bool complete = true;
  std::vector<CloneResult> clones;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    clones.push_back(clone_upto(A, sig.arity(i), clone_bound));
    complete = complete && clones.back().complete;
  }
  std::vector<std::size_t> pick(sig.size(), 0);
  while (true) {
    std::vector<Term> images;
    std::vector<std::vector<int>> tables;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      images.push_back(clones[i].ops[pick[i]].witness);
      tables.push_back(clones[i].ops[pick[i]].table);
    }
    Hypersubstitution sigma(sig, std::move(images));
    FiniteAlgebra derived(sig, A.carrier(), std::move(tables));
    Satisfaction sat = satisfies(derived, e);
    if (!sat.holds)
      return HyperSat{false, complete, sigma, apply_hyp(sigma, e), std::move(sat.witness)};
    int k = static_cast<int>(sig.size()) - 1;
    while (k >= 0 && ++pick[k] == clones[k].ops.size()) pick[k--] = 0;
    if (k < 0) break;
  }
  return HyperSat{true, complete, std::nullopt, std::nullopt, {}};
}

FiniteAlgebra builtin_algebra(const std::string& name) {
  Signature sig = Signature::binary();
  if (name == "left-zero") return FiniteAlgebra(sig, 2, {{0, 0, 1, 1}});
  if (name == "right-zero") return FiniteAlgebra(sig, 2, {{0, 1, 0, 1}});
  if (name == "semilattice") return FiniteAlgebra(sig, 2, {{0, 0, 0, 1}});
  if (name == "zero") return FiniteAlgebra(sig, 2, {{0, 0, 0, 0}});
  if (name == "trivial") return FiniteAlgebra(sig, 1, {{0}});
  if (name == "rect-band") {
    // elements 2a+b of the product of left-zero and right-zero: f(e1,e2)=(a1,b2)
    std::vector<int> table(16);
    for (int e1 = 0; e1 < 4; ++e1)
      for (int e2 = 0; e2 < 4; ++e2) table[e1 * 4 + e2] = (e1 / 2) * 2 + (e2 % 2);
    return FiniteAlgebra(sig, 4, {table});
  }
  throw DomainError("unknown builtin algebra '" + name + "'");
}

std::vector<std::string> builtin_algebra_names() {
  return {"left-zero", "right-zero", "semilattice", "zero", "rect-band", "trivial"};
}

}  // namespace mhyp
