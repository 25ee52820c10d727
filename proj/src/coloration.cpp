#include "mhyp/coloration.hpp"

#include <limits>
#include <vector>

namespace mhyp {

struct ColorationRule::Impl {
  std::string spec;
  virtual ~Impl() = default;
  virtual Color color_at(const Term& t, const Address& a) const = 0;
};

Color ColorationRule::color(const Term& t, const Address& a) const {
  if (!valid_address(t, a))
    throw DomainError("coloration: " + a.str() + " is not an operation-symbol address of " +
                      format_term(t));
  return impl_->color_at(t, a);
}

const std::string& ColorationRule::spec() const { return impl_->spec; }

namespace {

struct UniformRule final : ColorationRule::Impl {
  Color c;
  Color color_at(const Term&, const Address&) const override { return c; }
};

struct RbFirstLastRule final : ColorationRule::Impl {
  Color color_at(const Term& t, const Address&) const override {
    return first_variable(t) == last_variable(t) ? 1 : 2;
  }
};

struct SingletonRule final : ColorationRule::Impl {
  Term s0 = Term::var(1);
  Color c_in = 0, c_out = 0;
  Color color_at(const Term& t, const Address&) const override {
    return t == s0 ? c_in : c_out;
  }
};

struct LeftmostSpecialRule final : ColorationRule::Impl {
  Term s0 = Term::var(1);
  Color c_root = 0, c_rest = 0, c_other = 0;
  Color color_at(const Term& t, const Address& a) const override {
    if (t != s0) return c_other;
    // preorder-minimal operation-symbol occurrence of a non-variable term is the root
    return a.is_root() ? c_root : c_rest;
  }
};

struct EnumerationRule final : ColorationRule::Impl {
  Signature sig;
  Color color_at(const Term& t, const Address&) const override { return term_rank(t, sig); }
};

struct OneVariableSplitRule final : ColorationRule::Impl {
  std::shared_ptr<const ColorationRule::Impl> inner;
  Color color_at(const Term& t, const Address& a) const override {
    return variables(t).size() == 1 ? inner->color_at(t, a) : 1;
  }
};

struct TermEqualsRule final : ColorationRule::Impl {
  Term t0 = Term::var(1);
  Color c_eq = 0, c_ne = 0;
  Color color_at(const Term& t, const Address&) const override {
    return t == t0 ? c_eq : c_ne;
  }
};

struct Prop63Rule final : ColorationRule::Impl {
  Term s = Term::var(1), t = Term::var(1);
  Color color_at(const Term& term, const Address&) const override {
    return (term == s || term == t) ? 0 : 1;
  }
};

struct FiniteTableRule final : ColorationRule::Impl {
  std::map<std::pair<Term, Address>, Color> table;
  Color fallback = 0;
  Color color_at(const Term& t, const Address& a) const override {
    auto it = table.find({t, a});
    return it == table.end() ? fallback : it->second;
  }
};

template <typename R>
ColorationRule make_rule(std::shared_ptr<R> impl, std::string spec) {
  impl->spec = std::move(spec);
  return ColorationRule(std::move(impl));
}

}  // namespace

ColorationRule ColorationRule::uniform(Color c) {
  auto impl = std::make_shared<UniformRule>();
  impl->c = c;
  return make_rule(impl, "uniform:" + std::to_string(c));
}

ColorationRule ColorationRule::rb_first_last() {
  return make_rule(std::make_shared<RbFirstLastRule>(), "rb-firstlast");
}

ColorationRule ColorationRule::singleton(Term s0, Color c_in, Color c_out) {
  auto impl = std::make_shared<SingletonRule>();
  impl->s0 = s0;
  impl->c_in = c_in;
  impl->c_out = c_out;
  return make_rule(impl, "singleton:" + format_term(s0) + ":" + std::to_string(c_in) + ":" +
                             std::to_string(c_out));
}

ColorationRule ColorationRule::leftmost_special(Term s0, Color c_root, Color c_rest,
                                                Color c_other) {
  auto impl = std::make_shared<LeftmostSpecialRule>();
  impl->s0 = s0;
  impl->c_root = c_root;
  impl->c_rest = c_rest;
  impl->c_other = c_other;
  return make_rule(impl, "leftmost-special:" + format_term(s0) + ":" + std::to_string(c_root) +
                             ":" + std::to_string(c_rest) + ":" + std::to_string(c_other));
}

ColorationRule ColorationRule::enumeration(Signature sig) {
  auto impl = std::make_shared<EnumerationRule>();
  impl->sig = std::move(sig);
  return make_rule(impl, "enumeration");
}

ColorationRule ColorationRule::one_variable_split(ColorationRule inner) {
  auto impl = std::make_shared<OneVariableSplitRule>();
  std::string inner_spec = inner.spec();
  impl->inner = inner.impl_;
  return make_rule(impl, "one-var-split:" + inner_spec);
}

ColorationRule ColorationRule::term_equals(Term t0, Color c_eq, Color c_ne) {
  auto impl = std::make_shared<TermEqualsRule>();
  impl->t0 = t0;
  impl->c_eq = c_eq;
  impl->c_ne = c_ne;
  return make_rule(impl, "term-equals:" + format_term(t0) + ":" + std::to_string(c_eq) + ":" +
                             std::to_string(c_ne));
}

ColorationRule ColorationRule::prop63(const Signature& sig, const std::string& k_symbol) {
  auto k = sig.index_of(k_symbol);
  if (!k) throw DomainError("prop63: unknown symbol '" + k_symbol + "'");
  int n = sig.arity(*k);
  if (n < 2) throw DomainError("prop63: symbol '" + k_symbol + "' must be at least binary");
  std::vector<Term> ones(static_cast<std::size_t>(n), Term::var(1));
  Term inner = Term::app(k_symbol, ones);
  std::vector<Term> s_children{inner}, t_children{inner};
  for (int j = 1; j < n; ++j) {
    s_children.push_back(Term::var(2));
    t_children.push_back(Term::var(1));
  }
  auto impl = std::make_shared<Prop63Rule>();
  impl->s = Term::app(k_symbol, std::move(s_children));
  impl->t = Term::app(k_symbol, std::move(t_children));
  return make_rule(impl, "prop63:" + k_symbol);
}

ColorationRule ColorationRule::finite_table(std::map<std::pair<Term, Address>, Color> table,
                                            Color fallback) {
  auto impl = std::make_shared<FiniteTableRule>();
  impl->table = std::move(table);
  impl->fallback = fallback;
  return make_rule(impl, "finite-table:default:" + std::to_string(fallback));
}

namespace {

std::vector<std::string> split_fields(const std::string& s, std::size_t max_fields) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (out.size() + 1 < max_fields) {
    auto colon = s.find(':', start);
    if (colon == std::string::npos) break;
    out.push_back(s.substr(start, colon - start));
    start = colon + 1;
  }
  out.push_back(s.substr(start));
  return out;
}

Color parse_color(const std::string& s) {
  try {
    return static_cast<Color>(std::stoull(s));
  } catch (const std::exception&) {
    throw DomainError("coloration spec: '" + s + "' is not a color");
  }
}

}  // namespace

ColorationRule ColorationRule::parse(const std::string& spec, const Signature& sig,
                                     VarNames& names) {
  if (spec == "rb-firstlast") return rb_first_last();
  if (spec == "enumeration") return enumeration(sig);
  if (spec.rfind("uniform:", 0) == 0) return uniform(parse_color(spec.substr(8)));
  if (spec.rfind("singleton:", 0) == 0) {
    auto f = split_fields(spec.substr(10), 3);
    if (f.size() != 3) throw DomainError("coloration spec: singleton:<term>:<c_in>:<c_out>");
    return singleton(parse_term(f[0], sig, names), parse_color(f[1]), parse_color(f[2]));
  }
  if (spec.rfind("leftmost-special:", 0) == 0) {
    auto f = split_fields(spec.substr(17), 4);
    if (f.size() != 4)
      throw DomainError("coloration spec: leftmost-special:<term>:<c_root>:<c_rest>:<c_other>");
    return leftmost_special(parse_term(f[0], sig, names), parse_color(f[1]), parse_color(f[2]),
                            parse_color(f[3]));
  }
  if (spec.rfind("one-var-split:", 0) == 0)
    return one_variable_split(parse(spec.substr(14), sig, names));
  if (spec.rfind("term-equals:", 0) == 0) {
    auto f = split_fields(spec.substr(12), 3);
    if (f.size() != 3) throw DomainError("coloration spec: term-equals:<term>:<c_eq>:<c_ne>");
    return term_equals(parse_term(f[0], sig, names), parse_color(f[1]), parse_color(f[2]));
  }
  if (spec.rfind("prop63:", 0) == 0) return prop63(sig, spec.substr(7));
  throw DomainError("unknown coloration spec '" + spec + "'");
}

ColorationRule ColorationRule::parse(const std::string& spec, const Signature& sig) {
  VarNames names;
  return parse(spec, sig, names);
}

MultiHypersubstitution::MultiHypersubstitution(Hypersubstitution fallback,
                                               std::map<Color, Hypersubstitution> table)
    : fallback_(std::move(fallback)), table_(std::move(table)) {
  for (const auto& [c, h] : table_)
    if (h.signature() != fallback_.signature())
      throw DomainError("multi-hypersubstitution: signature mismatch at color " +
                        std::to_string(c));
}

MultiHypersubstitution MultiHypersubstitution::constant(Hypersubstitution h) {
  return MultiHypersubstitution(std::move(h));
}

const Hypersubstitution& MultiHypersubstitution::at(Color c) const {
  auto it = table_.find(c);
  return it == table_.end() ? fallback_ : it->second;
}

std::string MultiHypersubstitution::describe() const {
  std::string out = "default: " + fallback_.describe();
  for (const auto& [c, h] : table_) out += "; " + std::to_string(c) + ": " + h.describe();
  return out;
}

namespace {

Term apply_mhyp_at(const MultiHypersubstitution& rho, const ColorationRule& rule,
                   const Term& whole, const Term& sub, Address& prefix) {
  if (sub.is_var()) return sub;
  Color c = rule.color(whole, prefix);
  const Hypersubstitution& h = rho.at(c);
  std::map<int, Term> binding;
  const auto& children = sub.children();
  for (std::size_t i = 0; i < children.size(); ++i) {
    prefix.path.push_back(static_cast<int>(i) + 1);
    binding.emplace(static_cast<int>(i) + 1, apply_mhyp_at(rho, rule, whole, children[i], prefix));
    prefix.path.pop_back();
  }
  return substitute(h.image(sub.symbol()), binding);
}

}  // namespace

Term apply_mhyp(const MultiHypersubstitution& rho, const ColorationRule& rule, const Term& t) {
  Address prefix;
  return apply_mhyp_at(rho, rule, t, t, prefix);
}

Equation apply_mhyp(const MultiHypersubstitution& rho, const ColorationRule& rule,
                    const Equation& e) {
  return Equation{apply_mhyp(rho, rule, e.lhs), apply_mhyp(rho, rule, e.rhs)};
}

std::optional<Color> uniform_color(const ColorationRule& rule, const Term& t) {
  if (t.is_var()) return std::nullopt;
  std::optional<Color> found;
  for (const Address& a : addresses(t)) {
    Color c = rule.color(t, a);
    if (!found)
      found = c;
    else if (*found != c)
      return std::nullopt;
  }
  return found;
}

namespace {

using u128 = unsigned __int128;

u128 checked64(u128 v) {
  if (v > std::numeric_limits<std::uint64_t>::max())
    throw BoundsError("term_rank: rank exceeds 64 bits");
  return v;
}

u128 cantor(u128 a, u128 b) {
  u128 s = a + b;
  if (s >= (u128(1) << 63)) throw BoundsError("term_rank: rank exceeds 64 bits");
  return s * (s + 1) / 2 + b;
}

u128 rank_of(const Term& t, const Signature& sig) {
  u128 alternatives = 1 + sig.size();
  if (t.is_var())
    return u128(t.var_index() - 1) * alternatives;  // alternative 0
  auto sym = sig.index_of(t.symbol());
  if (!sym) throw DomainError("term_rank: unknown symbol '" + t.symbol() + "'");
  const auto& children = t.children();
  u128 payload = rank_of(children[0], sig);
  for (std::size_t i = 1; i < children.size(); ++i)
    payload = checked64(cantor(payload, rank_of(children[i], sig)));
  return checked64(payload * alternatives + (u128(*sym) + 1));
}

}  // namespace

std::uint64_t term_rank(const Term& t, const Signature& sig) {
  return static_cast<std::uint64_t>(rank_of(t, sig));
}

}  // namespace mhyp
