#include "mhyp/hypersubstitution.hpp"

#include <algorithm>

namespace mhyp {

Hypersubstitution::Hypersubstitution(Signature sig, std::vector<Term> images)
    : sig_(std::move(sig)), images_(std::move(images)) {
  if (images_.size() != sig_.size())
    throw DomainError("hypersubstitution: expected one image per symbol");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!well_formed(images_[i], sig_))
      throw DomainError("hypersubstitution: image of '" + sig_.name(i) + "' is malformed");
    if (images_[i].max_var_index() > sig_.arity(i))
      throw DomainError("hypersubstitution: image of '" + sig_.name(i) + "' uses x" +
                        std::to_string(images_[i].max_var_index()) + " but the symbol is " +
                        std::to_string(sig_.arity(i)) + "-ary");
  }
}

Hypersubstitution Hypersubstitution::identity(const Signature& sig) {
  std::vector<Term> images;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    std::vector<Term> vars;
    for (int j = 1; j <= sig.arity(i); ++j) vars.push_back(Term::var(j));
    images.push_back(Term::app(sig.name(i), std::move(vars)));
  }
  return Hypersubstitution(sig, std::move(images));
}

const Term& Hypersubstitution::image(const std::string& symbol) const {
  auto i = sig_.index_of(symbol);
  if (!i) throw DomainError("hypersubstitution: unknown symbol '" + symbol + "'");
  return images_[*i];
}

bool Hypersubstitution::operator==(const Hypersubstitution& other) const {
  return sig_ == other.sig_ && images_ == other.images_;
}

bool Hypersubstitution::operator<(const Hypersubstitution& other) const {
  return std::lexicographical_compare(images_.begin(), images_.end(), other.images_.begin(),
                                      other.images_.end());
}

std::string Hypersubstitution::describe() const {
  std::string out;
  for (std::size_t i = 0; i < sig_.size(); ++i) {
    if (!out.empty()) out += "; ";
    out += sig_.name(i) + " -> " + format_term(images_[i]);
  }
  return out;
}

Term apply_hyp(const Hypersubstitution& s, const Term& t) {
  if (t.is_var()) return t;
  std::map<int, Term> binding;
  const auto& children = t.children();
  for (std::size_t i = 0; i < children.size(); ++i)
    binding.emplace(static_cast<int>(i) + 1, apply_hyp(s, children[i]));
  return substitute(s.image(t.symbol()), binding);
}

Equation apply_hyp(const Hypersubstitution& s, const Equation& e) {
  return Equation{apply_hyp(s, e.lhs), apply_hyp(s, e.rhs)};
}

Hypersubstitution compose_hyp(const Hypersubstitution& s1, const Hypersubstitution& s2) {
  if (s1.signature() != s2.signature())
    throw DomainError("compose_hyp: signatures differ");
  std::vector<Term> images;
  for (std::size_t i = 0; i < s1.signature().size(); ++i)
    images.push_back(apply_hyp(s1, s2.image(i)));
  return Hypersubstitution(s1.signature(), std::move(images));
}

Hypersubstitution named_hyp(const std::string& name, const Signature& sig) {
  if (name == "id") return Hypersubstitution::identity(sig);
  std::vector<Term> images;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (name == "swap") {
      if (sig.arity(i) != 2)
        throw DomainError("named_hyp: 'swap' needs a binary symbol, '" + sig.name(i) + "' is " +
                          std::to_string(sig.arity(i)) + "-ary");
      images.push_back(Term::app(sig.name(i), {Term::var(2), Term::var(1)}));
    } else if (name == "proj-first") {
      images.push_back(Term::var(1));
    } else if (name == "proj-last") {
      images.push_back(Term::var(sig.arity(i)));
    } else {
      throw DomainError("named_hyp: unknown name '" + name +
                        "' (expected id, swap, proj-first, proj-last)");
    }
  }
  return Hypersubstitution(sig, std::move(images));
}

void HypPool::add(std::string name, Hypersubstitution h) {
  names.push_back(std::move(name));
  members.push_back(std::move(h));
}

bool HypPool::contains_identity() const { return index_of_identity().has_value(); }

std::optional<std::size_t> HypPool::index_of_identity() const {
  if (members.empty()) return std::nullopt;
  Hypersubstitution id = Hypersubstitution::identity(members.front().signature());
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == id) return i;
  return std::nullopt;
}

bool HypPool::closed_under_composition() const {
  for (const auto& a : members)
    for (const auto& b : members) {
      Hypersubstitution c = compose_hyp(a, b);
      if (std::find(members.begin(), members.end(), c) == members.end()) return false;
    }
  return true;
}

std::string HypPool::describe() const { return "pool(size=" + std::to_string(size()) + ")"; }

HypPool enumerate_hyps(const Signature& sig, int max_depth, std::size_t max_size) {
  if (max_depth < 0) throw DomainError("enumerate_hyps: max_depth must be >= 0");
  std::vector<std::vector<Term>> image_choices;
  std::size_t total = 1;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    auto images = terms_up_to_depth(sig, max_depth, sig.arity(i), max_size);
    std::sort(images.begin(), images.end(),
              [](const Term& a, const Term& b) { return format_term(a) < format_term(b); });
    total *= images.size();
    if (total > max_size)
      throw BoundsError("enumerate_hyps: pool would exceed " + std::to_string(max_size));
    image_choices.push_back(std::move(images));
  }
  HypPool pool;
  std::vector<std::size_t> idx(sig.size(), 0);
  std::size_t counter = 0;
  while (true) {
    std::vector<Term> images;
    for (std::size_t i = 0; i < sig.size(); ++i) images.push_back(image_choices[i][idx[i]]);
    pool.add("h" + std::to_string(counter++), Hypersubstitution(sig, std::move(images)));
    int k = static_cast<int>(sig.size()) - 1;
    while (k >= 0 && ++idx[k] == image_choices[k].size()) idx[k--] = 0;
    if (k < 0) break;
  }
  return pool;
}

}  // namespace mhyp
