#include "losemilat/chain.hpp"

#include <algorithm>
#include <numeric>

#include "losemilat/error.hpp"
#include "losemilat/solver.hpp"

namespace losemilat {
namespace {

std::string var(int i) { return "x" + std::to_string(i); }

int require_full_universe(const Equation& eq) {
  const int n = eq.max_var();
  if (!eq.covers_exactly(n)) {
    throw UniverseMismatch("equation must use every variable x1..x" + std::to_string(n));
  }
  return n;
}

// Appends head followed by every ordering of rest, in lexicographic order.
void append_orderings(std::vector<int> head, std::vector<int> rest, std::vector<Permutation>& out) {
  std::sort(rest.begin(), rest.end());
  do {
    auto images = head;
    images.insert(images.end(), rest.begin(), rest.end());
    out.emplace_back(std::move(images));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

std::vector<int> without(int n, std::initializer_list<int> excluded) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) throw ContextError("not a permutation of {1, ..., n}");
  }
  if (images_.empty()) throw ContextError("empty permutation");
}

ChainComponent::ChainComponent(Permutation sigma, PermutationKind kind) : sigma_(std::move(sigma)), kind_(kind) {
  if (kind_ == PermutationKind::none) throw ContextError("a chain component needs a kind of 1 or 2");
  if (kind_ == PermutationKind::second && sigma_.size() < 2) {
    throw ContextError("a second-kind component needs at least two variables");
  }
}

std::vector<ChainLink> ChainComponent::links() const {
  std::vector<ChainLink> out;
  for (int i = 1; i < sigma_.size(); ++i) {
    out.push_back({sigma_(i), sigma_(i + 1), kind_ == PermutationKind::second && i == 1});
  }
  return out;
}

std::vector<Equation> ChainComponent::constraints() const {
  std::vector<Equation> out;
  for (const auto& link : links()) {
    if (link.equal) {
      out.emplace_back(Term{link.lower}, Term{link.upper});
    } else {
      out.emplace_back(Term{link.lower, link.upper}, Term{link.lower});
    }
  }
  return out;
}

std::vector<std::string> ChainComponent::rendered_constraints() const {
  std::vector<std::string> out;
  for (const auto& link : links()) out.push_back(var(link.lower) + (link.equal ? " = " : " <= ") + var(link.upper));
  return out;
}

std::string ChainComponent::chain_notation() const {
  std::string out = var(sigma_(1));
  for (const auto& link : links()) out += (link.equal ? "=" : "<=") + var(link.upper);
  return out;
}

PermutationKind kind_of(const Permutation& sigma, const Equation& eq) {
  const int n = sigma.size();
  if (!eq.covers_exactly(n)) {
    throw UniverseMismatch("equation must use exactly x1..x" + std::to_string(n) + " to classify this ordering");
  }
  const auto& t = eq.lhs();
  const auto& s = eq.rhs();
  const int head = sigma(1);
  if (t.contains(head) && s.contains(head)) return PermutationKind::first;
  if (n >= 2 && t.contains(head) && !s.contains(head)) {
    const int next = sigma(2);
    if (s.contains(next) && !t.contains(next)) return PermutationKind::second;
  }
  return PermutationKind::none;
}

std::vector<Permutation> first_kind_perms(const Equation& eq) {
  const int n = require_full_universe(eq);
  std::vector<Permutation> out;
  for (int v = 1; v <= n; ++v) {
    if (eq.lhs().contains(v) && eq.rhs().contains(v)) append_orderings({v}, without(n, {v}), out);
  }
  return out;
}

std::vector<Permutation> second_kind_perms(const Equation& eq) {
  const int n = require_full_universe(eq);
  std::vector<Permutation> out;
  for (int a : eq.lhs().vars()) {
    if (eq.rhs().contains(a)) continue;
    for (int b : eq.rhs().vars()) {
      if (eq.lhs().contains(b)) continue;
      append_orderings({a, b}, without(n, {a, b}), out);
    }
  }
  return out;
}

std::vector<ChainComponent> decompose(const Equation& eq, const Context& ctx) {
  const int n = ctx.arity();
  if (!eq.covers_exactly(n)) {
    throw UniverseMismatch("decomposition needs an equation in exactly the variables x1..x" + std::to_string(n));
  }
  if (n > ctx.order()) {
    throw UnsupportedRegime("n = " + std::to_string(n) + " exceeds l = " + std::to_string(ctx.order()) +
                            "; the chain decomposition only holds for n <= l");
  }
  std::vector<ChainComponent> out;
  for (auto& sigma : first_kind_perms(eq)) out.emplace_back(std::move(sigma), PermutationKind::first);
  for (auto& sigma : second_kind_perms(eq)) out.emplace_back(std::move(sigma), PermutationKind::second);
  return out;
}

std::size_t irr_count(const Equation& eq, const Context& ctx) { return decompose(eq, ctx).size(); }

PointSet component_point_set(const ChainComponent& c, const Context& ctx, const Limits& limits) {
  if (c.sigma().size() > ctx.arity()) throw ArityError("component uses more variables than the context");
  const auto system = c.constraints();
  return solutions_of_system(system, ctx, limits);
}

Point witness_point(const ChainComponent& c, const Context& ctx) {
  const int n = c.sigma().size();
  if (ctx.order() < n) throw UnsupportedRegime("witness points need l >= n");
  if (ctx.arity() != n) throw ArityError("component arity differs from the context");
  std::vector<int> coords(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) coords[static_cast<std::size_t>(c.sigma()(i) - 1)] = i;
  if (c.kind() == PermutationKind::second) coords[static_cast<std::size_t>(c.sigma()(1) - 1)] = 2;
  return Point(std::move(coords));
}

std::string to_string(PermutationKind kind) {
  switch (kind) {
    case PermutationKind::first:
      return "1";
    case PermutationKind::second:
      return "2";
    case PermutationKind::none:
      break;
  }
  return "none";
}

}  // namespace losemilat
