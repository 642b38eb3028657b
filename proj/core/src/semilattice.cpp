#include "losemilat/semilattice.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "losemilat/error.hpp"

namespace losemilat {

Context::Context(int order, int arity) : order_(order), arity_(arity) {
  if (order < 1) throw ContextError("semilattice order l must be >= 1, got " + std::to_string(order));
  if (arity < 1) throw ContextError("variable count n must be >= 1, got " + std::to_string(arity));
}

std::uint64_t Context::cube_size() const noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t size = 1;
  for (int i = 0; i < arity_; ++i) {
    if (size > kMax / static_cast<std::uint64_t>(order_)) return kMax;
    size *= static_cast<std::uint64_t>(order_);
  }
  return size;
}

void Point::validate(const Context& ctx) const {
  if (arity() != ctx.arity()) {
    throw ContextError("point has " + std::to_string(arity()) + " coordinates, context expects " +
                       std::to_string(ctx.arity()));
  }
  for (int c : coords_) {
    if (c < 1 || c > ctx.order()) {
      throw ContextError("coordinate a_" + std::to_string(c) + " outside L_" + std::to_string(ctx.order()));
    }
  }
}

Term::Term(std::initializer_list<int> vars) : Term(std::vector<int>(vars)) {}

Term::Term(std::vector<int> vars) : vars_(std::move(vars)) {
  if (vars_.empty()) throw ArityError("a term needs at least one variable");
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (vars_.front() < 1) throw ArityError("variable indices start at 1, got " + std::to_string(vars_.front()));
}

Term Term::from_mask(std::uint64_t mask) {
  std::vector<int> vars;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) vars.push_back(i + 1);
  }
  return Term(std::move(vars));
}

bool Term::contains(int var) const noexcept { return std::binary_search(vars_.begin(), vars_.end(), var); }

std::uint64_t Term::mask() const {
  if (max_var() > 64) throw ArityError("term mask limited to x1..x64");
  std::uint64_t m = 0;
  for (int v : vars_) m |= std::uint64_t{1} << (v - 1);
  return m;
}

Term operator*(const Term& a, const Term& b) {
  std::vector<int> vars;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(), std::back_inserter(vars));
  return Term(std::move(vars));
}

std::vector<int> Equation::universe() const {
  std::vector<int> u;
  std::set_union(lhs_.vars().begin(), lhs_.vars().end(), rhs_.vars().begin(), rhs_.vars().end(),
                 std::back_inserter(u));
  return u;
}

int Equation::max_var() const noexcept { return std::max(lhs_.max_var(), rhs_.max_var()); }

bool Equation::covers_exactly(int n) const {
  auto u = universe();
  return static_cast<int>(u.size()) == n && u.back() == n;
}

Element meet(const Context& ctx, Element a, Element b) {
  if (!ctx.contains(a) || !ctx.contains(b)) {
    throw ContextError("element outside L_" + std::to_string(ctx.order()));
  }
  return Element{std::min(a.index, b.index)};
}

Element eval_term(const Term& t, const Point& p) {
  if (t.max_var() > p.arity()) {
    throw ArityError("term uses x" + std::to_string(t.max_var()) + " but the point has arity " +
                     std::to_string(p.arity()));
  }
  int value = std::numeric_limits<int>::max();
  for (int v : t.vars()) value = std::min(value, p.coords()[v - 1]);
  return Element{value};
}

bool holds(const Equation& eq, const Point& p) { return eval_term(eq.lhs(), p) == eval_term(eq.rhs(), p); }

Classification classify(const Equation& eq) {
  const auto& t = eq.lhs();
  const auto& s = eq.rhs();
  int only_t = 0;
  int only_s = 0;
  for (int v : t.vars()) only_t += s.contains(v) ? 0 : 1;
  for (int v : s.vars()) only_s += t.contains(v) ? 0 : 1;
  return {only_t, only_s, static_cast<int>(eq.universe().size())};
}

void eval_all_terms(std::span<const int> coords, std::vector<int>& values) {
  const std::size_t count = std::size_t{1} << coords.size();
  values.resize(count);
  values[0] = std::numeric_limits<int>::max();
  for (std::size_t mask = 1; mask < count; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    values[mask] = std::min(values[mask & (mask - 1)], coords[low]);
  }
}

}  // namespace losemilat
