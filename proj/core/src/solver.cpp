#include "losemilat/solver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "losemilat/error.hpp"

namespace losemilat {
namespace {

using MaskPair = std::pair<std::uint64_t, std::uint64_t>;

void require_within(const Equation& eq, const Context& ctx) {
  if (eq.max_var() > ctx.arity()) {
    throw ArityError("equation uses x" + std::to_string(eq.max_var()) + " but the context has n = " +
                     std::to_string(ctx.arity()));
  }
}

void require_closure_arity(const Context& ctx) {
  if (ctx.arity() > kMaxClosureArity) {
    throw GuardViolation("closure and coordinate semilattices enumerate all terms; n = " +
                         std::to_string(ctx.arity()) + " exceeds " + std::to_string(kMaxClosureArity));
  }
}

int term_min(const std::vector<int>& vars, std::span<const int> coords) {
  int value = coords[static_cast<std::size_t>(vars.front() - 1)];
  for (int v : vars) value = std::min(value, coords[static_cast<std::size_t>(v - 1)]);
  return value;
}

std::vector<int> to_vector(const Term& t) { return {t.vars().begin(), t.vars().end()}; }

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

PointSet solutions(const Equation& eq, const Context& ctx, const Limits& limits) {
  return solutions_of_system(std::span<const Equation>(&eq, 1), ctx, limits);
}

PointSet solutions_of_system(std::span<const Equation> eqs, const Context& ctx, const Limits& limits) {
  for (const auto& eq : eqs) require_within(eq, ctx);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> sides;
  sides.reserve(eqs.size());
  for (const auto& eq : eqs) sides.emplace_back(to_vector(eq.lhs()), to_vector(eq.rhs()));

  PointSet out(ctx, limits);
  for_each_cube_point(ctx, [&](std::uint64_t index, std::span<const int> coords) {
    for (const auto& [lhs, rhs] : sides) {
      if (term_min(lhs, coords) != term_min(rhs, coords)) return;
    }
    out.set_index(index);
  });
  return out;
}

std::vector<Equation> all_ambient_equations(int n) {
  if (n < 1) throw ContextError("n must be >= 1");
  if (n > 20) throw GuardViolation("all_ambient_equations is limited to n <= 20");
  const std::uint64_t terms = (std::uint64_t{1} << n) - 1;
  std::vector<Equation> out;
  out.reserve(static_cast<std::size_t>(terms * terms));
  for (std::uint64_t t = 1; t <= terms; ++t) {
    for (std::uint64_t s = 1; s <= terms; ++s) out.emplace_back(Term::from_mask(t), Term::from_mask(s));
  }
  return out;
}

PointSet closure(const PointSet& z) {
  const auto& ctx = z.context();
  require_closure_arity(ctx);
  const std::uint64_t terms = (std::uint64_t{1} << ctx.arity()) - 1;

  // Equations satisfied by every point of Z.
  std::vector<MaskPair> satisfied;
  satisfied.reserve(static_cast<std::size_t>(terms * terms));
  for (const auto& eq : all_ambient_equations(ctx.arity())) satisfied.emplace_back(eq.lhs().mask(), eq.rhs().mask());
  std::vector<int> values;
  z.for_each([&](const Point& p) {
    eval_all_terms(p.coords(), values);
    std::erase_if(satisfied, [&](const MaskPair& e) { return values[e.first] != values[e.second]; });
  });

  // Satisfied equations are equalities, so a spanning forest of them cuts out the same set.
  std::vector<std::size_t> parent(static_cast<std::size_t>(terms + 1));
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::vector<MaskPair> spanning;
  for (const auto& [t, s] : satisfied) {
    const auto a = find_root(parent, t);
    const auto b = find_root(parent, s);
    if (a == b) continue;
    parent[a] = b;
    spanning.emplace_back(t, s);
  }

  PointSet out(ctx, Limits{.max_points = z.cube_size()});
  for_each_cube_point(ctx, [&](std::uint64_t index, std::span<const int> coords) {
    eval_all_terms(coords, values);
    for (const auto& [t, s] : spanning) {
      if (values[t] != values[s]) return;
    }
    out.set_index(index);
  });
  return out;
}

bool is_algebraic(const PointSet& z) { return closure(z) == z; }

CoordinateSemilattice::CoordinateSemilattice(int arity, std::vector<TermClass> classes,
                                             std::vector<std::size_t> class_by_mask,
                                             std::vector<std::vector<bool>> leq)
    : arity_(arity), classes_(std::move(classes)), class_by_mask_(std::move(class_by_mask)), leq_(std::move(leq)) {}

std::size_t CoordinateSemilattice::class_of(const Term& t) const {
  if (t.max_var() > arity_) throw ArityError("term outside the coordinate semilattice's variables");
  return class_by_mask_.at(static_cast<std::size_t>(t.mask()));
}

std::size_t CoordinateSemilattice::product(std::size_t a, std::size_t b) const {
  return class_of(classes_.at(a).representative * classes_.at(b).representative);
}

bool CoordinateSemilattice::is_chain() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (!leq_[i][j] && !leq_[j][i]) return false;
    }
  }
  return true;
}

std::vector<std::size_t> CoordinateSemilattice::chain() const {
  if (!is_chain()) throw Error("coordinate semilattice is not a chain");
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return a != b && leq_[a][b]; });
  return order;
}

CoordinateSemilattice coordinate_semilattice(const PointSet& y) {
  const auto& ctx = y.context();
  require_closure_arity(ctx);
  const std::size_t masks = std::size_t{1} << ctx.arity();

  // Partition refinement: one pass per point splits classes by the point's values.
  std::vector<std::size_t> block(masks, 0);
  std::size_t block_count = 1;
  std::vector<int> values;
  y.for_each([&](const Point& p) {
    eval_all_terms(p.coords(), values);
    std::map<std::pair<std::size_t, int>, std::size_t> split;
    for (std::size_t m = 1; m < masks; ++m) {
      auto [it, inserted] = split.try_emplace({block[m], values[m]}, split.size());
      block[m] = it->second;
    }
    block_count = split.size();
  });

  // Relabel blocks by their least member under Term order.
  std::vector<std::vector<Term>> members(block_count);
  for (std::size_t m = 1; m < masks; ++m) members[block[m]].push_back(Term::from_mask(m));
  for (auto& ms : members) std::sort(ms.begin(), ms.end());
  std::vector<std::size_t> order(block_count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return members[a][0] < members[b][0]; });
  std::vector<std::size_t> relabel(block_count);
  for (std::size_t i = 0; i < order.size(); ++i) relabel[order[i]] = i;

  std::vector<TermClass> classes;
  std::vector<std::uint64_t> rep_mask;
  for (auto b : order) {
    rep_mask.push_back(members[b][0].mask());
    classes.push_back(TermClass{members[b][0], std::move(members[b])});
  }
  std::vector<std::size_t> class_by_mask(masks, 0);
  for (std::size_t m = 1; m < masks; ++m) class_by_mask[m] = relabel[block[m]];

  std::vector<std::vector<bool>> leq(block_count, std::vector<bool>(block_count, true));
  y.for_each([&](const Point& p) {
    eval_all_terms(p.coords(), values);
    for (std::size_t i = 0; i < block_count; ++i) {
      for (std::size_t j = 0; j < block_count; ++j) {
        if (values[rep_mask[i]] > values[rep_mask[j]]) leq[i][j] = false;
      }
    }
  });
  return CoordinateSemilattice(ctx.arity(), std::move(classes), std::move(class_by_mask), std::move(leq));
}

bool is_irreducible(const PointSet& y) {
  if (y.empty()) throw EmptySetError("irreducibility is undefined for the empty set");
  const auto gamma = coordinate_semilattice(y);
  return gamma.is_chain() && gamma.size() <= static_cast<std::size_t>(y.context().order());
}

bool is_irreducible_by_cover(const PointSet& y) {
  if (y.empty()) throw EmptySetError("irreducibility is undefined for the empty set");
  const auto& ctx = y.context();
  if (ctx.arity() > kMaxCoverArity || y.size() > kMaxCoverPoints) {
    throw GuardViolation("cover oracle requires n <= " + std::to_string(kMaxCoverArity) + " and |Y| <= " +
                         std::to_string(kMaxCoverPoints));
  }
  const auto members = y.points();
  const std::uint64_t all = (std::uint64_t{1} << members.size()) - 1;
  PointSet covered(ctx, Limits{.max_points = y.cube_size()});
  std::set<PointSet> seen;
  for (std::uint64_t subset = 0; subset < all; ++subset) {
    PointSet z(ctx, Limits{.max_points = y.cube_size()});
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (subset >> i & 1U) z.insert(members[i]);
    }
    auto c = closure(z);
    if (!c.is_proper_subset_of(y) || !seen.insert(c).second) continue;
    covered |= c;
    if (covered == y) return false;
  }
  return true;
}

ClosedSetFamily::ClosedSetFamily(Context ctx, std::vector<PointSet> sets) : ctx_(ctx), sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end());
}

bool ClosedSetFamily::contains(const PointSet& s) const {
  return s.context() == ctx_ && std::binary_search(sets_.begin(), sets_.end(), s);
}

ClosedSetFamily enumerate_closed_sets(const Context& ctx, const Limits& limits) {
  if (ctx.arity() > kMaxFamilyArity || ctx.order() > kMaxFamilyOrder) {
    throw GuardViolation("closed-set enumeration requires n <= " + std::to_string(kMaxFamilyArity) +
                         " and l <= " + std::to_string(kMaxFamilyOrder));
  }
  std::set<PointSet> generators{PointSet::full(ctx, limits)};
  for (const auto& eq : all_ambient_equations(ctx.arity())) generators.insert(solutions(eq, ctx, limits));

  // Every closed set is a finite intersection of generators, so intersecting each new
  // set with every generator reaches the whole family.
  std::set<PointSet> family(generators.begin(), generators.end());
  std::deque<PointSet> pending(generators.begin(), generators.end());
  while (!pending.empty()) {
    const PointSet current = std::move(pending.front());
    pending.pop_front();
    for (const auto& g : generators) {
      auto meet_set = current & g;
      if (family.insert(meet_set).second) {
        if (family.size() > limits.max_family) {
          throw CapExceeded("closed-set family exceeds " + std::to_string(limits.max_family) + " members");
        }
        pending.push_back(std::move(meet_set));
      }
    }
  }
  return ClosedSetFamily(ctx, {family.begin(), family.end()});
}

std::vector<PointSet> brute_decompose(const PointSet& y, const ClosedSetFamily& family) {
  if (!(y.context() == family.context())) throw ContextError("set and family belong to different contexts");
  if (!family.contains(y)) throw Error("brute_decompose requires an algebraic set");

  std::vector<PointSet> irreducible;
  for (const auto& c : family.sets()) {
    if (!c.empty() && c.is_subset_of(y) && is_irreducible(c)) irreducible.push_back(c);
  }
  std::vector<PointSet> maximal;
  for (const auto& c : irreducible) {
    const bool dominated =
        std::any_of(irreducible.begin(), irreducible.end(), [&](const PointSet& d) { return c.is_proper_subset_of(d); });
    if (!dominated) maximal.push_back(c);
  }

  PointSet joined(y.context(), Limits{.max_points = y.cube_size()});
  for (const auto& c : maximal) joined |= c;
  if (!(joined == y)) throw InternalInconsistency("maximal irreducible closed subsets do not cover the set");
  return maximal;
}

std::vector<PointSet> brute_decompose(const PointSet& y, const Limits& limits) {
  return brute_decompose(y, enumerate_closed_sets(y.context(), limits));
}

}  // namespace losemilat
