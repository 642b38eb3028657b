#pragma once

// Exhaustive semantics over L_l^n: solution sets, the closure operator induced by all
// ambient equations, coordinate semilattices, and the brute-force irreducibility and
// decomposition oracles.

#include <cstddef>
#include <span>
#include <vector>

#include "losemilat/point_set.hpp"
#include "losemilat/semilattice.hpp"

namespace losemilat {

inline constexpr int kMaxClosureArity = 6;
inline constexpr int kMaxFamilyArity = 3;
inline constexpr int kMaxFamilyOrder = 4;
inline constexpr int kMaxCoverArity = 3;
inline constexpr std::size_t kMaxCoverPoints = 12;

/// V(eq): every point of L_l^n satisfying eq.
PointSet solutions(const Equation& eq, const Context& ctx, const Limits& limits = {});

/// Intersection of the member solution sets; the empty system gives the full cube.
PointSet solutions_of_system(std::span<const Equation> eqs, const Context& ctx, const Limits& limits = {});

/// All (2^n - 1)^2 ordered pairs of nonempty terms over x1..xn, ordered by the
/// lhs variable mask and then the rhs variable mask (bit i-1 selects x_i).
std::vector<Equation> all_ambient_equations(int n);

/// Intersection of V(e) over every ambient equation e with Z ⊆ V(e). Requires n <= 6.
PointSet closure(const PointSet& z);

bool is_algebraic(const PointSet& z);

struct TermClass {
  Term representative;  // lexicographically least member
  std::vector<Term> members;
};

/// Γ(Y): nonempty terms over x1..xn modulo equality as functions on Y, with the
/// pointwise order. Classes are sorted by representative.
class CoordinateSemilattice {
 public:
  CoordinateSemilattice(int arity, std::vector<TermClass> classes, std::vector<std::size_t> class_by_mask,
                        std::vector<std::vector<bool>> leq);

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<TermClass>& classes() const noexcept { return classes_; }

  std::size_t class_of(const Term& t) const;
  bool leq(std::size_t a, std::size_t b) const { return leq_.at(a).at(b); }
  /// [a]·[b] = [rep_a · rep_b].
  std::size_t product(std::size_t a, std::size_t b) const;

  bool is_chain() const;
  /// Class indices from bottom to top. Requires is_chain().
  std::vector<std::size_t> chain() const;

 private:
  int arity_;
  std::vector<TermClass> classes_;
  std::vector<std::size_t> class_by_mask_;
  std::vector<std::vector<bool>> leq_;
};

/// Requires n <= 6.
CoordinateSemilattice coordinate_semilattice(const PointSet& y);

/// Γ(Y) is a chain with at most l classes, i.e. embeds into L_l.
/// Throws EmptySetError for the empty set.
bool is_irreducible(const PointSet& y);

/// Definition-level test: Y is reducible iff it is the union of finitely many of its
/// proper closed subsets. Candidates are closure(Z) for every proper subset Z of Y.
/// Requires n <= 3 and |Y| <= 12.
bool is_irreducible_by_cover(const PointSet& y);

/// Every algebraic subset of one cube, sorted by PointSet order.
class ClosedSetFamily {
 public:
  ClosedSetFamily(Context ctx, std::vector<PointSet> sets);

  const Context& context() const noexcept { return ctx_; }
  const std::vector<PointSet>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool contains(const PointSet& s) const;

 private:
  Context ctx_;
  std::vector<PointSet> sets_;
};

/// All V(e) plus the full cube, closed under intersection. Requires n <= 3, l <= 4.
ClosedSetFamily enumerate_closed_sets(const Context& ctx, const Limits& limits = {});

/// Maximal irreducible closed subsets of Y, sorted by PointSet order.
std::vector<PointSet> brute_decompose(const PointSet& y, const ClosedSetFamily& family);
std::vector<PointSet> brute_decompose(const PointSet& y, const Limits& limits = {});

}  // namespace losemilat
