#pragma once

// Linearly ordered semilattice L_l = {a_1 < ... < a_l} with meet a_i * a_j = a_min(i,j),
// coefficient-free terms over x_1..x_n and the satisfaction relation for equations.
//
// Indices are 1-based throughout: element a_i has index i, variable x_i has index i.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace losemilat {

struct Element {
  int index = 1;

  friend auto operator<=>(const Element&, const Element&) = default;
};

/// The ambient structure: semilattice order l and variable count n.
class Context {
 public:
  Context(int order, int arity);

  int order() const noexcept { return order_; }
  int arity() const noexcept { return arity_; }

  /// l^n, saturated at UINT64_MAX.
  std::uint64_t cube_size() const noexcept;

  bool contains(Element e) const noexcept { return e.index >= 1 && e.index <= order_; }

  friend bool operator==(const Context&, const Context&) = default;

 private:
  int order_;
  int arity_;
};

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<int> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<int> coords) : coords_(coords) {}

  int arity() const noexcept { return static_cast<int>(coords_.size()); }

  /// Value of variable x_var (1-based).
  Element operator[](int var) const { return Element{coords_.at(var - 1)}; }

  std::span<const int> coords() const noexcept { return coords_; }

  /// Throws ContextError unless the arity equals ctx.arity() and every coordinate lies in [1, l].
  void validate(const Context& ctx) const;

  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::vector<int> coords_;
};

/// A word in the variables, kept in idempotent commutative normal form: a nonempty
/// ascending set of variable indices.
class Term {
 public:
  Term(std::initializer_list<int> vars);
  explicit Term(std::vector<int> vars);

  /// Bit i-1 of the mask selects x_i.
  static Term from_mask(std::uint64_t mask);

  std::span<const int> vars() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  int max_var() const noexcept { return vars_.back(); }
  bool contains(int var) const noexcept;

  /// Requires max_var() <= 64.
  std::uint64_t mask() const;

  /// Semilattice product: union of variable sets.
  friend Term operator*(const Term& a, const Term& b);

  /// Lexicographic on the ascending variable sequence.
  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  std::vector<int> vars_;
};

struct Classification {
  int k1 = 0;
  int k2 = 0;
  int n_used = 0;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// An ordered pair of terms lhs = rhs.
class Equation {
 public:
  Equation(Term lhs, Term rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

  const Term& lhs() const noexcept { return lhs_; }
  const Term& rhs() const noexcept { return rhs_; }

  /// Var(lhs) ∪ Var(rhs), ascending.
  std::vector<int> universe() const;
  int max_var() const noexcept;

  /// True iff the universe is exactly {1, ..., n}.
  bool covers_exactly(int n) const;

  Equation reversed() const { return Equation(rhs_, lhs_); }

  friend auto operator<=>(const Equation&, const Equation&) = default;

 private:
  Term lhs_;
  Term rhs_;
};

Element meet(const Context& ctx, Element a, Element b);

/// Minimum of the point's coordinates over Var(t).
Element eval_term(const Term& t, const Point& p);

bool holds(const Equation& eq, const Point& p);

Classification classify(const Equation& eq);

/// Evaluates all 2^n - 1 nonempty terms at a point at once: values[mask] for mask in
/// [1, 2^n). values[0] is unused. Requires coords.size() <= 20.
void eval_all_terms(std::span<const int> coords, std::vector<int>& values);

}  // namespace losemilat
