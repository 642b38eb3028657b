#pragma once

// Irreducible decomposition of V(t = s) for an equation in exactly the variables
// x1..xn over L_l with n <= l. Each component is a chain system read off a variable
// ordering sigma:
//
//   first kind   x_σ(1) is shared by both sides:      x_σ(1) <= x_σ(2) <= ... <= x_σ(n)
//   second kind  x_σ(1) only in t, x_σ(2) only in s:  x_σ(1) =  x_σ(2) <= ... <= x_σ(n)
//
// The components are exactly the orderings of either kind, so their number is
// (n - k1 - k2)(n - 1)! + k1 k2 (n - 2)!.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "losemilat/point_set.hpp"
#include "losemilat/semilattice.hpp"

namespace losemilat {

/// A bijection on {1, ..., n}; sigma(i) is the i-th variable in the ordering.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

enum class PermutationKind { none = 0, first = 1, second = 2 };

/// One link of a chain system: x_lower <= x_upper, or x_lower = x_upper.
struct ChainLink {
  int lower = 0;
  int upper = 0;
  bool equal = false;

  friend bool operator==(const ChainLink&, const ChainLink&) = default;
};

class ChainComponent {
 public:
  /// kind must be first or second; second needs n >= 2.
  ChainComponent(Permutation sigma, PermutationKind kind);

  const Permutation& sigma() const noexcept { return sigma_; }
  PermutationKind kind() const noexcept { return kind_; }

  std::vector<ChainLink> links() const;

  /// The defining system; inequalities are desugared (x <= y becomes x*y = x).
  std::vector<Equation> constraints() const;

  /// "x2 = x3", "x3 <= x1", ...
  std::vector<std::string> rendered_constraints() const;

  /// Compact chain notation, e.g. "x2=x3<=x1". A one-variable chain renders as "x1".
  std::string chain_notation() const;

  friend auto operator<=>(const ChainComponent&, const ChainComponent&) = default;

 private:
  Permutation sigma_;
  PermutationKind kind_;
};

/// Requires eq to use exactly x1..xn where n = sigma.size().
PermutationKind kind_of(const Permutation& sigma, const Equation& eq);

/// Both in lexicographic order of sigma. Require eq to use exactly x1..x(max_var).
std::vector<Permutation> first_kind_perms(const Equation& eq);
std::vector<Permutation> second_kind_perms(const Equation& eq);

/// First-kind components, then second-kind ones, each in lexicographic sigma order.
/// Throws UniverseMismatch unless eq uses exactly x1..xn (n = ctx.arity()), and
/// UnsupportedRegime when n > l.
std::vector<ChainComponent> decompose(const Equation& eq, const Context& ctx);

std::size_t irr_count(const Equation& eq, const Context& ctx);

/// Solution set of the component's chain system.
PointSet component_point_set(const ChainComponent& c, const Context& ctx, const Limits& limits = {});

/// The point that separates this component from every other component of its
/// equation: position σ(i) holds a_i, except σ(1) holds a_2 for the second kind.
Point witness_point(const ChainComponent& c, const Context& ctx);

std::string to_string(PermutationKind kind);

}  // namespace losemilat
