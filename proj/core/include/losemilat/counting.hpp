#pragma once

// Exact counts over Eq(n), the equations that use every variable x1..xn.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "losemilat/semilattice.hpp"

namespace losemilat {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// (k1, k2) in K_n = {k1 + k2 <= n} \ {(0, n), (n, 0)}.
class KIndex {
 public:
  KIndex(int k1, int k2, int n);

  int k1() const noexcept { return k1_; }
  int k2() const noexcept { return k2_; }
  int n() const noexcept { return n_; }

  friend bool operator==(const KIndex&, const KIndex&) = default;

 private:
  int k1_;
  int k2_;
  int n_;
};

/// K_n in order of k1, then k2.
std::vector<KIndex> k_indices(int n);

ExactInt factorial(int n);
ExactInt binomial(int n, int k);

/// #Eq(k1, k2, n) = C(n, k1) C(n - k1, k2).
ExactInt eq_count(const KIndex& k);

/// #Eq(n) = 3^n - 2.
ExactInt eq_total(int n);

/// Irr(k1, k2, n) = (n - k1 - k2)(n - 1)! + k1 k2 (n - 2)!. The second term is taken
/// as zero whenever k1 k2 = 0, so n = 1 needs no (-1)!.
ExactInt irr_formula(const KIndex& k);

/// Closed form 4 n! 3^(n-2) / (3^n - 2). Requires n >= 2.
ExactRational avg_irr(int n);

/// Sum over K_n of #Eq(k1, k2, n) Irr(k1, k2, n).
ExactInt weighted_irr_sum(int n);

/// weighted_irr_sum(n) / eq_total(n). Requires n >= 2.
ExactRational avg_irr_by_sum(int n);

/// sum_{t=0}^{n} C(n, t) t 2^t == 2 n 3^(n-1), evaluated exactly.
bool binomial_identity_check(int n);

/// Every ordered pair (t, s) with Var(t) ∪ Var(s) = {1..n}, ordered by the lhs
/// variable mask then the rhs mask. Requires 1 <= n <= 12.
std::vector<Equation> enumerate_eq(int n);

/// avg_irr(n) / n!, exactly and as a double.
ExactRational asymptotic_ratio_exact(int n);
double asymptotic_ratio(int n);

/// Decimal rendering with the given number of significant digits ("%g" style).
std::string to_decimal(const ExactRational& value, int significant_digits = 12);

/// "num/den", or just "num" when the denominator is 1.
std::string to_fraction(const ExactRational& value);

}  // namespace losemilat
