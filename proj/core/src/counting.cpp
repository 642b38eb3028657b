#include "losemilat/counting.hpp"

#include <iomanip>
#include <sstream>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "losemilat/error.hpp"

namespace losemilat {
namespace {

ExactInt pow3(int e) { return boost::multiprecision::pow(ExactInt(3), static_cast<unsigned>(e)); }

void require_avg_domain(int n) {
  if (n < 2) throw ContextError("the average number of components is defined for n >= 2");
}

}  // namespace

KIndex::KIndex(int k1, int k2, int n) : k1_(k1), k2_(k2), n_(n) {
  if (n < 1 || k1 < 0 || k2 < 0 || k1 + k2 > n || (k1 == 0 && k2 == n) || (k1 == n && k2 == 0)) {
    throw ContextError("(" + std::to_string(k1) + ", " + std::to_string(k2) + ") is not in K_" + std::to_string(n));
  }
}

std::vector<KIndex> k_indices(int n) {
  std::vector<KIndex> out;
  for (int k1 = 0; k1 <= n; ++k1) {
    for (int k2 = 0; k1 + k2 <= n; ++k2) {
      if ((k1 == 0 && k2 == n) || (k1 == n && k2 == 0)) continue;
      out.emplace_back(k1, k2, n);
    }
  }
  return out;
}

ExactInt factorial(int n) {
  if (n < 0) throw ContextError("factorial of a negative number");
  ExactInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

ExactInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  ExactInt c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

ExactInt eq_count(const KIndex& k) { return binomial(k.n(), k.k1()) * binomial(k.n() - k.k1(), k.k2()); }

ExactInt eq_total(int n) {
  if (n < 1) throw ContextError("n must be >= 1");
  return pow3(n) - 2;
}

ExactInt irr_formula(const KIndex& k) {
  const int n = k.n();
  ExactInt value = ExactInt(n - k.k1() - k.k2()) * factorial(n - 1);
  if (k.k1() * k.k2() != 0) value += ExactInt(k.k1() * k.k2()) * factorial(n - 2);
  return value;
}

ExactRational avg_irr(int n) {
  require_avg_domain(n);
  return ExactRational(4 * factorial(n) * pow3(n - 2), pow3(n) - 2);
}

ExactInt weighted_irr_sum(int n) {
  ExactInt sum = 0;
  for (const auto& k : k_indices(n)) sum += eq_count(k) * irr_formula(k);
  return sum;
}

ExactRational avg_irr_by_sum(int n) {
  require_avg_domain(n);
  return ExactRational(weighted_irr_sum(n), eq_total(n));
}

bool binomial_identity_check(int n) {
  if (n < 0) throw ContextError("n must be >= 0");
  ExactInt lhs = 0;
  for (int t = 0; t <= n; ++t) lhs += binomial(n, t) * t * boost::multiprecision::pow(ExactInt(2), static_cast<unsigned>(t));
  const ExactInt rhs = n == 0 ? ExactInt(0) : 2 * ExactInt(n) * pow3(n - 1);
  return lhs == rhs;
}

std::vector<Equation> enumerate_eq(int n) {
  if (n < 1 || n > 12) throw GuardViolation("enumerate_eq supports 1 <= n <= 12");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<Equation> out;
  out.reserve(static_cast<std::size_t>(eq_total(n)));
  for (std::uint64_t t = 1; t <= full; ++t) {
    for (std::uint64_t s = 1; s <= full; ++s) {
      if ((t | s) == full) out.emplace_back(Term::from_mask(t), Term::from_mask(s));
    }
  }
  return out;
}

ExactRational asymptotic_ratio_exact(int n) { return avg_irr(n) / ExactRational(factorial(n)); }

double asymptotic_ratio(int n) { return asymptotic_ratio_exact(n).convert_to<double>(); }

std::string to_decimal(const ExactRational& value, int significant_digits) {
  using Decimal = boost::multiprecision::cpp_dec_float_100;
  Decimal x(boost::multiprecision::numerator(value));
  x /= Decimal(boost::multiprecision::denominator(value));
  std::ostringstream out;
  out << std::setprecision(significant_digits) << x;
  return out.str();
}

std::string to_fraction(const ExactRational& value) {
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

}  // namespace losemilat
