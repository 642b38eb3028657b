#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <losemilat/chain.hpp>
#include <losemilat/counting.hpp>
#include <losemilat/error.hpp>
#include <losemilat/parser.hpp>
#include <losemilat/solver.hpp>

namespace losemilat::cli {
namespace {

struct Counterexample {
  std::string text;
};

std::string point_text(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) out += ',';
    out += "a" + std::to_string(p.coords()[i]);
  }
  return out + ")";
}

std::string sigma_text(const ChainComponent& c) {
  std::string out = "sigma=(";
  for (std::size_t i = 0; i < c.sigma().images().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c.sigma().images()[i]);
  }
  return out + ")";
}

// Runs body; a thrown Counterexample fails the check, guard and cap errors skip it.
CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
  try {
    return {name, CheckStatus::pass, body()};
  } catch (const Counterexample& ce) {
    return {name, CheckStatus::fail, ce.text};
  } catch (const GuardViolation& e) {
    return {name, CheckStatus::skip, e.what()};
  } catch (const CapExceeded& e) {
    return {name, CheckStatus::skip, e.what()};
  } catch (const InternalInconsistency& e) {
    return {name, CheckStatus::fail, e.what()};
  }
}

std::vector<PointSet> component_sets(const Equation& eq, const Context& ctx, const Limits& limits) {
  std::vector<PointSet> sets;
  for (const auto& c : decompose(eq, ctx)) sets.push_back(component_point_set(c, ctx, limits));
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

VerifyReport run_verification(int n, int l, const Limits& limits) {
  const Context ctx(l, n);
  if (n > l) {
    throw UnsupportedRegime("verify needs n <= l (got n = " + std::to_string(n) + ", l = " + std::to_string(l) +
                            "); the case n > l is outside the chain decomposition");
  }
  const auto equations = enumerate_eq(n);
  VerifyReport report;
  report.equations = equations.size();
  for (const auto& eq : equations) report.total_components += irr_count(eq, ctx);

  report.checks.push_back(run_check("eq-enumeration", [&] {
    if (ExactInt(equations.size()) != eq_total(n)) {
      throw Counterexample{"|Eq(n)| = " + std::to_string(equations.size()) + " but 3^n - 2 = " + eq_total(n).str()};
    }
    std::map<std::pair<int, int>, std::size_t> tally;
    for (const auto& eq : equations) {
      const auto c = classify(eq);
      ++tally[{c.k1, c.k2}];
    }
    for (const auto& k : k_indices(n)) {
      if (ExactInt(tally[{k.k1(), k.k2()}]) != eq_count(k)) {
        throw Counterexample{"tally for (" + std::to_string(k.k1()) + "," + std::to_string(k.k2()) +
                             ") differs from #Eq(k1,k2,n)"};
      }
    }
    return std::to_string(equations.size()) + " equations, tallies match #Eq(k1,k2,n)";
  }));

  report.checks.push_back(run_check("count-formula", [&] {
    for (const auto& eq : equations) {
      const auto c = classify(eq);
      const auto formula = irr_formula(KIndex(c.k1, c.k2, n));
      if (ExactInt(irr_count(eq, ctx)) != formula) {
        throw Counterexample{render(eq) + ": " + std::to_string(irr_count(eq, ctx)) + " components, formula " +
                             formula.str()};
      }
    }
    return "|decompose| = Irr(k1,k2,n) for every equation";
  }));

  report.checks.push_back(run_check("union", [&] {
    for (const auto& eq : equations) {
      auto joined = PointSet(ctx, limits);
      for (const auto& s : component_sets(eq, ctx, limits)) joined |= s;
      const auto y = solutions(eq, ctx, limits);
      if (!(joined == y)) {
        Point missing;
        y.for_each([&](const Point& p) {
          if (!joined.contains(p)) missing = p;
        });
        throw Counterexample{render(eq) + ": union of components differs from V(eq), e.g. " + point_text(missing)};
      }
    }
    return "union of components = V(eq)";
  }));

  report.checks.push_back(run_check("non-containment", [&] {
    for (const auto& eq : equations) {
      const auto comps = decompose(eq, ctx);
      std::vector<PointSet> sets;
      for (const auto& c : comps) sets.push_back(component_point_set(c, ctx, limits));
      for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto w = witness_point(comps[i], ctx);
        for (std::size_t j = 0; j < comps.size(); ++j) {
          if (i == j) {
            if (!sets[i].contains(w)) {
              throw Counterexample{render(eq) + ", " + sigma_text(comps[i]) + ": witness " + point_text(w) +
                                   " outside its own component"};
            }
            continue;
          }
          if (sets[i].is_subset_of(sets[j]) || sets[j].contains(w)) {
            throw Counterexample{render(eq) + ", " + sigma_text(comps[i]) + " vs " + sigma_text(comps[j]) +
                                 ": witness " + point_text(w) + " does not separate"};
          }
        }
      }
    }
    return "components pairwise incomparable, witnesses separate";
  }));

  report.checks.push_back(run_check("irreducible-components", [&] {
    for (const auto& eq : equations) {
      for (const auto& c : decompose(eq, ctx)) {
        const auto set = component_point_set(c, ctx, limits);
        const auto gamma = coordinate_semilattice(set);
        const std::size_t expected = c.kind() == PermutationKind::first ? n : n - 1;
        if (!is_irreducible(set) || !gamma.is_chain() || gamma.size() != expected) {
          throw Counterexample{render(eq) + ", " + c.chain_notation() + ": coordinate semilattice has " +
                               std::to_string(gamma.size()) + " classes, expected a chain of " +
                               std::to_string(expected)};
        }
      }
    }
    return "each component is irreducible, coordinate semilattice a chain of n or n-1";
  }));

  report.checks.push_back(run_check("brute-force-oracle", [&] {
    const auto family = enumerate_closed_sets(ctx, limits);
    for (const auto& eq : equations) {
      const auto brute = brute_decompose(solutions(eq, ctx, limits), family);
      const auto chains = component_sets(eq, ctx, limits);
      if (brute != chains) {
        throw Counterexample{render(eq) + ": brute force finds " + std::to_string(brute.size()) +
                             " components, chain decomposition " + std::to_string(chains.size())};
      }
    }
    return "chain components = brute-force decomposition (" + std::to_string(family.size()) + " closed sets)";
  }));

  report.checks.push_back(run_check("irreducibility-criteria", [&] {
    const auto family = enumerate_closed_sets(ctx, limits);
    std::size_t compared = 0;
    for (const auto& y : family.sets()) {
      if (y.empty() || y.size() > kMaxCoverPoints) continue;
      if (is_irreducible(y) != is_irreducible_by_cover(y)) {
        throw Counterexample{"closed set with " + std::to_string(y.size()) + " points starting at " +
                             point_text(y.points().front()) + ": criteria disagree"};
      }
      ++compared;
    }
    return "coordinate-semilattice and cover criteria agree on " + std::to_string(compared) + " closed sets";
  }));

  report.checks.push_back(run_check("reversal", [&] {
    for (const auto& eq : equations) {
      if (component_sets(eq, ctx, limits) != component_sets(eq.reversed(), ctx, limits)) {
        throw Counterexample{render(eq) + ": decomposition changes when sides are swapped"};
      }
    }
    return "t = s and s = t decompose identically";
  }));

  report.checks.push_back(run_check("average", [&] {
    if (n < 2) throw GuardViolation("the average is defined for n >= 2");
    const ExactRational observed(ExactInt(report.total_components), ExactInt(report.equations));
    if (avg_irr(n) != avg_irr_by_sum(n) || avg_irr(n) != observed) {
      throw Counterexample{"closed form " + to_fraction(avg_irr(n)) + ", summation " + to_fraction(avg_irr_by_sum(n)) +
                           ", observed " + to_fraction(observed)};
    }
    return "closed form = summation = observed = " + to_fraction(observed);
  }));

  return report;
}

}  // namespace losemilat::cli
