#include "cli.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <losemilat/losemilat.hpp>

#include "verify.hpp"

namespace losemilat::cli {
namespace {

struct Options {
  int l = 0;
  int n = 0;
  bool json = false;
  bool quiet = false;
  bool oracle = false;
  std::uint64_t max_points = Limits{}.max_points;
  std::vector<std::string> constraints;

  Limits limits() const { return Limits{.max_points = max_points}; }
};

std::string point_text(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) out += ',';
    out += "a" + std::to_string(p.coords()[i]);
  }
  return out + ")";
}

std::string sigma_text(const Permutation& sigma) {
  std::string out = "(";
  for (std::size_t i = 0; i < sigma.images().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sigma.images()[i]);
  }
  return out + ")";
}

std::vector<Equation> parse_all(const std::vector<std::string>& texts) {
  std::vector<Equation> eqs;
  for (const auto& t : texts) eqs.push_back(parse_constraint(t));
  return eqs;
}

std::string system_text(const std::vector<Equation>& eqs) {
  std::string out;
  for (const auto& eq : eqs) {
    if (!out.empty()) out += ", ";
    out += render(eq);
  }
  return out;
}

// n defaults to the largest variable index used; an explicit --n may only widen it.
Context make_context(const Options& opt, const std::vector<Equation>& eqs) {
  int used = 1;
  for (const auto& eq : eqs) used = std::max(used, eq.max_var());
  if (opt.n != 0 && opt.n < used) {
    throw ArityError("--n " + std::to_string(opt.n) + " is smaller than the largest variable index x" +
                     std::to_string(used));
  }
  return Context(opt.l, opt.n != 0 ? opt.n : used);
}

void require_chain_regime(const Context& ctx) {
  if (ctx.arity() > ctx.order()) {
    throw UnsupportedRegime("n = " + std::to_string(ctx.arity()) + " exceeds l = " + std::to_string(ctx.order()) +
                            ": the chain decomposition covers only n <= l; the case n > l needs a different "
                            "technique and is not supported");
  }
}

int cmd_solve(const Options& opt, std::ostream& out) {
  const auto eqs = parse_all(opt.constraints);
  const auto ctx = make_context(opt, eqs);
  const auto set = solutions_of_system(eqs, ctx, opt.limits());
  if (opt.json) {
    out << to_json(set).dump() << '\n';
    return kExitOk;
  }
  out << "V(" << system_text(eqs) << ") in L_" << ctx.order() << "^" << ctx.arity() << ": " << set.size()
      << " points\n";
  if (!opt.quiet) set.for_each([&](const Point& p) { out << point_text(p) << '\n'; });
  return kExitOk;
}

int cmd_decompose(const Options& opt, std::ostream& out) {
  const auto eqs = parse_all(opt.constraints);
  if (eqs.size() != 1) throw ParseError("decompose takes exactly one equation", 0);
  const auto& eq = eqs.front();
  const auto ctx = make_context(opt, eqs);
  require_chain_regime(ctx);
  const auto components = decompose(eq, ctx);
  const auto cls = classify(eq);
  const auto formula = irr_formula(KIndex(cls.k1, cls.k2, ctx.arity()));
  const bool materialize = ctx.cube_size() <= opt.max_points;

  if (opt.json) {
    auto list = nlohmann::json::array();
    for (const auto& c : components) {
      auto j = to_json(c);
      const auto w = witness_point(c, ctx);
      j["witness"] = std::vector<int>(w.coords().begin(), w.coords().end());
      if (materialize) j["points"] = component_point_set(c, ctx, opt.limits()).size();
      list.push_back(std::move(j));
    }
    nlohmann::json doc = {{"equation", render(eq)}, {"n", ctx.arity()},        {"l", ctx.order()},
                          {"k1", cls.k1},           {"k2", cls.k2},            {"components", list},
                          {"count", components.size()}, {"formula", formula.str()}};
    out << doc.dump() << '\n';
  } else {
    out << "equation " << render(eq) << ": (k1,k2) = (" << cls.k1 << "," << cls.k2 << "), n = " << ctx.arity()
        << ", l = " << ctx.order() << '\n';
    if (!opt.quiet) {
      std::size_t width = 0;
      for (const auto& c : components) width = std::max(width, c.chain_notation().size());
      std::size_t index = 0;
      for (const auto& c : components) {
        out << "  " << std::setw(3) << ++index << "  kind " << to_string(c.kind()) << "  sigma "
            << sigma_text(c.sigma()) << "  " << std::left << std::setw(static_cast<int>(width))
            << c.chain_notation() << std::right << "  witness " << point_text(witness_point(c, ctx));
        if (materialize) out << "  " << component_point_set(c, ctx, opt.limits()).size() << " points";
        out << '\n';
      }
    }
    out << "components: " << components.size() << ", Irr(" << cls.k1 << "," << cls.k2 << "," << ctx.arity()
        << ") = " << formula.str() << '\n';
  }
  return ExactInt(components.size()) == formula ? kExitOk : kExitVerificationFailed;
}

int cmd_gamma(const Options& opt, std::ostream& out) {
  const auto eqs = parse_all(opt.constraints);
  const auto ctx = make_context(opt, eqs);
  const auto set = solutions_of_system(eqs, ctx, opt.limits());
  const auto gamma = coordinate_semilattice(set);
  const bool irreducible = is_irreducible(set);
  if (opt.json) {
    auto j = to_json(gamma);
    j["irreducible"] = irreducible;
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "Gamma(V(" << system_text(eqs) << ")) over L_" << ctx.order() << "^" << ctx.arity() << ": " << gamma.size()
      << (gamma.size() == 1 ? " class, " : " classes, ") << (gamma.is_chain() ? "a chain" : "not a chain") << ", "
      << (irreducible ? "irreducible" : "reducible") << '\n';
  if (opt.quiet) return kExitOk;
  for (const auto& c : gamma.classes()) {
    out << "  [" << render(c.representative) << "]";
    for (const auto& m : c.members) out << ' ' << render(m);
    out << '\n';
  }
  if (gamma.is_chain()) {
    out << "order:";
    const auto chain = gamma.chain();
    for (std::size_t i = 0; i < chain.size(); ++i) {
      out << (i ? " < " : " ") << '[' << render(gamma.classes()[chain[i]].representative) << ']';
    }
    out << '\n';
  } else {
    out << "order:\n";
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      for (std::size_t j = 0; j < gamma.size(); ++j) {
        if (i != j && gamma.leq(i, j)) {
          out << "  [" << render(gamma.classes()[i].representative) << "] < ["
              << render(gamma.classes()[j].representative) << "]\n";
        }
      }
    }
  }
  return kExitOk;
}

int cmd_table(const Options& opt, std::ostream& out) {
  const Context ctx(opt.l, opt.n);
  require_chain_regime(ctx);
  if (ctx.arity() > 4) throw CapExceeded("table is limited to n <= 4");

  struct Row {
    Equation eq;
    std::vector<ChainComponent> components;
    std::string oracle;
  };
  std::vector<Row> rows;
  std::optional<ClosedSetFamily> family;
  if (opt.oracle) family = enumerate_closed_sets(ctx, opt.limits());
  bool oracle_ok = true;
  std::size_t total = 0;
  for (const auto& eq : enumerate_eq(ctx.arity())) {
    Row row{eq, decompose(eq, ctx), {}};
    total += row.components.size();
    if (family) {
      std::vector<PointSet> chains;
      for (const auto& c : row.components) chains.push_back(component_point_set(c, ctx, opt.limits()));
      std::sort(chains.begin(), chains.end());
      const bool match = brute_decompose(solutions(eq, ctx, opt.limits()), *family) == chains;
      oracle_ok = oracle_ok && match;
      row.oracle = match ? "ok" : "MISMATCH";
    }
    rows.push_back(std::move(row));
  }
  const ExactRational average(ExactInt(total), ExactInt(rows.size()));

  if (opt.json) {
    auto list = nlohmann::json::array();
    for (const auto& r : rows) {
      const auto cls = classify(r.eq);
      auto systems = nlohmann::json::array();
      for (const auto& c : r.components) systems.push_back(c.chain_notation());
      nlohmann::json j = {{"equation", render(r.eq)}, {"k1", cls.k1}, {"k2", cls.k2},
                          {"components", systems},    {"count", r.components.size()}};
      if (family) j["oracle"] = r.oracle;
      list.push_back(std::move(j));
    }
    nlohmann::json doc = {{"n", ctx.arity()},
                          {"l", ctx.order()},
                          {"rows", list},
                          {"equations", rows.size()},
                          {"total_components", total},
                          {"average",
                           {{"num", boost::multiprecision::numerator(average).str()},
                            {"den", boost::multiprecision::denominator(average).str()}}}};
    out << doc.dump() << '\n';
  } else {
    std::vector<std::array<std::string, 4>> cells;
    cells.push_back({"Equation", "Irreducible components", "Number", family ? "Oracle" : ""});
    for (const auto& r : rows) {
      std::string systems;
      for (const auto& c : r.components) systems += (systems.empty() ? "" : " U ") + c.chain_notation();
      cells.push_back({render(r.eq), systems, std::to_string(r.components.size()), r.oracle});
    }
    std::array<std::size_t, 4> width{};
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : cells) {
      out << std::left << std::setw(static_cast<int>(width[0])) << row[0] << " | "
          << std::setw(static_cast<int>(width[1])) << row[1] << " | " << std::right
          << std::setw(static_cast<int>(width[2])) << row[2];
      if (family) out << " | " << row[3];
      out << '\n';
    }
    out << "equations: " << rows.size() << ", components: " << total << ", average " << to_fraction(average)
        << " = " << to_decimal(average) << '\n';
  }
  return oracle_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_stats(const Options& opt, std::ostream& out) {
  const int n = opt.n;
  const auto avg = avg_irr(n);
  if (opt.json) {
    out << stats_json(n).dump() << '\n';
    return kExitOk;
  }
  const auto by_sum = avg_irr_by_sum(n);
  const auto ratio = asymptotic_ratio_exact(n);
  const ExactRational limit(4, 9);
  out << "n = " << n << '\n'
      << "equations: " << eq_total(n).str() << '\n'
      << "average components: " << to_fraction(avg) << " = " << to_decimal(avg) << '\n'
      << "by summation over K_n: " << to_fraction(by_sum) << (by_sum == avg ? " (agrees)" : " (DISAGREES)") << '\n'
      << "average / n!: " << to_decimal(ratio) << " (limit 4/9 = " << to_decimal(limit) << ", difference "
      << to_fraction(ratio - limit) << ")\n";
  return by_sum == avg ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const auto report = run_verification(opt.n, opt.l, opt.limits());
  for (const auto& check : report.checks) {
    if (opt.quiet && check.status != CheckStatus::fail) continue;
    const char* tag = check.status == CheckStatus::pass ? "PASS" : check.status == CheckStatus::fail ? "FAIL" : "SKIP";
    out << tag << "  " << std::left << std::setw(24) << check.name << std::right << "  " << check.detail << '\n';
  }
  out << "components: " << report.total_components << " over " << report.equations << " equations (n = " << opt.n
      << ", l = " << opt.l << ")\n";
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const auto eqs = enumerate_eq(opt.n);
  if (opt.json) {
    auto list = nlohmann::json::array();
    for (const auto& eq : eqs) {
      const auto c = classify(eq);
      list.push_back({{"equation", render(eq)}, {"k1", c.k1}, {"k2", c.k2}});
    }
    out << list.dump() << '\n';
    return kExitOk;
  }
  for (const auto& eq : eqs) {
    const auto c = classify(eq);
    out << render(eq) << "  (" << c.k1 << "," << c.k2 << ")\n";
  }
  if (!opt.quiet) out << eqs.size() << " equations\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equations and irreducible decompositions over linearly ordered semilattices", "losemilat"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Emit JSON");
    sub->add_flag("--quiet", opt.quiet, "Print summaries only");
    sub->add_option("--max-points", opt.max_points, "Enumeration cap on l^n")
        ->envname("LOSEMILAT_MAX_POINTS")
        ->check(CLI::PositiveNumber);
  };
  auto order = [&](CLI::App* sub) {
    sub->add_option("--l", opt.l, "Semilattice order l")->required()->check(CLI::PositiveNumber);
  };
  auto arity = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--n", opt.n, "Number of variables n")->check(CLI::PositiveNumber);
    if (required) o->required();
  };

  auto* solve = app.add_subcommand("solve", "List the solutions of a system of constraints");
  order(solve);
  arity(solve, false);
  common(solve);
  solve->add_option("constraints", opt.constraints, "Constraints such as \"x1x2 = x1x3\" or \"x1 <= x2\"")
      ->required();

  auto* decomp = app.add_subcommand("decompose", "Irreducible components of V(t = s)");
  order(decomp);
  arity(decomp, false);
  common(decomp);
  decomp->add_option("equation", opt.constraints, "Equation t = s")->required();

  auto* gamma = app.add_subcommand("gamma", "Coordinate semilattice of the solution set of a system");
  order(gamma);
  arity(gamma, false);
  common(gamma);
  gamma->add_option("constraints", opt.constraints, "Constraints")->required();

  auto* table = app.add_subcommand("table", "Decompose every equation of Eq(n)");
  order(table);
  arity(table, true);
  common(table);
  table->add_flag("--oracle", opt.oracle, "Cross-check every row against the brute-force decomposition");

  auto* stats = app.add_subcommand("stats", "Average number of irreducible components over Eq(n)");
  arity(stats, true);
  common(stats);

  auto* verify = app.add_subcommand("verify", "Run the invariant suites over Eq(n)");
  order(verify);
  arity(verify, true);
  common(verify);

  auto* enumerate = app.add_subcommand("enumerate", "List Eq(n)");
  arity(enumerate, true);
  common(enumerate);

  std::vector<std::string> argv_storage{"losemilat"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParseError;
  }

  try {
    if (*solve) return cmd_solve(opt, out);
    if (*decomp) return cmd_decompose(opt, out);
    if (*gamma) return cmd_gamma(opt, out);
    if (*table) return cmd_table(opt, out);
    if (*stats) return cmd_stats(opt, out);
    if (*verify) return cmd_verify(opt, out);
    if (*enumerate) return cmd_enumerate(opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const GuardViolation& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const UnsupportedRegime& e) {
    err << "unsupported regime: " << e.what() << '\n';
    return kExitUnsupportedRegime;
  } catch (const UniverseMismatch& e) {
    err << "unsupported regime: " << e.what() << '\n';
    return kExitUnsupportedRegime;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
  return kExitParseError;
}

}  // namespace losemilat::cli
