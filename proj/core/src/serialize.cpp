#include "losemilat/serialize.hpp"

#include "losemilat/counting.hpp"
#include "losemilat/error.hpp"
#include "losemilat/parser.hpp"

namespace losemilat {

nlohmann::json to_json(const PointSet& set) {
  auto out = nlohmann::json::array();
  set.for_each([&](const Point& p) { out.push_back(std::vector<int>(p.coords().begin(), p.coords().end())); });
  return out;
}

nlohmann::json to_json(const ChainComponent& component) {
  return {{"sigma", component.sigma().images()},
          {"kind", static_cast<int>(component.kind())},
          {"constraints", component.rendered_constraints()}};
}

nlohmann::json to_json(const CoordinateSemilattice& gamma) {
  auto classes = nlohmann::json::array();
  for (const auto& c : gamma.classes()) {
    auto members = nlohmann::json::array();
    for (const auto& t : c.members) members.push_back(render(t));
    classes.push_back({{"representative", render(c.representative)}, {"members", members}});
  }
  auto order = nlohmann::json::array();
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      if (i != j && gamma.leq(i, j)) order.push_back({i, j});
    }
  }
  return {{"classes", classes}, {"leq", order}, {"chain", gamma.is_chain()}};
}

nlohmann::json stats_json(int n) {
  const auto avg = avg_irr(n);
  return {{"n", n},
          {"avg_irr",
           {{"num", boost::multiprecision::numerator(avg).str()},
            {"den", boost::multiprecision::denominator(avg).str()}}},
          {"decimal", to_decimal(avg, 12)},
          {"total_equations", eq_total(n).str()}};
}

PointSet point_set_from_json(const nlohmann::json& j, const Context& ctx, const Limits& limits) {
  if (!j.is_array()) throw ContextError("point set JSON must be an array of points");
  PointSet out(ctx, limits);
  for (const auto& p : j) {
    if (!p.is_array()) throw ContextError("each point must be an array of element indices");
    std::vector<int> coords;
    for (const auto& c : p) {
      if (!c.is_number_integer()) throw ContextError("element indices must be integers");
      coords.push_back(c.get<int>());
    }
    out.insert(Point(std::move(coords)));
  }
  return out;
}

}  // namespace losemilat
