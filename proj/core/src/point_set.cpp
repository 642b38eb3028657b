#include "losemilat/point_set.hpp"

#include <string>

#include "losemilat/error.hpp"

namespace losemilat {
namespace {

std::uint64_t checked_cube_size(const Context& ctx, const Limits& limits) {
  const auto size = ctx.cube_size();
  if (size > limits.max_points) {
    throw CapExceeded("L_" + std::to_string(ctx.order()) + "^" + std::to_string(ctx.arity()) + " has " +
                      (size == UINT64_MAX ? std::string("more than 2^64") : std::to_string(size)) +
                      " points, above the enumeration cap of " + std::to_string(limits.max_points));
  }
  return size;
}

}  // namespace

PointSet::PointSet(const Context& ctx, const Limits& limits)
    : ctx_(ctx), bits_(static_cast<std::size_t>(checked_cube_size(ctx, limits))) {}

PointSet PointSet::full(const Context& ctx, const Limits& limits) {
  PointSet s(ctx, limits);
  s.bits_.set();
  return s;
}

PointSet PointSet::of(const Context& ctx, const std::vector<Point>& points, const Limits& limits) {
  PointSet s(ctx, limits);
  for (const auto& p : points) s.insert(p);
  return s;
}

std::uint64_t PointSet::index_of(const Point& p) const {
  p.validate(ctx_);
  std::uint64_t index = 0;
  for (int c : p.coords()) index = index * static_cast<std::uint64_t>(ctx_.order()) + static_cast<std::uint64_t>(c - 1);
  return index;
}

Point PointSet::point_at(std::uint64_t index) const {
  std::vector<int> coords(static_cast<std::size_t>(ctx_.arity()));
  const auto l = static_cast<std::uint64_t>(ctx_.order());
  for (auto it = coords.rbegin(); it != coords.rend(); ++it) {
    *it = static_cast<int>(index % l) + 1;
    index /= l;
  }
  return Point(std::move(coords));
}

bool PointSet::contains(const Point& p) const { return bits_.test(index_of(p)); }

void PointSet::insert(const Point& p) { bits_.set(index_of(p)); }

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for_each([&](const Point& p) { out.push_back(p); });
  return out;
}

void PointSet::for_each(const std::function<void(const Point&)>& fn) const {
  for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i)) fn(point_at(i));
}

bool PointSet::is_subset_of(const PointSet& other) const {
  require_same_context(other);
  return bits_.is_subset_of(other.bits_);
}

bool PointSet::is_proper_subset_of(const PointSet& other) const {
  require_same_context(other);
  return bits_.is_proper_subset_of(other.bits_);
}

PointSet& PointSet::operator&=(const PointSet& other) {
  require_same_context(other);
  bits_ &= other.bits_;
  return *this;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  require_same_context(other);
  bits_ |= other.bits_;
  return *this;
}

void PointSet::require_same_context(const PointSet& other) const {
  if (!(ctx_ == other.ctx_)) throw ContextError("point sets belong to different contexts");
}

void for_each_cube_point(const Context& ctx, const std::function<void(std::uint64_t, std::span<const int>)>& fn) {
  const auto n = static_cast<std::size_t>(ctx.arity());
  const int l = ctx.order();
  std::vector<int> coords(n, 1);
  const auto total = ctx.cube_size();
  for (std::uint64_t index = 0; index < total; ++index) {
    fn(index, coords);
    for (std::size_t i = n; i-- > 0;) {
      if (++coords[i] <= l) break;
      coords[i] = 1;
    }
  }
}

}  // namespace losemilat
