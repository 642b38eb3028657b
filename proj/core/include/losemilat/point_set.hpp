#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "losemilat/semilattice.hpp"

namespace losemilat {

/// Enumeration limits. Exceeding one raises CapExceeded; results are never truncated.
struct Limits {
  std::uint64_t max_points = 10'000'000;
  std::size_t max_family = 1'000'000;
};

/// A subset of L_l^n stored as a bitmap over the cube. Point (p_1, ..., p_n) has
/// index sum (p_i - 1) * l^(n-i), so index order is lexicographic point order.
class PointSet {
 public:
  /// The empty subset of the cube. Throws CapExceeded if l^n exceeds limits.max_points.
  explicit PointSet(const Context& ctx, const Limits& limits = {});

  static PointSet full(const Context& ctx, const Limits& limits = {});
  static PointSet of(const Context& ctx, const std::vector<Point>& points, const Limits& limits = {});

  const Context& context() const noexcept { return ctx_; }

  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  std::uint64_t cube_size() const noexcept { return bits_.size(); }

  bool contains(const Point& p) const;
  void insert(const Point& p);

  bool test_index(std::uint64_t index) const { return bits_.test(index); }
  void set_index(std::uint64_t index, bool value = true) { bits_.set(index, value); }

  std::uint64_t index_of(const Point& p) const;
  Point point_at(std::uint64_t index) const;

  /// Members in lexicographic order.
  std::vector<Point> points() const;
  void for_each(const std::function<void(const Point&)>& fn) const;

  bool is_subset_of(const PointSet& other) const;
  bool is_proper_subset_of(const PointSet& other) const;

  PointSet& operator&=(const PointSet& other);
  PointSet& operator|=(const PointSet& other);
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.ctx_ == b.ctx_ && a.bits_ == b.bits_; }
  /// Arbitrary strict total order on sets of one context, for sorted containers.
  friend bool operator<(const PointSet& a, const PointSet& b) { return a.bits_ < b.bits_; }

  const boost::dynamic_bitset<std::uint64_t>& bits() const noexcept { return bits_; }

 private:
  void require_same_context(const PointSet& other) const;

  Context ctx_;
  boost::dynamic_bitset<std::uint64_t> bits_;
};

/// Solution sets of systems and the closed sets of the closure operator are both
/// represented as plain point sets.
using AlgebraicSet = PointSet;

/// Calls fn(index, coords) for every point of L_l^n in lexicographic order.
void for_each_cube_point(const Context& ctx, const std::function<void(std::uint64_t, std::span<const int>)>& fn);

}  // namespace losemilat
