#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lakecov/interval.hpp"

namespace lakecov {

// Image of an m-dimensional closed interval in 2m-space: the m lower ends
// followed by the m negated upper ends. payload is an opaque entry handle.
struct Point2m {
  std::vector<Value> coords;
  std::size_t payload = 0;
};

// Per-dimension upper bounds; each dimension's range is (-inf, bound].
struct UpperBoundRange {
  std::vector<Value> bounds;
};

// Dimension layout of the 2m-space. A reversed dimension orders descending,
// which stands in for negation on kinds that have none (Text).
struct KdSpec {
  std::vector<bool> reversed;

  std::size_t dims() const { return reversed.size(); }
};

// kinds describes the m source columns; the 2m-space reverses the upper-end
// dimension of every Text column and leaves the rest in natural order.
KdSpec kd_spec_for(const std::vector<ValueKind>& kinds);

// Both mappings require every dimension closed (inclusive on both ends);
// intervals that reach the structure have been normalized that way.
Point2m interval_to_point(const IntervalPredicate& iv, std::size_t payload);
UpperBoundRange query_to_bounds(const IntervalPredicate& iv);

// KD-tree over 2m-space answering dominance queries: all points whose every
// coordinate is at most the bound. Splitting dimension cycles with depth;
// equal coordinates go right. Deletion tombstones the node and rebuilds the
// whole tree once tombstones exceed a quarter of it.
class KdTree {
 public:
  explicit KdTree(KdSpec spec) : spec_(std::move(spec)) {
    if (spec_.dims() == 0) throw ContractError("kd-tree needs at least one dimension");
  }

  void bulk_build(std::vector<Point2m> pts);
  void insert(Point2m p);
  bool remove(std::size_t payload);

  // Sorted payloads of matching live points; visited (when given) receives
  // the number of nodes the search touched.
  std::vector<std::size_t> range_search(const UpperBoundRange& b,
                                        std::size_t* visited = nullptr) const;

  std::size_t size() const { return live_; }
  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    Point2m pt;
    std::int32_t left = -1;
    std::int32_t right = -1;
    bool dead = false;
  };

  int compare_dim(const Value& a, const Value& b, std::size_t dim) const {
    int c = a.compare(b);
    return spec_.reversed[dim] ? -c : c;
  }

  void check_point(const Point2m& p) const;
  std::int32_t build_range(std::vector<Point2m>& pts, std::size_t lo, std::size_t hi,
                           std::size_t depth);
  void maybe_rebuild();

  KdSpec spec_;
  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
  std::size_t live_ = 0;
  std::unordered_map<std::size_t, std::int32_t> by_payload_;
};

}  // namespace lakecov
