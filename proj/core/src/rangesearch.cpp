#include "lakecov/rangesearch.hpp"

#include <algorithm>
#include <limits>

namespace lakecov {

namespace {

Value negate_value(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Int:
      if (v.as_int() == std::numeric_limits<std::int64_t>::min())
        throw ContractError("cannot negate the minimum integer");
      return Value::of_int(-v.as_int());
    case ValueKind::Float:
      return Value::of_float(-v.as_float());
    case ValueKind::Date:
      if (v.as_date().days == std::numeric_limits<std::int64_t>::min())
        throw ContractError("cannot negate the minimum date");
      return Value::of_date(Date{-v.as_date().days});
    case ValueKind::Text:
      return v;  // reversed dimension handles the order flip
  }
  throw ContractError("unreachable value kind");
}

// Shared by both mappings: (x1..xm, -y1..-ym).
std::vector<Value> map_closed_interval(const IntervalPredicate& iv) {
  if (iv.is_false) throw ContractError("false interval has no point image");
  if (iv.dims.empty()) throw ContractError("zero-dimensional interval");
  std::vector<Value> coords;
  coords.reserve(iv.dims.size() * 2);
  for (const auto& d : iv.dims) {
    if (!d.lo.inclusive || !d.hi.inclusive)
      throw ContractError("open bound cannot map to a point coordinate");
    coords.push_back(d.lo.value);
  }
  for (const auto& d : iv.dims) coords.push_back(negate_value(d.hi.value));
  return coords;
}

}  // namespace

KdSpec kd_spec_for(const std::vector<ValueKind>& kinds) {
  if (kinds.empty()) throw ContractError("need at least one column kind");
  KdSpec spec;
  spec.reversed.assign(kinds.size() * 2, false);
  for (std::size_t i = 0; i < kinds.size(); ++i)
    if (kinds[i] == ValueKind::Text) spec.reversed[kinds.size() + i] = true;
  return spec;
}

Point2m interval_to_point(const IntervalPredicate& iv, std::size_t payload) {
  return {map_closed_interval(iv), payload};
}

UpperBoundRange query_to_bounds(const IntervalPredicate& iv) {
  return {map_closed_interval(iv)};
}

void KdTree::check_point(const Point2m& p) const {
  if (p.coords.size() != spec_.dims())
    throw ContractError("point dimension does not match the tree");
  if (by_payload_.contains(p.payload))
    throw ContractError("payload already present");
}

std::int32_t KdTree::build_range(std::vector<Point2m>& pts, std::size_t lo, std::size_t hi,
                                 std::size_t depth) {
  if (lo >= hi) return -1;
  std::size_t dim = depth % spec_.dims();
  std::size_t mid = lo + (hi - lo) / 2;
  std::nth_element(pts.begin() + lo, pts.begin() + mid, pts.begin() + hi,
                   [&](const Point2m& a, const Point2m& b) {
                     return compare_dim(a.coords[dim], b.coords[dim], dim) < 0;
                   });
  auto idx = std::int32_t(nodes_.size());
  nodes_.push_back({std::move(pts[mid]), -1, -1, false});
  by_payload_.emplace(nodes_[idx].pt.payload, idx);
  std::int32_t left = build_range(pts, lo, mid, depth + 1);
  std::int32_t right = build_range(pts, mid + 1, hi, depth + 1);
  nodes_[idx].left = left;
  nodes_[idx].right = right;
  return idx;
}

void KdTree::bulk_build(std::vector<Point2m> pts) {
  nodes_.clear();
  by_payload_.clear();
  root_ = -1;
  live_ = 0;
  for (const auto& p : pts) {
    if (p.coords.size() != spec_.dims())
      throw ContractError("point dimension does not match the tree");
  }
  nodes_.reserve(pts.size());
  root_ = build_range(pts, 0, pts.size(), 0);
  if (by_payload_.size() != pts.size()) {
    nodes_.clear();
    by_payload_.clear();
    root_ = -1;
    throw ContractError("duplicate payloads in bulk build");
  }
  live_ = pts.size();
}

void KdTree::insert(Point2m p) {
  check_point(p);
  auto idx = std::int32_t(nodes_.size());
  if (root_ == -1) {
    by_payload_.emplace(p.payload, idx);
    nodes_.push_back({std::move(p), -1, -1, false});
    root_ = idx;
    ++live_;
    return;
  }
  std::int32_t cur = root_;
  std::size_t depth = 0;
  while (true) {
    std::size_t dim = depth % spec_.dims();
    int c = compare_dim(p.coords[dim], nodes_[cur].pt.coords[dim], dim);
    std::int32_t& next = c < 0 ? nodes_[cur].left : nodes_[cur].right;
    if (next == -1) {
      next = idx;
      break;
    }
    cur = next;
    ++depth;
  }
  by_payload_.emplace(p.payload, idx);
  nodes_.push_back({std::move(p), -1, -1, false});
  ++live_;
}

bool KdTree::remove(std::size_t payload) {
  auto it = by_payload_.find(payload);
  if (it == by_payload_.end()) return false;
  nodes_[it->second].dead = true;
  by_payload_.erase(it);
  --live_;
  maybe_rebuild();
  return true;
}

void KdTree::maybe_rebuild() {
  std::size_t dead = nodes_.size() - live_;
  if (dead * 4 <= nodes_.size()) return;
  std::vector<Point2m> alive;
  alive.reserve(live_);
  for (auto& n : nodes_)
    if (!n.dead) alive.push_back(std::move(n.pt));
  bulk_build(std::move(alive));
}

std::vector<std::size_t> KdTree::range_search(const UpperBoundRange& b,
                                              std::size_t* visited) const {
  if (b.bounds.size() != spec_.dims())
    throw ContractError("bound dimension does not match the tree");
  std::vector<std::size_t> out;
  std::size_t seen = 0;
  std::vector<std::pair<std::int32_t, std::size_t>> stack;
  if (root_ != -1) stack.push_back({root_, 0});
  while (!stack.empty()) {
    auto [idx, depth] = stack.back();
    stack.pop_back();
    const Node& n = nodes_[idx];
    ++seen;
    if (!n.dead) {
      bool inside = true;
      for (std::size_t d = 0; d < spec_.dims() && inside; ++d)
        inside = compare_dim(n.pt.coords[d], b.bounds[d], d) <= 0;
      if (inside) out.push_back(n.pt.payload);
    }
    std::size_t dim = depth % spec_.dims();
    if (n.left != -1) stack.push_back({n.left, depth + 1});
    // Right holds coordinates at or above this node's; nothing there can fit
    // once the node itself exceeds the bound.
    if (n.right != -1 && compare_dim(n.pt.coords[dim], b.bounds[dim], dim) <= 0)
      stack.push_back({n.right, depth + 1});
  }
  if (visited) *visited = seen;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lakecov
