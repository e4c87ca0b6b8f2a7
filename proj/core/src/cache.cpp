#include "lakecov/cache.hpp"

#include <algorithm>
#include <cmath>

namespace lakecov {

std::string to_string(PolicyKind k) {
  switch (k) {
    case PolicyKind::Unlimited: return "unlimited";
    case PolicyKind::CoverageOptimized: return "coverage";
    case PolicyKind::VolumeOptimized: return "volume";
    case PolicyKind::Combined: return "combined";
  }
  throw ContractError("unreachable policy kind");
}

PolicyKind policy_kind_from_string(const std::string& s) {
  if (s == "unlimited") return PolicyKind::Unlimited;
  if (s == "coverage") return PolicyKind::CoverageOptimized;
  if (s == "volume") return PolicyKind::VolumeOptimized;
  if (s == "combined") return PolicyKind::Combined;
  throw ParseError("unknown policy: " + s);
}

std::string to_string(CacheBackend b) {
  return b == CacheBackend::List ? "list" : "spatial";
}

CacheBackend cache_backend_from_string(const std::string& s) {
  if (s == "list") return CacheBackend::List;
  if (s == "spatial") return CacheBackend::Spatial;
  throw ParseError("unknown backend: " + s);
}

double policy_score(double volume, std::size_t coverage_size, const PolicyStats& stats,
                    double w1, double w2, bool literal_coverage_term) {
  double g = 0;
  if (stats.v_max > stats.v_min) g += w1 * (volume - stats.v_min) / (stats.v_max - stats.v_min);
  if (stats.cov_max > stats.cov_min) {
    double span = double(stats.cov_max - stats.cov_min);
    double num = literal_coverage_term ? double(coverage_size) - double(stats.cov_min)
                                       : double(stats.cov_max) - double(coverage_size);
    g += w2 * num / span;
  }
  return g;
}

namespace {

bool all_closed(const IntervalPredicate& p) {
  for (const auto& d : p.dims)
    if (!d.lo.inclusive || !d.hi.inclusive) return false;
  return true;
}

EvictionPolicy normalize_policy(EvictionPolicy p) {
  switch (p.kind) {
    case PolicyKind::Unlimited:
      return p;
    case PolicyKind::CoverageOptimized:
      p.w1 = 0;
      p.w2 = 1;
      break;
    case PolicyKind::VolumeOptimized:
      p.w1 = 1;
      p.w2 = 0;
      break;
    case PolicyKind::Combined:
      if (p.w1 < 0 || p.w2 < 0 || std::abs(p.w1 + p.w2 - 1.0) > 1e-9)
        throw ContractError("combined weights must be non-negative and sum to 1");
      break;
  }
  if (p.capacity < 1) throw ContractError("bounded policy needs capacity of at least 1");
  return p;
}

}  // namespace

CoverageCache::CoverageCache(TableSchema schema, Domains domains, CacheBackend backend,
                             EvictionPolicy policy, std::string data_prefix)
    : schema_(std::move(schema)),
      domains_(check_domains(schema_, std::move(domains))),
      backend_(backend),
      policy_(normalize_policy(policy)),
      data_prefix_(std::move(data_prefix)) {
  if (backend_ == CacheBackend::Spatial) {
    std::vector<ValueKind> kinds;
    for (const auto& c : schema_.columns()) {
      if (c.kind == ValueKind::Float)
        throw ContractError("float column " + c.name + " needs the List backend");
      kinds.push_back(c.kind);
    }
    kd_.emplace(kd_spec_for(kinds));
  }
}

IntervalPredicate CoverageCache::make_interval(const CnfPredicate& p) const {
  return to_interval(p, schema_, domains_);
}

void CoverageCache::check_interval(const IntervalPredicate& p) const {
  if (p.dims.size() != schema_.width())
    throw ContractError("interval does not span the schema");
  for (std::size_t i = 0; i < p.dims.size(); ++i) {
    ValueKind k = schema_.columns()[i].kind;
    if (p.dims[i].lo.value.kind() != k || p.dims[i].hi.value.kind() != k)
      throw TypeError("interval kind mismatch on column " + schema_.columns()[i].name);
  }
}

void CoverageCache::put(IntervalPredicate p, CoverageSet coverage, Tick ts) {
  if (p.is_false) throw ContractError("false predicate has nothing to cache");
  check_interval(p);
  std::size_t idx;
  if (!free_.empty()) {
    idx = free_.back();
    free_.pop_back();
  } else {
    idx = slots_.size();
    slots_.emplace_back();
  }
  Slot slot;
  slot.volume = interval_volume(p);
  slot.entry = {std::move(p), std::move(coverage), ts};
  if (backend_ == CacheBackend::Spatial) {
    if (all_closed(slot.entry.interval)) {
      kd_->insert(interval_to_point(slot.entry.interval, idx));
      slot.in_kd = true;
    } else {
      side_.insert(idx);
    }
  }
  for (const auto& f : slot.entry.coverage) by_file_[f].insert(idx);
  slots_[idx] = std::move(slot);
  ++live_;
  if (policy_.kind != PolicyKind::Unlimited)
    while (live_ > policy_.capacity) evict_one();
}

std::vector<std::size_t> CoverageCache::candidate_slots(const IntervalPredicate& p) const {
  std::vector<std::size_t> out;
  if (backend_ == CacheBackend::List || p.is_false) {
    last_kd_visited_.store(0);
    for (std::size_t i = 0; i < slots_.size(); ++i)
      if (slots_[i] && contains_interval(p, slots_[i]->entry.interval)) out.push_back(i);
    return out;
  }
  // KD part: all stored points are fully closed, so comparing against the
  // query's bound values alone matches the flag-aware containment test.
  IntervalPredicate hull = p;
  for (auto& d : hull.dims) {
    d.lo.inclusive = true;
    d.hi.inclusive = true;
  }
  std::size_t seen = 0;
  for (std::size_t idx : kd_->range_search(query_to_bounds(hull), &seen))
    if (contains_interval(p, slots_[idx]->entry.interval)) out.push_back(idx);
  last_kd_visited_.store(seen);
  for (std::size_t idx : side_)
    if (contains_interval(p, slots_[idx]->entry.interval)) out.push_back(idx);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CoverageSet> CoverageCache::get_min_coverage(const IntervalPredicate& p,
                                                           ObjectStore& store) const {
  if (!p.is_false) check_interval(p);
  std::optional<CoverageSet> best;
  for (std::size_t idx : candidate_slots(p)) {
    const CacheEntry& e = slots_[idx]->entry;
    CoverageSet cand = e.coverage;
    for (auto& key : store.files_created_after(data_prefix_, e.ts)) cand.insert(std::move(key));
    bool take = !best;
    if (!take && cand.size() != best->size()) take = cand.size() < best->size();
    if (!take && cand.size() == best->size())
      take = std::lexicographical_compare(cand.begin(), cand.end(), best->begin(), best->end());
    if (take) best = std::move(cand);
  }
  return best;
}

void CoverageCache::on_delete(const std::string& file_key) {
  if (accelerated_deletes_) {
    auto it = by_file_.find(file_key);
    if (it == by_file_.end()) return;
    for (std::size_t idx : it->second) slots_[idx]->entry.coverage.erase(file_key);
    by_file_.erase(it);
    return;
  }
  for (auto& slot : slots_)
    if (slot) slot->entry.coverage.erase(file_key);
  by_file_.erase(file_key);
}

PolicyStats CoverageCache::live_stats() const {
  PolicyStats s;
  bool first = true;
  for (const auto& slot : slots_) {
    if (!slot) continue;
    std::size_t cov = slot->entry.coverage.size();
    if (first) {
      s = {slot->volume, slot->volume, cov, cov};
      first = false;
      continue;
    }
    s.v_min = std::min(s.v_min, slot->volume);
    s.v_max = std::max(s.v_max, slot->volume);
    s.cov_min = std::min(s.cov_min, cov);
    s.cov_max = std::max(s.cov_max, cov);
  }
  return s;
}

void CoverageCache::evict_one() {
  // Scores are normalized against the live population, so they shift with
  // every insert or evict; recomputing here beats maintaining a heap of
  // stale keys at the capacities this cache runs at.
  PolicyStats stats = live_stats();
  std::size_t victim = SIZE_MAX;
  double victim_score = 0;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (!slots_[i]) continue;
    double score = policy_score(slots_[i]->volume, slots_[i]->entry.coverage.size(), stats,
                                policy_.w1, policy_.w2, policy_.literal_coverage_term);
    if (victim == SIZE_MAX || score < victim_score) {
      victim = i;
      victim_score = score;
    }
  }
  if (victim != SIZE_MAX) drop_slot(victim);
}

void CoverageCache::drop_slot(std::size_t idx) {
  Slot& slot = *slots_[idx];
  if (backend_ == CacheBackend::Spatial) {
    if (slot.in_kd)
      kd_->remove(idx);
    else
      side_.erase(idx);
  }
  for (const auto& f : slot.entry.coverage) {
    auto it = by_file_.find(f);
    if (it != by_file_.end()) {
      it->second.erase(idx);
      if (it->second.empty()) by_file_.erase(it);
    }
  }
  slots_[idx].reset();
  free_.push_back(idx);
  --live_;
}

std::vector<CacheEntry> CoverageCache::snapshot() const {
  std::vector<CacheEntry> out;
  for (const auto& slot : slots_)
    if (slot) out.push_back(slot->entry);
  return out;
}

std::string CoverageCache::dump_tsv() const {
  std::string out = "interval\tcoverage\tts\n";
  for (const auto& slot : slots_) {
    if (!slot) continue;
    out += interval_to_text(slot->entry.interval);
    out += "\t";
    bool first = true;
    for (const auto& f : slot->entry.coverage) {
      if (!first) out += ",";
      out += f;
      first = false;
    }
    out += "\t";
    out += std::to_string(slot->entry.ts);
    out += "\n";
  }
  return out;
}

}  // namespace lakecov
