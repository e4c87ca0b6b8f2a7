#pragma once

#include <atomic>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "lakecov/coverage.hpp"
#include "lakecov/interval.hpp"
#include "lakecov/rangesearch.hpp"
#include "lakecov/store.hpp"

namespace lakecov {

// ts is the store tick at which coverage was computed; later appends are
// folded in at lookup time, never stored back.
struct CacheEntry {
  IntervalPredicate interval;
  CoverageSet coverage;
  Tick ts = 0;
};

struct PolicyStats {
  double v_min = 0;
  double v_max = 0;
  std::size_t cov_min = 0;
  std::size_t cov_max = 0;
};

enum class PolicyKind { Unlimited, CoverageOptimized, VolumeOptimized, Combined };

std::string to_string(PolicyKind k);
PolicyKind policy_kind_from_string(const std::string& s);

struct EvictionPolicy {
  PolicyKind kind = PolicyKind::Unlimited;
  std::size_t capacity = 0;  // live-entry bound for the bounded kinds
  double w1 = 0.5;           // Combined only; the named kinds pin the weights
  double w2 = 0.5;
  // The printed combined formula rewards big coverage sets, contradicting
  // the stated goal of keeping small ones; we score (cov_max - |X|) instead
  // and keep the printed form reachable for comparison.
  bool literal_coverage_term = false;
};

// Normalized keep-score: higher is kept longer, the minimum is evicted.
// A term with a degenerate denominator contributes 0.
double policy_score(double volume, std::size_t coverage_size, const PolicyStats& stats,
                    double w1, double w2, bool literal_coverage_term = false);

enum class CacheBackend { List, Spatial };

std::string to_string(CacheBackend b);
CacheBackend cache_backend_from_string(const std::string& s);

// Containment cache over interval predicates. The List backend scans every
// entry; Spatial keeps fully-closed intervals as 2m-space points in a
// KD-tree (entries with exclusive bounds fall back to a side list). Float
// columns stay List-only: their strict bounds have no closed normal form.
//
// Writers (put, on_delete) need exclusive access; lookups may run
// concurrently with each other but not with writers.
class CoverageCache {
 public:
  CoverageCache(TableSchema schema, Domains domains, CacheBackend backend,
                EvictionPolicy policy, std::string data_prefix);

  // to_interval over this cache's schema and domains.
  IntervalPredicate make_interval(const CnfPredicate& p) const;

  // Inserts, then evicts down to capacity; the fresh entry competes like any
  // other. False-marked predicates are rejected.
  void put(IntervalPredicate p, CoverageSet coverage, Tick ts);

  // Minimum-cardinality candidate among entries whose interval contains p,
  // each widened by the files created after its timestamp. Ties break on
  // the lexicographically smallest key sequence, so both backends agree.
  std::optional<CoverageSet> get_min_coverage(const IntervalPredicate& p,
                                              ObjectStore& store) const;

  // Drops the file from every coverage set. The hash-map path is the
  // default; the linear path exists to cross-check it.
  void on_delete(const std::string& file_key);
  void set_accelerated_deletes(bool on) { accelerated_deletes_ = on; }

  std::size_t live_entries() const { return live_; }
  std::vector<CacheEntry> snapshot() const;
  std::string dump_tsv() const;

  // Nodes the KD-tree touched in the most recent lookup (0 for List).
  std::size_t last_kd_visited() const { return last_kd_visited_.load(); }

  const TableSchema& schema() const { return schema_; }
  const Domains& domains() const { return domains_; }
  CacheBackend backend() const { return backend_; }
  const EvictionPolicy& policy() const { return policy_; }

 private:
  struct Slot {
    CacheEntry entry;
    double volume = 0;
    bool in_kd = false;
  };

  void check_interval(const IntervalPredicate& p) const;
  std::vector<std::size_t> candidate_slots(const IntervalPredicate& p) const;
  PolicyStats live_stats() const;
  void evict_one();
  void drop_slot(std::size_t idx);

  TableSchema schema_;
  Domains domains_;
  CacheBackend backend_;
  EvictionPolicy policy_;
  std::string data_prefix_;
  std::vector<std::optional<Slot>> slots_;
  std::vector<std::size_t> free_;
  std::size_t live_ = 0;
  std::optional<KdTree> kd_;
  std::set<std::size_t> side_;  // Spatial entries the KD-tree cannot hold
  std::unordered_map<std::string, std::set<std::size_t>> by_file_;
  bool accelerated_deletes_ = true;
  mutable std::atomic<std::size_t> last_kd_visited_ = 0;
};

}  // namespace lakecov
