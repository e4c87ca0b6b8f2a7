#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lakecov/coverage.hpp"
#include "lakecov/lake.hpp"

namespace lakecov {

// (file key, zero-based ordinal within the file).
struct RecordId {
  std::string file;
  std::uint32_t record = 0;

  auto operator<=>(const RecordId&) const = default;
};

struct IndexEntry {
  Value value;
  std::string file;
  std::uint32_t record = 0;
};

struct RootIndexEntry {
  std::string col;
  std::string file;  // index-file key
  Value min;
  Value max;
  std::uint64_t cnt = 0;
  std::uint64_t cntd = 0;
};

// Per-index-file summaries, fully cached in memory; consulting it costs no
// store reads.
class RootIndex {
 public:
  RootIndex() = default;
  explicit RootIndex(std::vector<RootIndexEntry> entries) : entries_(std::move(entries)) {}

  const std::vector<RootIndexEntry>& entries() const { return entries_; }
  void add(RootIndexEntry e) { entries_.push_back(std::move(e)); }

  bool has_column(const std::string& col) const;
  std::vector<std::string> columns() const;  // distinct, in first-seen order
  std::vector<const RootIndexEntry*> for_column(const std::string& col) const;
  std::size_t file_count(const std::string& col) const;
  std::uint64_t total_cnt(const std::string& col) const;
  std::uint64_t total_cntd(const std::string& col) const;

 private:
  std::vector<RootIndexEntry> entries_;
};

struct IndexBuildOptions {
  std::size_t entries_per_file = 1000;
  // Per-column explicit chunk sizes; must sum to the column's entry count.
  // Columns not listed fall back to entries_per_file.
  std::map<std::string, std::vector<std::size_t>> explicit_chunks;
};

std::string index_file_key(const std::string& table, const std::string& column,
                           std::size_t part);
std::string root_index_key(const std::string& table);

// Emits every non-empty value of each column as (value, file, record), sorts
// globally by value, chunks into index files, persists them and the root.
RootIndex build_index(const Lake& lake, const std::vector<std::string>& columns,
                      const IndexBuildOptions& opts, ObjectStore& store);

// Indexes only new_files; existing index files stay untouched, part numbering
// continues, and the persisted root is extended. The first overload reloads
// the persisted root; the second extends a caller-held one.
RootIndex append_to_index(const Lake& lake, const std::vector<LakeFile>& new_files,
                          const std::vector<std::string>& columns, const IndexBuildOptions& opts,
                          ObjectStore& store);
RootIndex append_to_index(const Lake& lake, const std::vector<LakeFile>& new_files,
                          const std::vector<std::string>& columns, const IndexBuildOptions& opts,
                          ObjectStore& store, RootIndex existing);

// Reads the persisted root via non-counting I/O (the root lives in memory).
RootIndex load_root_index(const ObjectStore& store, const std::string& table,
                          const TableSchema& schema);

// Index files whose [min,max] can satisfy the term. Column-column terms and
// != scan the whole column (both columns for the former).
std::vector<std::string> prune_index_files(const Term& term, const RootIndex& root);

// Per-clause record sets before intersection, for callers that want them;
// term_sets holds each term's selection before the within-clause union.
struct CoverageTrace {
  std::vector<std::set<RecordId>> clause_sets;
  std::vector<std::vector<std::set<RecordId>>> term_sets;
};

// Per term, selects (file, record) pairs from pruned index files; unions
// within a clause, intersects across clauses starting from the universe,
// projects to file keys. Each pruned index file costs one get (read once per
// call even when several terms prune it).
CoverageSet coverage_by_index(const std::vector<Clause>& clauses, const RootIndex& root,
                              ObjectStore& store, const std::vector<std::string>& universe_files,
                              CoverageTrace* trace = nullptr);

}  // namespace lakecov
