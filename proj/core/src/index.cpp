#include "lakecov/index.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "lakecov/tsv.hpp"

namespace lakecov {

bool RootIndex::has_column(const std::string& col) const {
  for (const auto& e : entries_)
    if (e.col == col) return true;
  return false;
}

std::vector<std::string> RootIndex::columns() const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (std::find(out.begin(), out.end(), e.col) == out.end()) out.push_back(e.col);
  return out;
}

std::vector<const RootIndexEntry*> RootIndex::for_column(const std::string& col) const {
  std::vector<const RootIndexEntry*> out;
  for (const auto& e : entries_)
    if (e.col == col) out.push_back(&e);
  return out;
}

std::size_t RootIndex::file_count(const std::string& col) const {
  return for_column(col).size();
}

std::uint64_t RootIndex::total_cnt(const std::string& col) const {
  std::uint64_t n = 0;
  for (const auto* e : for_column(col)) n += e->cnt;
  return n;
}

std::uint64_t RootIndex::total_cntd(const std::string& col) const {
  std::uint64_t n = 0;
  for (const auto* e : for_column(col)) n += e->cntd;
  return n;
}

std::string index_file_key(const std::string& table, const std::string& column,
                           std::size_t part) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "part-%06zu", part);
  return "index/" + table + "/" + column + "/" + buf;
}

std::string root_index_key(const std::string& table) { return "index/" + table + "/_root"; }

namespace {

bool indexable(const Value& v) {
  return v.kind() != ValueKind::Text || !v.as_text().empty();
}

std::vector<IndexEntry> collect_entries(const TableSchema& schema,
                                        const std::vector<const LakeFile*>& files,
                                        const std::string& column) {
  std::size_t col = schema.column_index(column);
  std::vector<IndexEntry> entries;
  for (const auto* f : files)
    for (std::uint32_t r = 0; r < f->tuples.size(); ++r) {
      const Value& v = f->tuples[r].values[col];
      if (indexable(v)) entries.push_back({v, f->key, r});
    }
  std::sort(entries.begin(), entries.end(), [](const IndexEntry& a, const IndexEntry& b) {
    int c = a.value.compare(b.value);
    if (c != 0) return c < 0;
    if (a.file != b.file) return a.file < b.file;
    return a.record < b.record;
  });
  return entries;
}

std::string encode_index_file(const std::vector<IndexEntry>& entries, std::size_t begin,
                              std::size_t end) {
  std::string out = "value\tfile\trecord\n";
  for (std::size_t i = begin; i < end; ++i) {
    out += entries[i].value.to_tsv();
    out += '\t';
    out += entries[i].file;
    out += '\t';
    out += std::to_string(entries[i].record);
    out += '\n';
  }
  return out;
}

std::vector<IndexEntry> decode_index_file(ValueKind kind, std::string_view bytes) {
  std::vector<IndexEntry> entries;
  for_each_tsv_row(bytes, [&](std::size_t lineno, const std::vector<std::string_view>& fields) {
    if (lineno == 1) {
      if (fields.size() != 3 || fields[0] != "value" || fields[1] != "file" ||
          fields[2] != "record")
        throw ParseError("bad index file header");
      return;
    }
    if (fields.size() != 3)
      throw ParseError("index line " + std::to_string(lineno) + ": width mismatch");
    std::uint32_t rec = 0;
    auto r = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), rec);
    if (r.ec != std::errc{} || r.ptr != fields[2].data() + fields[2].size())
      throw ParseError("index line " + std::to_string(lineno) + ": bad record ordinal");
    entries.push_back(
        {Value::from_tsv(kind, std::string(fields[0])), std::string(fields[1]), rec});
  });
  return entries;
}

std::vector<std::size_t> chunk_sizes_for(const std::string& column, std::size_t total,
                                         const IndexBuildOptions& opts) {
  auto it = opts.explicit_chunks.find(column);
  if (it != opts.explicit_chunks.end()) {
    std::size_t sum = 0;
    for (std::size_t s : it->second) {
      if (s == 0) throw ContractError("zero chunk size for column " + column);
      sum += s;
    }
    if (sum != total)
      throw ContractError("explicit chunks for " + column + " sum to " + std::to_string(sum) +
                          ", column has " + std::to_string(total) + " entries");
    return it->second;
  }
  if (opts.entries_per_file == 0) throw ContractError("entries_per_file must be >= 1");
  std::vector<std::size_t> sizes;
  for (std::size_t done = 0; done < total; done += opts.entries_per_file)
    sizes.push_back(std::min(opts.entries_per_file, total - done));
  return sizes;
}

std::uint64_t distinct_count(const std::vector<IndexEntry>& entries, std::size_t begin,
                             std::size_t end) {
  std::uint64_t d = 0;
  for (std::size_t i = begin; i < end; ++i)
    if (i == begin || entries[i].value != entries[i - 1].value) ++d;
  return d;
}

std::string encode_root(const RootIndex& root) {
  std::string out = "col\tfile\tmin\tmax\tcnt\tcntd\n";
  for (const auto& e : root.entries()) {
    out += e.col;
    out += '\t';
    out += e.file;
    out += '\t';
    out += e.min.to_tsv();
    out += '\t';
    out += e.max.to_tsv();
    out += '\t';
    out += std::to_string(e.cnt);
    out += '\t';
    out += std::to_string(e.cntd);
    out += '\n';
  }
  return out;
}

RootIndex decode_root(const TableSchema& schema, std::string_view bytes) {
  RootIndex root;
  for_each_tsv_row(bytes, [&](std::size_t lineno, const std::vector<std::string_view>& fields) {
    if (lineno == 1) {
      if (fields.size() != 6 || fields[0] != "col") throw ParseError("bad root index header");
      return;
    }
    if (fields.size() != 6)
      throw ParseError("root line " + std::to_string(lineno) + ": width mismatch");
    std::string col(fields[0]);
    ValueKind kind = schema.column_kind(col);
    RootIndexEntry e;
    e.col = col;
    e.file = std::string(fields[1]);
    e.min = Value::from_tsv(kind, std::string(fields[2]));
    e.max = Value::from_tsv(kind, std::string(fields[3]));
    e.cnt = std::stoull(std::string(fields[4]));
    e.cntd = std::stoull(std::string(fields[5]));
    root.add(std::move(e));
  });
  return root;
}

// Index the given files into fresh part files starting at first_part.
void index_column(const Lake& lake, const std::vector<const LakeFile*>& files,
                  const std::string& column, const IndexBuildOptions& opts,
                  std::size_t first_part, ObjectStore& store, RootIndex& root) {
  auto entries = collect_entries(lake.schema(), files, column);
  if (entries.empty()) return;
  auto sizes = chunk_sizes_for(column, entries.size(), opts);
  std::size_t begin = 0, part = first_part;
  for (std::size_t size : sizes) {
    std::size_t end = begin + size;
    std::string key = index_file_key(lake.name(), column, part++);
    store.put(key, encode_index_file(entries, begin, end));
    RootIndexEntry e;
    e.col = column;
    e.file = key;
    e.min = entries[begin].value;
    e.max = entries[end - 1].value;
    e.cnt = size;
    e.cntd = distinct_count(entries, begin, end);
    root.add(std::move(e));
    begin = end;
  }
}

}  // namespace

RootIndex build_index(const Lake& lake, const std::vector<std::string>& columns,
                      const IndexBuildOptions& opts, ObjectStore& store) {
  std::vector<const LakeFile*> files;
  for (const auto& f : lake.files()) files.push_back(&f);
  RootIndex root;
  for (const auto& column : columns) {
    if (!lake.schema().has_column(column)) throw NotFoundError("no such column: " + column);
    index_column(lake, files, column, opts, 0, store, root);
  }
  store.put(root_index_key(lake.name()), encode_root(root));
  return root;
}

RootIndex append_to_index(const Lake& lake, const std::vector<LakeFile>& new_files,
                          const std::vector<std::string>& columns, const IndexBuildOptions& opts,
                          ObjectStore& store, RootIndex existing) {
  for (const auto& nf : new_files)
    for (const auto& t : nf.tuples) check_tuple(lake.schema(), t);
  std::vector<const LakeFile*> files;
  for (const auto& f : new_files) files.push_back(&f);
  for (const auto& column : columns) {
    if (!lake.schema().has_column(column)) throw NotFoundError("no such column: " + column);
    // Continue part numbering after the existing files of this column.
    std::size_t first_part = existing.file_count(column);
    index_column(lake, files, column, opts, first_part, store, existing);
  }
  store.put(root_index_key(lake.name()), encode_root(existing));
  return existing;
}

RootIndex append_to_index(const Lake& lake, const std::vector<LakeFile>& new_files,
                          const std::vector<std::string>& columns, const IndexBuildOptions& opts,
                          ObjectStore& store) {
  RootIndex existing = load_root_index(store, lake.name(), lake.schema());
  return append_to_index(lake, new_files, columns, opts, store, std::move(existing));
}

RootIndex load_root_index(const ObjectStore& store, const std::string& table,
                          const TableSchema& schema) {
  return decode_root(schema, store.peek(root_index_key(table)));
}

namespace {

bool range_can_satisfy(Op op, const Value& v, const Value& min, const Value& max) {
  switch (op) {
    case Op::Eq: return min <= v && v <= max;
    case Op::Ne: return true;
    case Op::Gt: return max > v;
    case Op::Ge: return max >= v;
    case Op::Lt: return min < v;
    case Op::Le: return min <= v;
  }
  throw Error("bad Op");
}

}  // namespace

std::vector<std::string> prune_index_files(const Term& term, const RootIndex& root) {
  if (!root.has_column(term.lhs)) throw NotFoundError("column not indexed: " + term.lhs);
  std::vector<std::string> out;
  if (term.rhs_is_column()) {
    if (!root.has_column(term.rhs_column()))
      throw NotFoundError("column not indexed: " + term.rhs_column());
    for (const auto* e : root.for_column(term.lhs)) out.push_back(e->file);
    if (term.rhs_column() != term.lhs)
      for (const auto* e : root.for_column(term.rhs_column())) out.push_back(e->file);
    return out;
  }
  for (const auto* e : root.for_column(term.lhs))
    if (range_can_satisfy(term.op, term.rhs_value(), e->min, e->max)) out.push_back(e->file);
  return out;
}

namespace {

ValueKind column_kind_from_root(const RootIndex& root, const std::string& col) {
  auto files = root.for_column(col);
  if (files.empty()) throw NotFoundError("column not indexed: " + col);
  return files.front()->min.kind();
}

class IndexReader {
 public:
  IndexReader(const RootIndex& root, ObjectStore& store) : root_(root), store_(store) {}

  const std::vector<IndexEntry>& file_entries(const std::string& col, const std::string& key) {
    auto it = loaded_.find(key);
    if (it != loaded_.end()) return it->second;
    auto entries = decode_index_file(column_kind_from_root(root_, col), store_.get(key));
    return loaded_.emplace(key, std::move(entries)).first->second;
  }

  std::vector<const IndexEntry*> whole_column(const std::string& col) {
    std::vector<const IndexEntry*> out;
    for (const auto* e : root_.for_column(col))
      for (const auto& entry : file_entries(col, e->file)) out.push_back(&entry);
    return out;
  }

 private:
  const RootIndex& root_;
  ObjectStore& store_;
  std::map<std::string, std::vector<IndexEntry>> loaded_;
};

void select_value_term(const Term& term, const RootIndex& root, IndexReader& reader,
                       std::set<RecordId>& into) {
  for (const auto& key : prune_index_files(term, root))
    for (const auto& e : reader.file_entries(term.lhs, key))
      if (op_holds(term.op, e.value.compare(term.rhs_value()))) into.insert({e.file, e.record});
}

void select_column_term(const Term& term, const RootIndex& root, IndexReader& reader,
                        std::set<RecordId>& into) {
  // Join the two columns' indexes on record identity, comparing values by op.
  auto left = reader.whole_column(term.lhs);
  std::map<RecordId, const Value*> right;
  for (const auto* e : reader.whole_column(term.rhs_column()))
    right.emplace(RecordId{e->file, e->record}, &e->value);
  for (const auto* e : left) {
    auto it = right.find(RecordId{e->file, e->record});
    if (it != right.end() && op_holds(term.op, e->value.compare(*it->second)))
      into.insert({e->file, e->record});
  }
}

}  // namespace

CoverageSet coverage_by_index(const std::vector<Clause>& clauses, const RootIndex& root,
                              ObjectStore& store, const std::vector<std::string>& universe_files,
                              CoverageTrace* trace) {
  IndexReader reader(root, store);
  std::optional<std::set<RecordId>> acc;
  for (const auto& clause : clauses) {
    std::set<RecordId> clause_set;
    std::vector<std::set<RecordId>> term_sets;
    for (const auto& term : clause) {
      std::set<RecordId> term_set;
      if (term.rhs_is_column())
        select_column_term(term, root, reader, term_set);
      else
        select_value_term(term, root, reader, term_set);
      clause_set.insert(term_set.begin(), term_set.end());
      term_sets.push_back(std::move(term_set));
    }
    if (trace) {
      trace->clause_sets.push_back(clause_set);
      trace->term_sets.push_back(std::move(term_sets));
    }
    if (!acc) {
      acc = std::move(clause_set);
    } else {
      std::set<RecordId> merged;
      for (const auto& r : *acc)
        if (clause_set.contains(r)) merged.insert(r);
      acc = std::move(merged);
    }
  }
  CoverageSet files;
  if (!acc) {
    files.insert(universe_files.begin(), universe_files.end());
    return files;
  }
  for (const auto& r : *acc) files.insert(r.file);
  return files;
}

}  // namespace lakecov
