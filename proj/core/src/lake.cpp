#include "lakecov/lake.hpp"

#include <algorithm>

#include "lakecov/tsv.hpp"

namespace lakecov {

void Lake::add_file(LakeFile f) {
  for (const auto& t : f.tuples) check_tuple(schema_, t);
  auto it = std::lower_bound(files_.begin(), files_.end(), f.key,
                             [](const LakeFile& a, const std::string& k) { return a.key < k; });
  if (it != files_.end() && it->key == f.key) throw ContractError("duplicate file key: " + f.key);
  files_.insert(it, std::move(f));
}

const LakeFile* Lake::find(const std::string& key) const {
  auto it = std::lower_bound(files_.begin(), files_.end(), key,
                             [](const LakeFile& a, const std::string& k) { return a.key < k; });
  return it != files_.end() && it->key == key ? &*it : nullptr;
}

std::vector<std::string> Lake::file_keys() const {
  std::vector<std::string> keys;
  keys.reserve(files_.size());
  for (const auto& f : files_) keys.push_back(f.key);
  return keys;
}

std::size_t Lake::total_rows() const {
  std::size_t n = 0;
  for (const auto& f : files_) n += f.tuples.size();
  return n;
}

void persist_lake(Lake& lake, ObjectStore& store) {
  for (auto& f : lake.mutable_files())
    f.created_at = store.put(f.key, encode_lake_file(lake.schema(), f.tuples));
}

Lake load_lake(const ObjectStore& store, const std::string& table) {
  std::string prefix = table_data_prefix(table);
  auto keys = store.list(prefix);
  if (keys.empty()) throw NotFoundError("no data files under " + prefix);
  TableSchema schema = infer_schema(store.peek(keys.front()));
  // Later files may widen a column's kind (e.g. an all-Int sample in file one,
  // floats in file two); settle kinds over every file first.
  for (std::size_t i = 1; i < keys.size(); ++i) {
    TableSchema s = infer_schema(store.peek(keys[i]));
    if (s.width() != schema.width()) throw ParseError("inconsistent width across lake files");
    std::vector<Column> merged;
    for (std::size_t c = 0; c < schema.width(); ++c) {
      const Column& a = schema.column(c);
      const Column& b = s.column(c);
      if (a.name != b.name) throw ParseError("inconsistent headers across lake files");
      ValueKind k = a.kind;
      if (a.kind != b.kind) {
        if ((a.kind == ValueKind::Int && b.kind == ValueKind::Float) ||
            (a.kind == ValueKind::Float && b.kind == ValueKind::Int))
          k = ValueKind::Float;
        else
          k = ValueKind::Text;
      }
      merged.push_back({a.name, k});
    }
    schema = TableSchema(merged);
  }
  Lake lake(table, schema);
  for (const auto& key : keys) {
    LakeFile f;
    f.key = key;
    f.tuples = decode_lake_file(schema, store.peek(key));
    lake.add_file(std::move(f));
  }
  return lake;
}

}  // namespace lakecov
