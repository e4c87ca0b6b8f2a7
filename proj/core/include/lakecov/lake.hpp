#pragma once

#include <string>
#include <vector>

#include "lakecov/schema.hpp"
#include "lakecov/store.hpp"

namespace lakecov {

inline std::string table_data_prefix(const std::string& table) {
  return "data/" + table + "/";
}

// One immutable partition of a table.
struct LakeFile {
  std::string key;
  Tick created_at = 0;
  std::vector<Tuple> tuples;
};

// A table as a set of files; files_ kept sorted by key, keys unique.
class Lake {
 public:
  Lake() = default;
  Lake(std::string name, TableSchema schema) : name_(std::move(name)), schema_(std::move(schema)) {}

  const std::string& name() const { return name_; }
  const TableSchema& schema() const { return schema_; }
  const std::vector<LakeFile>& files() const { return files_; }

  std::string data_prefix() const { return table_data_prefix(name_); }

  void add_file(LakeFile f);
  const LakeFile* find(const std::string& key) const;
  std::vector<LakeFile>& mutable_files() { return files_; }

  std::vector<std::string> file_keys() const;
  std::size_t total_rows() const;

 private:
  std::string name_;
  TableSchema schema_;
  std::vector<LakeFile> files_;
};

// Encodes every file as TSV and puts it; updates created_at ticks in place.
void persist_lake(Lake& lake, ObjectStore& store);

// Rebuilds a Lake from the store (schema inferred from the persisted rows).
// Uses non-counting reads; this is setup plumbing, not query work.
Lake load_lake(const ObjectStore& store, const std::string& table);

}  // namespace lakecov
