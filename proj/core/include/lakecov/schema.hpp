#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lakecov/error.hpp"
#include "lakecov/value.hpp"

namespace lakecov {

struct Column {
  std::string name;
  ValueKind kind;
};

// Ordered column list; names unique and non-empty.
class TableSchema {
 public:
  TableSchema() = default;
  explicit TableSchema(std::vector<Column> columns);

  std::size_t width() const { return columns_.size(); }
  const std::vector<Column>& columns() const { return columns_; }
  const Column& column(std::size_t i) const { return columns_.at(i); }

  bool has_column(const std::string& name) const;
  std::size_t column_index(const std::string& name) const;  // throws NotFoundError
  ValueKind column_kind(const std::string& name) const;

 private:
  std::vector<Column> columns_;
};

// One row; values aligned with the schema.
struct Tuple {
  std::vector<Value> values;

  bool operator==(const Tuple& o) const { return values == o.values; }
};

// Throws TypeError unless t matches the schema in width and kinds.
void check_tuple(const TableSchema& schema, const Tuple& t);

}  // namespace lakecov
