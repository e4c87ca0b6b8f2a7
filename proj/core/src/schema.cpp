#include "lakecov/schema.hpp"

#include <unordered_set>

namespace lakecov {

TableSchema::TableSchema(std::vector<Column> columns) : columns_(std::move(columns)) {
  std::unordered_set<std::string> seen;
  for (const auto& c : columns_) {
    if (c.name.empty()) throw TypeError("empty column name");
    if (!seen.insert(c.name).second) throw TypeError("duplicate column name: " + c.name);
  }
}

bool TableSchema::has_column(const std::string& name) const {
  for (const auto& c : columns_)
    if (c.name == name) return true;
  return false;
}

std::size_t TableSchema::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i].name == name) return i;
  throw NotFoundError("no such column: " + name);
}

ValueKind TableSchema::column_kind(const std::string& name) const {
  return columns_[column_index(name)].kind;
}

void check_tuple(const TableSchema& schema, const Tuple& t) {
  if (t.values.size() != schema.width())
    throw TypeError("tuple width " + std::to_string(t.values.size()) + " != schema width " +
                    std::to_string(schema.width()));
  for (std::size_t i = 0; i < t.values.size(); ++i)
    if (t.values[i].kind() != schema.column(i).kind)
      throw TypeError("column " + schema.column(i).name + " expects " +
                      to_string(schema.column(i).kind) + ", got " +
                      to_string(t.values[i].kind()));
}

}  // namespace lakecov
