#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lakecov/schema.hpp"

namespace lakecov {

// All persisted objects are UTF-8, LF-terminated, tab-separated rows.

std::vector<std::string_view> split_tsv_line(std::string_view line);

// Calls fn(line_number, fields) per non-empty line; line numbers are 1-based.
void for_each_tsv_row(std::string_view bytes,
                      const std::function<void(std::size_t, const std::vector<std::string_view>&)>& fn);

// Lake data file: header = column names, then one row per tuple.
std::string encode_lake_file(const TableSchema& schema, const std::vector<Tuple>& tuples);
std::vector<Tuple> decode_lake_file(const TableSchema& schema, std::string_view bytes);

// Header names of a lake data file.
std::vector<std::string> lake_file_columns(std::string_view bytes);

// Picks the narrowest kind every value of a column parses as, in the order
// Int, Float, Date, Text.
TableSchema infer_schema(std::string_view bytes);

}  // namespace lakecov
