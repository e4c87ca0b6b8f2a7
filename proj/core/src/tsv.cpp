#include "lakecov/tsv.hpp"

#include <charconv>
#include <functional>

namespace lakecov {

std::vector<std::string_view> split_tsv_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

void for_each_tsv_row(
    std::string_view bytes,
    const std::function<void(std::size_t, const std::vector<std::string_view>&)>& fn) {
  std::size_t lineno = 0, pos = 0;
  while (pos < bytes.size()) {
    std::size_t nl = bytes.find('\n', pos);
    std::string_view line =
        nl == std::string_view::npos ? bytes.substr(pos) : bytes.substr(pos, nl - pos);
    ++lineno;
    if (!line.empty()) fn(lineno, split_tsv_line(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

std::string encode_lake_file(const TableSchema& schema, const std::vector<Tuple>& tuples) {
  std::string out;
  for (std::size_t i = 0; i < schema.width(); ++i) {
    if (i) out += '\t';
    out += schema.column(i).name;
  }
  out += '\n';
  for (const auto& t : tuples) {
    check_tuple(schema, t);
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      if (i) out += '\t';
      out += t.values[i].to_tsv();
    }
    out += '\n';
  }
  return out;
}

std::vector<Tuple> decode_lake_file(const TableSchema& schema, std::string_view bytes) {
  std::vector<Tuple> out;
  for_each_tsv_row(bytes, [&](std::size_t lineno, const std::vector<std::string_view>& fields) {
    if (lineno == 1) {
      if (fields.size() != schema.width()) throw ParseError("header width mismatch");
      for (std::size_t i = 0; i < fields.size(); ++i)
        if (fields[i] != schema.column(i).name)
          throw ParseError("header column " + std::to_string(i) + " is '" +
                           std::string(fields[i]) + "', expected '" + schema.column(i).name + "'");
      return;
    }
    if (fields.size() != schema.width())
      throw ParseError("line " + std::to_string(lineno) + ": width mismatch");
    Tuple t;
    t.values.reserve(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i)
      t.values.push_back(Value::from_tsv(schema.column(i).kind, std::string(fields[i])));
    out.push_back(std::move(t));
  });
  return out;
}

std::vector<std::string> lake_file_columns(std::string_view bytes) {
  std::vector<std::string> names;
  std::size_t nl = bytes.find('\n');
  std::string_view header = nl == std::string_view::npos ? bytes : bytes.substr(0, nl);
  for (auto f : split_tsv_line(header)) names.emplace_back(f);
  return names;
}

namespace {

bool parses_as_int(std::string_view s) {
  std::int64_t v;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  return r.ec == std::errc{} && r.ptr == s.data() + s.size();
}

bool parses_as_float(std::string_view s) {
  double v;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  return r.ec == std::errc{} && r.ptr == s.data() + s.size();
}

bool parses_as_date(std::string_view s) {
  try {
    date_from_string(std::string(s));
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

}  // namespace

TableSchema infer_schema(std::string_view bytes) {
  auto names = lake_file_columns(bytes);
  if (names.empty() || (names.size() == 1 && names[0].empty()))
    throw ParseError("empty lake file header");
  std::vector<bool> is_int(names.size(), true), is_float(names.size(), true),
      is_date(names.size(), true);
  for_each_tsv_row(bytes, [&](std::size_t lineno, const std::vector<std::string_view>& fields) {
    if (lineno == 1) return;
    if (fields.size() != names.size())
      throw ParseError("line " + std::to_string(lineno) + ": width mismatch");
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (is_int[i] && !parses_as_int(fields[i])) is_int[i] = false;
      if (is_float[i] && !parses_as_float(fields[i])) is_float[i] = false;
      if (is_date[i] && !parses_as_date(fields[i])) is_date[i] = false;
    }
  });
  std::vector<Column> cols;
  for (std::size_t i = 0; i < names.size(); ++i) {
    ValueKind k = is_int[i]    ? ValueKind::Int
                  : is_float[i] ? ValueKind::Float
                  : is_date[i]  ? ValueKind::Date
                                : ValueKind::Text;
    cols.push_back({names[i], k});
  }
  return TableSchema(cols);
}

}  // namespace lakecov
