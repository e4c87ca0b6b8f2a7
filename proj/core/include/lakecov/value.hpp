#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "lakecov/error.hpp"

namespace lakecov {

enum class ValueKind { Int, Float, Text, Date };

std::string to_string(ValueKind k);
ValueKind value_kind_from_string(const std::string& s);

// Calendar date stored as days since 1970-01-01.
struct Date {
  std::int64_t days = 0;

  friend auto operator<=>(const Date&, const Date&) = default;
};

Date date_from_string(const std::string& iso);  // YYYY-MM-DD
std::string date_to_string(Date d);

// One cell value. Comparisons are defined between values of the same kind
// only; Text orders lexicographically by byte, the rest numerically.
class Value {
 public:
  Value() : v_(std::int64_t{0}) {}

  static Value of_int(std::int64_t i) { return Value(Repr(i)); }
  static Value of_float(double f);  // rejects NaN
  static Value of_text(std::string s);  // rejects tab/newline
  static Value of_date(Date d) { return Value(Repr(d)); }
  static Value of_date(const std::string& iso) { return Value(Repr(date_from_string(iso))); }

  ValueKind kind() const;

  std::int64_t as_int() const { return get<std::int64_t>("Int"); }
  double as_float() const { return get<double>("Float"); }
  const std::string& as_text() const { return get<std::string>("Text"); }
  Date as_date() const { return get<Date>("Date"); }

  // <0, 0, >0; throws TypeError when kinds differ.
  int compare(const Value& other) const;

  bool operator==(const Value& o) const { return compare(o) == 0; }
  bool operator!=(const Value& o) const { return compare(o) != 0; }
  bool operator<(const Value& o) const { return compare(o) < 0; }
  bool operator<=(const Value& o) const { return compare(o) <= 0; }
  bool operator>(const Value& o) const { return compare(o) > 0; }
  bool operator>=(const Value& o) const { return compare(o) >= 0; }

  // Numeric view for selectivity math: Int/Date as their integer, Float as-is.
  // Throws TypeError for Text.
  double numeric() const;

  // Mirror image along the value axis: Int/Float/Date negate. Text has no
  // arithmetic mirror; callers use a reversed comparator instead.
  Value negated() const;

  std::string to_tsv() const;
  static Value from_tsv(ValueKind kind, const std::string& field);

 private:
  using Repr = std::variant<std::int64_t, double, std::string, Date>;
  explicit Value(Repr v) : v_(std::move(v)) {}

  template <class T>
  const T& get(const char* want) const {
    if (const T* p = std::get_if<T>(&v_)) return *p;
    throw TypeError(std::string("value is ") + lakecov::to_string(kind()) + ", wanted " + want);
  }

  Repr v_;
};

}  // namespace lakecov
