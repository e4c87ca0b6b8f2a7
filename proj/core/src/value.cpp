#include "lakecov/value.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>

namespace lakecov {

std::string to_string(ValueKind k) {
  switch (k) {
    case ValueKind::Int: return "Int";
    case ValueKind::Float: return "Float";
    case ValueKind::Text: return "Text";
    case ValueKind::Date: return "Date";
  }
  throw Error("bad ValueKind");
}

ValueKind value_kind_from_string(const std::string& s) {
  if (s == "Int") return ValueKind::Int;
  if (s == "Float") return ValueKind::Float;
  if (s == "Text") return ValueKind::Text;
  if (s == "Date") return ValueKind::Date;
  throw ParseError("unknown value kind: " + s);
}

Date date_from_string(const std::string& iso) {
  int y = 0, m = 0, d = 0;
  char tail = 0;
  if (std::sscanf(iso.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) != 3)
    throw ParseError("bad date: " + iso);
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                  std::chrono::day{unsigned(d)}};
  if (!ymd.ok()) throw ParseError("bad date: " + iso);
  return Date{std::chrono::sys_days{ymd}.time_since_epoch().count()};
}

std::string date_to_string(Date d) {
  std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{d.days}}};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(ymd.year()), unsigned(ymd.month()),
                unsigned(ymd.day()));
  return buf;
}

Value Value::of_float(double f) {
  if (std::isnan(f)) throw TypeError("NaN rejected");
  return Value(Repr(f));
}

Value Value::of_text(std::string s) {
  if (s.find('\t') != std::string::npos || s.find('\n') != std::string::npos)
    throw TypeError("text value may not contain tab or newline");
  return Value(Repr(std::move(s)));
}

ValueKind Value::kind() const {
  switch (v_.index()) {
    case 0: return ValueKind::Int;
    case 1: return ValueKind::Float;
    case 2: return ValueKind::Text;
    default: return ValueKind::Date;
  }
}

int Value::compare(const Value& other) const {
  if (kind() != other.kind())
    throw TypeError("cannot compare " + lakecov::to_string(kind()) + " with " +
                    lakecov::to_string(other.kind()));
  switch (kind()) {
    case ValueKind::Int: {
      auto a = as_int(), b = other.as_int();
      return a < b ? -1 : a > b ? 1 : 0;
    }
    case ValueKind::Float: {
      auto a = as_float(), b = other.as_float();
      return a < b ? -1 : a > b ? 1 : 0;
    }
    case ValueKind::Text:
      return as_text().compare(other.as_text()) < 0   ? -1
             : as_text().compare(other.as_text()) > 0 ? 1
                                                      : 0;
    case ValueKind::Date: {
      auto a = as_date().days, b = other.as_date().days;
      return a < b ? -1 : a > b ? 1 : 0;
    }
  }
  throw Error("bad ValueKind");
}

double Value::numeric() const {
  switch (kind()) {
    case ValueKind::Int: return double(as_int());
    case ValueKind::Float: return as_float();
    case ValueKind::Date: return double(as_date().days);
    case ValueKind::Text: throw TypeError("Text has no numeric view");
  }
  throw Error("bad ValueKind");
}

Value Value::negated() const {
  switch (kind()) {
    case ValueKind::Int: return of_int(-as_int());
    case ValueKind::Float: return of_float(-as_float());
    case ValueKind::Date: return of_date(Date{-as_date().days});
    case ValueKind::Text: throw TypeError("Text has no arithmetic mirror");
  }
  throw Error("bad ValueKind");
}

std::string Value::to_tsv() const {
  switch (kind()) {
    case ValueKind::Int: return std::to_string(as_int());
    case ValueKind::Float: {
      char buf[64];
      auto r = std::to_chars(buf, buf + sizeof buf, as_float());
      return std::string(buf, r.ptr);
    }
    case ValueKind::Text: return as_text();
    case ValueKind::Date: return date_to_string(as_date());
  }
  throw Error("bad ValueKind");
}

Value Value::from_tsv(ValueKind kind, const std::string& field) {
  switch (kind) {
    case ValueKind::Int: {
      std::int64_t i = 0;
      auto r = std::from_chars(field.data(), field.data() + field.size(), i);
      if (r.ec != std::errc{} || r.ptr != field.data() + field.size())
        throw ParseError("bad Int field: " + field);
      return of_int(i);
    }
    case ValueKind::Float: {
      double f = 0;
      auto r = std::from_chars(field.data(), field.data() + field.size(), f);
      if (r.ec != std::errc{} || r.ptr != field.data() + field.size())
        throw ParseError("bad Float field: " + field);
      return of_float(f);
    }
    case ValueKind::Text: return of_text(field);
    case ValueKind::Date: return of_date(field);
  }
  throw Error("bad ValueKind");
}

}  // namespace lakecov
