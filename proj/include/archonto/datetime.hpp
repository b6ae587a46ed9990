// Copyright 2026 The ArchOnto Migration Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// xsd:dateTime lexical checks and widening of partial archival dates.
// Calendar arithmetic is proleptic Gregorian for all years.

#ifndef ARCHONTO_DATETIME_HPP_
#define ARCHONTO_DATETIME_HPP_

#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "archonto/text.hpp"

namespace archonto {

constexpr bool is_leap_year(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

constexpr int days_in_month(int year, int month) {
  constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) return 0;
  return month == 2 && is_leap_year(year) ? 29 : kDays[month - 1];
}

namespace detail {

inline bool read_digits(std::string_view s, std::size_t pos, std::size_t count, int& out) {
  if (pos + count > s.size()) return false;
  int value = 0;
  for (std::size_t i = pos; i < pos + count; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    value = value * 10 + (s[i] - '0');
  }
  out = value;
  return true;
}

inline std::string format_datetime(int year, int month, int day, int hour, int minute,
                                   int second) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d", year, month, day, hour,
                minute, second);
  return buf;
}

}  // namespace detail

// True iff `text` is exactly YYYY-MM-DDThh:mm:ss and names a real instant.
inline bool validate_datetime(std::string_view text) {
  if (text.size() != 19 || text[4] != '-' || text[7] != '-' || text[10] != 'T' ||
      text[13] != ':' || text[16] != ':') {
    return false;
  }
  int year, month, day, hour, minute, second;
  if (!detail::read_digits(text, 0, 4, year) || !detail::read_digits(text, 5, 2, month) ||
      !detail::read_digits(text, 8, 2, day) || !detail::read_digits(text, 11, 2, hour) ||
      !detail::read_digits(text, 14, 2, minute) || !detail::read_digits(text, 17, 2, second)) {
    return false;
  }
  if (month < 1 || month > 12) return false;
  if (day < 1 || day > days_in_month(year, month)) return false;
  return hour < 24 && minute < 60 && second < 60;
}

enum class DateBound { kStart, kEnd };

// Widens YYYY, YYYY-MM or YYYY-MM-DD to the first (kStart) or last (kEnd)
// second of the period. Full dateTime values pass through when valid.
// Returns nullopt for anything else.
inline std::optional<std::string> widen_date(std::string_view raw, DateBound bound) {
  const auto text = trim(raw);
  int year = 0, month = 0, day = 0;
  const bool start = bound == DateBound::kStart;
  if (text.size() == 19) {
    if (!validate_datetime(text)) return std::nullopt;
    return std::string(text);
  }
  if (!detail::read_digits(text, 0, 4, year)) return std::nullopt;
  if (text.size() == 4) {
    return start ? detail::format_datetime(year, 1, 1, 0, 0, 0)
                 : detail::format_datetime(year, 12, 31, 23, 59, 59);
  }
  if (text.size() < 7 || text[4] != '-' || !detail::read_digits(text, 5, 2, month) ||
      month < 1 || month > 12) {
    return std::nullopt;
  }
  if (text.size() == 7) {
    return start ? detail::format_datetime(year, month, 1, 0, 0, 0)
                 : detail::format_datetime(year, month, days_in_month(year, month), 23, 59, 59);
  }
  if (text.size() != 10 || text[7] != '-' || !detail::read_digits(text, 8, 2, day) || day < 1 ||
      day > days_in_month(year, month)) {
    return std::nullopt;
  }
  return start ? detail::format_datetime(year, month, day, 0, 0, 0)
               : detail::format_datetime(year, month, day, 23, 59, 59);
}

}  // namespace archonto

#endif  // ARCHONTO_DATETIME_HPP_
