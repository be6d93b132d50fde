#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <mutex>
#include <string>

#include "bglosa/error.hpp"

namespace bglosa {

enum class Weekday {
  monday = 0,
  tuesday,
  wednesday,
  thursday,
  friday,
  saturday,
  sunday
};

struct CivilDateTime {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31
  int hour = 0;
  int minute = 0;
  double second = 0.0;
};

// Days since 1970-01-01 for a proleptic Gregorian date (Howard Hinnant's
// days_from_civil).
constexpr std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy =
      (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
      static_cast<unsigned>(d) - 1u;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

constexpr void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
  y = static_cast<int>(yy + (m <= 2));
}

// 1970-01-01 was a Thursday.
constexpr Weekday weekday_from_days(std::int64_t days) {
  std::int64_t w = (days + 3) % 7;
  if (w < 0) w += 7;
  return static_cast<Weekday>(w);
}

inline Weekday weekday_of(const CivilDateTime& c) {
  return weekday_from_days(days_from_civil(c.year, c.month, c.day));
}

inline bool is_weekend(Weekday w) {
  return w == Weekday::saturday || w == Weekday::sunday;
}

// Local-time conversion. UTC and fixed offsets are pure arithmetic; IANA
// names go through the system tz database (glibc), serialized behind a
// process-wide lock because TZ is global state.
class TimeZone {
 public:
  TimeZone() = default;

  static TimeZone utc() { return TimeZone(); }

  static TimeZone fixed_offset(int offset_minutes) {
    TimeZone tz;
    tz.offset_min_ = offset_minutes;
    return tz;
  }

  // Accepts "UTC", "UTC+1", "UTC+01:30", "+02:00", "-05:30" or an IANA name
  // such as "Europe/Rome".
  static TimeZone parse(const std::string& spec) {
    if (spec.empty() || spec == "UTC" || spec == "utc" || spec == "Z")
      return utc();
    std::string rest = spec;
    if (rest.rfind("UTC", 0) == 0) rest = rest.substr(3);
    if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
      int sign = rest[0] == '-' ? -1 : 1;
      int hh = 0, mm = 0;
      int fields = std::sscanf(rest.c_str() + 1, "%d:%d", &hh, &mm);
      if (fields < 1 || hh > 18 || mm > 59)
        throw config_error("invalid timezone offset: " + spec);
      return fixed_offset(sign * (hh * 60 + mm));
    }
    if (spec.find('/') == std::string::npos)
      throw config_error("unknown timezone: " + spec);
    TimeZone tz;
    tz.iana_name_ = spec;
    tz.probe_iana();
    return tz;
  }

  std::string name() const {
    if (!iana_name_.empty()) return iana_name_;
    if (offset_min_ == 0) return "UTC";
    char buf[16];
    int off = offset_min_;
    char sign = off < 0 ? '-' : '+';
    if (off < 0) off = -off;
    std::snprintf(buf, sizeof(buf), "UTC%c%02d:%02d", sign, off / 60, off % 60);
    return buf;
  }

  CivilDateTime to_civil(std::int64_t epoch_ms) const {
    std::int64_t sec = floor_div(epoch_ms, 1000);
    double frac = static_cast<double>(epoch_ms - sec * 1000) / 1000.0;
    CivilDateTime c;
    if (iana_name_.empty()) {
      std::int64_t local = sec + static_cast<std::int64_t>(offset_min_) * 60;
      std::int64_t days = floor_div(local, 86400);
      std::int64_t rem = local - days * 86400;
      civil_from_days(days, c.year, c.month, c.day);
      c.hour = static_cast<int>(rem / 3600);
      c.minute = static_cast<int>((rem % 3600) / 60);
      c.second = static_cast<double>(rem % 60) + frac;
      return c;
    }
    std::tm tm{};
    with_tz_env([&] {
      time_t t = static_cast<time_t>(sec);
      localtime_r(&t, &tm);
    });
    c.year = tm.tm_year + 1900;
    c.month = tm.tm_mon + 1;
    c.day = tm.tm_mday;
    c.hour = tm.tm_hour;
    c.minute = tm.tm_min;
    c.second = tm.tm_sec + frac;
    return c;
  }

  std::int64_t to_epoch_ms(const CivilDateTime& c) const {
    double whole_sec = 0.0;
    double frac = std::modf(c.second, &whole_sec);
    std::int64_t ms_frac = static_cast<std::int64_t>(std::llround(frac * 1000.0));
    if (iana_name_.empty()) {
      std::int64_t days = days_from_civil(c.year, c.month, c.day);
      std::int64_t sec = days * 86400 + c.hour * 3600 + c.minute * 60 +
                         static_cast<std::int64_t>(whole_sec) -
                         static_cast<std::int64_t>(offset_min_) * 60;
      return sec * 1000 + ms_frac;
    }
    std::tm tm{};
    tm.tm_year = c.year - 1900;
    tm.tm_mon = c.month - 1;
    tm.tm_mday = c.day;
    tm.tm_hour = c.hour;
    tm.tm_min = c.minute;
    tm.tm_sec = static_cast<int>(whole_sec);
    tm.tm_isdst = -1;
    time_t t = 0;
    with_tz_env([&] { t = std::mktime(&tm); });
    if (t == static_cast<time_t>(-1))
      throw config_error("cannot convert civil time in zone " + iana_name_);
    return static_cast<std::int64_t>(t) * 1000 + ms_frac;
  }

 private:
  static constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }

  void probe_iana() const {
    // Fail fast on unknown names: glibc silently falls back to UTC, so check
    // that the zone file exists.
    std::string path = "/usr/share/zoneinfo/" + iana_name_;
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw config_error("timezone not found in tz database: " + iana_name_);
    std::fclose(f);
  }

  template <typename Fn>
  void with_tz_env(Fn&& fn) const {
    static std::mutex mu;
    static std::string active_tz;
    std::lock_guard<std::mutex> lock(mu);
    if (active_tz != iana_name_) {
      setenv("TZ", iana_name_.c_str(), 1);
      tzset();
      active_tz = iana_name_;
    }
    fn();
  }

  int offset_min_ = 0;
  std::string iana_name_;  // empty = fixed offset
};

}  // namespace bglosa
