#pragma once

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "bglosa/error.hpp"

// Small CSV helpers shared by the file formats. Fields never contain commas
// or quotes in any of the schemas, so no quoting support is needed.
namespace bglosa::csv {

inline std::vector<std::string> split(const std::string& line, char delim = ',') {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(delim, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  if (!out.empty() && !out.back().empty() && out.back().back() == '\r')
    out.back().pop_back();
  return out;
}

inline double to_double(const std::string& field, const char* what,
                        std::size_t line_no) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0' || errno == ERANGE)
    throw data_error("line " + std::to_string(line_no) + ": bad " + what +
                     " value '" + field + "'");
  return v;
}

inline long long to_int(const std::string& field, const char* what,
                        std::size_t line_no) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(field.c_str(), &end, 10);
  if (end == field.c_str() || *end != '\0' || errno == ERANGE)
    throw data_error("line " + std::to_string(line_no) + ": bad " + what +
                     " value '" + field + "'");
  return v;
}

inline std::string fmt_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

// Compact representation that still round-trips within file tolerances.
inline std::string fmt_compact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace bglosa::csv
