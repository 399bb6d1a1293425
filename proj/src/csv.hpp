#pragma once

#include <string>
#include <string_view>

namespace virality::detail {

// Quotes a CSV field when it contains a separator, quote or line break.
inline std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos)
    return std::string(value);
  std::string out = "\"";
  for (const char ch : value) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace virality::detail
