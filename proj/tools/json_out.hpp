#pragma once

// Serialises an ordered_json tree with every floating-point number printed
// as %.17g, so values round-trip exactly and output is stable across runs.

#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace hzn_cli {

using Json = nlohmann::ordered_json;

inline void dump_number(std::string& out, double x) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
  // Keep floats recognisable as floats.
  if (out.find_first_of(".eEn", out.size() - std::char_traits<char>::length(buf)) == std::string::npos) out += ".0";
}

inline void dump_to(std::string& out, const Json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(k).dump();
        out += indent < 0 ? ":" : ": ";
        dump_to(out, v, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump_to(out, v, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: dump_number(out, j.get<double>()); return;
    default: out += j.dump(); return;
  }
}

inline std::string dump(const Json& j, int indent = 2) {
  std::string out;
  dump_to(out, j, indent, 0);
  return out;
}

}  // namespace hzn_cli
