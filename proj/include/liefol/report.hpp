#ifndef LIEFOL_REPORT_HPP
#define LIEFOL_REPORT_HPP

#include <json.hpp>
#include <string>

namespace liefol {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline void render_text(const Json& j, std::string& out, int indent) {
  const std::string pad(2 * static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || v.is_array()) {
        out += pad + k + ":\n";
        render_text(v, out, indent + 1);
      } else {
        out += pad + k + ": " + scalar_text(v) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        out += pad + "-\n";
        render_text(v, out, indent + 1);
      } else {
        out += pad + "- " + scalar_text(v) + "\n";
      }
    }
  } else {
    out += pad + scalar_text(j) + "\n";
  }
}

}  // namespace detail

/// Key-value tree rendering of a report, stable field order, no quoting.
inline std::string report_text(const Json& j) {
  std::string out;
  detail::render_text(j, out, 0);
  return out;
}

}  // namespace liefol

#endif
