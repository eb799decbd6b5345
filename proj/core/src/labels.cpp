#include "homcat/labels.hpp"

#include <cstring>

namespace homcat {

bool is_atom_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::strchr(kReservedLabelChars, c) != nullptr) return false;
    if (c == ' ' || c == '\t' || c == '\n') return false;
  }
  return true;
}

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

std::string tag_left(const std::string& a) { return "l(" + a + ")"; }
std::string tag_right(const std::string& a) { return "r(" + a + ")"; }

std::string fun_label(const std::vector<std::pair<std::string, std::string>>& table) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : table) {
    if (!first) out += ";";
    first = false;
    out += k;
    out += ">";
    out += v;
  }
  out += "}";
  return out;
}

std::string colon_label(const std::string& name, const std::string& detail) {
  return name + ":" + detail;
}

}  // namespace homcat
