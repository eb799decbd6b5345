#pragma once

#include <string>
#include <utility>
#include <vector>

namespace homcat {

// Labels are opaque strings.  Atom labels (user-supplied or corpus-generated)
// must avoid the structural characters below; composite labels built by the
// kernel wrap atoms in balanced delimiters, so decomposition is unambiguous
// without any parsing: all maps are constructed by zipping enumerations, never
// by reading labels back.
inline constexpr const char* kReservedLabelChars = "(){},;:>|";

bool is_atom_label(const std::string& s);

// "(a,b)"
std::string pair_label(const std::string& a, const std::string& b);
// "l(a)" / "r(a)"  -- coproduct tags
std::string tag_left(const std::string& a);
std::string tag_right(const std::string& a);
// "{a>b;c>d}"  -- finite function, entries pre-sorted by key
std::string fun_label(const std::vector<std::pair<std::string, std::string>>& table);
// "name:detail"
std::string colon_label(const std::string& name, const std::string& detail);

}  // namespace homcat
