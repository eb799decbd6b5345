#pragma once

// Shared helpers for the base-operation translation units.  Not installed.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "homcat/base.hpp"

namespace homcat::detail {

inline bool is_setlike(BaseKind k) {
  return k.tag == BaseTag::SetTrivial || k.tag == BaseTag::SetSplit;
}
inline bool is_pointed(BaseKind k) { return k.tag == BaseTag::PointedTrivial; }
inline bool is_cat(BaseKind k) { return k.tag == BaseTag::CatCanonical; }

// Element lists for the non-category payloads.
inline const std::vector<std::string>& elems_of(const VObj& x) {
  if (std::holds_alternative<FinSet>(*x.payload))
    return x.set().elems;
  return x.pointed().elems;
}

inline std::string basepoint_of(const VObj& x) { return x.pointed().basepoint; }

VObj make_set_obj(BaseKind k, std::vector<std::string> elems);
VObj make_pointed_obj(BaseKind k, std::vector<std::string> elems, std::string base);
VObj make_cat_obj(BaseKind k, FinCat c);

// The augmentation of a sliced object as a parent-base map into the unit.
VMap aug_map_of(const VObj& sliced);

// Element-wise map builder for set-like and pointed payloads.
VMap build_elem_map(const VObj& src, const VObj& dst,
                    const std::function<std::string(const std::string&)>& f);
// Functor builder for category payloads.
VMap build_cat_map(const VObj& src, const VObj& dst,
                   const std::function<std::string(const std::string&)>& on_obj,
                   const std::function<std::string(const std::string&)>& on_mor);

// Raises ValidationError unless both objects live over the same base.
void expect_same_kind(const VObj& x, const VObj& y, const char* op);

std::string payload_key(const Payload& p);
std::string action_key(const Action& a);

}  // namespace homcat::detail
