#include <algorithm>
#include <set>

#include "base_detail.hpp"
#include "homcat/labels.hpp"

namespace homcat {

using detail::elems_of;
using detail::is_cat;
using detail::is_pointed;
using detail::is_setlike;

namespace {

bool elem_injective(const VMap& f) {
  std::set<std::string> seen;
  for (const auto& [k, v] : std::get<ElemAction>(f.action).table)
    if (!seen.insert(v).second) return false;
  return true;
}

bool elem_surjective(const VMap& f) {
  std::set<std::string> image;
  for (const auto& [k, v] : std::get<ElemAction>(f.action).table)
    image.insert(v);
  return image.size() == elems_of(f.dst).size();
}

bool elem_bijective(const VMap& f) {
  return elem_injective(f) && elem_surjective(f);
}

}  // namespace

std::optional<VMap> invert(const VMap& f) {
  const VObj u = f.src.underlying();
  if (!u.is_cat()) {
    if (!elem_bijective(underlying_map(f))) return std::nullopt;
    ElemAction a;
    for (const auto& [k, v] : std::get<ElemAction>(f.action).table) a.table[v] = k;
    return make_vmap(f.dst, f.src, a);
  }
  const auto& ca = std::get<CatAction>(f.action);
  std::set<std::string> oimg, mimg;
  for (const auto& [k, v] : ca.omap) oimg.insert(v);
  for (const auto& [k, v] : ca.mmap) mimg.insert(v);
  if (oimg.size() != f.src.underlying().cat().objects.size() ||
      oimg.size() != f.dst.underlying().cat().objects.size() ||
      mimg.size() != f.src.underlying().cat().mors.size() ||
      mimg.size() != f.dst.underlying().cat().mors.size())
    return std::nullopt;
  CatAction a;
  for (const auto& [k, v] : ca.omap) a.omap[v] = k;
  for (const auto& [k, v] : ca.mmap) a.mmap[v] = k;
  try {
    return make_vmap(f.dst, f.src, a);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

bool is_iso(const VMap& f) { return invert(f).has_value(); }

std::optional<VMap> find_iso(const VObj& x, const VObj& y, const Budget& budget) {
  for (const auto& m : hom_maps(x, y, budget)) {
    budget.charge();
    if (is_iso(m)) return m;
  }
  return std::nullopt;
}

std::optional<VMap> corestrict(const VMap& f, const SubObj& sub) {
  if (!(sub.incl.dst == f.dst)) return std::nullopt;
  const VObj su = sub.obj.underlying();
  if (!su.is_cat()) {
    const auto& t = std::get<ElemAction>(f.action).table;
    for (const auto& [k, v] : t)
      if (!(is_pointed(su.kind) ? su.pointed().contains(v) : su.set().contains(v)))
        return std::nullopt;
    return make_vmap(f.src, sub.obj, f.action);
  }
  const auto& ca = std::get<CatAction>(f.action);
  const FinCat& c = su.cat();
  for (const auto& [k, v] : ca.omap)
    if (!c.has_object(v)) return std::nullopt;
  for (const auto& [k, v] : ca.mmap)
    if (!c.has_mor(v)) return std::nullopt;
  return make_vmap(f.src, sub.obj, f.action);
}

MapClass classify_map(const VMap& f, const Budget& budget) {
  BaseKind k = f.src.kind;
  if (k.sliced) return classify_map(underlying_map(f), budget);
  MapClass mc;
  switch (k.tag) {
    case BaseTag::SetTrivial:
      mc.cofibration = true;
      mc.fibration = true;
      mc.weak_equivalence = elem_bijective(f);
      break;
    case BaseTag::SetSplit:
      // Left class: retracts of coproduct injections, concretely the
      // injections.  Right class: the split epimorphisms, concretely the
      // surjections.  All maps are weak equivalences.
      mc.cofibration = elem_injective(f);
      mc.fibration = elem_surjective(f);
      mc.weak_equivalence = true;
      break;
    case BaseTag::PointedTrivial:
      mc.cofibration = true;
      mc.fibration = true;
      mc.weak_equivalence = elem_bijective(f);
      break;
    case BaseTag::CatCanonical: {
      const auto& ca = std::get<CatAction>(f.action);
      FinFunctor ff{ca.omap, ca.mmap};
      const FinCat& c = f.src.cat();
      const FinCat& d = f.dst.cat();
      mc.cofibration = functor_injective_on_objects(c, ff);
      mc.fibration = functor_is_isofibration(c, d, ff);
      mc.weak_equivalence = find_equivalence(c, d, ff, budget).has_value();
      break;
    }
  }
  return mc;
}

std::optional<VMap> solve_lifting(const VMap& i, const VMap& p, const VMap& u,
                                  const VMap& v, const Budget& budget) {
  // Square: i : X → Y, p : E → B, u : X → E, v : Y → B with p∘u = v∘i.
  if (!(compose(p, u).action == compose(v, i).action))
    throw ValidationError("solve_lifting: square does not commute");
  for (const auto& h : hom_maps(i.dst, p.src, budget)) {
    budget.charge();
    if (compose(h, i).action == u.action && compose(p, h).action == v.action)
      return h;
  }
  return std::nullopt;
}

}  // namespace homcat
