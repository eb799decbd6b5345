#include <algorithm>

#include "base_detail.hpp"
#include "homcat/labels.hpp"

namespace homcat {

using detail::is_cat;
using detail::is_pointed;
using detail::is_setlike;

std::string BaseKind::name() const {
  std::string n;
  switch (tag) {
    case BaseTag::SetTrivial: n = "set_trivial"; break;
    case BaseTag::SetSplit: n = "set_split"; break;
    case BaseTag::CatCanonical: n = "cat_canonical"; break;
    case BaseTag::PointedTrivial: n = "pointed_trivial"; break;
  }
  if (sliced) n += "/I";
  return n;
}

bool BaseKind::unit_is_terminal() const {
  if (sliced) return true;
  return tag != BaseTag::PointedTrivial;
}

BaseKind base_kind_from_name(const std::string& name) {
  std::string n = name;
  bool sliced = false;
  if (n.size() > 2 && n.substr(n.size() - 2) == "/I") {
    sliced = true;
    n = n.substr(0, n.size() - 2);
  }
  if (n == "set_trivial") return {BaseTag::SetTrivial, sliced};
  if (n == "set_split") return {BaseTag::SetSplit, sliced};
  if (n == "cat_canonical") return {BaseTag::CatCanonical, sliced};
  if (n == "pointed_trivial") return {BaseTag::PointedTrivial, sliced};
  throw ValidationError("unknown base kind '" + name + "'");
}

// ---------------------------------------------------------------------------
// VObj / VMap construction and validation
// ---------------------------------------------------------------------------

namespace {

void validate_payload_shape(BaseKind k, const Payload& p) {
  bool ok = false;
  switch (k.tag) {
    case BaseTag::SetTrivial:
    case BaseTag::SetSplit:
      ok = std::holds_alternative<FinSet>(p);
      break;
    case BaseTag::CatCanonical:
      ok = std::holds_alternative<FinCat>(p);
      break;
    case BaseTag::PointedTrivial:
      ok = std::holds_alternative<FinPointed>(p);
      break;
  }
  if (!ok) throw ValidationError("payload shape does not match base " + k.name());
  if (const auto* c = std::get_if<FinCat>(&p)) c->validate();
}

}  // namespace

VObj VObj::make(BaseKind kind, Payload p) {
  if (kind.sliced)
    throw ValidationError("VObj::make: use make_sliced for sliced bases");
  validate_payload_shape(kind, p);
  VObj o;
  o.kind = kind;
  o.payload = std::make_shared<const Payload>(std::move(p));
  return o;
}

VObj VObj::make_sliced(const VObj& parent_obj, Action aug) {
  if (parent_obj.kind.sliced)
    throw ValidationError("make_sliced: already sliced");
  VObj o;
  o.kind = parent_obj.kind.slice();
  o.payload = parent_obj.payload;
  o.aug = std::make_shared<const Action>(std::move(aug));
  // Validates the augmentation as a parent map into the unit.
  make_vmap(parent_obj, unit_object(parent_obj.kind), *o.aug);
  return o;
}

VObj VObj::underlying() const {
  if (!kind.sliced) return *this;
  VObj o;
  o.kind = kind.parent();
  o.payload = payload;
  return o;
}

bool VObj::operator==(const VObj& o) const {
  if (kind != o.kind) return false;
  if (payload != o.payload && !(*payload == *o.payload)) return false;
  if ((aug == nullptr) != (o.aug == nullptr)) return false;
  if (aug && o.aug && aug != o.aug && !(*aug == *o.aug)) return false;
  return true;
}

namespace detail {

std::string payload_key(const Payload& p) {
  if (const auto* s = std::get_if<FinSet>(&p)) {
    std::string k = "S[";
    for (const auto& e : s->elems) k += e + ",";
    return k + "]";
  }
  if (const auto* s = std::get_if<FinPointed>(&p)) {
    std::string k = "P[" + s->basepoint + "|";
    for (const auto& e : s->elems) k += e + ",";
    return k + "]";
  }
  const auto& c = std::get<FinCat>(p);
  std::string k = "C[";
  for (const auto& o : c.objects) k += o + ",";
  k += "|";
  for (const auto& m : c.mors) k += m.name + ":" + m.src + ">" + m.tgt + ",";
  k += "|";
  for (const auto& [gf, h] : c.comp) k += gf.first + "." + gf.second + "=" + h + ",";
  k += "|";
  for (const auto& [o, id] : c.ident) k += o + ">" + id + ",";
  return k + "]";
}

std::string action_key(const Action& a) {
  if (const auto* e = std::get_if<ElemAction>(&a)) {
    std::vector<std::pair<std::string, std::string>> t(e->table.begin(),
                                                       e->table.end());
    return fun_label(t);
  }
  const auto& c = std::get<CatAction>(a);
  std::vector<std::pair<std::string, std::string>> to(c.omap.begin(), c.omap.end());
  std::vector<std::pair<std::string, std::string>> tm(c.mmap.begin(), c.mmap.end());
  return fun_label(to) + fun_label(tm);
}

}  // namespace detail

std::string VObj::key() const {
  std::string k = kind.name() + ":" + detail::payload_key(*payload);
  if (aug) k += "@" + detail::action_key(*aug);
  return k;
}

bool VMap::operator==(const VMap& o) const {
  return src == o.src && dst == o.dst && action == o.action;
}

std::string VMap::key() const { return detail::action_key(action); }

std::string apply_elem(const Action& a, const std::string& x) {
  const auto& t = std::get<ElemAction>(a).table;
  auto it = t.find(x);
  if (it == t.end()) throw ValidationError("action undefined on '" + x + "'");
  return it->second;
}

std::string apply_obj(const Action& a, const std::string& x) {
  const auto& t = std::get<CatAction>(a).omap;
  auto it = t.find(x);
  if (it == t.end()) throw ValidationError("action undefined on object '" + x + "'");
  return it->second;
}

std::string apply_mor(const Action& a, const std::string& x) {
  const auto& t = std::get<CatAction>(a).mmap;
  auto it = t.find(x);
  if (it == t.end())
    throw ValidationError("action undefined on morphism '" + x + "'");
  return it->second;
}

VMap make_vmap(VObj src, VObj dst, Action action) {
  detail::expect_same_kind(src, dst, "make_vmap");
  const VObj su = src.underlying();
  const VObj du = dst.underlying();
  if (is_setlike(su.kind) || is_pointed(su.kind)) {
    const auto& t = std::get<ElemAction>(action).table;
    const auto& se = detail::elems_of(su);
    if (t.size() != se.size())
      throw ValidationError("map table size != source size");
    for (const auto& e : se) {
      auto it = t.find(e);
      if (it == t.end())
        throw ValidationError("map undefined on element '" + e + "'");
      bool in_dst = is_pointed(su.kind) ? du.pointed().contains(it->second)
                                        : du.set().contains(it->second);
      if (!in_dst)
        throw ValidationError("map image '" + it->second + "' not in target");
    }
    if (is_pointed(su.kind) &&
        t.at(detail::basepoint_of(su)) != detail::basepoint_of(du))
      throw ValidationError("pointed map does not preserve basepoint");
  } else {
    const auto& c = su.cat();
    const auto& d = du.cat();
    const auto& ca = std::get<CatAction>(action);
    FinFunctor f{ca.omap, ca.mmap};
    validate_functor(c, d, f);
  }
  if (src.kind.sliced) {
    // Augmentation compatibility: aug_dst ∘ f = aug_src.
    VMap uf{su, du, action};
    VMap lhs = compose(detail::aug_map_of(dst), uf);
    VMap rhs = detail::aug_map_of(src);
    if (!(lhs.action == rhs.action))
      throw ValidationError("sliced map does not commute with augmentations");
  }
  return VMap{std::move(src), std::move(dst), std::move(action)};
}

VMap underlying_map(const VMap& f) {
  if (!f.src.kind.sliced) return f;
  return VMap{f.src.underlying(), f.dst.underlying(), f.action};
}

VMap identity_map(const VObj& x) {
  const VObj u = x.underlying();
  if (u.is_cat()) {
    FinFunctor f = identity_functor(u.cat());
    return VMap{x, x, CatAction{f.omap, f.mmap}};
  }
  ElemAction a;
  for (const auto& e : detail::elems_of(u)) a.table[e] = e;
  return VMap{x, x, a};
}

VMap compose(const VMap& g, const VMap& f) {
  if (!(f.dst == g.src))
    throw ValidationError("compose: middle objects differ");
  Action out;
  if (const auto* ef = std::get_if<ElemAction>(&f.action)) {
    ElemAction a;
    for (const auto& [k, v] : ef->table) a.table[k] = apply_elem(g.action, v);
    out = a;
  } else {
    const auto& cf = std::get<CatAction>(f.action);
    CatAction a;
    for (const auto& [k, v] : cf.omap) a.omap[k] = apply_obj(g.action, v);
    for (const auto& [k, v] : cf.mmap) a.mmap[k] = apply_mor(g.action, v);
    out = a;
  }
  return VMap{f.src, g.dst, std::move(out)};
}

// ---------------------------------------------------------------------------
// Distinguished objects
// ---------------------------------------------------------------------------

VObj unit_object(BaseKind k) {
  if (k.sliced) {
    VObj pu = unit_object(k.parent());
    return VObj::make_sliced(pu, identity_map(pu).action);
  }
  switch (k.tag) {
    case BaseTag::SetTrivial:
    case BaseTag::SetSplit:
      return VObj::make(k, FinSet::of({"*"}));
    case BaseTag::CatCanonical:
      return VObj::make(k, terminal_category());
    case BaseTag::PointedTrivial:
      return VObj::make(k, FinPointed::of({"*", "e"}, "*"));
  }
  throw InternalError("unreachable");
}

VObj initial_object(BaseKind k) {
  if (k.sliced) {
    VObj pi = initial_object(k.parent());
    VMap to_unit = hom_maps(pi, unit_object(k.parent()), Budget::loose()).at(0);
    return VObj::make_sliced(pi, to_unit.action);
  }
  switch (k.tag) {
    case BaseTag::SetTrivial:
    case BaseTag::SetSplit:
      return VObj::make(k, FinSet::of({}));
    case BaseTag::CatCanonical:
      return VObj::make(k, FinCat{});
    case BaseTag::PointedTrivial:
      return VObj::make(k, FinPointed::of({"*"}, "*"));
  }
  throw InternalError("unreachable");
}

VObj terminal_object(BaseKind k) {
  if (k.sliced) return unit_object(k);
  switch (k.tag) {
    case BaseTag::SetTrivial:
    case BaseTag::SetSplit:
      return VObj::make(k, FinSet::of({"*"}));
    case BaseTag::CatCanonical:
      return VObj::make(k, terminal_category());
    case BaseTag::PointedTrivial:
      return VObj::make(k, FinPointed::of({"*"}, "*"));
  }
  throw InternalError("unreachable");
}

bool is_terminal_object(const VObj& x) {
  if (x.kind.sliced) return is_iso(detail::aug_map_of(x));
  const VObj& u = x;
  if (u.is_cat()) {
    const auto& c = u.cat();
    return c.objects.size() == 1 && c.mors.size() == 1;
  }
  return detail::elems_of(u).size() == 1;
}

// ---------------------------------------------------------------------------
// detail builders
// ---------------------------------------------------------------------------

namespace detail {

VObj make_set_obj(BaseKind k, std::vector<std::string> elems) {
  return VObj::make(k, FinSet::of(std::move(elems)));
}
VObj make_pointed_obj(BaseKind k, std::vector<std::string> elems, std::string base) {
  return VObj::make(k, FinPointed::of(std::move(elems), std::move(base)));
}
VObj make_cat_obj(BaseKind k, FinCat c) { return VObj::make(k, std::move(c)); }

VMap aug_map_of(const VObj& sliced) {
  if (!sliced.kind.sliced || !sliced.aug)
    throw ValidationError("aug_map_of: object is not sliced");
  return VMap{sliced.underlying(), unit_object(sliced.kind.parent()), *sliced.aug};
}

VMap build_elem_map(const VObj& src, const VObj& dst,
                    const std::function<std::string(const std::string&)>& f) {
  ElemAction a;
  for (const auto& e : elems_of(src.underlying())) a.table[e] = f(e);
  return make_vmap(src, dst, a);
}

VMap build_cat_map(const VObj& src, const VObj& dst,
                   const std::function<std::string(const std::string&)>& on_obj,
                   const std::function<std::string(const std::string&)>& on_mor) {
  CatAction a;
  const auto& c = src.underlying().cat();
  for (const auto& o : c.objects) a.omap[o] = on_obj(o);
  for (const auto& m : c.mors) a.mmap[m.name] = on_mor(m.name);
  return make_vmap(src, dst, a);
}

void expect_same_kind(const VObj& x, const VObj& y, const char* op) {
  if (x.kind != y.kind)
    throw ValidationError(std::string(op) + ": base kind mismatch (" +
                          x.kind.name() + " vs " + y.kind.name() + ")");
}

}  // namespace detail

}  // namespace homcat
