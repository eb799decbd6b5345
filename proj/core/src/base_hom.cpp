#include <algorithm>
#include <map>
#include <mutex>

#include "base_detail.hpp"
#include "homcat/labels.hpp"

namespace homcat {

using detail::aug_map_of;
using detail::basepoint_of;
using detail::elems_of;
using detail::is_cat;
using detail::is_pointed;
using detail::is_setlike;
using detail::make_cat_obj;
using detail::make_pointed_obj;
using detail::make_set_obj;

namespace {

// The element of the unit whose j-image is the identity; "*" for the
// cartesian bases, the non-base point for S0.
std::string unit_generic_point(BaseKind k) {
  return is_pointed(k) ? "e" : "*";
}

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base + 1) return cap + 1;
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Functor-category data (CatCanonical internal hom), deterministically
// labelled:  functors "f<i>", transformations "n(f<i>>f<j>;<k>)".
// ---------------------------------------------------------------------------

struct FunctorCategoryData {
  std::vector<FinFunctor> functors;  // sorted by content
  std::vector<std::string> flabels;
  std::map<std::string, std::size_t> findex;
  struct NT {
    std::size_t fi, gi;
    FinNat components;
  };
  std::map<std::string, NT> nts;  // label -> data
  FinCat cat;

  std::size_t index_of_functor(const FinFunctor& f) const {
    for (std::size_t i = 0; i < functors.size(); ++i)
      if (functors[i] == f) return i;
    throw InternalError("functor not in functor category");
  }
};

std::string pad4(std::size_t n) {
  std::string s = std::to_string(n);
  while (s.size() < 4) s = "0" + s;
  return s;
}

std::string functor_content_key(const FinFunctor& f) {
  std::vector<std::pair<std::string, std::string>> o(f.omap.begin(), f.omap.end());
  std::vector<std::pair<std::string, std::string>> m(f.mmap.begin(), f.mmap.end());
  return fun_label(o) + fun_label(m);
}

std::string nat_content_key(const FinNat& n) {
  std::vector<std::pair<std::string, std::string>> t(n.begin(), n.end());
  return fun_label(t);
}

FunctorCategoryData build_functor_category(const FinCat& x, const FinCat& y,
                                           const Budget& budget) {
  FunctorCategoryData d;
  d.functors = enumerate_functors(x, y, budget);
  std::sort(d.functors.begin(), d.functors.end(),
            [](const FinFunctor& a, const FinFunctor& b) {
              return functor_content_key(a) < functor_content_key(b);
            });
  budget.check_hom(d.functors.size(), "functor category objects");
  if (d.functors.size() >= 10000)
    throw BudgetError("functor category too large for labelling scheme");
  for (std::size_t i = 0; i < d.functors.size(); ++i) {
    d.flabels.push_back("f" + pad4(i));
    d.findex[d.flabels.back()] = i;
    d.cat.objects.push_back(d.flabels.back());
  }
  std::size_t total_nts = 0;
  for (std::size_t i = 0; i < d.functors.size(); ++i)
    for (std::size_t j = 0; j < d.functors.size(); ++j) {
      auto nats = enumerate_naturals(x, y, d.functors[i], d.functors[j], budget);
      std::sort(nats.begin(), nats.end(), [](const FinNat& a, const FinNat& b) {
        return nat_content_key(a) < nat_content_key(b);
      });
      for (std::size_t k = 0; k < nats.size(); ++k) {
        std::string label = "n(" + d.flabels[i] + ">" + d.flabels[j] + ";" +
                            pad4(k) + ")";
        d.nts[label] = {i, j, nats[k]};
        d.cat.mors.push_back({label, d.flabels[i], d.flabels[j]});
        ++total_nts;
        budget.check_hom(total_nts, "functor category morphisms");
      }
    }
  std::sort(d.cat.mors.begin(), d.cat.mors.end(),
            [](const FinMor& a, const FinMor& b) { return a.name < b.name; });
  // Identities.
  for (std::size_t i = 0; i < d.functors.size(); ++i) {
    FinNat idnt;
    for (const auto& o : x.objects)
      idnt[o] = y.ident.at(d.functors[i].omap.at(o));
    for (const auto& [label, nt] : d.nts)
      if (nt.fi == i && nt.gi == i && nt.components == idnt) {
        d.cat.ident[d.flabels[i]] = label;
        break;
      }
    if (!d.cat.ident.count(d.flabels[i]))
      throw InternalError("identity transformation not found");
  }
  // Vertical composition.
  // Index NTs by (fi, gi, content) for lookup.
  std::map<std::tuple<std::size_t, std::size_t, std::string>, std::string> lookup;
  for (const auto& [label, nt] : d.nts)
    lookup[{nt.fi, nt.gi, nat_content_key(nt.components)}] = label;
  for (const auto& [l2, b] : d.nts)
    for (const auto& [l1, a] : d.nts) {
      if (a.gi != b.fi) continue;
      FinNat comp;
      for (const auto& o : x.objects)
        comp[o] = y.compose(b.components.at(o), a.components.at(o));
      auto it = lookup.find({a.fi, b.gi, nat_content_key(comp)});
      if (it == lookup.end())
        throw InternalError("vertical composite escaped enumeration");
      d.cat.comp[{l2, l1}] = it->second;
    }
  d.cat.validate();
  return d;
}

// ---------------------------------------------------------------------------
// Shared enumeration worker: all maps x→y with the element label each one
// carries inside [x,y], sorted by label.  Cached (pure, deterministic).
// ---------------------------------------------------------------------------

using LabelledHom = std::vector<std::pair<std::string, VMap>>;

LabelledHom enumerate_hom_labelled(const VObj& x, const VObj& y,
                                   const Budget& budget);

std::mutex g_hom_cache_mutex;
std::map<std::pair<std::string, std::string>, LabelledHom> g_hom_cache;

LabelledHom enumerate_hom_labelled_uncached(const VObj& x, const VObj& y,
                                            const Budget& budget) {
  detail::expect_same_kind(x, y, "hom enumeration");
  BaseKind k = x.kind;
  LabelledHom out;
  if (k.sliced) {
    // Maps over V/I are the parent maps commuting with the augmentations;
    // their element label inside the pullback hom is paired with the unit
    // point selecting the identity fibre.
    LabelledHom parent =
        enumerate_hom_labelled(x.underlying(), y.underlying(), budget);
    std::string w = unit_generic_point(k.parent());
    VMap ax = aug_map_of(x), ay = aug_map_of(y);
    for (const auto& [label, f] : parent) {
      if (!(compose(ay, f).action == ax.action)) continue;
      out.push_back({pair_label(w, label), make_vmap(x, y, f.action)});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }
  if (is_setlike(k) || is_pointed(k)) {
    std::vector<std::string> dom;
    std::string fixed_base;
    if (is_pointed(k)) {
      for (const auto& e : elems_of(x))
        if (e != basepoint_of(x)) dom.push_back(e);
      fixed_base = basepoint_of(x);
    } else {
      dom = elems_of(x);
    }
    const auto& cod = elems_of(y);
    std::size_t count = checked_pow(cod.size(), dom.size(), budget.max_hom);
    if (dom.empty()) count = 1;
    budget.check_hom(count, "map enumeration " + std::to_string(cod.size()) +
                                "^" + std::to_string(dom.size()));
    if (!dom.empty() && cod.empty()) return out;  // no maps
    std::vector<std::size_t> idx(dom.size(), 0);
    while (true) {
      budget.charge();
      ElemAction a;
      if (is_pointed(k)) a.table[fixed_base] = basepoint_of(y);
      for (std::size_t i = 0; i < dom.size(); ++i) a.table[dom[i]] = cod[idx[i]];
      std::vector<std::pair<std::string, std::string>> t(a.table.begin(),
                                                         a.table.end());
      out.push_back({fun_label(t), make_vmap(x, y, a)});
      std::size_t i = dom.size();
      while (i > 0 && ++idx[i - 1] == cod.size()) idx[--i] = 0;
      if (dom.empty() || i == 0) break;
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }
  // Categories: functor category labels.
  FunctorCategoryData d = build_functor_category(x.cat(), y.cat(), budget);
  for (std::size_t i = 0; i < d.functors.size(); ++i) {
    CatAction a{d.functors[i].omap, d.functors[i].mmap};
    out.push_back({d.flabels[i], make_vmap(x, y, a)});
  }
  return out;  // already sorted by construction
}

LabelledHom enumerate_hom_labelled(const VObj& x, const VObj& y,
                                   const Budget& budget) {
  std::pair<std::string, std::string> key{x.key(), y.key()};
  {
    std::lock_guard<std::mutex> lock(g_hom_cache_mutex);
    auto it = g_hom_cache.find(key);
    if (it != g_hom_cache.end()) {
      budget.check_hom(it->second.size(), "map enumeration (cached)");
      return it->second;
    }
  }
  LabelledHom r = enumerate_hom_labelled_uncached(x, y, budget);
  std::lock_guard<std::mutex> lock(g_hom_cache_mutex);
  g_hom_cache.emplace(std::move(key), r);
  return r;
}

FunctorCategoryData functor_category_cached(const VObj& x, const VObj& y,
                                            const Budget& budget) {
  // Rebuilt on demand; deterministic.  The labelled-hom cache keeps the
  // repeated functor enumeration cheap relative to the searches above it.
  return build_functor_category(x.cat(), y.cat(), budget);
}

}  // namespace

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

std::vector<VMap> hom_maps(const VObj& x, const VObj& y, const Budget& budget) {
  std::vector<VMap> out;
  for (auto& [l, m] : enumerate_hom_labelled(x, y, budget)) out.push_back(m);
  return out;
}

std::vector<VMap> global_elements(const VObj& x, const Budget& budget) {
  return hom_maps(unit_object(x.kind), x, budget);
}

VObj internal_hom(const VObj& x, const VObj& y, const Budget& budget) {
  detail::expect_same_kind(x, y, "internal_hom");
  BaseKind k = x.kind;
  if (k.sliced) {
    // Pullback of  I → [I,I] → [Y,I]  ←  [Y,Z] : the sliced hom-object,
    // augmented by the first projection.
    VObj yu = x.underlying(), zu = y.underlying();
    BaseKind pk = k.parent();
    VObj iu = unit_object(pk);
    VMap j = name_element(identity_map(iu), budget);          // I → [I,I]
    VMap pre_y = internal_pre(aug_map_of(x), iu, budget);     // [I,I] → [Y,I]
    VMap post_z = internal_post(aug_map_of(y), yu, budget);   // [Y,Z] → [Y,I]
    PullbackObj pb = pullback(compose(pre_y, j), post_z, budget);
    return VObj::make_sliced(pb.obj, pb.pr1.action);
  }
  LabelledHom maps = enumerate_hom_labelled(x, y, budget);
  if (is_setlike(k)) {
    std::vector<std::string> es;
    for (const auto& [l, m] : maps) es.push_back(l);
    return make_set_obj(k, std::move(es));
  }
  if (is_pointed(k)) {
    std::vector<std::string> es;
    std::string base;
    for (const auto& [l, m] : maps) {
      es.push_back(l);
      bool constant = true;
      for (const auto& [e, v] : std::get<ElemAction>(m.action).table)
        if (v != basepoint_of(y)) constant = false;
      if (constant) base = l;
    }
    if (base.empty()) throw InternalError("no constant pointed map found");
    return make_pointed_obj(k, std::move(es), std::move(base));
  }
  FunctorCategoryData d = functor_category_cached(x, y, budget);
  return make_cat_obj(k, d.cat);
}

VMap name_element(const VMap& f, const Budget& budget) {
  LabelledHom maps = enumerate_hom_labelled(f.src, f.dst, budget);
  std::string label;
  for (const auto& [l, m] : maps)
    if (m.action == f.action) {
      label = l;
      break;
    }
  if (label.empty()) throw InternalError("name_element: map not enumerated");
  VObj h = internal_hom(f.src, f.dst, budget);
  BaseKind k = f.src.kind;
  VObj i = unit_object(k);
  if (k.sliced) {
    VMap u = name_element(underlying_map(f), budget);
    // Re-type: the parent element lands in the identity fibre of the
    // pullback hom.
    if (std::holds_alternative<ElemAction>(u.action)) {
      ElemAction a;
      for (const auto& [e, v] : std::get<ElemAction>(u.action).table)
        a.table[e] = pair_label(unit_generic_point(k.parent()), v);
      return make_vmap(i, h, a);
    }
    CatAction a;
    const auto& cu = std::get<CatAction>(u.action);
    for (const auto& [o, v] : cu.omap)
      a.omap[o] = pair_label(unit_generic_point(k.parent()), v);
    for (const auto& [m, v] : cu.mmap) {
      // morphism component: identity on the unit side
      a.mmap[m] = pair_label("1_*", v);
    }
    return make_vmap(i, h, a);
  }
  if (is_setlike(k)) {
    ElemAction a;
    a.table["*"] = label;
    return make_vmap(i, h, a);
  }
  if (is_pointed(k)) {
    ElemAction a;
    a.table["*"] = h.pointed().basepoint;
    a.table["e"] = label;
    return make_vmap(i, h, a);
  }
  CatAction a;
  a.omap["*"] = label;
  a.mmap["1_*"] = h.cat().ident.at(label);
  return make_vmap(i, h, a);
}

VMap decode_element(const VObj& x, const VObj& y, const std::string& label,
                    const Budget& budget) {
  for (const auto& [l, m] : enumerate_hom_labelled(x, y, budget))
    if (l == label) return m;
  throw ValidationError("decode_element: no map with label '" + label + "'");
}

VMap untranspose_element(const VMap& e, const VObj& y, const VObj& z,
                         const Budget& budget) {
  BaseKind k = y.kind;
  if (k.sliced) {
    // Strip to the parent element via the second pullback projection.
    VObj h = internal_hom(y, z, budget);
    if (!(e.dst == h)) throw ValidationError("untranspose: wrong hom object");
    BaseKind pk = k.parent();
    VObj yu = y.underlying(), zu = z.underlying();
    VObj iu = unit_object(pk);
    VMap j = name_element(identity_map(iu), budget);
    VMap pre_y = internal_pre(aug_map_of(y), iu, budget);
    VMap post_z = internal_post(aug_map_of(z), yu, budget);
    PullbackObj pb = pullback(compose(pre_y, j), post_z, budget);
    VMap stripped = compose(pb.pr2, VMap{pb.obj, pb.obj, e.action});
    // stripped : I_parent → [yu,zu] up to source typing
    VMap elem{unit_object(pk), internal_hom(yu, zu, budget), stripped.action};
    VMap parent = untranspose_element(elem, yu, zu, budget);
    return make_vmap(y, z, parent.action);
  }
  std::string label;
  if (e.dst.is_cat())
    label = apply_obj(e.action, "*");
  else if (is_pointed(k))
    label = apply_elem(e.action, "e");
  else
    label = apply_elem(e.action, "*");
  return decode_element(y, z, label, budget);
}

VMap transpose(const VMap& f, const VObj& x, const VObj& y, const Budget& budget) {
  BaseKind k = x.kind;
  const VObj& z = f.dst;
  if (!(f.src == tensor(x, y)))
    throw ValidationError("transpose: source is not x⊗y");
  VObj h = internal_hom(y, z, budget);
  if (k.sliced) {
    VMap u = transpose(underlying_map(f), x.underlying(), y.underlying(), budget);
    // Pair with the augmentation of x to land in the pullback hom.
    if (std::holds_alternative<ElemAction>(u.action)) {
      ElemAction a;
      for (const auto& [e, v] : std::get<ElemAction>(u.action).table)
        a.table[e] = pair_label(apply_elem(aug_map_of(x).action, e), v);
      return make_vmap(x, h, a);
    }
    CatAction a;
    const auto& cu = std::get<CatAction>(u.action);
    for (const auto& [o, v] : cu.omap)
      a.omap[o] = pair_label(apply_obj(aug_map_of(x).action, o), v);
    for (const auto& [m, v] : cu.mmap)
      a.mmap[m] = pair_label(apply_mor(aug_map_of(x).action, m), v);
    return make_vmap(x, h, a);
  }
  LabelledHom maps = enumerate_hom_labelled(y, z, budget);
  auto label_of = [&](const Action& act) -> std::string {
    for (const auto& [l, m] : maps)
      if (m.action == act) return l;
    throw InternalError("transpose: fibre map not enumerated");
  };
  if (is_setlike(k)) {
    ElemAction a;
    for (const auto& p : elems_of(x)) {
      ElemAction fiber;
      for (const auto& q : elems_of(y))
        fiber.table[q] = apply_elem(f.action, pair_label(p, q));
      a.table[p] = label_of(fiber);
    }
    return make_vmap(x, h, a);
  }
  if (is_pointed(k)) {
    ElemAction a;
    std::string sbase = tensor(x, y).pointed().basepoint;
    for (const auto& p : elems_of(x)) {
      ElemAction fiber;
      for (const auto& q : elems_of(y)) {
        if (p == basepoint_of(x) || q == basepoint_of(y))
          fiber.table[q] = apply_elem(f.action, sbase);
        else
          fiber.table[q] = apply_elem(f.action, pair_label(p, q));
      }
      a.table[p] = label_of(fiber);
    }
    return make_vmap(x, h, a);
  }
  // Categories.
  FunctorCategoryData d = functor_category_cached(y, z, budget);
  auto functor_label = [&](const FinFunctor& ff) -> std::string {
    for (std::size_t i = 0; i < d.functors.size(); ++i)
      if (d.functors[i] == ff) return d.flabels[i];
    throw InternalError("transpose: fibre functor not enumerated");
  };
  CatAction a;
  const FinCat& xc = x.cat();
  const FinCat& yc = y.cat();
  std::map<std::string, FinFunctor> obj_functors;
  for (const auto& p : xc.objects) {
    FinFunctor ff;
    for (const auto& q : yc.objects)
      ff.omap[q] = apply_obj(f.action, pair_label(p, q));
    for (const auto& n : yc.mors)
      ff.mmap[n.name] = apply_mor(f.action, pair_label(xc.ident.at(p), n.name));
    obj_functors[p] = ff;
    a.omap[p] = functor_label(ff);
  }
  for (const auto& m : xc.mors) {
    FinNat comp;
    for (const auto& q : yc.objects)
      comp[q] = apply_mor(f.action, pair_label(m.name, yc.ident.at(q)));
    std::size_t fi = d.findex.at(a.omap.at(m.src));
    std::size_t gi = d.findex.at(a.omap.at(m.tgt));
    std::string found;
    for (const auto& [label, nt] : d.nts)
      if (nt.fi == fi && nt.gi == gi && nt.components == comp) {
        found = label;
        break;
      }
    if (found.empty()) throw InternalError("transpose: fibre nt not enumerated");
    a.mmap[m.name] = found;
  }
  return make_vmap(x, h, a);
}

VMap eval_map(const VObj& x, const VObj& y, const Budget& budget) {
  BaseKind k = x.kind;
  VObj h = internal_hom(x, y, budget);
  VObj src = tensor(h, x);
  if (k.sliced) {
    // Elementwise via the parent: ((w,f),a) ↦ f(a).
    VObj hu = h.underlying();
    VObj xu = x.underlying(), yu = y.underlying();
    LabelledHom parent = enumerate_hom_labelled(xu, yu, budget);
    std::map<std::string, const VMap*> by_label;
    for (const auto& [l, m] : parent) by_label[l] = &m;
    // The parent payload of h is a subobject of I×[xu,yu] with pair labels.
    // Recover the [xu,yu]-part through the recomputed pullback projection.
    BaseKind pk = k.parent();
    VObj iu = unit_object(pk);
    VMap j = name_element(identity_map(iu), budget);
    VMap pre = internal_pre(aug_map_of(x), iu, budget);
    VMap post = internal_post(aug_map_of(y), xu, budget);
    PullbackObj pb = pullback(compose(pre, j), post, budget);
    if (!pb.obj.is_cat()) {
      ElemAction a;
      VMap pr2 = pb.pr2;  // sub → [xu,yu]
      // Build by the same double loop the tensor used.
      for (const auto& he : elems_of(hu)) {
        std::string flabel = apply_elem(pr2.action, he);
        const VMap& fm = *by_label.at(flabel);
        for (const auto& xe : elems_of(xu)) {
          std::string key;
          if (is_pointed(pk)) {
            bool hb = (he == hu.pointed().basepoint);
            bool xb = (xe == xu.pointed().basepoint);
            key = (hb || xb) ? src.underlying().pointed().basepoint
                             : pair_label(he, xe);
            if (hb || xb) {
              a.table[key] = yu.pointed().basepoint;
              continue;
            }
          } else {
            key = pair_label(he, xe);
          }
          a.table[key] = apply_elem(fm.action, xe);
        }
      }
      return make_vmap(src, y, a);
    }
    throw BudgetError("sliced eval over category bases not supported");
  }
  LabelledHom maps = enumerate_hom_labelled(x, y, budget);
  std::map<std::string, const VMap*> by_label;
  for (const auto& [l, m] : maps) by_label[l] = &m;
  if (is_setlike(k)) {
    ElemAction a;
    for (const auto& [l, m] : maps)
      for (const auto& e : elems_of(x))
        a.table[pair_label(l, e)] = apply_elem(m.action, e);
    return make_vmap(src, y, a);
  }
  if (is_pointed(k)) {
    ElemAction a;
    a.table[src.pointed().basepoint] = basepoint_of(y);
    for (const auto& [l, m] : maps) {
      if (l == h.pointed().basepoint) continue;
      for (const auto& e : elems_of(x)) {
        if (e == basepoint_of(x)) continue;
        a.table[pair_label(l, e)] = apply_elem(m.action, e);
      }
    }
    return make_vmap(src, y, a);
  }
  // Categories: objects (F,a) ↦ F a; morphisms (α: F→G, m: a→a') ↦ G m ∘ α_a.
  FunctorCategoryData d = functor_category_cached(x, y, budget);
  CatAction a;
  const FinCat& xc = x.cat();
  const FinCat& yc = y.cat();
  for (std::size_t i = 0; i < d.functors.size(); ++i)
    for (const auto& o : xc.objects)
      a.omap[pair_label(d.flabels[i], o)] = d.functors[i].omap.at(o);
  for (const auto& [label, nt] : d.nts)
    for (const auto& m : xc.mors) {
      const FinFunctor& g = d.functors[nt.gi];
      a.mmap[pair_label(label, m.name)] =
          yc.compose(g.mmap.at(m.name), nt.components.at(m.src));
    }
  return make_vmap(src, y, a);
}

VMap internal_compose_map(const VObj& x, const VObj& y, const VObj& z,
                          const Budget& budget) {
  BaseKind k = x.kind;
  VObj hyz = internal_hom(y, z, budget);
  VObj hxy = internal_hom(x, y, budget);
  VObj hxz = internal_hom(x, z, budget);
  VObj src = tensor(hyz, hxy);
  if (k.sliced) {
    // ((w1,g),(w2,f)) ↦ (μ(w1,w2), g∘f) elementwise through the parent.
    BaseKind pk = k.parent();
    VObj xu = x.underlying(), yu = y.underlying(), zu = z.underlying();
    LabelledHom gm = enumerate_hom_labelled(yu, zu, budget);
    LabelledHom fm = enumerate_hom_labelled(xu, yu, budget);
    LabelledHom cm = enumerate_hom_labelled(xu, zu, budget);
    std::map<std::string, const VMap*> gl, fl;
    for (const auto& [l, m] : gm) gl[l] = &m;
    for (const auto& [l, m] : fm) fl[l] = &m;
    auto comp_label = [&](const VMap& g, const VMap& f) {
      VMap c = compose(g, f);
      for (const auto& [l, m] : cm)
        if (m.action == c.action) return l;
      throw InternalError("internal_compose: composite not enumerated");
    };
    if (!src.underlying().is_cat()) {
      // Recover fibres via recomputed pullbacks.
      auto strip = [&](const VObj& a, const VObj& b) {
        VObj au = a.underlying();
        VObj iu = unit_object(pk);
        VMap j = name_element(identity_map(iu), budget);
        VMap pre = internal_pre(aug_map_of(a), iu, budget);
        VMap post = internal_post(aug_map_of(b), au, budget);
        return pullback(compose(pre, j), post, budget);
      };
      PullbackObj pg = strip(y, z);
      PullbackObj pf = strip(x, y);
      ElemAction a;
      const VObj su = src.underlying();
      VObj hyzu = hyz.underlying(), hxyu = hxy.underlying();
      VMap sq = unit_squash(pk);
      for (const auto& ge : elems_of(hyzu)) {
        std::string glab = apply_elem(pg.pr2.action, ge);
        std::string gw = apply_elem(pg.pr1.action, ge);
        for (const auto& fe : elems_of(hxyu)) {
          std::string flab = apply_elem(pf.pr2.action, fe);
          std::string fw = apply_elem(pf.pr1.action, fe);
          std::string key, wkey;
          if (is_pointed(pk)) {
            bool gb = (ge == hyzu.pointed().basepoint);
            bool fb = (fe == hxyu.pointed().basepoint);
            if (gb || fb) continue;  // basepoint handled below
            key = pair_label(ge, fe);
          } else {
            key = pair_label(ge, fe);
          }
          wkey = apply_elem(sq.action, pair_label(gw, fw));
          std::string clab = comp_label(*gl.at(glab), *fl.at(flab));
          a.table[key] = pair_label(wkey, clab);
        }
      }
      if (is_pointed(pk)) {
        VObj hxzu = hxz.underlying();
        a.table[su.pointed().basepoint] = hxzu.pointed().basepoint;
      }
      return make_vmap(src, hxz, a);
    }
    throw BudgetError("sliced internal composition over category bases not supported");
  }
  if (!x.is_cat()) {
    LabelledHom gm = enumerate_hom_labelled(y, z, budget);
    LabelledHom fm = enumerate_hom_labelled(x, y, budget);
    LabelledHom cm = enumerate_hom_labelled(x, z, budget);
    auto comp_label = [&](const VMap& g, const VMap& f) {
      VMap c = compose(g, f);
      for (const auto& [l, m] : cm)
        if (m.action == c.action) return l;
      throw InternalError("internal_compose: composite not enumerated");
    };
    ElemAction a;
    if (is_pointed(k)) a.table[src.pointed().basepoint] = hxz.pointed().basepoint;
    for (const auto& [gl2, g] : gm)
      for (const auto& [fl2, f] : fm) {
        if (is_pointed(k) &&
            (gl2 == hyz.pointed().basepoint || fl2 == hxy.pointed().basepoint))
          continue;
        a.table[pair_label(gl2, fl2)] = comp_label(g, f);
      }
    return make_vmap(src, hxz, a);
  }
  // Categories: horizontal pasting.
  FunctorCategoryData dyz = functor_category_cached(y, z, budget);
  FunctorCategoryData dxy = functor_category_cached(x, y, budget);
  FunctorCategoryData dxz = functor_category_cached(x, z, budget);
  const FinCat& xc = x.cat();
  const FinCat& zc = z.cat();
  auto xz_functor_label = [&](const FinFunctor& ff) {
    for (std::size_t i = 0; i < dxz.functors.size(); ++i)
      if (dxz.functors[i] == ff) return dxz.flabels[i];
    throw InternalError("internal_compose: composite functor not enumerated");
  };
  CatAction a;
  for (std::size_t i = 0; i < dyz.functors.size(); ++i)
    for (std::size_t j = 0; j < dxy.functors.size(); ++j) {
      FinFunctor comp = compose_functors(xc, y.cat(), zc, dyz.functors[i],
                                         dxy.functors[j]);
      a.omap[pair_label(dyz.flabels[i], dxy.flabels[j])] = xz_functor_label(comp);
    }
  for (const auto& [bl, bnt] : dyz.nts)
    for (const auto& [al, ant] : dxy.nts) {
      // β: G→G' in [y,z], α: F→F' in [x,y]  ⇒  (β·α)_a = β_{F'a} ∘ G(α_a).
      const FinFunctor& g = dyz.functors[bnt.fi];
      const FinFunctor& fprime = dxy.functors[ant.gi];
      FinNat comp;
      for (const auto& o : xc.objects)
        comp[o] = zc.compose(bnt.components.at(fprime.omap.at(o)),
                             g.mmap.at(ant.components.at(o)));
      std::string sf = a.omap.at(pair_label(dyz.flabels[bnt.fi], dxy.flabels[ant.fi]));
      std::string tf = a.omap.at(pair_label(dyz.flabels[bnt.gi], dxy.flabels[ant.gi]));
      std::size_t fi = dxz.findex.at(sf), gi = dxz.findex.at(tf);
      std::string found;
      for (const auto& [label, nt] : dxz.nts)
        if (nt.fi == fi && nt.gi == gi && nt.components == comp) {
          found = label;
          break;
        }
      if (found.empty())
        throw InternalError("internal_compose: pasted nt not enumerated");
      a.mmap[pair_label(bl, al)] = found;
    }
  return make_vmap(src, hxz, a);
}

VMap internal_post(const VMap& g, const VObj& x, const Budget& budget) {
  // [x, g] : [x,y] → [x,z] for g : y → z.
  const VObj& y = g.src;
  const VObj& z = g.dst;
  BaseKind k = x.kind;
  VObj hxy = internal_hom(x, y, budget);
  VObj hxz = internal_hom(x, z, budget);
  if (k.sliced) {
    // (w,f) ↦ (w, g∘f) elementwise through the parent pullback.
    BaseKind pk = k.parent();
    VObj xu = x.underlying(), yu = y.underlying(), zu = z.underlying();
    if (xu.is_cat())
      throw BudgetError("sliced internal_post over category bases not supported");
    VObj iu = unit_object(pk);
    VMap j = name_element(identity_map(iu), budget);
    auto strip = [&](const VObj& a, const VObj& b) {
      VMap pre = internal_pre(aug_map_of(a), iu, budget);
      VMap post = internal_post(aug_map_of(b), a.underlying(), budget);
      return pullback(compose(pre, j), post, budget);
    };
    PullbackObj pxy = strip(x, y);
    LabelledHom fm = enumerate_hom_labelled(xu, yu, budget);
    LabelledHom cm = enumerate_hom_labelled(xu, zu, budget);
    std::map<std::string, const VMap*> fl;
    for (const auto& [l, m] : fm) fl[l] = &m;
    ElemAction a;
    for (const auto& fe : elems_of(hxy.underlying())) {
      std::string flab = apply_elem(pxy.pr2.action, fe);
      std::string w = apply_elem(pxy.pr1.action, fe);
      VMap comp = compose(underlying_map(g), *fl.at(flab));
      std::string clab;
      for (const auto& [l, m] : cm)
        if (m.action == comp.action) {
          clab = l;
          break;
        }
      if (clab.empty()) throw InternalError("internal_post: composite missing");
      a.table[fe] = pair_label(w, clab);
    }
    return make_vmap(hxy, hxz, a);
  }
  if (!x.is_cat()) {
    LabelledHom fm = enumerate_hom_labelled(x, y, budget);
    LabelledHom cm = enumerate_hom_labelled(x, z, budget);
    ElemAction a;
    for (const auto& [l, m] : fm) {
      VMap comp = compose(g, m);
      std::string clab;
      for (const auto& [cl, c] : cm)
        if (c.action == comp.action) {
          clab = cl;
          break;
        }
      if (clab.empty()) throw InternalError("internal_post: composite missing");
      a.table[l] = clab;
    }
    return make_vmap(hxy, hxz, a);
  }
  FunctorCategoryData dxy = functor_category_cached(x, y, budget);
  FunctorCategoryData dxz = functor_category_cached(x, z, budget);
  const auto& ga = std::get<CatAction>(g.action);
  FinFunctor gf{ga.omap, ga.mmap};
  CatAction a;
  for (std::size_t i = 0; i < dxy.functors.size(); ++i) {
    FinFunctor comp = compose_functors(x.cat(), y.cat(), z.cat(), gf,
                                       dxy.functors[i]);
    std::string found;
    for (std::size_t j = 0; j < dxz.functors.size(); ++j)
      if (dxz.functors[j] == comp) {
        found = dxz.flabels[j];
        break;
      }
    if (found.empty()) throw InternalError("internal_post: functor missing");
    a.omap[dxy.flabels[i]] = found;
  }
  for (const auto& [label, nt] : dxy.nts) {
    FinNat comp;
    for (const auto& [o, c] : nt.components) comp[o] = ga.mmap.at(c);
    std::size_t fi = dxz.findex.at(a.omap.at(dxy.flabels[nt.fi]));
    std::size_t gi = dxz.findex.at(a.omap.at(dxy.flabels[nt.gi]));
    std::string found;
    for (const auto& [l2, nt2] : dxz.nts)
      if (nt2.fi == fi && nt2.gi == gi && nt2.components == comp) {
        found = l2;
        break;
      }
    if (found.empty()) throw InternalError("internal_post: nt missing");
    a.mmap[label] = found;
  }
  return make_vmap(hxy, hxz, a);
}

VMap internal_pre(const VMap& f, const VObj& z, const Budget& budget) {
  // [f, z] : [y,z] → [x,z] for f : x → y.
  const VObj& x = f.src;
  const VObj& y = f.dst;
  BaseKind k = x.kind;
  VObj hyz = internal_hom(y, z, budget);
  VObj hxz = internal_hom(x, z, budget);
  if (k.sliced) {
    BaseKind pk = k.parent();
    VObj xu = x.underlying(), yu = y.underlying(), zu = z.underlying();
    if (xu.is_cat())
      throw BudgetError("sliced internal_pre over category bases not supported");
    VObj iu = unit_object(pk);
    VMap j = name_element(identity_map(iu), budget);
    auto strip = [&](const VObj& a, const VObj& b) {
      VMap pre = internal_pre(aug_map_of(a), iu, budget);
      VMap post = internal_post(aug_map_of(b), a.underlying(), budget);
      return pullback(compose(pre, j), post, budget);
    };
    PullbackObj pyz = strip(y, z);
    LabelledHom gm = enumerate_hom_labelled(yu, zu, budget);
    LabelledHom cm = enumerate_hom_labelled(xu, zu, budget);
    std::map<std::string, const VMap*> gl;
    for (const auto& [l, m] : gm) gl[l] = &m;
    ElemAction a;
    for (const auto& ge : elems_of(hyz.underlying())) {
      std::string glab = apply_elem(pyz.pr2.action, ge);
      std::string w = apply_elem(pyz.pr1.action, ge);
      VMap comp = compose(*gl.at(glab), underlying_map(f));
      std::string clab;
      for (const auto& [l, m] : cm)
        if (m.action == comp.action) {
          clab = l;
          break;
        }
      if (clab.empty()) throw InternalError("internal_pre: composite missing");
      a.table[ge] = pair_label(w, clab);
    }
    return make_vmap(hyz, hxz, a);
  }
  if (!x.is_cat()) {
    LabelledHom gm = enumerate_hom_labelled(y, z, budget);
    LabelledHom cm = enumerate_hom_labelled(x, z, budget);
    ElemAction a;
    for (const auto& [l, m] : gm) {
      VMap comp = compose(m, f);
      std::string clab;
      for (const auto& [cl, c] : cm)
        if (c.action == comp.action) {
          clab = cl;
          break;
        }
      if (clab.empty()) throw InternalError("internal_pre: composite missing");
      a.table[l] = clab;
    }
    return make_vmap(hyz, hxz, a);
  }
  FunctorCategoryData dyz = functor_category_cached(y, z, budget);
  FunctorCategoryData dxz = functor_category_cached(x, z, budget);
  const auto& fa = std::get<CatAction>(f.action);
  FinFunctor ff{fa.omap, fa.mmap};
  CatAction a;
  for (std::size_t i = 0; i < dyz.functors.size(); ++i) {
    FinFunctor comp = compose_functors(x.cat(), y.cat(), z.cat(),
                                       dyz.functors[i], ff);
    std::string found;
    for (std::size_t j = 0; j < dxz.functors.size(); ++j)
      if (dxz.functors[j] == comp) {
        found = dxz.flabels[j];
        break;
      }
    if (found.empty()) throw InternalError("internal_pre: functor missing");
    a.omap[dyz.flabels[i]] = found;
  }
  for (const auto& [label, nt] : dyz.nts) {
    FinNat comp;
    for (const auto& o : x.cat().objects)
      comp[o] = nt.components.at(ff.omap.at(o));
    std::size_t fi = dxz.findex.at(a.omap.at(dyz.flabels[nt.fi]));
    std::size_t gi = dxz.findex.at(a.omap.at(dyz.flabels[nt.gi]));
    std::string found;
    for (const auto& [l2, nt2] : dxz.nts)
      if (nt2.fi == fi && nt2.gi == gi && nt2.components == comp) {
        found = l2;
        break;
      }
    if (found.empty()) throw InternalError("internal_pre: nt missing");
    a.mmap[label] = found;
  }
  return make_vmap(hyz, hxz, a);
}

}  // namespace homcat
