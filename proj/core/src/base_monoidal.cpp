#include <algorithm>
#include <map>
#include <set>

#include "base_detail.hpp"
#include "homcat/labels.hpp"

namespace homcat {

using detail::aug_map_of;
using detail::basepoint_of;
using detail::elems_of;
using detail::expect_same_kind;
using detail::is_cat;
using detail::is_pointed;
using detail::is_setlike;
using detail::make_cat_obj;
using detail::make_pointed_obj;
using detail::make_set_obj;

// ---------------------------------------------------------------------------
// Tensor
// ---------------------------------------------------------------------------

namespace {

FinCat cat_product(const FinCat& a, const FinCat& b) {
  FinCat p;
  for (const auto& x : a.objects)
    for (const auto& y : b.objects) p.objects.push_back(pair_label(x, y));
  std::sort(p.objects.begin(), p.objects.end());
  for (const auto& m : a.mors)
    for (const auto& n : b.mors)
      p.mors.push_back({pair_label(m.name, n.name), pair_label(m.src, n.src),
                        pair_label(m.tgt, n.tgt)});
  std::sort(p.mors.begin(), p.mors.end(),
            [](const FinMor& x, const FinMor& y) { return x.name < y.name; });
  for (const auto& x : a.objects)
    for (const auto& y : b.objects)
      p.ident[pair_label(x, y)] = pair_label(a.ident.at(x), b.ident.at(y));
  for (const auto& m2 : a.mors)
    for (const auto& n2 : b.mors)
      for (const auto& m1 : a.mors) {
        if (m1.tgt != m2.src) continue;
        for (const auto& n1 : b.mors) {
          if (n1.tgt != n2.src) continue;
          p.comp[{pair_label(m2.name, n2.name), pair_label(m1.name, n1.name)}] =
              pair_label(a.compose(m2.name, m1.name), b.compose(n2.name, n1.name));
        }
      }
  p.validate();
  return p;
}

}  // namespace

VObj tensor(const VObj& x, const VObj& y) {
  expect_same_kind(x, y, "tensor");
  BaseKind k = x.kind;
  if (k.sliced) {
    VObj t = tensor(x.underlying(), y.underlying());
    VMap aug = compose(unit_squash(k.parent()),
                       tensor_map(aug_map_of(x), aug_map_of(y)));
    return VObj::make_sliced(t, aug.action);
  }
  if (is_setlike(k)) {
    std::vector<std::string> es;
    for (const auto& a : x.set().elems)
      for (const auto& b : y.set().elems) es.push_back(pair_label(a, b));
    return make_set_obj(k, std::move(es));
  }
  if (is_pointed(k)) {
    // Smash product: the wedge is collapsed to the pair of basepoints.
    std::string base = pair_label(basepoint_of(x), basepoint_of(y));
    std::vector<std::string> es{base};
    for (const auto& a : x.pointed().elems) {
      if (a == basepoint_of(x)) continue;
      for (const auto& b : y.pointed().elems) {
        if (b == basepoint_of(y)) continue;
        es.push_back(pair_label(a, b));
      }
    }
    return make_pointed_obj(k, std::move(es), std::move(base));
  }
  return make_cat_obj(k, cat_product(x.cat(), y.cat()));
}

VMap tensor_map(const VMap& f, const VMap& g) {
  expect_same_kind(f.src, g.src, "tensor_map");
  BaseKind k = f.src.kind;
  if (k.sliced) {
    VMap u = tensor_map(underlying_map(f), underlying_map(g));
    return make_vmap(tensor(f.src, g.src), tensor(f.dst, g.dst), u.action);
  }
  VObj sx = tensor(f.src, g.src);
  VObj tx = tensor(f.dst, g.dst);
  if (is_setlike(k)) {
    ElemAction a;
    for (const auto& p : f.src.set().elems)
      for (const auto& q : g.src.set().elems)
        a.table[pair_label(p, q)] =
            pair_label(apply_elem(f.action, p), apply_elem(g.action, q));
    return make_vmap(sx, tx, a);
  }
  if (is_pointed(k)) {
    std::string sbase = pair_label(basepoint_of(f.src), basepoint_of(g.src));
    std::string tbase = pair_label(basepoint_of(f.dst), basepoint_of(g.dst));
    ElemAction a;
    a.table[sbase] = tbase;
    for (const auto& p : f.src.pointed().elems) {
      if (p == basepoint_of(f.src)) continue;
      for (const auto& q : g.src.pointed().elems) {
        if (q == basepoint_of(g.src)) continue;
        std::string fp = apply_elem(f.action, p), gq = apply_elem(g.action, q);
        bool collapses = (fp == basepoint_of(f.dst) || gq == basepoint_of(g.dst));
        a.table[pair_label(p, q)] = collapses ? tbase : pair_label(fp, gq);
      }
    }
    return make_vmap(sx, tx, a);
  }
  CatAction a;
  for (const auto& p : f.src.cat().objects)
    for (const auto& q : g.src.cat().objects)
      a.omap[pair_label(p, q)] =
          pair_label(apply_obj(f.action, p), apply_obj(g.action, q));
  for (const auto& m : f.src.cat().mors)
    for (const auto& n : g.src.cat().mors)
      a.mmap[pair_label(m.name, n.name)] =
          pair_label(apply_mor(f.action, m.name), apply_mor(g.action, n.name));
  return make_vmap(sx, tx, a);
}

// ---------------------------------------------------------------------------
// Coherence isomorphisms
// ---------------------------------------------------------------------------

namespace {

// Generic relabelling construction: walks the structured iteration of the
// source and emits the corresponding structured label of the target.
VMap relabel_pairs(const VObj& src, const VObj& dst,
                   const std::function<std::string(const std::string&)>& on_obj,
                   const std::function<std::string(const std::string&)>& on_mor) {
  if (src.kind.sliced) {
    VMap u = relabel_pairs(src.underlying(), dst.underlying(), on_obj, on_mor);
    return make_vmap(src, dst, u.action);
  }
  if (src.is_cat()) return detail::build_cat_map(src, dst, on_obj, on_mor);
  return detail::build_elem_map(src, dst, on_obj);
}

}  // namespace

VMap unit_squash(BaseKind k) {
  if (k.sliced)
    throw ValidationError("unit_squash is a parent-base helper");
  VObj i = unit_object(k);
  return unitor_l(i);
}

VMap unitor_l(const VObj& x) {
  BaseKind k = x.kind;
  VObj i = unit_object(k);
  VObj ix = tensor(i, x);
  if (k.sliced) {
    VMap u = unitor_l(x.underlying());
    return make_vmap(ix, x, u.action);
  }
  const VObj u = x.underlying();
  if (is_setlike(k) || is_cat(k)) {
    std::string ui = "*";
    auto on_obj = [&](const std::string& e) {
      // element of I⊗x is "(*,e0)"; recover e0 by matching against x's data.
      for (const auto& e0 : u.is_cat() ? u.cat().objects : elems_of(u))
        if (pair_label(ui, e0) == e) return e0;
      throw InternalError("unitor_l: unmatched label " + e);
    };
    auto on_mor = [&](const std::string& m) {
      for (const auto& m0 : u.cat().mors)
        if (pair_label("1_*", m0.name) == m) return m0.name;
      throw InternalError("unitor_l: unmatched morphism " + m);
    };
    return relabel_pairs(ix, x, on_obj, on_mor);
  }
  // Pointed: I = S0 with non-base element "e".
  ElemAction a;
  a.table[pair_label("*", basepoint_of(u))] = basepoint_of(u);
  for (const auto& e0 : elems_of(u)) {
    if (e0 == basepoint_of(u)) continue;
    a.table[pair_label("e", e0)] = e0;
  }
  return make_vmap(ix, x, a);
}

VMap unitor_l_inv(const VObj& x) {
  auto inv = invert(unitor_l(x));
  if (!inv) throw InternalError("unitor_l not invertible");
  return *inv;
}

VMap unitor_r(const VObj& x) {
  BaseKind k = x.kind;
  VObj i = unit_object(k);
  VObj xi = tensor(x, i);
  if (k.sliced) {
    VMap u = unitor_r(x.underlying());
    return make_vmap(xi, x, u.action);
  }
  const VObj u = x.underlying();
  if (is_setlike(k) || is_cat(k)) {
    auto on_obj = [&](const std::string& e) {
      for (const auto& e0 : u.is_cat() ? u.cat().objects : elems_of(u))
        if (pair_label(e0, "*") == e) return e0;
      throw InternalError("unitor_r: unmatched label " + e);
    };
    auto on_mor = [&](const std::string& m) {
      for (const auto& m0 : u.cat().mors)
        if (pair_label(m0.name, "1_*") == m) return m0.name;
      throw InternalError("unitor_r: unmatched morphism " + m);
    };
    return relabel_pairs(xi, x, on_obj, on_mor);
  }
  ElemAction a;
  a.table[pair_label(basepoint_of(u), "*")] = basepoint_of(u);
  for (const auto& e0 : elems_of(u)) {
    if (e0 == basepoint_of(u)) continue;
    a.table[pair_label(e0, "e")] = e0;
  }
  return make_vmap(xi, x, a);
}

VMap unitor_r_inv(const VObj& x) {
  auto inv = invert(unitor_r(x));
  if (!inv) throw InternalError("unitor_r not invertible");
  return *inv;
}

VMap associator(const VObj& x, const VObj& y, const VObj& z) {
  BaseKind k = x.kind;
  VObj lhs = tensor(tensor(x, y), z);
  VObj rhs = tensor(x, tensor(y, z));
  if (k.sliced) {
    VMap u = associator(x.underlying(), y.underlying(), z.underlying());
    return make_vmap(lhs, rhs, u.action);
  }
  if (is_setlike(k)) {
    ElemAction a;
    for (const auto& p : x.set().elems)
      for (const auto& q : y.set().elems)
        for (const auto& r : z.set().elems)
          a.table[pair_label(pair_label(p, q), r)] =
              pair_label(p, pair_label(q, r));
    return make_vmap(lhs, rhs, a);
  }
  if (is_pointed(k)) {
    ElemAction a;
    a.table[lhs.pointed().basepoint] = rhs.pointed().basepoint;
    for (const auto& p : x.pointed().elems) {
      if (p == basepoint_of(x)) continue;
      for (const auto& q : y.pointed().elems) {
        if (q == basepoint_of(y)) continue;
        for (const auto& r : z.pointed().elems) {
          if (r == basepoint_of(z)) continue;
          a.table[pair_label(pair_label(p, q), r)] =
              pair_label(p, pair_label(q, r));
        }
      }
    }
    return make_vmap(lhs, rhs, a);
  }
  CatAction a;
  for (const auto& p : x.cat().objects)
    for (const auto& q : y.cat().objects)
      for (const auto& r : z.cat().objects)
        a.omap[pair_label(pair_label(p, q), r)] = pair_label(p, pair_label(q, r));
  for (const auto& m : x.cat().mors)
    for (const auto& n : y.cat().mors)
      for (const auto& o : z.cat().mors)
        a.mmap[pair_label(pair_label(m.name, n.name), o.name)] =
            pair_label(m.name, pair_label(n.name, o.name));
  return make_vmap(lhs, rhs, a);
}

VMap associator_inv(const VObj& x, const VObj& y, const VObj& z) {
  auto inv = invert(associator(x, y, z));
  if (!inv) throw InternalError("associator not invertible");
  return *inv;
}

VMap braiding(const VObj& x, const VObj& y) {
  BaseKind k = x.kind;
  VObj lhs = tensor(x, y);
  VObj rhs = tensor(y, x);
  if (k.sliced) {
    VMap u = braiding(x.underlying(), y.underlying());
    return make_vmap(lhs, rhs, u.action);
  }
  if (is_setlike(k)) {
    ElemAction a;
    for (const auto& p : x.set().elems)
      for (const auto& q : y.set().elems)
        a.table[pair_label(p, q)] = pair_label(q, p);
    return make_vmap(lhs, rhs, a);
  }
  if (is_pointed(k)) {
    ElemAction a;
    a.table[lhs.pointed().basepoint] = rhs.pointed().basepoint;
    for (const auto& p : x.pointed().elems) {
      if (p == basepoint_of(x)) continue;
      for (const auto& q : y.pointed().elems) {
        if (q == basepoint_of(y)) continue;
        a.table[pair_label(p, q)] = pair_label(q, p);
      }
    }
    return make_vmap(lhs, rhs, a);
  }
  CatAction a;
  for (const auto& p : x.cat().objects)
    for (const auto& q : y.cat().objects)
      a.omap[pair_label(p, q)] = pair_label(q, p);
  for (const auto& m : x.cat().mors)
    for (const auto& n : y.cat().mors)
      a.mmap[pair_label(m.name, n.name)] = pair_label(n.name, m.name);
  return make_vmap(lhs, rhs, a);
}

// ---------------------------------------------------------------------------
// Coproducts
// ---------------------------------------------------------------------------

CoprodObj coproduct(const VObj& x, const VObj& y) {
  expect_same_kind(x, y, "coproduct");
  BaseKind k = x.kind;
  if (k.sliced) {
    CoprodObj cu = coproduct(x.underlying(), y.underlying());
    VMap aug = copair(cu, aug_map_of(x), aug_map_of(y));
    VObj o = VObj::make_sliced(cu.obj, aug.action);
    return {o, make_vmap(x, o, cu.in1.action), make_vmap(y, o, cu.in2.action)};
  }
  if (is_setlike(k)) {
    std::vector<std::string> es;
    ElemAction a1, a2;
    for (const auto& e : x.set().elems) {
      es.push_back(tag_left(e));
      a1.table[e] = tag_left(e);
    }
    for (const auto& e : y.set().elems) {
      es.push_back(tag_right(e));
      a2.table[e] = tag_right(e);
    }
    VObj o = make_set_obj(k, std::move(es));
    return {o, make_vmap(x, o, a1), make_vmap(y, o, a2)};
  }
  if (is_pointed(k)) {
    // Wedge sum; the glued basepoint keeps the left tag.
    std::string base = tag_left(basepoint_of(x));
    std::vector<std::string> es;
    ElemAction a1, a2;
    for (const auto& e : x.pointed().elems) {
      es.push_back(tag_left(e));
      a1.table[e] = tag_left(e);
    }
    for (const auto& e : y.pointed().elems) {
      if (e == basepoint_of(y)) {
        a2.table[e] = base;
        continue;
      }
      es.push_back(tag_right(e));
      a2.table[e] = tag_right(e);
    }
    VObj o = make_pointed_obj(k, std::move(es), base);
    return {o, make_vmap(x, o, a1), make_vmap(y, o, a2)};
  }
  const FinCat& a = x.cat();
  const FinCat& b = y.cat();
  FinCat u;
  CatAction c1, c2;
  for (const auto& o : a.objects) {
    u.objects.push_back(tag_left(o));
    c1.omap[o] = tag_left(o);
  }
  for (const auto& o : b.objects) {
    u.objects.push_back(tag_right(o));
    c2.omap[o] = tag_right(o);
  }
  std::sort(u.objects.begin(), u.objects.end());
  for (const auto& m : a.mors) {
    u.mors.push_back({tag_left(m.name), tag_left(m.src), tag_left(m.tgt)});
    c1.mmap[m.name] = tag_left(m.name);
  }
  for (const auto& m : b.mors) {
    u.mors.push_back({tag_right(m.name), tag_right(m.src), tag_right(m.tgt)});
    c2.mmap[m.name] = tag_right(m.name);
  }
  std::sort(u.mors.begin(), u.mors.end(),
            [](const FinMor& p, const FinMor& q) { return p.name < q.name; });
  for (const auto& o : a.objects) u.ident[tag_left(o)] = tag_left(a.ident.at(o));
  for (const auto& o : b.objects) u.ident[tag_right(o)] = tag_right(b.ident.at(o));
  for (const auto& [gf, h] : a.comp)
    u.comp[{tag_left(gf.first), tag_left(gf.second)}] = tag_left(h);
  for (const auto& [gf, h] : b.comp)
    u.comp[{tag_right(gf.first), tag_right(gf.second)}] = tag_right(h);
  u.validate();
  VObj o = make_cat_obj(k, std::move(u));
  return {o, make_vmap(x, o, c1), make_vmap(y, o, c2)};
}

VMap copair(const CoprodObj& cp, const VMap& f, const VMap& g) {
  if (!(f.dst == g.dst)) throw ValidationError("copair: targets differ");
  if (cp.obj.is_cat() || (cp.obj.kind.sliced && cp.obj.underlying().is_cat())) {
    CatAction a;
    const auto& i1 = std::get<CatAction>(cp.in1.action);
    const auto& i2 = std::get<CatAction>(cp.in2.action);
    for (const auto& [o, t] : i1.omap) a.omap[t] = apply_obj(f.action, o);
    for (const auto& [o, t] : i2.omap) a.omap[t] = apply_obj(g.action, o);
    for (const auto& [m, t] : i1.mmap) a.mmap[t] = apply_mor(f.action, m);
    for (const auto& [m, t] : i2.mmap) a.mmap[t] = apply_mor(g.action, m);
    return make_vmap(cp.obj, f.dst, a);
  }
  ElemAction a;
  const auto& i1 = std::get<ElemAction>(cp.in1.action);
  const auto& i2 = std::get<ElemAction>(cp.in2.action);
  for (const auto& [e, t] : i1.table) a.table[t] = apply_elem(f.action, e);
  for (const auto& [e, t] : i2.table) a.table[t] = apply_elem(g.action, e);
  return make_vmap(cp.obj, f.dst, a);
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

ProdObj product_obj(const VObj& x, const VObj& y, const Budget& budget) {
  expect_same_kind(x, y, "product");
  BaseKind k = x.kind;
  if (k.sliced) {
    // Product in V/I is the fibre product over I.
    PullbackObj pb = pullback(aug_map_of(x), aug_map_of(y), budget);
    VObj o = VObj::make_sliced(pb.obj, compose(aug_map_of(x), pb.pr1).action);
    return {o,
            {make_vmap(o, x, pb.pr1.action), make_vmap(o, y, pb.pr2.action)}};
  }
  if (is_pointed(k)) {
    // Cartesian product pointed at the pair of basepoints (not the smash).
    std::vector<std::string> es;
    ElemAction p1, p2;
    for (const auto& a : x.pointed().elems)
      for (const auto& b : y.pointed().elems) {
        std::string l = pair_label(a, b);
        es.push_back(l);
        p1.table[l] = a;
        p2.table[l] = b;
      }
    VObj o = make_pointed_obj(k, std::move(es),
                              pair_label(basepoint_of(x), basepoint_of(y)));
    return {o, {make_vmap(o, x, p1), make_vmap(o, y, p2)}};
  }
  // Cartesian bases: the product is the tensor.
  VObj o = tensor(x, y);
  if (is_setlike(k)) {
    ElemAction p1, p2;
    for (const auto& a : x.set().elems)
      for (const auto& b : y.set().elems) {
        p1.table[pair_label(a, b)] = a;
        p2.table[pair_label(a, b)] = b;
      }
    return {o, {make_vmap(o, x, p1), make_vmap(o, y, p2)}};
  }
  CatAction p1, p2;
  for (const auto& a : x.cat().objects)
    for (const auto& b : y.cat().objects) {
      p1.omap[pair_label(a, b)] = a;
      p2.omap[pair_label(a, b)] = b;
    }
  for (const auto& m : x.cat().mors)
    for (const auto& n : y.cat().mors) {
      p1.mmap[pair_label(m.name, n.name)] = m.name;
      p2.mmap[pair_label(m.name, n.name)] = n.name;
    }
  return {o, {make_vmap(o, x, p1), make_vmap(o, y, p2)}};
}

namespace {

// ⟨f,g⟩ into a binary product built by product_obj.
VMap binary_pair(const ProdObj& p, const VMap& f, const VMap& g,
                 const Budget& budget) {
  BaseKind k = f.src.kind;
  if (k.sliced) {
    // Build the underlying pairing directly, then re-type sliced.
    VMap u = binary_pair(
        ProdObj{p.obj.underlying(),
                {underlying_map(p.projections[0]), underlying_map(p.projections[1])}},
        underlying_map(f), underlying_map(g), budget);
    return make_vmap(f.src, p.obj, u.action);
  }
  if (p.obj.is_cat()) {
    CatAction a;
    for (const auto& o : f.src.cat().objects)
      a.omap[o] = pair_label(apply_obj(f.action, o), apply_obj(g.action, o));
    for (const auto& m : f.src.cat().mors)
      a.mmap[m.name] =
          pair_label(apply_mor(f.action, m.name), apply_mor(g.action, m.name));
    return make_vmap(f.src, p.obj, a);
  }
  ElemAction a;
  for (const auto& e : elems_of(f.src))
    a.table[e] = pair_label(apply_elem(f.action, e), apply_elem(g.action, e));
  return make_vmap(f.src, p.obj, a);
}

}  // namespace

ProdObj nary_product(BaseKind k, const std::vector<VObj>& xs, const Budget& budget) {
  if (xs.empty()) {
    return {terminal_object(k), {}};
  }
  ProdObj acc{xs[0], {identity_map(xs[0])}};
  for (std::size_t i = 1; i < xs.size(); ++i) {
    ProdObj bin = product_obj(acc.obj, xs[i], budget);
    std::vector<VMap> projs;
    for (const auto& p : acc.projections) projs.push_back(compose(p, bin.projections[0]));
    projs.push_back(bin.projections[1]);
    acc = ProdObj{bin.obj, std::move(projs)};
  }
  return acc;
}

VMap tuple_map(const ProdObj& p, const std::vector<VMap>& legs) {
  if (p.projections.empty()) {
    // Map into the empty product (terminal object).
    throw ValidationError("tuple_map: empty product needs explicit terminal map");
  }
  if (legs.size() != p.projections.size())
    throw ValidationError("tuple_map: wrong number of legs");
  Budget b = Budget::loose();
  if (legs.size() == 1) return legs[0];
  // Rebuild the fold deterministically.
  std::vector<VObj> xs;
  for (const auto& pr : p.projections) xs.push_back(pr.dst);
  ProdObj acc{xs[0], {identity_map(xs[0])}};
  VMap cur = legs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) {
    ProdObj bin = product_obj(acc.obj, xs[i], b);
    cur = binary_pair(bin, cur, legs[i], b);
    std::vector<VMap> projs;
    for (const auto& pr : acc.projections) projs.push_back(compose(pr, bin.projections[0]));
    projs.push_back(bin.projections[1]);
    acc = ProdObj{bin.obj, std::move(projs)};
  }
  if (!(acc.obj == p.obj)) throw InternalError("tuple_map: product rebuild mismatch");
  return cur;
}

// ---------------------------------------------------------------------------
// Equalizers and pullbacks
// ---------------------------------------------------------------------------

SubObj equalizer(const VMap& f, const VMap& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst))
    throw ValidationError("equalizer: maps not parallel");
  BaseKind k = f.src.kind;
  if (k.sliced) {
    SubObj su = equalizer(underlying_map(f), underlying_map(g));
    VObj o = VObj::make_sliced(su.obj,
                               compose(aug_map_of(f.src), su.incl).action);
    return {o, make_vmap(o, f.src, su.incl.action)};
  }
  if (!f.src.is_cat()) {
    std::vector<std::string> es;
    ElemAction incl;
    for (const auto& e : elems_of(f.src))
      if (apply_elem(f.action, e) == apply_elem(g.action, e)) {
        es.push_back(e);
        incl.table[e] = e;
      }
    VObj o = is_pointed(k) ? make_pointed_obj(k, es, basepoint_of(f.src))
                           : make_set_obj(k, es);
    return {o, make_vmap(o, f.src, incl)};
  }
  const FinCat& c = f.src.cat();
  FinCat sub;
  CatAction incl;
  for (const auto& o : c.objects)
    if (apply_obj(f.action, o) == apply_obj(g.action, o)) {
      sub.objects.push_back(o);
      incl.omap[o] = o;
    }
  for (const auto& m : c.mors) {
    if (apply_mor(f.action, m.name) != apply_mor(g.action, m.name)) continue;
    if (!incl.omap.count(m.src) || !incl.omap.count(m.tgt)) continue;
    sub.mors.push_back(m);
    incl.mmap[m.name] = m.name;
  }
  for (const auto& o : sub.objects) sub.ident[o] = c.ident.at(o);
  for (const auto& g2 : sub.mors)
    for (const auto& f2 : sub.mors) {
      if (f2.tgt != g2.src) continue;
      sub.comp[{g2.name, f2.name}] = c.compose(g2.name, f2.name);
    }
  sub.validate();
  VObj o = make_cat_obj(k, std::move(sub));
  return {o, make_vmap(o, f.src, incl)};
}

PullbackObj pullback(const VMap& f, const VMap& g, const Budget& budget) {
  if (!(f.dst == g.dst)) throw ValidationError("pullback: codomains differ");
  ProdObj p = product_obj(f.src, g.src, budget);
  SubObj e = equalizer(compose(f, p.projections[0]), compose(g, p.projections[1]));
  return {e.obj, compose(p.projections[0], e.incl), compose(p.projections[1], e.incl)};
}

VMap pullback_pair(const PullbackObj& pb, const VMap& u, const VMap& v) {
  // Direct elementwise construction into the pullback's pair labels;
  // make_vmap verifies the image lands in the subobject.
  BaseKind k = u.src.kind;
  if (k.sliced) {
    VMap w = pullback_pair(PullbackObj{pb.obj.underlying(),
                                       underlying_map(pb.pr1), underlying_map(pb.pr2)},
                           underlying_map(u), underlying_map(v));
    return make_vmap(u.src, pb.obj, w.action);
  }
  if (u.src.is_cat()) {
    CatAction a;
    for (const auto& o : u.src.cat().objects)
      a.omap[o] = pair_label(apply_obj(u.action, o), apply_obj(v.action, o));
    for (const auto& m : u.src.cat().mors)
      a.mmap[m.name] =
          pair_label(apply_mor(u.action, m.name), apply_mor(v.action, m.name));
    return make_vmap(u.src, pb.obj, a);
  }
  ElemAction a;
  for (const auto& e : elems_of(u.src))
    a.table[e] = pair_label(apply_elem(u.action, e), apply_elem(v.action, e));
  return make_vmap(u.src, pb.obj, a);
}

}  // namespace homcat
