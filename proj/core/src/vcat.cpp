#include "homcat/vcat.hpp"

#include <algorithm>

#include "homcat/labels.hpp"

namespace homcat {

const VObj& VCategory::hom(const std::string& a, const std::string& b) const {
  auto it = homs.find({a, b});
  if (it == homs.end())
    throw ValidationError("no hom-object (" + a + "," + b + ")");
  return it->second;
}

const VMap& VCategory::comp(const std::string& a, const std::string& b,
                            const std::string& c) const {
  auto it = comps.find({a, b, c});
  if (it == comps.end())
    throw ValidationError("no composition (" + a + "," + b + "," + c + ")");
  return it->second;
}

const VMap& VCategory::ident(const std::string& a) const {
  auto it = idents.find(a);
  if (it == idents.end()) throw ValidationError("no identity at " + a);
  return it->second;
}

bool VCategory::has_object(const std::string& a) const {
  return std::binary_search(objects.begin(), objects.end(), a);
}

std::vector<std::string> vcategory_violations(const VCategory& c) {
  std::vector<std::string> bad;
  VObj i = unit_object(c.base);
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) {
      auto it = c.homs.find({a, b});
      if (it == c.homs.end()) {
        bad.push_back("missing hom (" + a + "," + b + ")");
        continue;
      }
      if (!(it->second.kind == c.base)) bad.push_back("hom kind mismatch at (" + a + "," + b + ")");
    }
  if (!bad.empty()) return bad;
  for (const auto& a : c.objects) {
    auto it = c.idents.find(a);
    if (it == c.idents.end()) {
      bad.push_back("missing identity at " + a);
      continue;
    }
    if (!(it->second.src == i) || !(it->second.dst == c.hom(a, a)))
      bad.push_back("identity wrongly typed at " + a);
  }
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      for (const auto& cc : c.objects) {
        auto it = c.comps.find({a, b, cc});
        if (it == c.comps.end()) {
          bad.push_back("missing composition (" + a + "," + b + "," + cc + ")");
          continue;
        }
        const VMap& m = it->second;
        if (!(m.src == tensor(c.hom(b, cc), c.hom(a, b))) ||
            !(m.dst == c.hom(a, cc)))
          bad.push_back("composition wrongly typed (" + a + "," + b + "," + cc + ")");
      }
  if (!bad.empty()) return bad;
  // Unit laws: M_{a,b,b}∘(j_b⊗1) = λ and M_{a,a,b}∘(1⊗j_a) = ρ.
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) {
      const VObj& h = c.hom(a, b);
      VMap left = compose(c.comp(a, b, b), tensor_map(c.ident(b), identity_map(h)));
      if (!(left.action == unitor_l(h).action))
        bad.push_back("left unit law fails at (" + a + "," + b + ")");
      VMap right = compose(c.comp(a, a, b), tensor_map(identity_map(h), c.ident(a)));
      if (!(right.action == unitor_r(h).action))
        bad.push_back("right unit law fails at (" + a + "," + b + ")");
    }
  // Associativity.
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      for (const auto& cc : c.objects)
        for (const auto& d : c.objects) {
          const VObj& hab = c.hom(a, b);
          const VObj& hbc = c.hom(b, cc);
          const VObj& hcd = c.hom(cc, d);
          VMap lhs = compose(c.comp(a, b, d),
                             tensor_map(c.comp(b, cc, d), identity_map(hab)));
          VMap rhs = compose(
              c.comp(a, cc, d),
              compose(tensor_map(identity_map(hcd), c.comp(a, b, cc)),
                      associator(hcd, hbc, hab)));
          if (!(lhs.action == rhs.action))
            bad.push_back("associativity fails at (" + a + "," + b + "," + cc +
                          "," + d + ")");
        }
  return bad;
}

VCatPtr validate_vcategory(VCategory c) {
  std::sort(c.objects.begin(), c.objects.end());
  auto bad = vcategory_violations(c);
  if (!bad.empty()) throw ValidationError("invalid V-category: " + bad.front());
  return std::make_shared<const VCategory>(std::move(c));
}

VCatPtr unit_vcategory(BaseKind k) {
  VCategory c;
  c.base = k;
  c.objects = {"*"};
  VObj i = unit_object(k);
  c.homs[{"*", "*"}] = i;
  c.idents["*"] = identity_map(i);
  c.comps[{"*", "*", "*"}] = unitor_l(i);
  return validate_vcategory(std::move(c));
}

VCatPtr vcat_from_fincat(const FinCat& fc, BaseKind k) {
  if (k.tag == BaseTag::CatCanonical || k.tag == BaseTag::PointedTrivial || k.sliced)
    throw ValidationError("vcat_from_fincat needs a set-like base");
  VCategory c;
  c.base = k;
  c.objects = fc.objects;
  for (const auto& a : fc.objects)
    for (const auto& b : fc.objects)
      c.homs[{a, b}] = VObj::make(k, FinSet::of(fc.hom(a, b)));
  VObj i = unit_object(k);
  for (const auto& a : fc.objects) {
    ElemAction act;
    act.table["*"] = fc.ident.at(a);
    c.idents[a] = make_vmap(i, c.homs.at({a, a}), act);
  }
  for (const auto& a : fc.objects)
    for (const auto& b : fc.objects)
      for (const auto& cc : fc.objects) {
        ElemAction act;
        for (const auto& g : fc.hom(b, cc))
          for (const auto& f : fc.hom(a, b))
            act.table[pair_label(g, f)] = fc.compose(g, f);
        c.comps[{a, b, cc}] = make_vmap(
            tensor(c.homs.at({b, cc}), c.homs.at({a, b})), c.homs.at({a, cc}), act);
      }
  return validate_vcategory(std::move(c));
}

VCatPtr full_subvcategory(const VCatPtr& c, const std::vector<std::string>& objs) {
  VCategory s;
  s.base = c->base;
  s.objects = objs;
  std::sort(s.objects.begin(), s.objects.end());
  s.objects.erase(std::unique(s.objects.begin(), s.objects.end()), s.objects.end());
  for (const auto& a : s.objects) {
    if (!c->has_object(a))
      throw ValidationError("full_subvcategory: unknown object " + a);
    s.idents[a] = c->ident(a);
  }
  for (const auto& a : s.objects)
    for (const auto& b : s.objects) s.homs[{a, b}] = c->hom(a, b);
  for (const auto& a : s.objects)
    for (const auto& b : s.objects)
      for (const auto& cc : s.objects) s.comps[{a, b, cc}] = c->comp(a, b, cc);
  return validate_vcategory(std::move(s));
}

VCatPtr opposite_vcategory(const VCatPtr& c) {
  VCategory o;
  o.base = c->base;
  o.objects = c->objects;
  for (const auto& a : o.objects)
    for (const auto& b : o.objects) o.homs[{a, b}] = c->hom(b, a);
  for (const auto& a : o.objects) o.idents[a] = c->ident(a);
  for (const auto& a : o.objects)
    for (const auto& b : o.objects)
      for (const auto& cc : o.objects) {
        // M^op_{a,b,c} : C(c,b)⊗C(b,a) → C(c,a) via the braiding.
        const VObj& x = c->hom(cc, b);
        const VObj& y = c->hom(b, a);
        o.comps[{a, b, cc}] = compose(c->comp(cc, b, a), braiding(x, y));
      }
  return validate_vcategory(std::move(o));
}

VMap compose_elements(const VCategory& c, const std::string& a,
                      const std::string& b, const std::string& cc,
                      const VMap& g, const VMap& f) {
  VObj i = unit_object(c.base);
  return compose(c.comp(a, b, cc),
                 compose(tensor_map(g, f), unitor_l_inv(i)));
}

VMap postcompose_map(const VCategory& c, const std::string& a,
                     const std::string& b, const std::string& cc, const VMap& f) {
  const VObj& h = c.hom(a, b);
  return compose(c.comp(a, b, cc),
                 compose(tensor_map(f, identity_map(h)), unitor_l_inv(h)));
}

VMap precompose_map(const VCategory& c, const std::string& a,
                    const std::string& b, const std::string& cc, const VMap& f) {
  const VObj& h = c.hom(b, cc);
  return compose(c.comp(a, b, cc),
                 compose(tensor_map(identity_map(h), f), unitor_r_inv(h)));
}

// ---------------------------------------------------------------------------
// VFunctor
// ---------------------------------------------------------------------------

const VMap& VFunctor::action(const std::string& a, const std::string& b) const {
  auto it = hom_action.find({a, b});
  if (it == hom_action.end())
    throw ValidationError("no hom action (" + a + "," + b + ")");
  return it->second;
}

std::vector<std::string> vfunctor_violations(const VFunctor& f) {
  std::vector<std::string> bad;
  for (const auto& a : f.src->objects) {
    auto it = f.omap.find(a);
    if (it == f.omap.end() || !f.dst->has_object(it->second)) {
      bad.push_back("object map bad at " + a);
      return bad;
    }
  }
  for (const auto& a : f.src->objects)
    for (const auto& b : f.src->objects) {
      auto it = f.hom_action.find({a, b});
      if (it == f.hom_action.end()) {
        bad.push_back("missing hom action (" + a + "," + b + ")");
        return bad;
      }
      if (!(it->second.src == f.src->hom(a, b)) ||
          !(it->second.dst == f.dst->hom(f.omap.at(a), f.omap.at(b))))
        bad.push_back("hom action wrongly typed (" + a + "," + b + ")");
    }
  if (!bad.empty()) return bad;
  for (const auto& a : f.src->objects) {
    VMap lhs = compose(f.action(a, a), f.src->ident(a));
    if (!(lhs.action == f.dst->ident(f.omap.at(a)).action))
      bad.push_back("identity law fails at " + a);
  }
  for (const auto& a : f.src->objects)
    for (const auto& b : f.src->objects)
      for (const auto& cc : f.src->objects) {
        VMap lhs = compose(f.action(a, cc), f.src->comp(a, b, cc));
        VMap rhs = compose(
            f.dst->comp(f.omap.at(a), f.omap.at(b), f.omap.at(cc)),
            tensor_map(f.action(b, cc), f.action(a, b)));
        if (!(lhs.action == rhs.action))
          bad.push_back("composition law fails at (" + a + "," + b + "," + cc + ")");
      }
  return bad;
}

VFunctor validate_vfunctor(VFunctor f) {
  auto bad = vfunctor_violations(f);
  if (!bad.empty()) throw ValidationError("invalid V-functor: " + bad.front());
  return f;
}

VFunctor identity_vfunctor(const VCatPtr& c) {
  VFunctor f;
  f.src = c;
  f.dst = c;
  for (const auto& a : c->objects) f.omap[a] = a;
  for (const auto& a : c->objects)
    for (const auto& b : c->objects)
      f.hom_action[{a, b}] = identity_map(c->hom(a, b));
  return f;
}

VFunctor compose_vfunctors(const VFunctor& g, const VFunctor& f) {
  VFunctor h;
  h.src = f.src;
  h.dst = g.dst;
  for (const auto& [a, fa] : f.omap) h.omap[a] = g.omap.at(fa);
  for (const auto& a : f.src->objects)
    for (const auto& b : f.src->objects)
      h.hom_action[{a, b}] =
          compose(g.action(f.omap.at(a), f.omap.at(b)), f.action(a, b));
  return h;
}

VFunctor object_functor(const VCatPtr& c, const std::string& obj) {
  if (!c->has_object(obj)) throw ValidationError("object_functor: no object " + obj);
  VCatPtr i = unit_vcategory(c->base);
  VFunctor f;
  f.src = i;
  f.dst = c;
  f.omap["*"] = obj;
  f.hom_action[{"*", "*"}] = c->ident(obj);
  return validate_vfunctor(f);
}

VMap apply_vfunctor(const VFunctor& f, const std::string& a,
                    const std::string& b, const VMap& elem) {
  return compose(f.action(a, b), elem);
}

bool vfunctor_fully_faithful(const VFunctor& f) {
  for (const auto& a : f.src->objects)
    for (const auto& b : f.src->objects)
      if (!is_iso(f.action(a, b))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Underlying category, h*, bipolar objects
// ---------------------------------------------------------------------------

std::string Underlying::name_of(const std::string& a, const std::string& b,
                                const VMap& elem) const {
  for (const auto& [n, e] : elems) {
    auto ep = endpoints.at(n);
    if (ep.first == a && ep.second == b && e.action == elem.action) return n;
  }
  throw ValidationError("element not found in underlying category");
}

Underlying underlying_category(const VCategory& c, const Budget& budget) {
  Underlying u;
  u.cat.objects = c.objects;
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) {
      auto els = global_elements(c.hom(a, b), budget);
      for (const auto& e : els) {
        // Name by position in the element enumeration.
        std::string label;
        {
          // The element of hom(a,b) the map picks: its canonical key.
          label = e.key();
        }
        std::string name = "e(" + a + "," + b + "," + label + ")";
        u.cat.mors.push_back({name, a, b});
        u.elems.emplace(name, e);
        u.endpoints[name] = {a, b};
      }
    }
  std::sort(u.cat.mors.begin(), u.cat.mors.end(),
            [](const FinMor& x, const FinMor& y) { return x.name < y.name; });
  for (const auto& a : c.objects)
    u.cat.ident[a] = u.name_of(a, a, c.ident(a));
  for (const auto& g : u.cat.mors)
    for (const auto& f : u.cat.mors) {
      if (f.tgt != g.src) continue;
      VMap ge = u.elems.at(g.name);
      VMap fe = u.elems.at(f.name);
      VMap comp = compose_elements(c, f.src, f.tgt, g.tgt, ge, fe);
      u.cat.comp[{g.name, f.name}] = u.name_of(f.src, g.tgt, comp);
    }
  u.cat.validate();
  return u;
}

std::optional<GlobalHomotopyWitness> vhomotopic(const VCategory& c,
                                                const std::string& a,
                                                const std::string& b,
                                                const VMap& f, const VMap& g,
                                                const Budget& budget) {
  if (!(f.dst == c.hom(a, b)) || !(g.dst == c.hom(a, b)))
    throw ValidationError("vhomotopic: elements not parallel in hom(" + a + "," +
                          b + ")");
  return homotopic_global(f, g, budget);
}

ERCategory homotopy_er(const VCategory& c, const Budget& budget) {
  Underlying u = underlying_category(c, budget);
  ERCategory er;
  er.cat = u.cat;
  for (const auto& f : u.cat.mors)
    for (const auto& g : u.cat.mors) {
      if (f.src != g.src || f.tgt != g.tgt || f.name == g.name) continue;
      if (vhomotopic(c, f.src, f.tgt, u.elems.at(f.name), u.elems.at(g.name),
                     budget)
              .has_value())
        er.related.insert({f.name, g.name});
    }
  // Re-verify: equivalence relation per hom-set and congruence on both sides.
  for (const auto& p : er.related) {
    if (!er.rel(p.second, p.first))
      throw InternalError("homotopy relation not symmetric at (" + p.first + "," +
                          p.second + ")");
  }
  for (const auto& p : er.related)
    for (const auto& q : er.related) {
      if (p.second != q.first) continue;
      if (!er.rel(p.first, q.second))
        throw InternalError("homotopy relation not transitive");
    }
  // Congruence: u∘f∘v related to u∘g∘v whenever f related to g.
  for (const auto& p : er.related) {
    const FinMor& f = er.cat.mor(p.first);
    for (const auto& pre : er.cat.mors) {
      if (pre.tgt != f.src) continue;
      for (const auto& post : er.cat.mors) {
        if (post.src != f.tgt) continue;
        std::string lhs = er.cat.compose(post.name, er.cat.compose(p.first, pre.name));
        std::string rhs = er.cat.compose(post.name, er.cat.compose(p.second, pre.name));
        if (!er.rel(lhs, rhs))
          throw InternalError("homotopy relation not a congruence");
      }
    }
  }
  return er;
}

std::optional<std::pair<std::string, std::string>> er_equivalence(
    const ERCategory& er, const std::string& a, const std::string& b) {
  for (const auto& f : er.cat.hom(a, b))
    for (const auto& g : er.cat.hom(b, a)) {
      if (er.rel(er.cat.compose(g, f), er.cat.ident.at(a)) &&
          er.rel(er.cat.compose(f, g), er.cat.ident.at(b)))
        return std::make_pair(f, g);
    }
  return std::nullopt;
}

BipolarResult is_bipolar(const VCategory& c, const std::string& x,
                         Direction dir, const Budget& budget) {
  Underlying u = underlying_category(c, budget);
  BipolarCertificate cert;
  cert.object = x;
  cert.direction = dir;
  for (const auto& a : c.objects) {
    std::string s = (dir == Direction::Initial) ? x : a;
    std::string t = (dir == Direction::Initial) ? a : x;
    auto hom = u.cat.hom(s, t);
    if (hom.empty())
      return {std::nullopt, "no morphism " + s + " → " + t};
    cert.arrows[a] = hom.front();
    for (const auto& f : hom)
      for (const auto& g : hom) {
        if (f >= g) continue;
        auto w = vhomotopic(c, s, t, u.elems.at(f), u.elems.at(g), budget);
        if (!w)
          return {std::nullopt, "parallel pair (" + f + "," + g +
                                    ") not homotopic"};
        cert.uniqueness[{f, g}] = *w;
      }
  }
  return {cert, ""};
}

bool check_bipolar_certificate(const VCategory& c, const Underlying& und,
                               const BipolarCertificate& cert) {
  for (const auto& a : c.objects) {
    auto it = cert.arrows.find(a);
    if (it == cert.arrows.end()) return false;
    std::string s = (cert.direction == Direction::Initial) ? cert.object : a;
    std::string t = (cert.direction == Direction::Initial) ? a : cert.object;
    auto ep = und.endpoints.find(it->second);
    if (ep == und.endpoints.end() || ep->second.first != s ||
        ep->second.second != t)
      return false;
    auto hom = und.cat.hom(s, t);
    for (const auto& f : hom)
      for (const auto& g : hom) {
        if (f >= g) continue;
        auto w = cert.uniqueness.find({f, g});
        if (w == cert.uniqueness.end()) return false;
        if (!check_homotopy_witness(w->second, und.elems.at(f), und.elems.at(g)))
          return false;
      }
  }
  return true;
}

GlobalHomotopyWitness transport_homotopy(const VFunctor& f, const std::string& a,
                                         const std::string& b,
                                         const GlobalHomotopyWitness& w) {
  return {w.interval, compose(f.action(a, b), w.h)};
}

}  // namespace homcat
