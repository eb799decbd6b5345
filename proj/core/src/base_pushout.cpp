#include <algorithm>
#include <map>
#include <set>

#include "base_detail.hpp"
#include "homcat/labels.hpp"

namespace homcat {

using detail::aug_map_of;
using detail::basepoint_of;
using detail::elems_of;
using detail::is_pointed;
using detail::make_cat_obj;
using detail::make_pointed_obj;
using detail::make_set_obj;

namespace {

struct UnionFind {
  std::map<std::string, std::string> parent;
  void add(const std::string& x) {
    if (!parent.count(x)) parent[x] = x;
  }
  std::string find(const std::string& x) {
    std::string r = x;
    while (parent.at(r) != r) r = parent.at(r);
    // path compression
    std::string c = x;
    while (parent.at(c) != r) {
      std::string n = parent.at(c);
      parent[c] = r;
      c = n;
    }
    return r;
  }
  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    // smaller representative wins, for determinism
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
  }
  // class members of each representative
  std::map<std::string, std::vector<std::string>> classes() {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& [x, _] : parent) out[find(x)].push_back(x);
    return out;
  }
};

PushoutObj setlike_pushout(const VMap& f, const VMap& g) {
  const VObj& B = f.dst;
  const VObj& C = g.dst;
  BaseKind k = B.kind;
  UnionFind uf;
  for (const auto& b : elems_of(B)) uf.add(tag_left(b));
  for (const auto& c : elems_of(C)) uf.add(tag_right(c));
  for (const auto& a : elems_of(f.src))
    uf.unite(tag_left(apply_elem(f.action, a)), tag_right(apply_elem(g.action, a)));
  std::set<std::string> reps;
  for (const auto& b : elems_of(B)) reps.insert(uf.find(tag_left(b)));
  for (const auto& c : elems_of(C)) reps.insert(uf.find(tag_right(c)));
  std::vector<std::string> es(reps.begin(), reps.end());
  VObj P = is_pointed(k)
               ? make_pointed_obj(k, es, uf.find(tag_left(basepoint_of(B))))
               : make_set_obj(k, es);
  ElemAction l1, l2;
  for (const auto& b : elems_of(B)) l1.table[b] = uf.find(tag_left(b));
  for (const auto& c : elems_of(C)) l2.table[c] = uf.find(tag_right(c));
  return {P, make_vmap(B, P, l1), make_vmap(C, P, l2)};
}

// --- category pushout by generators, relations and path saturation --------

struct CatPushout {
  const FinCat& A;
  const FinCat& B;
  const FinCat& C;
  const CatAction& F;  // A -> B
  const CatAction& G;  // A -> C
  const Budget& budget;

  UnionFind objs;       // over tagged objects
  UnionFind edges;      // over tagged morphism names (identities included)
  std::map<std::string, const FinMor*> bmor, cmor;
  std::set<std::string> unital;  // edge-class reps containing an identity

  std::string obj_class(const std::string& tagged) { return objs.find(tagged); }

  void build_classes() {
    for (const auto& o : B.objects) objs.add(tag_left(o));
    for (const auto& o : C.objects) objs.add(tag_right(o));
    for (const auto& o : A.objects)
      objs.unite(tag_left(F.omap.at(o)), tag_right(G.omap.at(o)));
    for (const auto& m : B.mors) {
      edges.add(tag_left(m.name));
      bmor[m.name] = &m;
    }
    for (const auto& m : C.mors) {
      edges.add(tag_right(m.name));
      cmor[m.name] = &m;
    }
    for (const auto& m : A.mors)
      edges.unite(tag_left(F.mmap.at(m.name)), tag_right(G.mmap.at(m.name)));
    for (const auto& [o, id] : B.ident) unital.insert(edges.find(tag_left(id)));
    for (const auto& [o, id] : C.ident) unital.insert(edges.find(tag_right(id)));
  }

  // Members of an edge class living in B (resp. C), in deterministic order.
  std::vector<const FinMor*> b_members(const std::string& rep) {
    std::vector<const FinMor*> out;
    for (const auto& [tagged, _] : edges.parent)
      if (edges.find(tagged) == rep && tagged[0] == 'l')
        out.push_back(bmor.at(tagged.substr(2, tagged.size() - 3)));
    return out;
  }
  std::vector<const FinMor*> c_members(const std::string& rep) {
    std::vector<const FinMor*> out;
    for (const auto& [tagged, _] : edges.parent)
      if (edges.find(tagged) == rep && tagged[0] == 'r')
        out.push_back(cmor.at(tagged.substr(2, tagged.size() - 3)));
    return out;
  }

  std::string edge_src(const std::string& rep) {
    for (const auto* m : b_members(rep)) return obj_class(tag_left(m->src));
    for (const auto* m : c_members(rep)) return obj_class(tag_right(m->src));
    throw InternalError("empty edge class");
  }
  std::string edge_tgt(const std::string& rep) {
    for (const auto* m : b_members(rep)) return obj_class(tag_left(m->tgt));
    for (const auto* m : c_members(rep)) return obj_class(tag_right(m->tgt));
    throw InternalError("empty edge class");
  }

  // Paths are stored first-applied-first.
  using Path = std::vector<std::string>;

  Path normalize(Path p) {
    bool changed = true;
    while (changed) {
      changed = false;
      // drop unital edges
      for (std::size_t i = 0; i < p.size(); ++i)
        if (unital.count(p[i])) {
          p.erase(p.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
      if (changed) continue;
      // collapse an adjacent pair composable within one component
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        bool done = false;
        for (const auto* m1 : b_members(p[i])) {
          for (const auto* m2 : b_members(p[i + 1])) {
            if (m1->tgt != m2->src) continue;
            std::string comp = B.compose(m2->name, m1->name);
            p[i] = edges.find(tag_left(comp));
            p.erase(p.begin() + static_cast<long>(i) + 1);
            done = true;
            break;
          }
          if (done) break;
        }
        if (!done) {
          for (const auto* m1 : c_members(p[i])) {
            for (const auto* m2 : c_members(p[i + 1])) {
              if (m1->tgt != m2->src) continue;
              std::string comp = C.compose(m2->name, m1->name);
              p[i] = edges.find(tag_right(comp));
              p.erase(p.begin() + static_cast<long>(i) + 1);
              done = true;
              break;
            }
            if (done) break;
          }
        }
        if (done) {
          changed = true;
          break;
        }
      }
    }
    return p;
  }

  std::string path_name(const std::string& src_class, const Path& p) {
    if (p.empty()) return "1_" + src_class;
    std::string n = "p{";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) n += ";";
      n += p[i];
    }
    return n + "}";
  }

  FinCat result;
  std::map<std::pair<std::string, Path>, std::string> path_names;

  void saturate() {
    std::set<std::string> obj_reps;
    for (const auto& o : B.objects) obj_reps.insert(obj_class(tag_left(o)));
    for (const auto& o : C.objects) obj_reps.insert(obj_class(tag_right(o)));
    result.objects.assign(obj_reps.begin(), obj_reps.end());
    budget.check_objects(result.objects.size(), "category pushout");

    std::set<std::string> edge_reps;
    for (const auto& [tagged, _] : edges.parent) {
      std::string rep = edges.find(tagged);
      if (!unital.count(rep)) edge_reps.insert(rep);
    }

    // All normal forms reachable with raw length <= max_path_length.
    // Key: (source object class, path).
    std::set<std::pair<std::string, Path>> forms;
    std::vector<std::pair<std::string, Path>> frontier;
    for (const auto& o : result.objects) {
      forms.insert({o, {}});
      frontier.push_back({o, {}});
    }
    for (std::size_t len = 0; len < budget.max_path_length; ++len) {
      std::vector<std::pair<std::string, Path>> next;
      for (const auto& [src, p] : frontier) {
        std::string end = p.empty() ? src : edge_tgt(p.back());
        for (const auto& e : edge_reps) {
          if (edge_src(e) != end) continue;
          Path q = p;
          q.push_back(e);
          q = normalize(q);
          budget.charge();
          if (forms.insert({src, q}).second) next.push_back({src, q});
        }
      }
      if (next.empty()) break;
      if (len + 1 == budget.max_path_length && !next.empty())
        throw BudgetError("category pushout did not stabilise within max_path_length");
      frontier = std::move(next);
      budget.check_candidates(forms.size(), "category pushout saturation");
    }

    for (const auto& [src, p] : forms) {
      std::string tgt = p.empty() ? src : edge_tgt(p.back());
      std::string name = path_name(src, p);
      path_names[{src, p}] = name;
      result.mors.push_back({name, src, tgt});
      if (p.empty()) result.ident[src] = name;
    }
    std::sort(result.mors.begin(), result.mors.end(),
              [](const FinMor& a, const FinMor& b) { return a.name < b.name; });

    // Composition: concatenate then normalize; must land in the saturated set.
    for (const auto& [src2, p2] : forms)
      for (const auto& [src1, p1] : forms) {
        std::string t1 = p1.empty() ? src1 : edge_tgt(p1.back());
        if (t1 != src2) continue;
        Path q = p1;
        q.insert(q.end(), p2.begin(), p2.end());
        q = normalize(q);
        auto it = path_names.find({src1, q});
        if (it == path_names.end())
          throw BudgetError("category pushout composition escapes saturation cap");
        result.comp[{path_names.at({src2, p2}), path_names.at({src1, p1})}] =
            it->second;
      }
    result.validate();
  }

  VMap leg_from(const FinCat& side, bool left, const VObj& P, const VObj& from) {
    CatAction a;
    for (const auto& o : side.objects)
      a.omap[o] = obj_class(left ? tag_left(o) : tag_right(o));
    for (const auto& m : side.mors) {
      std::string rep = edges.find(left ? tag_left(m.name) : tag_right(m.name));
      std::string src_class = obj_class(left ? tag_left(m.src) : tag_right(m.src));
      Path p = normalize({rep});
      a.mmap[m.name] = path_names.at({src_class, p});
    }
    return make_vmap(from, P, a);
  }
};

PushoutObj cat_pushout(const VMap& f, const VMap& g, const Budget& budget) {
  CatPushout po{f.src.cat(),
                f.dst.cat(),
                g.dst.cat(),
                std::get<CatAction>(f.action),
                std::get<CatAction>(g.action),
                budget,
                {}, {}, {}, {}, {}, {}, {}};
  po.build_classes();
  po.saturate();
  VObj P = make_cat_obj(f.dst.kind, po.result);
  return {P, po.leg_from(po.B, true, P, f.dst), po.leg_from(po.C, false, P, g.dst)};
}

}  // namespace

PushoutObj pushout(const VMap& f, const VMap& g, const Budget& budget) {
  if (!(f.src == g.src)) throw ValidationError("pushout: domains differ");
  BaseKind k = f.src.kind;
  if (k.sliced) {
    PushoutObj pu = pushout(underlying_map(f), underlying_map(g), budget);
    VMap aug = pushout_mediator(pu, aug_map_of(f.dst), aug_map_of(g.dst));
    VObj P = VObj::make_sliced(pu.obj, aug.action);
    return {P, make_vmap(f.dst, P, pu.leg1.action), make_vmap(g.dst, P, pu.leg2.action)};
  }
  if (f.src.is_cat()) return cat_pushout(f, g, budget);
  return setlike_pushout(f, g);
}

VMap pushout_mediator(const PushoutObj& po, const VMap& u, const VMap& v) {
  if (!(u.dst == v.dst)) throw ValidationError("pushout_mediator: targets differ");
  //같은 pattern as copair: read the leg tables backwards.  Where classes
  // were merged the two reads agree because u∘f = v∘g.
  if (po.obj.is_cat() || (po.obj.kind.sliced && po.obj.underlying().is_cat())) {
    CatAction a;
    const auto& l1 = std::get<CatAction>(po.leg1.action);
    const auto& l2 = std::get<CatAction>(po.leg2.action);
    for (const auto& [o, t] : l1.omap) a.omap[t] = apply_obj(u.action, o);
    for (const auto& [o, t] : l2.omap) a.omap[t] = apply_obj(v.action, o);
    // Morphisms of the pushout are composites of leg images; build by
    // decomposing each pushout morphism through the legs where possible,
    // otherwise by composing its path entries.
    // Every path entry is the image of a B- or C-morphism under a leg.
    std::map<std::string, std::string> via;  // pushout mor -> image in target
    for (const auto& [m, t] : l1.mmap) {
      auto img = apply_mor(u.action, m);
      via[t] = img;
    }
    for (const auto& [m, t] : l2.mmap) via[t] = apply_mor(v.action, m);
    const FinCat& P = po.obj.underlying().cat();
    const FinCat& T = u.dst.underlying().cat();
    // Saturate: compose known images along the composition table until all
    // morphisms are covered.
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& [gf, h] : P.comp) {
        if (via.count(h)) continue;
        auto ig = via.find(gf.first);
        auto iff = via.find(gf.second);
        if (ig == via.end() || iff == via.end()) continue;
        via[h] = T.compose(ig->second, iff->second);
        grew = true;
      }
    }
    for (const auto& m : P.mors) {
      auto it = via.find(m.name);
      if (it == via.end())
        throw InternalError("pushout_mediator: morphism '" + m.name +
                            "' not generated by legs");
      a.mmap[m.name] = it->second;
    }
    return make_vmap(po.obj, u.dst, a);
  }
  ElemAction a;
  const auto& l1 = std::get<ElemAction>(po.leg1.action);
  const auto& l2 = std::get<ElemAction>(po.leg2.action);
  for (const auto& [e, t] : l1.table) a.table[t] = apply_elem(u.action, e);
  for (const auto& [e, t] : l2.table) a.table[t] = apply_elem(v.action, e);
  return make_vmap(po.obj, u.dst, a);
}

}  // namespace homcat
