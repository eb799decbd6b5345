#include "homcat/fin.hpp"

#include <algorithm>
#include <set>

#include "homcat/labels.hpp"

namespace homcat {

namespace {

void sort_unique(std::vector<std::string>& v, const char* what) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw ValidationError(std::string("duplicate ") + what);
}

}  // namespace

FinSet FinSet::of(std::vector<std::string> es) {
  sort_unique(es, "set element");
  return FinSet{std::move(es)};
}

bool FinSet::contains(const std::string& e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

FinPointed FinPointed::of(std::vector<std::string> es, std::string base) {
  sort_unique(es, "pointed-set element");
  FinPointed p{std::move(es), std::move(base)};
  if (!p.contains(p.basepoint))
    throw ValidationError("basepoint '" + p.basepoint + "' not an element");
  return p;
}

bool FinPointed::contains(const std::string& e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

// ---------------------------------------------------------------------------
// FinCat
// ---------------------------------------------------------------------------

const FinMor& FinCat::mor(const std::string& name) const {
  auto it = std::lower_bound(
      mors.begin(), mors.end(), name,
      [](const FinMor& m, const std::string& n) { return m.name < n; });
  if (it == mors.end() || it->name != name)
    throw ValidationError("no morphism named '" + name + "'");
  return *it;
}

bool FinCat::has_object(const std::string& o) const {
  return std::binary_search(objects.begin(), objects.end(), o);
}

bool FinCat::has_mor(const std::string& m) const {
  auto it = std::lower_bound(
      mors.begin(), mors.end(), m,
      [](const FinMor& a, const std::string& n) { return a.name < n; });
  return it != mors.end() && it->name == m;
}

std::vector<std::string> FinCat::hom(const std::string& a,
                                     const std::string& b) const {
  std::vector<std::string> out;
  for (const auto& m : mors)
    if (m.src == a && m.tgt == b) out.push_back(m.name);
  return out;
}

std::string FinCat::compose(const std::string& g, const std::string& f) const {
  auto it = comp.find({g, f});
  if (it == comp.end())
    throw ValidationError("composite " + g + " after " + f + " undefined");
  return it->second;
}

bool FinCat::is_identity(const std::string& m) const {
  for (const auto& [o, id] : ident)
    if (id == m) return true;
  return false;
}

std::optional<std::string> FinCat::inverse(const std::string& m) const {
  const FinMor& f = mor(m);
  for (const std::string& g : hom(f.tgt, f.src)) {
    if (compose(g, m) == ident.at(f.src) && compose(m, g) == ident.at(f.tgt))
      return g;
  }
  return std::nullopt;
}

bool FinCat::is_iso(const std::string& m) const { return inverse(m).has_value(); }

void FinCat::validate() const {
  if (!std::is_sorted(objects.begin(), objects.end()))
    throw ValidationError("objects not sorted");
  if (std::adjacent_find(objects.begin(), objects.end()) != objects.end())
    throw ValidationError("duplicate object");
  if (!std::is_sorted(mors.begin(), mors.end(),
                      [](const FinMor& a, const FinMor& b) { return a.name < b.name; }))
    throw ValidationError("morphisms not sorted by name");
  for (std::size_t i = 1; i < mors.size(); ++i)
    if (mors[i].name == mors[i - 1].name)
      throw ValidationError("duplicate morphism name '" + mors[i].name + "'");
  for (const auto& m : mors) {
    if (!has_object(m.src) || !has_object(m.tgt))
      throw ValidationError("morphism '" + m.name + "' has unknown endpoint");
  }
  for (const auto& o : objects) {
    auto it = ident.find(o);
    if (it == ident.end())
      throw ValidationError("object '" + o + "' has no identity");
    const FinMor& id = mor(it->second);
    if (id.src != o || id.tgt != o)
      throw ValidationError("identity of '" + o + "' is not an endomorphism");
  }
  if (ident.size() != objects.size())
    throw ValidationError("identity table has extra entries");
  // Totality and typing of the composition table.
  for (const auto& g : mors)
    for (const auto& f : mors) {
      bool composable = (f.tgt == g.src);
      auto it = comp.find({g.name, f.name});
      if (composable != (it != comp.end()))
        throw ValidationError("composition table wrong domain at (" + g.name +
                              "," + f.name + ")");
      if (!composable) continue;
      const FinMor& gf = mor(it->second);
      if (gf.src != f.src || gf.tgt != g.tgt)
        throw ValidationError("composite " + g.name + "∘" + f.name +
                              " has wrong endpoints");
    }
  // Unit laws.
  for (const auto& f : mors) {
    if (compose(ident.at(f.tgt), f.name) != f.name)
      throw ValidationError("left unit law fails at '" + f.name + "'");
    if (compose(f.name, ident.at(f.src)) != f.name)
      throw ValidationError("right unit law fails at '" + f.name + "'");
  }
  // Associativity, exhaustively.
  for (const auto& h : mors)
    for (const auto& g : mors) {
      if (g.tgt != h.src) continue;
      for (const auto& f : mors) {
        if (f.tgt != g.src) continue;
        if (compose(h.name, compose(g.name, f.name)) !=
            compose(compose(h.name, g.name), f.name))
          throw ValidationError("associativity fails at (" + h.name + "," +
                                g.name + "," + f.name + ")");
      }
    }
}

FinCat make_category(
    const std::vector<std::string>& objects,
    const std::vector<FinMor>& arrows,
    const std::map<std::pair<std::string, std::string>, std::string>& comp_rule) {
  FinCat c;
  c.objects = objects;
  std::sort(c.objects.begin(), c.objects.end());
  for (const auto& o : c.objects) {
    std::string id = "1_" + o;
    c.ident[o] = id;
    c.mors.push_back({id, o, o});
  }
  for (const auto& a : arrows) c.mors.push_back(a);
  std::sort(c.mors.begin(), c.mors.end(),
            [](const FinMor& a, const FinMor& b) { return a.name < b.name; });
  for (const auto& g : c.mors)
    for (const auto& f : c.mors) {
      if (f.tgt != g.src) continue;
      std::string r;
      if (c.is_identity(g.name))
        r = f.name;
      else if (c.is_identity(f.name))
        r = g.name;
      else {
        auto it = comp_rule.find({g.name, f.name});
        if (it == comp_rule.end())
          throw ValidationError("make_category: missing composite (" + g.name +
                                "," + f.name + ")");
        r = it->second;
      }
      c.comp[{g.name, f.name}] = r;
    }
  c.validate();
  return c;
}

FinCat terminal_category() { return make_category({"*"}, {}, {}); }

FinCat discrete_category(const std::vector<std::string>& objects) {
  return make_category(objects, {}, {});
}

FinCat chaotic_category(const std::vector<std::string>& objects) {
  std::vector<FinMor> arrows;
  std::map<std::pair<std::string, std::string>, std::string> rule;
  auto name = [](const std::string& a, const std::string& b) {
    return "c" + pair_label(a, b);
  };
  for (const auto& a : objects)
    for (const auto& b : objects)
      if (a != b) arrows.push_back({name(a, b), a, b});
  // Unique morphism in each hom-set, so composites are forced.
  for (const auto& a : objects)
    for (const auto& b : objects)
      for (const auto& c : objects) {
        if (a == b || b == c) continue;  // handled by unit laws
        std::string g = name(b, c), f = name(a, b);
        if (a == c)
          rule[{g, f}] = "1_" + a;
        else
          rule[{g, f}] = name(a, c);
      }
  return make_category(objects, arrows, rule);
}

// ---------------------------------------------------------------------------
// Functors
// ---------------------------------------------------------------------------

void validate_functor(const FinCat& c, const FinCat& d, const FinFunctor& f) {
  if (f.omap.size() != c.objects.size())
    throw ValidationError("functor object map has wrong domain");
  for (const auto& o : c.objects) {
    auto it = f.omap.find(o);
    if (it == f.omap.end() || !d.has_object(it->second))
      throw ValidationError("functor object map bad at '" + o + "'");
  }
  if (f.mmap.size() != c.mors.size())
    throw ValidationError("functor morphism map has wrong domain");
  for (const auto& m : c.mors) {
    auto it = f.mmap.find(m.name);
    if (it == f.mmap.end())
      throw ValidationError("functor morphism map missing '" + m.name + "'");
    const FinMor& fm = d.mor(it->second);
    if (fm.src != f.omap.at(m.src) || fm.tgt != f.omap.at(m.tgt))
      throw ValidationError("functor breaks typing at '" + m.name + "'");
  }
  for (const auto& o : c.objects)
    if (f.mmap.at(c.ident.at(o)) != d.ident.at(f.omap.at(o)))
      throw ValidationError("functor breaks identity at '" + o + "'");
  for (const auto& g : c.mors)
    for (const auto& fm : c.mors) {
      if (fm.tgt != g.src) continue;
      if (f.mmap.at(c.compose(g.name, fm.name)) !=
          d.compose(f.mmap.at(g.name), f.mmap.at(fm.name)))
        throw ValidationError("functor breaks composition at (" + g.name + "," +
                              fm.name + ")");
    }
}

FinFunctor identity_functor(const FinCat& c) {
  FinFunctor f;
  for (const auto& o : c.objects) f.omap[o] = o;
  for (const auto& m : c.mors) f.mmap[m.name] = m.name;
  return f;
}

FinFunctor compose_functors(const FinCat&, const FinCat&, const FinCat&,
                            const FinFunctor& g, const FinFunctor& f) {
  FinFunctor h;
  for (const auto& [o, fo] : f.omap) h.omap[o] = g.omap.at(fo);
  for (const auto& [m, fm] : f.mmap) h.mmap[m] = g.mmap.at(fm);
  return h;
}

std::vector<FinFunctor> enumerate_functors(const FinCat& c, const FinCat& d,
                                           const Budget& budget) {
  std::vector<FinFunctor> out;
  if (c.objects.empty()) {
    out.push_back(FinFunctor{});
    return out;
  }
  // Non-identity morphisms, in name order; identities are forced.
  std::vector<const FinMor*> free_mors;
  for (const auto& m : c.mors)
    if (!c.is_identity(m.name)) free_mors.push_back(&m);

  FinFunctor cur;
  // Recursive backtracking: objects first (name order), then morphisms.
  auto assign_mors = [&](auto&& self, std::size_t i) -> void {
    if (i == free_mors.size()) {
      budget.check_candidates(out.size() + 1, "functor enumeration");
      out.push_back(cur);
      return;
    }
    const FinMor& m = *free_mors[i];
    for (const auto& dm : d.mors) {
      budget.charge();
      if (dm.src != cur.omap.at(m.src) || dm.tgt != cur.omap.at(m.tgt)) continue;
      cur.mmap[m.name] = dm.name;
      // Check every composition law whose factors are all assigned.
      bool ok = true;
      for (const auto& [pair, gf] : c.comp) {
        const auto& [g, f] = pair;
        auto ig = cur.mmap.find(g);
        auto iff = cur.mmap.find(f);
        auto igf = cur.mmap.find(gf);
        if (ig == cur.mmap.end() || iff == cur.mmap.end() ||
            igf == cur.mmap.end())
          continue;
        if (d.compose(ig->second, iff->second) != igf->second) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
      cur.mmap.erase(m.name);
    }
  };
  auto assign_objs = [&](auto&& self, std::size_t i) -> void {
    if (i == c.objects.size()) {
      for (const auto& o : c.objects)
        cur.mmap[c.ident.at(o)] = d.ident.at(cur.omap.at(o));
      assign_mors(assign_mors, 0);
      for (const auto& o : c.objects) cur.mmap.erase(c.ident.at(o));
      return;
    }
    for (const auto& q : d.objects) {
      cur.omap[c.objects[i]] = q;
      self(self, i + 1);
      cur.omap.erase(c.objects[i]);
    }
  };
  assign_objs(assign_objs, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Natural transformations
// ---------------------------------------------------------------------------

bool is_natural(const FinCat& c, const FinCat& d, const FinFunctor& f,
                const FinFunctor& g, const FinNat& alpha) {
  for (const auto& m : c.mors) {
    const std::string& a = m.src;
    const std::string& b = m.tgt;
    if (d.compose(g.mmap.at(m.name), alpha.at(a)) !=
        d.compose(alpha.at(b), f.mmap.at(m.name)))
      return false;
  }
  return true;
}

std::vector<FinNat> enumerate_naturals(const FinCat& c, const FinCat& d,
                                       const FinFunctor& f, const FinFunctor& g,
                                       const Budget& budget) {
  std::vector<FinNat> out;
  std::vector<std::vector<std::string>> choices;
  for (const auto& o : c.objects)
    choices.push_back(d.hom(f.omap.at(o), g.omap.at(o)));
  FinNat cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == c.objects.size()) {
      if (is_natural(c, d, f, g, cur)) {
        budget.check_candidates(out.size() + 1, "natural transformation enumeration");
        out.push_back(cur);
      }
      return;
    }
    for (const auto& m : choices[i]) {
      budget.charge();
      cur[c.objects[i]] = m;
      self(self, i + 1);
    }
    cur.erase(c.objects[i]);
  };
  rec(rec, 0);
  return out;
}

bool nat_is_iso(const FinCat& d, const FinNat& alpha) {
  for (const auto& [o, m] : alpha)
    if (!d.is_iso(m)) return false;
  return true;
}

std::optional<EquivalenceWitness> find_equivalence(const FinCat& c,
                                                   const FinCat& d,
                                                   const FinFunctor& f,
                                                   const Budget& budget) {
  // Empty category edge case: equivalent iff both empty.
  if (c.objects.empty() || d.objects.empty()) {
    if (c.objects.empty() && d.objects.empty())
      return EquivalenceWitness{FinFunctor{}, {}, {}};
    return std::nullopt;
  }
  for (const auto& g : enumerate_functors(d, c, budget)) {
    FinFunctor gf = compose_functors(c, d, c, g, f);
    FinFunctor fg = compose_functors(d, c, d, f, g);
    std::optional<FinNat> eta;
    for (const auto& al :
         enumerate_naturals(c, c, gf, identity_functor(c), budget))
      if (nat_is_iso(c, al)) {
        eta = al;
        break;
      }
    if (!eta) continue;
    for (const auto& ep :
         enumerate_naturals(d, d, fg, identity_functor(d), budget))
      if (nat_is_iso(d, ep))
        return EquivalenceWitness{g, *eta, ep};
  }
  return std::nullopt;
}

bool functor_injective_on_objects(const FinCat& c, const FinFunctor& f) {
  std::set<std::string> seen;
  for (const auto& o : c.objects)
    if (!seen.insert(f.omap.at(o)).second) return false;
  return true;
}

bool functor_surjective_on_objects(const FinCat& c, const FinCat& d,
                                   const FinFunctor& f) {
  std::set<std::string> image;
  for (const auto& o : c.objects) image.insert(f.omap.at(o));
  return image.size() == d.objects.size();
}

bool functor_is_isofibration(const FinCat& c, const FinCat& d,
                             const FinFunctor& f) {
  for (const auto& e : c.objects) {
    for (const auto& m : d.mors) {
      if (m.src != f.omap.at(e) || !d.is_iso(m.name)) continue;
      bool lifted = false;
      for (const auto& up : c.mors) {
        if (up.src != e || !c.is_iso(up.name)) continue;
        if (f.mmap.at(up.name) == m.name) {
          lifted = true;
          break;
        }
      }
      if (!lifted) return false;
    }
  }
  return true;
}

bool functor_ff_eso(const FinCat& c, const FinCat& d, const FinFunctor& f) {
  // Fully faithful: each hom map is a bijection.
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) {
      auto domh = c.hom(a, b);
      auto codh = d.hom(f.omap.at(a), f.omap.at(b));
      std::set<std::string> image;
      for (const auto& m : domh) image.insert(f.mmap.at(m));
      if (image.size() != domh.size() || image.size() != codh.size())
        return false;
    }
  // Essentially surjective.
  for (const auto& q : d.objects) {
    bool hit = false;
    for (const auto& o : c.objects) {
      const std::string& p = f.omap.at(o);
      if (p == q) {
        hit = true;
        break;
      }
      for (const auto& m : d.hom(p, q))
        if (d.is_iso(m)) {
          hit = true;
          break;
        }
      if (hit) break;
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace homcat
