#include "homcat/interval.hpp"

#include <vector>

namespace homcat {

Interval validate_interval(const Interval& j, const Budget& budget) {
  std::vector<std::string> bad;
  VObj i = unit_object(j.J.kind);
  if (!(j.d.src == i) || !(j.c.src == i) || !(j.d.dst == j.J) ||
      !(j.c.dst == j.J) || !(j.e.src == j.J) || !(j.e.dst == i))
    throw ValidationError("interval: maps not typed I→J→I");
  if (!(compose(j.e, j.d).action == identity_map(i).action))
    bad.push_back("e∘d ≠ 1");
  if (!(compose(j.e, j.c).action == identity_map(i).action))
    bad.push_back("e∘c ≠ 1");
  CoprodObj ii = coproduct(i, i);
  VMap dc = copair(ii, j.d, j.c);
  MapClass mdc = classify_map(dc, budget);
  if (!mdc.cofibration) bad.push_back("(d c) not a cofibration");
  MapClass me = classify_map(j.e, budget);
  if (!me.weak_equivalence) bad.push_back("e not a weak equivalence");
  // Equivalent characterisations.
  MapClass md = classify_map(j.d, budget);
  MapClass mc = classify_map(j.c, budget);
  bool d_tc = md.trivial_cofibration();
  bool c_tc = mc.trivial_cofibration();
  if (mdc.cofibration && (d_tc != me.weak_equivalence || c_tc != me.weak_equivalence))
    bad.push_back("characterisation mismatch: d/c trivial-cofibration vs e");
  if (!bad.empty()) {
    std::string msg = "invalid interval:";
    for (const auto& s : bad) msg += " [" + s + "]";
    throw ValidationError(msg);
  }
  return j;
}

Interval standard_interval(BaseKind k, const Budget& budget) {
  if (k.sliced) {
    Interval p = standard_interval(k.parent(), budget);
    VObj j = VObj::make_sliced(p.J, p.e.action);
    VObj i = unit_object(k);
    Interval s{j, make_vmap(i, j, p.d.action), make_vmap(i, j, p.c.action),
               make_vmap(j, i, p.e.action)};
    return validate_interval(s, budget);
  }
  VObj i = unit_object(k);
  switch (k.tag) {
    case BaseTag::SetTrivial:
    case BaseTag::PointedTrivial: {
      // Weak equivalences are isomorphisms, so J ≅ I.
      VMap id = identity_map(i);
      return validate_interval({i, id, id, id}, budget);
    }
    case BaseTag::SetSplit: {
      // Cograph interval: J = I+I, e the codiagonal.
      CoprodObj ii = coproduct(i, i);
      VMap e = copair(ii, identity_map(i), identity_map(i));
      return validate_interval({ii.obj, ii.in1, ii.in2, e}, budget);
    }
    case BaseTag::CatCanonical: {
      // Chaotic two-object category; endpoints are injective on objects and
      // the unique functor to 1 is a surjective equivalence.
      VObj j = VObj::make(k, chaotic_category({"0", "1"}));
      auto pts = global_elements(j, budget);
      VMap e = hom_maps(j, i, budget).at(0);
      return validate_interval({j, pts[0], pts[1], e}, budget);
    }
  }
  throw InternalError("unreachable");
}

ComposedInterval compose_intervals_full(const Interval& j1, const Interval& j2,
                                        const Budget& budget) {
  // Pushout of c1 : I → J1 and d2 : I → J2.
  PushoutObj po = pushout(j1.c, j2.d, budget);
  VMap e = pushout_mediator(po, j1.e, j2.e);
  Interval out{po.obj, compose(po.leg1, j1.d), compose(po.leg2, j2.c), e};
  return {validate_interval(out, budget), po.leg1, po.leg2};
}

Interval compose_intervals(const Interval& j1, const Interval& j2,
                           const Budget& budget) {
  return compose_intervals_full(j1, j2, budget).interval;
}

Interval tensor_intervals(const Interval& j1, const Interval& j2,
                          const Budget& budget) {
  BaseKind k = j1.J.kind;
  VObj i = unit_object(k);
  VMap d = compose(tensor_map(j1.d, j2.d), unitor_l_inv(i));
  VMap c = compose(tensor_map(j1.c, j2.c), unitor_l_inv(i));
  VMap e = compose(unitor_l(i), tensor_map(j1.e, j2.e));
  return validate_interval({tensor(j1.J, j2.J), d, c, e}, budget);
}

Interval reverse_interval(const Interval& j) { return {j.J, j.c, j.d, j.e}; }

bool check_homotopy_witness(const GlobalHomotopyWitness& w, const VMap& x,
                            const VMap& y) {
  if (!(w.h.src == w.interval.J)) return false;
  return compose(w.h, w.interval.d).action == x.action &&
         compose(w.h, w.interval.c).action == y.action;
}

std::optional<GlobalHomotopyWitness> homotopic_global(const VMap& x,
                                                      const VMap& y,
                                                      const Budget& budget) {
  if (!(x.src == y.src) || !(x.dst == y.dst))
    throw ValidationError("homotopic_global: maps not parallel from I");
  Interval j = standard_interval(x.src.kind, budget);
  if (x.action == y.action) {
    // Trivial witness through e.
    return GlobalHomotopyWitness{j, compose(x, j.e)};
  }
  for (const auto& h : hom_maps(j.J, x.dst, budget)) {
    budget.charge();
    GlobalHomotopyWitness w{j, h};
    if (check_homotopy_witness(w, x, y)) return w;
  }
  return std::nullopt;
}

GlobalHomotopyWitness compose_homotopies(const GlobalHomotopyWitness& w1,
                                         const GlobalHomotopyWitness& w2,
                                         const Budget& budget) {
  ComposedInterval ci = compose_intervals_full(w1.interval, w2.interval, budget);
  // Mediator out of the pushout: agrees with h1 on J1 and h2 on J2.
  PushoutObj po{ci.interval.J, ci.leg1, ci.leg2};
  VMap h = pushout_mediator(po, w1.h, w2.h);
  return {ci.interval, h};
}

GlobalHomotopyWitness map_homotopy(const VMap& f, const GlobalHomotopyWitness& w) {
  return {w.interval, compose(f, w.h)};
}

GlobalHomotopyWitness reverse_homotopy(const GlobalHomotopyWitness& w) {
  return {reverse_interval(w.interval), w.h};
}

}  // namespace homcat
