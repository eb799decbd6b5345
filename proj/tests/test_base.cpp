#include "doctest.h"

#include "homcat/base.hpp"

using namespace homcat;

namespace {
const BaseKind kTriv{BaseTag::SetTrivial, false};
const BaseKind kSplit{BaseTag::SetSplit, false};
const BaseKind kCat{BaseTag::CatCanonical, false};
const BaseKind kPtd{BaseTag::PointedTrivial, false};

VObj set2(BaseKind k) { return VObj::make(k, FinSet::of({"a", "b"})); }
VObj set1(BaseKind k) { return VObj::make(k, FinSet::of({"x"})); }
VObj set3(BaseKind k) { return VObj::make(k, FinSet::of({"a", "b", "c"})); }
}  // namespace

TEST_CASE("tensor: cartesian product with canonical labels") {
  VObj t = tensor(set2(kSplit), set1(kSplit));
  CHECK(t.set().elems == std::vector<std::string>{"(a,x)", "(b,x)"});
  // functoriality: tensor of identities is the identity
  VMap ti = tensor_map(identity_map(set2(kSplit)), identity_map(set1(kSplit)));
  CHECK(ti.action == identity_map(t).action);
}

TEST_CASE("pointed smash: unit law S0 ⊗ X ≅ X") {
  VObj s0 = unit_object(kPtd);
  VObj x = VObj::make(kPtd, FinPointed::of({"*", "p", "q"}, "*"));
  VObj sx = tensor(s0, x);
  CHECK(sx.pointed().size() == x.pointed().size());
  CHECK(is_iso(unitor_l(x)));
}

TEST_CASE("cat tensor: chaotic-2 squared is chaotic-4") {
  VObj c2 = VObj::make(kCat, chaotic_category({"0", "1"}));
  VObj c4 = tensor(c2, c2);
  CHECK(c4.cat().objects.size() == 4);
  CHECK(c4.cat().mors.size() == 16);
  // chaotic: every hom-set a singleton
  for (const auto& a : c4.cat().objects)
    for (const auto& b : c4.cat().objects)
      CHECK(c4.cat().hom(a, b).size() == 1);
}

TEST_CASE("internal hom sizes") {
  Budget b = Budget::loose();
  // [2,2] has 4 elements
  CHECK(internal_hom(set2(kTriv), set2(kTriv), b).set().size() == 4);
  // [S0, X] ≅ X
  VObj x = VObj::make(kPtd, FinPointed::of({"*", "p", "q"}, "*"));
  CHECK(internal_hom(unit_object(kPtd), x, b).pointed().size() == 3);
  // [chaotic-2, discrete-2] = discrete 2-object category
  VObj c2 = VObj::make(kCat, chaotic_category({"0", "1"}));
  VObj d2 = VObj::make(kCat, discrete_category({"0", "1"}));
  VObj h = internal_hom(c2, d2, b);
  CHECK(h.cat().objects.size() == 2);
  CHECK(h.cat().mors.size() == 2);
}

TEST_CASE("global elements") {
  Budget b = Budget::loose();
  CHECK(global_elements(set3(kTriv), b).size() == 3);
  VObj c2 = VObj::make(kCat, chaotic_category({"0", "1"}));
  CHECK(global_elements(c2, b).size() == 2);
  VObj x = VObj::make(kPtd, FinPointed::of({"*", "p", "q"}, "*"));
  CHECK(global_elements(x, b).size() == 3);
}

TEST_CASE("currying bijection on a sample") {
  Budget b = Budget::loose();
  VObj x = set2(kTriv), y = set2(kTriv), z = set3(kTriv);
  VObj lhs = internal_hom(tensor(x, y), z, b);
  VObj rhs = internal_hom(x, internal_hom(y, z, b), b);
  CHECK(global_elements(lhs, b).size() == global_elements(rhs, b).size());
  // transpose of every map x⊗y→z lands in [y,z] and inverts
  for (const auto& f : hom_maps(tensor(x, y), z, b)) {
    VMap t = transpose(f, x, y, b);
    CHECK(t.dst == internal_hom(y, z, b));
  }
}

TEST_CASE("classify: split model structure") {
  Budget b = Budget::loose();
  // surjection 2 → 1
  VMap surj = make_vmap(set2(kSplit), set1(kSplit),
                        ElemAction{{{"a", "x"}, {"b", "x"}}});
  MapClass mc = classify_map(surj, b);
  CHECK_FALSE(mc.cofibration);
  CHECK(mc.fibration);
  CHECK(mc.weak_equivalence);
}

TEST_CASE("classify: cat canonical on discrete-2 into chaotic-2") {
  Budget b = Budget::loose();
  VObj d2 = VObj::make(kCat, discrete_category({"0", "1"}));
  VObj c2 = VObj::make(kCat, chaotic_category({"0", "1"}));
  VMap incl = make_vmap(
      d2, c2,
      CatAction{{{"0", "0"}, {"1", "1"}}, {{"1_0", "1_0"}, {"1_1", "1_1"}}});
  MapClass mc = classify_map(incl, b);
  CHECK(mc.cofibration);
  CHECK_FALSE(mc.fibration);
  CHECK_FALSE(mc.weak_equivalence);
}

TEST_CASE("classify: identities are everything") {
  Budget b = Budget::loose();
  MapClass mc = classify_map(identity_map(set3(kTriv)), b);
  CHECK(mc.cofibration);
  CHECK(mc.fibration);
  CHECK(mc.weak_equivalence);
}

TEST_CASE("lifting: split WFS") {
  Budget b = Budget::loose();
  // i: {a} ↪ {a,b}, p: 2 → 1 surjection; every commuting square has a filler.
  VObj xa = VObj::make(kSplit, FinSet::of({"a"}));
  VObj xab = set2(kSplit);
  VMap i = make_vmap(xa, xab, ElemAction{{{"a", "a"}}});
  VMap p = make_vmap(set2(kSplit), set1(kSplit),
                     ElemAction{{{"a", "x"}, {"b", "x"}}});
  for (const auto& u : hom_maps(xa, p.src, b)) {
    // v forced: target is a point
    VMap v = hom_maps(xab, p.dst, b).at(0);
    REQUIRE(compose(p, u).action == compose(v, i).action);
    CHECK(solve_lifting(i, p, u, v, b).has_value());
  }
}

TEST_CASE("unit cofibrancy in all four bases") {
  Budget b = Budget::loose();
  for (BaseKind k : {kTriv, kSplit, kCat, kPtd}) {
    VObj init = initial_object(k);
    VObj i = unit_object(k);
    auto maps = hom_maps(init, i, b);
    REQUIRE(maps.size() == 1);
    CHECK(classify_map(maps[0], b).cofibration);
  }
}

TEST_CASE("coproduct and pushout of sets") {
  Budget b = Budget::loose();
  CoprodObj cp = coproduct(set1(kSplit), set1(kSplit));
  CHECK(cp.obj.set().size() == 2);
  // 2 ⊔_1 2 along the same injection: the shared point glues, 3 remain
  PushoutObj po = pushout(cp.in1, cp.in1, b);
  CHECK(po.obj.set().size() == 3);
  // pushout gluing: f,g both the inclusion of 1 into 2 at different points
  VObj two = set2(kSplit);
  VMap fa = make_vmap(set1(kSplit), two, ElemAction{{{"x", "a"}}});
  VMap fb = make_vmap(set1(kSplit), two, ElemAction{{{"x", "b"}}});
  PushoutObj glue = pushout(fa, fb, b);
  CHECK(glue.obj.set().size() == 3);
}

TEST_CASE("cat pushout: two chaotic-2 glued at a point give chaotic-3") {
  Budget b = Budget::loose();
  VObj one = unit_object(kCat);
  VObj c2 = VObj::make(kCat, chaotic_category({"0", "1"}));
  // endpoints 0 and 1 as functors 1 → chaotic-2
  auto pts = global_elements(c2, b);
  REQUIRE(pts.size() == 2);
  PushoutObj po = pushout(pts[1], pts[0], b);  // glue 1 of left to 0 of right
  CHECK(po.obj.cat().objects.size() == 3);
  CHECK(po.obj.cat().mors.size() == 9);
  for (const auto& a : po.obj.cat().objects)
    for (const auto& bb : po.obj.cat().objects)
      CHECK(po.obj.cat().hom(a, bb).size() == 1);
}

TEST_CASE("pullback of sets") {
  Budget b = Budget::loose();
  VMap f = make_vmap(set2(kTriv), set1(kTriv), ElemAction{{{"a", "x"}, {"b", "x"}}});
  PullbackObj pb = pullback(f, f, b);
  CHECK(pb.obj.set().size() == 4);
}

TEST_CASE("monoidal coherence maps are isos") {
  Budget b = Budget::loose();
  for (BaseKind k : {kTriv, kSplit, kPtd}) {
    VObj x = (k == kPtd) ? VObj::make(k, FinPointed::of({"*", "p"}, "*"))
                         : set2(k);
    CHECK(is_iso(unitor_l(x)));
    CHECK(is_iso(unitor_r(x)));
    CHECK(is_iso(braiding(x, x)));
    CHECK(is_iso(associator(x, x, x)));
  }
  VObj c = VObj::make(kCat, chaotic_category({"0", "1"}));
  CHECK(is_iso(unitor_l(c)));
  CHECK(is_iso(associator(c, c, c)));
  (void)b;
}

TEST_CASE("eval and internal composition agree with composition") {
  Budget b = Budget::loose();
  VObj x = set2(kTriv), y = set2(kTriv), z = set3(kTriv);
  VMap m = internal_compose_map(x, y, z, b);
  for (const auto& g : hom_maps(y, z, b))
    for (const auto& f : hom_maps(x, y, b)) {
      VMap ge = name_element(g, b);
      VMap fe = name_element(f, b);
      VMap pair = compose(tensor_map(ge, fe), unitor_l_inv(unit_object(kTriv)));
      VMap composite_elem = compose(m, pair);
      VMap expect = name_element(compose(g, f), b);
      CHECK(composite_elem.action == expect.action);
    }
}
