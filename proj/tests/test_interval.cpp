#include "doctest.h"

#include "homcat/interval.hpp"

using namespace homcat;

namespace {
const BaseKind kTriv{BaseTag::SetTrivial, false};
const BaseKind kSplit{BaseTag::SetSplit, false};
const BaseKind kCat{BaseTag::CatCanonical, false};
const BaseKind kPtd{BaseTag::PointedTrivial, false};
const Budget B = Budget::loose();
}  // namespace

TEST_CASE("standard intervals validate in all bases") {
  CHECK(standard_interval(kTriv, B).J.set().size() == 1);
  CHECK(standard_interval(kSplit, B).J.set().size() == 2);
  CHECK(standard_interval(kCat, B).J.cat().objects.size() == 2);
  CHECK(standard_interval(kPtd, B).J.pointed().size() == 2);
}

TEST_CASE("invalid interval: discrete-2 with collapse functor") {
  // e : discrete-2 → 1 is not an equivalence.
  VObj d2 = VObj::make(kCat, discrete_category({"0", "1"}));
  VObj one = unit_object(kCat);
  auto pts = global_elements(d2, B);
  VMap e = hom_maps(d2, one, B).at(0);
  CHECK_THROWS_AS(validate_interval({d2, pts[0], pts[1], e}, B),
                  ValidationError);
}

TEST_CASE("composition of split intervals gives a 3-element interval") {
  Interval j = standard_interval(kSplit, B);
  Interval jj = compose_intervals(j, j, B);
  CHECK(jj.J.set().size() == 3);
}

TEST_CASE("composition of trivial intervals stays the unit") {
  Interval j = standard_interval(kTriv, B);
  Interval jj = compose_intervals(j, j, B);
  CHECK(jj.J.set().size() == 1);
}

TEST_CASE("composition of cat intervals gives chaotic-3") {
  Interval j = standard_interval(kCat, B);
  Interval jj = compose_intervals(j, j, B);
  CHECK(jj.J.cat().objects.size() == 3);
  CHECK(jj.J.cat().mors.size() == 9);
}

TEST_CASE("tensor of intervals") {
  Interval t = tensor_intervals(standard_interval(kTriv, B),
                                standard_interval(kTriv, B), B);
  CHECK(t.J.set().size() == 1);
  Interval s = tensor_intervals(standard_interval(kSplit, B),
                                standard_interval(kSplit, B), B);
  CHECK(s.J.set().size() == 4);
  Interval c = tensor_intervals(standard_interval(kCat, B),
                                standard_interval(kCat, B), B);
  CHECK(c.J.cat().objects.size() == 4);
}

TEST_CASE("homotopy of global elements per base") {
  // SetTrivial: relation is equality.
  VObj x3 = VObj::make(kTriv, FinSet::of({"a", "b", "c"}));
  auto els = global_elements(x3, B);
  CHECK(homotopic_global(els[0], els[0], B).has_value());
  CHECK_FALSE(homotopic_global(els[0], els[1], B).has_value());

  // SetSplit: total.
  VObj s3 = VObj::make(kSplit, FinSet::of({"a", "b", "c"}));
  auto sels = global_elements(s3, B);
  for (const auto& p : sels)
    for (const auto& q : sels) {
      auto w = homotopic_global(p, q, B);
      REQUIRE(w.has_value());
      CHECK(check_homotopy_witness(*w, p, q));
    }

  // CatCanonical: isomorphism of objects.
  VObj c2 = VObj::make(kCat, chaotic_category({"0", "1"}));
  auto cels = global_elements(c2, B);
  CHECK(homotopic_global(cels[0], cels[1], B).has_value());
  VObj d2 = VObj::make(kCat, discrete_category({"0", "1"}));
  auto dels = global_elements(d2, B);
  CHECK_FALSE(homotopic_global(dels[0], dels[1], B).has_value());

  // PointedTrivial: equality.
  VObj p3 = VObj::make(kPtd, FinPointed::of({"*", "p", "q"}, "*"));
  auto pels = global_elements(p3, B);
  CHECK(homotopic_global(pels[1], pels[1], B).has_value());
  CHECK_FALSE(homotopic_global(pels[1], pels[2], B).has_value());
}

TEST_CASE("homotopy transitivity via pushout interval") {
  VObj s3 = VObj::make(kSplit, FinSet::of({"a", "b", "c"}));
  auto els = global_elements(s3, B);
  auto w1 = homotopic_global(els[0], els[1], B);
  auto w2 = homotopic_global(els[1], els[2], B);
  REQUIRE(w1.has_value());
  REQUIRE(w2.has_value());
  GlobalHomotopyWitness w = compose_homotopies(*w1, *w2, B);
  CHECK(check_homotopy_witness(w, els[0], els[2]));
}

TEST_CASE("homotopy congruence under postcomposition") {
  VObj c2 = VObj::make(kCat, chaotic_category({"0", "1"}));
  auto cels = global_elements(c2, B);
  auto w = homotopic_global(cels[0], cels[1], B);
  REQUIRE(w.has_value());
  VObj one = unit_object(kCat);
  VMap bang = hom_maps(c2, one, B).at(0);
  GlobalHomotopyWitness fw = map_homotopy(bang, *w);
  CHECK(check_homotopy_witness(fw, compose(bang, cels[0]),
                               compose(bang, cels[1])));
}

TEST_CASE("symmetry by swapping endpoints") {
  VObj s2 = VObj::make(kSplit, FinSet::of({"a", "b"}));
  auto els = global_elements(s2, B);
  auto w = homotopic_global(els[0], els[1], B);
  REQUIRE(w.has_value());
  GlobalHomotopyWitness r = reverse_homotopy(*w);
  CHECK(check_homotopy_witness(r, els[1], els[0]));
}

TEST_CASE("sliced standard intervals validate") {
  for (BaseKind k : {kTriv, kSplit, kPtd}) {
    Interval j = standard_interval(k.slice(), B);
    CHECK(j.J.kind.sliced);
  }
}
