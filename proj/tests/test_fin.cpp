#include "doctest.h"

#include "homcat/fin.hpp"

using namespace homcat;

TEST_CASE("category validation accepts the basics") {
  CHECK_NOTHROW(terminal_category().validate());
  CHECK_NOTHROW(discrete_category({"a", "b"}).validate());
  FinCat ch2 = chaotic_category({"0", "1"});
  CHECK(ch2.objects.size() == 2);
  CHECK(ch2.mors.size() == 4);
  CHECK(ch2.is_iso("c(0,1)"));
}

TEST_CASE("broken composition table is rejected at a named triple") {
  // Free arrow with a deliberately wrong composite.
  FinCat c = make_category({"a", "b"}, {{"f", "a", "b"}}, {});
  c.comp[{"1_b", "f"}] = "1_b";  // breaks typing/unit law
  CHECK_THROWS_AS(c.validate(), ValidationError);
}

TEST_CASE("functor enumeration between small categories") {
  Budget b = Budget::loose();
  FinCat one = terminal_category();
  FinCat ch2 = chaotic_category({"0", "1"});
  // Functors 1 → chaotic-2 are the two objects.
  CHECK(enumerate_functors(one, ch2, b).size() == 2);
  // Functors chaotic-2 → 1: exactly one.
  CHECK(enumerate_functors(ch2, one, b).size() == 1);
  // Functors chaotic-2 → chaotic-2: any object pair, morphisms forced: 4.
  CHECK(enumerate_functors(ch2, ch2, b).size() == 4);
}

TEST_CASE("naturals and equivalences") {
  Budget b = Budget::loose();
  FinCat one = terminal_category();
  FinCat ch2 = chaotic_category({"0", "1"});
  FinCat d2 = discrete_category({"0", "1"});

  // chaotic-2 ≃ 1 via the unique functor.
  auto fs = enumerate_functors(ch2, one, b);
  REQUIRE(fs.size() == 1);
  CHECK(find_equivalence(ch2, one, fs[0], b).has_value());
  CHECK(functor_ff_eso(ch2, one, fs[0]) ==
        find_equivalence(ch2, one, fs[0], b).has_value());

  // discrete-2 → 1 is not an equivalence.
  auto gs = enumerate_functors(d2, one, b);
  REQUIRE(gs.size() == 1);
  CHECK_FALSE(find_equivalence(d2, one, gs[0], b).has_value());
  CHECK_FALSE(functor_ff_eso(d2, one, gs[0]));
}

TEST_CASE("isofibration detection") {
  Budget b = Budget::loose();
  FinCat one = terminal_category();
  FinCat ch2 = chaotic_category({"0", "1"});
  // Point inclusion 1 → chaotic-2 is not an isofibration (the iso out of the
  // chosen object does not lift).
  for (const auto& f : enumerate_functors(one, ch2, b))
    CHECK_FALSE(functor_is_isofibration(one, ch2, f));
  // chaotic-2 → 1 is an isofibration.
  auto fs = enumerate_functors(ch2, one, b);
  CHECK(functor_is_isofibration(ch2, one, fs[0]));
}
