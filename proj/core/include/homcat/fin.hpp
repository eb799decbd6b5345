#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcat/budget.hpp"

namespace homcat {

// ---------------------------------------------------------------------------
// Finite sets and pointed sets.  Element lists are kept sorted; every
// enumeration below walks them in that order, which is what makes "first
// witness" reproducible.
// ---------------------------------------------------------------------------

struct FinSet {
  std::vector<std::string> elems;  // sorted, unique

  static FinSet of(std::vector<std::string> es);
  bool contains(const std::string& e) const;
  std::size_t size() const { return elems.size(); }
  bool operator==(const FinSet&) const = default;
};

struct FinPointed {
  std::vector<std::string> elems;  // sorted, unique
  std::string basepoint;           // member of elems

  static FinPointed of(std::vector<std::string> es, std::string base);
  bool contains(const std::string& e) const;
  std::size_t size() const { return elems.size(); }
  bool operator==(const FinPointed&) const = default;
};

// ---------------------------------------------------------------------------
// Finite categories, stored extensionally: a full composition table that is
// validated for associativity and unit laws by exhaustive enumeration.
// ---------------------------------------------------------------------------

struct FinMor {
  std::string name, src, tgt;
  bool operator==(const FinMor&) const = default;
};

struct FinCat {
  std::vector<std::string> objects;               // sorted, unique
  std::vector<FinMor> mors;                       // sorted by name; includes identities
  std::map<std::string, std::string> ident;       // object -> identity morphism name
  // (g, f) -> g∘f for every composable pair (src g == tgt f)
  std::map<std::pair<std::string, std::string>, std::string> comp;

  const FinMor& mor(const std::string& name) const;
  bool has_object(const std::string& o) const;
  bool has_mor(const std::string& m) const;
  std::vector<std::string> hom(const std::string& a, const std::string& b) const;
  std::string compose(const std::string& g, const std::string& f) const;
  bool is_identity(const std::string& m) const;
  std::optional<std::string> inverse(const std::string& m) const;
  bool is_iso(const std::string& m) const;
  std::size_t size() const { return mors.size(); }

  // Throws ValidationError naming the first violated law.
  void validate() const;

  bool operator==(const FinCat&) const = default;
};

// Builds a category from object and (non-identity) arrow data plus a
// composition rule; identities named "1_<obj>" are added automatically.
FinCat make_category(
    const std::vector<std::string>& objects,
    const std::vector<FinMor>& arrows,
    const std::map<std::pair<std::string, std::string>, std::string>& comp_rule);

// The one-object one-morphism category (object "*", identity "1_*").
FinCat terminal_category();
// Discrete category on the given objects.
FinCat discrete_category(const std::vector<std::string>& objects);
// Chaotic (indiscrete) category: exactly one morphism between any ordered
// pair of objects.  Morphism a->b is named "c(a,b)" for a != b.
FinCat chaotic_category(const std::vector<std::string>& objects);

// ---------------------------------------------------------------------------
// Functors and natural transformations, all enumerations in name order.
// ---------------------------------------------------------------------------

struct FinFunctor {
  std::map<std::string, std::string> omap;  // object -> object
  std::map<std::string, std::string> mmap;  // morphism -> morphism
  bool operator==(const FinFunctor&) const = default;
};

void validate_functor(const FinCat& c, const FinCat& d, const FinFunctor& f);
FinFunctor identity_functor(const FinCat& c);
FinFunctor compose_functors(const FinCat& a, const FinCat& b, const FinCat& c,
                            const FinFunctor& g, const FinFunctor& f);

std::vector<FinFunctor> enumerate_functors(const FinCat& c, const FinCat& d,
                                           const Budget& budget);

// A natural transformation F => G is its component table (object -> morphism
// of d).
using FinNat = std::map<std::string, std::string>;

bool is_natural(const FinCat& c, const FinCat& d, const FinFunctor& f,
                const FinFunctor& g, const FinNat& alpha);
std::vector<FinNat> enumerate_naturals(const FinCat& c, const FinCat& d,
                                       const FinFunctor& f, const FinFunctor& g,
                                       const Budget& budget);
bool nat_is_iso(const FinCat& d, const FinNat& alpha);

// Exhaustive search for a quasi-inverse pair with natural isomorphisms.
// Returns the first (g, iso g∘f => 1, iso f∘g => 1) in enumeration order.
struct EquivalenceWitness {
  FinFunctor quasi_inverse;
  FinNat gf_to_id;  // components of an iso g∘f => 1_c
  FinNat fg_to_id;  // components of an iso f∘g => 1_d
};
std::optional<EquivalenceWitness> find_equivalence(const FinCat& c,
                                                   const FinCat& d,
                                                   const FinFunctor& f,
                                                   const Budget& budget);

bool functor_injective_on_objects(const FinCat& c, const FinFunctor& f);
bool functor_surjective_on_objects(const FinCat& c, const FinCat& d,
                                   const FinFunctor& f);
// Isofibration: every iso of d starting at an image object lifts.
bool functor_is_isofibration(const FinCat& c, const FinCat& d,
                             const FinFunctor& f);
// Fully faithful + essentially surjective; used as the independent oracle
// for the quasi-inverse search in tests.
bool functor_ff_eso(const FinCat& c, const FinCat& d, const FinFunctor& f);

}  // namespace homcat
