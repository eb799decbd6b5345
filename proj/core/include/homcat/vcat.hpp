#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "homcat/interval.hpp"

namespace homcat {

// A finite V-category, stored extensionally: hom-objects, a full composition
// table (b,c)⊗(a,b) → (a,c) and identity elements, all validated
// exhaustively.
struct VCategory {
  BaseKind base;
  std::vector<std::string> objects;  // sorted
  std::map<std::pair<std::string, std::string>, VObj> homs;
  std::map<std::tuple<std::string, std::string, std::string>, VMap> comps;
  std::map<std::string, VMap> idents;

  const VObj& hom(const std::string& a, const std::string& b) const;
  const VMap& comp(const std::string& a, const std::string& b,
                   const std::string& c) const;
  const VMap& ident(const std::string& a) const;
  bool has_object(const std::string& a) const;
};

using VCatPtr = std::shared_ptr<const VCategory>;

// Returns the violations (empty when valid).
std::vector<std::string> vcategory_violations(const VCategory& c);
// Throwing wrapper naming the first violation.
VCatPtr validate_vcategory(VCategory c);

// The unit V-category: one object "*" with endomorphism object I.
VCatPtr unit_vcategory(BaseKind k);
// An ordinary finite category as a V-category over a set-like base
// (hom-objects are the hom-sets).
VCatPtr vcat_from_fincat(const FinCat& c, BaseKind k);
// Full sub-V-category on a subset of objects.
VCatPtr full_subvcategory(const VCatPtr& c, const std::vector<std::string>& objs);
// Opposite V-category (homs swapped, composition braided).
VCatPtr opposite_vcategory(const VCatPtr& c);

// Composition of underlying elements g : I → hom(b,c), f : I → hom(a,b).
VMap compose_elements(const VCategory& c, const std::string& a,
                      const std::string& b, const std::string& cc,
                      const VMap& g, const VMap& f);
// Postcomposition C(a,f) : hom(a,b) → hom(a,c) for f : I → hom(b,c).
VMap postcompose_map(const VCategory& c, const std::string& a,
                     const std::string& b, const std::string& cc, const VMap& f);
// Precomposition C(f,c) : hom(b,c) → hom(a,c) for f : I → hom(a,b).
VMap precompose_map(const VCategory& c, const std::string& a,
                    const std::string& b, const std::string& cc, const VMap& f);

struct VFunctor {
  VCatPtr src, dst;
  std::map<std::string, std::string> omap;
  std::map<std::pair<std::string, std::string>, VMap> hom_action;

  const VMap& action(const std::string& a, const std::string& b) const;
};

std::vector<std::string> vfunctor_violations(const VFunctor& f);
VFunctor validate_vfunctor(VFunctor f);
VFunctor identity_vfunctor(const VCatPtr& c);
VFunctor compose_vfunctors(const VFunctor& g, const VFunctor& f);
// The V-functor I → c selecting an object.
VFunctor object_functor(const VCatPtr& c, const std::string& obj);
// Image of an underlying element f : I → hom(a,b) under F.
VMap apply_vfunctor(const VFunctor& f, const std::string& a,
                    const std::string& b, const VMap& elem);
bool vfunctor_fully_faithful(const VFunctor& f);

// ---------------------------------------------------------------------------
// Underlying category and the homotopy ER-category h*
// ---------------------------------------------------------------------------

struct Underlying {
  FinCat cat;
  // morphism name -> the element I → hom(a,b) it denotes
  std::map<std::string, VMap> elems;
  std::map<std::string, std::pair<std::string, std::string>> endpoints;

  std::string name_of(const std::string& a, const std::string& b,
                      const VMap& elem) const;
};

Underlying underlying_category(const VCategory& c, const Budget& budget);

// An ordinary category with an equivalence relation on each hom-set,
// respected by composition on both sides.
struct ERCategory {
  FinCat cat;
  std::set<std::pair<std::string, std::string>> related;  // morphism name pairs

  bool rel(const std::string& f, const std::string& g) const {
    return f == g || related.count({f, g}) > 0;
  }
};

// h*(c): underlying category + V-homotopy relation; the congruence laws are
// re-verified exhaustively.
ERCategory homotopy_er(const VCategory& c, const Budget& budget);

// Decides f ≅ g for parallel underlying elements, over the canonical
// interval at hom(a,b).
std::optional<GlobalHomotopyWitness> vhomotopic(const VCategory& c,
                                                const std::string& a,
                                                const std::string& b,
                                                const VMap& f, const VMap& g,
                                                const Budget& budget);

// Equivalence in an ER-category: a quasi-inverse pair up to the relation.
std::optional<std::pair<std::string, std::string>> er_equivalence(
    const ERCategory& er, const std::string& a, const std::string& b);

// ---------------------------------------------------------------------------
// Bi-initial / bi-terminal certificates
// ---------------------------------------------------------------------------

enum class Direction { Initial, Terminal };

struct BipolarCertificate {
  std::string object;
  Direction direction{};
  // other object -> chosen underlying morphism name (existence)
  std::map<std::string, std::string> arrows;
  // parallel pair (by underlying names) -> homotopy witness (uniqueness)
  std::map<std::pair<std::string, std::string>, GlobalHomotopyWitness> uniqueness;
};

struct BipolarResult {
  std::optional<BipolarCertificate> certificate;
  std::string failure;  // first failing object or pair when absent
};

BipolarResult is_bipolar(const VCategory& c, const std::string& x,
                         Direction dir, const Budget& budget);

// Re-checks a certificate against the category from scratch.
bool check_bipolar_certificate(const VCategory& c, const Underlying& und,
                               const BipolarCertificate& cert);

// Transport of a homotopy witness along a V-functor (h* functoriality).
GlobalHomotopyWitness transport_homotopy(const VFunctor& f, const std::string& a,
                                         const std::string& b,
                                         const GlobalHomotopyWitness& w);

}  // namespace homcat
