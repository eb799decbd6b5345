#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homcat/budget.hpp"
#include "homcat/fin.hpp"

namespace homcat {

// ---------------------------------------------------------------------------
// The four enriching bases.  A BaseKind with `sliced` set denotes the slice
// V/I of the parent base, with all structure inherited; every operation in
// this header accepts sliced objects transparently.
// ---------------------------------------------------------------------------

enum class BaseTag { SetTrivial, SetSplit, CatCanonical, PointedTrivial };

struct BaseKind {
  BaseTag tag{};
  bool sliced = false;

  bool operator==(const BaseKind&) const = default;
  BaseKind parent() const { return {tag, false}; }
  BaseKind slice() const { return {tag, true}; }
  std::string name() const;
  // Is the monoidal unit terminal?  True for the three cartesian bases and
  // for every sliced base; false for PointedTrivial.
  bool unit_is_terminal() const;
};

BaseKind base_kind_from_name(const std::string& name);

using Payload = std::variant<FinSet, FinPointed, FinCat>;

// The data of a structure-preserving assignment.  ElemAction is a total map
// on elements; CatAction is a functor's object and morphism tables.
struct ElemAction {
  std::map<std::string, std::string> table;
  bool operator==(const ElemAction&) const = default;
};
struct CatAction {
  std::map<std::string, std::string> omap, mmap;
  bool operator==(const CatAction&) const = default;
};
using Action = std::variant<ElemAction, CatAction>;

// An object of the enriching base.  Immutable after construction; payloads
// are shared so copies are cheap.  For sliced objects, `aug` is the action
// of the structure map into the parent unit.
class VObj {
 public:
  BaseKind kind;
  std::shared_ptr<const Payload> payload;
  std::shared_ptr<const Action> aug;

  VObj() = default;
  static VObj make(BaseKind kind, Payload p);
  static VObj make_sliced(const VObj& parent_obj, Action aug);

  const FinSet& set() const { return std::get<FinSet>(*payload); }
  const FinPointed& pointed() const { return std::get<FinPointed>(*payload); }
  const FinCat& cat() const { return std::get<FinCat>(*payload); }
  bool is_cat() const { return std::holds_alternative<FinCat>(*payload); }

  // The same object over the parent base (drops the augmentation).
  VObj underlying() const;

  bool operator==(const VObj& o) const;
  std::string key() const;
};

struct VMap {
  VObj src, dst;
  Action action;

  bool operator==(const VMap& o) const;
  std::string key() const;
};

// Validating constructor: totality, typing, structure preservation
// (functoriality / basepoint / augmentation compatibility).
VMap make_vmap(VObj src, VObj dst, Action action);
// Same map viewed over the parent base.
VMap underlying_map(const VMap& f);

std::string apply_elem(const Action& a, const std::string& x);
std::string apply_obj(const Action& a, const std::string& x);
std::string apply_mor(const Action& a, const std::string& x);

struct MapClass {
  bool cofibration = false;
  bool fibration = false;
  bool weak_equivalence = false;
  bool trivial_fibration() const { return fibration && weak_equivalence; }
  bool trivial_cofibration() const { return cofibration && weak_equivalence; }
  bool operator==(const MapClass&) const = default;
};

// ---------------------------------------------------------------------------
// Monoidal structure
// ---------------------------------------------------------------------------

VObj unit_object(BaseKind k);
VObj initial_object(BaseKind k);
VObj terminal_object(BaseKind k);
bool is_terminal_object(const VObj& x);

VObj tensor(const VObj& x, const VObj& y);
VMap tensor_map(const VMap& f, const VMap& g);

VMap identity_map(const VObj& x);
VMap compose(const VMap& g, const VMap& f);

// Canonical coherence isomorphisms; produced constructively and verified in
// the law suite.
VMap unitor_l(const VObj& x);      // I⊗x → x
VMap unitor_l_inv(const VObj& x);  // x → I⊗x
VMap unitor_r(const VObj& x);      // x⊗I → x
VMap unitor_r_inv(const VObj& x);
VMap associator(const VObj& x, const VObj& y, const VObj& z);  // (x⊗y)⊗z → x⊗(y⊗z)
VMap associator_inv(const VObj& x, const VObj& y, const VObj& z);
VMap braiding(const VObj& x, const VObj& y);  // x⊗y → y⊗x
// I⊗I → I (the unitors agree there).
VMap unit_squash(BaseKind k);

// ---------------------------------------------------------------------------
// (Co)limits in the base
// ---------------------------------------------------------------------------

struct CoprodObj {
  VObj obj;
  VMap in1, in2;
};
CoprodObj coproduct(const VObj& x, const VObj& y);
VMap copair(const CoprodObj& cp, const VMap& f, const VMap& g);

struct ProdObj {
  VObj obj;
  std::vector<VMap> projections;
};
ProdObj product_obj(const VObj& x, const VObj& y, const Budget& budget);
ProdObj nary_product(BaseKind k, const std::vector<VObj>& xs, const Budget& budget);
VMap tuple_map(const ProdObj& p, const std::vector<VMap>& legs);

struct SubObj {
  VObj obj;
  VMap incl;
};
SubObj equalizer(const VMap& f, const VMap& g);

struct PullbackObj {
  VObj obj;
  VMap pr1, pr2;  // into dom f, dom g
};
// f : X → Z, g : Y → Z.
PullbackObj pullback(const VMap& f, const VMap& g, const Budget& budget);
// Universal map W → P from legs u : W → X, v : W → Y with f∘u = g∘v.
VMap pullback_pair(const PullbackObj& pb, const VMap& u, const VMap& v);

struct PushoutObj {
  VObj obj;
  VMap leg1, leg2;  // from cod f, cod g
};
// f : A → B, g : A → C.  May raise BudgetError (category pushouts are built
// by path saturation and need not stay finite).
PushoutObj pushout(const VMap& f, const VMap& g, const Budget& budget);
// Universal map P → X from u : B → X, v : C → X with u∘f = v∘g.
VMap pushout_mediator(const PushoutObj& po, const VMap& u, const VMap& v);

// ---------------------------------------------------------------------------
// Closed structure and enumeration
// ---------------------------------------------------------------------------

VObj internal_hom(const VObj& x, const VObj& y, const Budget& budget);
// All maps I → x, deterministically ordered.
std::vector<VMap> global_elements(const VObj& x, const Budget& budget);
// All maps x → y, deterministically ordered (label order of the element of
// [x,y] each map corresponds to).
std::vector<VMap> hom_maps(const VObj& x, const VObj& y, const Budget& budget);

// The element of [x,y] corresponding to the map f : x → y, as a global
// element I → [x,y].
VMap name_element(const VMap& f, const Budget& budget);
// Inverse of name_element.
VMap decode_element(const VObj& x, const VObj& y, const std::string& label,
                    const Budget& budget);

// f : x⊗y → z  ⇒  x → [y,z].
VMap transpose(const VMap& f, const VObj& x, const VObj& y, const Budget& budget);
// e : I → [y,z]  ⇒  y → z.  The factors are passed explicitly.
VMap untranspose_element(const VMap& e, const VObj& y, const VObj& z,
                         const Budget& budget);
VMap eval_map(const VObj& x, const VObj& y, const Budget& budget);  // [x,y]⊗x → y
// [y,z]⊗[x,y] → [x,z]
VMap internal_compose_map(const VObj& x, const VObj& y, const VObj& z,
                          const Budget& budget);
VMap internal_post(const VMap& g, const VObj& x, const Budget& budget);  // [x,·]
VMap internal_pre(const VMap& f, const VObj& z, const Budget& budget);   // [·,z]

// ---------------------------------------------------------------------------
// Model structure
// ---------------------------------------------------------------------------

MapClass classify_map(const VMap& f, const Budget& budget);

// Diagonal filler for  u∘? square: i : X → Y, p : E → B, u : X → E,
// v : Y → B with p∘u = v∘i.  First filler h : Y → E (h∘i = u, p∘h = v) in
// enumeration order, or absence.
std::optional<VMap> solve_lifting(const VMap& i, const VMap& p, const VMap& u,
                                  const VMap& v, const Budget& budget);

std::optional<VMap> invert(const VMap& f);
bool is_iso(const VMap& f);
// First isomorphism x → y in enumeration order.
std::optional<VMap> find_iso(const VObj& x, const VObj& y, const Budget& budget);
// Corestriction of f : W → ambient onto a subobject, if the image fits.
std::optional<VMap> corestrict(const VMap& f, const SubObj& sub);

}  // namespace homcat
