#pragma once

// Shared fixture builders for the test and acceptance suites.

#include <string>
#include <vector>

#include "homcat/vcat.hpp"

namespace homcat::fixtures {

// The chain poset 0 < 1 < ... < n-1 as a V-category over a set-like base.
// Hom elements are named "le(a,b)".
VCatPtr poset_chain_vcat(int n, BaseKind k);

// Category with objects a, b and two parallel arrows u, v : a → b, over a
// set-like base.
VCatPtr parallel_pair_vcat(BaseKind k);

// One-object PointedTrivial V-category whose hom is the pointed monoid
// {*, i, m} with i the unit and m·m = * (the zero element).
VCatPtr pointed_monoid_vcat();

// 2-category with objects x, y; hom(x,y) the chaotic pair of 1-cells (so the
// two 1-cells are uniquely isomorphic), other homs trivial or empty.
VCatPtr two_cat_arrow_iso();

// A V-functor between set-like enriched categories built from an ordinary
// functor between their defining FinCats.
VFunctor vfunctor_from_finfunctor(const FinCat& src_fc, const FinCat& dst_fc,
                                  const FinFunctor& f, const VCatPtr& src,
                                  const VCatPtr& dst);

// Monotone-map V-functor between chain posets built by an object assignment.
VFunctor poset_vfunctor(const VCatPtr& src, const VCatPtr& dst,
                        const std::map<std::string, std::string>& omap);

struct ChainAdjunction {
  VFunctor u;  // B → A (right adjoint)
  VFunctor f;  // A → B (left adjoint)
  std::string top_b;
};
// U: 3-chain → 2-chain collapsing the top two elements; F its left adjoint.
ChainAdjunction chain_adjunction();

}  // namespace homcat::fixtures
