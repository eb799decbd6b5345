#pragma once

#include <optional>

#include "homcat/base.hpp"

namespace homcat {

// A factorisation  I+I --(d c)--> J --e--> I  of the codiagonal with (d c) a
// cofibration and e a weak equivalence.  Carries every homotopy witness.
struct Interval {
  VObj J;
  VMap d, c;  // I → J
  VMap e;     // J → I
};

// Checks the factorisation equations, the class conditions, and the
// equivalent characterisations (d, c trivial cofibrations ⟺ e weak
// equivalence).  Throws ValidationError listing the violated conditions.
Interval validate_interval(const Interval& candidate, const Budget& budget);

// The canonical interval of each base: J=I (trivial bases), the cograph
// interval I+I (split), the chaotic two-object category (Cat); sliced bases
// reuse the parent interval augmented by e.
Interval standard_interval(BaseKind k, const Budget& budget);

// Pushout composition (transitivity of homotopy).
Interval compose_intervals(const Interval& j1, const Interval& j2,
                           const Budget& budget);
struct ComposedInterval {
  Interval interval;
  VMap leg1, leg2;  // J1 → J, J2 → J
};
ComposedInterval compose_intervals_full(const Interval& j1, const Interval& j2,
                                        const Budget& budget);

Interval tensor_intervals(const Interval& j1, const Interval& j2,
                          const Budget& budget);

// (J,d,c,e) is an interval iff (J,c,d,e) is.
Interval reverse_interval(const Interval& j);

struct GlobalHomotopyWitness {
  Interval interval;
  VMap h;  // J → X
};

// Does h certify x ∼ y?
bool check_homotopy_witness(const GlobalHomotopyWitness& w, const VMap& x,
                            const VMap& y);

// Decides x ∼ y for x,y : I → X over the canonical interval of the base.
// Equality fast path returns the trivial witness h = x∘e.
std::optional<GlobalHomotopyWitness> homotopic_global(const VMap& x,
                                                      const VMap& y,
                                                      const Budget& budget);

// Transitivity: witnesses x∼y and y∼z compose over the pushout interval.
GlobalHomotopyWitness compose_homotopies(const GlobalHomotopyWitness& w1,
                                         const GlobalHomotopyWitness& w2,
                                         const Budget& budget);

// Congruence: from a witness x ∼ y and f : X → Y, get f∘x ∼ f∘y.
GlobalHomotopyWitness map_homotopy(const VMap& f, const GlobalHomotopyWitness& w);

// Symmetry.
GlobalHomotopyWitness reverse_homotopy(const GlobalHomotopyWitness& w);

}  // namespace homcat
