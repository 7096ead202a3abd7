// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <vector>

#include "semitopo/semitopology.hpp"

namespace semitopo {

// A witness function assigns to each point a nonempty finite set of nonempty
// witness-sets.  A set O is open in the induced semitopology when it enables
// its own elements: every p in O has some witness-set inside O.
class WitnessFunction {
  public:
    WitnessFunction(Universe u, std::vector<std::vector<Mask>> witness);

    const Universe& universe() const { return universe_; }
    int size() const { return universe_.size(); }
    Mask all() const { return universe_.all(); }
    const std::vector<Mask>& witness(int p) const { return witness_.at(p); }
    const std::vector<std::vector<Mask>>& table() const { return witness_; }

    bool enables(Mask set, int p) const;  // some witness-set of p inside set
    bool blocks(Mask set, int p) const;   // set meets every witness-set of p
    bool is_witness_open(Mask o) const;   // o enables each of its elements

    // Every witness-set is a singleton collection.
    bool is_deterministic() const;

  private:
    Universe universe_;
    std::vector<std::vector<Mask>> witness_;  // per point, canonically sorted
};

inline constexpr int kWitnessEnumBound = 24;

// Enumerates all 2^n subsets and keeps the witness-open ones.
Semitopology witness_opens(const WitnessFunction& w, int bound = kWitnessEnumBound);

// W(p) = all opens containing p; generates S back exactly.
WitnessFunction witness_from_semitopology(const Semitopology& s);

// Chooser strategy for grow_open: picks one witness-set for a point given the
// set grown so far.  The default picks the witness-set whose addition grows
// the set least, ties broken canonically.
using WitnessChooser = std::function<Mask(const WitnessFunction&, int p, Mask sofar)>;
Mask default_chooser(const WitnessFunction& w, int p, Mask sofar);
Mask first_chooser(const WitnessFunction& w, int p, Mask sofar);

// Iterates R <- R ∪ (chosen witness-set of each member) to a fixpoint.  The
// result is open in the witness semitopology and contains the seed.
Mask grow_open(const WitnessFunction& w, Mask seed, const WitnessChooser& chooser = default_chooser);

// Iterates lim(X) = X ∪ { p | every witness-set of p meets X } to a fixpoint;
// equals the topological closure of X in the witness semitopology.
Mask lim_closure(const WitnessFunction& w, Mask x);

// One clause per point: (AND over witness-sets of (OR over their members)) -> head.
// The body mirrors the witness-sets exactly; no clausal expansion.
struct HornTheory {
    enum class Polarity { positive, negative, both };
    struct Clause {
        int head;
        std::vector<Mask> body;  // conjunction of disjunctions
        bool negated;            // the ¬-literal twin
    };
    std::vector<Clause> clauses;

    // A subset is a model of the positive theory iff it is closed in the
    // witness semitopology.
    bool models(Mask subset) const;
};

HornTheory horn_theory(const WitnessFunction& w,
                       HornTheory::Polarity polarity = HornTheory::Polarity::positive);

// Expansion of the positive theory to strict Horn clauses (one positive
// literal, negative literals for one choice from each disjunction), for the
// two-valued solver bridge.
struct StrictHornClause {
    std::vector<int> body;  // atoms, conjoined
    int head;
};
std::vector<StrictHornClause> to_strict_horn(const HornTheory& t);

bool is_topology(const Semitopology& s);  // alias for the core predicate

}  // namespace semitopo
