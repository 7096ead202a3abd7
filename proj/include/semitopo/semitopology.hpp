// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semitopo/points.hpp"

namespace semitopo {

// A finite semitopology: a universe of points plus a family of open sets that
// contains the empty set and the universe and is closed under unions.
// Intersections of opens need not be open.
class Semitopology {
  public:
    enum class Mode { generators, full };

    // generators: returns the least union-closed family containing gens, the
    // empty set, and the universe.  full: validates the family as given.
    Semitopology(Universe u, const std::vector<Mask>& gens, Mode mode);

    const Universe& universe() const { return universe_; }
    int size() const { return universe_.size(); }
    Mask all() const { return universe_.all(); }
    std::span<const Mask> opens() const { return opens_; }
    bool is_open(Mask m) const;
    bool is_closed(Mask m) const { return is_open(all() & ~m); }

    Mask interior(Mask x) const;   // union of opens contained in x
    Mask closure(Mask x) const;    // points all of whose neighbourhoods meet x
    Mask boundary(Mask x) const { return x & ~interior(x); }

    std::vector<Mask> closed_sets() const;      // complements of opens
    std::vector<Mask> regular_opens() const;    // O = interior(closure(O))
    std::vector<Mask> regular_closeds() const;  // C = closure(interior(C))

    std::vector<Mask> nbhd(int p) const;    // opens containing p
    std::vector<Mask> covers(int p) const;  // minimal opens containing p
    std::vector<Mask> atoms(Mask within) const;  // minimal nonempty opens inside

    // Opens closed under pairwise intersection; in the finite case this is
    // equivalent to every point having a unique least open neighbourhood.
    bool is_topology() const;

    bool operator==(const Semitopology& o) const {
        return universe_ == o.universe_ && opens_ == o.opens_;
    }

  private:
    Universe universe_;
    std::vector<Mask> opens_;  // sorted by (cardinality, bit pattern), deduplicated
};

struct ProductResult {
    Semitopology space;
    // relabelling: pair (p1, p2) of component indices -> product point index
    std::vector<std::vector<int>> pair_index;
};

// Universe is the cartesian product with labels "(a,b)"; opens are all unions
// of squares O1 x O2.  Throws when the product exceeds the point cap.
ProductResult product(const Semitopology& s1, const Semitopology& s2);

Semitopology subspace(const Semitopology& s, Mask x);

// A total map into a finite value alphabet carrying the discrete semitopology.
struct ValueAssignment {
    std::vector<std::string> alphabet;
    std::vector<int> value;  // one entry per point of the universe

    int operator()(int p) const { return value.at(p); }
};

bool is_continuous(const Semitopology& s, const ValueAssignment& f);
bool is_continuous_at(const Semitopology& s, const ValueAssignment& f, int p);

}  // namespace semitopo
