// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semitopo/semitopology.hpp"

namespace semitopo {

// --- truth values of the three-valued logic, shared with logic3 ----------

enum class Three : int { F = 0, B = 1, T = 2 };

inline bool designated(Three v) { return v != Three::F; }

// A total valuation into THREE.
struct Valuation3 {
    std::vector<Three> value;

    Three operator()(int p) const { return value.at(p); }
    Mask designated_set() const {  // f^|= : preimage of {T,B}
        Mask m = 0;
        for (int p = 0; p < static_cast<int>(value.size()); ++p)
            if (value[p] != Three::F) m |= bit(p);
        return m;
    }
    Mask neg_designated_set() const {  // preimage of {F,B}
        Mask m = 0;
        for (int p = 0; p < static_cast<int>(value.size()); ++p)
            if (value[p] != Three::T) m |= bit(p);
        return m;
    }
    bool operator==(const Valuation3&) const = default;
};

bool is_continuous(const Semitopology& s, const Valuation3& f);
// Extremal: continuous and maximal in definiteness; equivalently inverse
// images commute with closures.
bool is_extremal(const Semitopology& s, const Valuation3& f);

// --- basic antiseparation relations ---------------------------------------

// Every open neighbourhood of p meets every open neighbourhood of q.
bool intertwined(const Semitopology& s, int p, int q);
Mask intertwined_set(const Semitopology& s, int p);  // K_p; a closed set
Mask community(const Semitopology& s, int p);        // interior(K_p)
Mask kernel(const Semitopology& s, int p);           // union of atoms inside the community

// T is transitive when O ⋔ T ⋔ O' implies O ⋔ O' for all opens.
bool is_transitive_set(const Semitopology& s, Mask t);
bool is_topen(const Semitopology& s, Mask t);  // nonempty, open, transitive
// All nonempty open subsets of t pairwise intersect.
bool is_hyperconnected(const Semitopology& s, Mask t);

struct NeighbourhoodInvariants {
    Mask intertwined_set;        // K_p, closed
    Mask community;              // interior(K_p)
    Mask kernel;                 // union of atoms in the community
    std::vector<Mask> covers;    // minimal open neighbourhoods of p
    Mask boundary_of_K;          // K_p minus the community
};
NeighbourhoodInvariants neighbourhood_invariants(const Semitopology& s, int p);

struct Classification {
    bool regular = false;
    bool weakly_regular = false;
    bool quasiregular = false;
    bool indirectly_regular = false;  // intertwined with some regular point
    bool unconflicted = false;
    bool conflicted = false;
    bool hypertransitive = false;
    bool hyperdefinite = false;
    bool mcn = false;  // K_p is minimal among all closed neighbourhoods
};
Classification classify_point(const Semitopology& s, int p);

struct TopenPartition {
    std::vector<Mask> maximal_topens;  // pairwise disjoint
    Mask irregular_points;
};
TopenPartition topen_partition(const Semitopology& s);

// Minimal elements of the poset of closed sets with nonempty interior;
// restricted to those whose interior contains p when of_point is set.
std::vector<Mask> min_closed_neighbourhoods(const Semitopology& s,
                                            std::optional<int> of_point = std::nullopt);

struct DenseResult {
    bool weakly = false;
    bool strongly = false;
};
// Preconditions: D nonempty, D ⊆ P, P open; violations are reported distinctly.
DenseResult dense_check(const Semitopology& s, Mask d, Mask p);

// A value assignment defined on a subset of the universe.
struct PartialAssignment {
    std::vector<std::string> alphabet;
    Mask domain = 0;
    std::vector<int> value;  // meaningful on domain points only

    int operator()(int p) const { return value.at(p); }
};
// f is continuous at p when some open neighbourhood of p lies inside the
// domain and f is constant on it.
bool is_continuous_at(const Semitopology& s, const PartialAssignment& f, int p);

// Extends f (continuous on its domain; checked) to a total assignment that is
// continuous at every regular point.  On a regular p whose community meets the
// domain the value is forced; elsewhere the default value is used.
ValueAssignment extend_to_regular(const Semitopology& s, const PartialAssignment& f,
                                  int default_value);

struct KernelLimit {
    bool confident = false;  // f continuous on some kernel atom of p
    bool unanimous = false;  // f continuous on all of community(p)
    std::optional<int> limit;
};
// Reports over an empty kernel (confident = false) when p is not regular.
KernelLimit kernel_limit(const Semitopology& s, const std::vector<int>& f, int p);

// Enumerated via the bijection with regular open sets: T on O, F on
// interior(complement), B elsewhere.
std::vector<Valuation3> extremal_valuations(const Semitopology& s);

struct PointRelations {
    bool intertwined = false;
    bool top_indistinguishable = false;
    bool consensus_equivalent = false;  // equal under every extremal valuation
    bool hypertwined = false;           // equal and definite under every extremal valuation
    bool transitively_intertwined = false;
};
PointRelations point_relations(const Semitopology& s, int p, int q);

bool top_indistinguishable(const Semitopology& s, int p, int q);
bool consensus_equivalent(const Semitopology& s, int p, int q);
bool hypertwined(const Semitopology& s, int p, int q);
bool hyperdefinite(const Semitopology& s, int p);
bool hypertransitive(const Semitopology& s, int p);
// Reflexive-transitive closure of ⋔ via union-find; canonical representative
// is the least point index.
std::vector<int> intertwined_components(const Semitopology& s);

// --- intersection graph ----------------------------------------------------

struct IntersectionGraph {
    std::vector<Mask> nodes;                  // nonempty opens, canonical order
    std::vector<std::vector<bool>> adjacent;  // ⋔, includes self-loops
};
IntersectionGraph intersection_graph(const Semitopology& s);

// O <= O' when every ⋔-neighbour of O is a neighbour of O'.
bool node_preorder(const Semitopology& s, Mask o1, Mask o2);
// X properly subintersects Y: X ⋔ Y and complement(X) ⋔ Y.
bool flanks(const Semitopology& s, Mask x, Mask y);

struct DotOptions {
    bool self_loops = false;
    bool flank_edges = false;  // directed subintersection edges instead of ⋔
};
std::string to_dot(const Semitopology& s, const DotOptions& opts = {});

}  // namespace semitopo
