// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semitopo/semitopology.hpp"

namespace semitopo {

using ElemSet = std::uint32_t;  // subset of a semiframe carrier, by element index

inline constexpr int kCarrierBound = 20;  // semifilter enumeration bound

// A compatible complete join-semilattice: finite carrier with a partial order
// admitting all joins, plus a compatibility relation * that is symmetric,
// properly reflexive (x*x iff x != bot) and completely distributive
// (x * join(X') iff x * x' for some x' in X').
class Semiframe {
  public:
    Semiframe(std::vector<std::string> labels, std::vector<std::pair<int, int>> leq_pairs,
              std::vector<std::pair<int, int>> compat_pairs);

    int size() const { return n_; }
    const std::string& label(int x) const { return labels_.at(x); }
    int find(const std::string& label) const;  // -1 when unknown

    bool leq(int x, int y) const { return contains(up_[x], y); }
    bool compat(int x, int y) const { return contains(compat_[x], y); }
    int bot() const { return bot_; }
    int top() const { return top_; }
    int join(int x, int y) const { return join_pair_[x][y]; }
    int join_of(ElemSet xs) const;  // join of a subset (bot for the empty set)

    ElemSet up_closure(ElemSet xs) const;
    ElemSet compat_system(int x) const { return compat_[x]; }        // x^*
    ElemSet compat_system(ElemSet f) const;                          // F^* = ∩ x^*
    bool pairwise_compatible(ElemSet xs) const;

    // x != bot and x' * x * x'' implies x' * x''.
    bool is_transitive_element(int x) const;
    ElemSet transitive_elements() const;

    // x * join(X') iff x * x' for some x' in X'.  Holds for every semiframe of
    // open sets; the constructor only enforces the monotone half so that the
    // catalogued no-abstract-points example remains constructible.
    bool is_completely_distributive() const;

    ElemSet all() const { return n_ == 0 ? 0 : (ElemSet{1} << n_) - 1; }

  private:
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<ElemSet> up_;      // up_[x] = { y | x <= y }
    std::vector<ElemSet> compat_;  // compat_[x] = { y | x * y }
    std::vector<std::vector<int>> join_pair_;
    int bot_ = -1, top_ = -1;
};

// The semiframe of open sets (Opens, ⊆, ⋔); element labels are the printed
// open sets, in the canonical open order.
Semiframe fr(const Semitopology& s);

// Semifilters are element subsets: nonempty, up-closed, pairwise compatible.
bool is_semifilter(const Semiframe& f, ElemSet fl);
// Abstract point: a completely prime semifilter.  In the finite case complete
// primeness coincides with primeness (x v y in F implies x in F or y in F).
bool is_abstract_point(const Semiframe& f, ElemSet fl);
bool is_maximal_semifilter(const Semiframe& f, ElemSet fl);

// All semifilters, generated as up-closures of nonempty antichains and
// filtered for compatibility.
std::vector<ElemSet> semifilters(const Semiframe& f, int bound = kCarrierBound);
std::vector<ElemSet> abstract_points(const Semiframe& f, int bound = kCarrierBound);

struct StResult {
    Semitopology space;            // points are abstract points of the semiframe
    std::vector<ElemSet> points;   // the abstract points, in point order
    std::vector<Mask> op;          // op[x] = abstract points containing element x
};
// The semitopology of abstract points: opens are the sets Op(x).
StResult st(const Semiframe& f, int bound = kCarrierBound);

struct SoberifyResult {
    Semitopology space;
    std::vector<ElemSet> points;  // abstract points of fr(s)
    std::vector<int> nbhd;        // original point -> index of its neighbourhood filter
};
SoberifyResult soberify(const Semitopology& s, int bound = kCarrierBound);

bool is_spatial(const Semiframe& f, int bound = kCarrierBound);
bool is_sober(const Semitopology& s, int bound = kCarrierBound);
bool is_t0(const Semitopology& s);

struct DualRegularity {
    ElemSet transitive_elements;
    ElemSet compat_system;    // Fl^*
    bool strongly_compatible = false;
    int frame_community = -1;  // element index
    bool quasiregular = false;
    bool weakly_regular = false;
    bool regular = false;
};
DualRegularity dual_regularity(const Semiframe& f, ElemSet fl);

}  // namespace semitopo
