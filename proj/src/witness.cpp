// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/witness.hpp"

#include <algorithm>

namespace semitopo {

WitnessFunction::WitnessFunction(Universe u, std::vector<std::vector<Mask>> witness)
    : universe_(std::move(u)), witness_(std::move(witness)) {
    if (static_cast<int>(witness_.size()) != universe_.size())
        throw Error("witness function must assign witness-sets to every point");
    for (int p = 0; p < universe_.size(); ++p) {
        auto& ws = witness_[p];
        if (ws.empty())
            throw Error("point '" + universe_.label(p) + "' has no witness-sets");
        for (Mask w : ws) {
            if (w == 0)
                throw Error("point '" + universe_.label(p) + "' has an empty witness-set");
            if (!subset(w, universe_.all()))
                throw Error("witness-set of '" + universe_.label(p) +
                            "' is not a subset of the universe");
        }
        std::sort(ws.begin(), ws.end(), canonical_less);
        ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    }
}

bool WitnessFunction::enables(Mask set, int p) const {
    for (Mask w : witness_[p])
        if (subset(w, set)) return true;
    return false;
}

bool WitnessFunction::blocks(Mask set, int p) const {
    for (Mask w : witness_[p])
        if (!between(w, set)) return false;
    return true;
}

bool WitnessFunction::is_witness_open(Mask o) const {
    SEMITOPO_FOR_POINTS(p, o)
    if (!enables(o, p)) return false;
    return true;
}

bool WitnessFunction::is_deterministic() const {
    for (const auto& ws : witness_)
        if (ws.size() != 1) return false;
    return true;
}

Semitopology witness_opens(const WitnessFunction& w, int bound) {
    const int n = w.size();
    if (n > bound)
        throw Error("witness_opens: universe of " + std::to_string(n) +
                    " points exceeds the enumeration bound of " + std::to_string(bound));
    std::vector<Mask> fam;
    const Mask all = w.all();
    for (Mask o = 0;; ++o) {
        if (w.is_witness_open(o)) fam.push_back(o);
        if (o == all) break;
    }
    return Semitopology(w.universe(), fam, Semitopology::Mode::full);
}

WitnessFunction witness_from_semitopology(const Semitopology& s) {
    std::vector<std::vector<Mask>> table(s.size());
    for (int p = 0; p < s.size(); ++p) table[p] = s.nbhd(p);
    return WitnessFunction(s.universe(), std::move(table));
}

Mask first_chooser(const WitnessFunction& w, int p, Mask) {
    return w.witness(p).front();  // canonical order
}

Mask default_chooser(const WitnessFunction& w, int p, Mask sofar) {
    Mask best = 0;
    int best_growth = -1;
    for (Mask cand : w.witness(p)) {
        int growth = popcount(cand & ~sofar);
        if (best_growth < 0 || growth < best_growth ||
            (growth == best_growth && canonical_less(cand, best))) {
            best = cand;
            best_growth = growth;
        }
    }
    return best;
}

Mask grow_open(const WitnessFunction& w, Mask seed, const WitnessChooser& chooser) {
    if (!subset(seed, w.all())) throw Error("grow_open: seed is not a subset of the universe");
    Mask r = seed;
    for (;;) {
        Mask next = r;
        SEMITOPO_FOR_POINTS(p, r) next |= chooser(w, p, r);
        if (next == r) return r;
        r = next;
    }
}

Mask lim_closure(const WitnessFunction& w, Mask x) {
    if (!subset(x, w.all())) throw Error("lim_closure: set is not a subset of the universe");
    Mask r = x;
    for (;;) {
        Mask next = r;
        SEMITOPO_FOR_POINTS(p, w.all())
        if (w.blocks(r, p)) next |= bit(p);
        if (next == r) return r;
        r = next;
    }
}

HornTheory horn_theory(const WitnessFunction& w, HornTheory::Polarity polarity) {
    HornTheory t;
    for (int p = 0; p < w.size(); ++p) {
        if (polarity != HornTheory::Polarity::negative)
            t.clauses.push_back({p, w.witness(p), false});
        if (polarity != HornTheory::Polarity::positive)
            t.clauses.push_back({p, w.witness(p), true});
    }
    return t;
}

bool HornTheory::models(Mask subset) const {
    // Positive reading: body holds when every disjunction meets the subset.
    // Negated clauses are read over the complemented atoms, which comes to the
    // same satisfaction condition on the complement; callers use the positive
    // theory for the closed-set correspondence.
    for (const auto& c : clauses) {
        if (c.negated) continue;
        bool body = true;
        for (Mask dis : c.body)
            if (!between(dis, subset)) {
                body = false;
                break;
            }
        if (body && !contains(subset, c.head)) return false;
    }
    return true;
}

std::vector<StrictHornClause> to_strict_horn(const HornTheory& t) {
    std::vector<StrictHornClause> out;
    for (const auto& c : t.clauses) {
        if (c.negated) continue;
        // expand the conjunction of disjunctions: one clause per choice tuple
        std::vector<StrictHornClause> partial = {{{}, c.head}};
        for (Mask dis : c.body) {
            std::vector<StrictHornClause> next;
            for (const auto& pc : partial)
                SEMITOPO_FOR_POINTS(q, dis) {
                    StrictHornClause e = pc;
                    e.body.push_back(q);
                    next.push_back(e);
                }
            partial = std::move(next);
        }
        for (auto& e : partial) out.push_back(std::move(e));
    }
    return out;
}

bool is_topology(const Semitopology& s) { return s.is_topology(); }

}  // namespace semitopo
