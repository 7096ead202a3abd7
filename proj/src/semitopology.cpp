// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/semitopology.hpp"

#include <algorithm>
#include <unordered_set>

namespace semitopo {

namespace {

std::vector<Mask> canonicalize(std::vector<Mask> fam) {
    std::sort(fam.begin(), fam.end(), canonical_less);
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    return fam;
}

// Least union-closed family containing fam.  Pairwise-union fixpoint suffices
// for finite families.
std::vector<Mask> union_close(std::vector<Mask> fam) {
    std::unordered_set<Mask> seen(fam.begin(), fam.end());
    std::vector<Mask> work(fam.begin(), fam.end());
    while (!work.empty()) {
        Mask a = work.back();
        work.pop_back();
        for (Mask b : std::vector<Mask>(seen.begin(), seen.end())) {
            Mask u = a | b;
            if (seen.insert(u).second) work.push_back(u);
        }
    }
    return std::vector<Mask>(seen.begin(), seen.end());
}

}  // namespace

Semitopology::Semitopology(Universe u, const std::vector<Mask>& gens, Mode mode)
    : universe_(std::move(u)) {
    const Mask all = universe_.all();
    for (Mask g : gens)
        if (!subset(g, all))
            throw Error("generator " + std::to_string(g) + " is not a subset of the universe");
    if (mode == Mode::generators) {
        std::vector<Mask> fam = gens;
        fam.push_back(0);
        fam.push_back(all);  // figures omit the universe by convention; we do not
        opens_ = canonicalize(union_close(std::move(fam)));
    } else {
        opens_ = canonicalize(gens);
        if (opens_.empty() || opens_.front() != 0)
            throw Error("full mode: the empty set is missing from the family");
        if (opens_.back() != all)
            throw Error("full mode: the universe " + universe_.to_string(all) +
                        " is missing from the family");
        for (size_t i = 0; i < opens_.size(); ++i)
            for (size_t j = i + 1; j < opens_.size(); ++j) {
                Mask un = opens_[i] | opens_[j];
                if (!std::binary_search(opens_.begin(), opens_.end(), un, canonical_less))
                    throw Error("full mode: family is not union-closed; " +
                                universe_.to_string(opens_[i]) + " union " +
                                universe_.to_string(opens_[j]) + " = " +
                                universe_.to_string(un) + " is missing");
            }
    }
}

bool Semitopology::is_open(Mask m) const {
    return std::binary_search(opens_.begin(), opens_.end(), m, canonical_less);
}

Mask Semitopology::interior(Mask x) const {
    Mask out = 0;
    for (Mask o : opens_)
        if (subset(o, x)) out |= o;
    return out;
}

Mask Semitopology::closure(Mask x) const {
    Mask out = 0;
    SEMITOPO_FOR_POINTS(p, all()) {
        bool in = true;
        for (Mask o : opens_)
            if (contains(o, p) && !between(o, x)) {
                in = false;
                break;
            }
        if (in) out |= bit(p);
    }
    return out;
}

std::vector<Mask> Semitopology::closed_sets() const {
    std::vector<Mask> cs;
    cs.reserve(opens_.size());
    for (Mask o : opens_) cs.push_back(all() & ~o);
    std::sort(cs.begin(), cs.end(), canonical_less);
    return cs;
}

std::vector<Mask> Semitopology::regular_opens() const {
    std::vector<Mask> out;
    for (Mask o : opens_)
        if (interior(closure(o)) == o) out.push_back(o);
    return out;
}

std::vector<Mask> Semitopology::regular_closeds() const {
    std::vector<Mask> out;
    for (Mask c : closed_sets())
        if (closure(interior(c)) == c) out.push_back(c);
    return out;
}

std::vector<Mask> Semitopology::nbhd(int p) const {
    std::vector<Mask> out;
    for (Mask o : opens_)
        if (contains(o, p)) out.push_back(o);
    return out;
}

std::vector<Mask> Semitopology::covers(int p) const {
    std::vector<Mask> candidates = nbhd(p);
    std::vector<Mask> out;
    for (Mask c : candidates) {
        bool minimal = true;
        for (Mask d : candidates)
            if (d != c && subset(d, c)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(c);
    }
    return out;
}

std::vector<Mask> Semitopology::atoms(Mask within) const {
    std::vector<Mask> candidates;
    for (Mask o : opens_)
        if (o != 0 && subset(o, within)) candidates.push_back(o);
    std::vector<Mask> out;
    for (Mask c : candidates) {
        bool minimal = true;
        for (Mask d : candidates)
            if (d != c && subset(d, c)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(c);
    }
    return out;
}

bool Semitopology::is_topology() const {
    for (size_t i = 0; i < opens_.size(); ++i)
        for (size_t j = i + 1; j < opens_.size(); ++j)
            if (!is_open(opens_[i] & opens_[j])) return false;
    return true;
}

ProductResult product(const Semitopology& s1, const Semitopology& s2) {
    const int n1 = s1.size(), n2 = s2.size();
    if (n1 * n2 > kMaxPoints)
        throw Error("product universe would have " + std::to_string(n1 * n2) +
                    " points; the cap is " + std::to_string(kMaxPoints));
    std::vector<std::string> labels;
    std::vector<std::vector<int>> pair_index(n1, std::vector<int>(n2, -1));
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b) {
            pair_index[a][b] = static_cast<int>(labels.size());
            labels.push_back("(" + s1.universe().label(a) + "," + s2.universe().label(b) + ")");
        }
    std::vector<Mask> squares;
    for (Mask o1 : s1.opens())
        for (Mask o2 : s2.opens()) {
            Mask sq = 0;
            SEMITOPO_FOR_POINTS(a, o1)
            SEMITOPO_FOR_POINTS(b, o2) sq |= bit(pair_index[a][b]);
            squares.push_back(sq);
        }
    Semitopology sp(Universe(std::move(labels)), squares, Semitopology::Mode::generators);
    return ProductResult{std::move(sp), std::move(pair_index)};
}

Semitopology subspace(const Semitopology& s, Mask x) {
    if (!subset(x, s.all())) throw Error("subspace: set is not a subset of the universe");
    // compress point indices of x
    std::vector<std::string> labels;
    std::vector<int> newidx(s.size(), -1);
    SEMITOPO_FOR_POINTS(p, x) {
        newidx[p] = static_cast<int>(labels.size());
        labels.push_back(s.universe().label(p));
    }
    std::vector<Mask> fam;
    for (Mask o : s.opens()) {
        Mask m = 0;
        SEMITOPO_FOR_POINTS(p, o & x) m |= bit(newidx[p]);
        fam.push_back(m);
    }
    // { O ∩ X } is already union-closed and contains the bounds; validate as-is.
    return Semitopology(Universe(std::move(labels)), fam, Semitopology::Mode::full);
}

bool is_continuous(const Semitopology& s, const ValueAssignment& f) {
    // codomain is discrete, so it suffices that every value preimage is open
    for (int v = 0; v < static_cast<int>(f.alphabet.size()); ++v) {
        Mask pre = 0;
        SEMITOPO_FOR_POINTS(p, s.all())
        if (f(p) == v) pre |= bit(p);
        if (!s.is_open(pre)) return false;
    }
    return true;
}

bool is_continuous_at(const Semitopology& s, const ValueAssignment& f, int p) {
    if (p < 0 || p >= s.size()) throw Error("point index out of range");
    // f locally constant at p: some open neighbourhood on which f is constant
    for (Mask o : s.opens()) {
        if (!contains(o, p)) continue;
        bool constant = true;
        SEMITOPO_FOR_POINTS(q, o)
        if (f(q) != f(p)) {
            constant = false;
            break;
        }
        if (constant) return true;
    }
    return false;
}

}  // namespace semitopo
