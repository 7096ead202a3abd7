// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/semiframe.hpp"

#include <algorithm>

namespace semitopo {

Semiframe::Semiframe(std::vector<std::string> labels, std::vector<std::pair<int, int>> leq_pairs,
                     std::vector<std::pair<int, int>> compat_pairs)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
    if (n_ > 31) throw Error("semiframe carrier exceeds 31 elements");
    if (n_ == 0) throw Error("semiframe carrier is empty; use a one-element carrier");
    up_.assign(n_, 0);
    compat_.assign(n_, 0);
    for (int x = 0; x < n_; ++x) up_[x] |= ElemSet{1} << x;  // reflexivity
    for (auto [a, b] : leq_pairs) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_) throw Error("leq pair out of range");
        up_[a] |= ElemSet{1} << b;
    }
    // transitive closure
    for (bool changed = true; changed;) {
        changed = false;
        for (int x = 0; x < n_; ++x) {
            ElemSet before = up_[x];
            SEMITOPO_FOR_POINTS(y, up_[x]) up_[x] |= up_[y];
            changed |= up_[x] != before;
        }
    }
    for (int x = 0; x < n_; ++x)
        for (int y = x + 1; y < n_; ++y)
            if (leq(x, y) && leq(y, x))
                throw Error("leq is not antisymmetric on '" + labels_[x] + "' and '" +
                            labels_[y] + "'");

    // pairwise joins must exist; subset joins then exist by folding
    join_pair_.assign(n_, std::vector<int>(n_, -1));
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            ElemSet ub = up_[x] & up_[y];
            int least = -1;
            SEMITOPO_FOR_POINTS(z, ub)
            if (subset(ub, up_[z])) {  // z below every upper bound
                least = z;
                break;
            }
            if (least < 0)
                throw Error("join of '" + labels_[x] + "' and '" + labels_[y] +
                            "' does not exist");
            join_pair_[x][y] = least;
        }
    // bottom and top
    for (int x = 0; x < n_; ++x) {
        if (up_[x] == all()) bot_ = x;
        ElemSet below = 0;
        for (int y = 0; y < n_; ++y)
            if (leq(y, x)) below |= ElemSet{1} << y;
        if (below == all()) top_ = x;
    }
    if (bot_ < 0) throw Error("carrier has no bottom element");
    if (top_ < 0) throw Error("carrier has no top element");

    for (auto [a, b] : compat_pairs) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_) throw Error("compat pair out of range");
        compat_[a] |= ElemSet{1} << b;
        compat_[b] |= ElemSet{1} << a;  // symmetric
    }
    // properly reflexive, both directions
    for (int x = 0; x < n_; ++x) {
        if (x != bot_ && !compat(x, x))
            throw Error("compatibility is not properly reflexive: '" + labels_[x] +
                        "' is not compatible with itself");
        if (x == bot_ && compat_[x] != 0)
            throw Error("bottom element must be compatible with nothing");
        if (compat(x, bot_)) throw Error("no element may be compatible with bottom");
    }
    // monotonicity: the half of the distributive law every catalogued example
    // satisfies; full distributivity is a separate checked predicate
    for (int x = 0; x < n_; ++x)
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (compat(x, a) && leq(a, b) && !compat(x, b))
                    throw Error("compatibility is not monotone: '" + labels_[x] + "' * '" +
                                labels_[a] + "' fails for the larger '" + labels_[b] + "'");
}

bool Semiframe::is_completely_distributive() const {
    // pairwise joins suffice: the subset law follows by folding
    for (int x = 0; x < n_; ++x)
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                bool lhs = compat(x, join_pair_[a][b]);
                bool rhs = compat(x, a) || compat(x, b);
                if (lhs != rhs) return false;
            }
    return true;
}

int Semiframe::find(const std::string& label) const {
    for (int x = 0; x < n_; ++x)
        if (labels_[x] == label) return x;
    return -1;
}

int Semiframe::join_of(ElemSet xs) const {
    int j = bot_;
    SEMITOPO_FOR_POINTS(x, xs) j = join_pair_[j][x];
    return j;
}

ElemSet Semiframe::up_closure(ElemSet xs) const {
    ElemSet out = 0;
    SEMITOPO_FOR_POINTS(x, xs) out |= up_[x];
    return out;
}

ElemSet Semiframe::compat_system(ElemSet f) const {
    ElemSet out = all();
    SEMITOPO_FOR_POINTS(x, f) out &= compat_[x];
    return out;
}

bool Semiframe::pairwise_compatible(ElemSet xs) const {
    SEMITOPO_FOR_POINTS(x, xs)
    if (!subset(xs, compat_[x])) return false;
    return true;
}

bool Semiframe::is_transitive_element(int x) const {
    if (x == bot_) return false;
    return pairwise_compatible(compat_[x]);
}

ElemSet Semiframe::transitive_elements() const {
    ElemSet out = 0;
    for (int x = 0; x < n_; ++x)
        if (is_transitive_element(x)) out |= ElemSet{1} << x;
    return out;
}

Semiframe fr(const Semitopology& s) {
    auto opens = s.opens();
    std::vector<std::string> labels;
    labels.reserve(opens.size());
    for (Mask o : opens) labels.push_back(s.universe().to_string(o));
    std::vector<std::pair<int, int>> leq, compat;
    for (int i = 0; i < static_cast<int>(opens.size()); ++i)
        for (int j = 0; j < static_cast<int>(opens.size()); ++j) {
            if (subset(opens[i], opens[j])) leq.emplace_back(i, j);
            if (between(opens[i], opens[j])) compat.emplace_back(i, j);
        }
    return Semiframe(std::move(labels), std::move(leq), std::move(compat));
}

bool is_semifilter(const Semiframe& f, ElemSet fl) {
    if (fl == 0) return false;
    if (f.up_closure(fl) != fl) return false;
    return f.pairwise_compatible(fl);
}

bool is_abstract_point(const Semiframe& f, ElemSet fl) {
    if (!is_semifilter(f, fl)) return false;
    // finite case: prime = completely prime (bot is excluded by compatibility)
    for (int x = 0; x < f.size(); ++x)
        for (int y = 0; y < f.size(); ++y) {
            int j = f.join(x, y);
            if (contains(fl, j) && !contains(fl, x) && !contains(fl, y)) return false;
        }
    return true;
}

bool is_maximal_semifilter(const Semiframe& f, ElemSet fl) {
    return is_semifilter(f, fl) && f.compat_system(fl) == fl;
}

namespace {

// Enumerates nonempty antichains by DFS; each up-closes to a distinct up-set.
void antichains(const Semiframe& f, int from, ElemSet chosen,
                std::vector<ElemSet>& out) {
    if (chosen != 0) out.push_back(chosen);
    for (int x = from; x < f.size(); ++x) {
        bool comparable = false;
        SEMITOPO_FOR_POINTS(y, chosen)
        if (f.leq(x, y) || f.leq(y, x)) {
            comparable = true;
            break;
        }
        if (!comparable) antichains(f, x + 1, chosen | (ElemSet{1} << x), out);
    }
}

}  // namespace

std::vector<ElemSet> semifilters(const Semiframe& f, int bound) {
    if (f.size() > bound)
        throw Error("semifilter enumeration: carrier of " + std::to_string(f.size()) +
                    " elements exceeds the bound of " + std::to_string(bound));
    std::vector<ElemSet> anti;
    antichains(f, 0, 0, anti);
    std::vector<ElemSet> out;
    for (ElemSet a : anti) {
        ElemSet up = f.up_closure(a);
        if (f.pairwise_compatible(up)) out.push_back(up);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ElemSet> abstract_points(const Semiframe& f, int bound) {
    std::vector<ElemSet> out;
    for (ElemSet fl : semifilters(f, bound))
        if (is_abstract_point(f, fl)) out.push_back(fl);
    return out;
}

StResult st(const Semiframe& f, int bound) {
    std::vector<ElemSet> points = abstract_points(f, bound);
    const int np = static_cast<int>(points.size());
    if (np > kMaxPoints)
        throw Error("st: " + std::to_string(np) + " abstract points exceed the point cap");
    // label a point by the antichain of minimal elements that generates it
    std::vector<std::string> labels;
    for (ElemSet pt : points) {
        ElemSet minimal = 0;
        SEMITOPO_FOR_POINTS(x, pt) {
            bool is_min = true;
            SEMITOPO_FOR_POINTS(y, pt)
            if (y != x && f.leq(y, x)) {
                is_min = false;
                break;
            }
            if (is_min) minimal |= ElemSet{1} << x;
        }
        std::string lab;
        SEMITOPO_FOR_POINTS(x, minimal) {
            if (!lab.empty()) lab += "&";
            lab += f.label(x);
        }
        labels.push_back(lab);
    }
    std::vector<Mask> op(f.size(), 0);
    for (int x = 0; x < f.size(); ++x)
        for (int i = 0; i < np; ++i)
            if (contains(points[i], x)) op[x] |= bit(i);
    std::vector<Mask> fam(op.begin(), op.end());
    Semitopology space(Universe(std::move(labels)), fam, Semitopology::Mode::full);
    return StResult{std::move(space), std::move(points), std::move(op)};
}

SoberifyResult soberify(const Semitopology& s, int bound) {
    Semiframe f = fr(s);
    StResult str = st(f, bound);
    SoberifyResult out{std::move(str.space), std::move(str.points), {}};
    out.nbhd.assign(s.size(), -1);
    for (int p = 0; p < s.size(); ++p) {
        ElemSet nb = 0;
        auto opens = s.opens();
        for (int x = 0; x < static_cast<int>(opens.size()); ++x)
            if (contains(opens[x], p)) nb |= ElemSet{1} << x;
        for (int i = 0; i < static_cast<int>(out.points.size()); ++i)
            if (out.points[i] == nb) {
                out.nbhd[p] = i;
                break;
            }
        if (out.nbhd[p] < 0)
            throw Error("soberify: neighbourhood semifilter of '" + s.universe().label(p) +
                        "' is not an abstract point");
    }
    return out;
}

bool is_spatial(const Semiframe& f, int bound) {
    auto points = abstract_points(f, bound);
    auto op = [&](int x) {
        ElemSet m = 0;
        for (int i = 0; i < static_cast<int>(points.size()); ++i)
            if (contains(points[i], x)) m |= ElemSet{1} << i;
        return m;
    };
    for (int x = 0; x < f.size(); ++x)
        for (int y = 0; y < f.size(); ++y) {
            if (subset(op(x), op(y)) && !f.leq(x, y)) return false;
            if (f.compat(x, y) && !between(op(x), op(y))) return false;
        }
    return true;
}

bool is_sober(const Semitopology& s, int bound) {
    Semiframe f = fr(s);
    auto points = abstract_points(f, bound);
    std::vector<ElemSet> nbhds;
    auto opens = s.opens();
    for (int p = 0; p < s.size(); ++p) {
        ElemSet nb = 0;
        for (int x = 0; x < static_cast<int>(opens.size()); ++x)
            if (contains(opens[x], p)) nb |= ElemSet{1} << x;
        nbhds.push_back(nb);
    }
    // nbhd must be a bijection onto the abstract points
    std::sort(nbhds.begin(), nbhds.end());
    if (std::adjacent_find(nbhds.begin(), nbhds.end()) != nbhds.end()) return false;
    std::vector<ElemSet> pts = points;
    std::sort(pts.begin(), pts.end());
    return nbhds == pts;
}

bool is_t0(const Semitopology& s) {
    for (int p = 0; p < s.size(); ++p)
        for (int q = p + 1; q < s.size(); ++q) {
            bool ind = true;
            for (Mask o : s.opens())
                if (contains(o, p) != contains(o, q)) {
                    ind = false;
                    break;
                }
            if (ind) return false;
        }
    return true;
}

DualRegularity dual_regularity(const Semiframe& f, ElemSet fl) {
    if (!is_semifilter(f, fl)) throw Error("dual_regularity: not a semifilter");
    DualRegularity out;
    out.transitive_elements = f.transitive_elements();
    out.compat_system = f.compat_system(fl);
    out.strongly_compatible = out.compat_system != 0 && f.pairwise_compatible(out.compat_system);
    ElemSet gen = 0;
    for (int x = 0; x < f.size(); ++x)
        if (subset(f.compat_system(x), out.compat_system)) gen |= ElemSet{1} << x;
    out.frame_community = f.join_of(gen);
    out.quasiregular = out.frame_community != f.bot();
    out.weakly_regular = contains(fl, out.frame_community);
    out.regular = out.weakly_regular && f.is_transitive_element(out.frame_community);
    return out;
}

}  // namespace semitopo
