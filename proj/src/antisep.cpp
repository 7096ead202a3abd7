// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/antisep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace semitopo {

namespace {

void require_point(const Semitopology& s, int p) {
    if (p < 0 || p >= s.size()) throw Error("point index out of range");
}

}  // namespace

bool is_continuous(const Semitopology& s, const Valuation3& f) {
    Mask pre_t = 0, pre_f = 0;
    for (int p = 0; p < s.size(); ++p) {
        if (f(p) == Three::T) pre_t |= bit(p);
        if (f(p) == Three::F) pre_f |= bit(p);
    }
    return s.is_open(pre_t) && s.is_open(pre_f);
}

bool is_extremal(const Semitopology& s, const Valuation3& f) {
    if (!is_continuous(s, f)) return false;
    Mask pre_t = 0, pre_f = 0;
    for (int p = 0; p < s.size(); ++p) {
        if (f(p) == Three::T) pre_t |= bit(p);
        if (f(p) == Three::F) pre_f |= bit(p);
    }
    return s.closure(pre_t) == f.designated_set() &&
           s.closure(pre_f) == f.neg_designated_set();
}

bool intertwined(const Semitopology& s, int p, int q) {
    require_point(s, p);
    require_point(s, q);
    for (Mask o : s.opens()) {
        if (!contains(o, p)) continue;
        for (Mask o2 : s.opens())
            if (contains(o2, q) && !between(o, o2)) return false;
    }
    return true;
}

Mask intertwined_set(const Semitopology& s, int p) {
    Mask m = 0;
    for (int q = 0; q < s.size(); ++q)
        if (intertwined(s, p, q)) m |= bit(q);
    return m;
}

Mask community(const Semitopology& s, int p) { return s.interior(intertwined_set(s, p)); }

Mask kernel(const Semitopology& s, int p) {
    Mask k = 0;
    for (Mask a : s.atoms(community(s, p))) k |= a;
    return k;
}

bool is_transitive_set(const Semitopology& s, Mask t) {
    for (Mask o : s.opens()) {
        if (!between(o, t)) continue;
        for (Mask o2 : s.opens())
            if (between(o2, t) && !between(o, o2)) return false;
    }
    return true;
}

bool is_topen(const Semitopology& s, Mask t) {
    return t != 0 && s.is_open(t) && is_transitive_set(s, t);
}

bool is_hyperconnected(const Semitopology& s, Mask t) {
    for (Mask o : s.opens()) {
        if (o == 0 || !subset(o, t)) continue;
        for (Mask o2 : s.opens())
            if (o2 != 0 && subset(o2, t) && !between(o, o2)) return false;
    }
    return true;
}

NeighbourhoodInvariants neighbourhood_invariants(const Semitopology& s, int p) {
    require_point(s, p);
    NeighbourhoodInvariants inv;
    inv.intertwined_set = intertwined_set(s, p);
    inv.community = s.interior(inv.intertwined_set);
    Mask k = 0;
    for (Mask a : s.atoms(inv.community)) k |= a;
    inv.kernel = k;
    inv.covers = s.covers(p);
    inv.boundary_of_K = inv.intertwined_set & ~inv.community;
    return inv;
}

bool hypertransitive(const Semitopology& s, int p) {
    require_point(s, p);
    // O' ⋔ nbhd(p) ⋔ O'' implies O' ⋔ O''
    auto meets_nbhd = [&](Mask o) {
        for (Mask n : s.opens())
            if (contains(n, p) && !between(o, n)) return false;
        return true;
    };
    std::vector<Mask> meeting;
    for (Mask o : s.opens())
        if (o != 0 && meets_nbhd(o)) meeting.push_back(o);
    for (Mask a : meeting)
        for (Mask b : meeting)
            if (!between(a, b)) return false;
    return true;
}

bool hyperdefinite(const Semitopology& s, int p) {
    require_point(s, p);
    for (Mask o : s.regular_opens())
        if (!contains(o, p) && !contains(s.interior(s.all() & ~o), p)) return false;
    return true;
}

Classification classify_point(const Semitopology& s, int p) {
    require_point(s, p);
    Classification c;
    Mask k = intertwined_set(s, p);
    Mask com = s.interior(k);
    c.quasiregular = com != 0;
    c.weakly_regular = contains(com, p);
    c.regular = c.weakly_regular && is_transitive_set(s, com);

    // unconflicted: q ⋔ p ⋔ q' implies q ⋔ q'
    c.unconflicted = true;
    SEMITOPO_FOR_POINTS(q, k) {
        SEMITOPO_FOR_POINTS(q2, k)
        if (!intertwined(s, q, q2)) {
            c.unconflicted = false;
            break;
        }
        if (!c.unconflicted) break;
    }
    c.conflicted = !c.unconflicted;

    c.hypertransitive = hypertransitive(s, p);
    c.hyperdefinite = hyperdefinite(s, p);

    c.indirectly_regular = false;
    SEMITOPO_FOR_POINTS(q, k) {
        Mask comq = community(s, q);
        if (contains(comq, q) && is_transitive_set(s, comq)) {
            c.indirectly_regular = true;
            break;
        }
    }

    // K_p minimal among all closed neighbourhoods
    c.mcn = false;
    if (s.interior(k) != 0) {
        c.mcn = true;
        for (Mask cl : s.closed_sets())
            if (s.interior(cl) != 0 && subset(cl, k) && cl != k) {
                c.mcn = false;
                break;
            }
    }
    return c;
}

TopenPartition topen_partition(const Semitopology& s) {
    TopenPartition part;
    part.irregular_points = 0;
    Mask placed = 0;
    for (int p = 0; p < s.size(); ++p) {
        if (contains(placed, p)) continue;
        Mask com = community(s, p);
        if (contains(com, p) && is_transitive_set(s, com)) {
            part.maximal_topens.push_back(com);
            placed |= com;
        } else {
            part.irregular_points |= bit(p);
            placed |= bit(p);
        }
    }
    std::sort(part.maximal_topens.begin(), part.maximal_topens.end(), canonical_less);
    return part;
}

std::vector<Mask> min_closed_neighbourhoods(const Semitopology& s, std::optional<int> of_point) {
    std::vector<Mask> candidates;
    for (Mask c : s.closed_sets()) {
        Mask in = s.interior(c);
        if (in == 0) continue;
        if (of_point && !contains(in, *of_point)) continue;
        candidates.push_back(c);
    }
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
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

DenseResult dense_check(const Semitopology& s, Mask d, Mask p) {
    if (d == 0) throw Error("dense_check: D is empty");
    if (!subset(d, p)) throw Error("dense_check: D is not a subset of P");
    if (!s.is_open(p)) throw Error("dense_check: P is not open");
    DenseResult r;
    r.weakly = s.interior(p & ~d) == 0;
    r.strongly = s.closure(d) == s.closure(p);
    return r;
}

bool is_continuous_at(const Semitopology& s, const PartialAssignment& f, int p) {
    require_point(s, p);
    if (!contains(f.domain, p)) return false;
    for (Mask o : s.opens()) {
        if (!contains(o, p) || !subset(o, f.domain)) continue;
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

ValueAssignment extend_to_regular(const Semitopology& s, const PartialAssignment& f,
                                  int default_value) {
    SEMITOPO_FOR_POINTS(p, f.domain)
    if (!is_continuous_at(s, f, p))
        throw Error("extend_to_regular: assignment is not continuous at '" +
                    s.universe().label(p) + "'");
    ValueAssignment g;
    g.alphabet = f.alphabet;
    g.value.assign(s.size(), default_value);
    for (int p = 0; p < s.size(); ++p) {
        if (is_continuous_at(s, f, p)) {
            g.value[p] = f(p);
            continue;
        }
        Mask com = community(s, p);
        bool regular = contains(com, p) && is_transitive_set(s, com);
        Mask meet = com & f.domain;
        if (regular && meet != 0) {
            int d = std::countr_zero(meet);  // least point; forced on regular p
            g.value[p] = f(d);
        }
        // otherwise the default stands
    }
    return g;
}

KernelLimit kernel_limit(const Semitopology& s, const std::vector<int>& f, int p) {
    require_point(s, p);
    KernelLimit out;
    Mask com = community(s, p);
    bool regular = contains(com, p) && is_transitive_set(s, com);
    if (!regular) return out;  // confident=false over an empty kernel

    ValueAssignment fa;
    fa.value = f;
    auto continuous_on = [&](Mask set) {
        SEMITOPO_FOR_POINTS(q, set)
        if (!is_continuous_at(s, fa, q)) return false;
        return true;
    };
    for (Mask a : s.atoms(com)) {
        if (continuous_on(a)) {
            out.confident = true;
            out.limit = f.at(std::countr_zero(a));  // constant on the atom
            break;
        }
    }
    out.unanimous = com != 0 && continuous_on(com);
    return out;
}

std::vector<Valuation3> extremal_valuations(const Semitopology& s) {
    std::vector<Valuation3> out;
    for (Mask o : s.regular_opens()) {
        Mask f_side = s.interior(s.all() & ~o);
        Valuation3 v;
        v.value.assign(s.size(), Three::B);
        SEMITOPO_FOR_POINTS(p, o) v.value[p] = Three::T;
        SEMITOPO_FOR_POINTS(p, f_side) v.value[p] = Three::F;
        out.push_back(std::move(v));
    }
    return out;
}

bool top_indistinguishable(const Semitopology& s, int p, int q) {
    require_point(s, p);
    require_point(s, q);
    for (Mask o : s.opens())
        if (contains(o, p) != contains(o, q)) return false;
    return true;
}

bool consensus_equivalent(const Semitopology& s, int p, int q) {
    for (const auto& f : extremal_valuations(s))
        if (f(p) != f(q)) return false;
    return true;
}

bool hypertwined(const Semitopology& s, int p, int q) {
    for (Mask o : s.regular_opens()) {
        Mask inner = s.interior(s.all() & ~o);
        bool both_in = contains(o, p) && contains(o, q);
        bool both_out = contains(inner, p) && contains(inner, q);
        if (!both_in && !both_out) return false;
    }
    return true;
}

std::vector<int> intertwined_components(const Semitopology& s) {
    std::vector<int> parent(s.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int p = 0; p < s.size(); ++p)
        for (int q = p + 1; q < s.size(); ++q)
            if (intertwined(s, p, q)) {
                int a = find(p), b = find(q);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);  // least label wins
            }
    std::vector<int> rep(s.size());
    for (int p = 0; p < s.size(); ++p) rep[p] = find(p);
    return rep;
}

PointRelations point_relations(const Semitopology& s, int p, int q) {
    PointRelations r;
    r.intertwined = intertwined(s, p, q);
    r.top_indistinguishable = top_indistinguishable(s, p, q);
    r.consensus_equivalent = consensus_equivalent(s, p, q);
    r.hypertwined = hypertwined(s, p, q);
    auto rep = intertwined_components(s);
    r.transitively_intertwined = rep[p] == rep[q];
    return r;
}

IntersectionGraph intersection_graph(const Semitopology& s) {
    IntersectionGraph g;
    for (Mask o : s.opens())
        if (o != 0) g.nodes.push_back(o);
    g.adjacent.assign(g.nodes.size(), std::vector<bool>(g.nodes.size(), false));
    for (size_t i = 0; i < g.nodes.size(); ++i)
        for (size_t j = 0; j < g.nodes.size(); ++j)
            g.adjacent[i][j] = between(g.nodes[i], g.nodes[j]);
    return g;
}

bool node_preorder(const Semitopology& s, Mask o1, Mask o2) {
    for (Mask o : s.opens())
        if (o != 0 && between(o1, o) && !between(o2, o)) return false;
    return true;
}

bool flanks(const Semitopology& s, Mask x, Mask y) {
    return between(x, y) && between(s.all() & ~x, y);
}

std::string to_dot(const Semitopology& s, const DotOptions& opts) {
    std::ostringstream os;
    auto g = intersection_graph(s);
    const char* kind = opts.flank_edges ? "digraph" : "graph";
    os << kind << " opens {\n";
    for (size_t i = 0; i < g.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << s.universe().to_string(g.nodes[i]) << "\"];\n";
    for (size_t i = 0; i < g.nodes.size(); ++i)
        for (size_t j = 0; j < g.nodes.size(); ++j) {
            if (opts.flank_edges) {
                if (flanks(s, g.nodes[i], g.nodes[j])) os << "  n" << i << " -> n" << j << ";\n";
            } else {
                if (j <= i) continue;  // undirected, emit once
                if (g.adjacent[i][j]) os << "  n" << i << " -- n" << j << ";\n";
            }
        }
    if (opts.self_loops && !opts.flank_edges)
        for (size_t i = 0; i < g.nodes.size(); ++i) os << "  n" << i << " -- n" << i << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace semitopo
