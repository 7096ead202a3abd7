// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "semitopo/antisep.hpp"
#include "semitopo/catalog.hpp"
#include "semitopo/enumerate.hpp"

using namespace semitopo;

TEST_CASE("neighbourhood invariants on the figures") {
    Semitopology tl = catalog("fig-012-tl");
    const Universe& u = tl.universe();
    NeighbourhoodInvariants inv = neighbourhood_invariants(tl, u.index("1"));
    CHECK(inv.intertwined_set == u.all());
    CHECK(inv.community == u.all());
    CHECK(inv.kernel == u.parse_set("0,2"));
    CHECK(inv.boundary_of_K == 0);
    CHECK(tl.closure(inv.intertwined_set) == inv.intertwined_set);  // K_p closed

    Semitopology sq = catalog("fig-square");
    for (int p = 0; p < sq.size(); ++p) {
        NeighbourhoodInvariants i2 = neighbourhood_invariants(sq, p);
        CHECK(i2.intertwined_set == bit(p));
        CHECK(i2.community == 0);
        CHECK(i2.kernel == 0);
    }

    Semitopology tm = catalog("fig-two-min");
    auto covers = neighbourhood_invariants(tm, tm.universe().index("1")).covers;
    CHECK(covers.size() == 2);

    CHECK_THROWS_AS(neighbourhood_invariants(tl, 99), Error);
}

TEST_CASE("topen partition examples") {
    Semitopology bl = catalog("fig-012-bl");
    TopenPartition part = topen_partition(bl);
    REQUIRE(part.maximal_topens.size() == 2);
    CHECK(part.irregular_points == bit(bl.universe().index("2")));

    Semitopology d3 = catalog("discrete", 3);
    TopenPartition p3 = topen_partition(d3);
    CHECK(p3.maximal_topens.size() == 3);
    CHECK(p3.irregular_points == 0);
}

TEST_CASE("partition well-formedness over all small spaces") {
    for_each_semitopology_upto(3, [](const Semitopology& s) {
        TopenPartition part = topen_partition(s);
        Mask covered = part.irregular_points;
        for (Mask t : part.maximal_topens) {
            CHECK(t != 0);
            CHECK(s.is_open(t));
            CHECK(is_transitive_set(s, t));
            CHECK((covered & t) == 0);  // disjoint
            covered |= t;
            // maximal: no strictly larger topen
            for (Mask o : s.opens())
                if (o != t && subset(t, o)) CHECK(!is_transitive_set(s, o));
        }
        CHECK(covered == s.all());
        for (int p = 0; p < s.size(); ++p) {
            bool in_topen = false;
            for (Mask t : part.maximal_topens) in_topen |= contains(t, p);
            CHECK(in_topen == classify_point(s, p).regular);
        }
    });
}

TEST_CASE("classification flags on the figures") {
    Semitopology tl = catalog("fig-012-tl");
    Classification c1 = classify_point(tl, tl.universe().index("1"));
    CHECK(c1.weakly_regular);
    CHECK(c1.conflicted);
    CHECK(!c1.regular);

    Semitopology br = catalog("fig-012-br");
    Classification cs = classify_point(br, br.universe().index("*"));
    CHECK(cs.quasiregular);
    CHECK(!cs.weakly_regular);
    CHECK(cs.unconflicted);
    CHECK(!cs.hypertransitive);  // {1} and {0,2} meet every neighbourhood of *

    Semitopology tr = catalog("fig-012-tr");
    Classification ct = classify_point(tr, tr.universe().index("1"));
    CHECK(ct.hypertransitive);
    CHECK(!ct.quasiregular);
}

TEST_CASE("classification laws exhaustively on small spaces") {
    for_each_semitopology_upto(3, [](const Semitopology& s) {
        bool space_quasiregular = s.size() > 0;
        bool some_regular = false;
        for (int p = 0; p < s.size(); ++p) {
            Classification c = classify_point(s, p);
            CHECK(c.regular == (c.weakly_regular && c.unconflicted));
            CHECK(c.regular == (c.quasiregular && c.hypertransitive));
            CHECK(c.hyperdefinite == c.hypertransitive);
            if (c.regular) CHECK(c.weakly_regular);
            if (c.weakly_regular) CHECK(c.quasiregular);
            if (c.weakly_regular) CHECK(c.indirectly_regular);
            if (c.indirectly_regular) CHECK(c.quasiregular);
            space_quasiregular &= c.quasiregular;
            some_regular |= c.regular;

            // K_p = intersection of closures of neighbourhoods of p
            Mask k = intertwined_set(s, p);
            Mask inter = s.all();
            for (Mask o : s.opens())
                if (contains(o, p)) inter &= s.closure(o);
            CHECK(k == inter);

            // q in community(p) implies K_q subseteq K_p
            SEMITOPO_FOR_POINTS(q, community(s, p))
            CHECK(subset(intertwined_set(s, q), k));

            // regular p: closure(community) = K_p; community and kernel idempotent
            if (c.regular) {
                Mask com = community(s, p);
                CHECK(s.closure(com) == k);
                Mask com2 = 0;
                SEMITOPO_FOR_POINTS(q, com) com2 |= community(s, q);
                CHECK(com2 == com);
                Mask ker = kernel(s, p);
                Mask ker2 = 0;
                SEMITOPO_FOR_POINTS(q, ker) ker2 |= kernel(s, q);
                CHECK(ker2 == ker);
            }
        }
        if (space_quasiregular && s.size() > 0) CHECK(some_regular);
    });
}

TEST_CASE("intertwined is reflexive and symmetric; transitive sets are pointwise") {
    for_each_semitopology_upto(3, [](const Semitopology& s) {
        for (int p = 0; p < s.size(); ++p) {
            CHECK(intertwined(s, p, p));
            for (int q = 0; q < s.size(); ++q)
                CHECK(intertwined(s, p, q) == intertwined(s, q, p));
        }
        const Mask all = s.all();
        for (Mask t = 0;; ++t) {
            bool pointwise = true;
            SEMITOPO_FOR_POINTS(p, t)
            SEMITOPO_FOR_POINTS(q, t)
            pointwise = pointwise && intertwined(s, p, q);
            CHECK(is_transitive_set(s, t) == pointwise);
            CHECK((is_transitive_set(s, t) ? is_hyperconnected(s, t) : true));
            if (t == all) break;
        }
        // in a topology, open transitive and hyperconnected coincide
        if (s.is_topology())
            for (Mask o : s.opens())
                if (o != 0) CHECK(is_transitive_set(s, o) == is_hyperconnected(s, o));
    });
}

TEST_CASE("minimal closed neighbourhood characterisations, exhaustively") {
    for_each_semitopology_upto(3, [](const Semitopology& s) {
        for (int p = 0; p < s.size(); ++p) {
            Classification c = classify_point(s, p);
            Mask k = intertwined_set(s, p);
            bool k_is_cn_of_p = s.closure(k) == k && contains(s.interior(k), p);
            // weakly regular iff K_p is a closed neighbourhood of p iff least
            CHECK(c.weakly_regular == k_is_cn_of_p);
            auto mcn_p = min_closed_neighbourhoods(s, p);
            if (c.weakly_regular) {
                REQUIRE(mcn_p.size() == 1);
                CHECK(mcn_p[0] == k);
            }
            // quasiregular iff K_p is a closed neighbourhood
            CHECK(c.quasiregular == (s.interior(k) != 0));
            // regular iff weakly regular and K_p minimal among all closed nbhds
            CHECK(c.regular == (c.weakly_regular && c.mcn));
        }
        // scope=all equals the minimal nonempty regular closed sets
        auto all_mcn = min_closed_neighbourhoods(s);
        std::vector<Mask> min_rc;
        auto rcs = s.regular_closeds();
        for (Mask c : rcs) {
            if (c == 0) continue;
            bool minimal = true;
            for (Mask d : rcs)
                if (d != 0 && d != c && subset(d, c)) minimal = false;
            if (minimal) min_rc.push_back(c);
        }
        std::sort(min_rc.begin(), min_rc.end(), canonical_less);
        CHECK(all_mcn == min_rc);
    });
}

TEST_CASE("minimal closed neighbourhoods of the figures") {
    Semitopology nit = catalog("fig-nitpick");
    auto mcn = min_closed_neighbourhoods(nit, nit.universe().index("*"));
    CHECK(mcn.size() == 2);
    Semitopology d1 = catalog("discrete", 1);
    CHECK(min_closed_neighbourhoods(d1) == std::vector<Mask>{1});
}

TEST_CASE("dense checks") {
    Semitopology tr = catalog("fig-012-tr");
    const Universe& u = tr.universe();
    DenseResult d = dense_check(tr, u.parse_set("0"), u.parse_set("0,1"));
    CHECK(d.weakly);
    CHECK(!d.strongly);
    DenseResult both = dense_check(tr, u.parse_set("0,1"), u.parse_set("0,1"));
    CHECK(both.weakly);
    CHECK(both.strongly);
    CHECK_THROWS_WITH_AS(dense_check(tr, 0, u.parse_set("0,1")), doctest::Contains("empty"),
                         Error);
    CHECK_THROWS_WITH_AS(dense_check(tr, u.parse_set("2"), u.parse_set("0,1")),
                         doctest::Contains("subset"), Error);
    Semitopology tl = catalog("fig-012-tl");
    CHECK_THROWS_WITH_AS(
        dense_check(tl, tl.universe().parse_set("0"), tl.universe().parse_set("0,1")),
        doctest::Contains("open"), Error);

    // weakly dense iff D meets every atom of P; strongly iff equal closures
    for_each_semitopology_upto(3, [](const Semitopology& s) {
        for (Mask p : s.opens()) {
            if (p == 0) continue;
            for (Mask d2 = 1;; ++d2) {
                if (subset(d2, p) && d2 != 0) {
                    DenseResult r = dense_check(s, d2, p);
                    bool direct_weak = true, direct_strong = true;
                    for (Mask o : s.opens()) {
                        if (o != 0 && subset(o, p) && !between(d2, o)) direct_weak = false;
                        if (between(o, p) && !between(o, d2)) direct_strong = false;
                    }
                    CHECK(r.weakly == direct_weak);
                    CHECK(r.strongly == direct_strong);
                }
                if (d2 == s.all()) break;
            }
        }
    });
}

TEST_CASE("continuous extension") {
    Semitopology tl = catalog("fig-012-tl");
    const Universe& u = tl.universe();
    PartialAssignment f{{"a", "b", "d"}, u.parse_set("0,2"), {0, -1, 1}};
    f.value = {0, 0, 1};  // value at 1 is irrelevant
    ValueAssignment g = extend_to_regular(tl, f, 2);
    CHECK(g.value[u.index("0")] == 0);
    CHECK(g.value[u.index("2")] == 1);
    CHECK(g.value[u.index("1")] == 2);  // conflicted point gets the default

    Semitopology bl = catalog("fig-012-bl");
    const Universe& ub = bl.universe();
    PartialAssignment f2{{"a", "d"}, ub.parse_set("0,1"), {0, 0, 0, 0, 0}};
    ValueAssignment g2 = extend_to_regular(bl, f2, 1);
    CHECK(g2.value[ub.index("0")] == 0);
    CHECK(g2.value[ub.index("1")] == 0);
    CHECK(g2.value[ub.index("3")] == 1);
    CHECK(g2.value[ub.index("4")] == 1);
    // continuous at every regular point
    for (int p = 0; p < bl.size(); ++p)
        if (classify_point(bl, p).regular) CHECK(is_continuous_at(bl, g2, p));

    // f continuous everywhere extends to itself
    PartialAssignment total{{"a"}, tl.all(), {0, 0, 0}};
    ValueAssignment g3 = extend_to_regular(tl, total, 0);
    CHECK(g3.value == std::vector<int>{0, 0, 0});

    // discontinuous on D is rejected
    PartialAssignment bad{{"a", "b"}, tl.all(), {0, 1, 0}};
    CHECK_THROWS_AS(extend_to_regular(tl, bad, 0), Error);
}

TEST_CASE("uniqueness of extension on strongly dense domains") {
    // when D is strongly dense for P, two extensions agree on regular points of P
    for_each_semitopology_upto(3, [](const Semitopology& s) {
        if (s.size() == 0) return;
        for (Mask d = 1;; ++d) {
            for (Mask p = 0;; ++p) {
                // strongly dense for P: every open meeting P meets D
                bool sdf = true;
                for (Mask o : s.opens())
                    if (between(o, p) && !between(o, d)) sdf = false;
                if (sdf && p != 0) {
                    // two assignments agreeing on D and continuous at regular
                    // points of P must agree there; build them by extension
                    PartialAssignment f;
                    f.alphabet = {"a", "b", "d1", "d2"};
                    f.domain = d;
                    f.value.assign(s.size(), 0);
                    bool cont = true;
                    SEMITOPO_FOR_POINTS(q, d)
                    cont = cont && is_continuous_at(s, f, q);
                    if (cont) {
                        ValueAssignment g1 = extend_to_regular(s, f, 2);
                        ValueAssignment g2 = extend_to_regular(s, f, 3);
                        SEMITOPO_FOR_POINTS(q, p)
                        if (classify_point(s, q).regular) CHECK(g1.value[q] == g2.value[q]);
                    }
                }
                if (p == s.all()) break;
            }
            if (d == s.all()) break;
        }
    });
}

TEST_CASE("kernel limits") {
    Semitopology tl = catalog("fig-012-tl");
    const Universe& u = tl.universe();
    // f constant on community(p) is unanimous and confident
    KernelLimit k0 = kernel_limit(tl, {0, 1, 1}, u.index("0"));
    CHECK(k0.confident);
    CHECK(k0.limit == 0);
    KernelLimit k0u = kernel_limit(tl, {0, 0, 0}, u.index("0"));
    CHECK(k0u.unanimous);
    CHECK(k0u.confident);
    CHECK(k0u.limit == 0);
    // non-regular point reports unconfident
    KernelLimit k1 = kernel_limit(tl, {0, 0, 0}, u.index("1"));
    CHECK(!k1.confident);
    CHECK(!k1.unanimous);

    // unanimous implies confident over small spaces
    for_each_semitopology_upto(3, [](const Semitopology& s) {
        const int n = s.size();
        if (n == 0) return;
        int total = 1;
        for (int i = 0; i < n; ++i) total *= 2;
        for (int code = 0; code < total; ++code) {
            std::vector<int> f;
            for (int p = 0; p < n; ++p) f.push_back((code >> p) & 1);
            for (int p = 0; p < n; ++p) {
                KernelLimit kl = kernel_limit(s, f, p);
                if (kl.unanimous) CHECK(kl.confident);
            }
        }
    });
}

TEST_CASE("extremal valuations") {
    CHECK(extremal_valuations(catalog("three")).size() == 4);
    CHECK(extremal_valuations(catalog("discrete", 2)).size() == 4);
    CHECK(extremal_valuations(catalog("fig-square")).size() == 6);
    for_each_semitopology_upto(3, [](const Semitopology& s) {
        auto ext = extremal_valuations(s);
        CHECK(ext.size() == s.regular_opens().size());
        for (const auto& f : ext) {
            CHECK(is_continuous(s, f));
            CHECK(is_extremal(s, f));
            // constant and definite on every topen
            for (Mask t : s.opens()) {
                if (t == 0 || !is_transitive_set(s, t)) continue;
                int first = -1;
                SEMITOPO_FOR_POINTS(p, t) {
                    CHECK(f(p) != Three::B);
                    if (first < 0) first = static_cast<int>(f(p));
                    CHECK(static_cast<int>(f(p)) == first);
                }
            }
        }
    });
}

TEST_CASE("point relations") {
    Semitopology ht = catalog("fig-hypertwined12");
    const Universe& u = ht.universe();
    PointRelations r = point_relations(ht, u.index("1"), u.index("2"));
    CHECK(r.intertwined);
    CHECK(r.hypertwined);
    CHECK(r.consensus_equivalent);
    CHECK(r.top_indistinguishable);

    Semitopology three = catalog("three");
    PointRelations tb = point_relations(three, three.universe().index("T"),
                                        three.universe().index("B"));
    CHECK(tb.intertwined);
    CHECK(!tb.consensus_equivalent);
    CHECK(!tb.hypertwined);

    // reflexivity: p related to itself, hypertwined iff hyperdefinite
    for_each_semitopology_upto(3, [](const Semitopology& s) {
        for (int p = 0; p < s.size(); ++p) {
            PointRelations rr = point_relations(s, p, p);
            CHECK(rr.intertwined);
            CHECK(rr.top_indistinguishable);
            CHECK(rr.consensus_equivalent);
            CHECK(rr.transitively_intertwined);
            CHECK(rr.hypertwined == hyperdefinite(s, p));
            // hypertwined subset consensus-equivalent subset intertwined
            for (int q = 0; q < s.size(); ++q) {
                PointRelations pq = point_relations(s, p, q);
                if (pq.hypertwined) CHECK(pq.consensus_equivalent);
                if (pq.consensus_equivalent) CHECK(pq.intertwined);
                if (pq.top_indistinguishable) CHECK(pq.consensus_equivalent);
            }
        }
    });

    // transitively intertwined components on fig-012-bl: {0,1,2,3,4} all one
    Semitopology bl = catalog("fig-012-bl");
    auto rep = intertwined_components(bl);
    for (int p = 0; p < bl.size(); ++p) CHECK(rep[p] == 0);
    // fig-square: all singletons
    Semitopology sq = catalog("fig-square");
    auto rep2 = intertwined_components(sq);
    for (int p = 0; p < sq.size(); ++p) CHECK(rep2[p] == p);
}

TEST_CASE("intersection graph, node preorder, flanks") {
    for_each_semitopology_upto(3, [](const Semitopology& s) {
        for (Mask o : s.opens())
            for (Mask o2 : s.opens()) {
                if (o == 0 || o2 == 0) continue;
                if (subset(o, o2)) CHECK(node_preorder(s, o, o2));
            }
        // T transitive iff (T between O implies T <= O) for all O
        for (Mask t : s.opens()) {
            if (t == 0) continue;
            bool rhs = true;
            for (Mask o : s.opens())
                if (o != 0 && between(t, o) && !node_preorder(s, t, o)) rhs = false;
            CHECK(is_transitive_set(s, t) == rhs);
        }
    });

    // the two three-point spaces with isomorphic intersection graphs are
    // distinguished by the flanks relation
    Universe u1 = Universe::indexed(3);
    Semitopology a(u1, {u1.parse_set("0"), u1.parse_set("0,1")},
                   Semitopology::Mode::generators);
    Semitopology b(u1, {u1.parse_set("0,1"), u1.parse_set("1,2")},
                   Semitopology::Mode::generators);
    IntersectionGraph ga = intersection_graph(a), gb = intersection_graph(b);
    REQUIRE(ga.nodes.size() == gb.nodes.size());
    CHECK(ga.adjacent == gb.adjacent);  // isomorphic as plain graphs
    auto flank_count = [](const Semitopology& s) {
        int c = 0;
        auto g = intersection_graph(s);
        for (Mask x : g.nodes)
            for (Mask y : g.nodes)
                if (flanks(s, x, y)) ++c;
        return c;
    };
    CHECK(flank_count(a) != flank_count(b));

    std::string dot = to_dot(a);
    CHECK(dot.find("graph opens {") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
    std::string dotf = to_dot(a, {.self_loops = false, .flank_edges = true});
    CHECK(dotf.find("digraph") != std::string::npos);
}
