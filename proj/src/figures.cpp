// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/figures.hpp"

#include <algorithm>
#include <sstream>

#include "semitopo/antisep.hpp"
#include "semitopo/catalog.hpp"
#include "semitopo/logic3.hpp"
#include "semitopo/semiframe.hpp"
#include "semitopo/witness.hpp"

namespace semitopo {

namespace {

struct Suite {
    std::vector<FigureCheck> out;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({name, ok, ok ? "" : detail});
    }

    template <typename T>
    void eq(const std::string& name, const T& got, const T& want) {
        std::ostringstream os;
        if (!(got == want)) os << "mismatch";
        check(name, got == want, os.str());
    }
};

std::vector<Mask> sorted(std::vector<Mask> v) {
    std::sort(v.begin(), v.end(), canonical_less);
    return v;
}

}  // namespace

std::vector<FigureCheck> run_figure_checks() {
    Suite s;

    {  // fig-012-tl: the paper's flagship three-point example
        Semitopology t = catalog("fig-012-tl");
        const Universe& u = t.universe();
        auto set = [&](const char* l) { return u.parse_set(l); };
        s.eq("fig-012-tl opens", std::vector<Mask>(t.opens().begin(), t.opens().end()),
             sorted({0u, set("0"), set("2"), set("0,2"), set("0,1,2")}));
        s.eq("fig-012-tl intertwined(1)", intertwined_set(t, u.index("1")), set("0,1,2"));
        s.eq("fig-012-tl intertwined(0)", intertwined_set(t, u.index("0")), set("0,1"));
        s.eq("fig-012-tl intertwined(2)", intertwined_set(t, u.index("2")), set("1,2"));
        s.eq("fig-012-tl community(1)", community(t, u.index("1")), set("0,1,2"));
        s.eq("fig-012-tl kernel(1)", kernel(t, u.index("1")), set("0,2"));
        s.check("fig-012-tl not 0 ⋔ 2", !intertwined(t, u.index("0"), u.index("2")));
        Classification c0 = classify_point(t, u.index("0"));
        Classification c1 = classify_point(t, u.index("1"));
        s.check("fig-012-tl 0 regular", c0.regular);
        s.check("fig-012-tl 1 weakly regular", c1.weakly_regular);
        s.check("fig-012-tl 1 conflicted", c1.conflicted);
        s.check("fig-012-tl 1 not regular", !c1.regular);
    }
    {  // fig-012-tr
        Semitopology t = catalog("fig-012-tr");
        const Universe& u = t.universe();
        Classification c1 = classify_point(t, u.index("1"));
        s.check("fig-012-tr 1 hypertransitive", c1.hypertransitive);
        s.check("fig-012-tr 1 not quasiregular", !c1.quasiregular);
        s.eq("fig-012-tr intertwined(1)", intertwined_set(t, u.index("1")), bit(u.index("1")));
    }
    {  // fig-012-bl: two maximal topens and a conflicted middle point
        Semitopology t = catalog("fig-012-bl");
        const Universe& u = t.universe();
        TopenPartition part = topen_partition(t);
        s.eq("fig-012-bl topens", part.maximal_topens,
             sorted({u.parse_set("0,1"), u.parse_set("3,4")}));
        s.eq("fig-012-bl irregular", part.irregular_points, bit(u.index("2")));
    }
    {  // fig-012-br: * is quasiregular but not weakly regular
        Semitopology t = catalog("fig-012-br");
        const Universe& u = t.universe();
        Classification cs = classify_point(t, u.index("*"));
        s.check("fig-012-br * quasiregular", cs.quasiregular);
        s.check("fig-012-br * not weakly regular", !cs.weakly_regular);
        s.eq("fig-012-br community(*)", community(t, u.index("*")), bit(u.index("1")));
    }
    {  // fig-two-min: a point with two distinct minimal open neighbourhoods
        Semitopology t = catalog("fig-two-min");
        const Universe& u = t.universe();
        s.eq("fig-two-min covers(1)", sorted(t.covers(u.index("1"))),
             sorted({u.parse_set("0,1"), u.parse_set("1,2")}));
    }
    {  // fig-square: unconflicted and completely irregular
        Semitopology t = catalog("fig-square");
        const Universe& u = t.universe();
        for (int p = 0; p < t.size(); ++p) {
            s.eq("fig-square intertwined(" + u.label(p) + ") is itself",
                 intertwined_set(t, p), bit(p));
            s.eq("fig-square community(" + u.label(p) + ") empty", community(t, p), Mask{0});
            s.check("fig-square " + u.label(p) + " unconflicted",
                    classify_point(t, p).unconflicted);
        }
        TopenPartition part = topen_partition(t);
        s.check("fig-square has no topens", part.maximal_topens.empty());
        s.eq("fig-square all points irregular", part.irregular_points, t.all());
        auto mcn = min_closed_neighbourhoods(t);
        s.eq("fig-square minimal closed neighbourhoods", mcn,
             sorted({u.parse_set("3,0"), u.parse_set("0,1"), u.parse_set("1,2"),
                     u.parse_set("2,3")}));
        auto mcn0 = min_closed_neighbourhoods(t, u.index("0"));
        s.eq("fig-square point 0 has two minimal closed neighbourhoods", mcn0.size(), size_t{2});
        s.eq("fig-square extremal count", extremal_valuations(t).size(), size_t{6});
    }
    {  // fig-nitpick: two distinct minimal closed neighbourhoods of *
        Semitopology t = catalog("fig-nitpick");
        const Universe& u = t.universe();
        auto mcn = min_closed_neighbourhoods(t, u.index("*"));
        s.eq("fig-nitpick MCNs of *", mcn,
             sorted({u.parse_set("0,1,*"), u.parse_set("1,2,*")}));
        s.eq("fig-nitpick closure(*)", t.closure(bit(u.index("*"))), bit(u.index("*")));
        s.eq("fig-nitpick intertwined(*)", intertwined_set(t, u.index("*")),
             u.parse_set("1,*"));
    }
    {  // fig-hypertwined12
        Semitopology t = catalog("fig-hypertwined12");
        const Universe& u = t.universe();
        s.check("fig-hypertwined12 1 ⋔X 2", hypertwined(t, u.index("1"), u.index("2")));
        s.check("fig-hypertwined12 1 not quasiregular",
                !classify_point(t, u.index("1")).quasiregular);
        s.check("fig-hypertwined12 1 hyperdefinite", hyperdefinite(t, u.index("1")));
    }
    {  // Sierpinski closures
        Semitopology t = catalog("sierpinski");
        const Universe& u = t.universe();
        s.eq("sierpinski closure{0}", t.closure(bit(u.index("0"))), bit(u.index("0")));
        s.eq("sierpinski closure{1}", t.closure(bit(u.index("1"))), u.all());
        s.eq("sierpinski regular opens", t.regular_opens(), sorted({Mask{0}, t.all()}));
    }
    {  // THREE
        Semitopology t = catalog("three");
        const Universe& u = t.universe();
        s.eq("three opens", std::vector<Mask>(t.opens().begin(), t.opens().end()),
             sorted({0u, u.parse_set("T"), u.parse_set("F"), u.parse_set("T,F"), u.all()}));
        s.eq("three extremal count", extremal_valuations(t).size(), size_t{4});
        s.check("three T ⋔ B", intertwined(t, u.index("T"), u.index("B")));
        s.check("three not T ⋔c B", !consensus_equivalent(t, u.index("T"), u.index("B")));
    }
    {  // truth-table spot checks
        s.eq("B -> F is F", timp(Three::B, Three::F), Three::F);
        s.eq("B => F is B", tnotor(Three::B, Three::F), Three::B);
        s.eq("[]T B is F", box_t(Three::B), Three::F);
    }
    {  // fig-wd-not-enough: weakly dense but not strongly dense
        Semitopology t = catalog("fig-wd-not-enough");
        const Universe& u = t.universe();
        DenseResult d = dense_check(t, u.parse_set("0"), u.parse_set("0,1,2"));
        s.check("fig-wd-not-enough weakly dense", d.weakly);
        s.check("fig-wd-not-enough not strongly dense", !d.strongly);
    }
    {  // fig-triangle: regular, T0, not sober
        Semitopology t = catalog("fig-triangle");
        s.check("fig-triangle T0", is_t0(t));
        s.check("fig-triangle not sober", !is_sober(t));
        TopenPartition part = topen_partition(t);
        s.eq("fig-triangle is one topen", part.maximal_topens, std::vector<Mask>{t.all()});
    }
    {  // fig-strong-compat: a strongly compatible semifilter with no transitive element
        Semitopology t = catalog("fig-strong-compat");
        const Universe& u = t.universe();
        Semiframe f = fr(t);
        int a = f.find(u.to_string(u.parse_set("-1,0")));
        int b = f.find(u.to_string(u.parse_set("0,1")));
        s.check("fig-strong-compat elements found", a >= 0 && b >= 0);
        ElemSet fl = f.up_closure((ElemSet{1} << a) | (ElemSet{1} << b));
        DualRegularity dr = dual_regularity(f, fl);
        s.check("fig-strong-compat filter strongly compatible", dr.strongly_compatible);
        s.check("fig-strong-compat F inside F*", subset(fl, dr.compat_system));
        s.check("fig-strong-compat no transitive element in F",
                (fl & f.transitive_elements()) == 0);
    }
    {  // fig-irregular-a/b kernels
        Semitopology t = catalog("fig-irregular-a");
        const Universe& u = t.universe();
        s.eq("fig-irregular-a community(0)", community(t, u.index("0")), u.parse_set("1,2"));
        s.eq("fig-irregular-a kernel(0)", kernel(t, u.index("0")), u.parse_set("1,2"));
        s.check("fig-irregular-a 0 not regular", !classify_point(t, u.index("0")).regular);
        Semitopology t2 = catalog("fig-irregular-b");
        const Universe& u2 = t2.universe();
        s.eq("fig-irregular-b community(0)", community(t2, u2.index("0")), u2.parse_set("1,2"));
        // K_0 contains two distinct minimal closed neighbourhoods
        std::vector<Mask> inside_k0;
        for (Mask c : min_closed_neighbourhoods(t2))
            if (subset(c, intertwined_set(t2, u2.index("0")))) inside_k0.push_back(c);
        s.eq("fig-irregular-b two MCNs inside K_0", inside_k0,
             sorted({u2.parse_set("0,1"), u2.parse_set("0,2")}));
    }
    {  // supermajority(3)
        Semitopology t = catalog("supermajority", 3);
        s.eq("supermajority(3) opens", std::vector<Mask>(t.opens().begin(), t.opens().end()),
             sorted({Mask{0}, t.all()}));
    }
    {  // witness round trips on the flagship figures
        for (const char* name : {"fig-012-tl", "fig-012-bl", "fig-nitpick"}) {
            Semitopology t = catalog(name);
            WitnessFunction w = witness_from_semitopology(t);
            s.check(std::string(name) + " witness round trip", witness_opens(w) == t);
        }
        // fig-012-tl, the lim example: X={0} closes to {0,1}
        Semitopology t = catalog("fig-012-tl");
        WitnessFunction w = witness_from_semitopology(t);
        s.eq("fig-012-tl lim{0}", lim_closure(w, bit(t.universe().index("0"))),
             t.universe().parse_set("0,1"));
    }
    return s.out;
}

}  // namespace semitopo
