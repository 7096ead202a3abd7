// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/catalog.hpp"

namespace semitopo {

namespace {

Semitopology from_gens(std::vector<std::string> labels,
                       const std::vector<std::vector<std::string>>& gens) {
    Universe u(std::move(labels));
    std::vector<Mask> gm;
    gm.reserve(gens.size());
    for (const auto& g : gens) gm.push_back(u.set_of(g));
    return Semitopology(std::move(u), gm, Semitopology::Mode::generators);
}

int require_n(const std::string& name, int n, int lo) {
    if (n < lo) throw Error("catalog '" + name + "' needs n >= " + std::to_string(lo));
    if (n > kMaxPoints)
        throw Error("catalog '" + name + "' n exceeds the point cap of " +
                    std::to_string(kMaxPoints));
    return n;
}

}  // namespace

Semitopology catalog(const std::string& name, int n) {
    using M = Semitopology::Mode;
    if (name == "discrete") {
        require_n(name, n, 0);
        Universe u = Universe::indexed(n);
        std::vector<Mask> fam;
        for (Mask m = 0; m <= u.all(); ++m) {
            fam.push_back(m);
            if (u.all() == 0) break;
        }
        return Semitopology(std::move(u), fam, M::full);
    }
    if (name == "trivial") {
        require_n(name, n, 0);
        Universe u = Universe::indexed(n);
        return Semitopology(std::move(u), {}, M::generators);
    }
    if (name == "sierpinski")
        return from_gens({"0", "1"}, {{"1"}});
    if (name == "three") {
        Universe u({"T", "B", "F"});
        std::vector<Mask> gens = {u.set_of({"T"}), u.set_of({"F"})};
        return Semitopology(std::move(u), gens, M::generators);
    }
    if (name == "supermajority") {
        require_n(name, n, 1);
        Universe u = Universe::indexed(n);
        std::vector<Mask> fam = {0, u.all()};
        for (Mask m = 0; m <= u.all(); ++m)
            if (3 * popcount(m) > 2 * n) fam.push_back(m);
        return Semitopology(std::move(u), fam, M::full);
    }
    if (name == "all-but-one") {
        require_n(name, n, 1);
        Universe u = Universe::indexed(n);
        std::vector<Mask> gens;
        for (int p = 0; p < n; ++p) gens.push_back(u.all() & ~bit(p));
        return Semitopology(std::move(u), gens, M::generators);
    }
    if (name == "more-than-one") {
        require_n(name, n, 2);
        Universe u = Universe::indexed(n);
        std::vector<Mask> fam = {0, u.all()};
        for (Mask m = 0; m <= u.all(); ++m)
            if (popcount(m) >= 2) fam.push_back(m);
        return Semitopology(std::move(u), fam, M::full);
    }
    if (name == "fig-012-tl")
        return from_gens({"0", "1", "2"}, {{"0"}, {"2"}});
    if (name == "fig-012-tr")
        return from_gens({"0", "1", "2"}, {{"0"}, {"0", "1"}, {"2"}, {"1", "2"}, {"0", "2"}});
    if (name == "fig-012-bl")
        return from_gens({"0", "1", "2", "3", "4"}, {{"0", "1"}, {"1"}, {"3"}, {"3", "4"}});
    if (name == "fig-012-br" || name == "fig-nitpick")
        return from_gens({"0", "1", "2", "*"},
                         {{"0"}, {"1"}, {"2"}, {"0", "1", "*"}, {"1", "2", "*"}});
    if (name == "fig-square")
        return from_gens({"0", "1", "2", "3"},
                         {{"3", "0"}, {"0", "1"}, {"1", "2"}, {"2", "3"}});
    if (name == "fig-irregular-a")
        return from_gens({"0", "1", "2", "3", "4"},
                         {{"1", "2"}, {"0", "1", "3"}, {"0", "2", "4"}, {"3"}, {"4"}});
    if (name == "fig-irregular-b")
        return from_gens({"0", "1", "2", "3", "4"},
                         {{"1"}, {"2"}, {"3"}, {"4"}, {"0", "1", "2", "3"}, {"0", "1", "2", "4"}});
    if (name == "fig-hypertwined12")
        return from_gens({"0", "1", "2", "3"}, {{"0"}, {"3"}, {"0", "1", "2"}, {"1", "2", "3"}});
    if (name == "fig-triangle")
        return from_gens({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}});
    if (name == "fig-wd-not-enough")
        return from_gens({"0", "1", "2", "3"}, {{"0"}, {"0", "1"}, {"0", "1", "2"}, {"2", "3"}});
    if (name == "fig-strong-compat")
        return from_gens({"-2", "-1", "0", "1", "2"},
                         {{"-2", "-1"}, {"-1", "0"}, {"0", "1"}, {"1", "2"}});
    if (name == "fig-ovals-a")
        return from_gens({"0", "1", "2"}, {{"0", "1"}, {"0", "2"}, {"1", "2"}, {"2"}});
    if (name == "fig-ovals-b")
        return from_gens({"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}});
    if (name == "fig-two-min")
        return from_gens({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
    throw Error("unknown catalog name '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"discrete",     "trivial",          "sierpinski",      "three",
            "supermajority", "all-but-one",     "more-than-one",   "fig-012-tl",
            "fig-012-tr",    "fig-012-bl",      "fig-012-br",      "fig-square",
            "fig-irregular-a", "fig-irregular-b", "fig-nitpick",   "fig-hypertwined12",
            "fig-triangle",  "fig-wd-not-enough", "fig-strong-compat", "fig-ovals-a",
            "fig-ovals-b",   "fig-two-min"};
}

}  // namespace semitopo
