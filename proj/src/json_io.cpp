// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/json_io.hpp"

#include <json.hpp>

namespace semitopo {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("bad JSON: ") + e.what());
    }
}

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw Error(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw Error(std::string(what) + " entries must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

Semitopology semitopology_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("points")) throw Error("semitopology JSON needs a 'points' array");
    Universe u(string_list(j["points"], "'points'"));
    std::vector<Mask> fam;
    if (j.contains("opens"))
        for (const auto& o : j["opens"]) fam.push_back(u.set_of(string_list(o, "'opens' entry")));
    std::string mode = j.value("mode", "generators");
    if (mode != "generators" && mode != "full")
        throw Error("mode must be 'generators' or 'full'");
    return Semitopology(std::move(u), fam,
                        mode == "full" ? Semitopology::Mode::full
                                       : Semitopology::Mode::generators);
}

std::string semitopology_to_json(const Semitopology& s) {
    ordered_json j;
    j["points"] = s.universe().labels();
    json opens = json::array();
    for (Mask o : s.opens()) opens.push_back(s.universe().labels_of(o));
    j["opens"] = opens;
    j["mode"] = "full";
    return j.dump(2) + "\n";
}

WitnessFunction witness_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("points")) throw Error("witness JSON needs a 'points' array");
    Universe u(string_list(j["points"], "'points'"));
    if (!j.contains("witness") || !j["witness"].is_object())
        throw Error("witness JSON needs a 'witness' object");
    std::vector<std::vector<Mask>> table(u.size());
    for (const auto& [label, sets] : j["witness"].items()) {
        int p = u.find(label);
        if (p < 0) throw Error("witness table mentions unknown point '" + label + "'");
        if (!sets.is_array()) throw Error("witness entry for '" + label + "' must be an array");
        for (const auto& ws : sets) {
            Mask m = u.set_of(string_list(ws, "witness-set"));
            if (m == 0) throw Error("point '" + label + "' has an empty witness-set");
            table[p].push_back(m);
        }
    }
    for (int p = 0; p < u.size(); ++p)
        if (table[p].empty())
            throw Error("point '" + u.label(p) + "' has no witness-sets");
    return WitnessFunction(std::move(u), std::move(table));
}

std::string witness_to_json(const WitnessFunction& w) {
    ordered_json j;
    j["points"] = w.universe().labels();
    ordered_json tab = ordered_json::object();
    for (int p = 0; p < w.size(); ++p) {
        json sets = json::array();
        for (Mask ws : w.witness(p)) sets.push_back(w.universe().labels_of(ws));
        tab[w.universe().label(p)] = sets;
    }
    j["witness"] = tab;
    return j.dump(2) + "\n";
}

Semiframe semiframe_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("elements")) throw Error("semiframe JSON needs an 'elements' array");
    std::vector<std::string> labels = string_list(j["elements"], "'elements'");
    auto index = [&](const json& e) {
        if (!e.is_string()) throw Error("semiframe pairs must name elements");
        for (int i = 0; i < static_cast<int>(labels.size()); ++i)
            if (labels[i] == e.get<std::string>()) return i;
        throw Error("unknown semiframe element '" + e.get<std::string>() + "'");
    };
    std::vector<std::pair<int, int>> leq, compat;
    if (j.contains("leq"))
        for (const auto& pr : j["leq"]) leq.emplace_back(index(pr.at(0)), index(pr.at(1)));
    if (j.contains("compat"))
        for (const auto& pr : j["compat"]) compat.emplace_back(index(pr.at(0)), index(pr.at(1)));
    return Semiframe(std::move(labels), std::move(leq), std::move(compat));
}

std::string semiframe_to_json(const Semiframe& f) {
    ordered_json j;
    json els = json::array();
    for (int x = 0; x < f.size(); ++x) els.push_back(f.label(x));
    j["elements"] = els;
    json leq = json::array(), compat = json::array();
    for (int x = 0; x < f.size(); ++x)
        for (int y = 0; y < f.size(); ++y) {
            if (x != y && f.leq(x, y)) leq.push_back({f.label(x), f.label(y)});
            if (x <= y && f.compat(x, y)) compat.push_back({f.label(x), f.label(y)});
        }
    j["leq"] = leq;
    j["compat"] = compat;
    return j.dump(2) + "\n";
}

Valuation3 valuation_from_json(const std::string& text, const Universe& u) {
    json j = parse(text);
    if (!j.is_object()) throw Error("valuation JSON must be an object of point: value");
    Valuation3 f;
    f.value.assign(u.size(), Three::B);
    std::vector<bool> seen(u.size(), false);
    for (const auto& [label, val] : j.items()) {
        int p = u.find(label);
        if (p < 0) throw Error("valuation mentions unknown point '" + label + "'");
        std::string v = val.get<std::string>();
        f.value[p] = v == "T" ? Three::T : v == "B" ? Three::B : Three::F;
        if (v != "T" && v != "B" && v != "F")
            throw Error("valuation value must be T, B, or F");
        seen[p] = true;
    }
    for (int p = 0; p < u.size(); ++p)
        if (!seen[p]) throw Error("valuation is missing point '" + u.label(p) + "'");
    return f;
}

std::string valuation_to_json(const Valuation3& f, const Universe& u) {
    ordered_json j = ordered_json::object();
    for (int p = 0; p < u.size(); ++p)
        j[u.label(p)] = f(p) == Three::T ? "T" : f(p) == Three::B ? "B" : "F";
    return j.dump(2) + "\n";
}

std::string classification_to_json(const Semitopology& s) {
    ordered_json j;
    ordered_json pts = ordered_json::object();
    for (int p = 0; p < s.size(); ++p) {
        Classification c = classify_point(s, p);
        NeighbourhoodInvariants inv = neighbourhood_invariants(s, p);
        ordered_json e;
        e["regular"] = c.regular;
        e["weakly_regular"] = c.weakly_regular;
        e["quasiregular"] = c.quasiregular;
        e["indirectly_regular"] = c.indirectly_regular;
        e["unconflicted"] = c.unconflicted;
        e["conflicted"] = c.conflicted;
        e["hypertransitive"] = c.hypertransitive;
        e["hyperdefinite"] = c.hyperdefinite;
        e["mcn"] = c.mcn;
        e["intertwined_set"] = s.universe().labels_of(inv.intertwined_set);
        e["community"] = s.universe().labels_of(inv.community);
        e["kernel"] = s.universe().labels_of(inv.kernel);
        pts[s.universe().label(p)] = e;
    }
    j["points"] = pts;
    TopenPartition part = topen_partition(s);
    json topens = json::array();
    for (Mask t : part.maximal_topens) topens.push_back(s.universe().labels_of(t));
    j["maximal_topens"] = topens;
    j["irregular_points"] = s.universe().labels_of(part.irregular_points);
    return j.dump(2) + "\n";
}

std::string soberify_to_json(const SoberifyResult& r, const Semitopology& original) {
    ordered_json j;
    j["space"] = ordered_json::parse(semitopology_to_json(r.space));
    ordered_json nbhd = ordered_json::object();
    for (int p = 0; p < original.size(); ++p)
        nbhd[original.universe().label(p)] = r.space.universe().label(r.nbhd[p]);
    j["nbhd"] = nbhd;
    return j.dump(2) + "\n";
}

}  // namespace semitopo
