// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/solvers.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace semitopo {

Cnf read_dimacs(std::istream& in) {
    Cnf cnf;
    int expected_clauses = -1;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            if (!(ls >> p >> fmt >> cnf.num_vars >> expected_clauses) || fmt != "cnf")
                throw Error("malformed DIMACS header: " + line);
            header = true;
            continue;
        }
        if (!header) throw Error("DIMACS clause before 'p cnf' header");
        int lit;
        std::vector<int> clause;
        bool terminated = false;
        while (ls >> lit) {
            if (lit == 0) {
                cnf.clauses.push_back(clause);
                clause.clear();
                terminated = true;
            } else {
                terminated = false;
                int v = std::abs(lit);
                if (v > cnf.num_vars)
                    throw Error("DIMACS literal " + std::to_string(lit) +
                                " out of range for " + std::to_string(cnf.num_vars) + " vars");
                clause.push_back(lit);
            }
        }
        if (!terminated && !clause.empty()) throw Error("DIMACS clause missing terminating 0");
    }
    if (!header) throw Error("missing DIMACS header");
    if (expected_clauses >= 0 && static_cast<int>(cnf.clauses.size()) != expected_clauses)
        throw Error("DIMACS header declares " + std::to_string(expected_clauses) +
                    " clauses but " + std::to_string(cnf.clauses.size()) + " were given");
    return cnf;
}

Cnf read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_dimacs(in);
}

std::string write_dimacs(const Cnf& cnf) {
    std::ostringstream os;
    os << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
    for (const auto& c : cnf.clauses) {
        for (int lit : c) os << lit << ' ';
        os << "0\n";
    }
    return os.str();
}

namespace {

// assignment: 0 unknown, 1 true, -1 false
bool dpll(const Cnf& cnf, std::vector<int>& assign) {
    // unit propagation
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& c : cnf.clauses) {
            int unassigned = 0, last = 0;
            bool satisfied = false;
            for (int lit : c) {
                int v = assign[std::abs(lit)];
                if (v == 0) {
                    ++unassigned;
                    last = lit;
                } else if ((lit > 0) == (v > 0)) {
                    satisfied = true;
                    break;
                }
            }
            if (satisfied) continue;
            if (unassigned == 0) return false;  // conflict
            if (unassigned == 1) {
                assign[std::abs(last)] = last > 0 ? 1 : -1;
                changed = true;
            }
        }
    }
    int branch = 0;
    for (int v = 1; v <= cnf.num_vars; ++v)
        if (assign[v] == 0) {
            branch = v;
            break;
        }
    if (branch == 0) {
        // all assigned; verify
        for (const auto& c : cnf.clauses) {
            bool satisfied = false;
            for (int lit : c)
                if ((lit > 0) == (assign[std::abs(lit)] > 0)) {
                    satisfied = true;
                    break;
                }
            if (!satisfied) return false;
        }
        return true;
    }
    for (int sign : {1, -1}) {
        std::vector<int> saved = assign;
        assign[branch] = sign;
        if (dpll(cnf, assign)) return true;
        assign = saved;
    }
    return false;
}

}  // namespace

bool dpll_sat(const Cnf& cnf) {
    for (const auto& c : cnf.clauses)
        if (c.empty()) return false;
    std::vector<int> assign(cnf.num_vars + 1, 0);
    return dpll(cnf, assign);
}

CnfReduction cnf_to_witness(const Cnf& cnf) {
    for (const auto& c : cnf.clauses)
        if (c.empty())
            throw Error("cnf_to_witness: the construction requires nonempty clauses");
    const int nq = cnf.num_vars;
    const int ni = static_cast<int>(cnf.clauses.size());
    std::vector<std::string> labels;
    labels.push_back("left");
    labels.push_back("right");
    for (int i = 1; i <= ni; ++i) labels.push_back("right_i" + std::to_string(i));
    // per variable: q+, q-, left_q, right_q
    std::vector<int> qpos(nq + 1), qneg(nq + 1), leftq(nq + 1), rightq(nq + 1);
    for (int q = 1; q <= nq; ++q) {
        qpos[q] = static_cast<int>(labels.size());
        labels.push_back("q" + std::to_string(q) + "+");
        qneg[q] = static_cast<int>(labels.size());
        labels.push_back("q" + std::to_string(q) + "-");
        leftq[q] = static_cast<int>(labels.size());
        labels.push_back("left_q" + std::to_string(q));
        rightq[q] = static_cast<int>(labels.size());
        labels.push_back("right_q" + std::to_string(q));
    }
    Universe u(labels);
    std::vector<std::vector<Mask>> table(u.size());
    auto m = [&](int lit) { return lit > 0 ? qpos[lit] : qneg[-lit]; };
    // q+ / q- witness themselves
    for (int q = 1; q <= nq; ++q) {
        table[qpos[q]] = {bit(qpos[q])};
        table[qneg[q]] = {bit(qneg[q])};
        table[leftq[q]] = {bit(qpos[q]), bit(qneg[q])};
        table[rightq[q]] = {bit(qpos[q]), bit(qneg[q])};
    }
    Mask left_ws = 0;
    for (int q = 1; q <= nq; ++q) left_ws |= bit(leftq[q]);
    if (left_ws == 0) left_ws = bit(0);  // no variables: left witnesses itself
    table[0] = {left_ws};
    Mask right_ws = 0;
    for (int q = 1; q <= nq; ++q) right_ws |= bit(rightq[q]);
    for (int i = 0; i < ni; ++i) right_ws |= bit(2 + i);
    if (right_ws == 0) right_ws = bit(1);
    table[1] = {right_ws};
    for (int i = 0; i < ni; ++i) {
        std::vector<Mask> ws;
        for (int lit : cnf.clauses[i]) ws.push_back(bit(m(lit)));
        table[2 + i] = ws;
    }
    return CnfReduction{WitnessFunction(std::move(u), std::move(table)), 0, 1};
}

bool witness_intertwined(const WitnessFunction& w, int p, int q, int bound) {
    const int n = w.size();
    if (n > bound)
        throw Error("witness_intertwined: " + std::to_string(n) +
                    " points exceed the enumeration bound of " + std::to_string(bound));
    const Mask all = w.all();
    // g[y] = some open containing q lies inside y; computed by a subset-lattice
    // (sum over subsets) sweep so the search stays exhaustive but single-pass.
    std::vector<char> g(static_cast<size_t>(all) + 1, 0);
    for (Mask o = 0;; ++o) {
        if (contains(o, q) && w.is_witness_open(o)) g[o] = 1;
        if (o == all) break;
    }
    for (int i = 0; i < n; ++i)
        for (Mask y = 0;; ++y) {
            if (contains(y, i) && g[y & ~bit(i)]) g[y] = 1;
            if (y == all) break;
        }
    for (Mask o = 0;; ++o) {
        if (contains(o, p) && w.is_witness_open(o) && g[all & ~o]) return false;
        if (o == all) break;
    }
    return true;
}

bool sat_check(const Cnf& cnf, SatMethod method) {
    if (method == SatMethod::dpll) return dpll_sat(cnf);
    for (const auto& c : cnf.clauses)
        if (c.empty()) return false;  // the construction requires nonempty clauses
    CnfReduction red = cnf_to_witness(cnf);
    return !witness_intertwined(red.witness, red.left, red.right);
}

std::optional<Mask> hornsat2(const HornTheory2& t) {
    for (const auto& c : t.clauses)
        if (c.pos < -1 || c.pos >= t.num_atoms) throw Error("hornsat2: head out of range");
    Mask true_set = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& c : t.clauses) {
            if (c.pos >= 0 && contains(true_set, c.pos)) continue;
            bool body = true;
            for (int a : c.neg)
                if (!contains(true_set, a)) {
                    body = false;
                    break;
                }
            if (!body) continue;
            if (c.pos < 0) return std::nullopt;  // empty head: conflict
            true_set |= bit(c.pos);
            changed = true;
        }
    }
    return true_set;
}

bool horn3_clause_satisfied(const std::vector<Lit3>& clause, const Valuation3& f) {
    Three acc = Three::F;
    for (const Lit3& l : clause) {
        Three v = f(l.atom);
        Three lv;
        switch (l.kind) {
            case Lit3Kind::Pos: lv = v; break;
            case Lit3Kind::Neg:
                lv = v == Three::T ? Three::F : v == Three::F ? Three::T : Three::B;
                break;
            case Lit3Kind::BoxPos: lv = v == Three::T ? Three::T : Three::F; break;
            case Lit3Kind::BoxNeg: lv = v == Three::F ? Three::T : Three::F; break;
        }
        acc = std::max(acc, lv);
    }
    return designated(acc);
}

bool horn3_satisfied(const Horn3Theory& t, const Valuation3& f) {
    for (const auto& c : t.clauses)
        if (!horn3_clause_satisfied(c, f)) return false;
    return true;
}

bool is_horn3(const Horn3Theory& t) {
    for (const auto& c : t.clauses) {
        int positives = 0;
        for (const Lit3& l : c)
            if (l.kind == Lit3Kind::Pos || l.kind == Lit3Kind::BoxPos) ++positives;
        if (positives > 1) return false;
    }
    return true;
}

namespace {

bool clause_has(const std::vector<Lit3>& c, Lit3 lit) {
    return std::find(c.begin(), c.end(), lit) != c.end();
}

bool is_unit(const std::vector<Lit3>& c, Lit3Kind kind, int* atom) {
    if (c.size() != 1 || c[0].kind != kind) return false;
    *atom = c[0].atom;
    return true;
}

}  // namespace

std::optional<Valuation3> hornsat3(const Horn3Theory& t) {
    if (!is_horn3(t)) throw Error("hornsat3: theory is not in 3Horn form");
    std::vector<std::vector<Lit3>> cs = t.clauses;

    // Applying the rule for a unit of the given kind; returns whether the
    // theory changed.  Boxed units also kill the unboxed negative literals.
    auto apply_unit = [&cs](Lit3Kind kind, int p) {
        bool changed = false;
        std::vector<std::vector<Lit3>> next;
        next.reserve(cs.size());
        for (auto& c : cs) {
            int a;
            if (is_unit(c, kind, &a) && a == p) {
                next.push_back(c);  // the unit itself stays
                continue;
            }
            bool satisfied = clause_has(c, {Lit3Kind::Pos, p});
            if (kind == Lit3Kind::BoxPos)
                satisfied = satisfied || clause_has(c, {Lit3Kind::BoxPos, p});
            if (satisfied) {
                changed = true;
                continue;
            }
            std::vector<Lit3> kept;
            for (const Lit3& l : c) {
                bool dead = l.atom == p && (l.kind == Lit3Kind::BoxNeg ||
                                            (kind == Lit3Kind::BoxPos && l.kind == Lit3Kind::Neg));
                if (!dead) kept.push_back(l);
            }
            if (kept.size() != c.size()) changed = true;
            next.push_back(std::move(kept));
        }
        if (changed) cs = std::move(next);
        return changed;
    };

    // Rules in decreasing priority, repeated as long as they act; the tie
    // order within a priority tier is lowest atom first.
    for (bool acted = true; acted;) {
        acted = false;
        for (Lit3Kind kind : {Lit3Kind::BoxPos, Lit3Kind::Pos}) {
            std::vector<int> units;
            for (const auto& c : cs) {
                int a;
                if (is_unit(c, kind, &a)) units.push_back(a);
            }
            std::sort(units.begin(), units.end());
            units.erase(std::unique(units.begin(), units.end()), units.end());
            for (int p : units)
                if (apply_unit(kind, p)) {
                    acted = true;
                    break;
                }
            if (acted) break;  // re-check the higher-priority rule first
        }
    }
    for (const auto& c : cs)
        if (c.empty()) return std::nullopt;
    Valuation3 f;
    f.value.assign(t.num_atoms, Three::F);
    for (const auto& c : cs) {
        int a;
        if (is_unit(c, Lit3Kind::BoxPos, &a)) f.value[a] = Three::T;
    }
    for (const auto& c : cs) {
        int a;
        if (is_unit(c, Lit3Kind::Pos, &a) && f.value[a] == Three::F) f.value[a] = Three::B;
    }
    return f;
}

std::pair<Horn3Theory, std::vector<std::string>> parse_horn3(const std::string& text) {
    Horn3Theory t;
    std::vector<std::string> names;
    auto atom_index = [&](const std::string& name) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        names.push_back(name);
        return static_cast<int>(names.size() - 1);
    };
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        std::vector<Lit3> clause;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            Lit3Kind kind = Lit3Kind::Pos;
            size_t i = 0;
            bool boxed = false;
            if (tok.compare(0, 2, "[]") == 0) {
                boxed = true;
                i = 2;
            }
            bool negated = i < tok.size() && tok[i] == '~';
            if (negated) ++i;
            kind = boxed ? (negated ? Lit3Kind::BoxNeg : Lit3Kind::BoxPos)
                         : (negated ? Lit3Kind::Neg : Lit3Kind::Pos);
            if (i >= tok.size()) throw Error("bad Horn3 literal '" + tok + "'");
            clause.push_back({kind, atom_index(tok.substr(i))});
        }
        t.clauses.push_back(std::move(clause));
    }
    t.num_atoms = static_cast<int>(names.size());
    if (!is_horn3(t)) throw Error("input is not a 3Horn theory (two positive literals in a clause)");
    return {std::move(t), std::move(names)};
}

}  // namespace semitopo
