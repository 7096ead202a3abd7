// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "semitopo/antisep.hpp"
#include "semitopo/witness.hpp"

namespace semitopo {

// CNF over variables 1..num_vars; literals are signed DIMACS-style ints.
struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

Cnf read_dimacs(std::istream& in);
Cnf read_dimacs_file(const std::string& path);
std::string write_dimacs(const Cnf& cnf);

// Plain DPLL with unit propagation; the independent oracle.
bool dpll_sat(const Cnf& cnf);

struct CnfReduction {
    WitnessFunction witness;
    int left;   // point index of "left"
    int right;  // point index of "right"
};
// The CNF -> witness-function construction: psi is 2-satisfiable iff left and
// right are NOT intertwined in the witness semitopology.  Rejects empty
// clauses (the construction requires nonempty witness-set collections).
CnfReduction cnf_to_witness(const Cnf& cnf);

// Exhaustive subset-lattice search for a disjoint pair of witness-opens
// around p and q; exact, no heuristics.  Bound guards the 2^n sweep.
bool witness_intertwined(const WitnessFunction& w, int p, int q,
                         int bound = kWitnessEnumBound);

enum class SatMethod { reduction, dpll };
bool sat_check(const Cnf& cnf, SatMethod method);

// --- HORNSAT over Bool -------------------------------------------------------

// Clauses of signed atom indices (positive = unnegated), at most one positive.
struct HornClause {
    std::vector<int> neg;  // atom indices appearing negated
    int pos = -1;          // head atom, or -1
};
struct HornTheory2 {
    int num_atoms = 0;
    std::vector<HornClause> clauses;
};
// Positive-unit propagation to a fixpoint; remaining atoms false.  The
// returned assignment (true-set as a mask over atoms) satisfies the theory.
std::optional<Mask> hornsat2(const HornTheory2& t);

// --- HORNSAT over THREE ------------------------------------------------------

enum class Lit3Kind { Pos, Neg, BoxPos, BoxNeg };  // p, ~p, []p, []~p
struct Lit3 {
    Lit3Kind kind;
    int atom;
    bool operator==(const Lit3&) const = default;
};
struct Horn3Theory {
    int num_atoms = 0;
    std::vector<std::vector<Lit3>> clauses;
};

// A clause is satisfied when some literal is designated under the valuation.
bool horn3_clause_satisfied(const std::vector<Lit3>& clause, const Valuation3& f);
bool horn3_satisfied(const Horn3Theory& t, const Valuation3& f);
// At most one positive (boxed or unboxed) literal per clause.
bool is_horn3(const Horn3Theory& t);

// Priority-ordered unit rules (boxed units first), canonical tie order; on
// success the returned valuation designates every clause.
std::optional<Valuation3> hornsat3(const Horn3Theory& t);

// One clause per line; literals `p`, `~p`, `[]p`, `[]~p` space-separated.
// Returns the theory plus the atom name table.
std::pair<Horn3Theory, std::vector<std::string>> parse_horn3(const std::string& text);

}  // namespace semitopo
