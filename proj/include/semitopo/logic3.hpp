// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semitopo/antisep.hpp"
#include "semitopo/witness.hpp"

namespace semitopo {

// --- truth tables over THREE (F < B < T) -----------------------------------

Three tneg(Three a);
Three tand(Three a, Three b);   // lattice meet
Three tor(Three a, Three b);    // lattice join
Three tnotor(Three a, Three b); // material implication: (not a) or b
Three tlatticeiff(Three a, Three b);
Three timp(Three a, Three b);   // the implication validating modus ponens
Three tiff(Three a, Three b);
Three box_t(Three a);           // identifies T
Three box_tb(Three a);          // identifies T or B
Three box_b(Three a);           // identifies B

// --- predicate syntax -------------------------------------------------------

enum class UnOp { Neg, BoxT, BoxTB, BoxB };
enum class BinOp { And, Or, MaterialImp, MaterialIff, Imp, Iff };

struct Pred;
using PredPtr = std::shared_ptr<const Pred>;

struct Pred {
    enum class Kind { Const, Atom, Var, Unary, Binary, K, E, Forall, Exists };
    Kind kind;
    Three value = Three::F;          // Const
    int atom = -1;                   // Atom: point index
    std::string var;                 // Var / quantifier binder
    UnOp un{};                       // Unary
    BinOp bin{};                     // Binary
    PredPtr left, right;             // children (left for unary/modal/quantified)
    bool witness_scoped = false;     // K/E quantify over continuous valuations only
};

PredPtr p_const(Three v);
PredPtr p_atom(int point);
PredPtr p_var(std::string name);
PredPtr p_un(UnOp op, PredPtr a);
PredPtr p_bin(BinOp op, PredPtr a, PredPtr b);
PredPtr p_k(PredPtr a, bool witness_scoped = false);
PredPtr p_e(PredPtr a, bool witness_scoped = false);
PredPtr p_forall(std::string var, PredPtr a);
PredPtr p_exists(std::string var, PredPtr a);

bool is_closed(const PredPtr& p);
PredPtr substitute(const PredPtr& p, const std::string& var, int point);
std::string to_string(const PredPtr& p, const Universe& u);

// --- evaluation --------------------------------------------------------------

inline constexpr int kValuationEnumBound = 12;  // cap for 3^n sweeps

struct EvalContext {
    int n_points = 0;
    // Valuations that witness-scoped K/E range over; plain K/E range over all
    // 3^n valuations of the points.
    const std::vector<Valuation3>* continuous_valuations = nullptr;
    int enum_bound = kValuationEnumBound;
};

EvalContext make_context(int n_points);
// Precomputes the continuous valuations of s for the witness-scoped modalities.
struct WitnessContext {
    EvalContext ctx;
    std::vector<Valuation3> continuous;
};
WitnessContext make_witness_context(const Semitopology& s);

Three eval(const PredPtr& phi, const Valuation3& f, const EvalContext& ctx);

bool valid(const PredPtr& phi, const Valuation3& f, const EvalContext& ctx);
// Every continuous valuation of s designates phi.
bool valid_continuous(const Semitopology& s, const PredPtr& phi);
// Every extremal valuation of s designates phi.
bool valid_extremal(const Semitopology& s, const PredPtr& phi);

// Enumerates all 3^n valuations in lexicographic order.
std::vector<Valuation3> all_valuations(int n);

// --- witness-derived theories -----------------------------------------------

// Ax_W: for each point, (AND over witness-sets of (OR of members)) -> p, plus
// the ¬-twin.  A valuation designates Ax_W iff it is continuous on the witness
// semitopology.  With extremal=true the cover axioms are added:
// p -> AND over covers Q of (OR over q in Q of boxT q), plus the ¬-twin; a
// valuation designates the extended theory iff it is extremal.
PredPtr theory_ax(const WitnessFunction& w, bool extremal = false);

// --- logical characterisations ------------------------------------------------

PredPtr intertwined_w(int p, int q);
PredPtr top_indis_w(int p, int q);
PredPtr quasi_regular_w(const Semitopology& s, int p);
PredPtr weakly_regular_w(const Semitopology& s, int p);
PredPtr unconflicted_w(const Semitopology& s, int p);
PredPtr regular_w(const Semitopology& s, int p);
PredPtr regular_prime_w(const Semitopology& s, int p);

// --- text syntax ---------------------------------------------------------------

// Grammar: atoms 'label, constants T B F, ~ & |, => (material), <=> (material
// equivalence), -> , <->, []T []TB []B, K{...} E{...}, forall x. / exists x.
// Precedence: unary > & > | > implications; implications right-associative.
PredPtr parse_pred(const std::string& text, const Universe& u);

}  // namespace semitopo
