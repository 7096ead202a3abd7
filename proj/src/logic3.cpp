// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/logic3.hpp"

#include <algorithm>

namespace semitopo {

// F < B < T as a lattice; negation inverts the order.
Three tneg(Three a) {
    switch (a) {
        case Three::T: return Three::F;
        case Three::B: return Three::B;
        default: return Three::T;
    }
}
Three tand(Three a, Three b) { return static_cast<Three>(std::min(static_cast<int>(a), static_cast<int>(b))); }
Three tor(Three a, Three b) { return static_cast<Three>(std::max(static_cast<int>(a), static_cast<int>(b))); }
Three tnotor(Three a, Three b) { return tor(tneg(a), b); }
Three tlatticeiff(Three a, Three b) { return tand(tnotor(a, b), tnotor(b, a)); }
Three box_t(Three a) { return a == Three::T ? Three::T : Three::F; }
Three box_tb(Three a) { return a == Three::F ? Three::F : Three::T; }
Three box_b(Three a) { return a == Three::B ? Three::T : Three::F; }
Three timp(Three a, Three b) { return tnotor(box_tb(a), b); }
Three tiff(Three a, Three b) { return tand(timp(a, b), timp(b, a)); }

namespace {

PredPtr mk(Pred p) { return std::make_shared<const Pred>(std::move(p)); }

}  // namespace

PredPtr p_const(Three v) {
    Pred p;
    p.kind = Pred::Kind::Const;
    p.value = v;
    return mk(std::move(p));
}
PredPtr p_atom(int point) {
    Pred p;
    p.kind = Pred::Kind::Atom;
    p.atom = point;
    return mk(std::move(p));
}
PredPtr p_var(std::string name) {
    Pred p;
    p.kind = Pred::Kind::Var;
    p.var = std::move(name);
    return mk(std::move(p));
}
PredPtr p_un(UnOp op, PredPtr a) {
    Pred p;
    p.kind = Pred::Kind::Unary;
    p.un = op;
    p.left = std::move(a);
    return mk(std::move(p));
}
PredPtr p_bin(BinOp op, PredPtr a, PredPtr b) {
    Pred p;
    p.kind = Pred::Kind::Binary;
    p.bin = op;
    p.left = std::move(a);
    p.right = std::move(b);
    return mk(std::move(p));
}
PredPtr p_k(PredPtr a, bool witness_scoped) {
    Pred p;
    p.kind = Pred::Kind::K;
    p.left = std::move(a);
    p.witness_scoped = witness_scoped;
    return mk(std::move(p));
}
PredPtr p_e(PredPtr a, bool witness_scoped) {
    Pred p;
    p.kind = Pred::Kind::E;
    p.left = std::move(a);
    p.witness_scoped = witness_scoped;
    return mk(std::move(p));
}
PredPtr p_forall(std::string var, PredPtr a) {
    Pred p;
    p.kind = Pred::Kind::Forall;
    p.var = std::move(var);
    p.left = std::move(a);
    return mk(std::move(p));
}
PredPtr p_exists(std::string var, PredPtr a) {
    Pred p;
    p.kind = Pred::Kind::Exists;
    p.var = std::move(var);
    p.left = std::move(a);
    return mk(std::move(p));
}

namespace {

void free_vars(const PredPtr& p, std::vector<std::string>& bound, std::vector<std::string>& out) {
    switch (p->kind) {
        case Pred::Kind::Const:
        case Pred::Kind::Atom: return;
        case Pred::Kind::Var:
            if (std::find(bound.begin(), bound.end(), p->var) == bound.end() &&
                std::find(out.begin(), out.end(), p->var) == out.end())
                out.push_back(p->var);
            return;
        case Pred::Kind::Unary:
        case Pred::Kind::K:
        case Pred::Kind::E: free_vars(p->left, bound, out); return;
        case Pred::Kind::Binary:
            free_vars(p->left, bound, out);
            free_vars(p->right, bound, out);
            return;
        case Pred::Kind::Forall:
        case Pred::Kind::Exists: {
            bound.push_back(p->var);
            free_vars(p->left, bound, out);
            bound.pop_back();
            return;
        }
    }
}

}  // namespace

bool is_closed(const PredPtr& p) {
    std::vector<std::string> bound, out;
    free_vars(p, bound, out);
    return out.empty();
}

PredPtr substitute(const PredPtr& p, const std::string& var, int point) {
    switch (p->kind) {
        case Pred::Kind::Const:
        case Pred::Kind::Atom: return p;
        case Pred::Kind::Var: return p->var == var ? p_atom(point) : p;
        case Pred::Kind::Unary: return p_un(p->un, substitute(p->left, var, point));
        case Pred::Kind::Binary:
            return p_bin(p->bin, substitute(p->left, var, point),
                         substitute(p->right, var, point));
        case Pred::Kind::K: return p_k(substitute(p->left, var, point), p->witness_scoped);
        case Pred::Kind::E: return p_e(substitute(p->left, var, point), p->witness_scoped);
        case Pred::Kind::Forall:
            if (p->var == var) return p;  // shadowed
            return p_forall(p->var, substitute(p->left, var, point));
        case Pred::Kind::Exists:
            if (p->var == var) return p;
            return p_exists(p->var, substitute(p->left, var, point));
    }
    throw Error("substitute: bad node");
}

std::string to_string(const PredPtr& p, const Universe& u) {
    switch (p->kind) {
        case Pred::Kind::Const:
            return p->value == Three::T ? "T" : p->value == Three::B ? "B" : "F";
        case Pred::Kind::Atom: return "'" + u.label(p->atom);
        case Pred::Kind::Var: return p->var;
        case Pred::Kind::Unary: {
            const char* op = p->un == UnOp::Neg      ? "~"
                             : p->un == UnOp::BoxT   ? "[]T "
                             : p->un == UnOp::BoxTB  ? "[]TB "
                                                     : "[]B ";
            return std::string(op) + to_string(p->left, u);
        }
        case Pred::Kind::Binary: {
            const char* op = nullptr;
            switch (p->bin) {
                case BinOp::And: op = " & "; break;
                case BinOp::Or: op = " | "; break;
                case BinOp::MaterialImp: op = " => "; break;
                case BinOp::MaterialIff: op = " <=> "; break;
                case BinOp::Imp: op = " -> "; break;
                case BinOp::Iff: op = " <-> "; break;
            }
            return "(" + to_string(p->left, u) + op + to_string(p->right, u) + ")";
        }
        case Pred::Kind::K: return "K{" + to_string(p->left, u) + "}";
        case Pred::Kind::E: return "E{" + to_string(p->left, u) + "}";
        case Pred::Kind::Forall: return "(forall " + p->var + ". " + to_string(p->left, u) + ")";
        case Pred::Kind::Exists: return "(exists " + p->var + ". " + to_string(p->left, u) + ")";
    }
    throw Error("to_string: bad node");
}

EvalContext make_context(int n_points) {
    EvalContext c;
    c.n_points = n_points;
    return c;
}

WitnessContext make_witness_context(const Semitopology& s) {
    WitnessContext wc;
    wc.ctx.n_points = s.size();
    for (const auto& f : all_valuations(s.size()))
        if (is_continuous(s, f)) wc.continuous.push_back(f);
    wc.ctx.continuous_valuations = &wc.continuous;
    return wc;
}

std::vector<Valuation3> all_valuations(int n) {
    if (n > kValuationEnumBound)
        throw Error("valuation enumeration over " + std::to_string(n) +
                    " points exceeds the bound of " + std::to_string(kValuationEnumBound));
    std::vector<Valuation3> out;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    out.reserve(total);
    for (long long code = 0; code < total; ++code) {
        Valuation3 v;
        v.value.resize(n);
        long long c = code;
        for (int i = 0; i < n; ++i) {
            v.value[i] = static_cast<Three>(c % 3);
            c /= 3;
        }
        out.push_back(std::move(v));
    }
    return out;
}

Three eval(const PredPtr& phi, const Valuation3& f, const EvalContext& ctx) {
    switch (phi->kind) {
        case Pred::Kind::Const: return phi->value;
        case Pred::Kind::Atom: return f(phi->atom);
        case Pred::Kind::Var: throw Error("eval: free variable '" + phi->var + "'");
        case Pred::Kind::Unary: {
            Three a = eval(phi->left, f, ctx);
            switch (phi->un) {
                case UnOp::Neg: return tneg(a);
                case UnOp::BoxT: return box_t(a);
                case UnOp::BoxTB: return box_tb(a);
                case UnOp::BoxB: return box_b(a);
            }
            throw Error("eval: bad unary");
        }
        case Pred::Kind::Binary: {
            Three a = eval(phi->left, f, ctx);
            Three b = eval(phi->right, f, ctx);
            switch (phi->bin) {
                case BinOp::And: return tand(a, b);
                case BinOp::Or: return tor(a, b);
                case BinOp::MaterialImp: return tnotor(a, b);
                case BinOp::MaterialIff: return tlatticeiff(a, b);
                case BinOp::Imp: return timp(a, b);
                case BinOp::Iff: return tiff(a, b);
            }
            throw Error("eval: bad binary");
        }
        case Pred::Kind::K:
        case Pred::Kind::E: {
            const bool is_k = phi->kind == Pred::Kind::K;
            Three acc = is_k ? Three::T : Three::F;
            if (phi->witness_scoped) {
                if (!ctx.continuous_valuations)
                    throw Error("eval: witness-scoped modality without a witness context");
                for (const auto& g : *ctx.continuous_valuations) {
                    Three v = eval(phi->left, g, ctx);
                    acc = is_k ? tand(acc, v) : tor(acc, v);
                }
            } else {
                for (const auto& g : all_valuations(ctx.n_points)) {
                    Three v = eval(phi->left, g, ctx);
                    acc = is_k ? tand(acc, v) : tor(acc, v);
                }
            }
            return acc;
        }
        case Pred::Kind::Forall:
        case Pred::Kind::Exists: {
            const bool is_all = phi->kind == Pred::Kind::Forall;
            Three acc = is_all ? Three::T : Three::F;
            for (int p = 0; p < ctx.n_points; ++p) {
                Three v = eval(substitute(phi->left, phi->var, p), f, ctx);
                acc = is_all ? tand(acc, v) : tor(acc, v);
            }
            return acc;
        }
    }
    throw Error("eval: bad node");
}

bool valid(const PredPtr& phi, const Valuation3& f, const EvalContext& ctx) {
    return designated(eval(phi, f, ctx));
}

bool valid_continuous(const Semitopology& s, const PredPtr& phi) {
    WitnessContext wc = make_witness_context(s);
    for (const auto& f : wc.continuous)
        if (!valid(phi, f, wc.ctx)) return false;
    return true;
}

bool valid_extremal(const Semitopology& s, const PredPtr& phi) {
    WitnessContext wc = make_witness_context(s);
    for (const auto& f : extremal_valuations(s))
        if (!valid(phi, f, wc.ctx)) return false;
    return true;
}

namespace {

PredPtr disj_of(Mask m, bool negate, bool boxed) {
    PredPtr acc;
    SEMITOPO_FOR_POINTS(q, m) {
        PredPtr lit = p_atom(q);
        if (negate) lit = p_un(UnOp::Neg, lit);
        if (boxed) lit = p_un(UnOp::BoxT, lit);
        acc = acc ? p_bin(BinOp::Or, acc, lit) : lit;
    }
    return acc;
}

PredPtr conj(PredPtr a, PredPtr b) {
    if (!a) return b;
    if (!b) return a;
    return p_bin(BinOp::And, std::move(a), std::move(b));
}

}  // namespace

PredPtr theory_ax(const WitnessFunction& w, bool extremal) {
    PredPtr acc;
    for (int p = 0; p < w.size(); ++p) {
        PredPtr body_pos, body_neg;
        for (Mask ws : w.witness(p)) {
            body_pos = conj(body_pos, disj_of(ws, false, false));
            body_neg = conj(body_neg, disj_of(ws, true, false));
        }
        acc = conj(acc, p_bin(BinOp::Imp, body_pos, p_atom(p)));
        acc = conj(acc, p_bin(BinOp::Imp, body_neg, p_un(UnOp::Neg, p_atom(p))));
    }
    if (extremal) {
        Semitopology s = witness_opens(w);
        for (int p = 0; p < w.size(); ++p) {
            PredPtr covers_pos, covers_neg;
            for (Mask q : s.covers(p)) {
                covers_pos = conj(covers_pos, disj_of(q, false, true));
                covers_neg = conj(covers_neg, disj_of(q, true, true));
            }
            acc = conj(acc, p_bin(BinOp::Imp, p_atom(p), covers_pos));
            acc = conj(acc, p_bin(BinOp::Imp, p_un(UnOp::Neg, p_atom(p)), covers_neg));
        }
    }
    if (!acc) acc = p_const(Three::T);  // empty universe
    return acc;
}

PredPtr intertwined_w(int p, int q) {
    return p_k(p_bin(BinOp::MaterialIff, p_atom(p), p_atom(q)), /*witness_scoped=*/true);
}

PredPtr top_indis_w(int p, int q) {
    return p_k(p_bin(BinOp::Iff, p_atom(p), p_atom(q)), /*witness_scoped=*/true);
}

namespace {

// forall x. x <-> (p intertwined_w x), used by several characterisations.
PredPtr all_points_match_Kp(int p) {
    PredPtr body = p_bin(BinOp::Iff, p_var("x"), p_k(p_bin(BinOp::MaterialIff, p_atom(p), p_var("x")), true));
    return p_forall("x", body);
}

}  // namespace

PredPtr quasi_regular_w(const Semitopology&, int p) {
    PredPtr some_t = p_exists("x", p_un(UnOp::BoxT, p_var("x")));
    return p_e(p_bin(BinOp::And, some_t, all_points_match_Kp(p)), true);
}

PredPtr weakly_regular_w(const Semitopology&, int p) {
    return p_e(p_bin(BinOp::And, p_un(UnOp::BoxT, p_atom(p)), all_points_match_Kp(p)), true);
}

PredPtr unconflicted_w(const Semitopology&, int p) {
    PredPtr xp = p_k(p_bin(BinOp::MaterialIff, p_var("x"), p_atom(p)), true);
    PredPtr py = p_k(p_bin(BinOp::MaterialIff, p_atom(p), p_var("y")), true);
    PredPtr xy = p_k(p_bin(BinOp::MaterialIff, p_var("x"), p_var("y")), true);
    PredPtr body = p_bin(BinOp::Imp, p_bin(BinOp::And, xp, py), xy);
    return p_forall("x", p_forall("y", body));
}

PredPtr regular_w(const Semitopology& s, int p) {
    return p_bin(BinOp::And, weakly_regular_w(s, p), unconflicted_w(s, p));
}

PredPtr regular_prime_w(const Semitopology& s, int p) {
    // K_W (exists x. []T x) -> (forall x'. x' -> p ⋔_W x') -> (forall x'. (p ⋔_W x') -> x')
    PredPtr some_t = p_exists("x", p_un(UnOp::BoxT, p_var("x")));
    PredPtr sub = p_forall("x", p_bin(BinOp::Imp, p_var("x"),
                                      p_k(p_bin(BinOp::MaterialIff, p_atom(p), p_var("x")), true)));
    PredPtr sup = p_forall("x", p_bin(BinOp::Imp,
                                      p_k(p_bin(BinOp::MaterialIff, p_atom(p), p_var("x")), true),
                                      p_var("x")));
    PredPtr body = p_bin(BinOp::Imp, some_t, p_bin(BinOp::Imp, sub, sup));
    return p_bin(BinOp::And, weakly_regular_w(s, p), p_k(body, true));
}

}  // namespace semitopo
