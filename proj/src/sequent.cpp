// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/sequent.hpp"

#include <sstream>

namespace semitopo {

Tag neg_tag(Tag t) {
    switch (t) {
        case Tag::TB: return Tag::FB;
        case Tag::FB: return Tag::TB;
        case Tag::FF: return Tag::TT;
        case Tag::TT: return Tag::FF;
    }
    throw Error("bad tag");
}

bool tag_contains(Tag t, Three v) {
    switch (t) {
        case Tag::TB: return v != Three::F;
        case Tag::FF: return v == Three::F;
        case Tag::FB: return v != Three::T;
        case Tag::TT: return v == Three::T;
    }
    throw Error("bad tag");
}

std::string tag_name(Tag t) {
    switch (t) {
        case Tag::TB: return "TB";
        case Tag::FF: return "FF";
        case Tag::FB: return "FB";
        case Tag::TT: return "TT";
    }
    throw Error("bad tag");
}

Tag parse_tag(const std::string& name) {
    if (name == "TB") return Tag::TB;
    if (name == "FF") return Tag::FF;
    if (name == "FB") return Tag::FB;
    if (name == "TT") return Tag::TT;
    throw Error("unknown tag '" + name + "'");
}

namespace {

bool pred_equal(const PredPtr& a, const PredPtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Pred::Kind::Const: return a->value == b->value;
        case Pred::Kind::Atom: return a->atom == b->atom;
        case Pred::Kind::Var: return a->var == b->var;
        case Pred::Kind::Unary: return a->un == b->un && pred_equal(a->left, b->left);
        case Pred::Kind::Binary:
            return a->bin == b->bin && pred_equal(a->left, b->left) &&
                   pred_equal(a->right, b->right);
        case Pred::Kind::K:
        case Pred::Kind::E:
            return a->witness_scoped == b->witness_scoped && pred_equal(a->left, b->left);
        case Pred::Kind::Forall:
        case Pred::Kind::Exists:
            return a->var == b->var && pred_equal(a->left, b->left);
    }
    return false;
}

bool is_core_head(const PredPtr& p) {
    switch (p->kind) {
        case Pred::Kind::Const:
        case Pred::Kind::Atom:
        case Pred::Kind::Forall:
            return true;
        case Pred::Kind::Unary: return p->un == UnOp::Neg || p->un == UnOp::BoxT;
        case Pred::Kind::Binary: return p->bin == BinOp::And;
        case Pred::Kind::K:
            if (p->witness_scoped)
                throw Error("derive: witness-scoped modalities are not part of the sequent system");
            return true;
        default: return false;
    }
}

// One rewrite step towards the core connectives {~, &, []T, K, forall}.
PredPtr rewrite_head(const PredPtr& p) {
    auto neg = [](PredPtr x) { return p_un(UnOp::Neg, std::move(x)); };
    switch (p->kind) {
        case Pred::Kind::Unary:
            if (p->un == UnOp::BoxTB) return neg(p_un(UnOp::BoxT, neg(p->left)));
            if (p->un == UnOp::BoxB)  // []TB q & ~[]T q
                return p_bin(BinOp::And, p_un(UnOp::BoxTB, p->left),
                             neg(p_un(UnOp::BoxT, p->left)));
            break;
        case Pred::Kind::Binary:
            switch (p->bin) {
                case BinOp::Or: return neg(p_bin(BinOp::And, neg(p->left), neg(p->right)));
                case BinOp::MaterialImp: return p_bin(BinOp::Or, neg(p->left), p->right);
                case BinOp::MaterialIff:
                    return p_bin(BinOp::And, p_bin(BinOp::MaterialImp, p->left, p->right),
                                 p_bin(BinOp::MaterialImp, p->right, p->left));
                case BinOp::Imp:
                    return p_bin(BinOp::MaterialImp, p_un(UnOp::BoxTB, p->left), p->right);
                case BinOp::Iff:
                    return p_bin(BinOp::And, p_bin(BinOp::Imp, p->left, p->right),
                                 p_bin(BinOp::Imp, p->right, p->left));
                default: break;
            }
            break;
        case Pred::Kind::E:
            if (p->witness_scoped)
                throw Error("derive: witness-scoped modalities are not part of the sequent system");
            return neg(p_k(neg(p->left)));
        case Pred::Kind::Exists: return neg(p_forall(p->var, neg(p->left)));
        default: break;
    }
    return p;
}

PredPtr to_core_head(PredPtr p) {
    for (;;) {
        if (is_core_head(p)) return p;
        p = rewrite_head(p);
    }
}

using Entries = std::vector<TagEntry>;

Entries with_entry(Entries es, Tag t, PredPtr p) {
    for (const auto& e : es)
        if (e.tag == t && pred_equal(e.pred, p)) return es;  // sequents are sets
    es.push_back({t, std::move(p)});
    return es;
}

bool covering(Tag a, Tag b) {
    // tag pairs whose union is all of THREE
    auto pair = [&](Tag x, Tag y) { return (a == x && b == y) || (a == y && b == x); };
    return pair(Tag::TB, Tag::FF) || pair(Tag::FB, Tag::TT) || pair(Tag::TB, Tag::FB);
}

// Every rule is semantically invertible (each premise set is equivalent to its
// conclusion), so derivability is decided by decomposing the first compound
// entry rather than searching over principal choices.  K entries are rigid:
// such an entry either settles the sequent by its own K rule or never fires,
// so it is checked in isolation and dropped otherwise.  The sole subtlety is
// the forall-left rule, used in its exact form with every instance at once.
bool derive_entries(const Entries& sigma, int n_points) {
    Entries atoms;  // processed entries with atomic predicates
    Entries work;
    for (const auto& e : sigma) work = with_entry(std::move(work), e.tag, e.pred);

    while (!work.empty()) {
        TagEntry e = work.back();
        work.pop_back();
        Tag t = e.tag;
        PredPtr phi = to_core_head(e.pred);
        switch (phi->kind) {
            case Pred::Kind::Const:
                if (tag_contains(t, phi->value)) return true;  // constant axiom
                continue;                                      // dead entry
            case Pred::Kind::Atom:
                atoms = with_entry(std::move(atoms), t, phi);
                continue;
            case Pred::Kind::Var: throw Error("derive: free variable in sequent");
            case Pred::Kind::Unary:
                if (phi->un == UnOp::Neg) {
                    work = with_entry(std::move(work), neg_tag(t), phi->left);
                    continue;
                }
                // []T
                if (t == Tag::TB || t == Tag::TT) {
                    work = with_entry(std::move(work), Tag::TT, phi->left);
                } else {
                    work = with_entry(std::move(work), Tag::FF, phi->left);
                    work = with_entry(std::move(work), Tag::FB, phi->left);
                }
                continue;
            case Pred::Kind::Binary: {  // And
                if (t == Tag::TB || t == Tag::TT) {
                    // conjunctive premises: recurse on one side, keep the other
                    Entries left = atoms;
                    for (const auto& w : work) left = with_entry(std::move(left), w.tag, w.pred);
                    Entries right = left;
                    left = with_entry(std::move(left), t, phi->left);
                    right = with_entry(std::move(right), t, phi->right);
                    return derive_entries(left, n_points) && derive_entries(right, n_points);
                }
                work = with_entry(std::move(work), t, phi->left);
                work = with_entry(std::move(work), t, phi->right);
                continue;
            }
            case Pred::Kind::K: {
                // rigid: settled by its own premise, independent of the rest
                bool fires;
                if (t == Tag::TB || t == Tag::TT) {
                    fires = derive_entries({{t, phi->left}}, n_points);
                } else {
                    Tag inner = t == Tag::FF ? Tag::TB : Tag::TT;  // (TB,FF), (TT,FB)
                    fires = !derive_entries({{inner, phi->left}}, n_points);
                }
                if (fires) return true;
                continue;  // never designated; drop
            }
            case Pred::Kind::Forall: {
                if (t == Tag::TB || t == Tag::TT) {
                    Entries rest = atoms;
                    for (const auto& w : work) rest = with_entry(std::move(rest), w.tag, w.pred);
                    for (int p = 0; p < n_points; ++p) {
                        Entries prem = with_entry(rest, t, substitute(phi->left, phi->var, p));
                        if (!derive_entries(prem, n_points)) return false;
                    }
                    return true;
                }
                // exact forall-left: all instances as alternatives in one premise
                for (int p = 0; p < n_points; ++p)
                    work = with_entry(std::move(work), t, substitute(phi->left, phi->var, p));
                continue;
            }
            default: throw Error("derive: unexpected head");
        }
    }

    // Ax endgame on atomic entries: some atom carries a covering tag pair
    for (size_t i = 0; i < atoms.size(); ++i)
        for (size_t j = i + 1; j < atoms.size(); ++j)
            if (covering(atoms[i].tag, atoms[j].tag) &&
                pred_equal(atoms[i].pred, atoms[j].pred))
                return true;
    return false;
}

}  // namespace

bool sequent_valid(const TagSequent& sigma, const Universe& u) {
    for (const auto& e : sigma.entries)
        if (!is_closed(e.pred)) throw Error("sequent entries must be closed predicates");
    EvalContext ctx = make_context(u.size());
    for (const auto& f : all_valuations(u.size())) {
        bool some = false;
        for (const auto& e : sigma.entries)
            if (tag_contains(e.tag, eval(e.pred, f, ctx))) {
                some = true;
                break;
            }
        if (!some) return false;
    }
    return true;
}

bool derive(const TagSequent& sigma, const Universe& u) {
    for (const auto& e : sigma.entries)
        if (!is_closed(e.pred)) throw Error("sequent entries must be closed predicates");
    return derive_entries(sigma.entries, u.size());
}

TagSequent parse_sequent(const std::string& text, const Universe& u) {
    TagSequent s;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw Error("sequent line must be 'tag: predicate': " + line);
        std::string tagpart = line.substr(b, colon - b);
        size_t te = tagpart.find_last_not_of(" \t");
        Tag t = parse_tag(tagpart.substr(0, te + 1));
        s.entries.push_back({t, parse_pred(line.substr(colon + 1), u)});
    }
    return s;
}

}  // namespace semitopo
