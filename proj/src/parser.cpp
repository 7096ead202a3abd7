// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/logic3.hpp"

#include <cctype>

namespace semitopo {

namespace {

// Recursive-descent parser for the predicate text syntax.
// unary > & > | > implications (right-associative).
struct Parser {
    const std::string& src;
    const Universe& u;
    size_t pos = 0;

    Parser(const std::string& s, const Universe& uu) : src(s), u(uu) {}

    void skip() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eat(const std::string& tok) {
        skip();
        if (src.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    bool peek(const std::string& tok) {
        skip();
        return src.compare(pos, tok.size(), tok) == 0;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error("predicate syntax error at offset " + std::to_string(pos) + ": " + msg);
    }

    std::string ident() {
        skip();
        size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
                src[pos] == '-' || src[pos] == '*' || src[pos] == '+'))
            ++pos;
        if (start == pos) fail("expected an identifier");
        return src.substr(start, pos - start);
    }

    PredPtr parse() {
        PredPtr p = implications();
        skip();
        if (pos != src.size()) fail("trailing input");
        return p;
    }

    PredPtr implications() {
        PredPtr lhs = disjunction();
        skip();
        // two-character tokens must be tried longest-first
        if (eat("<=>")) return p_bin(BinOp::MaterialIff, lhs, implications());
        if (eat("<->")) return p_bin(BinOp::Iff, lhs, implications());
        if (eat("=>")) return p_bin(BinOp::MaterialImp, lhs, implications());
        if (eat("->")) return p_bin(BinOp::Imp, lhs, implications());
        return lhs;
    }

    PredPtr disjunction() {
        PredPtr lhs = conjunction();
        while (true) {
            skip();
            // do not consume '|' of '|>' style tokens; there are none in this grammar
            if (eat("|"))
                lhs = p_bin(BinOp::Or, lhs, conjunction());
            else
                return lhs;
        }
    }

    PredPtr conjunction() {
        PredPtr lhs = unary();
        while (eat("&")) lhs = p_bin(BinOp::And, lhs, unary());
        return lhs;
    }

    PredPtr unary() {
        skip();
        if (eat("~")) return p_un(UnOp::Neg, unary());
        if (eat("[]TB")) return p_un(UnOp::BoxTB, unary());
        if (eat("[]T")) return p_un(UnOp::BoxT, unary());
        if (eat("[]B")) return p_un(UnOp::BoxB, unary());
        if (eat("K{")) {
            PredPtr body = implications();
            if (!eat("}")) fail("expected '}' closing K{...}");
            return p_k(body);
        }
        if (eat("E{")) {
            PredPtr body = implications();
            if (!eat("}")) fail("expected '}' closing E{...}");
            return p_e(body);
        }
        if (peek("forall") || peek("exists")) {
            bool all = eat("forall");
            if (!all) eat("exists");
            std::string var = ident();
            if (!eat(".")) fail("expected '.' after quantifier binder");
            PredPtr body = implications();
            return all ? p_forall(var, body) : p_exists(var, body);
        }
        return primary();
    }

    PredPtr primary() {
        skip();
        if (eat("(")) {
            PredPtr p = implications();
            if (!eat(")")) fail("expected ')'");
            return p;
        }
        if (eat("'")) {
            std::string label = ident();
            int idx = u.find(label);
            if (idx < 0) fail("unknown atom '" + label + "'");
            return p_atom(idx);
        }
        std::string id = ident();
        if (id == "T") return p_const(Three::T);
        if (id == "B") return p_const(Three::B);
        if (id == "F") return p_const(Three::F);
        return p_var(id);
    }
};

}  // namespace

PredPtr parse_pred(const std::string& text, const Universe& u) {
    Parser p(text, u);
    return p.parse();
}

}  // namespace semitopo
