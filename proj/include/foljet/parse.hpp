#ifndef FOLJET_PARSE_HPP
#define FOLJET_PARSE_HPP

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oneform.hpp"
#include "polynomial.hpp"

namespace foljet {

namespace parsedetail {

struct Token {
    enum Kind { Number, Ident, Punct, End } kind = End;
    std::string text;
    std::size_t pos = 0;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Number, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                                    s[j] == '_'))
                ++j;
            out.push_back({Token::Ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::string("+-*/^()[],").find(c) != std::string::npos) {
            out.push_back({Token::Punct, std::string(1, c), i});
            ++i;
            continue;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

/// A polynomial together with linear differential parts: value =
/// scalar + sum_v dcoeffs[v] * d(v). Multiplication must stay linear in the
/// differentials.
struct DPoly {
    Polynomial scalar;
    std::map<std::string, Polynomial> dcoeffs;

    bool has_d() const { return !dcoeffs.empty(); }
};

class Parser {
public:
    Parser(std::vector<Token> toks, ContextPtr ctx)
        : toks_(std::move(toks)), ctx_(std::move(ctx)) {}

    DPoly parse_expr() {
        DPoly v = parse_term();
        while (peek().kind == Token::Punct && (peek().text == "+" || peek().text == "-")) {
            bool minus = next().text == "-";
            DPoly w = parse_term();
            if (minus) negate(w);
            add(v, w);
        }
        return v;
    }

    void expect_end() {
        if (peek().kind != Token::End)
            throw parse_error("unexpected trailing input", peek().pos);
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    static void negate(DPoly& v) {
        v.scalar = -v.scalar;
        for (auto& [k, p] : v.dcoeffs) p = -p;
    }
    void add(DPoly& v, const DPoly& w) {
        v.scalar += w.scalar;
        for (auto& [k, p] : w.dcoeffs) {
            auto it = v.dcoeffs.find(k);
            if (it == v.dcoeffs.end()) v.dcoeffs[k] = p;
            else {
                it->second += p;
                if (it->second.is_zero()) v.dcoeffs.erase(it);
            }
        }
    }
    DPoly make_dpoly() const {
        DPoly v;
        v.scalar = Polynomial::zero(ctx_);
        return v;
    }
    DPoly mul(const DPoly& a, const DPoly& b, std::size_t at) {
        if (a.has_d() && b.has_d())
            throw parse_error("nonlinear in differentials", at);
        DPoly out = make_dpoly();
        out.scalar = a.scalar * b.scalar;
        const DPoly& dpart = a.has_d() ? a : b;
        const Polynomial& s = a.has_d() ? b.scalar : a.scalar;
        for (auto& [k, p] : dpart.dcoeffs) {
            Polynomial q = p * s;
            if (!q.is_zero()) out.dcoeffs[k] = q;
        }
        return out;
    }

    DPoly parse_term() {
        std::size_t at = peek().pos;
        DPoly v = parse_power();
        while (peek().kind == Token::Punct && peek().text == "*") {
            next();
            DPoly w = parse_power();
            v = mul(v, w, at);
        }
        return v;
    }

    DPoly parse_power() {
        // unary sign binds looser than '^', so -x^2 means -(x^2)
        bool neg = false;
        while (peek().kind == Token::Punct &&
               (peek().text == "-" || peek().text == "+")) {
            if (next().text == "-") neg = !neg;
        }
        DPoly v = parse_atom();
        while (peek().kind == Token::Punct && peek().text == "^") {
            std::size_t at = next().pos;
            if (peek().kind != Token::Number)
                throw parse_error("exponent must be a nonnegative integer", peek().pos);
            int e = std::stoi(next().text);
            if (v.has_d()) {
                if (e != 1) throw parse_error("cannot raise a differential to a power", at);
                continue;
            }
            v.scalar = v.scalar.pow(e);
        }
        if (neg) negate(v);
        return v;
    }

    DPoly parse_atom() {
        const Token& t = peek();
        if (t.kind == Token::Number) {
            next();
            Integer num(t.text);
            Rational r(num);
            if (peek().kind == Token::Punct && peek().text == "/") {
                std::size_t at = next().pos;
                if (peek().kind != Token::Number)
                    throw parse_error("expected denominator", peek().pos);
                Integer den(next().text);
                if (den == 0) throw parse_error("zero denominator", at);
                r = Rational(num, den);
            }
            DPoly v = make_dpoly();
            v.scalar = Polynomial::constant(ctx_, r);
            return v;
        }
        if (t.kind == Token::Ident) {
            // d(<var>) is the differential marker
            if (t.text == "d" && peek(1).kind == Token::Punct && peek(1).text == "(") {
                next();
                next();
                if (peek().kind != Token::Ident)
                    throw parse_error("expected variable inside d(...)", peek().pos);
                Token var = next();
                if (!ctx_->find(var.text))
                    throw parse_error("unknown variable: " + var.text, var.pos);
                if (!(peek().kind == Token::Punct && peek().text == ")"))
                    throw parse_error("expected ')'", peek().pos);
                next();
                DPoly v = make_dpoly();
                v.dcoeffs[var.text] = Polynomial::constant(ctx_, 1);
                return v;
            }
            next();
            auto idx = ctx_->find(t.text);
            if (!idx) throw parse_error("unknown variable: " + t.text, t.pos);
            DPoly v = make_dpoly();
            v.scalar = Polynomial::variable(ctx_, *idx);
            return v;
        }
        if (t.kind == Token::Punct && t.text == "(") {
            next();
            DPoly v = parse_expr();
            if (!(peek().kind == Token::Punct && peek().text == ")"))
                throw parse_error("expected ')'", peek().pos);
            next();
            return v;
        }
        throw parse_error("unexpected token", t.pos);
    }

    std::vector<Token> toks_;
    ContextPtr ctx_;
    std::size_t pos_ = 0;
};

/// Variables in first-appearance order, skipping d(...) markers.
inline std::vector<std::string> scan_variables(const std::vector<Token>& toks) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        const Token& t = toks[i];
        if (t.kind != Token::Ident) continue;
        if (t.text == "d" && toks[i + 1].kind == Token::Punct && toks[i + 1].text == "(")
            continue;
        bool seen = false;
        for (auto& n : out)
            if (n == t.text) seen = true;
        if (!seen) out.push_back(t.text);
    }
    return out;
}

}  // namespace parsedetail

/// Variables appearing in any of the given expressions, first-appearance
/// order across the list (d(v) also declares v).
inline std::vector<std::string> infer_variables(const std::vector<std::string>& exprs) {
    std::vector<std::string> out;
    for (auto& s : exprs) {
        auto toks = parsedetail::tokenize(s);
        for (std::size_t i = 0; i < toks.size(); ++i) {
            const auto& t = toks[i];
            std::string name;
            if (t.kind == parsedetail::Token::Ident) {
                if (t.text == "d" && i + 1 < toks.size() &&
                    toks[i + 1].kind == parsedetail::Token::Punct &&
                    toks[i + 1].text == "(") {
                    if (i + 2 < toks.size() &&
                        toks[i + 2].kind == parsedetail::Token::Ident)
                        name = toks[i + 2].text;
                } else {
                    name = t.text;
                }
            }
            if (name.empty()) continue;
            bool seen = false;
            for (auto& n : out)
                if (n == name) seen = true;
            if (!seen) out.push_back(name);
        }
    }
    return out;
}

inline Polynomial parse_polynomial(const std::string& s, const ContextPtr& ctx) {
    parsedetail::Parser p(parsedetail::tokenize(s), ctx);
    auto v = p.parse_expr();
    p.expect_end();
    if (v.has_d()) throw parse_error("unexpected differential in polynomial", 0);
    return v.scalar;
}

inline OneForm parse_oneform(const std::string& s, const ContextPtr& ctx) {
    parsedetail::Parser p(parsedetail::tokenize(s), ctx);
    auto v = p.parse_expr();
    p.expect_end();
    if (!v.scalar.is_zero())
        throw parse_error("1-form has a term without a differential", 0);
    std::vector<Polynomial> b(static_cast<std::size_t>(ctx->size()),
                              Polynomial::zero(ctx));
    for (auto& [name, coeff] : v.dcoeffs)
        b[static_cast<std::size_t>(ctx->require(name))] = coeff;
    return OneForm(ctx, std::move(b));
}

/// "(p, q, ...)" with rational entries.
inline std::vector<Rational> parse_point(const std::string& s) {
    auto toks = parsedetail::tokenize(s);
    std::size_t i = 0;
    auto expect = [&](const std::string& p) {
        if (!(toks[i].kind == parsedetail::Token::Punct && toks[i].text == p))
            throw parse_error("expected '" + p + "'", toks[i].pos);
        ++i;
    };
    expect("(");
    std::vector<Rational> out;
    while (true) {
        int sign = 1;
        while (toks[i].kind == parsedetail::Token::Punct &&
               (toks[i].text == "-" || toks[i].text == "+")) {
            if (toks[i].text == "-") sign = -sign;
            ++i;
        }
        if (toks[i].kind != parsedetail::Token::Number)
            throw parse_error("expected number", toks[i].pos);
        Integer num(toks[i].text);
        ++i;
        Rational r(num);
        if (toks[i].kind == parsedetail::Token::Punct && toks[i].text == "/") {
            ++i;
            if (toks[i].kind != parsedetail::Token::Number)
                throw parse_error("expected denominator", toks[i].pos);
            Integer den(toks[i].text);
            if (den == 0) throw parse_error("zero denominator", toks[i].pos);
            r = Rational(num, den);
            ++i;
        }
        out.push_back(sign < 0 ? Rational(-r) : r);
        if (toks[i].kind == parsedetail::Token::Punct && toks[i].text == ",") {
            ++i;
            continue;
        }
        break;
    }
    expect(")");
    if (toks[i].kind != parsedetail::Token::End)
        throw parse_error("unexpected trailing input", toks[i].pos);
    return out;
}

/// "[p1, p2, ...]" of polynomial expressions.
inline Ideal parse_ideal(const std::string& s, const ContextPtr& ctx) {
    std::string t = s;
    // split on top-level commas between the brackets
    std::size_t open = t.find('[');
    std::size_t close = t.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw parse_error("ideal must be bracketed: [f, g, ...]", 0);
    std::string body = t.substr(open + 1, close - open - 1);
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : body) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    bool blank = cur.find_first_not_of(" \t") == std::string::npos;
    if (!blank) parts.push_back(cur);
    std::vector<Polynomial> gens;
    for (auto& part : parts) gens.push_back(parse_polynomial(part, ctx));
    return Ideal(ctx, std::move(gens));
}

}  // namespace foljet

#endif
