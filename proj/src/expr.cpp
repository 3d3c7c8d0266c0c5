#include "tlf/expr.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace tlf {
namespace {

struct Tok {
    enum Kind { kInt, kIdent, kPunct, kEnd };
    Kind kind;
    std::string text;
    size_t at;
};

[[noreturn]] void fail_at(const std::string& msg, size_t at) {
    throw ParseError(msg + " (offset " + std::to_string(at) + ")");
}

std::vector<Tok> lex(const std::string& s) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isdigit(c)) {
            size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j - i > 9) fail_at("integer literal too long", i);
            out.push_back({Tok::kInt, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(c)) {
            size_t j = i + 1;
            while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::kIdent, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        static const std::string punct = "^*+-()[]{},;/";
        if (punct.find(static_cast<char>(c)) != std::string::npos) {
            out.push_back({Tok::kPunct, std::string(1, static_cast<char>(c)), i});
            ++i;
            continue;
        }
        fail_at(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
    }
    out.push_back({Tok::kEnd, "", s.size()});
    return out;
}

struct TokStream {
    std::vector<Tok> toks;
    size_t pos = 0;

    explicit TokStream(const std::string& s) : toks(lex(s)) {}
    explicit TokStream(std::vector<Tok> ts) : toks(std::move(ts)) {}

    const Tok& peek(size_t ahead = 0) const {
        size_t i = pos + ahead;
        return i < toks.size() ? toks[i] : toks.back();
    }
    bool punct(const char* p) const { return peek().kind == Tok::kPunct && peek().text == p; }
    bool ident(const char* w) const { return peek().kind == Tok::kIdent && peek().text == w; }
    bool at_end() const { return peek().kind == Tok::kEnd; }
    void advance() { ++pos; }
    void expect_punct(const char* p) {
        if (!punct(p)) fail(std::string("expected '") + p + "'");
        advance();
    }
    void expect_end() {
        if (!at_end()) fail("trailing input");
    }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, peek().at); }

    long long integer() {
        bool neg = false;
        if (punct("-")) {
            neg = true;
            advance();
        }
        if (peek().kind != Tok::kInt) fail("expected integer");
        long long v = std::stoll(peek().text);
        advance();
        return neg ? -v : v;
    }

    // after '^'
    long long exponent() {
        long long v = integer();
        if (v > 9999 || v < -9999) fail("exponent out of range");
        return v;
    }
};

struct ExprParser : TokStream {
    const Context& ctx;

    ExprParser(const Context& c, const std::string& s) : TokStream(s), ctx(c) {}
    ExprParser(const Context& c, std::vector<Tok> ts) : TokStream(std::move(ts)), ctx(c) {}

    FqElem gen_power() {
        advance(); // 'g'
        if (ctx.e == 1) fail("'g' needs a field with e > 1");
        long long k = 1;
        if (punct("^")) {
            advance();
            k = exponent();
        }
        return ctx.cg().pow(k);
    }

    // ---- scalars in F_q ----
    FqElem fq_factor() {
        if (peek().kind == Tok::kInt) return ctx.c(static_cast<int>(integer() % ctx.p));
        if (ident("g")) return gen_power();
        if (punct("(")) {
            advance();
            FqElem v = fq_sum();
            expect_punct(")");
            return v;
        }
        fail("expected scalar");
    }
    FqElem fq_term() {
        FqElem acc = fq_factor();
        while (punct("*")) {
            advance();
            acc = acc * fq_factor();
        }
        return acc;
    }
    FqElem fq_sum() {
        bool neg = punct("-");
        if (neg || punct("+")) advance();
        FqElem acc = neg ? ctx.c(0) - fq_term() : fq_term();
        while (punct("+") || punct("-")) {
            bool sub = punct("-");
            advance();
            acc = sub ? acc - fq_term() : acc + fq_term();
        }
        return acc;
    }

    // ---- series in f = F_q((t)) ----
    FLaurent f_factor() {
        if (peek().kind == Tok::kInt)
            return ctx.f_mono(ctx.c(static_cast<int>(integer() % ctx.p)), 0);
        if (ident("g")) return ctx.f_mono(gen_power(), 0);
        if (ident("t")) {
            advance();
            long long a = 1;
            if (punct("^")) {
                advance();
                a = exponent();
            }
            return ctx.t(static_cast<int>(a));
        }
        if (punct("(")) {
            advance();
            FLaurent v = f_sum();
            expect_punct(")");
            return v;
        }
        fail("expected a t-series factor");
    }
    FLaurent f_term() {
        FLaurent acc = f_factor();
        while (punct("*")) {
            advance();
            acc = acc * f_factor();
        }
        return acc;
    }
    FLaurent f_sum() {
        bool neg = punct("-");
        if (neg || punct("+")) advance();
        FLaurent acc = neg ? ctx.f_zero() - f_term() : f_term();
        while (punct("+") || punct("-")) {
            bool sub = punct("-");
            advance();
            acc = sub ? acc - f_term() : acc + f_term();
        }
        return acc;
    }

    // ---- series in K = f((pi)) ----
    KLaurent k_factor() {
        if (peek().kind == Tok::kInt)
            return ctx.k_mono(ctx.c(static_cast<int>(integer() % ctx.p)), 0, 0);
        if (ident("g")) return ctx.k_mono(gen_power(), 0, 0);
        if (ident("t")) {
            advance();
            long long a = 1;
            if (punct("^")) {
                advance();
                a = exponent();
            }
            return ctx.kt(static_cast<int>(a));
        }
        if (ident("pi")) {
            advance();
            long long b = 1;
            if (punct("^")) {
                advance();
                b = exponent();
            }
            return ctx.pi(static_cast<int>(b));
        }
        if (punct("(")) {
            advance();
            KLaurent v = k_sum();
            expect_punct(")");
            return v;
        }
        fail("expected a series factor");
    }
    KLaurent k_term() {
        KLaurent acc = k_factor();
        while (punct("*")) {
            advance();
            acc = acc * k_factor();
        }
        return acc;
    }
    KLaurent k_sum() {
        bool neg = punct("-");
        if (neg || punct("+")) advance();
        KLaurent acc = neg ? ctx.k_zero() - k_term() : k_term();
        while (punct("+") || punct("-")) {
            bool sub = punct("-");
            advance();
            acc = sub ? acc - k_term() : acc + k_term();
        }
        return acc;
    }
};

// polynomials in T over F_q, for rational-function input
struct PolyParser : TokStream {
    const FqCtx& fq;

    PolyParser(const FqCtx& f, const std::string& s) : TokStream(s), fq(f) {}

    FqElem sc(long long v) { return FqElem(fq, static_cast<int>(v % fq.p())); }

    FqElem gen_power() {
        advance(); // 'g'
        if (fq.e() == 1) fail("'g' needs a field with e > 1");
        long long k = 1;
        if (punct("^")) {
            advance();
            k = exponent();
        }
        return FqElem::gen(fq).pow(k);
    }

    Poly p_factor() {
        if (peek().kind == Tok::kInt) return poly_from({sc(integer())});
        if (ident("g")) return poly_from({gen_power()});
        if (ident("T")) {
            advance();
            long long k = 1;
            if (punct("^")) {
                advance();
                k = exponent();
            }
            if (k < 0) fail("negative exponent in a polynomial");
            if (k > 64) fail("exponent out of range for T");
            Poly r = poly_one(fq);
            for (long long i = 0; i < k; ++i) r = poly_mul(fq, r, poly_T(fq));
            return r;
        }
        if (punct("(")) {
            advance();
            Poly v = p_sum();
            expect_punct(")");
            return v;
        }
        fail("expected a polynomial factor");
    }
    Poly p_term() {
        Poly acc = p_factor();
        while (punct("*")) {
            advance();
            acc = poly_mul(fq, acc, p_factor());
        }
        return acc;
    }
    Poly p_sum() {
        bool neg = punct("-");
        if (neg || punct("+")) advance();
        Poly acc = neg ? poly_sub(fq, Poly{}, p_term()) : p_term();
        while (punct("+") || punct("-")) {
            bool sub = punct("-");
            advance();
            acc = sub ? poly_sub(fq, acc, p_term()) : poly_add(fq, acc, p_term());
        }
        return acc;
    }
};

// index of the first basis-marker identifier ('dt' or 'dlog'); toks.size()-1
// (the end token) if absent
size_t marker_index(const std::vector<Tok>& toks, bool dlog_too) {
    for (size_t i = 0; i + 1 < toks.size(); ++i) {
        if (toks[i].kind != Tok::kIdent) continue;
        if (toks[i].text == "dt" || (dlog_too && toks[i].text == "dlog")) return i;
    }
    return toks.size() - 1;
}

}  // namespace

FqElem parse_fq(const Context& ctx, const std::string& text) {
    ExprParser p(ctx, text);
    FqElem v = p.fq_sum();
    p.expect_end();
    return v;
}

FLaurent parse_f(const Context& ctx, const std::string& text) {
    ExprParser p(ctx, text);
    FLaurent v = p.f_sum();
    p.expect_end();
    return v;
}

KLaurent parse_k(const Context& ctx, const std::string& text) {
    ExprParser p(ctx, text);
    KLaurent v = p.k_sum();
    p.expect_end();
    return v;
}

WVec parse_witt(const Context& ctx, const std::string& text) {
    ExprParser p(ctx, text);
    p.expect_punct("[");
    WVec xs;
    if (!p.punct("]")) {
        xs.push_back(p.k_sum());
        while (p.punct(";")) {
            p.advance();
            xs.push_back(p.k_sum());
        }
    }
    p.expect_punct("]");
    p.expect_end();
    if (static_cast<int>(xs.size()) != ctx.m)
        throw ParseError("Witt literal has " + std::to_string(xs.size()) +
                         " slot(s); expected m = " + std::to_string(ctx.m));
    return xs;
}

MilnorSym parse_symbol(const Context& ctx, const std::string& text) {
    ExprParser p(ctx, text);
    if (p.peek().kind == Tok::kInt && p.peek().text == "0" && p.peek(1).kind == Tok::kEnd)
        return MilnorSym{};
    MilnorSym acc{};
    long long sgn = 1;
    if (p.punct("-")) {
        sgn = -1;
        p.advance();
    } else if (p.punct("+")) {
        p.advance();
    }
    for (;;) {
        long long coef = 1;
        if (p.peek().kind == Tok::kInt) {
            coef = p.integer();
            p.expect_punct("*");
        }
        p.expect_punct("{");
        KLaurent a = p.k_sum();
        p.expect_punct(",");
        KLaurent b = p.k_sum();
        p.expect_punct("}");
        acc = acc + MilnorSym::symbol(a, b).scaled(sgn * coef);
        if (p.punct("+")) {
            sgn = 1;
            p.advance();
        } else if (p.punct("-")) {
            sgn = -1;
            p.advance();
        } else {
            break;
        }
    }
    p.expect_end();
    return acc;
}

Form2 parse_form2(const Context& ctx, const std::string& text) {
    ExprParser p(ctx, text);
    size_t mark = marker_index(p.toks, true);
    if (p.toks[mark].kind == Tok::kEnd)
        fail_at("expected a basis marker: dt^dpi, dlog t^dlog pi, or dt^dlog pi",
                p.toks[mark].at);
    size_t series_end = mark;
    KLaurent coeff = ctx.k_one();
    if (series_end > 0) {
        if (!(p.toks[series_end - 1].kind == Tok::kPunct && p.toks[series_end - 1].text == "*"))
            fail_at("expected '*' before the basis marker", p.toks[mark].at);
        --series_end;
        std::vector<Tok> pre(p.toks.begin(), p.toks.begin() + static_cast<long>(series_end));
        pre.push_back({Tok::kEnd, "", p.toks[series_end].at});
        ExprParser sp(ctx, std::move(pre));
        coeff = sp.k_sum();
        sp.expect_end();
    }
    p.pos = mark;
    if (p.ident("dt")) {
        p.advance();
        p.expect_punct("^");
        if (p.ident("dpi")) {
            p.advance();
            p.expect_end();
            return form2_omega(ctx, coeff);
        }
        if (p.ident("dlog")) {
            p.advance();
            if (!p.ident("pi")) p.fail("expected 'pi' after dlog");
            p.advance();
            p.expect_end();
            return form2_log(coeff * ctx.kt(1));
        }
        p.fail("expected 'dpi' or 'dlog pi'");
    }
    p.advance(); // 'dlog'
    if (!p.ident("t")) p.fail("expected 't' after dlog");
    p.advance();
    p.expect_punct("^");
    if (!p.ident("dlog")) p.fail("expected 'dlog pi'");
    p.advance();
    if (!p.ident("pi")) p.fail("expected 'pi'");
    p.advance();
    p.expect_end();
    return form2_log(coeff);
}

FormF1 parse_formf(const Context& ctx, const std::string& text) {
    ExprParser p(ctx, text);
    size_t mark = marker_index(p.toks, false);
    if (p.toks[mark].kind == Tok::kEnd) fail_at("expected the basis marker dt", p.toks[mark].at);
    size_t series_end = mark;
    FLaurent coeff = ctx.f_one();
    if (series_end > 0) {
        if (!(p.toks[series_end - 1].kind == Tok::kPunct && p.toks[series_end - 1].text == "*"))
            fail_at("expected '*' before dt", p.toks[mark].at);
        --series_end;
        std::vector<Tok> pre(p.toks.begin(), p.toks.begin() + static_cast<long>(series_end));
        pre.push_back({Tok::kEnd, "", p.toks[series_end].at});
        ExprParser sp(ctx, std::move(pre));
        coeff = sp.f_sum();
        sp.expect_end();
    }
    p.pos = mark;
    p.advance(); // 'dt'
    p.expect_end();
    return FormF1{coeff};
}

RatFun parse_ratfun(const FqCtx& fq, const std::string& text) {
    PolyParser p(fq, text);
    Poly num = p.p_sum();
    Poly den = poly_one(fq);
    if (p.punct("/")) {
        p.advance();
        den = p.p_sum();
    }
    p.expect_end();
    if (den.is_zero()) throw ParseError("zero denominator");
    return RatFun{num, den};
}

std::string render_f(const FLaurent& u) { return u.to_string(); }

std::string render_k(const KLaurent& a) { return a.to_string(); }

std::string render_witt(const WVec& a) {
    std::string s = "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += "; ";
        s += a[i].to_string();
    }
    return s + "]";
}

std::string render_symbol(const MilnorSym& s) {
    if (s.terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < s.terms.size(); ++i) {
        const SymTerm& tm = s.terms[i];
        long long c = tm.coeff;
        if (i == 0) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        long long mag = c < 0 ? -c : c;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += "{" + tm.a.to_string() + ", " + tm.b.to_string() + "}";
    }
    return out;
}

std::string render_form2(const Form2& x) {
    std::string c = x.c.to_string();
    if (x.c.terms().size() > 1) c = "(" + c + ")";
    return c + "*dlog t^dlog pi";
}

std::string render_formf(const FormF1& x) {
    std::string c = x.c.to_string();
    if (x.c.terms().size() > 1) c = "(" + c + ")";
    return c + "*dt";
}

}  // namespace tlf
