#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "tlf/asw.hpp"
#include "tlf/expr.hpp"

using namespace tlf;

namespace {

// random exact K element with a couple of terms
KLaurent rand_k(std::mt19937_64& rng, const Context& ctx) {
    KLaurent x = ctx.k_zero();
    int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) {
        int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(ctx.fq().q() - 1));
        int a = static_cast<int>(rng() % 9) - 4;
        int b = static_cast<int>(rng() % 9) - 4;
        x = x + ctx.k_mono(FqElem::from_index(ctx.fq(), c), a, b);
    }
    return x;
}

FLaurent rand_f(std::mt19937_64& rng, const Context& ctx) {
    FLaurent x = ctx.f_zero();
    int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) {
        int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(ctx.fq().q() - 1));
        int a = static_cast<int>(rng() % 9) - 4;
        x = x + ctx.f_mono(FqElem::from_index(ctx.fq(), c), a);
    }
    return x;
}

}  // namespace

TEST_CASE("scalar literals") {
    Context ctx{3, 2, 1, -16, 16, -16, 16, 1};

    CHECK(parse_fq(ctx, "0") == ctx.c(0));
    CHECK(parse_fq(ctx, "5") == ctx.c(2));
    CHECK(parse_fq(ctx, "-1") == ctx.c(-1));
    CHECK(parse_fq(ctx, "g") == ctx.cg());
    CHECK(parse_fq(ctx, "g^2") == ctx.cg() * ctx.cg());
    CHECK(parse_fq(ctx, "2*g^2+g+1") ==
          ctx.c(2) * ctx.cg().pow(2) + ctx.cg() + ctx.c(1));
    CHECK(parse_fq(ctx, "g^-1") == ctx.cg().inv());
    CHECK(parse_fq(ctx, "(1+g)*(1-g)") == ctx.c(1) - ctx.cg() * ctx.cg());
    CHECK(parse_fq(ctx, " 1 + g ") == ctx.c(1) + ctx.cg());

    // every element of F_9 round-trips through its rendering
    for (int i = 0; i < ctx.fq().q(); ++i) {
        FqElem x = FqElem::from_index(ctx.fq(), i);
        CHECK(parse_fq(ctx, x.to_string()) == x);
    }

    Context f2{2, 1, 1, -16, 16, -16, 16, 1};
    CHECK(parse_fq(f2, "1+1") == f2.c(0));
    CHECK_THROWS_AS(parse_fq(f2, "g"), ParseError);
}

TEST_CASE("t-series literals") {
    Context ctx{3, 2, 1, -16, 16, -16, 16, 1};

    CHECK(parse_f(ctx, "0").is_exact_zero());
    CHECK(parse_f(ctx, "1+t") == ctx.f_one() + ctx.t());
    CHECK(parse_f(ctx, "t^-2+2*t") == ctx.t(-2) + ctx.f_mono(ctx.c(2), 1));
    CHECK(parse_f(ctx, "(2*g+1)*t^3") ==
          ctx.f_mono(ctx.c(2) * ctx.cg() + ctx.c(1), 3));
    CHECK(parse_f(ctx, "t*t*t") == ctx.t(3));
    CHECK(parse_f(ctx, "-t") == ctx.f_zero() - ctx.t());
    CHECK(parse_f(ctx, "(1+t)*(1+t)") ==
          ctx.f_one() + ctx.f_mono(ctx.c(2), 1) + ctx.t(2));

    std::mt19937_64 rng(7);
    for (int it = 0; it < 60; ++it) {
        FLaurent x = rand_f(rng, ctx);
        CHECK(parse_f(ctx, render_f(x)) == x);
    }

    // pi has no meaning at the t-level
    CHECK_THROWS_AS(parse_f(ctx, "1+pi"), ParseError);
}

TEST_CASE("K-series literals") {
    Context ctx{2, 2, 2, -16, 16, -16, 16, 1};

    CHECK(parse_k(ctx, "pi^-1") == ctx.pi(-1));
    CHECK(parse_k(ctx, "t^-0*pi^-2") == ctx.pi(-2));
    CHECK(parse_k(ctx, "t^2") == ctx.kt(2));
    CHECK(parse_k(ctx, "g*t^-1*pi^3") == ctx.k_mono(ctx.cg(), -1, 3));
    CHECK(parse_k(ctx, "(1+t)*pi^2") ==
          ctx.k_of(ctx.f_one() + ctx.t(), 2));
    CHECK(parse_k(ctx, "(1+t)*pi^2+g*t^-1*pi^3") ==
          ctx.k_of(ctx.f_one() + ctx.t(), 2) + ctx.k_mono(ctx.cg(), -1, 3));
    CHECK(parse_k(ctx, "pi*pi") == ctx.pi(2));
    CHECK(parse_k(ctx, "1+pi") == ctx.k_one() + ctx.pi());

    std::mt19937_64 rng(11);
    for (int it = 0; it < 80; ++it) {
        KLaurent x = rand_k(rng, ctx);
        CHECK(parse_k(ctx, render_k(x)) == x);
    }

    Context f3{3, 1, 1, -16, 16, -16, 16, 1};
    std::mt19937_64 rng3(13);
    for (int it = 0; it < 40; ++it) {
        KLaurent x = rand_k(rng3, f3);
        CHECK(parse_k(f3, render_k(x)) == x);
    }
}

TEST_CASE("Witt vector literals") {
    Context ctx{2, 1, 1, -16, 16, -16, 16, 1};
    WVec a = parse_witt(ctx, "[t^-0*pi^-2]");
    REQUIRE(a.size() == 1);
    CHECK(a[0] == ctx.pi(-2));

    Context ctx3{2, 1, 3, -16, 16, -16, 16, 1};
    WVec b = parse_witt(ctx3, "[t; pi; 1+t*pi]");
    REQUIRE(b.size() == 3);
    CHECK(b[0] == ctx3.kt());
    CHECK(b[1] == ctx3.pi());
    CHECK(b[2] == ctx3.k_one() + ctx3.k_mono(ctx3.c(1), 1, 1));

    CHECK(parse_witt(ctx3, render_witt(b)) == b);

    // slot count must match m
    CHECK_THROWS_AS(parse_witt(ctx, "[t; pi]"), ParseError);
    CHECK_THROWS_AS(parse_witt(ctx3, "[t]"), ParseError);
    CHECK_THROWS_AS(parse_witt(ctx, "[]"), ParseError);
    CHECK_THROWS_AS(parse_witt(ctx, "t"), ParseError);
}

TEST_CASE("symbol literals") {
    Context ctx{2, 1, 1, -16, 16, -16, 16, 1};

    MilnorSym s = parse_symbol(ctx, "{t,pi}");
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms[0].coeff == 1);
    CHECK(s.terms[0].a == ctx.kt());
    CHECK(s.terms[0].b == ctx.pi());

    MilnorSym u = parse_symbol(ctx, "-{t,pi}+2*{pi,pi}-{1+pi,t^-1}");
    REQUIRE(u.terms.size() == 3);
    CHECK(u.terms[0].coeff == -1);
    CHECK(u.terms[1].coeff == 2);
    CHECK(u.terms[1].a == ctx.pi());
    CHECK(u.terms[2].coeff == -1);
    CHECK(u.terms[2].a == ctx.k_one() + ctx.pi());
    CHECK(u.terms[2].b == ctx.kt(-1));

    CHECK(parse_symbol(ctx, "0").terms.empty());
    CHECK(render_symbol(MilnorSym{}) == "0");

    MilnorSym rt = parse_symbol(ctx, render_symbol(u));
    REQUIRE(rt.terms.size() == u.terms.size());
    for (size_t i = 0; i < u.terms.size(); ++i) {
        CHECK(rt.terms[i].coeff == u.terms[i].coeff);
        CHECK(rt.terms[i].a == u.terms[i].a);
        CHECK(rt.terms[i].b == u.terms[i].b);
    }

    CHECK_THROWS_AS(parse_symbol(ctx, "{t,pi"), ParseError);
    CHECK_THROWS_AS(parse_symbol(ctx, "{t}"), ParseError);
}

TEST_CASE("form literals") {
    Context ctx{3, 1, 1, -16, 16, -16, 16, 1};

    // omega = dt ^ dpi has dlog-basis coefficient t*pi
    CHECK(parse_form2(ctx, "dt^dpi").c == ctx.kt() * ctx.pi());
    CHECK(parse_form2(ctx, "dlog t^dlog pi").c == ctx.k_one());
    CHECK(parse_form2(ctx, "dt^dlog pi").c == ctx.kt());
    CHECK(parse_form2(ctx, "5*dt^dlog pi").c == ctx.k_mono(ctx.c(2), 1, 0));
    CHECK(parse_form2(ctx, "t^-1*pi^-1*dt^dpi").c == ctx.k_one());
    CHECK(parse_form2(ctx, "(1+t)*dlog t^dlog pi").c ==
          ctx.k_one() + ctx.kt());

    std::mt19937_64 rng(17);
    for (int it = 0; it < 50; ++it) {
        Form2 x{rand_k(rng, ctx)};
        Form2 y = parse_form2(ctx, render_form2(x));
        CHECK(y.c == x.c);
    }

    CHECK(parse_formf(ctx, "dt").c == ctx.f_one());
    CHECK(parse_formf(ctx, "t^2*dt").c == ctx.t(2));
    CHECK(parse_formf(ctx, "(1+t)*dt").c == ctx.f_one() + ctx.t());
    for (int it = 0; it < 30; ++it) {
        FormF1 x{rand_f(rng, ctx)};
        CHECK(parse_formf(ctx, render_formf(x)).c == x.c);
    }

    CHECK_THROWS_AS(parse_form2(ctx, "t*pi"), ParseError);
    CHECK_THROWS_AS(parse_form2(ctx, "dt^dt"), ParseError);
    CHECK_THROWS_AS(parse_form2(ctx, "t dt^dpi"), ParseError);
    CHECK_THROWS_AS(parse_formf(ctx, "t^2"), ParseError);
}

TEST_CASE("rational function literals") {
    const FqCtx& f2 = FqCtx::get(2, 1);
    const FqCtx& f4 = FqCtx::get(2, 2);

    RatFun a = parse_ratfun(f2, "T");
    CHECK(a.num == poly_T(f2));
    CHECK(a.den == poly_one(f2));

    RatFun b = parse_ratfun(f2, "1+T");
    CHECK(b.num == poly_add(f2, poly_one(f2), poly_T(f2)));

    RatFun c = parse_ratfun(f2, "T^2+T");
    CHECK(c.num.degree() == 2);
    CHECK(c.num.coeff(f2, 0) == FqElem(f2, 0));
    CHECK(c.num.coeff(f2, 1) == FqElem(f2, 1));

    RatFun d = parse_ratfun(f2, "T/(T+1)");
    CHECK(d.num == poly_T(f2));
    CHECK(d.den == poly_add(f2, poly_T(f2), poly_one(f2)));

    RatFun e = parse_ratfun(f4, "(g+1)*T^2+g");
    CHECK(e.num.degree() == 2);
    CHECK(e.num.coeff(f4, 2) == FqElem::gen(f4) + FqElem(f4, 1));
    CHECK(e.num.coeff(f4, 0) == FqElem::gen(f4));

    // T - T collapses the denominator to zero
    CHECK_THROWS_AS(parse_ratfun(f2, "1/(T-T)"), ParseError);
    CHECK_THROWS_AS(parse_ratfun(f2, "1/0"), ParseError);
    CHECK_THROWS_AS(parse_ratfun(f2, "T^-1"), ParseError);
    CHECK_THROWS_AS(parse_ratfun(f2, "t"), ParseError);
}

TEST_CASE("parse errors stay usage errors") {
    Context ctx{2, 1, 1, -16, 16, -16, 16, 1};

    const char* bad[] = {
        "t^^2", "pi^", "t +", "(1+t", "1+t)", "@", "t^12345678901",
        "t^99999", "", "*t", "t**2",
    };
    for (const char* s : bad) {
        CHECK_THROWS_AS(parse_k(ctx, s), ParseError);
        CHECK_THROWS_AS(parse_k(ctx, s), std::runtime_error);
    }

    // and never a DomainError
    for (const char* s : bad) {
        bool domain = false;
        try {
            parse_k(ctx, s);
        } catch (const DomainError&) {
            domain = true;
        } catch (...) {
        }
        CHECK(!domain);
    }
}
