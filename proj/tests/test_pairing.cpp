#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tlf/pairing.hpp"
#include "tlf/residue.hpp"

using namespace tlf;

namespace {

KLaurent rand_elt(std::mt19937_64& rng, const Context& ctx, int spread, int terms) {
    KLaurent x = ctx.k_zero();
    for (int k = 0; k < terms; ++k) {
        int i = static_cast<int>(rng() % (2 * spread + 1)) - spread;
        int j = static_cast<int>(rng() % (2 * spread + 1)) - spread;
        int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(ctx.fq().q() - 1));
        x = x + ctx.k_mono(FqElem::from_index(ctx.fq(), c), i, j);
    }
    return x;
}

// random form certified in twist >= n+1
Form2 rand_form(std::mt19937_64& rng, const Context& ctx, long long n, int terms) {
    KLaurent c = ctx.k_zero();
    for (int k = 0; k < terms; ++k) {
        int i = static_cast<int>(rng() % 7) - 3;
        int j = (int)n + 1 + static_cast<int>(rng() % 4);
        int cf = 1 + static_cast<int>(rng() % static_cast<unsigned>(ctx.fq().q() - 1));
        c = c + ctx.k_mono(FqElem::from_index(ctx.fq(), cf), i, j);
    }
    return Form2{c};
}

} // namespace

TEST_CASE("local duality pairing values") {
    Context ctx{2, 1, 1, -16, 16, -16, 16, 1};

    // t^{-1} pi^{-2} against pi^2 dt^dlog pi at n = 1
    Form2 eta{ctx.k_mono(ctx.c(1), 1, 2)}; // omega'-coefficient t pi^2
    CHECK(dual_pair(ctx, ctx.k_mono(ctx.c(1), -1, -2), 1, eta) == 1);

    // representatives inside A(n) pair to zero
    CHECK(dual_pair(ctx, ctx.pi(-1), 1, eta) == 0);
    CHECK(dual_pair(ctx, ctx.k_one(), 1, eta) == 0);
    CHECK(dual_pair(ctx, ctx.kt(3), 1, eta) == 0);

    // no t^{-1} extraction: pi^{-(n+1)} against pi^{n+1} t dt^dlog pi
    for (long long n = 0; n <= 2; ++n) {
        Form2 m{ctx.k_mono(ctx.c(1), 2, (int)n + 1)}; // t * (t pi^{n+1}) in omega'
        CHECK(dual_pair(ctx, ctx.pi((int)-(n + 1)), n, m) == 0);
    }

    // twist precondition is enforced
    Form2 shallow{ctx.k_mono(ctx.c(1), 1, 1)};
    CHECK_THROWS_AS(dual_pair(ctx, ctx.pi(-2), 1, shallow), TwistViolation);

    // representative independence and bi-additivity
    std::mt19937_64 rng(23);
    for (int p : {2, 3}) {
        Context c{p, 2, 1, -16, 16, -16, 16, 1};
        for (int it = 0; it < 60; ++it) {
            long long n = (long long)(rng() % 3);
            KLaurent f = rand_elt(rng, c, 4, 2);
            Form2 eta2 = rand_form(rng, c, n, 2);
            // shift by an element of A(n) = pi^{-n} A
            KLaurent sh = rand_elt(rng, c, 3, 2);
            if (!sh.is_exact_zero() && sh.valuation() < 0) sh = sh * c.pi(-sh.valuation());
            sh = sh * c.pi((int)-n);
            CHECK(dual_pair(c, f + sh, n, eta2) == dual_pair(c, f, n, eta2));

            KLaurent f2 = rand_elt(rng, c, 4, 2);
            int lhs = dual_pair(c, f + f2, n, eta2);
            CHECK(lhs == (dual_pair(c, f, n, eta2) + dual_pair(c, f2, n, eta2)) % p);
            Form2 eta3 = rand_form(rng, c, n, 2);
            int both = dual_pair(c, f, n, eta2 + eta3);
            CHECK(both == (dual_pair(c, f, n, eta2) + dual_pair(c, f, n, eta3)) % p);
        }
    }
}

TEST_CASE("reciprocity pairing values") {
    for (int p : {2, 3}) {
        Context ctx{p, 1, 1, -16, 16, -16, 16, 1};
        MilnorSym tpi = MilnorSym::symbol(ctx.kt(1), ctx.pi());
        CHECK(rec_pair(ctx, ctx.k_one(), tpi) == 1);
        CHECK(rec_pair(ctx, ctx.k_zero(), tpi) == 0);

        // invariance leg: (b - b^p) pairs to zero
        std::mt19937_64 rng(29u + (unsigned)p);
        for (int it = 0; it < 60; ++it) {
            KLaurent b = rand_elt(rng, ctx, 3, 2);
            KLaurent tr = b - b.pth_power();
            // certified units: 1 + (strictly positive pi part) and a monomial
            KLaurent u1 = ctx.k_one() + rand_elt(rng, ctx, 2, 1) * ctx.pi(3);
            KLaurent u2 = ctx.k_one() + rand_elt(rng, ctx, 2, 1) * ctx.pi(4);
            MilnorSym s = MilnorSym::symbol(u1, ctx.pi()) +
                          MilnorSym::symbol(ctx.kt(1), u2);
            CHECK(rec_pair(ctx, tr, s) == 0);
        }
    }

    // CharacterRep front end insists on length 1
    Context ctx{2, 1, 1, -16, 16, -16, 16, 1};
    CharacterRep ch{{ctx.pi(-1)}, true};
    CHECK(rec_pair(ctx, ch, MilnorSym::symbol(ctx.kt(1), ctx.pi())) == 0);
    CharacterRep bad{{ctx.pi(-1), ctx.k_zero()}, false};
    CHECK_THROWS_AS(rec_pair(ctx, bad, MilnorSym::symbol(ctx.kt(1), ctx.pi())),
                    LengthMismatch);
}

TEST_CASE("gram matrices: minimal examples") {
    Context ctx{2, 1, 1, -16, 16, -16, 16, 1};

    // single monomial pair: 1x1 identity
    WindowSpec rows{0, 1, -1, 0, 0};
    WindowSpec cols{-1, 0, 1, 2, 0};
    Gram g = gram_matrix(ctx, rows, cols, Which::dual);
    REQUIRE(g.mat.n_rows == 1);
    REQUIRE(g.mat.n_cols == 1);
    CHECK(g.mat.at(0, 0) == 1);
    CHECK(g.rank == 1);

    // empty column window
    WindowSpec none{0, 0, 1, 2, 0};
    Gram ge = gram_matrix(ctx, rows, none, Which::dual);
    CHECK(ge.mat.n_cols == 0);
    CHECK(ge.rank == 0);

    // rec rows spanning (1-F)-translates only: zero matrix
    std::mt19937_64 rng(31);
    std::vector<KLaurent> trs;
    for (int k = 0; k < 4; ++k) {
        KLaurent b = rand_elt(rng, ctx, 3, 2);
        trs.push_back(b - b.pth_power());
    }
    auto syms = window_symbols(ctx, WindowSpec{0, 2, 1, 3, 0}, 1);
    Gram gz = gram_rec(ctx, trs, syms);
    CHECK(gz.rank == 0);
    for (int i = 0; i < gz.mat.n_rows; ++i)
        for (int j = 0; j < gz.mat.n_cols; ++j) CHECK(gz.mat.at(i, j) == 0);
}

TEST_CASE("mirrored dual windows are perfect") {
    for (int p : {2, 3})
        for (int e = 1; e <= 2; ++e) {
            Context ctx{p, e, 1, -16, 16, -16, 16, 1};
            for (long long n = 0; n <= 2; ++n)
                for (int wd = 1; wd <= 3; ++wd) {
                    int ta = -1;
                    WindowSpec rows{ta, ta + wd, (int)-(n + wd), (int)-n, n};
                    WindowSpec cols{-ta - wd, -ta, (int)n + 1, (int)(n + 1 + wd), n};
                    Gram g = gram_matrix(ctx, rows, cols, Which::dual);
                    REQUIRE(g.mat.n_rows == e * wd * wd);
                    REQUIRE(g.mat.n_cols == e * wd * wd);
                    CHECK(g.rank == e * wd * wd);
                }
        }
}

TEST_CASE("filtration orthogonality and window separation") {
    // p = 2, e = 1, n = 1: hand-checked windows
    Context ctx{2, 1, 1, -16, 16, -16, 16, 1};
    const int n = 1;
    WindowSpec colsW{0, 2, n + 1, n + 3, n};
    auto syms = window_symbols(ctx, colsW, n + 1);
    REQUIRE(syms.size() == 8);

    // orthogonality: conductor <= n characters kill fil_{n+1} symbols
    Asw asw(ctx);
    std::vector<KLaurent> low = {ctx.k_one(), ctx.pi(-1), ctx.k_mono(ctx.c(1), 2, -1),
                                 ctx.k_mono(ctx.c(1), -2, -1),
                                 // deep representative of a conductor-1 class
                                 ctx.k_mono(ctx.c(1), -2, -2),
                                 ctx.k_mono(ctx.c(1), -4, -4)};
    for (const auto& a : low) {
        if (!a.is_exact_zero()) REQUIRE(asw.conductor({a}) <= n);
        for (const auto& s : syms) CHECK(rec_pair(ctx, a, s) == 0);
    }

    // separation: conductor > n characters see every window class
    std::vector<KLaurent> chars;
    for (int j = -(n + 2); j <= -(n + 1); ++j)
        for (int a = -1; a <= 0; ++a) {
            KLaurent c = ctx.k_mono(ctx.c(1), a, j);
            if (asw.conductor({c}) > n) chars.push_back(c);
        }
    REQUIRE(chars.size() == 3);
    Gram g = gram_rec(ctx, chars, syms);
    std::vector<Form2> dls;
    for (const auto& s : syms) dls.push_back(sym_dlog(ctx, s));
    int span = window_span_rank(ctx, dls, colsW);
    CHECK(span == 3);
    CHECK(g.rank == span);
}

TEST_CASE("varpi window ranks") {
    Context ctx{2, 1, 1, -16, 16, -16, 16, 1};

    // the fil_1 span is the whole thing, so the quotient rank is zero
    for (int width = 1; width <= 4; ++width) {
        WindowSpec w{0, width, 1, 5, 0};
        CHECK(varpi_window_rank(ctx, 1, w) == 0);
    }

    // strict growth in the t-width at n = 2
    int prev = -1;
    for (int width = 1; width <= 4; ++width) {
        WindowSpec w{0, width, 1, 5, 0};
        int r = varpi_window_rank(ctx, 2, w);
        CHECK(r > prev);
        prev = r;
    }
    CHECK(prev >= 4);

    // degenerate inputs, and monotonicity in the filtration depth
    CHECK(varpi_window_rank(ctx, 2, WindowSpec{0, 0, 1, 5, 0}) == 0);
    CHECK(varpi_window_rank(ctx, 2, WindowSpec{0, 2, 3, 3, 0}) == 0);
    CHECK_THROWS_AS(varpi_window_rank(ctx, 0, WindowSpec{0, 1, 1, 2, 0}), DomainError);
    WindowSpec wm{0, 3, 1, 5, 0};
    CHECK(varpi_window_rank(ctx, 3, wm) >= varpi_window_rank(ctx, 2, wm));

    // e = 2 grows at least as fast
    Context c4{2, 2, 1, -16, 16, -16, 16, 1};
    int r1 = varpi_window_rank(c4, 2, WindowSpec{0, 1, 1, 5, 0});
    int r2 = varpi_window_rank(c4, 2, WindowSpec{0, 2, 1, 5, 0});
    CHECK(r1 >= 1);
    CHECK(r2 > r1);
}
