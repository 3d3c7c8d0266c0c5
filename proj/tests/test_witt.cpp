#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "tlf/context.hpp"
#include "tlf/witt.hpp"
#include "tlf/witt_poly.hpp"

using namespace tlf;

namespace {

// independent ghost map over Z -- the oracle the solved polynomials must hit
std::vector<BigInt> ghost_int(int p, const std::vector<BigInt>& a) {
    std::vector<BigInt> w;
    for (size_t n = 0; n < a.size(); ++n) {
        BigInt acc = 0;
        BigInt pi = 1;
        for (size_t i = 0; i <= n; ++i) {
            unsigned e = 1;
            for (size_t j = 0; j < n - i; ++j) e *= static_cast<unsigned>(p);
            acc += pi * boost::multiprecision::pow(a[i], e);
            pi *= p;
        }
        w.push_back(acc);
    }
    return w;
}

std::vector<BigInt> rand_vec(std::mt19937_64& rng, int m) {
    std::vector<BigInt> v;
    for (int i = 0; i < m; ++i)
        v.push_back(BigInt(static_cast<long long>(rng() % 201) - 100));
    return v;
}

std::vector<BigInt> eval_fam_int(const std::vector<MPoly>& fam,
                                 const std::vector<BigInt>& vars) {
    std::vector<BigInt> r;
    for (const auto& f : fam) r.push_back(f.eval_int(vars));
    return r;
}

std::vector<BigInt> concat(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

bool same_poly(const MPoly& a, const MPoly& b) { return a.ts == b.ts; }

FqElem rand_fq(std::mt19937_64& rng, const FqCtx& F) {
    return FqElem::from_index(F, static_cast<int>(rng() % F.q()));
}

std::vector<FqElem> rand_fq_vec(std::mt19937_64& rng, const FqCtx& F, int len) {
    std::vector<FqElem> v;
    for (int i = 0; i < len; ++i) v.push_back(rand_fq(rng, F));
    return v;
}

} // namespace

TEST_CASE("integer ghost oracle certifies the solved families") {
    std::mt19937_64 rng(0xC0FFEEu);
    struct Cfg {
        int p, m_max;
    };
    for (Cfg cfg : {Cfg{2, 4}, Cfg{3, 4}, Cfg{5, 3}}) {
        for (int m = 1; m <= cfg.m_max; ++m) {
            const auto& T = witt_polys(cfg.p, m);
            const int iters = m <= 2 ? 12 : 6;
            for (int it = 0; it < iters; ++it) {
                auto a = rand_vec(rng, m);
                auto b = rand_vec(rng, m);
                auto vars2 = concat(a, b);
                auto wa = ghost_int(cfg.p, a);
                auto wb = ghost_int(cfg.p, b);

                auto s = eval_fam_int(T.sum_z, vars2);
                auto d = eval_fam_int(T.diff_z, vars2);
                auto pr = eval_fam_int(T.prod_z, vars2);
                auto ng = eval_fam_int(T.neg_z, a);
                auto om = eval_fam_int(T.one_minus_frob_z, a);

                std::vector<BigInt> ap; // componentwise p-th power of a
                for (const auto& x : a)
                    ap.push_back(boost::multiprecision::pow(x, static_cast<unsigned>(cfg.p)));
                auto wap = ghost_int(cfg.p, ap);

                auto ws = ghost_int(cfg.p, s);
                auto wd = ghost_int(cfg.p, d);
                auto wp = ghost_int(cfg.p, pr);
                auto wn = ghost_int(cfg.p, ng);
                auto wo = ghost_int(cfg.p, om);
                for (int n = 0; n < m; ++n) {
                    CHECK(ws[n] == wa[n] + wb[n]);
                    CHECK(wd[n] == wa[n] - wb[n]);
                    CHECK(wp[n] == wa[n] * wb[n]);
                    CHECK(wn[n] == -wa[n]);
                    CHECK(wo[n] == wa[n] - wap[n]);
                }
            }
        }
    }
}

TEST_CASE("frozen integer polynomials at small p, m") {
    // p = 2, m = 2; variables x0, x1, y0, y1 at indices 0, 1, 2, 3
    const auto& T2 = witt_polys(2, 2);
    auto x0 = MPoly::variable(4, 0);
    auto x1 = MPoly::variable(4, 1);
    auto y0 = MPoly::variable(4, 2);
    auto y1 = MPoly::variable(4, 3);

    CHECK(same_poly(T2.sum_z[0], x0 + y0));
    CHECK(same_poly(T2.sum_z[1], x1 + y1 - x0 * y0));
    CHECK(same_poly(T2.prod_z[0], x0 * y0));
    CHECK(same_poly(T2.prod_z[1],
                    x0 * x0 * y1 + x1 * y0 * y0 + (x1 * y1).scaled(BigInt(2))));

    auto u0 = MPoly::variable(2, 0);
    auto u1 = MPoly::variable(2, 1);
    CHECK(same_poly(T2.neg_z[0], u0.scaled(BigInt(-1))));
    CHECK(same_poly(T2.neg_z[1], (u1 + u0 * u0).scaled(BigInt(-1))));
    // x - F(x) with y := x^2 folded in
    CHECK(same_poly(T2.one_minus_frob_z[0], u0 - u0 * u0));
    CHECK(same_poly(T2.one_minus_frob_z[1],
                    u1 - u1 * u1 + u0.pow(3) - u0.pow(4)));

    // p = 3, m = 2
    const auto& T3 = witt_polys(3, 2);
    CHECK(same_poly(T3.sum_z[1], x1 + y1 - x0 * x0 * y0 - x0 * y0 * y0));
}

TEST_CASE("characteristic-2 closed forms on field entries") {
    const auto& F4 = FqCtx::get(2, 2);
    WittOps<FqElem> W(2, 2, ProtoRingCtx<FqElem>{FqElem(F4, 0)});
    for (int ia = 0; ia < 16; ++ia) {
        for (int ib = 0; ib < 16; ++ib) {
            FqElem a0 = FqElem::from_index(F4, ia % 4), a1 = FqElem::from_index(F4, ia / 4);
            FqElem b0 = FqElem::from_index(F4, ib % 4), b1 = FqElem::from_index(F4, ib / 4);
            std::vector<FqElem> a{a0, a1}, b{b0, b1};

            auto s = W.add(a, b);
            CHECK(s[0] == a0 + b0);
            CHECK(s[1] == a1 + b1 + a0 * b0);

            auto pr = W.mul(a, b);
            CHECK(pr[0] == a0 * b0);
            CHECK(pr[1] == a0 * a0 * b1 + a1 * b0 * b0);

            auto n = W.neg(a);
            CHECK(n[0] == a0);
            CHECK(n[1] == a1 + a0 * a0);

            auto om = W.one_minus_frob(b);
            CHECK(om[0] == b0 + b0 * b0);
            CHECK(om[1] == b1 + b1 * b1 + b0.pow(3) + b0.pow(4));
        }
    }
    // Teichmueller doubling: [1] + [1] lands entirely in the deep slot
    auto two = W.add(W.teich(FqElem(F4, 1), 2), W.teich(FqElem(F4, 1), 2));
    CHECK(two[0] == FqElem(F4, 0));
    CHECK(two[1] == FqElem(F4, 1));
}

TEST_CASE("ring identities over residue fields") {
    std::mt19937_64 rng(0xFEEDu);
    struct Cfg {
        int p, e;
    };
    for (Cfg cfg : {Cfg{2, 2}, Cfg{3, 1}, Cfg{5, 1}}) {
        const auto& F = FqCtx::get(cfg.p, cfg.e);
        for (int m = 2; m <= 3; ++m) {
            WittOps<FqElem> W(cfg.p, m, ProtoRingCtx<FqElem>{FqElem(F, 0)});
            for (int it = 0; it < 20; ++it) {
                auto a = rand_fq_vec(rng, F, m);
                auto b = rand_fq_vec(rng, F, m);
                auto c = rand_fq_vec(rng, F, m);

                CHECK(W.add(a, b) == W.add(b, a));
                CHECK(W.add(W.add(a, b), c) == W.add(a, W.add(b, c)));
                CHECK(W.mul(a, b) == W.mul(b, a));
                CHECK(W.mul(W.mul(a, b), c) == W.mul(a, W.mul(b, c)));
                CHECK(W.mul(a, W.add(b, c)) == W.add(W.mul(a, b), W.mul(a, c)));
                CHECK(W.sub(W.add(a, b), b) == a);
                CHECK(W.add(a, W.neg(a)) == W.zero(m));

                // Frobenius is a ring map and one_minus_frob matches a - F(a)
                CHECK(W.frob(W.add(a, b)) == W.add(W.frob(a), W.frob(b)));
                CHECK(W.frob(W.mul(a, b)) == W.mul(W.frob(a), W.frob(b)));
                CHECK(W.one_minus_frob(a) == W.sub(a, W.frob(a)));
                CHECK(W.one_minus_frob(W.add(a, b)) ==
                      W.add(W.one_minus_frob(a), W.one_minus_frob(b)));

                // p * x = V(F(x)) in characteristic p
                auto px = a;
                for (int i = 1; i < cfg.p; ++i) px = W.add(px, a);
                CHECK(px == W.vshift(W.rdrop(W.frob(a))));

                // V(x) y = V(x F(y)) with x one slot shorter
                auto xs = rand_fq_vec(rng, F, m - 1);
                CHECK(W.mul(W.vshift(xs), a) ==
                      W.vshift(W.mul(xs, W.rdrop(W.frob(a)))));

                // R V = V R
                CHECK(W.rdrop(W.vshift(a)) == W.vshift(W.rdrop(a)));

                // Teichmueller is multiplicative; [f] scaling agrees with it
                auto fa = rand_fq(rng, F);
                auto fb = rand_fq(rng, F);
                CHECK(W.mul(W.teich(fa, m), W.teich(fb, m)) == W.teich(fa * fb, m));
                CHECK(W.teich_scale(fa, a) == W.mul(W.teich(fa, m), a));
            }
        }
    }
}

TEST_CASE("vectors with two-level series entries") {
    Context ctx{2, 1, 2, -8, 8, -8, 8, 1};
    WittOps<KLaurent> W(2, 2, ProtoRingCtx<KLaurent>{ctx.k_zero()});

    KLaurent a0 = ctx.k_mono(ctx.c(1), -1, -2) + ctx.k_mono(ctx.c(1), 1, 1);
    KLaurent a1 = ctx.k_mono(ctx.c(1), 3, -1);
    KLaurent b0 = ctx.k_mono(ctx.c(1), 0, -3);
    KLaurent b1 = ctx.k_mono(ctx.c(1), -2, 0) + ctx.k_mono(ctx.c(1), 0, 2);
    std::vector<KLaurent> a{a0, a1}, b{b0, b1};

    CHECK(W.sub(W.add(a, b), b) == a);
    CHECK(W.one_minus_frob(a) == W.sub(a, W.frob(a)));
    CHECK(W.mul(a, W.add(b, b)) == W.add(W.mul(a, b), W.mul(a, b)));
    CHECK(W.add(a, W.neg(a)) == W.zero(2));

    auto s = W.add(a, b);
    CHECK(s[0] == a0 + b0);
    CHECK(s[1] == a1 + b1 + a0 * b0);

    Context c3{3, 1, 2, -8, 8, -8, 8, 1};
    WittOps<KLaurent> W3(3, 2, ProtoRingCtx<KLaurent>{c3.k_zero()});
    KLaurent u = c3.k_mono(c3.c(2), 1, -3);
    KLaurent v = c3.k_mono(c3.c(1), 0, -1) + c3.k_mono(c3.c(2), 2, 0);
    std::vector<KLaurent> x{u, v}, y{v, u};
    CHECK(W3.sub(W3.add(x, y), y) == x);
    CHECK(W3.one_minus_frob(x) == W3.sub(x, W3.frob(x)));
    CHECK(W3.rdrop(W3.vshift(x)) == W3.vshift(W3.rdrop(x)));
}
