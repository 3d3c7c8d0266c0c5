#include "tlf/selftest.hpp"

#include <random>
#include <string>
#include <vector>

#include "tlf/asw.hpp"
#include "tlf/expr.hpp"
#include "tlf/forms.hpp"
#include "tlf/milnor.hpp"
#include "tlf/pairing.hpp"
#include "tlf/residue.hpp"
#include "tlf/weil.hpp"
#include "tlf/witt.hpp"

namespace tlf {
namespace {

// independent ghost map over Z
std::vector<BigInt> ghost_int(int p, const std::vector<BigInt>& a) {
    std::vector<BigInt> w;
    for (size_t n = 0; n < a.size(); ++n) {
        BigInt acc = 0;
        BigInt pk = 1;
        for (size_t i = 0; i <= n; ++i) {
            BigInt term = a[i];
            for (size_t j = 0; j < n - i; ++j) {
                BigInt q = term;
                for (int r = 1; r < p; ++r) q *= term;
                term = q;
            }
            acc += pk * term;
            pk *= p;
        }
        w.push_back(acc);
    }
    return w;
}

std::vector<BigInt> eval_fam(const std::vector<MPoly>& fam, const std::vector<BigInt>& vars) {
    std::vector<BigInt> r;
    r.reserve(fam.size());
    for (const auto& f : fam) r.push_back(f.eval_int(vars));
    return r;
}

KLaurent rand_elt(std::mt19937_64& rng, const Context& ctx, int st, int sp) {
    int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(ctx.fq().q() - 1));
    int a = static_cast<int>(rng() % (2 * st + 1)) - st;
    int b = static_cast<int>(rng() % (2 * sp + 1)) - sp;
    return ctx.k_mono(FqElem::from_index(ctx.fq(), c), a, b);
}

bool obs_zero_k(const KLaurent& x) { return x.zero_below() && !x.certainly_nonzero(); }

bool obs_zero_f(const FLaurent& x) { return x.zero_below() && !x.certainly_nonzero(); }

bool witt_ghost_oracle(std::mt19937_64& rng) {
    for (int p : {2, 3}) {
        const int m = 3;
        const auto& T = witt_polys(p, m);
        for (int it = 0; it < 40; ++it) {
            std::vector<BigInt> a, b;
            for (int i = 0; i < m; ++i) {
                a.push_back(BigInt(static_cast<long long>(rng() % 41) - 20));
                b.push_back(BigInt(static_cast<long long>(rng() % 41) - 20));
            }
            std::vector<BigInt> ab = a;
            ab.insert(ab.end(), b.begin(), b.end());
            auto wa = ghost_int(p, a);
            auto wb = ghost_int(p, b);
            auto ws = ghost_int(p, eval_fam(T.sum_z, ab));
            auto wp = ghost_int(p, eval_fam(T.prod_z, ab));
            for (int i = 0; i < m; ++i) {
                if (ws[i] != wa[i] + wb[i]) return false;
                if (wp[i] != wa[i] * wb[i]) return false;
            }
        }
    }
    return true;
}

bool witt_char_p_identities(std::mt19937_64& rng) {
    for (int p : {2, 3}) {
        Context ctx{p, 1, 3, -16, 16, -16, 16, 1};
        WittOps<KLaurent> W(p, 3, ProtoRingCtx<KLaurent>{ctx.k_zero()});
        for (int it = 0; it < 10; ++it) {
            std::vector<KLaurent> x, y;
            for (int i = 0; i < 2; ++i) x.push_back(rand_elt(rng, ctx, 2, 2));
            for (int i = 0; i < 3; ++i) y.push_back(rand_elt(rng, ctx, 2, 2));

            // F(V(x)) = p * x
            auto fv = W.rdrop(W.frob(W.vshift(x)));
            auto px = W.zero(2);
            for (int i = 0; i < p; ++i) px = W.add(px, x);
            if (!(fv == px)) return false;

            // V(x) y = V(x F(y))
            auto lhs = W.mul(W.vshift(x), y);
            auto rhs = W.vshift(W.mul(x, W.rdrop(W.frob(y))));
            if (!(lhs == rhs)) return false;

            // R(V(y)) = V(R(y))
            if (!(W.rdrop(W.vshift(y)) == W.vshift(W.rdrop(y)))) return false;
        }
    }
    return true;
}

bool asw_reduction(std::mt19937_64& rng) {
    // the worked example: [pi^-2] reduces to pi^-1 with conductor 1
    Context c1{2, 1, 1, -16, 16, -16, 16, 1};
    Asw asw1(c1);
    WVec a{c1.pi(-2)};
    if (asw1.conductor(a) != 1) return false;
    if (render_witt(asw1.reduce(a).reduced) != "[pi^-1]") return false;

    // conductor is invariant under (1 - F) translates
    Context ctx{2, 1, 2, -16, 16, -16, 16, 1};
    Asw asw(ctx);
    WittOps<KLaurent> W(2, 2, ProtoRingCtx<KLaurent>{ctx.k_zero()});
    for (int it = 0; it < 6; ++it) {
        WVec v{rand_elt(rng, ctx, 2, 2), rand_elt(rng, ctx, 2, 2)};
        WVec b{rand_elt(rng, ctx, 1, 1), rand_elt(rng, ctx, 1, 1)};
        if (asw.conductor(W.add(v, W.one_minus_frob(b))) != asw.conductor(v)) return false;
    }
    return true;
}

bool cartier_identities(std::mt19937_64& rng) {
    for (int p : {2, 3}) {
        Context ctx{p, 1, 1, -16, 16, -16, 16, 1};
        for (int it = 0; it < 10; ++it) {
            Form2 al = form2_log(rand_elt(rng, ctx, 3, 3));
            Form2 be = form2_log(rand_elt(rng, ctx, 3, 2));
            KLaurent x = rand_elt(rng, ctx, 2, 2);
            if (!(cartier2(ctx, al + be) == cartier2(ctx, al) + cartier2(ctx, be))) return false;
            if (!(cartier2(ctx, scale(x.pth_power(), al)) == scale(x, cartier2(ctx, al))))
                return false;
            Form1 b1{rand_elt(rng, ctx, 3, 2), rand_elt(rng, ctx, 3, 2), B1::plain};
            if (!cartier2(ctx, d(ctx, b1)).is_exact_zero()) return false;
        }
    }
    return true;
}

bool residue_values() {
    for (int p : {2, 3})
        for (int e = 1; e <= 2; ++e) {
            Context ctx{p, e, 1, -16, 16, -16, 16, 1};
            for (int a = -2; a <= 2; ++a)
                for (int b = -2; b <= 2; ++b) {
                    int r = Res_K(ctx, form2_log(ctx.k_mono(ctx.c(1), a, b)));
                    int want = (a == 0 && b == 0) ? e % p : 0;
                    if (r != want) return false;
                }
        }
    return true;
}

bool dual_gram_perfect() {
    for (int p : {2, 3}) {
        Context ctx{p, 1, 1, -16, 16, -16, 16, 1};
        const long long n = 1;
        const int wd = 2;
        WindowSpec rows{-1, -1 + wd, static_cast<int>(-(n + wd)), static_cast<int>(-n), n};
        WindowSpec cols{1 - wd, 1, static_cast<int>(n + 1), static_cast<int>(n + 1 + wd), n};
        Gram g = gram_matrix(ctx, rows, cols, Which::dual);
        if (g.rank != wd * wd) return false;
    }
    return true;
}

bool rec_invariance(std::mt19937_64& rng) {
    Context ctx{2, 1, 1, -16, 16, -16, 16, 1};
    for (int it = 0; it < 8; ++it) {
        KLaurent b = rand_elt(rng, ctx, 2, 2);
        KLaurent u1 = ctx.k_one() + rand_elt(rng, ctx, 2, 0) * ctx.pi(3);
        KLaurent u2 = ctx.k_one() + rand_elt(rng, ctx, 2, 0) * ctx.pi(2);
        MilnorSym s = MilnorSym::symbol(u1, u2);
        if (rec_pair(ctx, b - b.pth_power(), s) != 0) return false;
    }
    return true;
}

bool varpi_growth() {
    Context ctx{2, 1, 1, -16, 16, -16, 16, 1};
    int prev = -1;
    for (int width = 1; width <= 3; ++width) {
        WindowSpec w{0, width, 1, 5, 0};
        if (varpi_window_rank(ctx, 1, w) != 0) return false;
        int r = varpi_window_rank(ctx, 2, w);
        if (r <= prev) return false;
        prev = r;
    }
    return true;
}

bool tame_split(std::mt19937_64& rng) {
    Context ctx{2, 1, 1, -16, 16, -16, 16, 1};
    for (int it = 0; it < 10; ++it) {
        KLaurent u1 = ctx.k_one() + rand_elt(rng, ctx, 2, 0) * ctx.pi(1 + static_cast<int>(rng() % 2));
        KLaurent b = rand_elt(rng, ctx, 2, 2);
        MilnorSym s = MilnorSym::symbol(u1, b);
        FLaurent tv = tame(ctx, split_phi(ctx, s));
        if (!obs_zero_f(tv - ctx.f_one())) return false;
    }
    return true;
}

bool steinberg_dlog(std::mt19937_64& rng) {
    Context ctx{2, 1, 1, -16, 16, -16, 16, 1};
    for (int it = 0; it < 8; ++it) {
        KLaurent a = rand_elt(rng, ctx, 2, 2);
        if (a.valuation() == 0) a = a * ctx.pi(1);
        Form2 w = sym_dlog(ctx, MilnorSym::symbol(a, ctx.k_one() - a));
        if (!obs_zero_k(w.c)) return false;
    }
    return true;
}

bool weil_products(std::mt19937_64& rng) {
    for (int pe : {21, 31}) {
        const FqCtx& fq = FqCtx::get(pe / 10, pe % 10);
        if (!weil_check(fq, RatFun{poly_T(fq), poly_one(fq)},
                        RatFun{poly_add(fq, poly_one(fq), poly_T(fq)), poly_one(fq)})
                 .ok)
            return false;
        for (int it = 0; it < 8; ++it) {
            auto rand_poly = [&](int maxdeg) {
                std::vector<FqElem> cs;
                int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(maxdeg));
                for (int i = 0; i <= d; ++i)
                    cs.push_back(FqElem::from_index(fq, static_cast<int>(rng() % static_cast<unsigned>(fq.q()))));
                cs.push_back(FqElem(fq, 1)); // keep it nonzero
                return poly_from(std::move(cs));
            };
            RatFun f{rand_poly(3), rand_poly(2)};
            RatFun g{rand_poly(3), rand_poly(2)};
            if (!weil_check(fq, f, g).ok) return false;
        }
    }
    return true;
}

bool expr_roundtrip(std::mt19937_64& rng) {
    Context ctx{2, 2, 2, -16, 16, -16, 16, 1};
    for (int it = 0; it < 10; ++it) {
        KLaurent x = rand_elt(rng, ctx, 3, 3) + rand_elt(rng, ctx, 3, 3);
        if (!(parse_k(ctx, render_k(x)) == x)) return false;
        WVec v{x, rand_elt(rng, ctx, 2, 2)};
        if (!(parse_witt(ctx, render_witt(v)) == v)) return false;
    }
    MilnorSym s = MilnorSym::symbol(ctx.kt(), ctx.pi()).scaled(-2);
    MilnorSym r = parse_symbol(ctx, render_symbol(s));
    return r.terms.size() == 1 && r.terms[0].coeff == -2;
}

} // namespace

Json selftest_json(const Context& ctx) {
    std::mt19937_64 rng(ctx.seed);
    Json checks = Json::array();
    int passed = 0, failed = 0;
    auto run = [&](const std::string& name, bool ok) {
        Json c;
        c["name"] = name;
        c["ok"] = ok;
        checks.push_back(std::move(c));
        (ok ? passed : failed)++;
    };

    run("witt-ghost-oracle", witt_ghost_oracle(rng));
    run("witt-char-p-identities", witt_char_p_identities(rng));
    run("asw-reduction", asw_reduction(rng));
    run("cartier-identities", cartier_identities(rng));
    run("residue-values", residue_values());
    run("dual-gram-perfect", dual_gram_perfect());
    run("rec-invariance", rec_invariance(rng));
    run("varpi-growth", varpi_growth());
    run("tame-split", tame_split(rng));
    run("steinberg-dlog", steinberg_dlog(rng));
    run("weil-products", weil_products(rng));
    run("expr-roundtrip", expr_roundtrip(rng));

    Json doc;
    doc["checks"] = std::move(checks);
    doc["passed"] = passed;
    doc["failed"] = failed;
    doc["ok"] = failed == 0;
    return doc;
}

} // namespace tlf
