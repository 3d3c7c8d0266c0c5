#include "tlf/milnor.hpp"

#include <random>
#include <utility>

namespace tlf {

MilnorSym MilnorSym::operator+(const MilnorSym& o) const {
    MilnorSym r = *this;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    return r;
}

MilnorSym MilnorSym::operator-(const MilnorSym& o) const {
    MilnorSym r = *this;
    for (const auto& t : o.terms) r.terms.push_back({-t.coeff, t.a, t.b});
    return r;
}

MilnorSym MilnorSym::scaled(long long k) const {
    MilnorSym r = *this;
    for (auto& t : r.terms) t.coeff *= k;
    return r;
}

FLaurent f_pow(const FLaurent& x, long long n) {
    FLaurent base = n < 0 ? x.inv() : x;
    unsigned long long k = n < 0 ? 0ULL - (unsigned long long)n : (unsigned long long)n;
    FLaurent acc = x.one_like();
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

namespace {

// pi-valuation and leading f-coefficient of a certified K-unit
std::pair<long long, FLaurent> unit_data(const KLaurent& x) {
    int v = x.valuation();
    return {v, x.coeff_at(v)};
}

} // namespace

FLaurent tame(const Context& ctx, const MilnorSym& s) {
    FLaurent acc = ctx.f_one();
    long long sign = 0;
    for (const auto& tm : s.terms) {
        auto [va, la] = unit_data(tm.a);
        auto [vb, lb] = unit_data(tm.b);
        sign += tm.coeff * va * vb;
        acc = acc * f_pow(la, tm.coeff * vb) * f_pow(lb, -tm.coeff * va);
    }
    if (sign % 2 != 0) acc = acc.scalar_mul(ctx.c(-1));
    return acc;
}

Form2 sym_dlog(const Context& ctx, const MilnorSym& s) {
    Form2 acc{ctx.k_zero()};
    for (const auto& tm : s.terms) {
        Form2 w = wedge(ctx, dlog_form(ctx, tm.a), dlog_form(ctx, tm.b));
        acc = acc + Form2{w.c.scalar_mul(ctx.f_mono(ctx.c((int)(tm.coeff % ctx.p)), 0))};
    }
    return acc;
}

MilnorSym iota_symbol(const Context& ctx, const FLaurent& abar) {
    return MilnorSym::symbol(ctx.k_of(abar), ctx.pi());
}

MilnorSym split_phi(const Context& ctx, const MilnorSym& s) {
    return s - iota_symbol(ctx, tame(ctx, s));
}

std::vector<MilnorSym> fil_generators(const Context& ctx, int r, int budget,
                                      uint64_t seed) {
    if (r < 1) throw DomainError("Config", "fil generators need r >= 1");
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (uint64_t)r);
    std::uniform_int_distribution<int> coef(0, ctx.fq().q() - 1);
    std::uniform_int_distribution<int> coefnz(1, ctx.fq().q() - 1);
    std::uniform_int_distribution<int> texp(-3, 3), adepth(0, 2), bdepth(-2, 2), nmono(1, 2);
    std::vector<MilnorSym> out;
    out.reserve((size_t)std::max(budget, 0));
    for (int i = 0; i < budget; ++i) {
        KLaurent a = ctx.k_zero();
        int parts = nmono(rng);
        for (int j = 0; j < parts; ++j)
            a = a + ctx.k_mono(FqElem::from_index(ctx.fq(), (uint8_t)coef(rng)),
                               texp(rng), adepth(rng));
        KLaurent u = ctx.k_one() + ctx.pi(r) * a;
        KLaurent b = ctx.k_mono(FqElem::from_index(ctx.fq(), (uint8_t)coefnz(rng)),
                                texp(rng), bdepth(rng));
        out.push_back(MilnorSym::symbol(u, b));
    }
    return out;
}

} // namespace tlf
