#include "tlf/witt_poly.hpp"

#include <cassert>
#include <mutex>
#include <utility>

namespace tlf {

MPoly MPoly::variable(int nv, int i, int exp) {
    assert(i >= 0 && i < nv);
    std::vector<uint16_t> key(nv, 0);
    key[i] = static_cast<uint16_t>(exp);
    MPoly r{nv, {}};
    r.ts.emplace(std::move(key), BigInt(1));
    return r;
}

MPoly MPoly::constant(int nv, const BigInt& c) {
    MPoly r{nv, {}};
    if (c != 0) r.ts.emplace(std::vector<uint16_t>(nv, 0), c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    assert(nvars == o.nvars);
    MPoly r = *this;
    for (const auto& [k, c] : o.ts) {
        auto it = r.ts.find(k);
        if (it == r.ts.end()) {
            r.ts.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) r.ts.erase(it);
        }
    }
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + o.scaled(BigInt(-1)); }

MPoly MPoly::operator*(const MPoly& o) const {
    assert(nvars == o.nvars);
    MPoly r{nvars, {}};
    std::vector<uint16_t> key(nvars);
    for (const auto& [ka, ca] : ts) {
        for (const auto& [kb, cb] : o.ts) {
            for (int v = 0; v < nvars; ++v) key[v] = static_cast<uint16_t>(ka[v] + kb[v]);
            auto it = r.ts.find(key);
            if (it == r.ts.end()) {
                r.ts.emplace(key, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.ts.erase(it);
            }
        }
    }
    return r;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly acc = constant(nvars, BigInt(1));
    MPoly base = *this;
    while (k != 0) {
        if (k & 1u) acc = acc * base;
        base = (k >>= 1) != 0 ? base * base : base;
    }
    return acc;
}

MPoly MPoly::scaled(const BigInt& c) const {
    MPoly r{nvars, {}};
    if (c == 0) return r;
    for (const auto& [k, v] : ts) r.ts.emplace(k, v * c);
    return r;
}

MPoly MPoly::divexact(const BigInt& c) const {
    MPoly r{nvars, {}};
    for (const auto& [k, v] : ts) {
        if (v % c != 0) throw DivisionByZero("inexact division in ring polynomial setup");
        r.ts.emplace(k, v / c);
    }
    return r;
}

BigInt MPoly::eval_int(const std::vector<BigInt>& vars) const {
    assert(static_cast<int>(vars.size()) == nvars);
    BigInt acc = 0;
    for (const auto& [k, c] : ts) {
        BigInt t = c;
        for (int v = 0; v < nvars; ++v)
            if (k[v] != 0) t *= boost::multiprecision::pow(vars[v], k[v]);
        acc += t;
    }
    return acc;
}

MPoly MPoly::substitute_power(int src, int dst, int e) const {
    MPoly r{nvars, {}};
    std::vector<uint16_t> key(nvars);
    for (const auto& [k, c] : ts) {
        key = k;
        uint16_t s = key[src];
        key[src] = 0;
        key[dst] = static_cast<uint16_t>(key[dst] + s * e);
        auto it = r.ts.find(key);
        if (it == r.ts.end()) {
            r.ts.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) r.ts.erase(it);
        }
    }
    return r;
}

namespace {

// ghost component n of the vector living in variables [off, off+m)
MPoly ghost_poly(int nvars, int p, int n, int off) {
    MPoly w = MPoly::zero(nvars);
    BigInt pi = 1;
    for (int i = 0; i <= n; ++i) {
        int e = 1;
        for (int j = 0; j < n - i; ++j) e *= p;
        w = w + MPoly::variable(nvars, off + i, e).scaled(pi);
        pi *= p;
    }
    return w;
}

ModPoly reduce_mod_p(const MPoly& f, int p) {
    ModPoly r;
    r.nvars = f.nvars;
    r.max_exp.assign(f.nvars, 0);
    for (const auto& [k, c] : f.ts) {
        BigInt cm = c % p;
        if (cm < 0) cm += p;
        if (cm == 0) continue;
        ModPoly::Term t;
        t.exps = k;
        t.coeff = static_cast<uint8_t>(cm);
        for (int v = 0; v < f.nvars; ++v)
            if (k[v] > r.max_exp[v]) r.max_exp[v] = k[v];
        r.terms.push_back(std::move(t));
    }
    return r;
}

// Solve f_n = (rhs_n - sum_{i<n} p^i f_i^{p^{n-i}}) / p^n where rhs_n couples
// the ghost components of the operands. This is the one recursion behind all
// the arithmetic families.
std::vector<MPoly> solve_family(int p, int m, const std::vector<MPoly>& rhs) {
    std::vector<MPoly> f;
    f.reserve(m);
    for (int n = 0; n < m; ++n) {
        MPoly acc = rhs[n];
        BigInt pi = 1;
        for (int i = 0; i < n; ++i) {
            int e = 1;
            for (int j = 0; j < n - i; ++j) e *= p;
            acc = acc - f[i].pow(static_cast<unsigned>(e)).scaled(pi);
            pi *= p;
        }
        f.push_back(acc.divexact(pi));
    }
    return f;
}

WittPolyTable build_table(int p, int m) {
    const int nv2 = 2 * m;
    std::vector<MPoly> wx(m), wy(m), w1(m);
    for (int n = 0; n < m; ++n) {
        wx[n] = ghost_poly(nv2, p, n, 0);
        wy[n] = ghost_poly(nv2, p, n, m);
        w1[n] = ghost_poly(m, p, n, 0);
    }

    std::vector<MPoly> rs(m), rd(m), rp(m), rn(m);
    for (int n = 0; n < m; ++n) {
        rs[n] = wx[n] + wy[n];
        rd[n] = wx[n] - wy[n];
        rp[n] = wx[n] * wy[n];
        rn[n] = w1[n].scaled(BigInt(-1));
    }
    auto S = solve_family(p, m, rs);
    auto D = solve_family(p, m, rd);
    auto P = solve_family(p, m, rp);
    auto N = solve_family(p, m, rn);

    WittPolyTable t;
    t.p = p;
    t.m = m;
    for (int n = 0; n < m; ++n) {
        // x - F(x): substitute y_i = x_i^p into the difference, then shrink to
        // m variables (the y block is now empty).
        MPoly e = D[n];
        for (int i = 0; i < m; ++i) e = e.substitute_power(m + i, i, p);
        MPoly e1{m, {}};
        for (const auto& [k, c] : e.ts) {
            std::vector<uint16_t> k1(k.begin(), k.begin() + m);
            e1.ts.emplace(std::move(k1), c);
        }

        t.sum.push_back(reduce_mod_p(S[n], p));
        t.diff.push_back(reduce_mod_p(D[n], p));
        t.prod.push_back(reduce_mod_p(P[n], p));
        t.neg.push_back(reduce_mod_p(N[n], p));
        t.one_minus_frob.push_back(reduce_mod_p(e1, p));

        t.sum_z.push_back(std::move(S[n]));
        t.diff_z.push_back(std::move(D[n]));
        t.prod_z.push_back(std::move(P[n]));
        t.neg_z.push_back(std::move(N[n]));
        t.one_minus_frob_z.push_back(std::move(e1));
    }
    return t;
}

} // namespace

const WittPolyTable& witt_polys(int p, int m) {
    const bool ok = (p == 2 || p == 3 || p == 5) && m >= 1 &&
                    (p == 5 ? m <= 3 : m <= 4);
    if (!ok) throw DomainError("Config", "unsupported (p, m) for ring vectors");
    static std::mutex mu;
    static std::map<std::pair<int, int>, WittPolyTable> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(p, m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_table(p, m)).first;
    return it->second;
}

} // namespace tlf
