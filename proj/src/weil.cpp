#include "tlf/weil.hpp"

#include <algorithm>

#include "tlf/errors.hpp"

namespace tlf {

FqElem Poly::lc() const {
    if (c.empty()) throw DomainError("Config", "leading coefficient of 0");
    return c.back();
}

FqElem Poly::coeff(const FqCtx& fq, int i) const {
    if (i < 0 || i >= (int)c.size()) return FqElem::from_index(fq, 0);
    return c[i];
}

std::string Poly::to_string() const {
    if (c.empty()) return "0";
    std::string s;
    for (int i = (int)c.size() - 1; i >= 0; --i) {
        if (c[i].is_exact_zero()) continue;
        std::string cs = c[i].to_string();
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        std::string mono;
        if (i == 0) {
            mono = cs;
        } else {
            mono = (cs == "1") ? "" : cs + "*";
            mono += "T";
            if (i != 1) mono += "^" + std::to_string(i);
        }
        if (!s.empty()) s += "+";
        s += mono;
    }
    return s;
}

std::string Place::to_string() const {
    return at_infinity ? "inf" : "(" + irr.to_string() + ")";
}

Poly poly_from(std::vector<FqElem> cs) {
    while (!cs.empty() && cs.back().is_exact_zero()) cs.pop_back();
    return {std::move(cs)};
}

Poly poly_const(const FqCtx& fq, int n) { return poly_from({FqElem(fq, n)}); }
Poly poly_one(const FqCtx& fq) { return poly_const(fq, 1); }
Poly poly_T(const FqCtx& fq) {
    return poly_from({FqElem::from_index(fq, 0), FqElem::from_index(fq, 1)});
}

Poly poly_add(const FqCtx& fq, const Poly& a, const Poly& b) {
    std::vector<FqElem> out(std::max(a.c.size(), b.c.size()), FqElem::from_index(fq, 0));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.c.size()) out[i] = out[i] + a.c[i];
        if (i < b.c.size()) out[i] = out[i] + b.c[i];
    }
    return poly_from(std::move(out));
}

Poly poly_sub(const FqCtx& fq, const Poly& a, const Poly& b) {
    std::vector<FqElem> nb = b.c;
    for (auto& x : nb) x = -x;
    return poly_add(fq, a, {std::move(nb)});
}

Poly poly_mul(const FqCtx& fq, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<FqElem> out(a.c.size() + b.c.size() - 1, FqElem::from_index(fq, 0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) out[i + j] = out[i + j] + a.c[i] * b.c[j];
    return poly_from(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const FqCtx& fq, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroDivision("polynomial division by 0");
    Poly r = a;
    if (a.degree() < b.degree()) return {{}, r};
    std::vector<FqElem> q(a.degree() - b.degree() + 1, FqElem::from_index(fq, 0));
    FqElem linv = b.lc().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        FqElem f = r.lc() * linv;
        q[k] = f;
        std::vector<FqElem> nr = r.c;
        for (int i = 0; i <= b.degree(); ++i) nr[i + k] = nr[i + k] - f * b.c[i];
        r = poly_from(std::move(nr));
    }
    return {poly_from(std::move(q)), r};
}

Poly polymod_mul(const FqCtx& fq, const Poly& a, const Poly& b, const Poly& irr) {
    return poly_divmod(fq, poly_mul(fq, a, b), irr).second;
}

Poly polymod_inv(const FqCtx& fq, const Poly& a, const Poly& irr) {
    // extended Euclid: s*a + t*irr = gcd
    Poly r0 = irr, r1 = poly_divmod(fq, a, irr).second;
    if (r1.is_zero()) throw ZeroDivision("inverse of 0 in a residue field");
    Poly s0 = {}, s1 = poly_one(fq);
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(fq, r0, r1);
        Poly s2 = poly_sub(fq, s0, poly_mul(fq, q, s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0)
        throw DomainError("Config", "residue-field modulus is not irreducible");
    Poly inv = poly_mul(fq, s0, poly_from({r0.lc().inv()}));
    return poly_divmod(fq, inv, irr).second;
}

Poly polymod_pow(const FqCtx& fq, const Poly& a, long long n, const Poly& irr) {
    Poly base = n < 0 ? polymod_inv(fq, a, irr) : poly_divmod(fq, a, irr).second;
    unsigned long long k =
        n < 0 ? 0ULL - (unsigned long long)n : (unsigned long long)n;
    Poly acc = poly_one(fq);
    while (k) {
        if (k & 1) acc = polymod_mul(fq, acc, base, irr);
        k >>= 1;
        if (k) base = polymod_mul(fq, base, base, irr);
    }
    return acc;
}

namespace {

Poly monic_from_index(const FqCtx& fq, int d, long long idx) {
    std::vector<FqElem> cs((size_t)d + 1, FqElem::from_index(fq, 0));
    for (int i = 0; i < d; ++i) {
        cs[(size_t)i] = FqElem::from_index(fq, (int)(idx % fq.q()));
        idx /= fq.q();
    }
    cs[(size_t)d] = FqElem::from_index(fq, 1);
    return {std::move(cs)};
}

long long poly_index(const FqCtx& fq, const Poly& f) { // below-leading digits
    long long idx = 0;
    for (int i = f.degree() - 1; i >= 0; --i) idx = idx * fq.q() + f.coeff(fq, i).index();
    return idx;
}

} // namespace

Factorization factor_poly(const FqCtx& fq, const Poly& f) {
    if (f.is_zero()) throw DomainError("Config", "factoring the zero polynomial");
    if (f.degree() > 6)
        throw FactorizationBudgetExceeded("trial division is budgeted for degree <= 6, got " +
                                          std::to_string(f.degree()));
    Factorization out{f.lc(), {}};
    Poly rest = poly_mul(fq, f, poly_from({f.lc().inv()})); // monic
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= fq.q();
        for (long long idx = 0; idx < count && 2 * d <= rest.degree(); ++idx) {
            Poly cand = monic_from_index(fq, d, idx);
            int mult = 0;
            for (;;) {
                auto [q, r] = poly_divmod(fq, rest, cand);
                if (!r.is_zero()) break;
                rest = q;
                ++mult;
            }
            if (mult) out.factors.push_back({cand, mult});
        }
    }
    if (rest.degree() >= 1) out.factors.push_back({rest, 1});
    return out;
}

std::vector<Place> places_of(const FqCtx& fq, const RatFun& f, const RatFun& g) {
    std::vector<Place> out;
    auto add = [&](const Poly& irr) {
        for (const auto& p : out)
            if (!p.at_infinity && p.irr == irr) return;
        out.push_back({false, irr, irr.degree()});
    };
    for (const Poly* p : {&f.num, &f.den, &g.num, &g.den})
        for (const auto& [irr, mult] : factor_poly(fq, *p).factors) add(irr);
    std::sort(out.begin(), out.end(), [&](const Place& a, const Place& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return poly_index(fq, a.irr) < poly_index(fq, b.irr);
    });
    out.push_back({true, {}, 1});
    return out;
}

namespace {

// multiplicity of irr in f, stripping it off
int strip(const FqCtx& fq, Poly& f, const Poly& irr) {
    int mult = 0;
    for (;;) {
        auto [q, r] = poly_divmod(fq, f, irr);
        if (!r.is_zero()) break;
        f = q;
        ++mult;
    }
    return mult;
}

} // namespace

long long val_at(const FqCtx& fq, const RatFun& f, const Place& x) {
    if (f.num.is_zero() || f.den.is_zero())
        throw DomainError("Config", "valuation of 0 or of a 0-denominator function");
    if (x.at_infinity) return f.den.degree() - f.num.degree();
    Poly n = f.num, d = f.den;
    return strip(fq, n, x.irr) - strip(fq, d, x.irr);
}

Poly tame_at(const FqCtx& fq, const RatFun& f, const RatFun& g, const Place& x) {
    long long vf = val_at(fq, f, x), vg = val_at(fq, g, x);
    FqElem sign = ((vf * vg) % 2 != 0) ? -FqElem(fq, 1) : FqElem(fq, 1);
    if (x.at_infinity) {
        FqElem uf = f.num.lc() * f.den.lc().inv();
        FqElem ug = g.num.lc() * g.den.lc().inv();
        return poly_from({sign * uf.pow(vg) * ug.pow(-vf)});
    }
    auto unit_part = [&](const RatFun& h) {
        Poly n = h.num, d = h.den;
        strip(fq, n, x.irr);
        strip(fq, d, x.irr);
        return polymod_mul(fq, n, polymod_inv(fq, d, x.irr), x.irr);
    };
    Poly uf = polymod_pow(fq, unit_part(f), vg, x.irr);
    Poly ug = polymod_pow(fq, unit_part(g), -vf, x.irr);
    return polymod_mul(fq, poly_mul(fq, poly_from({sign}), uf), ug, x.irr);
}

FqElem norm_to_base(const FqCtx& fq, const Place& x, const Poly& alpha) {
    if (x.at_infinity || x.degree == 1) {
        if (alpha.degree() > 0)
            throw DomainError("Config", "degree-1 residue value not constant");
        return alpha.is_zero() ? FqElem::from_index(fq, 0) : alpha.c[0];
    }
    long long q = fq.q();
    Poly acc = poly_one(fq), conj = poly_divmod(fq, alpha, x.irr).second;
    for (int i = 0; i < x.degree; ++i) {
        acc = polymod_mul(fq, acc, conj, x.irr);
        if (i + 1 < x.degree) conj = polymod_pow(fq, conj, q, x.irr);
    }
    if (acc.degree() > 0)
        throw DomainError("Config", "norm did not land in the base field");
    return acc.is_zero() ? FqElem::from_index(fq, 0) : acc.c[0];
}

WeilCertificate weil_check(const FqCtx& fq, const RatFun& f, const RatFun& g) {
    WeilCertificate cert;
    cert.product = FqElem(fq, 1);
    for (const Place& x : places_of(fq, f, g)) {
        Poly local = tame_at(fq, f, g, x);
        FqElem n = norm_to_base(fq, x, local);
        cert.factors.push_back({x, local, n});
        cert.product = cert.product * n;
    }
    cert.ok = cert.product == FqElem(fq, 1);
    return cert;
}

} // namespace tlf
