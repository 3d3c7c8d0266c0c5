#ifndef TLF_CONTEXT_HPP
#define TLF_CONTEXT_HPP

#include <cstdint>

#include "tlf/laurent.hpp"

namespace tlf {

// Run configuration: base field, Witt length, default precision windows for
// the two series levels, and the RNG seed. Identical configs must yield
// byte-identical reports, so everything that influences output lives here.
struct Context {
    int p = 2;
    int e = 1;
    int m = 1;
    int t_lo = -8, t_hi = 8;   // default t-window [t_lo, t_hi)
    int pi_lo = -8, pi_hi = 8; // default pi-window [pi_lo, pi_hi)
    uint64_t seed = 1;

    const FqCtx& fq() const { return FqCtx::get(p, e); }

    FqElem c(int n) const { return FqElem(fq(), n); }            // constant from Z
    FqElem cg() const { return FqElem::gen(fq()); }              // the generator g
    FLaurent f_zero() const { return FLaurent(c(0)); }
    FLaurent f_one() const { return FLaurent::monomial(c(1), 0); }
    FLaurent f_mono(FqElem a, int i) const { return FLaurent::monomial(a, i); }
    FLaurent t(int i = 1) const { return FLaurent::monomial(c(1), i); }

    KLaurent k_zero() const { return KLaurent(f_zero()); }
    KLaurent k_one() const { return KLaurent::monomial(f_one(), 0); }
    KLaurent k_of(const FLaurent& u, int j = 0) const { return KLaurent::monomial(u, j); }
    // monomial c * t^i * pi^j
    KLaurent k_mono(FqElem a, int i, int j) const {
        return KLaurent::monomial(FLaurent::monomial(a, i), j);
    }
    KLaurent pi(int j = 1) const { return k_mono(c(1), 0, j); }
    KLaurent kt(int i = 1) const { return k_mono(c(1), i, 0); }

    // cap an element's certified windows to the context defaults (hi only;
    // knowledge below the windows is exact data and is kept)
    FLaurent clip_f(const FLaurent& u) const { return u.truncate(t_hi); }
    KLaurent clip_k(const KLaurent& a) const {
        return a.truncate(pi_hi).map_coeffs([&](const FLaurent& u) { return clip_f(u); });
    }

    int t_len() const { return t_hi - t_lo; }
    int pi_len() const { return pi_hi - pi_lo; }
};

} // namespace tlf

#endif
