#ifndef TLF_MILNOR_HPP
#define TLF_MILNOR_HPP

#include <cstdint>
#include <vector>

#include "tlf/forms.hpp"

namespace tlf {

// Formal K_2 symbols over K: integer combinations of {a, b} with a, b units
// of K (certified nonzero, determinable valuation). There is no normal form;
// symbols are observed only through tame, sym_dlog and the pairings.
struct SymTerm {
    long long coeff;
    KLaurent a, b;
};

struct MilnorSym {
    std::vector<SymTerm> terms;

    static MilnorSym symbol(const KLaurent& a, const KLaurent& b) {
        return {{{1, a, b}}};
    }
    MilnorSym operator+(const MilnorSym& o) const;
    MilnorSym operator-(const MilnorSym& o) const;
    MilnorSym scaled(long long k) const;
};

// x^n for a unit x of f; negative exponents go through inv, so the result
// window follows the inversion rules
FLaurent f_pow(const FLaurent& x, long long n);

// Tame symbol into f^x, the multiplicative extension of
//   {a, b} |-> (-1)^{v(a)v(b)} (a^{v(b)} / b^{v(a)}) mod pi.
// The quotient has pi-valuation 0, so the reduction is exact in pi; only
// f-level inversions carry windows.
FLaurent tame(const Context& ctx, const MilnorSym& s);

// dlog a ^ dlog b, extended additively over terms
Form2 sym_dlog(const Context& ctx, const MilnorSym& s);

// {lift(abar), pi} with the f-element lifted verbatim (constant in pi)
MilnorSym iota_symbol(const Context& ctx, const FLaurent& abar);

// phi(s) = s - iota(tame(s)): tame(phi(s)) = 1, and symbols with trivial
// tame symbol are fixed up to observables
MilnorSym split_phi(const Context& ctx, const MilnorSym& s);

// `budget` random symbols {1 + pi^r a, b} with a integral and b a K-unit
// monomial: generators of fil_r, hence also members of every fil_s, s <= r
std::vector<MilnorSym> fil_generators(const Context& ctx, int r, int budget,
                                      uint64_t seed);

} // namespace tlf

#endif
