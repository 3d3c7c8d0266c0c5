#ifndef TLF_ASW_HPP
#define TLF_ASW_HPP

#include <vector>

#include "tlf/context.hpp"
#include "tlf/witt.hpp"

namespace tlf {

using WVec = std::vector<KLaurent>;

// A class in W_m(K)/(1-F)W_m(K), carried by a representative vector.
struct CharacterRep {
    WVec rep;
    bool reduced = false;
};

// Ramification filtration, reduction and conductor on length-m vectors over
// K. Slot j of a length-len vector carries weight p^{len-1-j}: the
// Teichmueller slot is the most wildly ramified, the deepest V-slot the
// least.
class Asw {
  public:
    explicit Asw(const Context& ctx)
        : ctx_(ctx), W_(ctx.p, ctx.m, ProtoRingCtx<KLaurent>{ctx.k_zero()}) {}

    const Context& ctx() const { return ctx_; }
    const WittOps<KLaurent>& witt() const { return W_; }

    long long weight(int len, int j) const;

    // a lies in fil_n: weight(j) * v_K(a_j) >= -n for every slot
    bool fil_member(const WVec& a, long long n) const;
    // least n >= 0 with fil_member(a, n) -- the raw pole level, no reduction
    long long fil_level(const WVec& a) const;

    struct Reduction {
        WVec reduced; // irreducible representative
        WVec shift;   // b with reduced = a - (1-F)(b)
    };
    // Remove every monomial c t^i pi^{-r} with r > 0, p | r, p | i by
    // (1-F)-translates. Deterministic: passes run from the deepest slot
    // downward in index, within a slot the deepest pi-pole goes first, ties
    // by most negative t-exponent; passes repeat until nothing is reducible.
    Reduction reduce(const WVec& a) const;

    // fil level of the reduced representative
    long long conductor(const WVec& a) const;
    // same value through the drop-the-deepest-slot recursion; cross-check
    long long conductor_recursive(const WVec& a) const;

    CharacterRep character(const WVec& a) const { return {reduce(a).reduced, true}; }

    // level maps: W_1 -> W_m into the deepest slot, and W_m -> W_{m-1}
    WVec level_lift(const WVec& a, int m_target) const;
    WVec level_restrict(const WVec& a) const;

  private:
    long long rec_inner(const WVec& reduced) const;

    const Context& ctx_;
    WittOps<KLaurent> W_;
};

} // namespace tlf

#endif
