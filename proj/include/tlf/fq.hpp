#ifndef TLF_FQ_HPP
#define TLF_FQ_HPP

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "tlf/errors.hpp"

namespace tlf {

// Finite field F_q, q = p^e, p in {2,3,5}, e <= 3, realized as F_p[g]/(modulus).
// The modulus is canonical: the lexicographically smallest monic irreducible of
// degree e, coefficients compared low-degree first. Elements are indexed by
// 0..q-1 (base-p digits = polynomial coefficients, digit i multiplying g^i);
// all unary/binary operations are table lookups built once per (p, e).
class FqCtx {
public:
    // Thread-safe registry; returned reference is valid for program lifetime.
    static const FqCtx& get(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    // modulus coefficients, index i = coefficient of g^i, length e+1, monic
    const std::vector<uint8_t>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return sub_[a * q_ + b]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const {
        if (a == 0) throw ZeroDivision("inverse of 0 in F_" + std::to_string(q_));
        return inv_[a];
    }
    uint8_t frob(uint8_t a) const { return frob_[a]; }   // a -> a^p
    uint8_t ifrob(uint8_t a) const { return ifrob_[a]; } // a -> a^(1/p) = a^(p^(e-1))
    uint8_t trace(uint8_t a) const { return trace_[a]; } // onto Z/p, value in 0..p-1

private:
    FqCtx(int p, int e);

    int p_, e_, q_;
    std::vector<uint8_t> modulus_;
    std::vector<uint8_t> add_, sub_, mul_;
    std::vector<uint8_t> neg_, inv_, frob_, ifrob_, trace_;
};

class FqElem {
public:
    FqElem() : ctx_(nullptr), v_(0) {}
    FqElem(const FqCtx& ctx, int value_mod_p)
        : ctx_(&ctx), v_(static_cast<uint8_t>(((value_mod_p % ctx.p()) + ctx.p()) % ctx.p())) {}
    static FqElem from_index(const FqCtx& ctx, int idx) {
        assert(idx >= 0 && idx < ctx.q());
        FqElem r;
        r.ctx_ = &ctx;
        r.v_ = static_cast<uint8_t>(idx);
        return r;
    }
    static FqElem gen(const FqCtx& ctx) { // the class of g
        return from_index(ctx, ctx.e() == 1 ? 0 : ctx.p());
    }

    const FqCtx& ctx() const { assert(ctx_); return *ctx_; }
    int char_p() const { return ctx().p(); }
    uint8_t index() const { return v_; }
    // coefficient of g^i in the polynomial representation
    int digit(int i) const;

    bool is_exact_zero() const { return v_ == 0; }
    bool certainly_nonzero() const { return v_ != 0; }

    FqElem zero_like() const { return from_index(ctx(), 0); }
    FqElem one_like() const { return from_index(ctx(), 1); }
    FqElem scalar(long long n) const { // image of n under Z -> F_p -> F_q
        long long p = ctx().p();
        return FqElem(ctx(), static_cast<int>(((n % p) + p) % p));
    }

    FqElem operator+(const FqElem& o) const { return wrap(ctx().add(v_, o.v(*this))); }
    FqElem operator-(const FqElem& o) const { return wrap(ctx().sub(v_, o.v(*this))); }
    FqElem operator*(const FqElem& o) const { return wrap(ctx().mul(v_, o.v(*this))); }
    FqElem operator-() const { return wrap(ctx().neg(v_)); }
    FqElem inv() const { return wrap(ctx().inv(v_)); }
    FqElem pth_power() const { return wrap(ctx().frob(v_)); }
    FqElem pth_root() const { return wrap(ctx().ifrob(v_)); }
    FqElem pow(long long n) const;
    int trace() const { return ctx().trace(v_); } // in 0..p-1

    bool operator==(const FqElem& o) const {
        if (ctx_ == nullptr || o.ctx_ == nullptr) return v_ == o.v_ && ctx_ == o.ctx_;
        assert(ctx_ == o.ctx_);
        return v_ == o.v_;
    }
    bool operator!=(const FqElem& o) const { return !(*this == o); }

    // Canonical text: polynomial in g, highest power first, e.g. "2*g^2+g+1".
    std::string to_string() const;

private:
    FqElem wrap(uint8_t nv) const {
        FqElem r;
        r.ctx_ = ctx_;
        r.v_ = nv;
        return r;
    }
    uint8_t v([[maybe_unused]] const FqElem& other) const {
        assert(ctx_ == other.ctx_);
        return v_;
    }

    const FqCtx* ctx_;
    uint8_t v_;
};

} // namespace tlf

#endif
