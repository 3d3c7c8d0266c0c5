#ifndef TLF_WITT_HPP
#define TLF_WITT_HPP

#include <utility>
#include <vector>

#include "tlf/errors.hpp"
#include "tlf/witt_poly.hpp"

namespace tlf {

// Ring context over a prototype element satisfying the coefficient concept
// (zero_like / scalar, + and *). Works for FqElem, FLaurent and KLaurent; the
// Laurent types get the merge-based sum, everything else folds.
template <class R>
struct ProtoRingCtx {
    R proto;

    R scalar(long long n) const { return proto.scalar(n); }
    R sum(std::vector<R>&& xs) const {
        if constexpr (requires { R::sum(xs, proto); }) {
            return R::sum(xs, proto);
        } else {
            R acc = proto.zero_like();
            for (auto& x : xs) acc = acc + x;
            return acc;
        }
    }
};

struct IntRingCtx {
    BigInt scalar(long long n) const { return BigInt(n); }
    BigInt sum(std::vector<BigInt>&& xs) const {
        BigInt acc = 0;
        for (auto& x : xs) acc += x;
        return acc;
    }
};

// Arithmetic on length-<=m ring vectors with entries in R. Vectors are stored
// in V-adic slot order: a = sum_j V^j([a_j]), so slot 0 is the Teichmueller
// slot and slot len-1 the deepest V-slot. Restriction drops the last slot,
// Verschiebung prepends a zero.
template <class R, class Ctx = ProtoRingCtx<R>>
class WittOps {
  public:
    using Vec = std::vector<R>;

    WittOps(int p, int m, Ctx rc)
        : p_(p), m_(m), tbl_(&witt_polys(p, m)), rc_(std::move(rc)) {}

    int p() const { return p_; }
    int m() const { return m_; }
    const Ctx& ring() const { return rc_; }

    Vec zero(int len) const { return Vec(static_cast<size_t>(len), rc_.scalar(0)); }

    Vec teich(const R& x, int len) const {
        Vec v = zero(len);
        v[0] = x;
        return v;
    }

    Vec add(const Vec& a, const Vec& b) const { return eval2(tbl_->sum, a, b); }
    Vec sub(const Vec& a, const Vec& b) const { return eval2(tbl_->diff, a, b); }
    Vec mul(const Vec& a, const Vec& b) const { return eval2(tbl_->prod, a, b); }
    Vec neg(const Vec& a) const { return eval1(tbl_->neg, a); }

    // a - F(a), in one polynomial evaluation per slot
    Vec one_minus_frob(const Vec& a) const { return eval1(tbl_->one_minus_frob, a); }

    // componentwise p-th power; in characteristic p this is the Frobenius
    Vec frob(const Vec& a) const {
        Vec r;
        r.reserve(a.size());
        for (const auto& c : a) r.push_back(c.pth_power());
        return r;
    }

    // V: slot shift down by one, length grows by one
    Vec vshift(const Vec& a) const {
        Vec r = zero(static_cast<int>(a.size()) + 1);
        for (size_t i = 0; i < a.size(); ++i) r[i + 1] = a[i];
        return r;
    }

    // restriction: drop the deepest slot
    Vec rdrop(const Vec& a) const {
        if (a.empty()) throw LengthMismatch("restriction of an empty vector");
        return Vec(a.begin(), a.end() - 1);
    }

    // [f] * a = (f^{p^j} a_j)_j -- exact in every characteristic
    Vec teich_scale(const R& f, const Vec& a) const {
        Vec r;
        r.reserve(a.size());
        R fp = f;
        for (size_t j = 0; j < a.size(); ++j) {
            if (j > 0) {
                R q = fp;
                for (int i = 1; i < p_; ++i) q = q * fp;
                fp = q;
            }
            r.push_back(fp * a[j]);
        }
        return r;
    }

    // ghost components w_n(a) = sum_{i<=n} p^i a_i^{p^{n-i}}; mostly useful in
    // characteristic-zero coefficient rings
    Vec ghost(const Vec& a) const {
        Vec r;
        for (size_t n = 0; n < a.size(); ++n) {
            std::vector<R> parts;
            long long pi = 1;
            for (size_t i = 0; i <= n; ++i) {
                long long e = 1;
                for (size_t j = 0; j < n - i; ++j) e *= p_;
                parts.push_back(rc_.scalar(pi) * rpow(a[i], e));
                pi *= p_;
            }
            r.push_back(rc_.sum(std::move(parts)));
        }
        return r;
    }

  private:
    R rpow(const R& x, long long e) const {
        R acc = rc_.scalar(1);
        R base = x;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return acc;
    }

    Vec eval1(const std::vector<ModPoly>& fam, const Vec& a) const {
        check_len(a);
        Vec vars = zero(m_);
        for (size_t i = 0; i < a.size(); ++i) vars[i] = a[i];
        Vec r;
        r.reserve(a.size());
        for (size_t n = 0; n < a.size(); ++n) r.push_back(fam[n].eval(vars, rc_));
        return r;
    }

    Vec eval2(const std::vector<ModPoly>& fam, const Vec& a, const Vec& b) const {
        if (a.size() != b.size()) throw LengthMismatch("ring vector lengths differ");
        check_len(a);
        Vec vars = zero(2 * m_);
        for (size_t i = 0; i < a.size(); ++i) {
            vars[i] = a[i];
            vars[static_cast<size_t>(m_) + i] = b[i];
        }
        Vec r;
        r.reserve(a.size());
        for (size_t n = 0; n < a.size(); ++n) r.push_back(fam[n].eval(vars, rc_));
        return r;
    }

    void check_len(const Vec& a) const {
        if (a.empty() || static_cast<int>(a.size()) > m_)
            throw LengthMismatch("ring vector length out of range");
    }

    int p_, m_;
    const WittPolyTable* tbl_;
    Ctx rc_;
};

} // namespace tlf

#endif
