#ifndef TLF_LAURENT_HPP
#define TLF_LAURENT_HPP

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "tlf/errors.hpp"
#include "tlf/fq.hpp"

namespace tlf {

inline long long floordiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline long long ceildiv(long long a, long long b) { return -floordiv(-a, b); }

// Precision-tracked Laurent series over a coefficient ring C.
//
// Knowledge model: the coefficient at exponent x is certified iff
//   x < hi  and  (zero_below or x >= lo).
// Stored terms always lie in [lo, hi); exponents in the certified range that
// are not stored are exactly zero. hi == kInf means the element is exact
// (finitely many terms, all known). With zero_below (the normal case) lo is
// normalized to the least stored exponent and is purely descriptive.
//
// C must provide: +, -, *, unary -, ==, is_exact_zero, certainly_nonzero,
// zero_like, one_like, scalar(n), inv, pth_power, pth_root, char_p, to_string.
// FqElem satisfies this, and Laurent<C> itself does, so Laurent<Laurent<FqElem>>
// gives the two-level series field with per-coefficient inner windows.
template <class C>
class Laurent {
public:
    static constexpr int kInf = std::numeric_limits<int>::max() / 4;
    static constexpr int kDefaultInvLen = 32;
    using Term = std::pair<int, C>;

    explicit Laurent(const C& proto)
        : proto_(proto.zero_like()), lo_(0), hi_(kInf), zb_(true) {}

    static Laurent monomial(const C& c, int e) {
        Laurent r(c);
        if (!c.is_exact_zero()) {
            r.cs_.push_back({e, c});
            r.lo_ = e;
        }
        return r;
    }

    static Laurent from_terms(const C& proto, std::vector<Term> terms, int lo, int hi,
                              bool zero_below = true) {
        Laurent r(proto);
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        r.cs_ = std::move(terms);
        r.lo_ = lo;
        r.hi_ = hi;
        r.zb_ = zero_below;
        for (const auto& t : r.cs_)
            if (t.first < lo || t.first >= hi)
                throw PrecisionLoss("term exponent outside declared window");
        r.normalize();
        return r;
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool zero_below() const { return zb_; }
    bool exact() const { return zb_ && hi_ == kInf; }
    const std::vector<Term>& terms() const { return cs_; }
    const C& proto() const { return proto_; }
    int char_p() const { return proto_.char_p(); }

    bool is_exact_zero() const { return cs_.empty() && exact(); }
    bool certainly_nonzero() const {
        for (const auto& t : cs_)
            if (t.second.certainly_nonzero()) return true;
        return false;
    }

    Laurent zero_like() const { return Laurent(proto_); }
    Laurent one_like() const { return monomial(proto_.one_like(), 0); }
    Laurent scalar(long long n) const { return monomial(proto_.scalar(n), 0); }

    // least exponent that could carry a nonzero coefficient
    int effective_lo() const { return cs_.empty() ? hi_ : cs_.front().first; }

    int valuation() const {
        if (!zb_) throw UndeterminedValuation("unknown coefficients below the window");
        for (const auto& t : cs_) {
            if (t.second.certainly_nonzero()) return t.first;
            throw UndeterminedValuation("leading coefficient not certified nonzero");
        }
        if (is_exact_zero()) throw UndeterminedValuation("valuation of exact zero");
        throw UndeterminedValuation("zero within the certified window");
    }

    C coeff_at(int e) const {
        if (e >= hi_) throw PrecisionLoss("coefficient above the certified window");
        if (e < lo_ && !zb_) throw PrecisionLoss("coefficient below the certified window");
        auto it = std::lower_bound(cs_.begin(), cs_.end(), e, [](const Term& t, int x) {
            return t.first < x;
        });
        if (it != cs_.end() && it->first == e) return it->second;
        return proto_;
    }

    Laurent operator+(const Laurent& o) const {
        if (is_exact_zero()) return o;
        if (o.is_exact_zero()) return *this;
        Laurent r(proto_);
        r.zb_ = zb_ && o.zb_;
        r.hi_ = std::min(hi_, o.hi_);
        int knowledge_lo = r.zb_ ? -kInf : std::max(zb_ ? -kInf : lo_, o.zb_ ? -kInf : o.lo_);
        if (!r.zb_ && r.hi_ <= knowledge_lo)
            throw EmptyWindow("sum has no certified exponent range");
        r.lo_ = r.zb_ ? 0 : knowledge_lo;
        auto ia = cs_.begin(), ib = o.cs_.begin();
        while (ia != cs_.end() || ib != o.cs_.end()) {
            int ea = ia != cs_.end() ? ia->first : kInf;
            int eb = ib != o.cs_.end() ? ib->first : kInf;
            int e = std::min(ea, eb);
            C c = proto_;
            if (ea == e) c = c + (ia++)->second;
            if (eb == e) c = c + (ib++)->second;
            if (e >= knowledge_lo && e < r.hi_ && !c.is_exact_zero()) r.cs_.push_back({e, c});
        }
        r.normalize();
        return r;
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& t : r.cs_) t.second = -t.second;
        return r;
    }

    Laurent operator-(const Laurent& o) const { return *this + (-o); }

    Laurent operator*(const Laurent& o) const {
        if (is_exact_zero() || o.is_exact_zero()) return Laurent(proto_);
        if (!zb_ || !o.zb_)
            throw UndeterminedValuation("product with uncertified lower tail");
        Laurent r(proto_);
        long long hi = (exact() && o.exact())
                           ? kInf
                           : std::min<long long>((long long)effective_lo() + o.hi_,
                                                 (long long)o.effective_lo() + hi_);
        r.hi_ = (int)std::min<long long>(hi, kInf);
        std::vector<Term> acc;
        acc.reserve(cs_.size() * o.cs_.size());
        for (const auto& ta : cs_)
            for (const auto& tb : o.cs_) {
                long long e = (long long)ta.first + tb.first;
                if (e >= r.hi_) continue;
                acc.push_back({(int)e, ta.second * tb.second});
            }
        r.cs_ = combine(std::move(acc), proto_);
        r.normalize();
        return r;
    }

    // Merge-based sum of many addends; same window rules as repeated operator+.
    static Laurent sum(const std::vector<Laurent>& xs, const C& proto) {
        Laurent r(proto);
        std::vector<Term> acc;
        for (const auto& x : xs) {
            if (x.is_exact_zero()) continue;
            if (!x.zb_) throw UndeterminedValuation("sum with uncertified lower tail");
            r.hi_ = std::min(r.hi_, x.hi_);
            acc.insert(acc.end(), x.cs_.begin(), x.cs_.end());
        }
        r.cs_ = combine(std::move(acc), proto);
        while (!r.cs_.empty() && r.cs_.back().first >= r.hi_) r.cs_.pop_back();
        r.normalize();
        return r;
    }

    // Multiplicative inverse as a truncated geometric series. Output window
    // length: explicit len if given, else input window length (exact monomials
    // invert exactly; other exact inputs default to kDefaultInvLen terms).
    Laurent inv(int len = 0) const {
        if (is_exact_zero()) throw ZeroDivision("inverse of exact zero");
        int v = valuation();
        if (len <= 0) {
            if (exact() && cs_.size() == 1) {
                return monomial(cs_.front().second.inv(), -v);
            }
            len = (hi_ == kInf) ? kDefaultInvLen : hi_ - v;
        }
        C u0inv = coeff_at(v).inv();
        std::vector<C> b;
        b.reserve(len);
        b.push_back(u0inv);
        for (int k = 1; k < len; ++k) {
            C s = proto_;
            for (int j = 1; j <= k; ++j) {
                C uj = (v + j < hi_) ? coeff_at(v + j) : proto_;
                if (uj.is_exact_zero()) continue;
                s = s + uj * b[k - j];
            }
            b.push_back(-(u0inv * s));
        }
        Laurent r(proto_);
        r.hi_ = -v + len;
        for (int k = 0; k < len; ++k)
            if (!b[k].is_exact_zero()) r.cs_.push_back({-v + k, b[k]});
        r.normalize();
        return r;
    }

    Laurent pth_power() const {
        if (!zb_) throw UndeterminedValuation("p-th power with uncertified lower tail");
        int p = char_p();
        Laurent r(proto_);
        r.hi_ = hi_ == kInf ? kInf : p * (hi_ - 1) + 1;
        for (const auto& t : cs_) r.cs_.push_back({p * t.first, t.second.pth_power()});
        r.normalize();
        return r;
    }

    // Every certified monomial must have exponent divisible by p and a
    // coefficient that is itself a p-th power; the witness names the offender.
    Laurent pth_root(const char* var = "x") const {
        if (!zb_) throw UndeterminedValuation("p-th root with uncertified lower tail");
        int p = char_p();
        Laurent r(proto_);
        r.hi_ = hi_ == kInf ? kInf : (int)(floordiv(hi_ - 1, p) + 1);
        for (const auto& t : cs_) {
            if (t.first % p != 0)
                throw NotAPthPower("exponent not divisible by p",
                                   std::string(var) + "^" + std::to_string(t.first));
            r.cs_.push_back({t.first / p, root_of(t.second, var, t.first)});
        }
        r.normalize();
        return r;
    }

    Laurent derivative() const {
        Laurent r(proto_);
        r.zb_ = zb_;
        r.hi_ = hi_ == kInf ? kInf : hi_ - 1;
        r.lo_ = zb_ ? 0 : lo_ - 1;
        for (const auto& t : cs_) {
            C c = t.second * proto_.scalar(t.first);
            if (!c.is_exact_zero()) r.cs_.push_back({t.first - 1, c});
        }
        r.normalize();
        return r;
    }

    Laurent shift(int k) const { // multiply by x^k, exact
        Laurent r = *this;
        for (auto& t : r.cs_) t.first += k;
        if (r.hi_ != kInf) r.hi_ += k;
        if (!r.zb_ || !r.cs_.empty()) r.lo_ += k;
        r.normalize();
        return r;
    }

    Laurent scalar_mul(const C& s) const {
        if (s.is_exact_zero()) return Laurent(proto_);
        Laurent r(proto_);
        r.zb_ = zb_;
        r.hi_ = hi_;
        r.lo_ = lo_;
        for (const auto& t : cs_) {
            C c = t.second * s;
            if (!c.is_exact_zero()) r.cs_.push_back({t.first, c});
        }
        r.normalize();
        return r;
    }

    Laurent truncate(int new_hi) const { // discard knowledge at exponents >= new_hi
        Laurent r = *this;
        if (new_hi < r.hi_) {
            r.hi_ = new_hi;
            while (!r.cs_.empty() && r.cs_.back().first >= new_hi) r.cs_.pop_back();
        }
        r.normalize();
        return r;
    }

    // keep only monomials whose exponent satisfies pred (exact filtering)
    template <class Pred>
    Laurent filter(Pred pred) const {
        Laurent r = *this;
        r.cs_.erase(std::remove_if(r.cs_.begin(), r.cs_.end(),
                                   [&](const Term& t) { return !pred(t.first); }),
                    r.cs_.end());
        r.normalize();
        return r;
    }

    template <class F>
    Laurent map_coeffs(F f) const { // coefficient-wise; window preserved
        Laurent r = *this;
        for (auto& t : r.cs_) t.second = f(t.second);
        r.cs_.erase(std::remove_if(r.cs_.begin(), r.cs_.end(),
                                   [](const Term& t) { return t.second.is_exact_zero(); }),
                    r.cs_.end());
        r.normalize();
        return r;
    }

    bool operator==(const Laurent& o) const {
        if (zb_ != o.zb_ || hi_ != o.hi_) return false;
        if (!zb_ && lo_ != o.lo_) return false;
        return cs_ == o.cs_;
    }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // equality of certified content on the common window
    bool agrees_with(const Laurent& o) const {
        int h = std::min(hi_, o.hi_);
        return truncate(h).cs_ == o.truncate(h).cs_;
    }

    std::string to_string() const {
        const char* var = var_name();
        if (cs_.empty()) return "0";
        std::string s;
        for (const auto& t : cs_) {
            std::string c = t.second.to_string();
            if (c.find('+') != std::string::npos) c = "(" + c + ")";
            std::string mono;
            if (t.first == 0) {
                mono = c;
            } else {
                mono = (c == "1") ? "" : c + "*";
                mono += var;
                if (t.first != 1) mono += "^" + std::to_string(t.first);
            }
            if (!s.empty()) s += "+";
            s += mono;
        }
        return s;
    }

private:
    static constexpr int depth() {
        if constexpr (requires(const C& c) { c.terms(); })
            return 2;
        else
            return 1;
    }
    static const char* var_name() { return depth() == 2 ? "pi" : "t"; }

    static C root_of(const C& c, const char* var, int outer_exp) {
        try {
            if constexpr (requires(const C& x) { x.pth_root("t"); })
                return c.pth_root("t");
            else
                return c.pth_root();
        } catch (const NotAPthPower& e) {
            throw NotAPthPower("coefficient not a p-th power",
                               std::string(var) + "^" + std::to_string(outer_exp) +
                                   " coefficient, " + e.witness());
        }
    }

    static std::vector<Term> combine(std::vector<Term> acc, [[maybe_unused]] const C& proto) {
        std::sort(acc.begin(), acc.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& t : acc) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second = out.back().second + t.second;
            else
                out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const Term& t) { return t.second.is_exact_zero(); }),
                  out.end());
        return out;
    }

    void normalize() {
        cs_.erase(std::remove_if(cs_.begin(), cs_.end(),
                                 [](const Term& t) { return t.second.is_exact_zero(); }),
                  cs_.end());
        if (zb_) lo_ = cs_.empty() ? (hi_ == kInf ? 0 : hi_) : cs_.front().first;
    }

    C proto_;
    std::vector<Term> cs_; // sorted by exponent, no exact-zero coefficients
    int lo_, hi_;
    bool zb_;
};

using FLaurent = Laurent<FqElem>;                // f = F_q((t))
using KLaurent = Laurent<FLaurent>;              // K = f((pi))

} // namespace tlf

#endif
