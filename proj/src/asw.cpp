#include "tlf/asw.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace tlf {

namespace {

// every coefficient certified down to -infinity in both variables
bool fully_certified_below(const KLaurent& a) {
    if (!a.zero_below()) return false;
    for (const auto& [j, coef] : a.terms())
        if (!coef.zero_below()) return false;
    return true;
}

// deepest reducible monomial of one slot: (r, i, c) for c t^i pi^{-r} with
// r > 0, p | r, p | i; pi-poles scanned deepest-first, then most negative t
std::optional<std::tuple<int, int, FqElem>> deepest_reducible(const KLaurent& w, int p) {
    for (const auto& [jexp, coef] : w.terms()) {
        if (jexp >= 0) break;
        if (jexp % p != 0) continue;
        for (const auto& [iexp, c] : coef.terms())
            if (iexp % p == 0) return std::make_tuple(-jexp, iexp, c);
    }
    return std::nullopt;
}

} // namespace

long long Asw::weight(int len, int j) const {
    long long w = 1;
    for (int k = 0; k < len - 1 - j; ++k) w *= ctx_.p;
    return w;
}

bool Asw::fil_member(const WVec& a, long long n) const {
    const int len = static_cast<int>(a.size());
    for (int j = 0; j < len; ++j) {
        if (a[j].is_exact_zero()) continue;
        if (weight(len, j) * a[j].valuation() < -n) return false;
    }
    return true;
}

long long Asw::fil_level(const WVec& a) const {
    const int len = static_cast<int>(a.size());
    long long lvl = 0;
    for (int j = 0; j < len; ++j) {
        if (a[j].is_exact_zero()) continue;
        lvl = std::max(lvl, -weight(len, j) * a[j].valuation());
    }
    return lvl;
}

Asw::Reduction Asw::reduce(const WVec& a) const {
    const int len = static_cast<int>(a.size());
    const int p = ctx_.p;
    for (const auto& slot : a)
        if (!fully_certified_below(slot))
            throw PrecisionLoss("reduction needs certified coefficients below the window");

    WVec cur = a;
    WVec shift = W_.zero(len);
    long long guard = 0;
    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (int j = len - 1; j >= 0; --j) {
            while (auto mono = deepest_reducible(cur[j], p)) {
                auto [r, i, c] = *mono;
                KLaurent beta = ctx_.k_mono(c.pth_root(), i / p, -(r / p));
                WVec u = W_.zero(len);
                u[j] = -beta;
                cur = W_.sub(cur, W_.one_minus_frob(u));
                shift = W_.add(shift, u);
                dirty = true;
                if (++guard > 2000000)
                    throw std::logic_error("reduction failed to terminate");
            }
        }
    }
    return {cur, shift};
}

long long Asw::conductor(const WVec& a) const { return fil_level(reduce(a).reduced); }

long long Asw::rec_inner(const WVec& reduced) const {
    const int len = static_cast<int>(reduced.size());
    const KLaurent& top = reduced[len - 1];
    long long top_level = top.is_exact_zero() ? 0 : std::max<long long>(0, -top.valuation());
    if (len == 1) return top_level;
    WVec rest(reduced.begin(), reduced.end() - 1);
    return std::max(top_level, static_cast<long long>(ctx_.p) * rec_inner(rest));
}

long long Asw::conductor_recursive(const WVec& a) const {
    return rec_inner(reduce(a).reduced);
}

WVec Asw::level_lift(const WVec& a, int m_target) const {
    if (a.size() != 1) throw LengthMismatch("level lift expects a length-1 vector");
    if (m_target < 1) throw LengthMismatch("lift target below 1");
    WVec r = W_.zero(m_target);
    r[m_target - 1] = a[0];
    return r;
}

WVec Asw::level_restrict(const WVec& a) const {
    if (a.size() < 2) throw LengthMismatch("restriction needs length at least 2");
    return WVec(a.begin(), a.end() - 1);
}

} // namespace tlf
