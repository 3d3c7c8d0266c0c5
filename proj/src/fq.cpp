#include "tlf/fq.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace tlf {

namespace {

// dense polynomial arithmetic on digit vectors over Z/p, used only to build tables
using Digits = std::vector<uint8_t>;

Digits poly_mul_mod(const Digits& a, const Digits& b, const Digits& mod, int p) {
    std::vector<int> acc(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += a[i] * b[j];
    // reduce by the monic modulus of degree e
    int e = static_cast<int>(mod.size()) - 1;
    for (int d = static_cast<int>(acc.size()) - 1; d >= e; --d) {
        int c = acc[d] % p;
        if (c == 0) continue;
        for (int i = 0; i < e; ++i) acc[d - e + i] += c * (p - mod[i]);
        acc[d] = 0;
    }
    Digits r(e, 0);
    for (int i = 0; i < e; ++i) r[i] = static_cast<uint8_t>(acc[i] % p);
    return r;
}

Digits idx_to_digits(int idx, int p, int e) {
    Digits d(e, 0);
    for (int i = 0; i < e; ++i) {
        d[i] = static_cast<uint8_t>(idx % p);
        idx /= p;
    }
    return d;
}

int digits_to_idx(const Digits& d, int p) {
    int idx = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) idx = idx * p + d[i];
    return idx;
}

// has a root in Z/p (a degree <= 3 polynomial is reducible iff it has one)
bool has_root(const Digits& poly, int p) {
    for (int x = 0; x < p; ++x) {
        int acc = 0;
        for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i) acc = (acc * x + poly[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

Digits canonical_modulus(int p, int e) {
    // monic degree-e candidates ordered by (c_0, c_1, ..., c_{e-1}), low degree first
    int count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (int rank = 0; rank < count; ++rank) {
        Digits cand(e + 1, 0);
        int r = rank;
        // c_0 is the most significant key of the lexicographic order
        for (int i = e - 1; i >= 0; --i) {
            cand[i] = static_cast<uint8_t>(r % p);
            r /= p;
        }
        cand[e] = 1;
        if (e == 1 || !has_root(cand, p)) return cand;
    }
    throw DomainError("Internal", "no irreducible modulus found"); // unreachable for e <= 3
}

} // namespace

FqCtx::FqCtx(int p, int e) : p_(p), e_(e) {
    if ((p != 2 && p != 3 && p != 5) || e < 1 || e > 3)
        throw DomainError("Config", "supported fields: p in {2,3,5}, e in {1,2,3}");
    q_ = 1;
    for (int i = 0; i < e; ++i) q_ *= p;
    modulus_ = canonical_modulus(p, e);

    add_.resize(q_ * q_);
    sub_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.resize(q_, 0);
    frob_.resize(q_);
    ifrob_.resize(q_);
    trace_.resize(q_);

    for (int a = 0; a < q_; ++a) {
        Digits da = idx_to_digits(a, p, e);
        Digits dn(e);
        for (int i = 0; i < e; ++i) dn[i] = static_cast<uint8_t>((p - da[i]) % p);
        neg_[a] = static_cast<uint8_t>(digits_to_idx(dn, p));
        for (int b = 0; b < q_; ++b) {
            Digits db = idx_to_digits(b, p, e);
            Digits ds(e), dd(e);
            for (int i = 0; i < e; ++i) {
                ds[i] = static_cast<uint8_t>((da[i] + db[i]) % p);
                dd[i] = static_cast<uint8_t>((da[i] + p - db[i]) % p);
            }
            add_[a * q_ + b] = static_cast<uint8_t>(digits_to_idx(ds, p));
            sub_[a * q_ + b] = static_cast<uint8_t>(digits_to_idx(dd, p));
            mul_[a * q_ + b] =
                static_cast<uint8_t>(digits_to_idx(poly_mul_mod(da, db, modulus_, p), p));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = static_cast<uint8_t>(b);
                break;
            }
    for (int a = 0; a < q_; ++a) {
        uint8_t f = static_cast<uint8_t>(a);
        for (int i = 1; i < p; ++i) f = mul_[f * q_ + a]; // a^p
        frob_[a] = f;
    }
    for (int a = 0; a < q_; ++a) {
        uint8_t r = static_cast<uint8_t>(a);
        for (int i = 0; i < e - 1; ++i) r = frob_[r]; // a^(p^(e-1)), inverse of frob
        ifrob_[a] = r;
    }
    for (int a = 0; a < q_; ++a) {
        uint8_t s = 0, c = static_cast<uint8_t>(a);
        for (int i = 0; i < e; ++i) {
            s = add_[s * q_ + c];
            c = frob_[c];
        }
        // the trace is Frobenius-fixed, hence a constant polynomial
        assert(s < p_);
        trace_[a] = s;
    }
}

const FqCtx& FqCtx::get(int p, int e) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<FqCtx>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<FqCtx>(new FqCtx(p, e))).first;
    return *it->second;
}

std::string FqCtx::modulus_string() const {
    std::string s;
    for (int i = e_; i >= 0; --i) {
        int c = modulus_[i];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c) + "*";
            s += (i == 1) ? "g" : "g^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

int FqElem::digit(int i) const {
    assert(i >= 0 && i < ctx().e());
    int v = v_;
    for (int k = 0; k < i; ++k) v /= ctx().p();
    return v % ctx().p();
}

FqElem FqElem::pow(long long n) const {
    if (v_ == 0) {
        if (n < 0) throw ZeroDivision("0 raised to a negative power");
        return n == 0 ? one_like() : *this;
    }
    long long order = ctx().q() - 1;
    long long k = ((n % order) + order) % order;
    FqElem acc = one_like(), base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::string FqElem::to_string() const {
    std::string s;
    for (int i = ctx().e() - 1; i >= 0; --i) {
        int c = digit(i);
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c) + "*";
            s += (i == 1) ? "g" : "g^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace tlf
