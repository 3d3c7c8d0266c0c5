#ifndef TLF_WITT_POLY_HPP
#define TLF_WITT_POLY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tlf/errors.hpp"

namespace tlf {

using BigInt = boost::multiprecision::cpp_int;

// Multivariate polynomial over Z in a fixed number of variables; exponent
// vectors are dense. Used only at table-generation time, never in hot paths.
struct MPoly {
    int nvars = 0;
    std::map<std::vector<uint16_t>, BigInt> ts;

    static MPoly zero(int nv) { return MPoly{nv, {}}; }
    static MPoly variable(int nv, int i, int exp = 1);
    static MPoly constant(int nv, const BigInt& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly pow(unsigned k) const;
    MPoly scaled(const BigInt& c) const;
    MPoly divexact(const BigInt& c) const; // throws DivisionByZero on nonzero remainder

    // substitute variable i by variable j raised to exponent e (used to fold
    // the Frobenius y = x^p into the difference polynomials)
    MPoly substitute_power(int src, int dst, int e) const;

    BigInt eval_int(const std::vector<BigInt>& vars) const;
};

// Mod-p image of a universal polynomial, ready for evaluation in any ring of
// characteristic p (or any ring at all: coefficients are lifted via scalar()).
struct ModPoly {
    struct Term {
        std::vector<uint16_t> exps;
        uint8_t coeff; // in 1..p-1
    };
    int nvars = 0;
    std::vector<Term> terms;
    std::vector<uint16_t> max_exp; // per variable, for power-cache sizing

    // RingCtx must provide: R scalar(long long) and R sum(std::vector<R>&&).
    template <class R, class RingCtx>
    R eval(const std::vector<R>& vars, const RingCtx& rc) const {
        std::vector<std::vector<R>> pw(vars.size());
        for (size_t v = 0; v < vars.size(); ++v) {
            if (max_exp[v] == 0) continue;
            pw[v].reserve(max_exp[v] + 1);
            pw[v].push_back(rc.scalar(1));
            for (int k = 1; k <= max_exp[v]; ++k) pw[v].push_back(pw[v].back() * vars[v]);
        }
        std::vector<R> parts;
        parts.reserve(terms.size());
        for (const auto& t : terms) {
            R x = rc.scalar(t.coeff);
            for (size_t v = 0; v < vars.size(); ++v)
                if (t.exps[v] != 0) x = x * pw[v][t.exps[v]];
            parts.push_back(std::move(x));
        }
        return rc.sum(std::move(parts));
    }
};

// Universal Witt polynomials for length-m vectors: components i < m of the
// sum, difference, product, negation, and (1 - componentwise-p-power) maps,
// solved over Z from the ghost recursion. The sum/diff/prod families are in
// 2m variables (x_0..x_{m-1}, y_0..y_{m-1}); neg and one_minus_frob are in m
// variables. The *_z families are the exact integer solutions (these satisfy
// the ghost identities on the nose and are what the oracle tests certify);
// the ModPoly members are their mod-p images, which is all that evaluation in
// a characteristic-p ring ever sees.
struct WittPolyTable {
    int p = 0, m = 0;
    std::vector<MPoly> sum_z, diff_z, prod_z, neg_z, one_minus_frob_z;
    std::vector<ModPoly> sum, diff, prod, neg, one_minus_frob;
};

// Cached, thread-safe. Supported range: p in {2,3,5}; m <= 4 for p in {2,3},
// m <= 3 for p = 5 (generation stays exact; larger m explodes).
const WittPolyTable& witt_polys(int p, int m);

} // namespace tlf

#endif
