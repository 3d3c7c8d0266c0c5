#ifndef TLF_WEIL_HPP
#define TLF_WEIL_HPP

#include <utility>
#include <vector>

#include "tlf/fq.hpp"

namespace tlf {

// Dense polynomial over F_q in T; c[i] is the coefficient of T^i, no trailing
// exact zeros. The zero polynomial is the empty vector (degree -1).
struct Poly {
    std::vector<FqElem> c;

    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    FqElem lc() const;
    FqElem coeff(const FqCtx& fq, int i) const;
    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    std::string to_string() const;
};

Poly poly_from(std::vector<FqElem> cs); // trims trailing zeros
Poly poly_const(const FqCtx& fq, int n);
Poly poly_one(const FqCtx& fq);
Poly poly_T(const FqCtx& fq);

Poly poly_add(const FqCtx& fq, const Poly& a, const Poly& b);
Poly poly_sub(const FqCtx& fq, const Poly& a, const Poly& b);
Poly poly_mul(const FqCtx& fq, const Poly& a, const Poly& b);
// quotient and remainder; b nonzero
std::pair<Poly, Poly> poly_divmod(const FqCtx& fq, const Poly& a, const Poly& b);

// arithmetic in F_q[T]/(irr), elements reduced to degree < deg(irr)
Poly polymod_mul(const FqCtx& fq, const Poly& a, const Poly& b, const Poly& irr);
Poly polymod_inv(const FqCtx& fq, const Poly& a, const Poly& irr);
Poly polymod_pow(const FqCtx& fq, const Poly& a, long long n, const Poly& irr);

// nonzero rational function num/den in T
struct RatFun {
    Poly num, den;
};

struct Place {
    bool at_infinity = false;
    Poly irr; // monic irreducible; empty at infinity
    int degree = 1;
    std::string to_string() const;
};

// monic irreducible factors with multiplicities, ascending (degree, index),
// plus the leading coefficient; trial division, input degree <= 6
struct Factorization {
    FqElem lead;
    std::vector<std::pair<Poly, int>> factors;
};
Factorization factor_poly(const FqCtx& fq, const Poly& f);

// all places where either function has a zero or pole, plus infinity
std::vector<Place> places_of(const FqCtx& fq, const RatFun& f, const RatFun& g);

long long val_at(const FqCtx& fq, const RatFun& f, const Place& x);

// (-1)^{v(f)v(g)} f^{v(g)} / g^{v(f)} evaluated in k(x), returned as a
// polynomial of degree < deg(x) (a constant at infinity)
Poly tame_at(const FqCtx& fq, const RatFun& f, const RatFun& g, const Place& x);

// product of the q-power Frobenius conjugates, landing in F_q
FqElem norm_to_base(const FqCtx& fq, const Place& x, const Poly& alpha);

struct PlaceFactor {
    Place place;
    Poly local; // tame value in k(x)
    FqElem norm;
};

struct WeilCertificate {
    bool ok = false;
    FqElem product;
    std::vector<PlaceFactor> factors;
};

// evaluates prod_x Norm_{k(x)/F_q} tame_at(f, g, x); the result is always 1
// for correct arithmetic, so ok == false flags an implementation bug
WeilCertificate weil_check(const FqCtx& fq, const RatFun& f, const RatFun& g);

} // namespace tlf

#endif
