#ifndef TLF_FORMS_HPP
#define TLF_FORMS_HPP

#include "tlf/context.hpp"

namespace tlf {

// 1-forms over K, m = 1. Two bases for the pi-leg: plain spans dt and dpi,
// log_pi spans dt and dlog(pi).
enum class B1 { plain, log_pi };

struct Form1 {
    KLaurent c_t, c_pi;
    B1 basis = B1::plain;
};

// 2-forms over K. Stored against omega' = dlog t ^ dlog pi, where Cartier and
// the twist conditions are monomial-diagonal; omega = dt ^ dpi and the mixed
// dt ^ dlog pi generator are conversions. c omega' = c t^{-1} pi^{-1} omega.
struct Form2 {
    KLaurent c; // coefficient of omega'

    Form2 operator+(const Form2& o) const { return {c + o.c}; }
    Form2 operator-(const Form2& o) const { return {c - o.c}; }
    Form2 operator-() const { return {-c}; }
    bool operator==(const Form2& o) const { return c == o.c; }
    bool is_exact_zero() const { return c.is_exact_zero(); }
};

Form1 to_plain(const Context& ctx, const Form1& a);
Form1 to_log(const Context& ctx, const Form1& a);
Form1 add(const Context& ctx, const Form1& a, const Form1& b); // in a's basis
Form1 neg(const Form1& a);
bool form1_eq(const Context& ctx, const Form1& a, const Form1& b);

Form1 scale(const KLaurent& x, const Form1& a);
Form2 form2_log(KLaurent c);
Form2 form2_omega(const Context& ctx, const KLaurent& a); // a omega
KLaurent omega_coeff(const Context& ctx, const Form2& x);
KLaurent mixed_coeff(const Context& ctx, const Form2& x); // against dt ^ dlog pi
Form2 scale(const KLaurent& x, const Form2& a);

// x lies in the twist-n submodule: mixed-basis coefficient in pi^n A, i.e.
// v_pi(c) >= n
bool twist_member(const Form2& x, long long n);

Form1 d(const Context& ctx, const KLaurent& x);
Form2 d(const Context& ctx, const Form1& a);
Form2 wedge(const Context& ctx, const Form1& a, const Form1& b);
Form1 dlog_form(const Context& ctx, const KLaurent& x); // dx / x

// Cartier on 2-forms: diagonal in the omega' basis; p-divisible monomials map
// to their p-th roots, everything else dies (it is exact).
Form2 cartier2(const Context& ctx, const Form2& a);
// alpha - C(alpha) with twist bookkeeping: input certified in twist p*n,
// output certified in twist n
Form2 one_minus_C(const Context& ctx, const Form2& a, long long domain_twist);

// 1-forms over f = F_q((t)): c dt
struct FormF1 {
    FLaurent c;

    FormF1 operator+(const FormF1& o) const { return {c + o.c}; }
    FormF1 operator-(const FormF1& o) const { return {c - o.c}; }
    bool operator==(const FormF1& o) const { return c == o.c; }
};

FormF1 d_f(const FLaurent& u); // du = u' dt
FormF1 cartier_f(const FormF1& a);

} // namespace tlf

#endif
