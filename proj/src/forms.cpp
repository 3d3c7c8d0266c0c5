#include "tlf/forms.hpp"

namespace tlf {

Form1 to_plain(const Context& ctx, const Form1& a) {
    if (a.basis == B1::plain) return a;
    // c dlog pi = c pi^{-1} dpi
    return {a.c_t, a.c_pi * ctx.pi(-1), B1::plain};
}

Form1 to_log(const Context& ctx, const Form1& a) {
    if (a.basis == B1::log_pi) return a;
    return {a.c_t, a.c_pi * ctx.pi(1), B1::log_pi};
}

Form1 add(const Context& ctx, const Form1& a, const Form1& b) {
    Form1 bc = a.basis == B1::plain ? to_plain(ctx, b) : to_log(ctx, b);
    return {a.c_t + bc.c_t, a.c_pi + bc.c_pi, a.basis};
}

Form1 neg(const Form1& a) { return {-a.c_t, -a.c_pi, a.basis}; }

bool form1_eq(const Context& ctx, const Form1& a, const Form1& b) {
    Form1 bc = a.basis == B1::plain ? to_plain(ctx, b) : to_log(ctx, b);
    return a.c_t == bc.c_t && a.c_pi == bc.c_pi;
}

Form1 scale(const KLaurent& x, const Form1& a) {
    return {x * a.c_t, x * a.c_pi, a.basis};
}

Form2 form2_log(KLaurent c) { return {std::move(c)}; }

Form2 form2_omega(const Context& ctx, const KLaurent& a) {
    return {a * ctx.kt(1) * ctx.pi(1)};
}

KLaurent omega_coeff(const Context& ctx, const Form2& x) {
    return x.c * ctx.kt(-1) * ctx.pi(-1);
}

KLaurent mixed_coeff(const Context& ctx, const Form2& x) { return x.c * ctx.kt(-1); }

Form2 scale(const KLaurent& x, const Form2& a) { return {x * a.c}; }

bool twist_member(const Form2& x, long long n) {
    if (x.c.is_exact_zero()) return true;
    if (x.c.zero_below() && x.c.terms().empty()) {
        // certified zero below hi, unknown above
        if (x.c.hi() >= n) return true;
        throw UndeterminedValuation("twist membership beyond certified window");
    }
    return x.c.valuation() >= n;
}

Form1 d(const Context& ctx, const KLaurent& x) {
    (void)ctx;
    KLaurent dt = x.map_coeffs([](const FLaurent& u) { return u.derivative(); });
    return {dt, x.derivative(), B1::plain};
}

Form2 d(const Context& ctx, const Form1& a) {
    Form1 ap = to_plain(ctx, a);
    // d(a_t dt + a_pi dpi) = (d_t a_pi - d_pi a_t) dt ^ dpi
    KLaurent dtap = ap.c_pi.map_coeffs([](const FLaurent& u) { return u.derivative(); });
    return form2_omega(ctx, dtap - ap.c_t.derivative());
}

Form2 wedge(const Context& ctx, const Form1& a, const Form1& b) {
    Form1 ap = to_plain(ctx, a), bp = to_plain(ctx, b);
    return form2_omega(ctx, ap.c_t * bp.c_pi - ap.c_pi * bp.c_t);
}

Form1 dlog_form(const Context& ctx, const KLaurent& x) {
    KLaurent xi = x.inv();
    Form1 dx = d(ctx, x);
    return {dx.c_t * xi, dx.c_pi * xi, B1::plain};
}

Form2 cartier2(const Context& ctx, const Form2& a) {
    const int p = ctx.p;
    KLaurent kept = a.c.filter([p](int e) { return e % p == 0; });
    kept = kept.map_coeffs(
        [p](const FLaurent& u) { return u.filter([p](int e) { return e % p == 0; }); });
    return {kept.pth_root("pi")};
}

Form2 one_minus_C(const Context& ctx, const Form2& a, long long domain_twist) {
    if (!twist_member(a, ctx.p * domain_twist))
        throw TwistViolation("input not certified in twist p*n");
    return a - cartier2(ctx, a);
}

FormF1 d_f(const FLaurent& u) { return {u.derivative()}; }

FormF1 cartier_f(const FormF1& a) {
    if (a.c.is_exact_zero()) return a;
    const int p = a.c.proto().char_p();
    return {a.c.shift(1).filter([p](int e) { return e % p == 0; }).pth_root("t").shift(-1)};
}

} // namespace tlf
