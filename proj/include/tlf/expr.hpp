#pragma once

#include <string>

#include "tlf/asw.hpp"
#include "tlf/context.hpp"
#include "tlf/errors.hpp"
#include "tlf/forms.hpp"
#include "tlf/milnor.hpp"
#include "tlf/weil.hpp"

namespace tlf {

// Scalar in F_q: integers, `g`, powers and products, joined by + / -.
//   "2*g^2+g+1", "-1", "g^3"
FqElem parse_fq(const Context& ctx, const std::string& text);

// Series in f = F_q((t)): terms `c*t^a` in any factor order.
//   "1+t", "t^-2+2*t", "(2*g+1)*t^3"
FLaurent parse_f(const Context& ctx, const std::string& text);

// Series in K = f((pi)): terms `c*t^a*pi^b`; parentheses may hold an
// f-level subseries, as produced by rendering.
//   "pi^-1", "t^-0*pi^-2", "(1+t)*pi^2+g*t^-1*pi^3"
KLaurent parse_k(const Context& ctx, const std::string& text);

// Witt vector literal "[x0; x1; ...]", one K-series per slot, slot 0 first.
// The number of slots must equal ctx.m.
WVec parse_witt(const Context& ctx, const std::string& text);

// Symbol sums: "{a,b}", "-{a,b}+{c,d}", "3*{a,b}".
MilnorSym parse_symbol(const Context& ctx, const std::string& text);

// 2-form: a K-series prefix followed by a basis marker.
//   "a*dt^dpi"          coefficient against dt ^ dpi
//   "a*dlog t^dlog pi"  coefficient against dlog t ^ dlog pi
//   "a*dt^dlog pi"      coefficient against dt ^ dlog pi
// A bare basis marker means coefficient 1.
Form2 parse_form2(const Context& ctx, const std::string& text);

// 1-form over f: "b*dt" (or a bare "dt").
FormF1 parse_formf(const Context& ctx, const std::string& text);

// Rational function in T over F_q: "poly" or "poly/poly".
//   "T", "1+T", "(g+1)*T^2+T"
RatFun parse_ratfun(const FqCtx& fq, const std::string& text);

// Canonical renderings; parse(render(x)) reproduces x.
std::string render_f(const FLaurent& u);
std::string render_k(const KLaurent& a);
std::string render_witt(const WVec& a);
std::string render_symbol(const MilnorSym& s);
std::string render_form2(const Form2& x);   // against dlog t ^ dlog pi
std::string render_formf(const FormF1& x);  // against dt

}  // namespace tlf
