#ifndef TLF_RESIDUE_HPP
#define TLF_RESIDUE_HPP

#include "tlf/forms.hpp"

namespace tlf {

// Class of a 2-form modulo the twist-n integral submodule. The plain integral
// forms A omega are exactly twist 1 in the log basis, so one integer covers
// both quotients.
struct ResidueClass2 {
    Form2 rep;
    long long modulo_twist = 1;
};

// normal form: the twist-integral part is dropped eagerly
ResidueClass2 residue_class(const Form2& x, long long modulo_twist = 1);

// a omega |-> (pi^{-1} coefficient of a) dt; kills A omega exactly
FormF1 res_K(const Context& ctx, const Form2& x);
FormF1 res_K(const Context& ctx, const ResidueClass2& x);

// b dt |-> t^{-1} coefficient of b; kills integral forms
FqElem res_f(const FormF1& a);

// trace o res_f o res_K, in Z/p as 0..p-1
int Res_K(const Context& ctx, const Form2& x);

// trace o res_f applied to b dt
int chi_f(const FLaurent& b);

} // namespace tlf

#endif
