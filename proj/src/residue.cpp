#include "tlf/residue.hpp"

namespace tlf {

ResidueClass2 residue_class(const Form2& x, long long modulo_twist) {
    return {form2_log(x.c.filter([&](int e) { return e < modulo_twist; })), modulo_twist};
}

FormF1 res_K(const Context& ctx, const Form2& x) {
    return {omega_coeff(ctx, x).coeff_at(-1)};
}

FormF1 res_K(const Context& ctx, const ResidueClass2& x) { return res_K(ctx, x.rep); }

FqElem res_f(const FormF1& a) { return a.c.coeff_at(-1); }

int Res_K(const Context& ctx, const Form2& x) { return res_f(res_K(ctx, x)).trace(); }

int chi_f(const FLaurent& b) { return b.coeff_at(-1).trace(); }

} // namespace tlf
