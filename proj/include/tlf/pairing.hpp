#ifndef TLF_PAIRING_HPP
#define TLF_PAIRING_HPP

#include "tlf/asw.hpp"
#include "tlf/gfp_matrix.hpp"
#include "tlf/milnor.hpp"

namespace tlf {

// Finite exponent window with a twist/filtration index. Both ranges are
// half-open; the induced coefficient space over F_p has dimension
// e * |t_range| * |pi_range|.
struct WindowSpec {
    int t_lo = 0, t_hi = 0;
    int pi_lo = 0, pi_hi = 0;
    long long n = 0;

    int t_len() const { return t_hi > t_lo ? t_hi - t_lo : 0; }
    int pi_len() const { return pi_hi > pi_lo ? pi_hi - pi_lo : 0; }
    bool empty() const { return t_len() == 0 || pi_len() == 0; }
};

// Local-duality pairing: class of f in K/A(n) against a twist-(n+1) 2-form,
// value Res_K(f * eta) in Z/p. Independent of the representative f.
int dual_pair(const Context& ctx, const KLaurent& fbar, long long n, const Form2& eta);

// Reciprocity pairing at m = 1: Res_K(a * sym_dlog(s)), invariant under
// replacing a by a + (b - b^p).
int rec_pair(const Context& ctx, const KLaurent& a, const MilnorSym& s);
int rec_pair(const Context& ctx, const CharacterRep& a, const MilnorSym& s);

// Monomial bases, ordered lexicographically by (pi-exponent, t-exponent)
// ascending, F_p-basis digit innermost.
std::vector<KLaurent> window_classes(const Context& ctx, const WindowSpec& w);
// g^k t^b pi^j  dt ^ dlog pi over the window, same ordering
std::vector<Form2> window_forms(const Context& ctx, const WindowSpec& w);
// structured fil_r dlog family over the window: symbols {1 + g^l t^b pi^s, t}
// and {1 + g^l t^b pi^s, pi} for s in [r, w.pi_hi), b in t_range, l < e
std::vector<MilnorSym> window_symbols(const Context& ctx, const WindowSpec& w, int r);

// F_p coordinates of the omega'-coefficient on the window cells, ordering as
// above; every touched cell must be certified
std::vector<uint8_t> window_vector(const Context& ctx, const Form2& x, const WindowSpec& w);
// rank of the span of the window vectors
int window_span_rank(const Context& ctx, const std::vector<Form2>& xs, const WindowSpec& w);

enum class Which { dual, rec };

struct Gram {
    GfpMat mat;
    int rank = 0;
};

Gram gram_dual(const Context& ctx, const std::vector<KLaurent>& rows, long long n,
               const std::vector<Form2>& cols);
Gram gram_rec(const Context& ctx, const std::vector<KLaurent>& rows,
              const std::vector<MilnorSym>& cols);
// window-driven entry point: dual uses rows.n as the class modulus and pairs
// window classes against window forms; rec pairs window characters against
// the structured fil_{cols.n + 1} family
Gram gram_matrix(const Context& ctx, const WindowSpec& rows, const WindowSpec& cols,
                 Which which);

// dim over F_p of (window span of fil_1 dlog symbols) / (window span of
// fil_n dlog symbols); n >= 1
int varpi_window_rank(const Context& ctx, int n, const WindowSpec& w);

} // namespace tlf

#endif
