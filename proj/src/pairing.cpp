#include "tlf/pairing.hpp"

#include "tlf/residue.hpp"

namespace tlf {

int dual_pair(const Context& ctx, const KLaurent& fbar, long long n, const Form2& eta) {
    if (!twist_member(eta, n + 1))
        throw TwistViolation("dual_pair form is not certified in twist " +
                             std::to_string(n + 1));
    return Res_K(ctx, scale(fbar, eta));
}

int rec_pair(const Context& ctx, const KLaurent& a, const MilnorSym& s) {
    return Res_K(ctx, scale(a, sym_dlog(ctx, s)));
}

int rec_pair(const Context& ctx, const CharacterRep& a, const MilnorSym& s) {
    if (a.rep.size() != 1)
        throw LengthMismatch("rec_pair needs a length-1 representative");
    return rec_pair(ctx, a.rep[0], s);
}

namespace {

FqElem basis_elt(const Context& ctx, int l) { // g^l as an element
    int idx = 1;
    for (int i = 0; i < l; ++i) idx *= ctx.p;
    return FqElem::from_index(ctx.fq(), idx);
}

} // namespace

std::vector<KLaurent> window_classes(const Context& ctx, const WindowSpec& w) {
    std::vector<KLaurent> out;
    out.reserve((size_t)w.pi_len() * w.t_len() * ctx.e);
    for (int j = w.pi_lo; j < w.pi_hi; ++j)
        for (int a = w.t_lo; a < w.t_hi; ++a)
            for (int l = 0; l < ctx.e; ++l)
                out.push_back(ctx.k_mono(basis_elt(ctx, l), a, j));
    return out;
}

std::vector<Form2> window_forms(const Context& ctx, const WindowSpec& w) {
    std::vector<Form2> out;
    out.reserve((size_t)w.pi_len() * w.t_len() * ctx.e);
    for (int j = w.pi_lo; j < w.pi_hi; ++j)
        for (int b = w.t_lo; b < w.t_hi; ++b)
            for (int l = 0; l < ctx.e; ++l)
                // g^l t^b pi^j dt^dlog pi has omega'-coefficient g^l t^{b+1} pi^j
                out.push_back(Form2{ctx.k_mono(basis_elt(ctx, l), b + 1, j)});
    return out;
}

std::vector<MilnorSym> window_symbols(const Context& ctx, const WindowSpec& w, int r) {
    if (r < 1) throw DomainError("Config", "window symbols need r >= 1");
    std::vector<MilnorSym> out;
    if (w.empty()) return out;
    for (int s = r; s < w.pi_hi; ++s)
        for (int b = w.t_lo; b < w.t_hi; ++b)
            for (int l = 0; l < ctx.e; ++l) {
                KLaurent u = ctx.k_one() + ctx.k_mono(basis_elt(ctx, l), b, s);
                out.push_back(MilnorSym::symbol(u, ctx.kt(1)));
                out.push_back(MilnorSym::symbol(u, ctx.pi()));
            }
    return out;
}

std::vector<uint8_t> window_vector(const Context& ctx, const Form2& x, const WindowSpec& w) {
    std::vector<uint8_t> out;
    out.reserve((size_t)w.pi_len() * w.t_len() * ctx.e);
    for (int j = w.pi_lo; j < w.pi_hi; ++j) {
        FLaurent row = x.c.coeff_at(j);
        for (int a = w.t_lo; a < w.t_hi; ++a) {
            FqElem c = row.coeff_at(a);
            for (int l = 0; l < ctx.e; ++l) out.push_back((uint8_t)c.digit(l));
        }
    }
    return out;
}

int window_span_rank(const Context& ctx, const std::vector<Form2>& xs, const WindowSpec& w) {
    if (w.empty()) return 0;
    GfpMat m;
    m.p = ctx.p;
    for (const auto& x : xs) m.push_row(window_vector(ctx, x, w));
    return m.n_rows == 0 ? 0 : gfp_rank(std::move(m));
}

namespace {

Gram finish(GfpMat m) {
    Gram g;
    g.rank = (m.n_rows == 0 || m.n_cols == 0) ? 0 : gfp_rank(m);
    g.mat = std::move(m);
    return g;
}

} // namespace

Gram gram_dual(const Context& ctx, const std::vector<KLaurent>& rows, long long n,
               const std::vector<Form2>& cols) {
    GfpMat m(ctx.p, (int)rows.size(), (int)cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            m.at((int)i, (int)j) = (uint8_t)dual_pair(ctx, rows[i], n, cols[j]);
    return finish(std::move(m));
}

Gram gram_rec(const Context& ctx, const std::vector<KLaurent>& rows,
              const std::vector<MilnorSym>& cols) {
    // dlogs are shared across the whole column, not recomputed per entry
    std::vector<Form2> dl;
    dl.reserve(cols.size());
    for (const auto& s : cols) dl.push_back(sym_dlog(ctx, s));
    GfpMat m(ctx.p, (int)rows.size(), (int)cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            m.at((int)i, (int)j) = (uint8_t)Res_K(ctx, scale(rows[i], dl[j]));
    return finish(std::move(m));
}

Gram gram_matrix(const Context& ctx, const WindowSpec& rows, const WindowSpec& cols,
                 Which which) {
    if (which == Which::dual)
        return gram_dual(ctx, window_classes(ctx, rows), rows.n, window_forms(ctx, cols));
    return gram_rec(ctx, window_classes(ctx, rows),
                    window_symbols(ctx, cols, (int)cols.n + 1));
}

int varpi_window_rank(const Context& ctx, int n, const WindowSpec& w) {
    if (n < 1) throw DomainError("Config", "varpi rank needs n >= 1");
    if (w.empty()) return 0;
    auto fam_n = window_symbols(ctx, w, n);
    auto fam_1 = window_symbols(ctx, w, 1);
    GfpMat den, join;
    den.p = join.p = ctx.p;
    for (const auto& s : fam_n) {
        auto v = window_vector(ctx, sym_dlog(ctx, s), w);
        den.push_row(v);
        join.push_row(v);
    }
    for (const auto& s : fam_1) join.push_row(window_vector(ctx, sym_dlog(ctx, s), w));
    int rn = den.n_rows == 0 ? 0 : gfp_rank(std::move(den));
    int rj = join.n_rows == 0 ? 0 : gfp_rank(std::move(join));
    return rj - rn;
}

} // namespace tlf
