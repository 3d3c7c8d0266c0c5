#ifndef TLF_GFP_MATRIX_HPP
#define TLF_GFP_MATRIX_HPP

#include <cstdint>
#include <vector>

namespace tlf {

// Dense row-major matrix over F_p, entries reduced to 0..p-1.
struct GfpMat {
    int p = 2;
    int n_rows = 0, n_cols = 0;
    std::vector<uint8_t> a;

    GfpMat() = default;
    GfpMat(int p_, int rows, int cols)
        : p(p_), n_rows(rows), n_cols(cols), a((size_t)rows * (size_t)cols, 0) {}

    uint8_t& at(int i, int j) { return a[(size_t)i * n_cols + j]; }
    uint8_t at(int i, int j) const { return a[(size_t)i * n_cols + j]; }

    // appends a row; fixes n_cols on the first push
    void push_row(const std::vector<uint8_t>& row);
};

// exact rank by Gaussian elimination; the copy is eliminated in place
int gfp_rank(GfpMat m);

} // namespace tlf

#endif
