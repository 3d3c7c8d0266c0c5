#include "tlf/gfp_matrix.hpp"

#include <algorithm>

#include "tlf/errors.hpp"

namespace tlf {

void GfpMat::push_row(const std::vector<uint8_t>& row) {
    if (n_rows == 0 && n_cols == 0) n_cols = (int)row.size();
    if ((int)row.size() != n_cols)
        throw LengthMismatch("pushed row length does not match the matrix width");
    a.insert(a.end(), row.begin(), row.end());
    ++n_rows;
}

namespace {

uint8_t inv_mod(int p, uint8_t x) {
    for (int y = 1; y < p; ++y)
        if ((x * y) % p == 1) return (uint8_t)y;
    throw ZeroDivision("inverse of 0 mod p");
}

} // namespace

int gfp_rank(GfpMat m) {
    const int p = m.p;
    int rank = 0;
    for (int col = 0; col < m.n_cols && rank < m.n_rows; ++col) {
        int piv = -1;
        for (int i = rank; i < m.n_rows; ++i)
            if (m.at(i, col) % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.n_cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        uint8_t s = inv_mod(p, (uint8_t)(m.at(rank, col) % p));
        for (int j = col; j < m.n_cols; ++j)
            m.at(rank, j) = (uint8_t)((m.at(rank, j) * s) % p);
        for (int i = rank + 1; i < m.n_rows; ++i) {
            uint8_t f = (uint8_t)(m.at(i, col) % p);
            if (!f) continue;
            for (int j = col; j < m.n_cols; ++j)
                m.at(i, j) = (uint8_t)((m.at(i, j) + (p - f) * m.at(rank, j)) % p);
        }
        ++rank;
    }
    return rank;
}

} // namespace tlf
