#ifndef MONRING_LINALG_HPP
#define MONRING_LINALG_HPP

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "monring/field.hpp"

namespace monring {

// Column-major sparse integer matrix. Entries are small (boundary maps are
// +-1), rows inside a column are strictly increasing.
struct SparseIntMatrix {
    int rows = 0;
    std::vector<std::vector<std::pair<int, int>>> cols; // (row, value)

    int col_count() const { return static_cast<int>(cols.size()); }
    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : cols) n += c.size();
        return n;
    }
};

// Dense integer matrix, row major; used for the fraction-free elimination
// path and for Smith normal form on desk-scale inputs.
struct DenseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<mpz_class> a;

    DenseIntMatrix() = default;
    DenseIntMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}
    mpz_class& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
    const mpz_class& at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

// Exact rank over the field. Rational ranks use fraction-free (Bareiss)
// elimination on dense input and exact sparse elimination on sparse input;
// GF(p) uses modular elimination throughout.
long rank(const DenseIntMatrix& m, const FieldSpec& field);
long rank(const SparseIntMatrix& m, const FieldSpec& field);

// Fraction-free Gaussian elimination rank, always over the rationals.
long rank_bareiss(const DenseIntMatrix& m);

// Smith normal form diagonal of an integer matrix: the nonzero invariant
// factors d1 | d2 | ..., all positive.
std::vector<mpz_class> smith_normal_form(DenseIntMatrix m);

// Matrix product, for d*d = 0 style assertions in tests.
SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

DenseIntMatrix to_dense(const SparseIntMatrix& m);

} // namespace monring

#endif
