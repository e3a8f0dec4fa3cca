#pragma once

// Exact integer-matrix algebra: Hermite and Smith normal forms, kernel
// bases and lattice span/index tests.  All arithmetic is arbitrary
// precision (GMP); elimination pivots can blow up even on small inputs.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace edt::intlat {

using Int = mpz_class;
using Vec = std::vector<Int>;

/// Dense row-major integer matrix with arbitrary-precision entries.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntegerMatrix identity(std::size_t n);
    /// Builds the matrix whose rows are `rows`; all rows must have equal length.
    static IntegerMatrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    IntegerMatrix transposed() const;
    /// Matrix-vector product A*v (v has length cols()).
    Vec apply(const Vec& v) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[a] += q * row[b]
    void add_row_multiple(std::size_t a, std::size_t b, const Int& q);
    /// col[a] += q * col[b]
    void add_col_multiple(std::size_t a, std::size_t b, const Int& q);
    void negate_row(std::size_t a);

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

/// Unimodular factorization U*A*V = D with D diagonal, d1 | d2 | ... | dr,
/// nonnegative entries followed by zeros.
struct SmithDecomposition {
    IntegerMatrix D;
    IntegerMatrix U;  // rows() x rows() of the source, det +-1
    IntegerMatrix V;  // cols() x cols() of the source, det +-1
    std::size_t source_rows = 0;
    std::size_t source_cols = 0;

    std::size_t rank() const;
    /// Diagonal entries d1..d_min(r,c), including trailing zeros.
    std::vector<Int> diagonal() const;
};

/// Smith normal form.  Pivot selection is smallest-absolute-value-first so
/// the factorization is reproducible across runs.  Throws std::invalid_argument
/// on an empty matrix.
SmithDecomposition snf(const IntegerMatrix& a);

/// Row-style Hermite normal form of the lattice spanned by the rows of `a`:
/// zero rows dropped, pivots positive, entries above each pivot reduced into
/// [0, pivot).  Canonical representative of the row lattice.
IntegerMatrix hnf_rows(const IntegerMatrix& a);

/// Basis of the saturated kernel lattice {v : A v = 0}, HNF-reduced for
/// deterministic output.  Every integer kernel vector is an integer
/// combination of the returned vectors.
std::vector<Vec> kernel_basis(const IntegerMatrix& a);

/// Rank of the lattice generated by `vectors` inside Z^ambient_rank.
std::size_t lattice_rank(const std::vector<Vec>& vectors, std::size_t ambient_rank);

/// True iff the subgroup of Z^ambient_rank generated by `vectors` is all of
/// Z^ambient_rank (SNF diagonal all ones at full rank).  Throws
/// std::invalid_argument on mixed vector lengths.
bool generates_full_lattice(const std::vector<Vec>& vectors, std::size_t ambient_rank);

/// Index of the generated subgroup in Z^ambient_rank: the product of the SNF
/// diagonal at full rank, std::nullopt ("infinite") otherwise.
std::optional<Int> cokernel_order(const std::vector<Vec>& vectors, std::size_t ambient_rank);

/// Exact determinant by fraction-free (Bareiss) elimination.  Square only.
Int determinant(const IntegerMatrix& a);

/// Solves x * B = v exactly over the rationals and returns x only when it is
/// integral; B must be square and invertible.  Used to express vectors in the
/// basis of a full-rank sublattice.
std::optional<Vec> solve_left_integral(const IntegerMatrix& b, const Vec& v);

}  // namespace edt::intlat
