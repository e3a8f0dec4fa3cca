#include "edtool/intlat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace edt::intlat {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("IntegerMatrix: entries length must be rows*cols");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return IntegerMatrix();
    const std::size_t c = rows.front().size();
    IntegerMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("IntegerMatrix::from_rows: mixed row lengths");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec IntegerMatrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

Vec IntegerMatrix::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Vec IntegerMatrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntegerMatrix::apply: size mismatch");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        out[i] = std::move(acc);
    }
    return out;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) at(a, j) += q * at(b, j);
}

void IntegerMatrix::add_col_multiple(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) at(i, a) += q * at(i, b);
}

void IntegerMatrix::negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (D.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SmithDecomposition::diagonal() const {
    const std::size_t n = std::min(D.rows(), D.cols());
    std::vector<Int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = D.at(i, i);
    return d;
}

namespace {

// Position of the nonzero entry of smallest absolute value in the trailing
// submatrix starting at (t,t); ties broken by row then column index.
bool find_pivot(const IntegerMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Int& e = d.at(i, j);
            if (e == 0) continue;
            Int a = abs(e);
            if (!found || a < best) {
                found = true;
                best = std::move(a);
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition snf(const IntegerMatrix& a) {
    if (a.empty()) throw std::invalid_argument("snf: empty matrix");

    SmithDecomposition s;
    s.source_rows = a.rows();
    s.source_cols = a.cols();
    s.D = a;
    s.U = IntegerMatrix::identity(a.rows());
    s.V = IntegerMatrix::identity(a.cols());
    IntegerMatrix& D = s.D;
    IntegerMatrix& U = s.U;
    IntegerMatrix& V = s.V;

    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(D, t, pi, pj)) {
                t = n;  // trailing submatrix is zero
                break;
            }
            D.swap_rows(t, pi), U.swap_rows(t, pi);
            D.swap_cols(t, pj), V.swap_cols(t, pj);

            // Clear column t and row t against the pivot.  Truncated division
            // leaves remainders strictly smaller than the pivot, so the loop
            // re-selects a smaller pivot and terminates.
            bool clean = true;
            for (std::size_t i = t + 1; i < D.rows(); ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = D.at(i, t) / D.at(t, t);
                D.add_row_multiple(i, t, -q), U.add_row_multiple(i, t, -q);
                if (D.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < D.cols(); ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = D.at(t, j) / D.at(t, t);
                D.add_col_multiple(j, t, -q), V.add_col_multiple(j, t, -q);
                if (D.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility sweep: the pivot must divide every remaining entry.
            bool divides = true;
            for (std::size_t i = t + 1; i < D.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < D.cols(); ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        D.add_row_multiple(t, i, 1), U.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (t == n) break;
    }

    for (std::size_t i = 0; i < n; ++i)
        if (D.at(i, i) < 0) {
            D.negate_row(i);
            U.negate_row(i);
        }
    return s;
}

IntegerMatrix hnf_rows(const IntegerMatrix& a) {
    if (a.empty()) return IntegerMatrix();
    IntegerMatrix h = a;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
        // Combine rows until a single nonzero remains in this column below pivot_row.
        for (;;) {
            std::size_t best = h.rows();
            for (std::size_t i = pivot_row; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                if (best == h.rows() || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
            }
            if (best == h.rows()) break;  // column is zero below pivot_row
            h.swap_rows(pivot_row, best);
            bool reduced = true;
            for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                Int q = h.at(i, col) / h.at(pivot_row, col);
                h.add_row_multiple(i, pivot_row, -q);
                if (h.at(i, col) != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (h.at(pivot_row, col) == 0) continue;
        if (h.at(pivot_row, col) < 0) h.negate_row(pivot_row);
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(pivot_row, col).get_mpz_t());
            h.add_row_multiple(i, pivot_row, -q);
        }
        ++pivot_row;
    }
    // Drop trailing zero rows.
    std::vector<Vec> rows;
    rows.reserve(pivot_row);
    for (std::size_t i = 0; i < pivot_row; ++i) rows.push_back(h.row(i));
    return IntegerMatrix::from_rows(rows);
}

std::vector<Vec> kernel_basis(const IntegerMatrix& a) {
    if (a.empty()) throw std::invalid_argument("kernel_basis: empty matrix");
    SmithDecomposition s = snf(a);
    const std::size_t r = s.rank();
    std::vector<Vec> basis;
    basis.reserve(a.cols() - r);
    for (std::size_t j = r; j < a.cols(); ++j) basis.push_back(s.V.col(j));
    if (basis.empty()) return basis;
    IntegerMatrix reduced = hnf_rows(IntegerMatrix::from_rows(basis));
    basis.clear();
    for (std::size_t i = 0; i < reduced.rows(); ++i) basis.push_back(reduced.row(i));
    return basis;
}

namespace {

IntegerMatrix stack_vectors(const std::vector<Vec>& vectors, std::size_t ambient_rank) {
    for (const Vec& v : vectors)
        if (v.size() != ambient_rank)
            throw std::invalid_argument("vector length does not match ambient rank");
    if (vectors.empty()) return IntegerMatrix(1, ambient_rank);  // zero row, rank 0
    return IntegerMatrix::from_rows(vectors);
}

}  // namespace

std::size_t lattice_rank(const std::vector<Vec>& vectors, std::size_t ambient_rank) {
    if (ambient_rank == 0) throw std::invalid_argument("ambient rank must be positive");
    return snf(stack_vectors(vectors, ambient_rank)).rank();
}

bool generates_full_lattice(const std::vector<Vec>& vectors, std::size_t ambient_rank) {
    if (ambient_rank == 0) throw std::invalid_argument("ambient rank must be positive");
    SmithDecomposition s = snf(stack_vectors(vectors, ambient_rank));
    if (s.rank() != ambient_rank) return false;
    for (const Int& d : s.diagonal())
        if (d != 1) return false;
    return true;
}

std::optional<Int> cokernel_order(const std::vector<Vec>& vectors, std::size_t ambient_rank) {
    if (ambient_rank == 0) throw std::invalid_argument("ambient rank must be positive");
    SmithDecomposition s = snf(stack_vectors(vectors, ambient_rank));
    if (s.rank() != ambient_rank) return std::nullopt;
    Int order = 1;
    for (std::size_t i = 0; i < ambient_rank; ++i) order *= s.D.at(i, i);
    return order;
}

Int determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    if (a.empty()) throw std::invalid_argument("determinant: empty matrix");
    const std::size_t n = a.rows();
    IntegerMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap == n) return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // Bareiss: division is exact
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::optional<Vec> solve_left_integral(const IntegerMatrix& b, const Vec& v) {
    if (b.rows() != b.cols()) throw std::invalid_argument("solve_left_integral: matrix not square");
    const std::size_t n = b.rows();
    if (v.size() != n) throw std::invalid_argument("solve_left_integral: size mismatch");

    // Solve B^T x^T = v^T by rational Gaussian elimination.
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = b.at(j, i);
        m[i][n] = v[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (m[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv == n) throw std::invalid_argument("solve_left_integral: singular matrix");
        std::swap(m[k], m[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            mpq_class f = m[i][k] / m[k][k];
            for (std::size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    Vec x(n);
    for (std::size_t k = 0; k < n; ++k) {
        mpq_class q = m[k][n] / m[k][k];
        q.canonicalize();
        if (q.get_den() != 1) return std::nullopt;
        x[k] = q.get_num();
    }
    return x;
}

}  // namespace edt::intlat
