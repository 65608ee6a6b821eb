#pragma once

#include "bgd/field.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace bgd {

/// Dense row-major matrix over an exact field.  All arithmetic is exact;
/// the zero-skipping loops matter because structure-constant data is sparse.
template <class F>
struct Mat {
    using E = typename F::Elem;

    F fld{};
    int rows = 0, cols = 0;
    std::vector<E> a;

    Mat() = default;
    Mat(F f, int r, int c) : fld(f), rows(r), cols(c), a((size_t)r * c, f.zero()) {
        require(r >= 0 && c >= 0, "negative matrix dimension");
    }

    static Mat identity(F f, int n) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = f.one();
        return m;
    }

    E& operator()(int i, int j) { return a[(size_t)i * cols + j]; }
    const E& operator()(int i, int j) const { return a[(size_t)i * cols + j]; }

    bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    bool is_zero() const {
        for (const E& e : a)
            if (F::nz(e))
                return false;
        return true;
    }

    Mat operator+(const Mat& o) const {
        require(same_shape(o), "matrix shape mismatch in +");
        Mat r = *this;
        for (size_t i = 0; i < a.size(); ++i)
            r.a[i] += o.a[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        require(same_shape(o), "matrix shape mismatch in -");
        Mat r = *this;
        for (size_t i = 0; i < a.size(); ++i)
            r.a[i] -= o.a[i];
        return r;
    }
    Mat operator*(const E& s) const {
        Mat r = *this;
        for (E& e : r.a)
            e *= s;
        return r;
    }

    Mat operator*(const Mat& o) const {
        require(cols == o.rows, "matrix shape mismatch in *");
        Mat r(fld, rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const E& x = (*this)(i, k);
                if (!F::nz(x))
                    continue;
                const E* brow = &o.a[(size_t)k * o.cols];
                E* rrow = &r.a[(size_t)i * o.cols];
                for (int j = 0; j < o.cols; ++j)
                    if (F::nz(brow[j]))
                        rrow[j] += x * brow[j];
            }
        return r;
    }

    Mat transpose() const {
        Mat r(fld, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    Mat col(int j) const {
        Mat r(fld, rows, 1);
        for (int i = 0; i < rows; ++i)
            r(i, 0) = (*this)(i, j);
        return r;
    }

    void set_col(int j, const Mat& v) {
        require(v.rows == rows && v.cols == 1, "bad column assignment");
        for (int i = 0; i < rows; ++i)
            (*this)(i, j) = v(i, 0);
    }

    /// Columns of `o` appended on the right.
    Mat hcat(const Mat& o) const {
        require(rows == o.rows, "row mismatch in hcat");
        Mat r(fld, rows, cols + o.cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j)
                r(i, j) = (*this)(i, j);
            for (int j = 0; j < o.cols; ++j)
                r(i, cols + j) = o(i, j);
        }
        return r;
    }
};

template <class F>
Mat<F> unit_vec(F f, int n, int i) {
    Mat<F> v(f, n, 1);
    v(i, 0) = f.one();
    return v;
}

/// Kronecker product; index (i,j) of the domain maps to i*B.cols + j.
template <class F>
Mat<F> kron(const Mat<F>& A, const Mat<F>& B) {
    Mat<F> r(A.fld, A.rows * B.rows, A.cols * B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            const auto& x = A(i, j);
            if (!F::nz(x))
                continue;
            for (int k = 0; k < B.rows; ++k)
                for (int l = 0; l < B.cols; ++l)
                    if (F::nz(B(k, l)))
                        r(i * B.rows + k, j * B.cols + l) = x * B(k, l);
        }
    return r;
}

// ---------------------------------------------------------------------------
// Row echelon machinery
// ---------------------------------------------------------------------------

/// Incremental reduced row echelon form with sparse rows.  This is the
/// workhorse behind every quotient presentation and kernel computation;
/// relation spans coming from structure constants are very sparse and the
/// dense textbook algorithm would not scale past toy sizes.
template <class F>
class SparseEchelon {
  public:
    using E = typename F::Elem;
    using Row = std::vector<std::pair<int, E>>;  // sorted by column

    SparseEchelon(F f, int cols) : fld_(f), cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return (int)rows_.size(); }

    /// Reduce a row against the current pivots and insert it if independent.
    /// Returns true when the rank grew.
    bool add_row(Row r) {
        normalize_erase_zeros(r);
        // forward reduction
        for (size_t idx = 0; idx < r.size();) {
            auto it = rows_.find(r[idx].first);
            if (it == rows_.end()) {
                ++idx;
                continue;
            }
            E c = r[idx].second;
            r = axpy(r, it->second, c);  // r -= c * pivot_row
            // restart scan at the same logical place: entries before idx are
            // untouched by construction (pivot rows start at their pivot)
        }
        if (r.empty())
            return false;
        // normalize leading coefficient to 1
        E lead_inv = fld_.inv(r.front().second);
        for (auto& [c, v] : r)
            v *= lead_inv;
        int piv = r.front().first;
        // back-substitute the new pivot out of existing rows
        for (auto& [pc, row] : rows_) {
            auto pos = find_col(row, piv);
            if (pos != row.end() && F::nz(pos->second))
                row = axpy(row, r, pos->second);
        }
        rows_.emplace(piv, std::move(r));
        return true;
    }

    void add_dense_row(const Mat<F>& m, int i) {
        Row r;
        for (int j = 0; j < m.cols; ++j)
            if (F::nz(m(i, j)))
                r.emplace_back(j, m(i, j));
        add_row(std::move(r));
    }

    /// Pivot columns in increasing order.
    std::vector<int> pivots() const {
        std::vector<int> p;
        p.reserve(rows_.size());
        for (auto& [c, _] : rows_)
            p.push_back(c);
        return p;
    }

    std::vector<int> free_cols() const {
        std::vector<int> f;
        auto it = rows_.begin();
        for (int j = 0; j < cols_; ++j) {
            if (it != rows_.end() && it->first == j)
                ++it;
            else
                f.push_back(j);
        }
        return f;
    }

    /// The reduced rows as a dense rank x cols matrix.
    Mat<F> dense_rows() const {
        Mat<F> m(fld_, rank(), cols_);
        int i = 0;
        for (auto& [piv, row] : rows_) {
            for (auto& [c, v] : row)
                m(i, c) = v;
            ++i;
        }
        return m;
    }

    /// Kernel of the matrix whose row space this echelon spans, i.e. a basis
    /// of {x : R x = 0}; one column per free column.
    Mat<F> kernel() const {
        auto fc = free_cols();
        Mat<F> K(fld_, cols_, (int)fc.size());
        for (size_t j = 0; j < fc.size(); ++j) {
            K(fc[j], (int)j) = fld_.one();
            int i = 0;
            for (auto& [piv, row] : rows_) {
                auto pos = find_col_const(row, fc[j]);
                if (pos != row.end())
                    K(piv, (int)j) -= pos->second;
                ++i;
            }
        }
        return K;
    }

    /// Reduce a dense column vector modulo the row space (normal form).
    Mat<F> reduce(Mat<F> v) const {
        require(v.rows == cols_ && v.cols == 1, "reduce expects a column vector");
        for (auto& [piv, row] : rows_) {
            const E& c = v(piv, 0);
            if (!F::nz(c))
                continue;
            E cc = c;
            for (auto& [col, val] : row)
                v(col, 0) -= cc * val;
        }
        return v;
    }

  private:
    static typename Row::iterator find_col(Row& r, int col) {
        auto it = std::lower_bound(r.begin(), r.end(), col,
                                   [](const auto& p, int c) { return p.first < c; });
        return (it != r.end() && it->first == col) ? it : r.end();
    }
    static typename Row::const_iterator find_col_const(const Row& r, int col) {
        auto it = std::lower_bound(r.begin(), r.end(), col,
                                   [](const auto& p, int c) { return p.first < c; });
        return (it != r.end() && it->first == col) ? it : r.end();
    }

    void normalize_erase_zeros(Row& r) const {
        std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        Row out;
        out.reserve(r.size());
        for (auto& [c, v] : r) {
            if (!out.empty() && out.back().first == c)
                out.back().second += v;
            else
                out.emplace_back(c, v);
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const auto& p) { return !F::nz(p.second); }),
                  out.end());
        r = std::move(out);
    }

    // r - c * s for sorted sparse rows
    Row axpy(const Row& r, const Row& s, const E& c) const {
        Row out;
        out.reserve(r.size() + s.size());
        size_t i = 0, j = 0;
        while (i < r.size() || j < s.size()) {
            if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
                out.push_back(r[i++]);
            } else if (i == r.size() || s[j].first < r[i].first) {
                out.emplace_back(s[j].first, -(c * s[j].second));
                ++j;
            } else {
                E v = r[i].second - c * s[j].second;
                if (F::nz(v))
                    out.emplace_back(r[i].first, v);
                ++i;
                ++j;
            }
        }
        return out;
    }

    F fld_;
    int cols_;
    std::map<int, Row> rows_;
};

// ---------------------------------------------------------------------------
// Public dense operations
// ---------------------------------------------------------------------------

template <class F>
struct RrefResult {
    Mat<F> R;
    std::vector<int> pivots;
    int rank = 0;
};

/// Reduced row echelon form.  Deterministic: first nonzero pivot per column,
/// rows emitted in pivot order.
template <class F>
RrefResult<F> rref(const Mat<F>& m) {
    SparseEchelon<F> ech(m.fld, m.cols);
    for (int i = 0; i < m.rows; ++i)
        ech.add_dense_row(m, i);
    RrefResult<F> out;
    out.pivots = ech.pivots();
    out.rank = ech.rank();
    Mat<F> rows = ech.dense_rows();
    out.R = Mat<F>(m.fld, m.rows, m.cols);
    for (int i = 0; i < rows.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            out.R(i, j) = rows(i, j);
    return out;
}

/// Columns span ker(m); count = cols - rank.
template <class F>
Mat<F> kernel_basis(const Mat<F>& m) {
    SparseEchelon<F> ech(m.fld, m.cols);
    for (int i = 0; i < m.rows; ++i)
        ech.add_dense_row(m, i);
    return ech.kernel();
}

/// Exact solve A X = B for any right-hand side width; std::nullopt when
/// unsolvable.  Solvability is decided exactly.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& A, const Mat<F>& B) {
    require(A.rows == B.rows, "solve: row count mismatch");
    // row reduce [A | B] together
    Mat<F> aug = A.hcat(B);
    SparseEchelon<F> ech(A.fld, aug.cols);
    for (int i = 0; i < aug.rows; ++i)
        ech.add_dense_row(aug, i);
    Mat<F> R = ech.dense_rows();
    auto piv = ech.pivots();
    // inconsistent iff some pivot lands in the B block
    for (int p : piv)
        if (p >= A.cols)
            return std::nullopt;
    Mat<F> X(A.fld, A.cols, B.cols);
    for (size_t i = 0; i < piv.size(); ++i)
        for (int j = 0; j < B.cols; ++j)
            X(piv[i], j) = R((int)i, A.cols + j);
    return X;
}

/// Inverse of a square matrix, or std::nullopt when singular.
template <class F>
std::optional<Mat<F>> invert(const Mat<F>& m) {
    require(m.rows == m.cols, "invert: matrix not square");
    auto X = solve(m, Mat<F>::identity(m.fld, m.rows));
    if (!X)
        return std::nullopt;
    // solve() found a preimage for every unit vector iff rank is full
    if (!((m * *X) == Mat<F>::identity(m.fld, m.rows)))
        return std::nullopt;
    return X;
}

template <class F>
int rank_of(const Mat<F>& m) {
    SparseEchelon<F> ech(m.fld, m.cols);
    for (int i = 0; i < m.rows; ++i)
        ech.add_dense_row(m, i);
    return ech.rank();
}

/// y = (A (x) I_n) x for a column x of height A.cols * n, without forming
/// the Kronecker product.
template <class F>
Mat<F> apply_kron_left(const Mat<F>& A, int n, const Mat<F>& x) {
    require(x.cols == 1 && x.rows == A.cols * n, "apply_kron_left: shape mismatch");
    Mat<F> y(x.fld, A.rows * n, 1);
    for (int idx = 0; idx < x.rows; ++idx) {
        if (!F::nz(x(idx, 0)))
            continue;
        int u = idx / n, w = idx % n;
        for (int a = 0; a < A.rows; ++a)
            if (F::nz(A(a, u)))
                y(a * n + w, 0) += A(a, u) * x(idx, 0);
    }
    return y;
}

/// y = (I_m (x) B) x for a column x of height m * B.cols.
template <class F>
Mat<F> apply_kron_right(int m, const Mat<F>& B, const Mat<F>& x) {
    require(x.cols == 1 && x.rows == m * B.cols, "apply_kron_right: shape mismatch");
    Mat<F> y(x.fld, m * B.rows, 1);
    for (int idx = 0; idx < x.rows; ++idx) {
        if (!F::nz(x(idx, 0)))
            continue;
        int u = idx / B.cols, w = idx % B.cols;
        for (int b = 0; b < B.rows; ++b)
            if (F::nz(B(b, w)))
                y(u * B.rows + b, 0) += B(b, w) * x(idx, 0);
    }
    return y;
}

/// vec(M) as a column, row-major.
template <class F>
Mat<F> vec_of(const Mat<F>& m) {
    Mat<F> v(m.fld, m.rows * m.cols, 1);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            v(i * m.cols + j, 0) = m(i, j);
    return v;
}

template <class F>
Mat<F> unvec(const Mat<F>& v, int rows, int cols) {
    require(v.cols == 1 && v.rows == rows * cols, "unvec: bad shape");
    Mat<F> m(v.fld, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = v(i * cols + j, 0);
    return m;
}

}  // namespace bgd
