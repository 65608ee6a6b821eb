#pragma once

#include "bgd/matrix.hpp"
#include "bgd/report.hpp"

#include <string>
#include <vector>

namespace bgd {

/// A finite-dimensional associative unital algebra given by structure
/// constants.  We store the left-multiplication matrices: lm[i](k,j) is the
/// coefficient of e_k in e_i * e_j, so lm[i] * y computes e_i * y on
/// coordinate vectors.
template <class F>
struct FiniteAlgebra {
    F fld{};
    int dim = 0;
    std::vector<Mat<F>> lm;
    Mat<F> unit;  // dim x 1

    FiniteAlgebra() = default;
    FiniteAlgebra(F f, int n) : fld(f), dim(n), lm(n, Mat<F>(f, n, n)), unit(f, n, 1) {}

    typename F::Elem c(int i, int j, int k) const { return lm[i](k, j); }
    void set_c(int i, int j, int k, typename F::Elem v) { lm[i](k, j) = v; }

    /// Product of coordinate vectors.
    Mat<F> mul(const Mat<F>& x, const Mat<F>& y) const {
        require(x.rows == dim && y.rows == dim && x.cols == 1 && y.cols == 1,
                "algebra mul: bad vector shape");
        Mat<F> r(fld, dim, 1);
        for (int i = 0; i < dim; ++i)
            if (F::nz(x(i, 0)))
                r = r + (lm[i] * y) * x(i, 0);
        return r;
    }

    /// Left multiplication by an arbitrary element.
    Mat<F> lmul(const Mat<F>& x) const {
        Mat<F> r(fld, dim, dim);
        for (int i = 0; i < dim; ++i)
            if (F::nz(x(i, 0)))
                r = r + lm[i] * x(i, 0);
        return r;
    }

    /// Right multiplication by an arbitrary element: rmul(y) * x = x * y.
    Mat<F> rmul(const Mat<F>& y) const {
        Mat<F> r(fld, dim, dim);
        for (int i = 0; i < dim; ++i) {
            Mat<F> col = lm[i] * y;  // e_i * y
            for (int k = 0; k < dim; ++k)
                r(k, i) = col(k, 0);
        }
        return r;
    }

    bool same_field(const FiniteAlgebra& o) const { return fld == o.fld; }

    friend bool operator==(const FiniteAlgebra& x, const FiniteAlgebra& y) {
        return x.fld == y.fld && x.dim == y.dim && x.lm == y.lm && x.unit == y.unit;
    }
};

/// Associativity on all basis triples plus both unit laws.
template <class F>
Report check_algebra(const FiniteAlgebra<F>& A, const std::string& subject = "algebra") {
    Report rep(subject);
    bool assoc = true;
    std::string assoc_w;
    for (int i = 0; i < A.dim && assoc; ++i)
        for (int j = 0; j < A.dim && assoc; ++j) {
            // (e_i e_j) e_l = e_i (e_j e_l) for all l  <=>  L_{e_i e_j} = L_i L_j
            Mat<F> lhs = A.lmul(A.lm[i].col(j));
            Mat<F> rhs = A.lm[i] * A.lm[j];
            if (!(lhs == rhs)) {
                assoc = false;
                for (int l = 0; l < A.dim && assoc_w.empty(); ++l)
                    if (!(lhs.col(l) == rhs.col(l)))
                        assoc_w = "(i,j,l)=(" + std::to_string(i) + "," + std::to_string(j) +
                                  "," + std::to_string(l) + ")";
            }
        }
    rep.add("alg.assoc", assoc, assoc_w);
    Mat<F> lu = A.lmul(A.unit), ru = A.rmul(A.unit);
    Mat<F> id = Mat<F>::identity(A.fld, A.dim);
    rep.add("alg.unit_left", lu == id, "1*x != x");
    rep.add("alg.unit_right", ru == id, "x*1 != x");
    return rep;
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// The ground field as a one-dimensional algebra.
template <class F>
FiniteAlgebra<F> build_ground_field(F f) {
    FiniteAlgebra<F> A(f, 1);
    A.lm[0](0, 0) = f.one();
    A.unit(0, 0) = f.one();
    return A;
}

/// Mat_n: basis of matrix units e_{ij} at index i*n+j, e_{ij} e_{kl} = d_{jk} e_{il}.
template <class F>
FiniteAlgebra<F> build_matrix_algebra(F f, int n) {
    require(n >= 1, "matrix algebra needs n >= 1");
    FiniteAlgebra<F> A(f, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                A.lm[i * n + j](i * n + l, j * n + l) = f.one();
    for (int i = 0; i < n; ++i)
        A.unit(i * n + i, 0) = f.one();
    return A;
}

/// Diag_n: pairwise orthogonal idempotents e_i with unit the sum.
template <class F>
FiniteAlgebra<F> build_diagonal_algebra(F f, int n) {
    require(n >= 1, "diagonal algebra needs n >= 1");
    FiniteAlgebra<F> A(f, n);
    for (int i = 0; i < n; ++i) {
        A.lm[i](i, i) = f.one();
        A.unit(i, 0) = f.one();
    }
    return A;
}

/// A finite group presented by its Cayley table: table[g][h] = index of g*h.
struct GroupTable {
    std::vector<std::vector<int>> mul;
    int order() const { return (int)mul.size(); }

    /// Identity element index, or -1 if none.
    int identity() const {
        int n = order();
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int g = 0; g < n && ok; ++g)
                ok = mul[e][g] == g && mul[g][e] == g;
            if (ok)
                return e;
        }
        return -1;
    }

    /// Closure, identity, inverses, associativity.
    bool is_group(std::string* why = nullptr) const {
        int n = order();
        for (int g = 0; g < n; ++g) {
            if ((int)mul[g].size() != n) {
                if (why) *why = "table is not square";
                return false;
            }
            for (int h = 0; h < n; ++h)
                if (mul[g][h] < 0 || mul[g][h] >= n) {
                    if (why) *why = "entry out of range";
                    return false;
                }
        }
        if (identity() < 0) {
            if (why) *why = "no identity element";
            return false;
        }
        int e = identity();
        for (int g = 0; g < n; ++g) {
            bool has_inv = false;
            for (int h = 0; h < n; ++h)
                has_inv |= mul[g][h] == e && mul[h][g] == e;
            if (!has_inv) {
                if (why) *why = "element " + std::to_string(g) + " has no inverse";
                return false;
            }
        }
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                for (int k = 0; k < n; ++k)
                    if (mul[mul[g][h]][k] != mul[g][mul[h][k]]) {
                        if (why)
                            *why = "associativity fails at (" + std::to_string(g) + "," +
                                   std::to_string(h) + "," + std::to_string(k) + ")";
                        return false;
                    }
        return true;
    }

    bool is_abelian() const {
        for (size_t g = 0; g < mul.size(); ++g)
            for (size_t h = 0; h < mul.size(); ++h)
                if (mul[g][h] != mul[h][g])
                    return false;
        return true;
    }

    int inverse(int g) const {
        int e = identity();
        for (int h = 0; h < order(); ++h)
            if (mul[g][h] == e)
                return h;
        return -1;
    }

    static GroupTable cyclic(int n) {
        GroupTable t;
        t.mul.assign(n, std::vector<int>(n));
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                t.mul[g][h] = (g + h) % n;
        return t;
    }

    /// Direct product; index g*|H| + h.
    static GroupTable product(const GroupTable& G, const GroupTable& H) {
        int n = G.order(), m = H.order();
        GroupTable t;
        t.mul.assign(n * m, std::vector<int>(n * m));
        for (int g1 = 0; g1 < n; ++g1)
            for (int h1 = 0; h1 < m; ++h1)
                for (int g2 = 0; g2 < n; ++g2)
                    for (int h2 = 0; h2 < m; ++h2)
                        t.mul[g1 * m + h1][g2 * m + h2] =
                            G.mul[g1][g2] * m + H.mul[h1][h2];
        return t;
    }
};

/// Group algebra k[G]; basis indexed by group elements, e_g e_h = e_{gh}.
template <class F>
FiniteAlgebra<F> build_group_algebra(F f, const GroupTable& t) {
    std::string why;
    require(t.is_group(&why), "not a group: " + why);
    int n = t.order();
    FiniteAlgebra<F> A(f, n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            A.lm[g](t.mul[g][h], h) = f.one();
    A.unit(t.identity(), 0) = f.one();
    return A;
}

/// A tensor B with (a(x)b)(a'(x)b') = aa' (x) bb'; index i*dimB + j.
template <class F>
FiniteAlgebra<F> tensor_algebras(const FiniteAlgebra<F>& A, const FiniteAlgebra<F>& B) {
    require(A.same_field(B), "tensor_algebras: field mismatch");
    FiniteAlgebra<F> T(A.fld, A.dim * B.dim);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < B.dim; ++j)
            T.lm[i * B.dim + j] = kron(A.lm[i], B.lm[j]);
    T.unit = kron(A.unit, B.unit);
    return T;
}

/// Same space, reversed multiplication.
template <class F>
FiniteAlgebra<F> opposite_algebra(const FiniteAlgebra<F>& A) {
    FiniteAlgebra<F> O(A.fld, A.dim);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            for (int k = 0; k < A.dim; ++k)
                O.lm[i](k, j) = A.c(j, i, k);
    O.unit = A.unit;
    return O;
}

// ---------------------------------------------------------------------------
// Algebra maps
// ---------------------------------------------------------------------------

/// A linear map between algebras; `anti` marks maps checked against
/// f(xy) = f(y) f(x) instead (t_A: R -> A is one of these).
template <class F>
struct AlgebraMap {
    FiniteAlgebra<F> source;
    FiniteAlgebra<F> target;
    Mat<F> matrix;  // target.dim x source.dim
    bool anti = false;
};

template <class F>
Report check_algebra_map(const AlgebraMap<F>& f, const std::string& subject = "algebra map") {
    Report rep(subject);
    require(f.source.fld == f.target.fld, "algebra map: field mismatch");
    require(f.matrix.rows == f.target.dim && f.matrix.cols == f.source.dim,
            "algebra map: matrix shape mismatch");
    bool mult = true;
    std::string w;
    for (int i = 0; i < f.source.dim && mult; ++i)
        for (int j = 0; j < f.source.dim && mult; ++j) {
            Mat<F> fij = f.matrix * f.source.lm[i].col(j);
            Mat<F> fi = f.matrix.col(i), fj = f.matrix.col(j);
            Mat<F> prod = f.anti ? f.target.mul(fj, fi) : f.target.mul(fi, fj);
            if (!(fij == prod)) {
                mult = false;
                w = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        }
    rep.add(f.anti ? "map.anti_multiplicative" : "map.multiplicative", mult, w);
    rep.add("map.unital", (f.matrix * f.source.unit) == f.target.unit, "f(1) != 1");
    return rep;
}

/// f(x) = matrix * x composed as algebra maps.
template <class F>
AlgebraMap<F> compose_maps(const AlgebraMap<F>& g, const AlgebraMap<F>& f) {
    require(f.target == g.source, "compose_maps: endpoint mismatch");
    return {f.source, g.target, g.matrix * f.matrix, (bool)(f.anti ^ g.anti)};
}

}  // namespace bgd
