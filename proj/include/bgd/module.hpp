#pragma once

#include "bgd/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bgd {

/// Raised when structure induced on a quotient fails to annihilate the
/// relation span (corrupt comultiplication or action data).
class ill_defined : public error {
  public:
    explicit ill_defined(const std::string& msg) : error(msg) {}
};

// ---------------------------------------------------------------------------
// Relation spans and quotient presentations
// ---------------------------------------------------------------------------

/// A subspace of an ambient coordinate space, held in reduced echelon form.
/// Supports membership tests and normal forms without materializing a dense
/// projection; used directly for checks in large iterated tensor products.
template <class F>
class RelSpan {
  public:
    RelSpan(F f, int ambient) : ech_(f, ambient), ambient_(ambient) {}

    int ambient() const { return ambient_; }
    int rank() const { return ech_.rank(); }

    void add(typename SparseEchelon<F>::Row row) { ech_.add_row(std::move(row)); }

    void add_col(const Mat<F>& v) {
        typename SparseEchelon<F>::Row r;
        for (int i = 0; i < v.rows; ++i)
            if (F::nz(v(i, 0)))
                r.emplace_back(i, v(i, 0));
        ech_.add_row(std::move(r));
    }

    bool contains(const Mat<F>& v) const { return ech_.reduce(v).is_zero(); }
    bool equal_mod(const Mat<F>& u, const Mat<F>& v) const { return contains(u - v); }
    Mat<F> normal_form(const Mat<F>& v) const { return ech_.reduce(v); }

    const SparseEchelon<F>& echelon() const { return ech_; }

  private:
    SparseEchelon<F> ech_;
    int ambient_;
};

/// A quotient vector space presented by projection and section matrices.
/// The section picks the identity columns at the non-pivot coordinates of
/// the relation span's reduced echelon form, so presentations are
/// reproducible across runs.
template <class F>
struct Quotient {
    int ambient = 0;
    int dim = 0;
    Mat<F> proj;  // dim x ambient
    Mat<F> sect;  // ambient x dim
    Mat<F> rel;   // ambient x (ambient - dim), columns span ker(proj)

    static Quotient trivial(F f, int n) {
        Quotient q;
        q.ambient = q.dim = n;
        q.proj = Mat<F>::identity(f, n);
        q.sect = q.proj;
        q.rel = Mat<F>(f, n, 0);
        return q;
    }

    static Quotient from_relations(F f, const RelSpan<F>& span) {
        Quotient q;
        q.ambient = span.ambient();
        const auto& ech = span.echelon();
        auto piv = ech.pivots();
        auto free = ech.free_cols();
        q.dim = (int)free.size();
        Mat<F> rows = ech.dense_rows();
        q.proj = Mat<F>(f, q.dim, q.ambient);
        q.sect = Mat<F>(f, q.ambient, q.dim);
        for (int j = 0; j < q.dim; ++j) {
            q.proj(j, free[j]) = f.one();
            q.sect(free[j], j) = f.one();
        }
        // e_{pivot i} = -sum_f rows(i, f) e_f modulo the span
        for (size_t i = 0; i < piv.size(); ++i)
            for (int j = 0; j < q.dim; ++j)
                q.proj(j, piv[i]) = -rows((int)i, free[j]);
        q.rel = rows.transpose();
        return q;
    }

    /// Push an ambient operator down to the quotient (through the section).
    Mat<F> induce(const Mat<F>& op) const { return proj * op * sect; }

    /// An ambient map out of the quotient's ambient space descends iff it
    /// kills the relation span.
    bool descends(const Mat<F>& op) const { return (op * rel).is_zero(); }

    /// Endomorphism of the ambient space preserves the span iff the induced
    /// map is well defined.
    bool preserves(const Mat<F>& op) const { return (proj * op * rel).is_zero(); }
};

// ---------------------------------------------------------------------------
// Bimodules and multimodules
// ---------------------------------------------------------------------------

/// Left and right actions by matrices, one generator per algebra basis
/// element.  left_act must be an algebra map into endomorphisms, right_act
/// an anti-map, and the two must commute.
template <class F>
struct Bimodule {
    FiniteAlgebra<F> left_alg;
    FiniteAlgebra<F> right_alg;
    int dim = 0;
    std::vector<Mat<F>> left_act;
    std::vector<Mat<F>> right_act;

    Mat<F> lact(const Mat<F>& a) const { return combine(left_act, a); }
    Mat<F> ract(const Mat<F>& b) const { return combine(right_act, b); }

    static Mat<F> combine(const std::vector<Mat<F>>& fam, const Mat<F>& coeffs) {
        require(!fam.empty() && coeffs.cols == 1 && coeffs.rows == (int)fam.size(),
                "action combine: bad coefficient vector");
        Mat<F> r(fam[0].fld, fam[0].rows, fam[0].cols);
        for (int i = 0; i < coeffs.rows; ++i)
            if (F::nz(coeffs(i, 0)))
                r = r + fam[i] * coeffs(i, 0);
        return r;
    }

    /// The regular bimodule of an algebra over itself.
    static Bimodule regular(const FiniteAlgebra<F>& A) {
        Bimodule m;
        m.left_alg = A;
        m.right_alg = A;
        m.dim = A.dim;
        m.left_act = A.lm;
        m.right_act.reserve(A.dim);
        for (int j = 0; j < A.dim; ++j)
            m.right_act.push_back(A.rmul(unit_vec(A.fld, A.dim, j)));
        return m;
    }
};

/// Verifies one action family: unital and (anti-)multiplicative.
template <class F>
void check_action_family(Report& rep, const std::string& prefix,
                         const FiniteAlgebra<F>& alg, const std::vector<Mat<F>>& fam,
                         int dim, bool anti) {
    if ((int)fam.size() != alg.dim) {
        rep.add(prefix + ".shape", false, "one matrix per algebra basis element required");
        return;
    }
    for (const auto& m : fam)
        if (m.rows != dim || m.cols != dim) {
            rep.add(prefix + ".shape", false, "action matrix shape mismatch");
            return;
        }
    Mat<F> unit_op = Bimodule<F>::combine(fam, alg.unit);
    rep.add(prefix + ".unital", unit_op == Mat<F>::identity(alg.fld, dim), "1 acts nontrivially");
    bool mult = true;
    std::string w;
    for (int i = 0; i < alg.dim && mult; ++i)
        for (int j = 0; j < alg.dim && mult; ++j) {
            Mat<F> lhs = Bimodule<F>::combine(fam, alg.lm[i].col(j));  // action of e_i e_j
            Mat<F> rhs = anti ? fam[j] * fam[i] : fam[i] * fam[j];
            if (!(lhs == rhs)) {
                mult = false;
                w = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        }
    rep.add(prefix + (anti ? ".anti_multiplicative" : ".multiplicative"), mult, w);
}

template <class F>
void check_families_commute(Report& rep, const std::string& id,
                            const std::vector<Mat<F>>& a, const std::vector<Mat<F>>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            if (!(a[i] * b[j] == b[j] * a[i])) {
                rep.add(id, false,
                        "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
                return;
            }
    rep.add(id, true);
}

template <class F>
Report check_bimodule(const Bimodule<F>& M, const std::string& subject = "bimodule") {
    Report rep(subject);
    check_action_family(rep, "bim.left", M.left_alg, M.left_act, M.dim, false);
    check_action_family(rep, "bim.right", M.right_alg, M.right_act, M.dim, true);
    check_families_commute(rep, "bim.commute", M.left_act, M.right_act);
    return rep;
}

/// Four commuting actions: R from below (lower), S from above (upper),
/// each with a left and a right variant.
template <class F>
struct Multimodule {
    FiniteAlgebra<F> lower_alg;  // R
    FiniteAlgebra<F> upper_alg;  // S
    int dim = 0;
    std::vector<Mat<F>> lo_l, lo_r, up_l, up_r;

    /// View as a bimodule over R (x) S acting on both sides.
    Bimodule<F> as_bimodule() const {
        Bimodule<F> m;
        m.left_alg = tensor_algebras(lower_alg, upper_alg);
        m.right_alg = m.left_alg;
        m.dim = dim;
        for (int r = 0; r < lower_alg.dim; ++r)
            for (int s = 0; s < upper_alg.dim; ++s) {
                m.left_act.push_back(lo_l[r] * up_l[s]);
                m.right_act.push_back(lo_r[r] * up_r[s]);
            }
        return m;
    }

    /// Recover the four single-algebra actions of an (R(x)S)-bimodule.
    static Multimodule from_bimodule(const Bimodule<F>& m, const FiniteAlgebra<F>& R,
                                     const FiniteAlgebra<F>& S) {
        require(m.left_alg.dim == R.dim * S.dim && m.right_alg.dim == R.dim * S.dim,
                "from_bimodule: dimension mismatch");
        Multimodule mm;
        mm.lower_alg = R;
        mm.upper_alg = S;
        mm.dim = m.dim;
        auto embed_lower = [&](int r) {
            Mat<F> v(R.fld, R.dim * S.dim, 1);
            for (int s = 0; s < S.dim; ++s)
                v(r * S.dim + s, 0) = S.unit(s, 0);
            return v;
        };
        auto embed_upper = [&](int s) {
            Mat<F> v(R.fld, R.dim * S.dim, 1);
            for (int r = 0; r < R.dim; ++r)
                v(r * S.dim + s, 0) = R.unit(r, 0);
            return v;
        };
        for (int r = 0; r < R.dim; ++r) {
            mm.lo_l.push_back(m.lact(embed_lower(r)));
            mm.lo_r.push_back(m.ract(embed_lower(r)));
        }
        for (int s = 0; s < S.dim; ++s) {
            mm.up_l.push_back(m.lact(embed_upper(s)));
            mm.up_r.push_back(m.ract(embed_upper(s)));
        }
        return mm;
    }
};

template <class F>
Report check_multimodule(const Multimodule<F>& M, const std::string& subject = "multimodule") {
    Report rep(subject);
    check_action_family(rep, "mm.lower_left", M.lower_alg, M.lo_l, M.dim, false);
    check_action_family(rep, "mm.lower_right", M.lower_alg, M.lo_r, M.dim, true);
    check_action_family(rep, "mm.upper_left", M.upper_alg, M.up_l, M.dim, false);
    check_action_family(rep, "mm.upper_right", M.upper_alg, M.up_r, M.dim, true);
    const std::vector<std::pair<const std::vector<Mat<F>>*, const std::vector<Mat<F>>*>>
        pairs = {{&M.lo_l, &M.lo_r}, {&M.lo_l, &M.up_l}, {&M.lo_l, &M.up_r},
                 {&M.lo_r, &M.up_l}, {&M.lo_r, &M.up_r}, {&M.up_l, &M.up_r}};
    const char* names[] = {"mm.commute_ll_lr", "mm.commute_ll_ul", "mm.commute_ll_ur",
                           "mm.commute_lr_ul", "mm.commute_lr_ur", "mm.commute_ul_ur"};
    for (size_t i = 0; i < pairs.size(); ++i)
        check_families_commute(rep, names[i], *pairs[i].first, *pairs[i].second);
    return rep;
}

// ---------------------------------------------------------------------------
// Balanced tensor products
// ---------------------------------------------------------------------------

/// Relations (x <| b) (x) y - x (x) (b |> y) for b running over the balancing
/// algebra basis; `on_first` acts on the first tensorand, `on_second` on the
/// second.  Indices are row-major: (i,j) -> i*dimN + j.
template <class F>
void add_balancing_relations(RelSpan<F>& span, int dimM, int dimN,
                             const std::vector<Mat<F>>& on_first,
                             const std::vector<Mat<F>>& on_second) {
    require(on_first.size() == on_second.size(), "balancing families differ in size");
    using Row = typename SparseEchelon<F>::Row;
    for (size_t b = 0; b < on_first.size(); ++b) {
        const Mat<F>& A = on_first[b];
        const Mat<F>& B = on_second[b];
        for (int i = 0; i < dimM; ++i)
            for (int j = 0; j < dimN; ++j) {
                Row r;
                for (int k = 0; k < dimM; ++k)
                    if (F::nz(A(k, i)))
                        r.emplace_back(k * dimN + j, A(k, i));
                for (int l = 0; l < dimN; ++l)
                    if (F::nz(B(l, j)))
                        r.emplace_back(i * dimN + l, -B(l, j));
                span.add(std::move(r));
            }
    }
}

/// Same relations embedded at an interface of a longer tensor word.
/// `dims` are the factor dimensions, the balancing acts on factors
/// `pos` and `pos+1`.
template <class F>
void add_word_relations(RelSpan<F>& span, const std::vector<int>& dims, int pos,
                        const std::vector<Mat<F>>& on_first,
                        const std::vector<Mat<F>>& on_second) {
    int before = 1, after = 1;
    for (int t = 0; t < pos; ++t)
        before *= dims[t];
    for (size_t t = pos + 2; t < dims.size(); ++t)
        after *= dims[t];
    int dm = dims[pos], dn = dims[pos + 1];
    int stride_n = after;            // index stride of factor pos+1
    int stride_m = dn * after;       // index stride of factor pos
    using Row = typename SparseEchelon<F>::Row;
    for (size_t b = 0; b < on_first.size(); ++b) {
        const Mat<F>& A = on_first[b];
        const Mat<F>& B = on_second[b];
        for (int u = 0; u < before; ++u)
            for (int i = 0; i < dm; ++i)
                for (int j = 0; j < dn; ++j)
                    for (int w = 0; w < after; ++w) {
                        int base = u * dm * stride_m + w;
                        Row r;
                        for (int k = 0; k < dm; ++k)
                            if (F::nz(A(k, i)))
                                r.emplace_back(base + k * stride_m + j * stride_n, A(k, i));
                        for (int l = 0; l < dn; ++l)
                            if (F::nz(B(l, j)))
                                r.emplace_back(base + i * stride_m + l * stride_n, -B(l, j));
                        span.add(std::move(r));
                    }
    }
}

template <class F>
Mat<F> op_on_factor(F f, const std::vector<int>& dims, int pos, const Mat<F>& op) {
    Mat<F> m = Mat<F>::identity(f, 1);
    for (size_t t = 0; t < dims.size(); ++t)
        m = kron(m, (int)t == pos ? op : Mat<F>::identity(f, dims[t]));
    return m;
}

enum class Side { Left, Right };

/// Tensor product of bimodules balanced over a shared algebra: the quotient
/// of M (x)_k N by { (m <| b) (x) n - m (x) (b |> n) }.  The balancing sides
/// are explicit because compositions in this library pair upper actions of
/// one factor with lower actions of the other.  Outer actions survive on the
/// unbalanced sides; their well-definedness is verified eagerly.
template <class F>
struct BalancedTensor {
    Quotient<F> q;
    Bimodule<F> result;  // outer actions installed on the quotient
};

template <class F>
BalancedTensor<F> tensor_over_ring(const Bimodule<F>& M, Side m_side, const Bimodule<F>& N,
                                   Side n_side) {
    const auto& balM = m_side == Side::Right ? M.right_act : M.left_act;
    const auto& balN = n_side == Side::Left ? N.left_act : N.right_act;
    const auto& algM = m_side == Side::Right ? M.right_alg : M.left_alg;
    const auto& algN = n_side == Side::Left ? N.left_alg : N.right_alg;
    require(algM == algN, "tensor_over_ring: balancing algebras differ");

    F f = M.left_alg.fld;
    RelSpan<F> span(f, M.dim * N.dim);
    add_balancing_relations(span, M.dim, N.dim, balM, balN);

    BalancedTensor<F> out;
    out.q = Quotient<F>::from_relations(f, span);
    out.result.dim = out.q.dim;
    out.result.left_alg = m_side == Side::Right ? M.left_alg : M.right_alg;
    out.result.right_alg = n_side == Side::Left ? N.right_alg : N.left_alg;
    const auto& outerM = m_side == Side::Right ? M.left_act : M.right_act;
    const auto& outerN = n_side == Side::Left ? N.right_act : N.left_act;
    Mat<F> idN = Mat<F>::identity(f, N.dim), idM = Mat<F>::identity(f, M.dim);
    for (const auto& L : outerM) {
        Mat<F> amb = kron(L, idN);
        if (!out.q.preserves(amb))
            throw ill_defined("outer action on first factor not well-defined on quotient");
        out.result.left_act.push_back(out.q.induce(amb));
    }
    for (const auto& R : outerN) {
        Mat<F> amb = kron(idM, R);
        if (!out.q.preserves(amb))
            throw ill_defined("outer action on second factor not well-defined on quotient");
        out.result.right_act.push_back(out.q.induce(amb));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hom spaces
// ---------------------------------------------------------------------------

/// Basis of the solution space { f : f(p <| b) = f(p) <| b }, i.e. matrices F
/// with F actP[b] = actM[b] F for every b.  Deterministic ordering.
template <class F>
std::vector<Mat<F>> hom_basis(F f, int dimP, const std::vector<Mat<F>>& actP, int dimM,
                              const std::vector<Mat<F>>& actM) {
    require(actP.size() == actM.size(), "hom_basis: action families differ in size");
    SparseEchelon<F> ech(f, dimM * dimP);  // unknowns: H(i,k), index i*dimP + k
    using Row = typename SparseEchelon<F>::Row;
    for (size_t b = 0; b < actP.size(); ++b) {
        const Mat<F>& Rp = actP[b];
        const Mat<F>& Rm = actM[b];
        for (int i = 0; i < dimM; ++i)
            for (int j = 0; j < dimP; ++j) {
                // (H Rp - Rm H)(i,j) = 0
                Row r;
                for (int k = 0; k < dimP; ++k)
                    if (F::nz(Rp(k, j)))
                        r.emplace_back(i * dimP + k, Rp(k, j));
                for (int l = 0; l < dimM; ++l)
                    if (F::nz(Rm(i, l)))
                        r.emplace_back(l * dimP + j, -Rm(i, l));
                ech.add_row(std::move(r));
            }
    }
    Mat<F> K = ech.kernel();
    std::vector<Mat<F>> basis;
    basis.reserve(K.cols);
    for (int c = 0; c < K.cols; ++c)
        basis.push_back(unvec(K.col(c), dimM, dimP));
    return basis;
}

/// Right-B-linear maps P -> M for bimodules sharing their right algebra.
template <class F>
std::vector<Mat<F>> hom_modules(const Bimodule<F>& P, const Bimodule<F>& M) {
    require(P.right_alg == M.right_alg, "hom_modules: right algebras differ");
    return hom_basis(P.left_alg.fld, P.dim, P.right_act, M.dim, M.right_act);
}

/// Matrices commuting with every operator of a family (e.g. End_B(P) as the
/// commutant of the right action).
template <class F>
std::vector<Mat<F>> commutant_basis(F f, int dim, const std::vector<Mat<F>>& fam) {
    return hom_basis(f, dim, fam, dim, fam);
}

/// Coordinates of matrices in the span of a hom basis; solves once against
/// the stacked vec()s.
template <class F>
class HomCoords {
  public:
    HomCoords(F f, const std::vector<Mat<F>>& basis) : f_(f) {
        n_ = (int)basis.size();
        if (n_ == 0) {
            stacked_ = Mat<F>(f, 0, 0);
            return;
        }
        rows_ = basis[0].rows;
        cols_ = basis[0].cols;
        stacked_ = Mat<F>(f, rows_ * cols_, n_);
        for (int t = 0; t < n_; ++t)
            stacked_.set_col(t, vec_of(basis[t]));
    }

    /// Coordinate vector of X, or nullopt if X is outside the span.
    std::optional<Mat<F>> coords(const Mat<F>& X) const {
        if (n_ == 0)
            return X.is_zero() ? std::optional<Mat<F>>(Mat<F>(f_, 0, 1)) : std::nullopt;
        require(X.rows == rows_ && X.cols == cols_, "HomCoords: shape mismatch");
        return solve(stacked_, vec_of(X));
    }

    int size() const { return n_; }

  private:
    F f_;
    int n_ = 0, rows_ = 0, cols_ = 0;
    Mat<F> stacked_;
};

/// Basis of the joint kernel of a family of operators.
template <class F>
Mat<F> joint_kernel(F f, int dim, const std::vector<Mat<F>>& ops) {
    SparseEchelon<F> ech(f, dim);
    for (const auto& op : ops)
        for (int i = 0; i < op.rows; ++i)
            ech.add_dense_row(op, i);
    return ech.kernel();
}

enum class ActionSlot { LowerLeft, LowerRight, UpperLeft, UpperRight };

template <class F>
const std::vector<Mat<F>>& slot_of(const Multimodule<F>& M, ActionSlot s) {
    switch (s) {
        case ActionSlot::LowerLeft: return M.lo_l;
        case ActionSlot::LowerRight: return M.lo_r;
        case ActionSlot::UpperLeft: return M.up_l;
        default: return M.up_r;
    }
}

/// Basis of { x : act_a[r] x = act_b[r] x for all r }.
template <class F>
Mat<F> centralizer(const Multimodule<F>& M, ActionSlot a, ActionSlot b) {
    const auto& fa = slot_of(M, a);
    const auto& fb = slot_of(M, b);
    require(fa.size() == fb.size(), "centralizer: chosen actions differ in algebra");
    std::vector<Mat<F>> diffs;
    diffs.reserve(fa.size());
    for (size_t i = 0; i < fa.size(); ++i)
        diffs.push_back(fa[i] - fb[i]);
    return joint_kernel(M.lower_alg.fld, M.dim, diffs);
}

// ---------------------------------------------------------------------------
// Progenerator certification
// ---------------------------------------------------------------------------

template <class F>
struct ProgeneratorResult {
    Report report{"progenerator"};
    bool fin_gen = true;
    bool projective = false;
    bool generator = false;
    bool faithfully_balanced = false;
    std::vector<Mat<F>> hom_to_B;          // basis of Hom_B(P, B)
    std::optional<Mat<F>> dual_basis;      // coefficients x_{i,t} when projective
    std::vector<Mat<F>> end_B;             // basis of End_B(P)
};

/// Finitely generated projective generator + faithful balance, decided by
/// exact linear algebra:
///   - projectivity via dual-basis equations sum_i e_i <| f_i(p) = p with the
///     f_i drawn from Hom_B(P, B) (the basis vectors of P always generate, so
///     this size-dim(P) system is sufficient);
///   - generator via the trace ideal spanning all of B;
///   - faithful balance via A -> End_B(P) and B -> End_A(P)^op both bijective.
template <class F>
ProgeneratorResult<F> progenerator_report(const Bimodule<F>& P) {
    F f = P.left_alg.fld;
    ProgeneratorResult<F> out;
    out.report.add("pg.fin_gen", true);

    Bimodule<F> Breg = Bimodule<F>::regular(P.right_alg);
    out.hom_to_B = hom_modules(P, Breg);
    int h = (int)out.hom_to_B.size();
    int dB = P.right_alg.dim;

    // projectivity: unknowns x_{i,t}; equations over basis vectors p = e_j
    {
        Mat<F> sys(f, P.dim * P.dim, P.dim * h);
        Mat<F> rhs(f, P.dim * P.dim, 1);
        for (int j = 0; j < P.dim; ++j) {
            rhs(j * P.dim + j, 0) = f.one();
            for (int i = 0; i < P.dim; ++i)
                for (int t = 0; t < h; ++t) {
                    Mat<F> v = P.ract(out.hom_to_B[t].col(j)).col(i);  // e_i <| H_t(e_j)
                    for (int k = 0; k < P.dim; ++k)
                        sys(j * P.dim + k, i * h + t) = v(k, 0);
                }
        }
        out.dual_basis = solve(sys, rhs);
        out.projective = out.dual_basis.has_value();
        out.report.add("pg.projective", out.projective, "dual-basis system unsolvable");
    }

    // generator: trace ideal { f(p) } spans B
    {
        SparseEchelon<F> ech(f, dB);
        for (int t = 0; t < h; ++t) {
            Mat<F> HT = out.hom_to_B[t].transpose();
            for (int j = 0; j < P.dim; ++j)
                ech.add_dense_row(HT, j);
        }
        out.generator = ech.rank() == dB;
        out.report.add("pg.generator", out.generator,
                       "trace ideal has dimension " + std::to_string(ech.rank()) + " < " +
                           std::to_string(dB));
    }

    // faithful balance
    {
        out.end_B = commutant_basis(f, P.dim, P.right_act);
        auto end_A = commutant_basis(f, P.dim, P.left_act);
        auto span_rank_and_inj = [&](const std::vector<Mat<F>>& fam) {
            Mat<F> stacked(f, P.dim * P.dim, (int)fam.size());
            for (size_t t = 0; t < fam.size(); ++t)
                stacked.set_col((int)t, vec_of(fam[t]));
            int rank = rank_of(stacked);
            bool inj = kernel_basis(stacked).cols == 0;
            return std::pair<int, bool>(rank, inj);
        };
        auto [rA, injA] = span_rank_and_inj(P.left_act);
        auto [rB, injB] = span_rank_and_inj(P.right_act);
        bool ontoA = rA == (int)out.end_B.size();
        bool ontoB = rB == (int)end_A.size();
        out.faithfully_balanced = injA && injB && ontoA && ontoB;
        std::string w;
        if (!injA) w = "A does not act faithfully";
        else if (!ontoA) w = "image of A is a proper subalgebra of End_B(P)";
        else if (!injB) w = "B does not act faithfully";
        else if (!ontoB) w = "image of B is a proper subalgebra of End_A(P)";
        out.report.add("pg.faithfully_balanced", out.faithfully_balanced, w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Right modules over an algebra
// ---------------------------------------------------------------------------

template <class F>
struct RightModule {
    FiniteAlgebra<F> alg;
    int dim = 0;
    std::vector<Mat<F>> act;  // anti-multiplicative family

    Mat<F> ract(const Mat<F>& a) const { return Bimodule<F>::combine(act, a); }

    static RightModule regular(const FiniteAlgebra<F>& A) {
        RightModule m;
        m.alg = A;
        m.dim = A.dim;
        for (int j = 0; j < A.dim; ++j)
            m.act.push_back(A.rmul(unit_vec(A.fld, A.dim, j)));
        return m;
    }
};

template <class F>
Report check_right_module(const RightModule<F>& M, const std::string& subject = "module") {
    Report rep(subject);
    check_action_family(rep, "mod.right", M.alg, M.act, M.dim, true);
    return rep;
}

}  // namespace bgd
