#ifndef LIECOH_PAIR_COMPLEX_HPP
#define LIECOH_PAIR_COMPLEX_HPP

#include <optional>
#include <vector>

#include "ce_complex.hpp"

namespace liecoh {

/// A Lie algebra, a subalgebra H (echelon basis) and a module V, with V restricted to H.
struct PairSetup {
    LieAlgebra algebra;
    Subspace sub;
    Representation module;
    Representation restricted;
};

inline PairSetup make_pair_setup(const LieAlgebra& L, const Subspace& H, const Representation& V) {
    detail::require_rep(V);
    Representation r = restrict_rep(L, H, V);
    if (!verify_rep(r).empty()) throw internal_error("restricted module violates the homomorphism law");
    return {L, H, V, std::move(r)};
}

namespace detail {
inline Matrix minor(const Matrix& m, const Tuple& rows, const Tuple& cols) {
    Matrix out(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) out(a, b) = m(rows[a], cols[b]);
    return out;
}

inline std::size_t cochain_dim(std::size_t n, std::size_t p, std::size_t m) {
    return p > n ? 0 : WedgeBasis(n, p).size() * m;
}
} // namespace detail

/// i*: C^p(g,V) -> C^p(h,V), pulling cochains back along H's echelon basis.
inline Matrix restriction_matrix(const PairSetup& P, std::size_t p) {
    const std::size_t n = P.algebra.dim(), d = P.sub.dim(), m = P.module.dim;
    if (p > n) throw invalid_input("cochain degree exceeds algebra dimension");
    Matrix R(detail::cochain_dim(d, p, m), detail::cochain_dim(n, p, m));
    if (p > d) return R;
    const WedgeBasis hb(d, p), gb(n, p);
    for (std::size_t a = 0; a < hb.size(); ++a)
        for (std::size_t s = 0; s < gb.size(); ++s) {
            const Rational c = determinant(detail::minor(P.sub.basis(), hb[a], gb[s]));
            if (is_zero(c)) continue;
            for (std::size_t k = 0; k < m; ++k) R(a * m + k, s * m + k) = c;
        }
    return R;
}

/// Rows of the default complement of H: standard vectors at non-pivot columns.
inline Matrix default_complement(const Subspace& H) {
    const auto comp = complement_indices(H);
    Matrix c(comp.size(), H.ambient_dim());
    for (std::size_t a = 0; a < comp.size(); ++a) c(a, comp[a]) = 1;
    return c;
}

/// Extension by zero: C^p(h,V) -> C^p(g,V), vanishing whenever an argument lies in
/// the span of `complement`. The result restricts back to the input.
inline Matrix lift_matrix(const PairSetup& P, std::size_t p, const Matrix& complement) {
    const std::size_t n = P.algebra.dim(), d = P.sub.dim(), m = P.module.dim;
    if (complement.rows() + d != n || complement.cols() != n) throw dimension_error("complement has wrong shape");
    Matrix adapted(n, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) adapted(i, j) = P.sub.basis()(i, j);
    for (std::size_t i = 0; i < n - d; ++i)
        for (std::size_t j = 0; j < n; ++j) adapted(d + i, j) = complement(i, j);
    // Row i of the inverse expresses e_i in the adapted basis.
    const Matrix coords = inverse(adapted);
    Matrix lift(detail::cochain_dim(n, p, m), detail::cochain_dim(d, p, m));
    if (p > d) return lift;
    const WedgeBasis hb(d, p), gb(n, p);
    for (std::size_t s = 0; s < gb.size(); ++s)
        for (std::size_t a = 0; a < hb.size(); ++a) {
            const Rational c = determinant(detail::minor(coords, gb[s], hb[a]));
            if (is_zero(c)) continue;
            for (std::size_t k = 0; k < m; ++k) lift(s * m + k, a * m + k) = c;
        }
    return lift;
}

/// Kernel-of-restriction subcomplex, in coordinates of each degree's echelon basis.
struct RelativeComplex {
    std::vector<Subspace> spaces; ///< C^p(rel) inside C^p(g,V)
    CochainComplex complex;
};

inline RelativeComplex relative_complex(const PairSetup& P) {
    const std::size_t n = P.algebra.dim();
    RelativeComplex rel;
    for (std::size_t p = 0; p <= n; ++p) rel.spaces.push_back(kernel_basis(restriction_matrix(P, p)));
    for (std::size_t p = 0; p <= n; ++p) {
        const Subspace& K = rel.spaces[p];
        rel.complex.dims.push_back(K.dim());
        if (p == n) {
            rel.complex.differentials.emplace_back(0, K.dim());
            break;
        }
        const Matrix D = differential(P.algebra, P.module, p);
        const Subspace& K1 = rel.spaces[p + 1];
        Matrix induced(K1.dim(), K.dim());
        for (std::size_t c = 0; c < K.dim(); ++c) {
            const auto coords = K1.coordinates(D * K.basis_vector(c));
            if (!coords) throw internal_error("differential leaves the relative subcomplex");
            for (std::size_t r = 0; r < K1.dim(); ++r) induced(r, c) = (*coords)[r];
        }
        rel.complex.differentials.push_back(std::move(induced));
    }
    return rel;
}

namespace detail {
struct DegreeClasses {
    Subspace cocycles, coboundaries;
    Matrix reps; ///< rows
};

inline DegreeClasses classes(const CochainComplex& C, std::size_t p) {
    if (p >= C.dims.size()) return {Subspace::zero(0), Subspace::zero(0), Matrix(0, 0)};
    const auto r = cohomology_of(C, {p, true}).at(p);
    return {*r.cocycles, *r.coboundaries, *r.class_representatives};
}

inline std::size_t rank_modulo(const std::vector<Vector>& images, const Subspace& B) {
    if (images.empty()) return 0;
    return (B + Subspace::span(B.ambient_dim(), images)).dim() - B.dim();
}

/// Coordinates of the class of z along `reps`, modulo B.
inline Vector class_coordinates(const DegreeClasses& cl, const Vector& z) {
    std::vector<Vector> cols = cl.coboundaries.basis_vectors();
    for (std::size_t i = 0; i < cl.reps.rows(); ++i) cols.push_back(cl.reps.row(i));
    const auto x = solve(Matrix::from_columns(z.size(), cols), z);
    if (!x) throw internal_error("vector is not a cocycle of this complex");
    return Vector(x->begin() + static_cast<std::ptrdiff_t>(cl.coboundaries.dim()), x->end());
}

inline Vector embed(const Subspace& K, const Vector& coords) {
    Vector out = zero_vector(K.ambient_dim());
    for (std::size_t i = 0; i < K.dim(); ++i)
        if (!is_zero(coords[i])) out = add(std::move(out), scale(coords[i], K.basis_vector(i)));
    return out;
}
} // namespace detail

/// Raw chain-level data of the connecting map in degree p.
struct ConnectingMap {
    Matrix matrix;              ///< H^p(h,V) -> H^{p+1}(rel) in class-representative coordinates
    std::vector<Vector> images; ///< delta(lift(beta)) in C^{p+1}(rel) coordinates, one per class of H^p(h)
};

/// d: H^p(h,V) -> H^{p+1}(g,h;V), by lifting, applying delta and landing in the relative complex.
inline ConnectingMap connecting_map(const PairSetup& P, std::size_t p, const std::optional<Matrix>& complement = {}) {
    const std::size_t n = P.algebra.dim();
    const RelativeComplex rel = relative_complex(P);
    const CochainComplex Ch = ce_complex(P.restricted.algebra, P.restricted);
    const auto hcl = detail::classes(Ch, p);
    const std::size_t classes_h = hcl.reps.rows();
    ConnectingMap cm;
    if (p >= n) {
        cm.matrix = Matrix(0, classes_h);
        return cm;
    }
    const auto relcl = detail::classes(rel.complex, p + 1);
    const Matrix lift = lift_matrix(P, p, complement ? *complement : default_complement(P.sub));
    const Matrix D = differential(P.algebra, P.module, p);
    cm.matrix = Matrix(relcl.reps.rows(), classes_h);
    for (std::size_t c = 0; c < classes_h; ++c) {
        const Vector db = D * (lift * hcl.reps.row(c));
        const auto coords = rel.spaces[p + 1].coordinates(db);
        if (!coords) throw internal_error("delta of a lifted cocycle does not restrict to zero");
        const Vector k = detail::class_coordinates(relcl, *coords);
        for (std::size_t r = 0; r < k.size(); ++r) cm.matrix(r, c) = k[r];
        cm.images.push_back(*coords);
    }
    return cm;
}

struct LESDegree {
    std::size_t degree = 0;
    std::size_t dim_rel = 0, dim_g = 0, dim_h = 0;
    std::size_t rank_inclusion = 0;   ///< H^p(rel) -> H^p(g)
    std::size_t rank_restriction = 0; ///< H^p(g) -> H^p(h)
    std::size_t rank_connecting = 0;  ///< H^p(h) -> H^{p+1}(rel)
    bool exact_at_rel = false, exact_at_g = false, exact_at_h = false;
};

struct LESTable {
    std::vector<LESDegree> degrees;
    std::vector<std::size_t> dims_c_rel, dims_c_g, dims_c_h;

    bool exact() const {
        for (const auto& d : degrees)
            if (!d.exact_at_rel || !d.exact_at_g || !d.exact_at_h) return false;
        return true;
    }
};

/// Long exact sequence of the pair. Exactness at a node means matching ranks and a
/// vanishing composition of the two maps through it.
inline LESTable les_table(const PairSetup& P) {
    const std::size_t n = P.algebra.dim();
    const RelativeComplex rel = relative_complex(P);
    const CochainComplex Cg = ce_complex(P.algebra, P.module);
    const CochainComplex Ch = ce_complex(P.restricted.algebra, P.restricted);
    const Matrix complement = default_complement(P.sub);

    LESTable t;
    t.dims_c_rel = rel.complex.dims;
    t.dims_c_g = Cg.dims;
    for (std::size_t p = 0; p <= n; ++p) t.dims_c_h.push_back(p < Ch.dims.size() ? Ch.dims[p] : 0);

    std::vector<detail::DegreeClasses> gcl, hcl, rcl;
    for (std::size_t p = 0; p <= n + 1; ++p) {
        gcl.push_back(detail::classes(Cg, p));
        hcl.push_back(detail::classes(Ch, p));
        rcl.push_back(detail::classes(rel.complex, p));
    }

    // Chain-level images through each map, per degree.
    std::vector<std::size_t> rank_conn(n + 1, 0);
    std::vector<bool> conn_composes(n + 1, true); // j o d = 0 into H^{p+1}(g)
    for (std::size_t p = 0; p < n; ++p) {
        if (hcl[p].reps.rows() == 0) continue;
        const Matrix lift = lift_matrix(P, p, complement);
        const Matrix D = differential(P.algebra, P.module, p);
        std::vector<Vector> imgs;
        for (std::size_t c = 0; c < hcl[p].reps.rows(); ++c) {
            const Vector db = D * (lift * hcl[p].reps.row(c));
            const auto coords = rel.spaces[p + 1].coordinates(db);
            if (!coords) throw internal_error("delta of a lifted cocycle does not restrict to zero");
            imgs.push_back(*coords);
            if (!gcl[p + 1].coboundaries.contains(db)) conn_composes[p] = false;
        }
        rank_conn[p] = detail::rank_modulo(imgs, rcl[p + 1].coboundaries);
    }

    for (std::size_t p = 0; p <= n; ++p) {
        LESDegree d;
        d.degree = p;
        d.dim_rel = rcl[p].reps.rows();
        d.dim_g = gcl[p].reps.rows();
        d.dim_h = hcl[p].reps.rows();

        std::vector<Vector> inc;
        for (std::size_t c = 0; c < rcl[p].reps.rows(); ++c)
            inc.push_back(detail::embed(rel.spaces[p], rcl[p].reps.row(c)));
        d.rank_inclusion = detail::rank_modulo(inc, gcl[p].coboundaries);

        const Matrix R = restriction_matrix(P, p);
        std::vector<Vector> res;
        bool inc_composes = true;
        for (const auto& v : inc)
            if (!is_zero(R * v)) inc_composes = false;
        bool res_composes = true; // d o i* = 0
        const Matrix lift = lift_matrix(P, p, complement);
        const Matrix D = differential(P.algebra, P.module, p);
        for (std::size_t c = 0; c < gcl[p].reps.rows(); ++c) {
            Vector r = R * gcl[p].reps.row(c);
            if (p < n) {
                const auto coords = rel.spaces[p + 1].coordinates(D * (lift * r));
                if (!coords || !rcl[p + 1].coboundaries.contains(*coords)) res_composes = false;
            }
            res.push_back(std::move(r));
        }
        d.rank_restriction = res.empty() ? 0 : detail::rank_modulo(res, hcl[p].coboundaries);
        d.rank_connecting = rank_conn[p];

        const std::size_t incoming_rel = p == 0 ? 0 : rank_conn[p - 1];
        const bool composes_rel = p == 0 || conn_composes[p - 1];
        d.exact_at_rel = composes_rel && incoming_rel + d.rank_inclusion == d.dim_rel;
        d.exact_at_g = inc_composes && d.rank_inclusion + d.rank_restriction == d.dim_g;
        d.exact_at_h = res_composes && d.rank_restriction + d.rank_connecting == d.dim_h;
        t.degrees.push_back(d);
    }
    return t;
}

/// True iff some cocycle a on g restricts to beta up to a coboundary on h:
/// D_p a = 0 and i* a - delta c = beta for some c in C^{p-1}(h,V).
inline bool extends_to_cocycle(const PairSetup& P, std::size_t p, const Vector& beta) {
    const std::size_t n = P.algebra.dim(), d = P.sub.dim(), m = P.module.dim;
    const Matrix D = differential(P.algebra, P.module, p);
    const Matrix R = restriction_matrix(P, p);
    const std::size_t cg = detail::cochain_dim(n, p, m), ch = detail::cochain_dim(d, p, m);
    const std::size_t ch_prev = p == 0 ? 0 : detail::cochain_dim(d, p - 1, m);
    if (beta.size() != ch) throw dimension_error("cochain on h has wrong length");
    Matrix Dh_prev(ch, ch_prev);
    if (p > 0 && p - 1 < d) Dh_prev = differential(P.restricted.algebra, P.restricted, p - 1);
    Matrix A(D.rows() + ch, cg + ch_prev);
    for (std::size_t i = 0; i < D.rows(); ++i)
        for (std::size_t j = 0; j < cg; ++j) A(i, j) = D(i, j);
    for (std::size_t i = 0; i < ch; ++i) {
        for (std::size_t j = 0; j < cg; ++j) A(D.rows() + i, j) = R(i, j);
        for (std::size_t j = 0; j < ch_prev; ++j) A(D.rows() + i, cg + j) = -Dh_prev(i, j);
    }
    Vector rhs = zero_vector(D.rows() + ch);
    for (std::size_t i = 0; i < ch; ++i) rhs[D.rows() + i] = beta[i];
    return solve(A, rhs).has_value();
}

} // namespace liecoh

#endif
