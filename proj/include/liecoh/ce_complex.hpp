#ifndef LIECOH_CE_COMPLEX_HPP
#define LIECOH_CE_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "representation.hpp"

namespace liecoh {

using Tuple = std::vector<std::size_t>;

/// Strictly increasing p-tuples of {0..n-1} in lexicographic order.
class WedgeBasis {
public:
    WedgeBasis(std::size_t n, std::size_t p) : n_(n), p_(p) {
        if (p > n) throw invalid_input("wedge degree exceeds algebra dimension");
        if (n > 63) throw invalid_input("wedge basis supports at most 63 generators");
        Tuple cur;
        enumerate(0, cur);
        for (std::size_t i = 0; i < tuples_.size(); ++i) index_.emplace(mask(tuples_[i]), i);
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t degree() const noexcept { return p_; }
    std::size_t size() const noexcept { return tuples_.size(); }
    const Tuple& operator[](std::size_t i) const { return tuples_[i]; }
    const std::vector<Tuple>& tuples() const noexcept { return tuples_; }

    /// Position of an increasing tuple.
    std::size_t index_of(const Tuple& t) const { return index_.at(mask(t)); }

private:
    void enumerate(std::size_t start, Tuple& cur) {
        if (cur.size() == p_) {
            tuples_.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (p_ - cur.size()) <= n_; ++i) {
            cur.push_back(i);
            enumerate(i + 1, cur);
            cur.pop_back();
        }
    }

    static std::uint64_t mask(const Tuple& t) {
        std::uint64_t m = 0;
        for (auto i : t) m |= std::uint64_t{1} << i;
        return m;
    }

    std::size_t n_, p_;
    std::vector<Tuple> tuples_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

inline WedgeBasis wedge_basis(std::size_t n, std::size_t p) { return WedgeBasis(n, p); }

/// A finite cochain complex C^0 -> C^1 -> ... -> C^top -> 0.
/// differentials[p] has shape dims[p+1] x dims[p]; the last one maps to the zero space.
struct CochainComplex {
    std::vector<std::size_t> dims;
    std::vector<Matrix> differentials;
};

namespace detail {
inline void require_rep(const Representation& V) {
    detail::require_valid(V.algebra);
    if (!verify_rep(V).empty()) throw invalid_input("coefficient module violates the homomorphism law");
}
} // namespace detail

/// Koszul differential C^p(g,V) -> C^{p+1}(g,V). Cochain coordinate
/// (tuple index) * dim V + module index.
inline Matrix differential(const LieAlgebra& L, const Representation& V, std::size_t p) {
    detail::require_rep(V);
    const std::size_t n = L.dim(), m = V.dim;
    if (p > n) throw invalid_input("cochain degree exceeds algebra dimension");
    const WedgeBasis src(n, p);
    if (p == n) return Matrix(0, src.size() * m);
    const WedgeBasis dst(n, p + 1);
    Matrix D(dst.size() * m, src.size() * m);
    Tuple rest;
    for (std::size_t rs = 0; rs < dst.size(); ++rs) {
        const Tuple& s = dst[rs];
        // sum_i (-1)^i x_i . f(..., x_i^, ...)
        for (std::size_t i = 0; i <= p; ++i) {
            rest.assign(s.begin(), s.end());
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            const std::size_t ct = src.index_of(rest);
            const Matrix& A = V.actions[s[i]];
            const int sign = i % 2 ? -1 : 1;
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    if (!is_zero(A(a, b))) D(rs * m + a, ct * m + b) += sign * A(a, b);
        }
        // sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..., x_i^, ..., x_j^, ...)
        for (std::size_t i = 0; i <= p; ++i)
            for (std::size_t j = i + 1; j <= p; ++j) {
                const Vector& c = L.upper(s[i], s[j]);
                rest.clear();
                for (std::size_t q = 0; q <= p; ++q)
                    if (q != i && q != j) rest.push_back(s[q]);
                for (std::size_t k = 0; k < n; ++k) {
                    if (is_zero(c[k])) continue;
                    std::size_t before = 0;
                    bool repeated = false;
                    for (auto r : rest) {
                        if (r == k) repeated = true;
                        if (r < k) ++before;
                    }
                    if (repeated) continue;
                    Tuple u = rest;
                    u.insert(u.begin() + static_cast<std::ptrdiff_t>(before), k);
                    const std::size_t cu = src.index_of(u);
                    Rational coeff = c[k];
                    if ((i + j + before) % 2) coeff = -coeff;
                    for (std::size_t a = 0; a < m; ++a) D(rs * m + a, cu * m + a) += coeff;
                }
            }
    }
    return D;
}

inline CochainComplex ce_complex(const LieAlgebra& L, const Representation& V) {
    CochainComplex C;
    for (std::size_t p = 0; p <= L.dim(); ++p) {
        C.dims.push_back(WedgeBasis(L.dim(), p).size() * V.dim);
        C.differentials.push_back(differential(L, V, p));
    }
    return C;
}

/// D_{p+1} D_p = 0 for every p.
inline bool verify_chain(const CochainComplex& C) {
    for (std::size_t p = 0; p + 1 < C.differentials.size(); ++p)
        if (!(C.differentials[p + 1] * C.differentials[p]).is_zero()) return false;
    return true;
}

/// (delta f) evaluated pointwise from the Koszul sum, without assembling a matrix.
inline Vector koszul_apply(const LieAlgebra& L, const Representation& V, std::size_t p, const Vector& f) {
    detail::require_rep(V);
    const std::size_t n = L.dim(), m = V.dim;
    const WedgeBasis src(n, p);
    if (f.size() != src.size() * m) throw dimension_error("cochain has wrong length");
    if (p == n) return {};
    std::map<Tuple, std::size_t> position;
    for (std::size_t i = 0; i < src.size(); ++i) position.emplace(src[i], i);

    // f on an arbitrary ordered list of basis indices, by antisymmetry.
    auto eval = [&](Tuple args) {
        Vector out = zero_vector(m);
        int sign = 1;
        for (std::size_t a = 0; a < args.size(); ++a)
            for (std::size_t b = 0; b + 1 < args.size() - a; ++b) {
                if (args[b] == args[b + 1]) return out;
                if (args[b] > args[b + 1]) {
                    std::swap(args[b], args[b + 1]);
                    sign = -sign;
                }
            }
        for (std::size_t b = 0; b + 1 < args.size(); ++b)
            if (args[b] == args[b + 1]) return out;
        const std::size_t t = position.at(args);
        for (std::size_t a = 0; a < m; ++a) out[a] = sign * f[t * m + a];
        return out;
    };

    const WedgeBasis dst(n, p + 1);
    Vector result = zero_vector(dst.size() * m);
    for (std::size_t rs = 0; rs < dst.size(); ++rs) {
        const Tuple& s = dst[rs];
        Vector acc = zero_vector(m);
        for (std::size_t i = 0; i <= p; ++i) {
            Tuple args;
            for (std::size_t q = 0; q <= p; ++q)
                if (q != i) args.push_back(s[q]);
            Vector term = V.actions[s[i]] * eval(args);
            acc = i % 2 ? sub(std::move(acc), term) : add(std::move(acc), term);
        }
        for (std::size_t i = 0; i <= p; ++i)
            for (std::size_t j = i + 1; j <= p; ++j) {
                const Vector br = bracket(L, unit_vector(n, s[i]), unit_vector(n, s[j]));
                for (std::size_t k = 0; k < n; ++k) {
                    if (is_zero(br[k])) continue;
                    Tuple args{k};
                    for (std::size_t q = 0; q <= p; ++q)
                        if (q != i && q != j) args.push_back(s[q]);
                    Vector term = scale((i + j) % 2 ? -br[k] : br[k], eval(args));
                    acc = add(std::move(acc), term);
                }
            }
        std::copy(acc.begin(), acc.end(), result.begin() + static_cast<std::ptrdiff_t>(rs * m));
    }
    return result;
}

struct CocycleDefect {
    Tuple tuple; ///< (p+1)-tuple of basis indices
    Vector value; ///< (delta f)(tuple) in V
};

/// Tuples on which delta f does not vanish; empty iff f is a cocycle.
inline std::vector<CocycleDefect> cocycle_check(const Vector& f, const LieAlgebra& L, const Representation& V,
                                                std::size_t p) {
    const Vector df = koszul_apply(L, V, p, f);
    std::vector<CocycleDefect> out;
    if (p == L.dim()) return out;
    const WedgeBasis dst(L.dim(), p + 1);
    const std::size_t m = V.dim;
    for (std::size_t t = 0; t < dst.size(); ++t) {
        Vector v(df.begin() + static_cast<std::ptrdiff_t>(t * m), df.begin() + static_cast<std::ptrdiff_t>((t + 1) * m));
        if (!is_zero(v)) out.push_back({dst[t], std::move(v)});
    }
    return out;
}

struct DegreeCohomology {
    std::size_t degree = 0;
    std::size_t dim_c = 0, dim_z = 0, dim_b = 0, dim_h = 0;
    std::optional<Subspace> cocycles;
    std::optional<Subspace> coboundaries;
    /// Rows are cocycles reduced modulo B^p, one per cohomology class basis element.
    std::optional<Matrix> class_representatives;
};

struct CohomologyReport {
    std::vector<DegreeCohomology> degrees;

    std::vector<std::size_t> dims_h() const {
        std::vector<std::size_t> out;
        for (const auto& d : degrees) out.push_back(d.dim_h);
        return out;
    }
    const DegreeCohomology& at(std::size_t p) const {
        for (const auto& d : degrees)
            if (d.degree == p) return d;
        throw invalid_input("degree not computed");
    }
};

struct CohomologyOptions {
    std::optional<std::size_t> degree; ///< all degrees when empty
    bool representatives = false;
};

/// Reduces each cocycle modulo B and keeps those independent of B + earlier picks.
inline Matrix class_representatives(const Subspace& Z, const Subspace& B) {
    std::vector<Vector> picked;
    Subspace acc = B;
    for (std::size_t i = 0; i < Z.dim(); ++i) {
        const Vector z = Z.basis_vector(i);
        if (acc.insert(z)) picked.push_back(B.reduce(z));
    }
    return Matrix::from_rows(Z.ambient_dim(), picked);
}

namespace detail {
inline DegreeCohomology degree_cohomology(std::size_t p, std::size_t dim_c, const Matrix* incoming,
                                          const Matrix& outgoing, bool reps) {
    DegreeCohomology d;
    d.degree = p;
    d.dim_c = dim_c;
    if (reps) {
        Subspace Z = kernel_basis(outgoing);
        Subspace B = incoming ? image_basis(*incoming) : Subspace::zero(dim_c);
        d.dim_z = Z.dim();
        d.dim_b = B.dim();
        d.class_representatives = class_representatives(Z, B);
        d.cocycles = std::move(Z);
        d.coboundaries = std::move(B);
    } else {
        d.dim_z = dim_c - rank(outgoing);
        d.dim_b = incoming ? rank(*incoming) : 0;
    }
    if (d.dim_b > d.dim_z) throw internal_error("coboundaries exceed cocycles");
    d.dim_h = d.dim_z - d.dim_b;
    return d;
}
} // namespace detail

/// Cohomology of an assembled complex.
inline CohomologyReport cohomology_of(const CochainComplex& C, const CohomologyOptions& opt = {}) {
    CohomologyReport r;
    for (std::size_t p = 0; p < C.dims.size(); ++p) {
        if (opt.degree && *opt.degree != p) continue;
        const Matrix* in = p > 0 ? &C.differentials[p - 1] : nullptr;
        r.degrees.push_back(detail::degree_cohomology(p, C.dims[p], in, C.differentials[p], opt.representatives));
    }
    return r;
}

/// H^p(g, V); assembles only the differentials the requested degrees need.
inline CohomologyReport cohomology(const LieAlgebra& L, const Representation& V, const CohomologyOptions& opt = {}) {
    detail::require_rep(V);
    const std::size_t n = L.dim();
    if (opt.degree && *opt.degree > n) throw invalid_input("degree exceeds algebra dimension");
    CohomologyReport r;
    std::optional<Matrix> prev;
    for (std::size_t p = 0; p <= n; ++p) {
        const bool wanted = !opt.degree || *opt.degree == p;
        const bool needed_next = opt.degree && *opt.degree == p + 1;
        if (!wanted && !needed_next) continue;
        Matrix out = differential(L, V, p);
        if (wanted) {
            const std::size_t dim_c = WedgeBasis(n, p).size() * V.dim;
            const Matrix* in = (p > 0 && prev) ? &*prev : nullptr;
            r.degrees.push_back(detail::degree_cohomology(p, dim_c, in, out, opt.representatives));
        }
        prev = std::move(out);
    }
    return r;
}

/// dim H^p(g, Q) for p = 0..n.
inline std::vector<std::size_t> betti(const LieAlgebra& L) { return cohomology(L, trivial_rep(L, 1)).dims_h(); }

/// sum (-1)^p dim C^p == sum (-1)^p dim H^p.
inline bool euler_check(const CochainComplex& C) {
    const auto H = cohomology_of(C);
    long lhs = 0, rhs = 0;
    for (std::size_t p = 0; p < C.dims.size(); ++p) {
        const long sign = p % 2 ? -1 : 1;
        lhs += sign * static_cast<long>(C.dims[p]);
        rhs += sign * static_cast<long>(H.degrees[p].dim_h);
    }
    return lhs == rhs;
}

} // namespace liecoh

#endif
