#ifndef LIECOH_LIE_ALGEBRA_HPP
#define LIECOH_LIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"

namespace liecoh {

/// [e_i, e_j] for i < j, keyed by the 0-based pair. Missing pairs bracket to zero.
using BracketTable = std::map<std::pair<std::size_t, std::size_t>, Vector>;

struct JacobiDefect {
    std::size_t i, j, k; // i < j < k
    Vector defect;
};

enum class Validation { immediate, deferred };

class LieAlgebra;
std::vector<JacobiDefect> jacobi_defects(const LieAlgebra& L);

/// Finite-dimensional Lie algebra over Q given by structure constants on a named basis.
class LieAlgebra {
public:
    LieAlgebra() = default;

    /// Builds the algebra and, unless deferred, rejects tables that violate Jacobi.
    static LieAlgebra create(std::vector<std::string> names, const BracketTable& brackets,
                             Validation mode = Validation::immediate) {
        LieAlgebra L;
        L.n_ = names.size();
        L.names_ = std::move(names);
        L.table_.assign(L.n_ * (L.n_ ? L.n_ - 1 : 0) / 2, zero_vector(L.n_));
        for (const auto& [key, vec] : brackets) {
            const auto [i, j] = key;
            if (i >= j) throw invalid_input("bracket keys must satisfy i < j");
            if (j >= L.n_) throw invalid_input("bracket index out of range");
            if (vec.size() != L.n_) throw dimension_error("bracket vector has wrong length");
            L.table_[L.pair_index(i, j)] = vec;
        }
        if (mode == Validation::immediate) {
            auto defects = jacobi_defects(L);
            if (!defects.empty()) {
                std::string msg = "Jacobi identity fails on";
                for (const auto& d : defects)
                    msg += " (" + std::to_string(d.i + 1) + "," + std::to_string(d.j + 1) + "," +
                           std::to_string(d.k + 1) + ")";
                throw invalid_input(msg);
            }
            L.validated_ = true;
        }
        return L;
    }

    /// Basis names e1..en.
    static std::vector<std::string> default_names(std::size_t n) {
        std::vector<std::string> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back("e" + std::to_string(i + 1));
        return v;
    }

    std::size_t dim() const noexcept { return n_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    bool validated() const noexcept { return validated_; }

    /// Coefficient vector of [e_i, e_j] for any ordered pair.
    Vector structure(std::size_t i, std::size_t j) const {
        if (i >= n_ || j >= n_) throw dimension_error("basis index out of range");
        if (i == j) return zero_vector(n_);
        if (i < j) return table_[pair_index(i, j)];
        return scale(-1, table_[pair_index(j, i)]);
    }

    const Vector& upper(std::size_t i, std::size_t j) const { return table_[pair_index(i, j)]; }

    /// Nonzero entries of the table as a BracketTable.
    BracketTable brackets() const {
        BracketTable out;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (!is_zero(upper(i, j))) out.emplace(std::make_pair(i, j), upper(i, j));
        return out;
    }

    /// Same dimension, names and structure constants.
    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.n_ == b.n_ && a.names_ == b.names_ && a.table_ == b.table_;
    }

private:
    std::size_t pair_index(std::size_t i, std::size_t j) const { return i * n_ - i * (i + 1) / 2 + (j - i - 1); }

    std::size_t n_ = 0;
    std::vector<std::string> names_;
    std::vector<Vector> table_;
    bool validated_ = false;
};

inline Vector bracket_basis(const LieAlgebra& L, std::size_t i, std::size_t j) { return L.structure(i, j); }

/// Bilinear extension of the structure constants.
inline Vector bracket(const LieAlgebra& L, const Vector& u, const Vector& v) {
    const std::size_t n = L.dim();
    if (u.size() != n || v.size() != n) throw dimension_error("bracket argument has wrong length");
    Vector out = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // u_i v_j [e_i,e_j] + u_j v_i [e_j,e_i]
            const Rational w = u[i] * v[j] - u[j] * v[i];
            if (is_zero(w)) continue;
            const Vector& c = L.upper(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero(c[k])) out[k] += w * c[k];
        }
    return out;
}

/// Basis triples i<j<k where [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] != 0.
inline std::vector<JacobiDefect> jacobi_defects(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    std::vector<JacobiDefect> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
                Vector d = bracket(L, ei, L.structure(j, k));
                d = add(std::move(d), bracket(L, ej, L.structure(k, i)));
                d = add(std::move(d), bracket(L, ek, L.structure(i, j)));
                if (!is_zero(d)) out.push_back({i, j, k, std::move(d)});
            }
    return out;
}

namespace detail {
inline void require_valid(const LieAlgebra& L) {
    if (L.validated()) return;
    if (!jacobi_defects(L).empty()) throw invalid_input("structure constants violate the Jacobi identity");
}
} // namespace detail

/// [A, B] = span of brackets of basis pairs.
inline Subspace product_space(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
    if (A.ambient_dim() != L.dim() || B.ambient_dim() != L.dim())
        throw dimension_error("subspace does not live in the algebra");
    std::vector<Vector> gens;
    for (std::size_t a = 0; a < A.dim(); ++a)
        for (std::size_t b = 0; b < B.dim(); ++b) {
            Vector v = bracket(L, A.basis_vector(a), B.basis_vector(b));
            if (!is_zero(v)) gens.push_back(std::move(v));
        }
    return Subspace::span(L.dim(), gens);
}

inline Subspace derived_algebra(const LieAlgebra& L) {
    const auto full = Subspace::full(L.dim());
    return product_space(L, full, full);
}

inline bool is_subalgebra(const LieAlgebra& L, const Subspace& H) { return H.contains(product_space(L, H, H)); }

inline bool is_ideal(const LieAlgebra& L, const Subspace& I) {
    return I.contains(product_space(L, Subspace::full(L.dim()), I));
}

enum class SeriesKind { lower_central, derived };

struct SeriesResult {
    std::vector<Subspace> terms;
    /// True when the series ended on a repeated nonzero term (kept as witness).
    bool stabilized = false;
    SeriesKind kind = SeriesKind::lower_central;

    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> d;
        for (const auto& t : terms) d.push_back(t.dim());
        return d;
    }
    bool reaches_zero() const { return !terms.empty() && terms.back().dim() == 0; }
};

namespace detail {
template <typename Step>
SeriesResult iterate_series(const LieAlgebra& L, SeriesKind kind, Step step) {
    require_valid(L);
    SeriesResult s;
    s.kind = kind;
    s.terms.push_back(Subspace::full(L.dim()));
    while (s.terms.back().dim() > 0) {
        Subspace next = step(s.terms.back());
        const bool repeated = next == s.terms.back();
        s.terms.push_back(std::move(next));
        if (repeated) {
            s.stabilized = true;
            break;
        }
    }
    return s;
}
} // namespace detail

inline SeriesResult lower_central_series(const LieAlgebra& L) {
    const auto full = Subspace::full(L.dim());
    return detail::iterate_series(L, SeriesKind::lower_central,
                                  [&](const Subspace& t) { return product_space(L, full, t); });
}

inline SeriesResult derived_series(const LieAlgebra& L) {
    return detail::iterate_series(L, SeriesKind::derived,
                                  [&](const Subspace& t) { return product_space(L, t, t); });
}

/// {v : [v, e_i] = 0 for all i}.
inline Subspace center(const LieAlgebra& L) {
    detail::require_valid(L);
    const std::size_t n = L.dim();
    // Row block i, row k: coefficient of e_k in [v, e_i] = sum_j v_j c_{ji}^k.
    Matrix m(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector c = L.structure(j, i);
            for (std::size_t k = 0; k < n; ++k) m(i * n + k, j) = c[k];
        }
    return kernel_basis(m);
}

/// Least s with g^s = 0, or nullopt when the lower central series stalls above 0.
inline std::optional<std::size_t> nilpotency_class(const LieAlgebra& L) {
    const auto s = lower_central_series(L);
    if (!s.reaches_zero()) return std::nullopt;
    return s.terms.size() - 1;
}

/// Least r with g^(r) = 0, or nullopt for non-solvable algebras.
inline std::optional<std::size_t> derived_length(const LieAlgebra& L) {
    const auto s = derived_series(L);
    if (!s.reaches_zero()) return std::nullopt;
    return s.terms.size() - 1;
}

/// Block-diagonal bracket; clashing names of the second summand get primes.
inline LieAlgebra direct_sum(const LieAlgebra& A, const LieAlgebra& B) {
    const std::size_t n1 = A.dim(), n2 = B.dim(), n = n1 + n2;
    std::vector<std::string> names = A.names();
    std::set<std::string> used(names.begin(), names.end());
    for (auto name : B.names()) {
        while (used.count(name)) name += "'";
        used.insert(name);
        names.push_back(name);
    }
    BracketTable t;
    for (const auto& [key, v] : A.brackets()) {
        Vector w = zero_vector(n);
        std::copy(v.begin(), v.end(), w.begin());
        t.emplace(key, std::move(w));
    }
    for (const auto& [key, v] : B.brackets()) {
        Vector w = zero_vector(n);
        std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(n1));
        t.emplace(std::make_pair(key.first + n1, key.second + n1), std::move(w));
    }
    return LieAlgebra::create(std::move(names), t);
}

/// Standard basis indices not occupied by pivots of the subspace's echelon basis.
inline std::vector<std::size_t> complement_indices(const Subspace& S) {
    std::vector<bool> pivot(S.ambient_dim(), false);
    for (auto c : S.pivots()) pivot[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < S.ambient_dim(); ++i)
        if (!pivot[i]) out.push_back(i);
    return out;
}

/// Projection Q^n -> Q^n / S in the coordinates of complement_indices(S).
inline Matrix quotient_projection(const Subspace& S) {
    const auto comp = complement_indices(S);
    const std::size_t n = S.ambient_dim();
    Matrix p(comp.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vector r = S.reduce(unit_vector(n, i));
        for (std::size_t a = 0; a < comp.size(); ++a) p(a, i) = r[comp[a]];
    }
    return p;
}

struct QuotientResult {
    LieAlgebra algebra;
    Matrix projection;                  ///< (n - dim I) x n
    std::vector<std::size_t> complement; ///< basis indices spanning the complement
};

inline QuotientResult quotient_algebra(const LieAlgebra& L, const Subspace& I) {
    detail::require_valid(L);
    if (I.ambient_dim() != L.dim()) throw dimension_error("ideal does not live in the algebra");
    if (!is_ideal(L, I)) throw invalid_input("subspace is not an ideal");
    QuotientResult q;
    q.complement = complement_indices(I);
    q.projection = quotient_projection(I);
    std::vector<std::string> names;
    for (auto c : q.complement) names.push_back(L.names()[c]);
    BracketTable t;
    for (std::size_t a = 0; a < q.complement.size(); ++a)
        for (std::size_t b = a + 1; b < q.complement.size(); ++b) {
            Vector v = q.projection * L.structure(q.complement[a], q.complement[b]);
            if (!is_zero(v)) t.emplace(std::make_pair(a, b), std::move(v));
        }
    q.algebra = LieAlgebra::create(std::move(names), t);
    return q;
}

/// The subalgebra H as a Lie algebra on its echelon basis.
inline LieAlgebra subalgebra(const LieAlgebra& L, const Subspace& H) {
    if (H.ambient_dim() != L.dim()) throw dimension_error("subalgebra does not live in the algebra");
    if (!is_subalgebra(L, H)) throw invalid_input("subspace is not closed under the bracket");
    const std::size_t d = H.dim();
    std::vector<std::string> names;
    for (std::size_t a = 0; a < d; ++a) {
        const Vector v = H.basis_vector(a);
        const Vector unit = unit_vector(L.dim(), H.pivots()[a]);
        names.push_back(v == unit ? L.names()[H.pivots()[a]] : "h" + std::to_string(a + 1));
    }
    BracketTable t;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            auto c = H.coordinates(bracket(L, H.basis_vector(a), H.basis_vector(b)));
            if (!c) throw internal_error("bracket left a closed subspace");
            if (!is_zero(*c)) t.emplace(std::make_pair(a, b), std::move(*c));
        }
    return LieAlgebra::create(std::move(names), t);
}

/// Abelian algebra of dimension n, basis e1..en.
inline LieAlgebra abelian(std::size_t n) { return LieAlgebra::create(LieAlgebra::default_names(n), {}); }

} // namespace liecoh

#endif
