#ifndef LIECOH_REPRESENTATION_HPP
#define LIECOH_REPRESENTATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "lie_algebra.hpp"

namespace liecoh {

enum class ModuleKind { trivial, adjoint, abelianization, restricted, custom };

/// A finite-dimensional module over a Lie algebra: one action matrix per basis element.
struct Representation {
    LieAlgebra algebra;
    std::size_t dim = 0;
    std::vector<Matrix> actions;
    ModuleKind kind = ModuleKind::custom;

    /// Action of a general algebra element x = sum x_i e_i.
    Matrix action_of(const Vector& x) const {
        if (x.size() != algebra.dim()) throw dimension_error("algebra element has wrong length");
        Matrix out(dim, dim);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!is_zero(x[i])) out = out + x[i] * actions[i];
        return out;
    }
};

/// A basis pair (i, j) on which rho([e_i,e_j]) != [rho(e_i), rho(e_j)].
struct RepViolation {
    std::size_t i, j;
    Matrix defect;
};

inline std::vector<RepViolation> verify_rep(const Representation& V) {
    std::vector<RepViolation> out;
    const std::size_t n = V.algebra.dim();
    if (V.actions.size() != n) throw dimension_error("representation needs one action per basis element");
    for (const auto& a : V.actions)
        if (a.rows() != V.dim || a.cols() != V.dim) throw dimension_error("action matrix has wrong shape");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix d = V.action_of(V.algebra.structure(i, j)) -
                       (V.actions[i] * V.actions[j] - V.actions[j] * V.actions[i]);
            if (!d.is_zero()) out.push_back({i, j, std::move(d)});
        }
    return out;
}

inline Representation trivial_rep(const LieAlgebra& L, std::size_t m) {
    return {L, m, std::vector<Matrix>(L.dim(), Matrix(m, m)), ModuleKind::trivial};
}

/// ad(e_i)(e_j) = [e_i, e_j], column j of actions[i].
inline Representation adjoint_rep(const LieAlgebra& L) {
    detail::require_valid(L);
    const std::size_t n = L.dim();
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix a(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector c = L.structure(i, j);
            for (std::size_t k = 0; k < n; ++k) a(k, j) = c[k];
        }
        acts.push_back(std::move(a));
    }
    return {L, n, std::move(acts), ModuleKind::adjoint};
}

struct AbelianizationResult {
    Representation module;
    Matrix projection; ///< g -> g/[g,g] in complement coordinates
};

/// g/[g,g] with its induced action, which is checked to vanish and stored as zeros.
inline AbelianizationResult abelianization_rep(const LieAlgebra& L) {
    detail::require_valid(L);
    const Subspace derived = derived_algebra(L);
    const auto comp = complement_indices(derived);
    Matrix proj = quotient_projection(derived);
    const std::size_t m = comp.size();
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t a = 0; a < m; ++a) {
            // x . pi(v) = pi([x, v]) with v the complement lift
            const Vector image = proj * L.structure(i, comp[a]);
            if (!is_zero(image)) throw internal_error("induced action on g/[g,g] is not zero");
        }
    Representation module = trivial_rep(L, m);
    module.kind = ModuleKind::abelianization;
    return {std::move(module), std::move(proj)};
}

/// V restricted to the subalgebra H, re-expressed on H's echelon basis.
inline Representation restrict_rep(const LieAlgebra& L, const Subspace& H, const Representation& V) {
    if (!(V.algebra == L)) throw invalid_input("module is not a module over this algebra");
    LieAlgebra sub = subalgebra(L, H);
    std::vector<Matrix> acts;
    for (std::size_t a = 0; a < H.dim(); ++a) acts.push_back(V.action_of(H.basis_vector(a)));
    return {std::move(sub), V.dim, std::move(acts), ModuleKind::restricted};
}

inline std::string to_string(ModuleKind k) {
    switch (k) {
    case ModuleKind::trivial: return "trivial";
    case ModuleKind::adjoint: return "adjoint";
    case ModuleKind::abelianization: return "abelianization";
    case ModuleKind::restricted: return "restricted";
    case ModuleKind::custom: return "custom";
    }
    return "custom";
}

} // namespace liecoh

#endif
