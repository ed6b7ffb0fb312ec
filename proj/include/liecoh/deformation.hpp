#ifndef LIECOH_DEFORMATION_HPP
#define LIECOH_DEFORMATION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ce_complex.hpp"
#include "poly.hpp"

namespace liecoh {

using PolyVector = std::vector<Poly>;
using PolyBracketTable = std::map<std::pair<std::size_t, std::size_t>, PolyVector>;

/// One-parameter family of brackets whose structure constants are polynomials in t.
struct DeformationFamily {
    std::vector<std::string> names;
    PolyBracketTable brackets; ///< i < j, nonzero entries only

    std::size_t dim() const noexcept { return names.size(); }

    PolyVector structure(std::size_t i, std::size_t j) const {
        if (i == j) return PolyVector(dim());
        const bool flip = i > j;
        auto it = brackets.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
        if (it == brackets.end()) return PolyVector(dim());
        if (!flip) return it->second;
        PolyVector v = it->second;
        for (auto& p : v) p = -p;
        return v;
    }

    friend bool operator==(const DeformationFamily&, const DeformationFamily&) = default;
};

/// Family with t-independent structure constants.
inline DeformationFamily constant_family(const LieAlgebra& L) {
    DeformationFamily F;
    F.names = L.names();
    for (const auto& [key, v] : L.brackets()) {
        PolyVector pv;
        for (const auto& c : v) pv.emplace_back(c);
        F.brackets.emplace(key, std::move(pv));
    }
    return F;
}

struct FamilyJacobiDefect {
    std::size_t i, j, k;
    PolyVector defect;
};

/// Jacobi defect of every basis triple as polynomials in t; empty iff Jacobi holds for all t.
inline std::vector<FamilyJacobiDefect> family_jacobi(const DeformationFamily& F) {
    const std::size_t n = F.dim();
    for (const auto& [key, v] : F.brackets)
        if (key.first >= key.second || key.second >= n || v.size() != n)
            throw invalid_input("malformed family bracket table");
    // [e_a, sum_l c_bc^l e_l]
    auto nested = [&](std::size_t a, std::size_t b, std::size_t c) {
        PolyVector out(n);
        const PolyVector inner = F.structure(b, c);
        for (std::size_t l = 0; l < n; ++l) {
            if (inner[l].is_zero()) continue;
            const PolyVector outer = F.structure(a, l);
            for (std::size_t k = 0; k < n; ++k)
                if (!outer[k].is_zero()) out[k] += inner[l] * outer[k];
        }
        return out;
    };
    std::vector<FamilyJacobiDefect> defects;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                PolyVector d = nested(i, j, k);
                const PolyVector d2 = nested(j, k, i), d3 = nested(k, i, j);
                bool zero = true;
                for (std::size_t l = 0; l < n; ++l) {
                    d[l] += d2[l];
                    d[l] += d3[l];
                    zero = zero && d[l].is_zero();
                }
                if (!zero) defects.push_back({i, j, k, std::move(d)});
            }
    return defects;
}

namespace detail {
inline BracketTable substitute(const DeformationFamily& F, const Rational& t0) {
    BracketTable t;
    for (const auto& [key, pv] : F.brackets) {
        Vector v;
        for (const auto& p : pv) v.push_back(p(t0));
        if (!is_zero(v)) t.emplace(key, std::move(v));
    }
    return t;
}
} // namespace detail

/// Exact substitution t = t0; throws if the result violates Jacobi.
inline LieAlgebra evaluate(const DeformationFamily& F, const Rational& t0) {
    return LieAlgebra::create(F.names, detail::substitute(F, t0));
}

enum class ClassKind { nilpotent, solvable_non_nilpotent, non_solvable };

struct Classification {
    ClassKind kind = ClassKind::non_solvable;
    std::optional<std::size_t> nilpotency_index;
    std::optional<std::size_t> derived_length;
    std::vector<std::size_t> lower_central_dims;
    std::vector<std::size_t> derived_dims;
};

inline Classification classify(const LieAlgebra& L) {
    Classification c;
    const auto lcs = lower_central_series(L);
    const auto ds = derived_series(L);
    c.lower_central_dims = lcs.dims();
    c.derived_dims = ds.dims();
    if (lcs.reaches_zero()) c.nilpotency_index = lcs.terms.size() - 1;
    if (ds.reaches_zero()) c.derived_length = ds.terms.size() - 1;
    c.kind = c.nilpotency_index ? ClassKind::nilpotent
             : c.derived_length ? ClassKind::solvable_non_nilpotent
                                : ClassKind::non_solvable;
    return c;
}

inline std::string to_string(const Classification& c) {
    switch (c.kind) {
    case ClassKind::nilpotent: return "nilpotent(" + std::to_string(*c.nilpotency_index) + ")";
    case ClassKind::solvable_non_nilpotent: return "solvable-non-nilpotent(" + std::to_string(*c.derived_length) + ")";
    case ClassKind::non_solvable: return "non-solvable";
    }
    return "non-solvable";
}

struct SampleVerdict {
    Rational t0;
    bool jacobi_ok = false;
    std::optional<Classification> classification; ///< absent when Jacobi fails at t0
};

inline SampleVerdict classify_sample(const DeformationFamily& F, const Rational& t0) {
    SampleVerdict v;
    v.t0 = t0;
    const LieAlgebra L = LieAlgebra::create(F.names, detail::substitute(F, t0), Validation::deferred);
    v.jacobi_ok = jacobi_defects(L).empty();
    if (v.jacobi_ok) v.classification = classify(L);
    return v;
}

/// alpha(e_i, e_j) = d/dt|_0 [e_i, e_j]_t as a 2-cochain with adjoint coefficients.
inline Vector first_order_term(const DeformationFamily& F) {
    const std::size_t n = F.dim();
    if (n < 2) return Vector(0);
    const WedgeBasis w(n, 2);
    Vector alpha = zero_vector(w.size() * n);
    for (const auto& [key, pv] : F.brackets) {
        const std::size_t t = w.index_of({key.first, key.second});
        for (std::size_t k = 0; k < n; ++k) alpha[t * n + k] = poly_derivative_at_zero(pv[k]);
    }
    return alpha;
}

/// Cocycle defects of the first-order term in C^2(g_0, ad); empty iff delta alpha = 0.
inline std::vector<CocycleDefect> check_infinitesimal(const DeformationFamily& F) {
    const LieAlgebra base = evaluate(F, 0);
    if (base.dim() < 2) return {};
    return cocycle_check(first_order_term(F), base, adjoint_rep(base), 2);
}

/// Expected classification: a kind, optionally pinned to an index/length.
struct ClassificationClaim {
    ClassKind kind = ClassKind::nilpotent;
    std::optional<std::size_t> level;
};

inline ClassificationClaim parse_claim(const std::string& text) {
    std::string head = text;
    std::optional<std::size_t> level;
    if (const auto open = text.find('('); open != std::string::npos) {
        const auto close = text.find(')', open);
        if (close == std::string::npos || close + 1 != text.size()) throw invalid_input("malformed claim '" + text + "'");
        head = text.substr(0, open);
        const std::string num = text.substr(open + 1, close - open - 1);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw invalid_input("malformed claim level in '" + text + "'");
        level = std::stoul(num);
    }
    if (head == "nilpotent") return {ClassKind::nilpotent, level};
    if (head == "solvable-non-nilpotent") return {ClassKind::solvable_non_nilpotent, level};
    if (head == "non-solvable" && !level) return {ClassKind::non_solvable, std::nullopt};
    throw invalid_input("unknown classification claim '" + text + "'");
}

inline std::string to_string(const ClassificationClaim& c) {
    std::string s = c.kind == ClassKind::nilpotent               ? "nilpotent"
                    : c.kind == ClassKind::solvable_non_nilpotent ? "solvable-non-nilpotent"
                                                                  : "non-solvable";
    if (c.level) s += "(" + std::to_string(*c.level) + ")";
    return s;
}

inline bool agrees(const Classification& c, const ClassificationClaim& claim) {
    if (c.kind != claim.kind) return false;
    if (!claim.level) return true;
    if (c.kind == ClassKind::nilpotent) return c.nilpotency_index == claim.level;
    if (c.kind == ClassKind::solvable_non_nilpotent) return c.derived_length == claim.level;
    return true;
}

struct FamilyAudit {
    std::vector<FamilyJacobiDefect> symbolic_defects;
    std::vector<CocycleDefect> first_order_defects;
    std::vector<SampleVerdict> samples;
    std::vector<std::optional<bool>> agreement; ///< per sample; absent without a claim or a verdict
};

/// Per-sample verdicts and agreement flags; disagreement is reported, never thrown.
inline FamilyAudit audit_family(const DeformationFamily& F, const std::vector<Rational>& samples,
                                const std::optional<ClassificationClaim>& claim) {
    FamilyAudit a;
    a.symbolic_defects = family_jacobi(F);
    if (a.symbolic_defects.empty()) a.first_order_defects = check_infinitesimal(F);
    for (const auto& t0 : samples) {
        SampleVerdict v = classify_sample(F, t0);
        std::optional<bool> ok;
        if (claim && v.classification) ok = agrees(*v.classification, *claim);
        a.samples.push_back(std::move(v));
        a.agreement.push_back(ok);
    }
    return a;
}

inline std::vector<Rational> default_samples() { return {1, make_rational(1, 2), -1, 2}; }

} // namespace liecoh

#endif
