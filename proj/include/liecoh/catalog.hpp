#ifndef LIECOH_CATALOG_HPP
#define LIECOH_CATALOG_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "deformation.hpp"

namespace liecoh {

/// Class I admits a non-nilpotent solvable deformation; Class II is rigid.
enum class RigidityClass { I, II };

inline std::string to_string(RigidityClass c) { return c == RigidityClass::I ? "I" : "II"; }

/// h_{2k+1}: [X_i, Y_i] = Z, all other brackets zero. Basis X.., Y.., Z.
inline LieAlgebra heisenberg(std::size_t k) {
    if (k == 0) throw invalid_input("heisenberg(k) needs k >= 1");
    const std::size_t n = 2 * k + 1;
    std::vector<std::string> names;
    for (const char* s : {"X", "Y"})
        for (std::size_t i = 1; i <= k; ++i) names.push_back(k == 1 ? s : s + std::to_string(i));
    names.push_back("Z");
    BracketTable t;
    for (std::size_t i = 0; i < k; ++i) t.emplace(std::make_pair(i, k + i), unit_vector(n, 2 * k));
    return LieAlgebra::create(std::move(names), t);
}

namespace detail {
/// Algebra on e1..en from 1-based relations [i,j] = e_k.
inline LieAlgebra from_relations(std::size_t n, std::initializer_list<std::array<std::size_t, 3>> rel) {
    BracketTable t;
    for (const auto& r : rel) t.emplace(std::make_pair(r[0] - 1, r[1] - 1), unit_vector(n, r[2] - 1));
    return LieAlgebra::create(LieAlgebra::default_names(n), t);
}
} // namespace detail

/// Similarity algebra of the plane: [d,p1]=p1, [d,p2]=p2, [r,p1]=p2, [r,p2]=-p1.
/// A reconstruction; the source names the algebra without giving brackets.
inline LieAlgebra r4() {
    BracketTable t;
    t.emplace(std::make_pair(0, 2), unit_vector(4, 2));
    t.emplace(std::make_pair(0, 3), unit_vector(4, 3));
    t.emplace(std::make_pair(1, 2), unit_vector(4, 3));
    t.emplace(std::make_pair(1, 3), scale(-1, unit_vector(4, 2)));
    return LieAlgebra::create({"d", "r", "p1", "p2"}, t);
}

/// n4 with the extra bracket [e2,e3] = t e4.
inline DeformationFamily n4_t_family() {
    DeformationFamily F = constant_family(detail::from_relations(4, {{1, 2, 3}, {1, 3, 4}}));
    PolyVector v(4);
    v[3] = Poly::t();
    F.brackets.emplace(std::make_pair(1, 2), std::move(v));
    return F;
}

struct CatalogEntry {
    std::string key;
    std::variant<LieAlgebra, DeformationFamily> object;
    std::optional<std::size_t> claimed_h2;          ///< claimed dim H^2(g, g/[g,g])
    std::optional<RigidityClass> claimed_class;     ///< claimed rigidity (Yes = II, No = I)
    std::string relations;                          ///< relations as listed in the audited table
    std::string note;
    std::optional<ClassificationClaim> claimed_classification; ///< families only

    bool is_family() const { return std::holds_alternative<DeformationFamily>(object); }
    const LieAlgebra& algebra() const { return std::get<LieAlgebra>(object); }
    const DeformationFamily& family() const { return std::get<DeformationFamily>(object); }
};

namespace detail {
inline std::optional<std::size_t> parse_param(const std::string& key, const std::string& head) {
    if (key.rfind(head + "(", 0) != 0 || key.back() != ')') return std::nullopt;
    const std::string num = key.substr(head.size() + 1, key.size() - head.size() - 2);
    if (num.empty() || num.size() > 3 || num.find_first_not_of("0123456789") != std::string::npos)
        return std::nullopt;
    return std::stoul(num);
}
} // namespace detail

inline CatalogEntry builtin(const std::string& key) {
    using detail::from_relations;
    auto table = [&](LieAlgebra L, std::size_t h2, RigidityClass c, std::string rel) {
        return CatalogEntry{key, std::move(L), h2, c, std::move(rel), "", {}};
    };
    const auto I = RigidityClass::I, II = RigidityClass::II;
    if (auto n = detail::parse_param(key, "abelian")) return {key, abelian(*n), {}, {}, "", "", {}};
    if (auto k = detail::parse_param(key, "heisenberg")) {
        if (*k == 0) throw invalid_input("heisenberg(k) needs k >= 1");
        return {key, heisenberg(*k), {}, {}, "[X_i,Y_j]=delta_ij Z", "", {}};
    }
    if (key == "h3") return table(heisenberg(1), 1, II, "[X,Y]=Z");
    if (key == "n4") return table(from_relations(4, {{1, 2, 3}, {1, 3, 4}}), 0, I, "[e1,e2]=e3, [e1,e3]=e4");
    if (key == "h3+R") return table(direct_sum(heisenberg(1), abelian(1)), 1, II, "[X,Y]=Z");
    if (key == "h5") return table(heisenberg(2), 6, II, "[X_i,Y_j]=delta_ij Z (i,j<=2)");
    if (key == "n5_1") return table(from_relations(5, {{1, 2, 4}, {1, 3, 5}}), 2, II, "[e1,e2]=e4, [e1,e3]=e5");
    if (key == "n5_2")
        return table(from_relations(5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}}), 0, I,
                     "[e1,e2]=e3, [e1,e3]=e4, [e1,e4]=e5");
    if (key == "h3+h3") return table(direct_sum(heisenberg(1), heisenberg(1)), 2, II, "[X,Y]=Z, [X',Y']=Z'");
    if (key == "h5+R") return table(direct_sum(heisenberg(2), abelian(1)), 6, II, "[X_i,Y_j]=delta_ij Z");
    if (key == "n6_1") return table(from_relations(6, {{1, 2, 5}, {3, 4, 6}}), 2, II, "[e1,e2]=e5, [e3,e4]=e6");
    if (key == "n6_2")
        return table(from_relations(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}}), 0, I,
                     "[e1,ej]=e(j+1), 2<=j<=5");
    if (key == "r4")
        return {key, r4(), {}, {}, "", "bracket table reconstructed as the similarity algebra of the plane", {}};
    if (key == "family:n4_t")
        return {key, n4_t_family(), {}, {}, "", "n4 plus [e2,e3] = t e4",
                ClassificationClaim{ClassKind::solvable_non_nilpotent, std::nullopt}};
    throw invalid_input("unknown catalog key '" + key + "'");
}

/// The thirteen named entries; abelian(n) is represented by abelian(3).
inline std::vector<std::string> catalog_keys() {
    return {"abelian(3)", "h3", "n4", "h3+R", "h5", "n5_1", "n5_2", "h3+h3", "h5+R", "n6_1", "n6_2", "r4", "family:n4_t"};
}

/// Keys of the ten audited table rows, in table order.
inline std::vector<std::string> table1_keys() {
    return {"h3", "n4", "h3+R", "h5", "n5_1", "n5_2", "h3+h3", "h5+R", "n6_1", "n6_2"};
}

/// Algebra used for algebra-level checks: families contribute their t = 1 member.
inline LieAlgebra representative_algebra(const CatalogEntry& e) {
    return e.is_family() ? evaluate(e.family(), 1) : e.algebra();
}

/// Catalog entry with identical dimension and bracket table, if any.
inline std::optional<CatalogEntry> match_catalog(const LieAlgebra& L) {
    for (const auto& key : table1_keys()) {
        auto e = builtin(key);
        if (e.algebra().dim() == L.dim() && e.algebra().brackets() == L.brackets()) return e;
    }
    return std::nullopt;
}

/// [w,[x,[y,z]]] over all basis quadruples; returns the number of nonzero results.
inline std::size_t nonvanishing_nested_brackets(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    std::size_t count = 0;
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
            const Vector yz = L.structure(y, z);
            for (std::size_t x = 0; x < n; ++x) {
                const Vector xyz = bracket(L, unit_vector(n, x), yz);
                for (std::size_t w = 0; w < n; ++w)
                    if (!is_zero(bracket(L, unit_vector(n, w), xyz))) ++count;
            }
        }
    return count;
}

struct RigidityResult {
    RigidityClass cls = RigidityClass::I;
    std::size_t dim_h2 = 0;
    std::size_t dim_c2 = 0, dim_z2 = 0, dim_b2 = 0;
    std::size_t module_dim = 0;
    std::vector<std::string> warnings;
};

/// Class II iff H^2(g, g/[g,g]) != 0. Non-nilpotent or abelian inputs are computed with a warning.
inline RigidityResult rigidity_class(const LieAlgebra& L) {
    RigidityResult r;
    if (!nilpotency_class(L)) r.warnings.push_back("hypothesis violated: algebra is not nilpotent");
    if (derived_algebra(L).dim() == 0) r.warnings.push_back("hypothesis violated: algebra is abelian");
    const auto ab = abelianization_rep(L);
    r.module_dim = ab.module.dim;
    if (L.dim() >= 2) {
        const auto d = cohomology(L, ab.module, {2, false}).at(2);
        r.dim_c2 = d.dim_c;
        r.dim_z2 = d.dim_z;
        r.dim_b2 = d.dim_b;
        r.dim_h2 = d.dim_h;
    }
    r.cls = r.dim_h2 != 0 ? RigidityClass::II : RigidityClass::I;
    return r;
}

struct AuditRow {
    std::string label;
    std::string key;
    std::optional<std::size_t> k; ///< Heisenberg parameter for generated rows
    RigidityResult computed;
    std::optional<std::size_t> paper_h2;
    std::optional<std::size_t> paper_z2; ///< k(2k-1) + 2k
    std::optional<std::size_t> paper_b2; ///< 2k
    std::optional<RigidityClass> paper_class;
    bool agrees = true; ///< computed dim H^2 equals the claimed value
    std::optional<bool> z2_agrees, b2_agrees, class_agrees;
};

struct Table1Audit {
    std::vector<AuditRow> rows;
    std::vector<std::string> notes;
    /// s with (delta f)(X,Y) = s f([X,Y]) on C^1(h3, h3/z), read off the assembled differential.
    int degree_one_bracket_sign = 0;
};

/// Sign obtained by the Koszul differential for 1-cochains with trivial action on h3:
/// evaluates delta on the cochain Z* (x) v at the pair (X, Y), where [X,Y] = Z.
inline int degree_one_bracket_sign() {
    const LieAlgebra h = heisenberg(1);
    const auto ab = abelianization_rep(h);
    const std::size_t m = ab.module.dim;
    const Matrix D = differential(h, ab.module, 1);
    const WedgeBasis one(3, 1), two(3, 2);
    Vector f = zero_vector(one.size() * m);
    f[one.index_of({2}) * m] = 1;
    const Vector df = D * f;
    const Rational value = df[two.index_of({0, 1}) * m];
    return sgn(value);
}

inline Table1Audit table1_audit() {
    Table1Audit a;
    for (const auto& key : table1_keys()) {
        const auto e = builtin(key);
        AuditRow row;
        row.label = key;
        row.key = key;
        row.computed = rigidity_class(e.algebra());
        row.paper_h2 = e.claimed_h2;
        row.paper_class = e.claimed_class;
        row.agrees = row.computed.dim_h2 == *e.claimed_h2;
        row.class_agrees = row.computed.cls == *e.claimed_class;
        a.rows.push_back(std::move(row));
    }
    for (std::size_t k = 1; k <= 4; ++k) {
        AuditRow row;
        row.label = "heisenberg(" + std::to_string(k) + ")";
        row.key = row.label;
        row.k = k;
        row.computed = rigidity_class(heisenberg(k));
        row.paper_h2 = k * (2 * k - 1);
        row.paper_z2 = k * (2 * k - 1) + 2 * k;
        row.paper_b2 = 2 * k;
        row.paper_class = RigidityClass::II;
        row.agrees = row.computed.dim_h2 == *row.paper_h2;
        row.z2_agrees = row.computed.dim_z2 == *row.paper_z2;
        row.b2_agrees = row.computed.dim_b2 == *row.paper_b2;
        row.class_agrees = row.computed.cls == RigidityClass::II;
        a.rows.push_back(std::move(row));
    }
    a.notes = {
        "rigidity column mapping: Yes = Class II, No = Class I",
        "Class II iff computed dim H^2(g, g/[g,g]) != 0; the exact computation is authoritative",
        "g/[g,g] carries the zero action for every g, so H^2(g, g/[g,g]) = H^2(g) (x) g/[g,g]",
    };
    a.degree_one_bracket_sign = degree_one_bracket_sign();
    return a;
}

} // namespace liecoh

#endif
