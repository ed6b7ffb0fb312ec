#include <gtest/gtest.h>

#include "support.hpp"

using namespace liecoh;

namespace {

TEST(Heisenberg, Structure) {
    for (std::size_t k = 1; k <= 4; ++k) {
        const LieAlgebra h = heisenberg(k);
        EXPECT_EQ(h.dim(), 2 * k + 1);
        EXPECT_EQ(center(h).dim(), 1u);
        EXPECT_EQ(derived_algebra(h).dim(), 1u);
        EXPECT_EQ(nilpotency_class(h), 2u);
        EXPECT_EQ(nonvanishing_nested_brackets(h), 0u);
        EXPECT_EQ(h.brackets().size(), k);
    }
    EXPECT_EQ(heisenberg(1).names(), (std::vector<std::string>{"X", "Y", "Z"}));
    EXPECT_EQ(heisenberg(2).names(), (std::vector<std::string>{"X1", "X2", "Y1", "Y2", "Z"}));
    EXPECT_THROW(heisenberg(0), invalid_input);
    EXPECT_THROW(builtin("heisenberg(0)"), invalid_input);
}

TEST(NestedBrackets, NonzeroForDeeperAlgebras) {
    EXPECT_GT(nonvanishing_nested_brackets(builtin("n5_2").algebra()), 0u);
    EXPECT_EQ(nonvanishing_nested_brackets(builtin("n4").algebra()), 0u);
    EXPECT_GT(nonvanishing_nested_brackets(r4()), 0u);
}

TEST(Builtin, KeysAndShapes) {
    const std::map<std::string, std::size_t> dims{{"abelian(3)", 3}, {"h3", 3},   {"n4", 4},    {"h3+R", 4}, {"h5", 5},
                                                  {"n5_1", 5},       {"n5_2", 5}, {"h3+h3", 6}, {"h5+R", 6}, {"n6_1", 6},
                                                  {"n6_2", 6},       {"r4", 4},   {"family:n4_t", 4}};
    ASSERT_EQ(catalog_keys().size(), 13u);
    for (const auto& key : catalog_keys()) {
        const auto e = builtin(key);
        EXPECT_EQ(e.key, key);
        EXPECT_EQ(representative_algebra(e).dim(), dims.at(key)) << key;
    }
    EXPECT_TRUE(builtin("family:n4_t").is_family());
    EXPECT_EQ(builtin("abelian(7)").algebra().dim(), 7u);
    EXPECT_EQ(builtin("heisenberg(3)").algebra().dim(), 7u);
    for (const char* bad : {"n7", "abelian", "abelian()", "abelian(x)", "heisenberg(-1)", "H3", ""})
        EXPECT_THROW(builtin(bad), invalid_input) << bad;
}

TEST(Builtin, TableClaims) {
    const std::vector<std::size_t> h2{1, 0, 1, 6, 2, 0, 2, 6, 2, 0};
    const auto keys = table1_keys();
    ASSERT_EQ(keys.size(), 10u);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const auto e = builtin(keys[i]);
        EXPECT_EQ(e.claimed_h2, h2[i]) << keys[i];
        EXPECT_EQ(e.claimed_class, h2[i] ? RigidityClass::II : RigidityClass::I) << keys[i];
        EXPECT_FALSE(e.relations.empty()) << keys[i];
    }
    EXPECT_FALSE(builtin("r4").claimed_h2);
    EXPECT_EQ(builtin("family:n4_t").claimed_classification->kind, ClassKind::solvable_non_nilpotent);
}

TEST(Builtin, Relations) {
    const LieAlgebra n52 = builtin("n5_2").algebra();
    EXPECT_EQ(n52.structure(0, 1), unit_vector(5, 2));
    EXPECT_EQ(n52.structure(0, 3), unit_vector(5, 4));
    EXPECT_TRUE(is_zero(n52.structure(1, 2)));
    const LieAlgebra n61 = builtin("n6_1").algebra();
    EXPECT_EQ(n61.structure(2, 3), unit_vector(6, 5));
    EXPECT_EQ(builtin("h3+h3").algebra().names(), (std::vector<std::string>{"X", "Y", "Z", "X'", "Y'", "Z'"}));
}

TEST(Catalog, StructuralClassification) {
    for (const auto& key : table1_keys()) EXPECT_TRUE(nilpotency_class(builtin(key).algebra())) << key;
    for (const char* key : {"n4", "n5_2", "n6_2"}) {
        const LieAlgebra L = builtin(key).algebra();
        EXPECT_EQ(nilpotency_class(L), L.dim() - 1) << key;
    }
    EXPECT_EQ(nilpotency_class(builtin("n5_1").algebra()), 2u);
    EXPECT_FALSE(nilpotency_class(r4()));
    EXPECT_EQ(classify(r4()).kind, ClassKind::solvable_non_nilpotent);
    EXPECT_EQ(classify(r4()).derived_dims, (std::vector<std::size_t>{4, 2, 0}));
    EXPECT_EQ(classify(r4()).lower_central_dims, (std::vector<std::size_t>{4, 2, 2}));
}

TEST(Catalog, SameInvariantsForIsomorphicEntries) {
    // n6_1 and h3+h3 are both two copies of h3 in different bases.
    EXPECT_EQ(betti(builtin("n6_1").algebra()), betti(builtin("h3+h3").algebra()));
    EXPECT_EQ(to_string(classify(builtin("n6_1").algebra())), "nilpotent(2)");
}

TEST(Rigidity, Examples) {
    const auto h = rigidity_class(heisenberg(1));
    EXPECT_EQ(h.cls, RigidityClass::II);
    EXPECT_EQ(h.dim_h2, 4u);
    EXPECT_EQ(h.module_dim, 2u);
    EXPECT_TRUE(h.warnings.empty());
    const auto a = rigidity_class(abelian(4));
    EXPECT_EQ(a.dim_h2, 24u);
    ASSERT_EQ(a.warnings.size(), 1u);
    EXPECT_NE(a.warnings[0].find("abelian"), std::string::npos);
    const auto r = rigidity_class(r4());
    ASSERT_EQ(r.warnings.size(), 1u);
    EXPECT_NE(r.warnings[0].find("not nilpotent"), std::string::npos);
    EXPECT_EQ(r.dim_h2, 2u);
    EXPECT_EQ(rigidity_class(abelian(1)).dim_h2, 0u);
    EXPECT_EQ(to_string(RigidityClass::I), "I");
}

TEST(Rigidity, AbelianizationIsTrivialTensor) {
    for (const auto& [key, L] : support::catalog_algebras()) {
        const auto r = rigidity_class(L);
        EXPECT_EQ(r.dim_h2, betti(L)[2] * r.module_dim) << key;
    }
}

TEST(Audit, TableRows) {
    const auto a = table1_audit();
    ASSERT_EQ(a.rows.size(), 14u);
    const std::vector<std::size_t> computed{4, 4, 12, 20, 18, 6, 32, 45, 32, 6};
    for (std::size_t i = 0; i < 10; ++i) {
        const auto& row = a.rows[i];
        EXPECT_EQ(row.key, table1_keys()[i]);
        EXPECT_EQ(row.computed.dim_h2, computed[i]) << row.key;
        EXPECT_EQ(row.computed.dim_h2, support::oracle().at(row.key).abelianization[2]) << row.key;
        EXPECT_FALSE(row.agrees) << row.key;
        EXPECT_EQ(row.computed.cls, RigidityClass::II) << row.key;
        const bool paper_rigid = row.key == "n4" || row.key == "n5_2" || row.key == "n6_2";
        EXPECT_EQ(*row.class_agrees, !paper_rigid) << row.key;
    }
    EXPECT_EQ(a.degree_one_bracket_sign, -1);
    EXPECT_FALSE(a.notes.empty());
}

TEST(Audit, HeisenbergRows) {
    const auto a = table1_audit();
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto& row = a.rows[9 + k];
        const auto want = support::heisenberg_degree_two(k);
        EXPECT_EQ(row.k, k);
        EXPECT_EQ(row.label, "heisenberg(" + std::to_string(k) + ")");
        EXPECT_EQ(row.computed.dim_c2, want[0]);
        EXPECT_EQ(row.computed.dim_z2, want[1]);
        EXPECT_EQ(row.computed.dim_b2, want[2]);
        EXPECT_EQ(row.computed.dim_h2, want[3]);
        EXPECT_EQ(row.computed.dim_b2, 2 * k);
        EXPECT_EQ(*row.paper_h2, k * (2 * k - 1));
        EXPECT_FALSE(row.agrees);
        EXPECT_TRUE(*row.b2_agrees);
        EXPECT_FALSE(*row.z2_agrees);
        EXPECT_TRUE(*row.class_agrees);
    }
}

TEST(Audit, Deterministic) {
    const auto a = table1_audit(), b = table1_audit();
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_EQ(a.rows[i].computed.dim_h2, b.rows[i].computed.dim_h2);
        EXPECT_EQ(a.rows[i].agrees, b.rows[i].agrees);
    }
}

TEST(Match, CatalogLookup) {
    EXPECT_EQ(match_catalog(heisenberg(1))->key, "h3");
    EXPECT_EQ(match_catalog(builtin("n6_2").algebra())->key, "n6_2");
    EXPECT_FALSE(match_catalog(abelian(3)));
    EXPECT_FALSE(match_catalog(support::rescale(heisenberg(1), Vector{2, 1, 1})));
    EXPECT_FALSE(match_catalog(heisenberg(3)));
}

} // namespace
