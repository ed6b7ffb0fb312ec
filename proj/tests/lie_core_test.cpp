#include <gtest/gtest.h>

#include "support.hpp"

using namespace liecoh;

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i - 1); }

LieAlgebra n4() { return builtin("n4").algebra(); }

TEST(Bracket, Examples) {
    const LieAlgebra h = heisenberg(1);
    EXPECT_EQ(bracket(h, e(3, 1), e(3, 2)), e(3, 3));
    EXPECT_EQ(bracket(h, e(3, 2), e(3, 1)), scale(-1, e(3, 3)));
    const Vector v{2, make_rational(-1, 3), 5};
    EXPECT_TRUE(is_zero(bracket(h, v, v)));
    EXPECT_EQ(bracket(n4(), e(4, 1), add(e(4, 2), e(4, 3))), add(e(4, 3), e(4, 4)));
    EXPECT_THROW(bracket(h, e(4, 1), e(3, 1)), dimension_error);
}

TEST(Jacobi, ValidCatalogEntries) {
    EXPECT_TRUE(jacobi_defects(heisenberg(2)).empty());
    EXPECT_TRUE(jacobi_defects(builtin("n6_2").algebra()).empty());
    BracketTable t{{{0, 1}, Vector{1, 0}}};
    EXPECT_TRUE(jacobi_defects(LieAlgebra::create({"a", "b"}, t)).empty());
}

TEST(Jacobi, ReportsOffendingTriple) {
    BracketTable t{{{0, 1}, Vector{0, 0, 1}}, {{0, 2}, Vector{1, 0, 0}}, {{1, 2}, Vector{1, 0, 0}}};
    EXPECT_THROW(LieAlgebra::create(LieAlgebra::default_names(3), t), invalid_input);
    try {
        LieAlgebra::create(LieAlgebra::default_names(3), t);
    } catch (const invalid_input& err) {
        EXPECT_NE(std::string(err.what()).find("(1,2,3)"), std::string::npos) << err.what();
    }
    const LieAlgebra L = LieAlgebra::create(LieAlgebra::default_names(3), t, Validation::deferred);
    const auto d = jacobi_defects(L);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].i, 0u);
    EXPECT_EQ(d[0].j, 1u);
    EXPECT_EQ(d[0].k, 2u);
    EXPECT_EQ(d[0].defect, (Vector{0, 0, 1}));
    EXPECT_THROW(lower_central_series(L), invalid_input);
}

TEST(Create, RejectsMalformedTables) {
    EXPECT_THROW(LieAlgebra::create({"a", "b"}, {{{1, 0}, Vector{0, 0}}}), invalid_input);
    EXPECT_THROW(LieAlgebra::create({"a", "b"}, {{{0, 2}, Vector{0, 0}}}), invalid_input);
    EXPECT_THROW(LieAlgebra::create({"a", "b"}, {{{0, 1}, Vector{0}}}), dimension_error);
}

TEST(ProductSpace, Examples) {
    const LieAlgebra h = heisenberg(1);
    const Subspace full = Subspace::full(3);
    EXPECT_EQ(product_space(h, full, full), Subspace::span(3, std::vector<Vector>{e(3, 3)}));
    EXPECT_EQ(product_space(h, full, Subspace::zero(3)).dim(), 0u);
    const Subspace s34 = Subspace::span(4, std::vector<Vector>{e(4, 3), e(4, 4)});
    EXPECT_EQ(product_space(n4(), Subspace::full(4), s34), Subspace::span(4, std::vector<Vector>{e(4, 4)}));
}

TEST(Series, LowerCentral) {
    const auto h = lower_central_series(heisenberg(1));
    EXPECT_EQ(h.dims(), (std::vector<std::size_t>{3, 1, 0}));
    EXPECT_FALSE(h.stabilized);
    EXPECT_EQ(h.kind, SeriesKind::lower_central);
    EXPECT_EQ(lower_central_series(abelian(5)).dims(), (std::vector<std::size_t>{5, 0}));
    EXPECT_EQ(lower_central_series(n4()).dims(), (std::vector<std::size_t>{4, 2, 1, 0}));
    const auto r = lower_central_series(r4());
    EXPECT_EQ(r.dims(), (std::vector<std::size_t>{4, 2, 2}));
    EXPECT_TRUE(r.stabilized);
    EXPECT_FALSE(r.reaches_zero());
}

TEST(Series, Derived) {
    EXPECT_EQ(derived_series(builtin("n6_2").algebra()).dims(), (std::vector<std::size_t>{6, 4, 0}));
    EXPECT_EQ(derived_series(abelian(3)).dims(), (std::vector<std::size_t>{3, 0}));
    const auto r = derived_series(r4());
    EXPECT_EQ(r.dims(), (std::vector<std::size_t>{4, 2, 0}));
    EXPECT_EQ(r.kind, SeriesKind::derived);
}

TEST(Series, ZeroDimensional) {
    const LieAlgebra z = abelian(0);
    EXPECT_EQ(lower_central_series(z).dims(), (std::vector<std::size_t>{0}));
    EXPECT_EQ(nilpotency_class(z), 0u);
}

TEST(Center, Examples) {
    const Subspace z = center(heisenberg(2));
    EXPECT_EQ(z.dim(), 1u);
    EXPECT_TRUE(z.contains(e(5, 5)));
    EXPECT_EQ(center(abelian(3)), Subspace::full(3));
    EXPECT_EQ(center(n4()), Subspace::span(4, std::vector<Vector>{e(4, 4)}));
    EXPECT_EQ(center(r4()).dim(), 0u);
}

TEST(Invariants, NilpotencyAndDerivedLength) {
    for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(nilpotency_class(heisenberg(k)), 2u);
    EXPECT_EQ(nilpotency_class(abelian(4)), 1u);
    EXPECT_FALSE(nilpotency_class(r4()));
    EXPECT_EQ(derived_length(heisenberg(1)), 2u);
    EXPECT_EQ(derived_length(abelian(2)), 1u);
    EXPECT_EQ(derived_length(builtin("n5_2").algebra()), 2u);
    EXPECT_EQ(derived_length(r4()), 2u);
}

TEST(DirectSum, Examples) {
    const LieAlgebra hr = direct_sum(heisenberg(1), abelian(1));
    EXPECT_EQ(hr.dim(), 4u);
    EXPECT_EQ(center(hr).dim(), 2u);
    EXPECT_EQ(direct_sum(abelian(2), abelian(3)).brackets().size(), 0u);
    const LieAlgebra hh = direct_sum(heisenberg(1), heisenberg(1));
    EXPECT_EQ(hh.dim(), 6u);
    EXPECT_EQ(derived_algebra(hh).dim(), 2u);
    EXPECT_EQ(hh.names(), (std::vector<std::string>{"X", "Y", "Z", "X'", "Y'", "Z'"}));
}

TEST(Quotient, Examples) {
    const LieAlgebra h = heisenberg(1);
    const auto q = quotient_algebra(h, center(h));
    EXPECT_EQ(q.algebra.dim(), 2u);
    EXPECT_TRUE(q.algebra.brackets().empty());
    EXPECT_EQ(q.projection, (Matrix{{1, 0, 0}, {0, 1, 0}}));
    EXPECT_EQ(quotient_algebra(h, Subspace::full(3)).algebra.dim(), 0u);
    const auto n = quotient_algebra(n4(), Subspace::span(4, std::vector<Vector>{e(4, 4)}));
    EXPECT_EQ(n.algebra.dim(), 3u);
    EXPECT_EQ(n.algebra.brackets().size(), 1u);
    EXPECT_EQ(n.algebra.structure(0, 1), e(3, 3));
    EXPECT_THROW(quotient_algebra(h, Subspace::span(3, std::vector<Vector>{e(3, 1)})), invalid_input);
}

TEST(Subalgebra, ClosureAndIdeal) {
    const LieAlgebra h = heisenberg(1);
    const Subspace xz = Subspace::span(3, std::vector<Vector>{e(3, 1), e(3, 3)});
    EXPECT_TRUE(is_subalgebra(h, xz));
    EXPECT_TRUE(is_ideal(h, xz));
    const Subspace xy = Subspace::span(3, std::vector<Vector>{e(3, 1), e(3, 2)});
    EXPECT_FALSE(is_subalgebra(h, xy));
    EXPECT_THROW(subalgebra(h, xy), invalid_input);
    const Subspace dr = Subspace::span(4, std::vector<Vector>{e(4, 1), e(4, 2)});
    EXPECT_TRUE(is_subalgebra(r4(), dr));
    EXPECT_FALSE(is_ideal(r4(), dr));
}

// Properties across the catalog.

TEST(LieProperty, CenterCommutesWithEverything) {
    for (const auto& [key, L] : support::catalog_algebras())
        EXPECT_EQ(product_space(L, center(L), Subspace::full(L.dim())).dim(), 0u) << key;
}

TEST(LieProperty, SeriesDescendAndNest) {
    for (const auto& [key, L] : support::catalog_algebras()) {
        const auto lcs = lower_central_series(L), ds = derived_series(L);
        for (const auto* s : {&lcs, &ds})
            for (std::size_t i = 1; i < s->terms.size(); ++i) {
                EXPECT_TRUE(s->terms[i - 1].contains(s->terms[i])) << key;
                if (!(s->stabilized && i + 1 == s->terms.size())) {
                    EXPECT_LT(s->terms[i].dim(), s->terms[i - 1].dim()) << key;
                }
            }
        for (std::size_t i = 0; i < std::min(lcs.terms.size(), ds.terms.size()); ++i)
            EXPECT_TRUE(lcs.terms[i].contains(ds.terms[i])) << key;
    }
}

TEST(LieProperty, NilpotentImpliesSolvable) {
    for (const auto& [key, L] : support::catalog_algebras())
        if (nilpotency_class(L)) {
            EXPECT_TRUE(derived_length(L)) << key;
        }
}

TEST(LieProperty, QuotientsByIdealsAreLieAlgebras) {
    for (const auto& [key, L] : support::catalog_algebras()) {
        for (const Subspace& I : {center(L), derived_algebra(L), lower_central_series(L).terms.back()}) {
            const auto q = quotient_algebra(L, I);
            EXPECT_TRUE(jacobi_defects(q.algebra).empty()) << key;
            EXPECT_EQ(q.algebra.dim() + I.dim(), L.dim()) << key;
            for (std::size_t i = 0; i < L.dim(); ++i)
                for (std::size_t j = i + 1; j < L.dim(); ++j)
                    EXPECT_EQ(q.projection * L.structure(i, j),
                              bracket(q.algebra, q.projection * unit_vector(L.dim(), i),
                                      q.projection * unit_vector(L.dim(), j)))
                        << key;
        }
    }
}

TEST(LieProperty, DirectSumNilpotencyIsMax) {
    const auto all = support::catalog_algebras();
    for (const auto& a : all)
        for (const auto& b : all) {
            if (a.algebra.dim() + b.algebra.dim() > 10) continue;
            const auto na = nilpotency_class(a.algebra), nb = nilpotency_class(b.algebra);
            const auto ns = nilpotency_class(direct_sum(a.algebra, b.algebra));
            if (na && nb) {
                EXPECT_EQ(ns, std::max(*na, *nb)) << a.key << " + " << b.key;
            } else {
                EXPECT_FALSE(ns) << a.key << " + " << b.key;
            }
        }
}

TEST(LieProperty, RandomLinearCombinationsBilinear) {
    support::Gen g(21);
    for (const auto& [key, L] : support::catalog_algebras()) {
        const std::size_t n = L.dim();
        for (int trial = 0; trial < 5; ++trial) {
            const Vector u = g.vector(n), v = g.vector(n), w = g.vector(n);
            const Rational c = g.rational();
            EXPECT_EQ(bracket(L, u, v), scale(-1, bracket(L, v, u))) << key;
            EXPECT_EQ(bracket(L, add(u, scale(c, w)), v), add(bracket(L, u, v), scale(c, bracket(L, w, v)))) << key;
            const Vector jac = add(add(bracket(L, u, bracket(L, v, w)), bracket(L, v, bracket(L, w, u))),
                                   bracket(L, w, bracket(L, u, v)));
            EXPECT_TRUE(is_zero(jac)) << key;
        }
    }
}

} // namespace
