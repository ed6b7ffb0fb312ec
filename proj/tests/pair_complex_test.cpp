#include <gtest/gtest.h>

#include "support.hpp"

using namespace liecoh;

namespace {

Subspace span_units(std::size_t n, std::initializer_list<std::size_t> idx) {
    std::vector<Vector> vs;
    for (auto i : idx) vs.push_back(unit_vector(n, i));
    return Subspace::span(n, vs);
}

struct NamedPair {
    std::string label;
    PairSetup setup;
};

// Subalgebras that exist for any g: center, derived algebra, lower central terms,
// a random line, and a random subspace containing [g,g] (always an ideal).
std::vector<NamedPair> sample_pairs(unsigned seed) {
    support::Gen g(seed);
    std::vector<NamedPair> out;
    for (const auto& [key, L] : support::catalog_algebras()) {
        const std::size_t n = L.dim();
        std::vector<std::pair<std::string, Subspace>> subs{{"center", center(L)}, {"derived", derived_algebra(L)}};
        const auto lcs = lower_central_series(L);
        if (lcs.terms.size() > 2) subs.emplace_back("lcs2", lcs.terms[2]);
        subs.emplace_back("line", Subspace::span(n, std::vector<Vector>{g.vector(n)}));
        subs.emplace_back("over-derived", derived_algebra(L) + Subspace::span(n, std::vector<Vector>{g.vector(n)}));
        for (auto& [label, H] : subs) {
            const std::vector<support::NamedModule> mods = support::standard_modules(L);
            const auto& V = mods[g.integer(0, 2)];
            out.push_back({key + "/" + label + "/" + V.kind, make_pair_setup(L, H, V.module)});
        }
    }
    return out;
}

TEST(Restriction, FullAndZeroSubalgebra) {
    const LieAlgebra h = heisenberg(1);
    const auto V = adjoint_rep(h);
    const auto full = make_pair_setup(h, Subspace::full(3), V);
    for (std::size_t p = 0; p <= 3; ++p) {
        const std::size_t d = WedgeBasis(3, p).size() * 3;
        EXPECT_EQ(restriction_matrix(full, p), Matrix::identity(d)) << p;
    }
    const auto zero = make_pair_setup(h, Subspace::zero(3), V);
    EXPECT_EQ(restriction_matrix(zero, 0), Matrix::identity(3));
    EXPECT_EQ(restriction_matrix(zero, 1).rows(), 0u);
    EXPECT_THROW(restriction_matrix(zero, 4), invalid_input);
}

TEST(Restriction, HeisenbergCenter) {
    const LieAlgebra h = heisenberg(1);
    const auto P = make_pair_setup(h, center(h), abelianization_rep(h).module);
    const Matrix R = restriction_matrix(P, 1);
    EXPECT_EQ(R.rows(), 2u);
    EXPECT_EQ(R.cols(), 6u);
    EXPECT_EQ(rank(R), 2u);
    // Z* (x) v1 restricts to the generator of C^1(z) (x) v1
    Vector f = zero_vector(6);
    f[4] = 1;
    EXPECT_EQ(R * f, (Vector{1, 0}));
    EXPECT_TRUE(restriction_matrix(P, 2).rows() == 0);
}

TEST(Restriction, NonStandardBasis) {
    // H spanned by X + Y; the pulled-back 1-cochain X* + 2Y* evaluates to 3.
    const LieAlgebra a = abelian(2);
    const auto P = make_pair_setup(a, Subspace::span(2, std::vector<Vector>{{1, 1}}), trivial_rep(a, 1));
    EXPECT_EQ(restriction_matrix(P, 1) * Vector({1, 2}), (Vector{3}));
}

TEST(RelativeComplex, Examples) {
    const LieAlgebra h = heisenberg(1);
    const auto ab = abelianization_rep(h).module;
    const auto rz = relative_complex(make_pair_setup(h, Subspace::zero(3), ab));
    EXPECT_EQ(rz.complex.dims, (std::vector<std::size_t>{0, 6, 6, 2}));
    const auto rf = relative_complex(make_pair_setup(h, Subspace::full(3), ab));
    EXPECT_EQ(rf.complex.dims, (std::vector<std::size_t>{0, 0, 0, 0}));
    const auto rc = relative_complex(make_pair_setup(h, center(h), ab));
    EXPECT_EQ(rc.complex.dims[0], 0u);
    EXPECT_EQ(rc.complex.dims[1], 4u);
    EXPECT_TRUE(verify_chain(rc.complex));
}

TEST(Pair, RejectsNonSubalgebra) {
    const LieAlgebra h = heisenberg(1);
    EXPECT_THROW(make_pair_setup(h, span_units(3, {0, 1}), adjoint_rep(h)), invalid_input);
    const LieAlgebra n4 = builtin("n4").algebra();
    EXPECT_THROW(make_pair_setup(n4, span_units(4, {0, 1}), trivial_rep(n4, 1)), invalid_input);
    EXPECT_NO_THROW(make_pair_setup(n4, span_units(4, {2, 3}), trivial_rep(n4, 1)));
}

TEST(Les, NamedPairsAreExact) {
    const LieAlgebra h3 = heisenberg(1), h5 = heisenberg(2), n4 = builtin("n4").algebra();
    const std::vector<PairSetup> pairs{
        make_pair_setup(h3, center(h3), abelianization_rep(h3).module),
        make_pair_setup(h3, center(h3), adjoint_rep(h3)),
        make_pair_setup(h5, center(h5), abelianization_rep(h5).module),
        make_pair_setup(n4, span_units(4, {2, 3}), abelianization_rep(n4).module),
        make_pair_setup(n4, span_units(4, {2, 3}), adjoint_rep(n4)),
        make_pair_setup(n4, Subspace::full(4), adjoint_rep(n4)),
        make_pair_setup(n4, Subspace::zero(4), trivial_rep(n4, 1)),
    };
    for (const auto& P : pairs) {
        const auto t = les_table(P);
        EXPECT_TRUE(t.exact());
        EXPECT_EQ(t.degrees.size(), P.algebra.dim() + 1);
    }
}

TEST(Les, HeisenbergCenterValues) {
    const LieAlgebra h = heisenberg(1);
    const auto t = les_table(make_pair_setup(h, center(h), trivial_rep(h, 1)));
    // H(h3) = 1,2,2,1 and H(z) = 1,1
    EXPECT_EQ(t.degrees[0].dim_g, 1u);
    EXPECT_EQ(t.degrees[0].dim_h, 1u);
    EXPECT_EQ(t.degrees[0].dim_rel, 0u);
    EXPECT_EQ(t.degrees[1].dim_g, 2u);
    EXPECT_EQ(t.degrees[1].dim_h, 1u);
    EXPECT_EQ(t.degrees[1].rank_restriction, 0u); // Z* is not closed on h3
    EXPECT_EQ(t.degrees[1].rank_connecting, 1u);
    EXPECT_TRUE(t.exact());
}

TEST(Les, FullSubalgebraHasZeroRelative) {
    for (const auto& [key, L] : support::catalog_algebras()) {
        const auto t = les_table(make_pair_setup(L, Subspace::full(L.dim()), adjoint_rep(L)));
        for (const auto& d : t.degrees) {
            EXPECT_EQ(d.dim_rel, 0u) << key;
            EXPECT_EQ(d.rank_restriction, d.dim_g) << key;
        }
        EXPECT_TRUE(t.exact()) << key;
    }
}

TEST(PairProperty, ExactnessOnSampledPairs) {
    for (const auto& [label, P] : sample_pairs(51)) {
        const auto t = les_table(P);
        for (const auto& d : t.degrees) {
            EXPECT_TRUE(d.exact_at_rel) << label << " p=" << d.degree;
            EXPECT_TRUE(d.exact_at_g) << label << " p=" << d.degree;
            EXPECT_TRUE(d.exact_at_h) << label << " p=" << d.degree;
        }
    }
}

TEST(PairProperty, CochainDimensionsAdd) {
    for (const auto& [label, P] : sample_pairs(52)) {
        const auto t = les_table(P);
        for (std::size_t p = 0; p < t.dims_c_g.size(); ++p)
            EXPECT_EQ(t.dims_c_rel[p] + t.dims_c_h[p], t.dims_c_g[p]) << label << " p=" << p;
    }
}

TEST(PairProperty, RelativeComplexIsAChainComplex) {
    for (const auto& [label, P] : sample_pairs(53)) EXPECT_TRUE(verify_chain(relative_complex(P).complex)) << label;
}

TEST(PairProperty, LiftRestrictsBack) {
    for (const auto& [label, P] : sample_pairs(55))
        for (std::size_t p = 0; p <= P.sub.dim(); ++p) {
            const Matrix lift = lift_matrix(P, p, default_complement(P.sub));
            const Matrix R = restriction_matrix(P, p);
            EXPECT_EQ(R * lift, Matrix::identity(R.rows())) << label << " p=" << p;
        }
}

// The connecting map does not depend on the chosen complement, up to relative coboundaries.
TEST(PairProperty, ConnectingMapIndependentOfLift) {
    support::Gen g(56);
    for (const auto& [label, P] : sample_pairs(57)) {
        const std::size_t n = P.algebra.dim(), d = P.sub.dim();
        Matrix alt = default_complement(P.sub);
        for (std::size_t r = 0; r < alt.rows(); ++r)
            for (std::size_t i = 0; i < d; ++i) {
                const Rational c = g.rational();
                for (std::size_t j = 0; j < n; ++j) alt(r, j) += c * P.sub.basis()(i, j);
            }
        const RelativeComplex rel = relative_complex(P);
        for (std::size_t p = 0; p < n; ++p) {
            const auto a = connecting_map(P, p);
            const auto b = connecting_map(P, p, alt);
            EXPECT_EQ(a.matrix, b.matrix) << label << " p=" << p;
            ASSERT_EQ(a.images.size(), b.images.size());
            const Subspace B = image_basis(rel.complex.differentials[p]);
            for (std::size_t c = 0; c < a.images.size(); ++c)
                EXPECT_TRUE(B.contains(add(a.images[c], scale(-1, b.images[c])))) << label << " p=" << p;
        }
    }
}

TEST(PairProperty, ConnectingRankMatchesTable) {
    for (const auto& [label, P] : sample_pairs(58)) {
        const auto t = les_table(P);
        for (std::size_t p = 0; p < P.algebra.dim(); ++p)
            EXPECT_EQ(rank(connecting_map(P, p).matrix), t.degrees[p].rank_connecting) << label << " p=" << p;
    }
}

// beta extends to a cocycle on g exactly when its connecting image vanishes.
TEST(PairProperty, ExtensionIffConnectingImageVanishes) {
    support::Gen g(59);
    for (const auto& [label, P] : sample_pairs(60)) {
        for (std::size_t p = 0; p < P.algebra.dim() && p <= P.sub.dim(); ++p) {
            const auto reps = cohomology(P.restricted.algebra, P.restricted, {p, true}).at(p).class_representatives;
            const auto cm = connecting_map(P, p);
            for (int trial = 0; trial < 4; ++trial) {
                Vector coeffs = zero_vector(reps->rows());
                for (auto& c : coeffs) c = g.integer(0, 1) ? g.rational() : Rational(0);
                if (trial == 0 && !coeffs.empty()) coeffs = zero_vector(coeffs.size());
                Vector beta = zero_vector(reps->cols());
                for (std::size_t i = 0; i < reps->rows(); ++i) beta = add(beta, scale(coeffs[i], reps->row(i)));
                EXPECT_EQ(extends_to_cocycle(P, p, beta), is_zero(cm.matrix * coeffs)) << label << " p=" << p;
            }
        }
    }
}

TEST(Extension, NonCocycleNeverExtends) {
    // Z* on the full h3 is not closed.
    const LieAlgebra h = heisenberg(1);
    const auto P = make_pair_setup(h, Subspace::full(3), trivial_rep(h, 1));
    EXPECT_FALSE(extends_to_cocycle(P, 1, Vector{0, 0, 1}));
    EXPECT_TRUE(extends_to_cocycle(P, 1, Vector{1, 0, 0}));
    EXPECT_THROW(extends_to_cocycle(P, 1, Vector{1, 0}), dimension_error);
}

} // namespace
