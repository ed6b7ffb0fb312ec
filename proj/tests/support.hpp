#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/liecoh.hpp"

namespace support {

using namespace liecoh;

struct Named {
    std::string key;
    LieAlgebra algebra;
};

inline std::vector<Named> catalog_algebras() {
    std::vector<Named> out;
    for (const auto& k : catalog_keys()) out.push_back({k, representative_algebra(builtin(k))});
    return out;
}

struct NamedModule {
    std::string kind;
    Representation module;
};

inline std::vector<NamedModule> standard_modules(const LieAlgebra& L) {
    return {{"trivial", trivial_rep(L, 1)}, {"adjoint", adjoint_rep(L)}, {"abelianization", abelianization_rep(L).module}};
}

// Frozen values from tests/oracle/ce_oracle.py (Fraction arithmetic, pointwise Koszul sums).
struct OracleRow {
    std::vector<std::size_t> trivial, abelianization, adjoint;
    std::size_t ab_dim;
};

inline const std::map<std::string, OracleRow>& oracle() {
    static const std::map<std::string, OracleRow> table = {
        {"abelian(3)", {{1, 3, 3, 1}, {3, 9, 9, 3}, {3, 9, 9, 3}, 3}},
        {"h3", {{1, 2, 2, 1}, {2, 4, 4, 2}, {1, 4, 5, 2}, 2}},
        {"n4", {{1, 2, 2, 2, 1}, {2, 4, 4, 4, 2}, {1, 4, 6, 5, 2}, 2}},
        {"h3+R", {{1, 3, 4, 3, 1}, {3, 9, 12, 9, 3}, {2, 8, 13, 10, 3}, 3}},
        {"h5", {{1, 4, 5, 5, 4, 1}, {4, 16, 20, 20, 16, 4}, {1, 11, 20, 21, 15, 4}, 4}},
        {"n5_1", {{1, 3, 6, 6, 3, 1}, {3, 9, 18, 18, 9, 3}, {2, 10, 19, 20, 12, 3}, 3}},
        {"n5_2", {{1, 2, 3, 3, 2, 1}, {2, 4, 6, 6, 4, 2}, {1, 5, 8, 8, 6, 2}, 2}},
        {"h3+h3", {{1, 4, 8, 10, 8, 4, 1}, {4, 16, 32, 40, 32, 16, 4}, {2, 12, 30, 42, 36, 18, 4}, 4}},
        {"h5+R", {{1, 5, 9, 10, 9, 5, 1}, {5, 25, 45, 50, 45, 25, 5}, {2, 17, 40, 51, 45, 24, 5}, 5}},
        {"n6_1", {{1, 4, 8, 10, 8, 4, 1}, {4, 16, 32, 40, 32, 16, 4}, {2, 12, 30, 42, 36, 18, 4}, 4}},
        {"n6_2", {{1, 2, 3, 4, 3, 2, 1}, {2, 4, 6, 8, 6, 4, 2}, {1, 6, 12, 14, 11, 6, 2}, 2}},
        {"r4", {{1, 2, 1, 0, 0}, {2, 4, 2, 0, 0}, {0, 0, 0, 0, 0}, 2}},
        {"family:n4_t", {{1, 2, 2, 2, 1}, {2, 4, 4, 4, 2}, {1, 4, 6, 5, 2}, 2}},
    };
    return table;
}

// (dim C^2, dim Z^2, dim B^2, dim H^2) of heisenberg(k) with abelianization coefficients.
inline std::array<std::size_t, 4> heisenberg_degree_two(std::size_t k) {
    static const std::array<std::array<std::size_t, 4>, 4> v = {
        {{6, 6, 2, 4}, {40, 24, 4, 20}, {126, 90, 6, 84}, {288, 224, 8, 216}}};
    return v.at(k - 1);
}

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long bound = 5) {
        Rational q(integer(-bound, bound), integer(1, bound));
        q.canonicalize();
        return q;
    }

    /// Entries zero with probability 1 - density.
    Matrix matrix(std::size_t rows, std::size_t cols, double density = 0.6) {
        Matrix m(rows, cols);
        std::bernoulli_distribution keep(density);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (keep(rng_)) m(i, j) = rational();
        return m;
    }

    Vector vector(std::size_t n) {
        Vector v(n);
        for (auto& x : v) x = rational();
        return v;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

/// Same algebra in the basis e_i' = s_i e_i.
inline LieAlgebra rescale(const LieAlgebra& L, const Vector& s) {
    BracketTable t;
    for (const auto& [key, v] : L.brackets()) {
        Vector w(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) w[k] = v[k] * s[key.first] * s[key.second] / s[k];
        t.emplace(key, std::move(w));
    }
    return LieAlgebra::create(L.names(), t);
}

} // namespace support
