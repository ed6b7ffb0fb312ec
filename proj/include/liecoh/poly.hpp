#ifndef LIECOH_POLY_HPP
#define LIECOH_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace liecoh {

/// Univariate polynomial in t with rational coefficients, coefficient i of t^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(Rational constant) : coeffs_{std::move(constant)} { trim(); }
    Poly(int constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly t() { return Poly(std::vector<Rational>{0, 1}); }

    static Poly monomial(const Rational& c, std::size_t power) {
        std::vector<Rational> v(power + 1);
        v[power] = c;
        return Poly(std::move(v));
    }

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// Degree, with -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    Rational coefficient(std::size_t power) const {
        return power < coeffs_.size() ? coeffs_[power] : Rational(0);
    }

    /// Horner evaluation.
    Rational operator()(const Rational& t0) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + *it;
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Rational poly_eval(const Poly& p, const Rational& t0) { return p(t0); }

/// The coefficient of t^1, i.e. d/dt at t = 0.
inline Rational poly_derivative_at_zero(const Poly& p) { return p.coefficient(1); }

/// Ascending powers of t, e.g. `1 - t + 1/2*t^2`; zero prints as `0`.
inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) == 0) continue;
        Rational mag = abs(c[i]);
        if (first)
            out += sgn(c[i]) < 0 ? "-" : "";
        else
            out += sgn(c[i]) < 0 ? " - " : " + ";
        first = false;
        std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        if (i == 0)
            out += to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_string(mag) + "*" + mono;
    }
    return out;
}

} // namespace liecoh

#endif
