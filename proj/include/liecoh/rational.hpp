#ifndef LIECOH_RATIONAL_HPP
#define LIECOH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace liecoh {

/// Exact rational scalar. GMP keeps it in lowest terms with a positive
/// denominator as long as every value is built through make_rational or
/// arithmetic on canonical operands.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw invalid_input("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

/// `p/q`, or `p` when the value is integral.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses `p`, `-p` or `p/q` (decimal integers, arbitrary length).
inline Rational parse_rational(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw invalid_input("empty rational literal");
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw invalid_input("malformed rational literal '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw invalid_input("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v = zero_vector(n);
    v.at(i) = 1;
    return v;
}

} // namespace liecoh

#endif
