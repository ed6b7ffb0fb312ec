#ifndef LIECOH_IO_HPP
#define LIECOH_IO_HPP

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"

// Algebra and family files.
//
//   # comment
//   dim 4
//   basis e1 e2 e3 e4          (optional, names without whitespace)
//   [1,2] = 3                  means [e1,e2] = e3
//   [1,3] = 1/2*4 - 2          means [e1,e3] = 1/2 e4 - e2
//   [2,3] = (1 - t)*4 + t^2*1  family files only
//
// Indices are 1-based, i < j, each pair at most once. Unlisted brackets are zero.

namespace liecoh {

namespace detail {

/// Recursive-descent parser for the right-hand side of a bracket line (whitespace removed).
class RhsParser {
public:
    RhsParser(std::string text, std::size_t line, std::size_t dim, bool allow_t)
        : s_(std::move(text)), line_(line), dim_(dim), allow_t_(allow_t) {}

    PolyVector parse() {
        PolyVector out(dim_);
        if (s_.empty()) fail("missing right-hand side");
        bool first = true;
        while (pos_ < s_.size() || first) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coeff, index] = term();
            out[index] += sign == 1 ? coeff : -coeff;
        }
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(line_, msg); }

    struct Factor {
        Poly value;
        bool bare_integer = false;
        unsigned long integer = 0;
    };

    std::string digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    Factor factor() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = poly_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return {std::move(p)};
        }
        if (c == 't') {
            if (!allow_t_) fail("parameter t is only allowed in family files");
            ++pos_;
            std::size_t power = 1;
            if (peek() == '^') {
                ++pos_;
                const std::string e = digits();
                if (e.empty() || e.size() > 4) fail("expected exponent after '^'");
                power = std::stoul(e);
            }
            return {Poly::monomial(1, power)};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (peek() == '/') {
                ++pos_;
                const std::string den = digits();
                if (den.empty()) fail("expected denominator after '/'");
                try {
                    return {Poly(parse_rational(num + "/" + den))};
                } catch (const invalid_input& e) {
                    fail(e.what());
                }
            }
            Factor f{Poly(parse_rational(num))};
            f.bare_integer = num.size() <= 9;
            if (f.bare_integer) f.integer = std::stoul(num);
            return f;
        }
        fail(c == '\0' ? "unexpected end of line" : std::string("unexpected character '") + c + "'");
    }

    std::pair<Poly, std::size_t> term() {
        std::vector<Factor> fs{factor()};
        while (peek() == '*') {
            ++pos_;
            fs.push_back(factor());
        }
        const Factor& last = fs.back();
        if (!last.bare_integer) fail("a term must end with a basis index");
        if (last.integer < 1 || last.integer > dim_)
            fail("basis index " + std::to_string(last.integer) + " out of range 1.." + std::to_string(dim_));
        Poly coeff(1);
        for (std::size_t i = 0; i + 1 < fs.size(); ++i) coeff = coeff * fs[i].value;
        return {coeff, last.integer - 1};
    }

    Poly poly_expr() {
        Poly acc;
        bool first = true;
        while (first || peek() == '+' || peek() == '-') {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            }
            first = false;
            Poly t = factor().value;
            while (peek() == '*') {
                ++pos_;
                t = t * factor().value;
            }
            acc += sign == 1 ? t : -t;
        }
        return acc;
    }

    std::string s_;
    std::size_t pos_ = 0;
    std::size_t line_, dim_;
    bool allow_t_;
};

struct RawBracket {
    std::size_t line, i, j;
    std::string rhs;
};

inline std::string strip(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline std::string without_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

inline DeformationFamily parse_table(const std::string& text, bool allow_t) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    std::optional<std::size_t> dim;
    std::optional<std::vector<std::string>> names;
    std::vector<RawBracket> lines;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (line.rfind("dim", 0) == 0 && (line.size() == 3 || std::isspace(static_cast<unsigned char>(line[3])))) {
            if (dim) throw parse_error(lineno, "duplicate dim line");
            const std::string num = strip(line.substr(3));
            if (num.empty() || num.size() > 2 || num.find_first_not_of("0123456789") != std::string::npos)
                throw parse_error(lineno, "expected 'dim n' with n at most 63");
            dim = std::stoul(num);
            if (*dim > 63) throw parse_error(lineno, "dimension above 63 is not supported");
        } else if (line.rfind("basis", 0) == 0 &&
                   (line.size() == 5 || std::isspace(static_cast<unsigned char>(line[5])))) {
            if (names) throw parse_error(lineno, "duplicate basis line");
            std::istringstream ns(line.substr(5));
            std::vector<std::string> v;
            for (std::string w; ns >> w;) v.push_back(w);
            std::set<std::string> uniq(v.begin(), v.end());
            if (uniq.size() != v.size()) throw parse_error(lineno, "repeated basis name");
            names = std::move(v);
        } else if (line[0] == '[') {
            const std::string compact = without_spaces(line);
            const auto close = compact.find(']');
            const auto comma = compact.find(',');
            if (close == std::string::npos || comma == std::string::npos || comma > close)
                throw parse_error(lineno, "expected '[i,j] = ...'");
            const std::string a = compact.substr(1, comma - 1), b = compact.substr(comma + 1, close - comma - 1);
            auto index = [&](const std::string& s) {
                if (s.empty() || s.size() > 2 || s.find_first_not_of("0123456789") != std::string::npos)
                    throw parse_error(lineno, "malformed bracket index '" + s + "'");
                return std::stoul(s);
            };
            const std::size_t i = index(a), j = index(b);
            if (close + 1 >= compact.size() || compact[close + 1] != '=') throw parse_error(lineno, "expected '='");
            if (i >= j) throw parse_error(lineno, "bracket indices must satisfy i < j");
            if (!seen.insert({i, j}).second) throw parse_error(lineno, "duplicate bracket [" + a + "," + b + "]");
            lines.push_back({lineno, i, j, compact.substr(close + 2)});
        } else {
            throw parse_error(lineno, "unrecognized line '" + line + "'");
        }
    }
    if (!dim) throw parse_error(lineno, "missing 'dim n' line");
    if (names && names->size() != *dim) throw parse_error(lineno, "basis line does not list dim names");
    DeformationFamily F;
    F.names = names ? *names : LieAlgebra::default_names(*dim);
    for (const auto& l : lines) {
        if (l.j > *dim) throw parse_error(l.line, "bracket index out of range 1.." + std::to_string(*dim));
        PolyVector v = RhsParser(l.rhs, l.line, *dim, allow_t).parse();
        bool zero = true;
        for (const auto& p : v) zero = zero && p.is_zero();
        if (!zero) F.brackets.emplace(std::make_pair(l.i - 1, l.j - 1), std::move(v));
    }
    return F;
}

inline std::string term_text(const Poly& c, std::size_t index) {
    const std::string idx = std::to_string(index + 1);
    if (!c.is_constant()) return "(" + to_string(c) + ")*" + idx;
    const Rational v = c.coefficient(0);
    if (v == 1) return idx;
    if (v == -1) return "-" + idx;
    return to_string(v) + "*" + idx;
}

inline std::string emit_table(const DeformationFamily& F, const std::string& header) {
    std::ostringstream out;
    if (!header.empty()) out << "# " << header << "\n";
    out << "dim " << F.dim() << "\n";
    if (F.dim() > 0) {
        out << "basis";
        for (const auto& n : F.names) out << " " << n;
        out << "\n";
    }
    for (const auto& [key, v] : F.brackets) {
        out << "[" << key.first + 1 << "," << key.second + 1 << "] = ";
        bool first = true;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k].is_zero()) continue;
            std::string t = term_text(v[k], k);
            if (first)
                out << t;
            else if (t[0] == '-')
                out << " - " << t.substr(1);
            else
                out << " + " << t;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace detail

/// Parses an algebra file. With Validation::deferred the Jacobi check is left to the caller.
inline LieAlgebra parse_algebra(const std::string& text, Validation mode = Validation::immediate) {
    const DeformationFamily F = detail::parse_table(text, false);
    BracketTable t;
    for (const auto& [key, pv] : F.brackets) {
        Vector v;
        for (const auto& p : pv) v.push_back(p.coefficient(0));
        t.emplace(key, std::move(v));
    }
    return LieAlgebra::create(F.names, t, mode);
}

struct ParsedFamily {
    DeformationFamily family;
    std::vector<FamilyJacobiDefect> jacobi; ///< symbolic Jacobi defects, computed at parse time
};

inline ParsedFamily parse_family(const std::string& text) {
    ParsedFamily p{detail::parse_table(text, true), {}};
    p.jacobi = family_jacobi(p.family);
    return p;
}

inline std::string emit_algebra(const LieAlgebra& L, const std::string& header = "") {
    return detail::emit_table(constant_family(L), header);
}

inline std::string emit_family(const DeformationFamily& F, const std::string& header = "") {
    return detail::emit_table(F, header);
}

inline std::string emit_entry(const CatalogEntry& e) {
    return e.is_family() ? emit_family(e.family(), e.key) : emit_algebra(e.algebra(), e.key);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input("cannot write '" + path + "'");
    out << text;
    if (!out) throw invalid_input("write to '" + path + "' failed");
}

} // namespace liecoh

#endif
