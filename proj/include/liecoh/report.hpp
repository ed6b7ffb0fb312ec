#ifndef LIECOH_REPORT_HPP
#define LIECOH_REPORT_HPP

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "io.hpp"
#include "pair_complex.hpp"

namespace liecoh {

using json = nlohmann::ordered_json;

/// Output of one command: text for people, JSON for machines.
struct Report {
    std::string text;
    json document; ///< {input, computed, paper_claim?, agrees?, warnings[]}
    int exit_code = 0;

    std::string json_text() const { return document.dump(2) + "\n"; }
};

namespace report {

/// Left-aligned text table.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) : rows_{std::move(header)} {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string str() const {
        std::vector<std::size_t> width;
        for (const auto& r : rows_)
            for (std::size_t c = 0; c < r.size(); ++c) {
                if (width.size() <= c) width.push_back(0);
                width[c] = std::max(width[c], r[c].size());
            }
        std::ostringstream out;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& r = rows_[i];
            for (std::size_t c = 0; c < r.size(); ++c) {
                if (c + 1 == r.size()) {
                    out << r[c];
                    break;
                }
                out << std::left << std::setw(static_cast<int>(width[c])) << r[c] << "  ";
            }
            out << "\n";
            if (i == 0) {
                std::size_t total = 0;
                for (auto w : width) total += w + 2;
                out << std::string(total - 2, '-') << "\n";
            }
        }
        return out.str();
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string join(const std::vector<std::size_t>& v, const std::string& sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

inline json rational_array(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline json basis_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(rational_array(m.row(i)));
    return a;
}

inline std::string vector_text(const Vector& v, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        std::string coeff = v[i] == 1 ? "" : v[i] == -1 ? "-" : to_string(v[i]) + "*";
        if (!s.empty()) {
            if (coeff.starts_with("-")) {
                s += " - ";
                coeff.erase(0, 1);
            } else {
                s += " + ";
            }
        }
        s += coeff + names[i];
    }
    return s.empty() ? "0" : s;
}

/// Cochain in the fixed layout written as a sum of terms c*(x1^..^xp -> v).
inline std::string cochain_text(const Vector& f, std::size_t n, std::size_t p, const std::vector<std::string>& names,
                                const std::vector<std::string>& module_names) {
    const WedgeBasis w(n, p);
    const std::size_t m = module_names.size();
    std::vector<std::string> labels;
    for (std::size_t t = 0; t < w.size(); ++t) {
        std::string wedge;
        for (std::size_t a = 0; a < p; ++a) wedge += (a ? "^" : "") + names[w[t][a]];
        if (p == 0) wedge = "1";
        for (std::size_t k = 0; k < m; ++k) labels.push_back("(" + wedge + " -> " + module_names[k] + ")");
    }
    return vector_text(f, labels);
}

/// Algebra, family or catalog reference named on the command line.
struct Source {
    std::string label;
    std::string text;
    std::optional<CatalogEntry> entry;
};

inline Source load_source(const std::string& where) {
    if (where.starts_with("catalog:")) {
        CatalogEntry e = builtin(where.substr(8));
        std::string text = emit_entry(e);
        return {where, std::move(text), std::move(e)};
    }
    return {where, read_file(where), std::nullopt};
}

inline LieAlgebra load_algebra(const Source& s) {
    if (s.entry && s.entry->is_family())
        throw invalid_input("'" + s.label + "' is a family; use the deform command");
    return parse_algebra(s.text);
}

inline Representation parse_coefficients(const LieAlgebra& L, const std::string& spec) {
    if (spec == "adjoint") return adjoint_rep(L);
    if (spec == "abelianization") return abelianization_rep(L).module;
    if (spec == "trivial") return trivial_rep(L, 1);
    if (spec.starts_with("trivial:")) {
        const std::string num = spec.substr(8);
        if (num.empty() || num.size() > 3 || num.find_first_not_of("0123456789") != std::string::npos || num == "0")
            throw invalid_input("trivial:m needs a positive integer m, got '" + num + "'");
        return trivial_rep(L, std::stoul(num));
    }
    throw invalid_input("unknown coefficient kind '" + spec + "' (expected trivial:m, adjoint or abelianization)");
}

inline std::vector<std::string> module_names(const LieAlgebra& L, const Representation& V) {
    if (V.kind == ModuleKind::adjoint) return L.names();
    std::vector<std::string> out;
    for (std::size_t k = 0; k < V.dim; ++k) out.push_back("v" + std::to_string(k + 1));
    return out;
}

/// Claims attached to an algebra that is structurally a catalog row or a Heisenberg algebra.
struct Claims {
    std::optional<CatalogEntry> table_row;
    std::optional<std::size_t> heisenberg_k;
};

inline Claims claims_for(const LieAlgebra& L) {
    Claims c;
    c.table_row = match_catalog(L);
    if (L.dim() >= 3 && L.dim() % 2 == 1) {
        const std::size_t k = (L.dim() - 1) / 2;
        if (heisenberg(k).brackets() == L.brackets()) c.heisenberg_k = k;
    }
    return c;
}

inline json classification_json(const Classification& c) {
    json j;
    j["classification"] = to_string(c);
    j["nilpotency_index"] = c.nilpotency_index ? json(*c.nilpotency_index) : json(nullptr);
    j["derived_length"] = c.derived_length ? json(*c.derived_length) : json(nullptr);
    j["lower_central_dims"] = c.lower_central_dims;
    j["derived_dims"] = c.derived_dims;
    return j;
}

inline std::string kind_text(const Classification& c) {
    switch (c.kind) {
    case ClassKind::nilpotent: return "nilpotent, index " + std::to_string(*c.nilpotency_index);
    case ClassKind::solvable_non_nilpotent:
        return "solvable, non-nilpotent, derived length " + std::to_string(*c.derived_length);
    case ClassKind::non_solvable: return "not solvable";
    }
    return "";
}

inline std::string finish_text(std::ostringstream& out, const json& warnings) {
    for (const auto& w : warnings) out << "warning: " << w.get<std::string>() << "\n";
    return out.str();
}

inline json header(const std::string& command) {
    json in;
    in["command"] = command;
    return in;
}

} // namespace report

/// Jacobi status, both series, center, nilpotency index and derived length.
inline Report cmd_check(const std::string& source) {
    using namespace report;
    const Source src = load_source(source);
    json input = header("check");
    input["source"] = src.label;
    const LieAlgebra L = load_algebra(src);

    const auto lcs = lower_central_series(L);
    const auto ds = derived_series(L);
    const Subspace z = center(L);
    const Classification c = classify(L);

    json computed;
    computed["dim"] = L.dim();
    computed["basis"] = L.names();
    computed["jacobi"] = true;
    computed["lower_central_dims"] = lcs.dims();
    computed["lower_central_stabilized"] = lcs.stabilized;
    computed["derived_dims"] = ds.dims();
    computed["derived_stabilized"] = ds.stabilized;
    computed["center_dim"] = z.dim();
    computed["center_basis"] = basis_json(z.basis());
    computed["nilpotency_index"] = c.nilpotency_index ? json(*c.nilpotency_index) : json(nullptr);
    computed["derived_length"] = c.derived_length ? json(*c.derived_length) : json(nullptr);
    computed["classification"] = to_string(c);
    json warnings = json::array();
    if (src.entry && !src.entry->note.empty()) warnings.push_back(src.entry->note);

    std::ostringstream out;
    out << "algebra " << src.label << " (dim " << L.dim() << ")\n";
    out << "jacobi identity: ok\n";
    out << "lower central series dims: " << join(lcs.dims()) << (lcs.stabilized ? " (stabilized)" : "") << "\n";
    out << "derived series dims: " << join(ds.dims()) << (ds.stabilized ? " (stabilized)" : "") << "\n";
    out << "center: dim " << z.dim();
    for (std::size_t i = 0; i < z.dim(); ++i) out << (i ? ", " : " spanned by ") << vector_text(z.basis_vector(i), L.names());
    out << "\n";
    out << "classification: " << kind_text(c) << "\n";

    Report r;
    r.document = {{"input", input}, {"computed", computed}, {"warnings", warnings}};
    r.text = finish_text(out, warnings);
    return r;
}

/// Dimension table of H^p(g, V) for all degrees or one degree.
inline Report cmd_cohomology(const std::string& source, std::optional<std::size_t> degree,
                             const std::string& coefficients, bool representatives) {
    using namespace report;
    const Source src = load_source(source);
    json input = header("cohomology");
    input["source"] = src.label;
    input["coefficients"] = coefficients;
    input["degree"] = degree ? json(*degree) : json(nullptr);
    input["representatives"] = representatives;
    const LieAlgebra L = load_algebra(src);
    const Representation V = parse_coefficients(L, coefficients);
    if (const auto bad = verify_rep(V); !bad.empty())
        throw invalid_input("coefficient module is not a representation");
    const CohomologyReport H = cohomology(L, V, {degree, representatives});
    const auto mnames = module_names(L, V);

    json computed;
    computed["dim"] = L.dim();
    computed["module"] = to_string(V.kind);
    computed["module_dim"] = V.dim;
    computed["layout"] = "index = rank of the wedge tuple in lexicographic order * module_dim + module index";
    json rows = json::array();
    TextTable table({"p", "dim C^p", "dim Z^p", "dim B^p", "dim H^p"});
    for (const auto& d : H.degrees) {
        json row;
        row["degree"] = d.degree;
        row["dim_c"] = d.dim_c;
        row["dim_z"] = d.dim_z;
        row["dim_b"] = d.dim_b;
        row["dim_h"] = d.dim_h;
        if (d.class_representatives) row["representatives"] = basis_json(*d.class_representatives);
        rows.push_back(row);
        table.add({std::to_string(d.degree), std::to_string(d.dim_c), std::to_string(d.dim_z), std::to_string(d.dim_b),
                   std::to_string(d.dim_h)});
    }
    computed["degrees"] = rows;
    if (!degree) {
        long chi_c = 0, chi_h = 0;
        for (const auto& d : H.degrees) {
            const long s = d.degree % 2 ? -1 : 1;
            chi_c += s * static_cast<long>(d.dim_c);
            chi_h += s * static_cast<long>(d.dim_h);
        }
        computed["euler_characteristic"] = chi_h;
        computed["euler_identity"] = chi_c == chi_h;
    }

    std::ostringstream out;
    out << "H^*(" << src.label << ", " << coefficients << "), module dim " << V.dim << "\n" << table.str();

    json claim = json::object();
    bool agrees = true;
    std::vector<std::string> notes;
    const bool has_two = !degree || *degree == 2;
    if (V.kind == ModuleKind::abelianization && has_two && L.dim() >= 2) {
        const auto& d2 = H.at(2);
        const Claims c = claims_for(L);
        if (c.table_row) {
            const std::size_t v = *c.table_row->claimed_h2;
            claim["table1"] = {{"key", c.table_row->key}, {"dim_h2", v}};
            agrees = agrees && v == d2.dim_h;
            notes.push_back("table row " + c.table_row->key + " claims dim H^2 = " + std::to_string(v) + ", computed " +
                            std::to_string(d2.dim_h) + (v == d2.dim_h ? "" : " (disagrees)"));
        }
        if (c.heisenberg_k) {
            const std::size_t k = *c.heisenberg_k, h = k * (2 * k - 1), b = 2 * k;
            claim["heisenberg_formula"] = {{"k", k}, {"dim_h2", h}, {"dim_b2", b}};
            agrees = agrees && h == d2.dim_h && b == d2.dim_b;
            notes.push_back("claimed dim H^2 = k(2k-1) = " + std::to_string(h) + ", computed " +
                            std::to_string(d2.dim_h) + (h == d2.dim_h ? "" : " (disagrees)"));
            notes.push_back("claimed dim B^2 = 2k = " + std::to_string(b) + ", computed " + std::to_string(d2.dim_b) +
                            (b == d2.dim_b ? "" : " (disagrees)"));
        }
    }
    if (representatives) {
        for (const auto& d : H.degrees) {
            if (!d.class_representatives || d.class_representatives->rows() == 0) continue;
            out << "representatives of H^" << d.degree << ":\n";
            for (std::size_t i = 0; i < d.class_representatives->rows(); ++i)
                out << "  " << cochain_text(d.class_representatives->row(i), L.dim(), d.degree, L.names(), mnames)
                    << "\n";
        }
    }
    for (const auto& n : notes) out << "claim: " << n << "\n";

    json warnings = json::array();
    if (src.entry && !src.entry->note.empty()) warnings.push_back(src.entry->note);
    Report r;
    r.document = {{"input", input}, {"computed", computed}};
    if (!claim.empty()) {
        claim["notes"] = notes;
        r.document["paper_claim"] = claim;
        r.document["agrees"] = agrees;
    }
    r.document["warnings"] = warnings;
    r.text = finish_text(out, warnings);
    return r;
}

/// Rigidity class from dim H^2(g, g/[g,g]) with the table comparison when the input matches a row.
inline Report cmd_classify(const std::string& source) {
    using namespace report;
    const Source src = load_source(source);
    json input = header("classify");
    input["source"] = src.label;
    const LieAlgebra L = load_algebra(src);
    const RigidityResult res = rigidity_class(L);
    const Classification c = classify(L);

    json computed;
    computed["dim"] = L.dim();
    computed["rigidity_class"] = to_string(res.cls);
    computed["dim_c2"] = res.dim_c2;
    computed["dim_z2"] = res.dim_z2;
    computed["dim_b2"] = res.dim_b2;
    computed["dim_h2"] = res.dim_h2;
    computed["module_dim"] = res.module_dim;
    computed["classification"] = to_string(c);
    json warnings = json::array();
    for (const auto& w : res.warnings) warnings.push_back(w);
    if (src.entry && !src.entry->note.empty()) warnings.push_back(src.entry->note);

    std::ostringstream out;
    out << "algebra " << src.label << " (dim " << L.dim() << ", " << kind_text(c) << ")\n";
    out << "H^2(g, g/[g,g]): dim C^2 = " << res.dim_c2 << ", dim Z^2 = " << res.dim_z2 << ", dim B^2 = " << res.dim_b2
        << ", dim H^2 = " << res.dim_h2 << "\n";
    out << "class " << to_string(res.cls)
        << (res.cls == RigidityClass::II ? " (admits a non-nilpotent solvable deformation)"
                                         : " (no non-nilpotent solvable deformation)")
        << "\n";

    Report r;
    r.document = {{"input", input}, {"computed", computed}};
    const Claims cl = claims_for(L);
    if (cl.table_row) {
        const auto& e = *cl.table_row;
        const bool h2_ok = *e.claimed_h2 == res.dim_h2, class_ok = *e.claimed_class == res.cls;
        std::string note = "table row " + e.key + " claims class " + to_string(*e.claimed_class) + " and dim H^2 = " +
                           std::to_string(*e.claimed_h2) + "; computed class " + to_string(res.cls) +
                           " and dim H^2 = " + std::to_string(res.dim_h2);
        r.document["paper_claim"] = {{"key", e.key},
                                     {"relations", e.relations},
                                     {"rigidity_class", to_string(*e.claimed_class)},
                                     {"dim_h2", *e.claimed_h2},
                                     {"class_agrees", class_ok},
                                     {"dim_h2_agrees", h2_ok},
                                     {"note", note}};
        r.document["agrees"] = h2_ok && class_ok;
        out << "claim: " << note << (h2_ok && class_ok ? "" : " (disagrees)") << "\n";
    }
    r.document["warnings"] = warnings;
    r.text = finish_text(out, warnings);
    return r;
}

namespace report {

/// "1,3" (1-based indices) or "(1,0,0),(0,1,1/2)" (vectors in the basis).
inline Subspace parse_subalgebra(const std::string& spec, std::size_t n) {
    const std::string s = detail::without_spaces(spec);
    if (s.empty()) throw invalid_input("empty subalgebra specification");
    std::vector<Vector> rows;
    if (s.front() == '(') {
        std::size_t pos = 0;
        while (pos < s.size()) {
            if (s[pos] != '(') throw invalid_input("expected '(' in subalgebra vector list");
            const auto close = s.find(')', pos);
            if (close == std::string::npos) throw invalid_input("unterminated vector in subalgebra list");
            Vector v;
            std::stringstream items(s.substr(pos + 1, close - pos - 1));
            for (std::string item; std::getline(items, item, ',');) v.push_back(parse_rational(item));
            if (v.size() != n)
                throw invalid_input("subalgebra vector has " + std::to_string(v.size()) + " entries, expected " +
                                    std::to_string(n));
            rows.push_back(std::move(v));
            pos = close + 1;
            if (pos < s.size() && s[pos] == ',') ++pos;
        }
    } else {
        std::stringstream items(s);
        for (std::string item; std::getline(items, item, ',');) {
            if (item.empty() || item.size() > 2 || item.find_first_not_of("0123456789") != std::string::npos)
                throw invalid_input("malformed subalgebra index '" + item + "'");
            const std::size_t i = std::stoul(item);
            if (i < 1 || i > n) throw invalid_input("subalgebra index " + item + " out of range 1.." + std::to_string(n));
            rows.push_back(unit_vector(n, i - 1));
        }
    }
    return Subspace::span(n, rows);
}

/// First basis pair of H whose bracket leaves H.
inline std::optional<std::pair<std::size_t, std::size_t>> subalgebra_violation(const LieAlgebra& L,
                                                                               const Subspace& H) {
    for (std::size_t a = 0; a < H.dim(); ++a)
        for (std::size_t b = a + 1; b < H.dim(); ++b)
            if (!H.contains(bracket(L, H.basis_vector(a), H.basis_vector(b)))) return std::make_pair(a, b);
    return std::nullopt;
}

} // namespace report

/// Long exact sequence of the pair (g, h) with exactness verdicts and connecting-map ranks.
inline Report cmd_pair(const std::string& source, const std::string& subalgebra, const std::string& coefficients) {
    using namespace report;
    const Source src = load_source(source);
    json input = header("pair");
    input["source"] = src.label;
    input["subalgebra"] = subalgebra;
    input["coefficients"] = coefficients;
    const LieAlgebra L = load_algebra(src);
    const Subspace H = parse_subalgebra(subalgebra, L.dim());
    if (const auto bad = subalgebra_violation(L, H)) {
        throw invalid_input("not a subalgebra: [" + vector_text(H.basis_vector(bad->first), L.names()) + ", " +
                            vector_text(H.basis_vector(bad->second), L.names()) + "] = " +
                            vector_text(bracket(L, H.basis_vector(bad->first), H.basis_vector(bad->second)), L.names()) +
                            " is not in the span");
    }
    const Representation V = parse_coefficients(L, coefficients);
    const PairSetup P = make_pair_setup(L, H, V);
    const LESTable t = les_table(P);

    bool additive = true;
    for (std::size_t p = 0; p < t.dims_c_g.size(); ++p)
        additive = additive && t.dims_c_rel[p] + t.dims_c_h[p] == t.dims_c_g[p];

    json computed;
    computed["dim"] = L.dim();
    computed["sub_dim"] = H.dim();
    computed["sub_basis"] = basis_json(H.basis());
    computed["module"] = to_string(V.kind);
    computed["module_dim"] = V.dim;
    computed["relative_model"] = "kernel of the restriction map C^p(g,V) -> C^p(h,V)";
    computed["dims_c_rel"] = t.dims_c_rel;
    computed["dims_c_g"] = t.dims_c_g;
    computed["dims_c_h"] = t.dims_c_h;
    computed["cochain_dims_additive"] = additive;
    json rows = json::array();
    TextTable table({"p", "H(rel)", "H(g)", "H(h)", "rk i", "rk res", "rk d", "exact rel", "exact g", "exact h"});
    for (const auto& d : t.degrees) {
        rows.push_back({{"degree", d.degree},
                        {"dim_rel", d.dim_rel},
                        {"dim_g", d.dim_g},
                        {"dim_h", d.dim_h},
                        {"rank_inclusion", d.rank_inclusion},
                        {"rank_restriction", d.rank_restriction},
                        {"rank_connecting", d.rank_connecting},
                        {"exact_at_rel", d.exact_at_rel},
                        {"exact_at_g", d.exact_at_g},
                        {"exact_at_h", d.exact_at_h}});
        table.add({std::to_string(d.degree), std::to_string(d.dim_rel), std::to_string(d.dim_g), std::to_string(d.dim_h),
                   std::to_string(d.rank_inclusion), std::to_string(d.rank_restriction),
                   std::to_string(d.rank_connecting), yes_no(d.exact_at_rel), yes_no(d.exact_at_g),
                   yes_no(d.exact_at_h)});
    }
    computed["degrees"] = rows;
    computed["exact"] = t.exact();

    std::ostringstream out;
    out << "pair (" << src.label << ", h), dim h = " << H.dim() << ", coefficients " << coefficients << "\n";
    for (std::size_t i = 0; i < H.dim(); ++i) out << "  h" << i + 1 << " = " << vector_text(H.basis_vector(i), L.names()) << "\n";
    out << table.str();
    out << "long exact sequence exact: " << yes_no(t.exact()) << "\n";
    out << "dim C(rel) + dim C(h) = dim C(g) in every degree: " << yes_no(additive) << "\n";

    json warnings = json::array();
    Report r;
    r.document = {{"input", input}, {"computed", computed}, {"warnings", warnings}};
    r.text = finish_text(out, warnings);
    return r;
}

/// Symbolic Jacobi status, first-order cocycle check and per-sample classification of a family.
inline Report cmd_deform(const std::string& source, const std::vector<Rational>& samples,
                         const std::optional<std::string>& claim_text) {
    using namespace report;
    const Source src = load_source(source);
    json input = header("deform");
    input["source"] = src.label;
    json sample_in = json::array();
    for (const auto& s : samples) sample_in.push_back(to_string(s));
    input["samples"] = sample_in;
    input["claim"] = claim_text ? json(*claim_text) : json(nullptr);

    const ParsedFamily pf = parse_family(src.text);
    const DeformationFamily& F = pf.family;
    std::optional<ClassificationClaim> claim;
    std::string claim_source;
    if (claim_text) {
        claim = parse_claim(*claim_text);
        claim_source = "command line";
    } else {
        std::optional<CatalogEntry> e = src.entry;
        if (!e && F == n4_t_family()) e = builtin("family:n4_t");
        if (e && e->claimed_classification) {
            claim = e->claimed_classification;
            claim_source = "catalog entry " + e->key;
        }
    }
    const FamilyAudit a = audit_family(F, samples, claim);
    const bool jacobi_ok = a.symbolic_defects.empty();

    json computed;
    computed["dim"] = F.dim();
    computed["symbolic_jacobi"] = jacobi_ok;
    json defects = json::array();
    std::ostringstream out;
    out << "family " << src.label << " (dim " << F.dim() << ")\n";
    out << "jacobi identity in t: " << (jacobi_ok ? "holds identically" : "fails") << "\n";
    for (const auto& d : a.symbolic_defects) {
        json comps = json::array();
        std::string line;
        for (std::size_t k = 0; k < d.defect.size(); ++k) {
            comps.push_back(to_string(d.defect[k]));
            if (!d.defect[k].is_zero())
                line += (line.empty() ? "" : " + ") + std::string("(") + to_string(d.defect[k]) + ")*" + F.names[k];
        }
        defects.push_back({{"triple", {d.i + 1, d.j + 1, d.k + 1}}, {"defect", comps}});
        out << "  defect at (" << d.i + 1 << "," << d.j + 1 << "," << d.k + 1 << "): " << line << "\n";
    }
    computed["jacobi_defects"] = defects;

    json alpha = json::array();
    const Vector fo = first_order_term(F);
    const std::size_t n = F.dim();
    if (n >= 2) {
        const WedgeBasis w(n, 2);
        for (std::size_t t = 0; t < w.size(); ++t)
            for (std::size_t k = 0; k < n; ++k)
                if (fo[t * n + k] != 0)
                    alpha.push_back({{"pair", {w[t][0] + 1, w[t][1] + 1}}, {"target", k + 1},
                                     {"value", to_string(fo[t * n + k])}});
    }
    computed["first_order_term"] = alpha;
    if (jacobi_ok) {
        computed["first_order_cocycle"] = a.first_order_defects.empty();
        out << "first-order term: "
            << (n >= 2 ? cochain_text(fo, n, 2, F.names, F.names) : std::string("0")) << "\n";
        out << "first-order term is a 2-cocycle of the t = 0 member: " << yes_no(a.first_order_defects.empty())
            << "\n";
    } else {
        computed["first_order_cocycle"] = nullptr;
    }

    json rows = json::array();
    TextTable table({"t", "jacobi", "classification", "lower central dims", "derived dims", "agrees"});
    bool all_agree = true;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const auto& s = a.samples[i];
        json row;
        row["t"] = to_string(s.t0);
        row["jacobi"] = s.jacobi_ok;
        if (s.classification) {
            const json cj = classification_json(*s.classification);
            for (auto it = cj.begin(); it != cj.end(); ++it) row[it.key()] = it.value();
        }
        if (a.agreement[i]) {
            row["agrees"] = *a.agreement[i];
            all_agree = all_agree && *a.agreement[i];
        }
        rows.push_back(row);
        table.add({to_string(s.t0), yes_no(s.jacobi_ok), s.classification ? to_string(*s.classification) : "-",
                   s.classification ? join(s.classification->lower_central_dims) : "-",
                   s.classification ? join(s.classification->derived_dims) : "-",
                   a.agreement[i] ? yes_no(*a.agreement[i]) : "-"});
    }
    computed["samples"] = rows;
    out << table.str();

    Report r;
    r.document = {{"input", input}, {"computed", computed}};
    if (claim) {
        const std::string note = "claimed " + to_string(*claim) + " (" + claim_source + ")";
        r.document["paper_claim"] = {{"classification", to_string(*claim)}, {"source", claim_source}, {"note", note}};
        r.document["agrees"] = all_agree;
        out << "claim: " << note << "; " << (all_agree ? "agrees at every sample" : "disagrees") << "\n";
    }
    json warnings = json::array();
    warnings.push_back("classification is of the Lie algebra at each sampled t; no solvmanifold or lattice data is modelled");
    r.document["warnings"] = warnings;
    r.text = finish_text(out, warnings);
    r.exit_code = jacobi_ok ? 0 : 1;
    return r;
}

/// Computed dim H^2(g, g/[g,g]) beside the claimed values, per row. Always exits 0.
inline Report cmd_audit_table1() {
    using namespace report;
    const Table1Audit a = table1_audit();
    json rows = json::array();
    TextTable table({"row", "dim C^2", "dim Z^2", "dim B^2", "dim H^2", "claimed H^2", "class", "claimed class",
                     "agrees"});
    bool all = true;
    for (const auto& row : a.rows) {
        const auto& c = row.computed;
        json j;
        j["label"] = row.label;
        j["key"] = row.key;
        j["k"] = row.k ? json(*row.k) : json(nullptr);
        j["dim_c2"] = c.dim_c2;
        j["dim_z2"] = c.dim_z2;
        j["dim_b2"] = c.dim_b2;
        j["dim_h2"] = c.dim_h2;
        j["rigidity_class"] = to_string(c.cls);
        j["claimed_dim_h2"] = *row.paper_h2;
        j["claimed_dim_z2"] = row.paper_z2 ? json(*row.paper_z2) : json(nullptr);
        j["claimed_dim_b2"] = row.paper_b2 ? json(*row.paper_b2) : json(nullptr);
        j["claimed_class"] = row.paper_class ? json(to_string(*row.paper_class)) : json(nullptr);
        j["agrees"] = row.agrees;
        j["z2_agrees"] = row.z2_agrees ? json(*row.z2_agrees) : json(nullptr);
        j["b2_agrees"] = row.b2_agrees ? json(*row.b2_agrees) : json(nullptr);
        j["class_agrees"] = row.class_agrees ? json(*row.class_agrees) : json(nullptr);
        std::string note = "claimed dim H^2 = " + std::to_string(*row.paper_h2) + ", computed " +
                           std::to_string(c.dim_h2);
        if (row.paper_b2)
            note += "; claimed dim B^2 = " + std::to_string(*row.paper_b2) + ", computed " + std::to_string(c.dim_b2);
        j["note"] = note;
        rows.push_back(j);
        all = all && row.agrees;
        table.add({row.label, std::to_string(c.dim_c2), std::to_string(c.dim_z2), std::to_string(c.dim_b2),
                   std::to_string(c.dim_h2), std::to_string(*row.paper_h2), to_string(c.cls),
                   row.paper_class ? to_string(*row.paper_class) : "-", yes_no(row.agrees)});
    }
    json computed;
    computed["rows"] = rows;
    computed["degree_one_bracket_sign"] = a.degree_one_bracket_sign;
    computed["notes"] = a.notes;

    std::ostringstream out;
    out << "H^2(g, g/[g,g]) audit\n" << table.str();
    out << "sign s in (delta f)(x,y) = s f([x,y]) for 1-cochains with trivial action: "
        << (a.degree_one_bracket_sign < 0 ? "-1" : "+1") << "\n";
    for (const auto& n : a.notes) out << "note: " << n << "\n";

    json warnings = json::array();
    Report r;
    r.document = {{"input", header("audit-table1")},
                  {"computed", computed},
                  {"paper_claim", {{"column", "H^2(g, g/[g,g])"}, {"heisenberg_formula", "k(2k-1)"}}},
                  {"agrees", all},
                  {"warnings", warnings}};
    r.text = finish_text(out, warnings);
    return r;
}

/// Writes a catalog entry in the file grammar; "-" puts the file in the report text.
inline Report cmd_emit(const std::string& key, const std::string& out_path) {
    const CatalogEntry e = builtin(key);
    const std::string text = emit_entry(e);
    if (out_path != "-") write_file(out_path, text);
    std::size_t bracket_lines = 0;
    for (char c : text) bracket_lines += c == '[';
    json input = report::header("emit");
    input["key"] = key;
    input["path"] = out_path;
    Report r;
    r.document = {{"input", input},
                  {"computed",
                   {{"kind", e.is_family() ? "family" : "algebra"},
                    {"dim", e.is_family() ? e.family().dim() : e.algebra().dim()},
                    {"bracket_lines", bracket_lines}}},
                  {"warnings", json::array()}};
    r.text = out_path == "-" ? text : "wrote " + key + " to " + out_path + "\n";
    return r;
}

} // namespace liecoh

#endif
