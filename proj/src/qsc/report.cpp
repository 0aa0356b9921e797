#include "qsc/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace qsc {

using ordered_json = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
    if (s == "text")
        return Format::Text;
    if (s == "json")
        return Format::Json;
    if (s == "markdown" || s == "md")
        return Format::Markdown;
    if (s == "csv")
        return Format::Csv;
    throw std::invalid_argument("unknown format '" + s + "'");
}

namespace {

std::string dump(const ordered_json& j) {
    return j.dump(2) + "\n";
}

std::string markdown_table(const std::vector<std::string>& headers,
                           const std::vector<std::vector<std::string>>& rows) {
    std::string out = "|";
    for (const auto& h : headers)
        out += " " + h + " |";
    out += "\n|";
    for (size_t i = 0; i < headers.size(); ++i)
        out += " --- |";
    out += "\n";
    for (const auto& row : rows) {
        out += "|";
        for (const auto& cell : row)
            out += " " + cell + " |";
        out += "\n";
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_table(const std::vector<std::string>& headers,
                      const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (size_t i = 0; i < headers.size(); ++i)
        out += (i ? "," : "") + csv_escape(headers[i]);
    out += "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            out += (i ? "," : "") + csv_escape(row[i]);
        out += "\n";
    }
    return out;
}

std::string text_table(const std::vector<std::string>& headers,
                       const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> w(headers.size());
    for (size_t i = 0; i < headers.size(); ++i)
        w[i] = headers[i].size();
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i)
            w[i] = std::max(w[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (size_t i = 0; i < cells.size(); ++i) {
            out += cells[i];
            if (i + 1 < cells.size())
                out += std::string(w[i] - cells[i].size() + 2, ' ');
        }
        out += "\n";
        return out;
    };
    std::string out = line(headers);
    for (const auto& row : rows)
        out += line(row);
    return out;
}

std::string tabular(const std::vector<std::string>& headers,
                    const std::vector<std::vector<std::string>>& rows, Format f) {
    switch (f) {
        case Format::Markdown: return markdown_table(headers, rows);
        case Format::Csv: return csv_table(headers, rows);
        default: return text_table(headers, rows);
    }
}

}  // namespace

namespace {

ordered_json catalog_entry_json(const TypeEntry& e) {
    ordered_json je;
    je["label"] = e.label;
    je["n"] = e.n;
    je["n_generic"] = e.n_generic;
    je["d"] = e.d;
    je["description"] = e.description;
    if (e.ci)
        je["ci_degrees"] = {(*e.ci)[0], (*e.ci)[1], (*e.ci)[2]};
    je["g"] = e.g.str();
    je["q"] = e.q.str();
    je["p_g"] = e.p_g.str();
    je["chi_S"] = e.chi_s.str();
    je["chi_X"] = e.chi_x.str();
    ordered_json jh;
    if (e.hilb.kind != HilbDim::Kind::Value)
        jh["formula"] = e.hilb.formula_ref();
    jh["value"] = e.hilb.value.str();
    je["hilbert_scheme"] = jh;
    je["structure"] = e.hilb_structure;
    ordered_json jp;
    jp["E"] = e.presentation_E;
    jp["F"] = e.presentation_F;
    je["presentation"] = jp;
    if (!e.surface_type.empty())
        je["surface_type"] = e.surface_type;
    if (!e.scroll_base.empty())
        je["scroll_base"] = e.scroll_base;
    if (!e.notes.empty())
        je["notes"] = e.notes;
    return je;
}

}  // namespace

std::string render_table(const TableArtifact& t, Format f) {
    if (f == Format::Json) {
        ordered_json j;
        j["schema_version"] = 1;
        j["headers"] = t.headers;
        ordered_json rows = ordered_json::array();
        ordered_json entries = ordered_json::array();
        for (size_t i = 0; i < t.rows.size(); ++i) {
            ordered_json row;
            for (size_t k = 0; k < t.headers.size(); ++k)
                row[t.headers[k]] = t.rows[i][k];
            rows.push_back(row);
            entries.push_back(catalog_entry_json(catalog_type(t.rows[i][0])));
        }
        j["rows"] = rows;
        j["catalog"] = entries;
        j["all_verified"] = t.all_verified();
        return dump(j);
    }
    return tabular(t.headers, t.rows, f);
}

namespace {

ordered_json scroll_vec_json(const ScrollSolution& s) {
    ordered_json j;
    for (size_t i = 0; i < 8; ++i)
        j[kScrollUnknownNames[i]] = s.v[i].str();
    return j;
}

ordered_json scroll_vec_json(const ScrollSolutionSym& s, const std::string& var) {
    ordered_json j;
    for (size_t i = 0; i < 8; ++i)
        j[kScrollUnknownNames[i]] = s.v[i].str(var);
    return j;
}

ordered_json scroll_matrix_json(const Rational& d) {
    Mat<Rational> m = surface_scroll_matrix(d);
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < 8; ++i) {
        ordered_json row = ordered_json::array();
        for (size_t j = 0; j < 8; ++j)
            row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

std::string scroll_matrix_text(const Rational& d) {
    Mat<Rational> m = surface_scroll_matrix(d);
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < 8; ++i) {
        std::vector<std::string> row;
        for (size_t j = 0; j < 8; ++j)
            row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    std::vector<std::string> headers(kScrollUnknownNames.begin(), kScrollUnknownNames.end());
    return text_table(headers, rows);
}

}  // namespace

std::string render_scroll_solution(const Rational& d, Format f) {
    if (d == Rational(8)) {
        ScrollSolutionSym fam = d8_family_sym();
        ScrollSolution at4 = d8_family(4);
        BaseClassification base = base_surface_classify(8);
        if (f == Format::Json) {
            ordered_json j;
            j["d"] = "8";
            j["matrix"] = scroll_matrix_json(Rational(8));
            j["determinant"] = "0";
            j["solution"] = "one-parameter family";
            j["family"] = scroll_vec_json(fam, "t");
            j["at_t_4"] = scroll_vec_json(at4);
            j["base"] = base.base_name;
            j["genus_at_t_4"] = base.g.str();
            return dump(j);
        }
        std::ostringstream os;
        os << "d = 8: det M = 0, solutions form a one-parameter family\n";
        os << scroll_matrix_text(Rational(8));
        for (size_t i = 0; i < 8; ++i)
            os << "  " << kScrollUnknownNames[i] << " = " << fam.v[i].str("t") << "\n";
        os << "at t = 4: deg e2 = " << at4.Le2().str() << ", g = " << base.g.str()
           << ", base " << base.base_name << "\n";
        return os.str();
    }

    ScrollSolution s = surface_scroll_solve(d);
    ScrollInvariants inv = scroll_invariants(d);
    Rational det = Rational(72) - Rational(9) * d;
    if (f == Format::Json) {
        ordered_json j;
        j["d"] = d.str();
        j["matrix"] = scroll_matrix_json(d);
        j["determinant"] = det.str();
        j["solution"] = scroll_vec_json(s);
        ordered_json ji;
        ji["g"] = inv.g.str();
        ji["chi"] = inv.chi.str();
        ji["e1^2"] = inv.e1_sq.str();
        ji["deg_e2"] = inv.e2_deg.str();
        ji["K_Y_coefficient"] = inv.ky_coeff.str();
        j["invariants"] = ji;
        if (d == Rational(6) || d == Rational(12))
            j["base"] = base_surface_classify(static_cast<int>(d.num())).base_name;
        return dump(j);
    }
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < 8; ++i)
        rows.push_back({kScrollUnknownNames[i], s.v[i].str()});
    std::ostringstream os;
    os << "d = " << d.str() << ", det M = " << det.str() << "\n";
    if (f == Format::Text)
        os << scroll_matrix_text(d);
    os << tabular({"monomial", "value"}, rows, f);
    os << "g = " << inv.g.str() << ", chi = " << inv.chi.str() << ", e1^2 = "
       << inv.e1_sq.str() << ", deg e2 = " << inv.e2_deg.str() << ", K_Y ~ ("
       << inv.ky_coeff.str() << ") e1\n";
    if (d == Rational(6) || d == Rational(12))
        os << "base surface: " << base_surface_classify(static_cast<int>(d.num())).base_name
           << "\n";
    return os.str();
}

std::string render_invariants(const InvariantRecord& r, Format f) {
    DerivedInvariants der = derived_invariants(r);
    RatPoly chi_x_t = hilbert_polynomial(r);
    RatPoly chi_i_t = ideal_hilbert_polynomial(r);
    Rational chi_n = chi_normal_bundle(r);
    if (f == Format::Json) {
        ordered_json j;
        j["d"] = r.d.str();
        j["g"] = r.g.str();
        j["chi_S"] = r.chi_s.str();
        j["chi_X"] = r.chi_x.str();
        ordered_json jd;
        jd["K.L^2"] = der.KL2.str();
        jd["K^2.L"] = der.K2L.str();
        jd["K^3"] = der.K3.str();
        jd["c2.L"] = der.c2L.str();
        jd["c3"] = der.c3.str();
        j["derived"] = jd;
        j["chi_O_X(t)"] = chi_x_t.str("t");
        j["chi_I_X(t)"] = chi_i_t.str("t");
        j["chi_normal_bundle"] = chi_n.str();
        return dump(j);
    }
    std::ostringstream os;
    os << "d = " << r.d.str() << ", g = " << r.g.str() << ", chi_S = " << r.chi_s.str()
       << ", chi_X = " << r.chi_x.str() << "\n"
       << "K.L^2 = " << der.KL2.str() << "\nK^2.L = " << der.K2L.str() << "\nK^3 = "
       << der.K3.str() << "\nc2.L = " << der.c2L.str() << "\nc3 = " << der.c3.str() << "\n"
       << "chi(O_X(t)) = " << chi_x_t.str("t") << "\n"
       << "chi(I_X(t)) = " << chi_i_t.str("t") << "\n"
       << "chi(N) = " << chi_n.str() << "\n";
    return os.str();
}

std::string render_fourfold_scan(const FourfoldScan& s, Format f) {
    if (f == Format::Json) {
        ordered_json j;
        j["dmax"] = s.dmax;
        j["generic_rank"] = static_cast<int>(s.generic_rank);
        j["unknowns"] = 17;
        j["equations"] = 20;
        j["solvable_degrees"] = s.solvable;
        if (s.d4_solution.kind != SolKind::Inconsistent) {
            ordered_json sol;
            for (size_t i = 0; i < 17; ++i)
                sol[kFourfoldUnknownNames[i]] = s.d4_solution.particular[i].str();
            j["d4_solution"] = sol;
            j["d4_solution_unique"] = s.d4_solution.kind == SolKind::Unique;
        }
        return dump(j);
    }
    std::ostringstream os;
    os << "twenty equations in seventeen unknowns; rank over Q(d) = " << s.generic_rank
       << "\n";
    os << "even degrees in [2, " << s.dmax << "] admitting a solution with L^4 = d:";
    for (int d : s.solvable)
        os << " " << d;
    os << "\n";
    if (s.d4_solution.kind == SolKind::Unique) {
        os << "d = 4 solution (unique):\n";
        for (size_t i = 0; i < 17; ++i)
            os << "  " << kFourfoldUnknownNames[i] << " = "
               << s.d4_solution.particular[i].str() << "\n";
    }
    return os.str();
}

std::string render_cascade(const CascadeTrace& t, Format f) {
    if (f == Format::Json) {
        ordered_json j;
        ordered_json steps = ordered_json::array();
        for (const auto& s : t.steps) {
            ordered_json js;
            js["label"] = s.label;
            js["rule"] = s.rule;
            if (!s.exact_bound.is_zero()) {
                js["exact_bound"] = s.exact_bound.str();
                js["degree_bound"] = s.degree_bound.str();
            }
            if (!s.note.empty())
                js["note"] = s.note;
            steps.push_back(js);
        }
        j["steps"] = steps;
        j["unconditional_bound"] = t.unconditional_bound.str();
        j["second_quadric_bound"] = t.second_quadric_bound.str();
        j["conclusion"] = t.conclusion;
        return dump(j);
    }
    std::ostringstream os;
    bool md = f == Format::Markdown;
    if (md)
        os << "## Degree cascade\n\n";
    for (const auto& s : t.steps) {
        os << (md ? "- **" : "") << s.label << (md ? "**: " : ": ") << s.rule;
        if (!s.exact_bound.is_zero())
            os << " => d <= " << s.exact_bound.str() << " (so d <= " << s.degree_bound.str()
               << ")";
        if (!s.note.empty())
            os << " [" << s.note << "]";
        os << "\n";
    }
    os << (md ? "\n**Conclusion**: " : "conclusion: ") << t.conclusion << "\n";
    return os.str();
}

std::string render_exclusions(const ExclusionReport& r, Format f) {
    if (f == Format::Json) {
        ordered_json j;
        ordered_json cases = ordered_json::array();
        for (const auto& c : r.cases) {
            ordered_json jc;
            jc["d"] = c.d;
            jc["g"] = c.g.str();
            ordered_json as = ordered_json::array();
            for (const auto& a : c.assumptions) {
                ordered_json ja;
                ja["s"] = a.s.str();
                ja["kind"] = a.kind;
                if (a.kind != "unique-quadric") {
                    ja["pi"] = a.pi.str();
                    ja["attains_bound"] = a.attains;
                }
                ja["justification"] = a.justification;
                as.push_back(ja);
            }
            jc["assumptions"] = as;
            jc["contradiction_at"] = c.contradiction_i.str();
            jc["h_C_lower_bound"] = c.hC_lower.str();
            jc["h0_O_C"] = c.h0_value.str();
            if (c.printed_hc != 0) {
                jc["quoted_count"] = c.printed_hc.str();
                jc["recomputed_count"] = c.computed_hc.str();
            }
            jc["argument"] = c.argument;
            jc["excluded"] = c.excluded;
            cases.push_back(jc);
        }
        j["cases"] = cases;
        j["survivors"] = r.survivors;
        return dump(j);
    }
    std::ostringstream os;
    bool md = f == Format::Markdown;
    for (const auto& c : r.cases) {
        if (md)
            os << "## (" << c.d << ", " << c.g.str() << ")\n\n";
        else
            os << "case (" << c.d << ", " << c.g.str() << "):\n";
        for (const auto& a : c.assumptions)
            os << (md ? "- " : "  assumption: ") << "degree " << a.s.str() << " ("
               << a.kind << "): " << a.justification << "\n";
        os << (md ? "- **contradiction**: " : "  contradiction: ") << c.argument << " (h_C >= "
           << c.hC_lower.str() << " vs h^0 = " << c.h0_value.str() << " at twist "
           << c.contradiction_i.str() << ")\n";
        if (md)
            os << "\n";
    }
    os << "survivors:";
    for (int d : r.survivors)
        os << " " << d;
    os << "\n";
    return os.str();
}

std::string render_errata(const std::vector<ErrataEntry>& entries, Format f) {
    if (f == Format::Json) {
        ordered_json j = ordered_json::array();
        for (const auto& e : entries) {
            ordered_json je;
            je["id"] = e.id;
            je["location"] = e.location;
            je["printed_form"] = e.printed_form;
            je["corrected_form"] = e.corrected_form;
            je["evidence"] = e.evidence;
            j.push_back(je);
        }
        return dump(j);
    }
    std::ostringstream os;
    bool md = f == Format::Markdown;
    for (const auto& e : entries) {
        if (md)
            os << "## " << e.id << "\n\n";
        else
            os << e.id << "\n";
        os << (md ? "- **where**: " : "  where: ") << e.location << "\n";
        os << (md ? "- **printed**: " : "  printed: ") << e.printed_form << "\n";
        os << (md ? "- **corrected**: " : "  corrected: ") << e.corrected_form << "\n";
        for (const auto& ev : e.evidence)
            os << (md ? "- evidence: " : "  evidence: ") << ev << "\n";
        if (md)
            os << "\n";
    }
    return os.str();
}

std::string render_verify(const VerifyReport& r, Format f) {
    if (f == Format::Json) {
        ordered_json j;
        j["type"] = r.label;
        ordered_json checks = ordered_json::array();
        for (const auto& c : r.checks) {
            ordered_json jc;
            jc["check"] = c.name;
            jc["ok"] = c.ok;
            jc["detail"] = c.detail;
            checks.push_back(jc);
        }
        j["checks"] = checks;
        j["ok"] = r.ok();
        if (r.label == "O") {
            TypeOConstraints oc = typeO_constraints();
            ordered_json jo;
            jo["chi_I_X(t)"] = oc.ideal_chi.str("t");
            jo["chi_S(t)"] = oc.chi_spinor.str("t");
            jo["chi_S|X(t)"] = oc.chi_spinor_restricted.str("t");
            jo["beta_relations"] = {oc.beta02_minus_beta12.str(),
                                    oc.beta03_minus_beta13.str()};
            jo["beta_dichotomy"] = oc.beta_dichotomy;
            jo["monads"] = {oc.monad_ii2, oc.monad_i3};
            jo["resolution"] = oc.resolution;
            jo["self_checks"] = oc.self_checks;
            jo["self_checks_ok"] = oc.self_checks_ok;
            j["typeO_constraints"] = jo;
        }
        return dump(j);
    }
    std::ostringstream os;
    os << "type " << r.label << "\n";
    for (const auto& c : r.checks)
        os << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
    if (r.label == "O") {
        TypeOConstraints oc = typeO_constraints();
        os << "  chi(I_X(t)) = " << oc.ideal_chi.str("t") << "\n";
        os << "  chi(S(t)) = " << oc.chi_spinor.str("t") << "\n";
        os << "  chi(S|X(t)) = " << oc.chi_spinor_restricted.str("t") << "\n";
        for (const auto& s : oc.self_checks)
            os << "  " << s << "\n";
    }
    os << (r.ok() ? "all checks passed" : "verification FAILED") << "\n";
    return os.str();
}

std::string render_presentation_check(const std::string& spec, Format f) {
    auto arrow = spec.find("->");
    if (arrow == std::string::npos)
        throw std::invalid_argument("presentation must be written as 'E -> F'");
    BundleSpec E = BundleSpec::parse(spec.substr(0, arrow));
    BundleSpec F = BundleSpec::parse(spec.substr(arrow + 2));
    IdealChern ideal = ideal_chern_from_resolution(E, F, 5);
    GammaInvariants gi = gamma_invert(ideal.series, ideal.twist_l);
    auto gammas = ideal_gammas(ideal.series);
    if (f == Format::Json) {
        ordered_json j;
        j["E"] = E.str();
        j["F"] = F.str();
        j["twist"] = ideal.twist_l;
        ordered_json g = ordered_json::array();
        for (const auto& v : gammas)
            g.push_back(v.str());
        j["gamma"] = g;
        j["d"] = gi.d.str();
        j["K.L^2"] = gi.KL2.str();
        j["K^2.L"] = gi.K2L.str();
        j["K^3"] = gi.K3.str();
        return dump(j);
    }
    std::ostringstream os;
    os << "0 -> " << E.str() << " -> " << F.str() << " -> I_X(" << ideal.twist_l
       << ") -> 0\n";
    os << "gamma =";
    for (const auto& v : gammas)
        os << " " << v.str();
    os << "\nd = " << gi.d.str() << ", K.L^2 = " << gi.KL2.str() << ", K^2.L = "
       << gi.K2L.str() << ", K^3 = " << gi.K3.str() << "\n";
    return os.str();
}

std::string render_liaison(Format f) {
    std::vector<std::vector<std::string>> rows;
    bool all_ok = true;
    for (const auto& link : liaison_links()) {
        LiaisonCheck c = liaison_check(link);
        all_ok = all_ok && c.ok;
        rows.push_back({c.link.source,
                        "(" + std::to_string(c.link.a) + "," + std::to_string(c.link.b) + ")",
                        c.link.target, c.d_target.str(), c.g_target.str(),
                        c.ok ? "ok" : "FAIL"});
    }
    if (f == Format::Json) {
        ordered_json j;
        ordered_json links = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json jl;
            jl["source"] = row[0];
            jl["ci_type"] = row[1];
            jl["target"] = row[2];
            jl["d_target"] = row[3];
            jl["g_target"] = row[4];
            jl["ok"] = row[5] == "ok";
            links.push_back(jl);
        }
        j["links"] = links;
        j["all_ok"] = all_ok;
        return dump(j);
    }
    return tabular({"source", "(a,b)", "target", "d'", "g'", "status"}, rows, f);
}

}  // namespace qsc
