#include "qsc/qsc.h"

#include "qsc/chern.hpp"
#include "qsc/chow_expr.hpp"
#include "qsc/report.hpp"

#include <new>
#include <string>

struct qsc_result {
    std::string text;
    std::string error;
};

namespace {

qsc_status fill(qsc_result** out, std::string text) {
    *out = new (std::nothrow) qsc_result{std::move(text), {}};
    return *out ? QSC_OK : QSC_ERROR_INTERNAL;
}

qsc_status fail(qsc_result** out, qsc_status st, const std::string& msg) {
    if (out)
        *out = new (std::nothrow) qsc_result{{}, msg};
    return st;
}

qsc::Format to_format(qsc_format f) {
    switch (f) {
        case QSC_FORMAT_JSON: return qsc::Format::Json;
        case QSC_FORMAT_MARKDOWN: return qsc::Format::Markdown;
        case QSC_FORMAT_CSV: return qsc::Format::Csv;
        default: return qsc::Format::Text;
    }
}

template <class Fn>
qsc_status guarded(qsc_result** out, Fn&& fn) {
    if (!out)
        return QSC_ERROR_USAGE;
    *out = nullptr;
    try {
        return fill(out, fn());
    } catch (const qsc::unsupported_error& e) {
        return fail(out, QSC_ERROR_UNSUPPORTED, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(out, QSC_ERROR_USAGE, e.what());
    } catch (const std::domain_error& e) {
        return fail(out, QSC_ERROR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(out, QSC_ERROR_INTERNAL, e.what());
    }
}

}  // namespace

extern "C" {

const char* qsc_result_text(const qsc_result* r) {
    return r ? r->text.c_str() : "";
}

const char* qsc_result_error(const qsc_result* r) {
    return r ? r->error.c_str() : "";
}

void qsc_result_free(qsc_result* r) {
    delete r;
}

const char* qsc_version(void) {
    return "1.0.0";
}

qsc_status qsc_chow_eval(int quadric_dim, const char* expr, qsc_format fmt,
                         qsc_result** out) {
    if (!expr)
        return fail(out, QSC_ERROR_USAGE, "expression is null");
    return guarded(out, [&] {
        qsc::ChowClass c = qsc::eval_chow_expr(quadric_dim, expr);
        std::string rendered = c.str();
        if (to_format(fmt) == qsc::Format::Json) {
            std::string deg = c.top_concentrated() ? c.degree().str() : "";
            std::string j = "{\n  \"class\": \"" + rendered + "\"";
            if (!deg.empty())
                j += ",\n  \"degree\": \"" + deg + "\"";
            j += "\n}\n";
            return j;
        }
        if (c.top_concentrated() && !c.is_zero())
            rendered += "   (degree " + c.degree().str() + ")";
        return rendered + "\n";
    });
}

qsc_status qsc_invariants(const char* d, const char* g, const char* chi_s,
                          const char* chi_x, qsc_format fmt, qsc_result** out) {
    if (!d || !g || !chi_s || !chi_x)
        return fail(out, QSC_ERROR_USAGE, "missing invariant argument");
    return guarded(out, [&] {
        qsc::InvariantRecord r(5, qsc::Rational::parse(d), qsc::Rational::parse(g),
                               qsc::Rational::parse(chi_s), qsc::Rational::parse(chi_x));
        return qsc::render_invariants(r, to_format(fmt));
    });
}

qsc_status qsc_scroll_solve(const char* d, qsc_format fmt, qsc_result** out) {
    if (!d)
        return fail(out, QSC_ERROR_USAGE, "degree is null");
    return guarded(out, [&] {
        return qsc::render_scroll_solution(qsc::Rational::parse(d), to_format(fmt));
    });
}

qsc_status qsc_scroll_fourfold_scan(int max_degree, qsc_format fmt, qsc_result** out) {
    return guarded(out, [&] {
        return qsc::render_fourfold_scan(qsc::fourfold_over_threefold_scan(max_degree),
                                         to_format(fmt));
    });
}

qsc_status qsc_bounds_cascade(qsc_format fmt, qsc_result** out) {
    return guarded(out, [&] { return qsc::render_cascade(qsc::degree_cascade(), to_format(fmt)); });
}

qsc_status qsc_exclude_pairs(qsc_format fmt, qsc_result** out) {
    return guarded(out, [&] {
        return qsc::render_exclusions(qsc::exclude_all_candidates(), to_format(fmt));
    });
}

qsc_status qsc_verify_type(const char* label, qsc_format fmt, qsc_result** out) {
    if (!out)
        return QSC_ERROR_USAGE;
    *out = nullptr;
    if (!label)
        return fail(out, QSC_ERROR_USAGE, "type label is null");
    try {
        qsc::VerifyReport r = qsc::verify_type(qsc::catalog_type(label));
        std::string text = qsc::render_verify(r, to_format(fmt));
        bool ok = r.ok();
        *out = new (std::nothrow) qsc_result{std::move(text),
                                             ok ? std::string() : "verification failed"};
        if (!*out)
            return QSC_ERROR_INTERNAL;
        return ok ? QSC_OK : QSC_ERROR_VERIFY;
    } catch (const std::invalid_argument& e) {
        return fail(out, QSC_ERROR_USAGE, e.what());
    } catch (const std::exception& e) {
        return fail(out, QSC_ERROR_INTERNAL, e.what());
    }
}

qsc_status qsc_verify_presentation(const char* presentation, qsc_format fmt,
                                   qsc_result** out) {
    if (!presentation)
        return fail(out, QSC_ERROR_USAGE, "presentation is null");
    return guarded(out, [&] {
        return qsc::render_presentation_check(presentation, to_format(fmt));
    });
}

qsc_status qsc_table(const char* scope, qsc_format fmt, qsc_result** out) {
    if (!scope)
        return fail(out, QSC_ERROR_USAGE, "scope is null");
    std::string s = scope;
    if (s != "d10" && s != "scrolls")
        return fail(out, QSC_ERROR_USAGE, "scope must be 'd10' or 'scrolls'");
    if (!out)
        return QSC_ERROR_USAGE;
    *out = nullptr;
    try {
        qsc::TableArtifact t = qsc::classification_table(
            s == "d10" ? qsc::TableScope::D10 : qsc::TableScope::Scrolls);
        std::string text = qsc::render_table(t, to_format(fmt));
        bool ok = t.all_verified();
        *out = new (std::nothrow) qsc_result{std::move(text),
                                             ok ? std::string() : "a table row failed"};
        if (!*out)
            return QSC_ERROR_INTERNAL;
        return ok ? QSC_OK : QSC_ERROR_VERIFY;
    } catch (const std::exception& e) {
        return fail(out, QSC_ERROR_INTERNAL, e.what());
    }
}

qsc_status qsc_liaison(qsc_format fmt, qsc_result** out) {
    return guarded(out, [&] { return qsc::render_liaison(to_format(fmt)); });
}

qsc_status qsc_errata(qsc_format fmt, qsc_result** out) {
    return guarded(out, [&] { return qsc::render_errata(qsc::errata_report(), to_format(fmt)); });
}

}  // extern "C"
