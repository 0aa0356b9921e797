// Command-line front end. Everything goes through the shared library's C
// interface; exit code 0 on success, 1 on verification failure, 2 on usage
// errors.
#include "qsc/qsc.h"

#include <CLI11.hpp>

#include <cstdio>
#include <string>

namespace {

int emit(qsc_status st, qsc_result* r) {
    if (r) {
        const char* text = qsc_result_text(r);
        if (text && *text)
            std::fputs(text, stdout);
        const char* err = qsc_result_error(r);
        if (err && *err)
            std::fprintf(stderr, "error: %s\n", err);
        qsc_result_free(r);
    }
    switch (st) {
        case QSC_OK: return 0;
        case QSC_ERROR_USAGE: return 2;
        default: return 1;
    }
}

qsc_format to_format(const std::string& s) {
    if (s == "json")
        return QSC_FORMAT_JSON;
    if (s == "markdown" || s == "md")
        return QSC_FORMAT_MARKDOWN;
    if (s == "csv")
        return QSC_FORMAT_CSV;
    return QSC_FORMAT_TEXT;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification engine for codimension-two subvarieties of "
                 "smooth quadrics"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", qsc_version());

    std::string format = "text";
    app.add_option("--format", format, "output format: text, json, markdown, csv")
        ->check(CLI::IsMember({"text", "json", "markdown", "md", "csv"}));
    bool with_errata = false;
    app.add_flag("--errata", with_errata, "append the repaired-formula report");

    // chow
    auto* chow = app.add_subcommand("chow", "evaluate a cohomology-ring expression");
    int chow_n = 5;
    std::string chow_expr;
    chow->add_option("-n,--dim", chow_n, "quadric dimension")->capture_default_str();
    chow->add_option("expr", chow_expr, "expression in h, L, L1, L2")->required();

    // invariants
    auto* inv = app.add_subcommand("invariants",
                                   "derived invariants of a threefold on Q^5");
    std::string inv_d, inv_g, inv_chis, inv_chix;
    inv->add_option("d", inv_d)->required();
    inv->add_option("g", inv_g)->required();
    inv->add_option("chiS", inv_chis)->required();
    inv->add_option("chiX", inv_chix)->required();

    // scroll solve / scroll fourfold-scan
    auto* scroll = app.add_subcommand("scroll", "surface-scroll and fourfold systems");
    scroll->require_subcommand(1);
    auto* solve = scroll->add_subcommand("solve", "solve the 8x8 surface-scroll system");
    std::string solve_d;
    solve->add_option("d", solve_d, "degree (rational; 8 reports the family)")->required();
    auto* ffs = scroll->add_subcommand("fourfold-scan",
                                       "scan the 20x17 fourfold-over-threefold system");
    int ffs_dmax = 100;
    ffs->add_option("--dmax", ffs_dmax, "largest even degree scanned")
        ->capture_default_str();

    // bounds cascade
    auto* bounds = app.add_subcommand("bounds", "genus bounds");
    bounds->require_subcommand(1);
    bounds->add_subcommand("cascade", "trace the scroll degree descent");

    // exclude pairs
    auto* exclude = app.add_subcommand("exclude", "candidate elimination");
    exclude->require_subcommand(1);
    exclude->add_subcommand("pairs", "eliminate the degree > 12 candidate pairs");

    // verify type / verify presentation
    auto* verify = app.add_subcommand("verify", "verification");
    verify->require_subcommand(1);
    auto* vtype = verify->add_subcommand("type", "verify one catalog row");
    std::string vtype_label;
    vtype->add_option("label", vtype_label, "catalog label A..O")->required();
    auto* vpres = verify->add_subcommand("presentation", "check a resolution E -> F");
    std::string vpres_spec;
    vpres->add_option("spec", vpres_spec, "e.g. \"Cv(-2) -> O^3\"")->required();

    // table
    auto* table = app.add_subcommand("table", "emit a classification table");
    std::string table_scope;
    table->add_option("scope", table_scope, "d10 or scrolls")
        ->required()
        ->check(CLI::IsMember({"d10", "scrolls"}));

    // liaison
    auto* liaison = app.add_subcommand("liaison", "check the residuation table");

    // errata
    auto* errata = app.add_subcommand("errata", "repaired-formula report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    qsc_format fmt = to_format(format);
    qsc_result* r = nullptr;

    qsc_status st = QSC_ERROR_USAGE;
    if (chow->parsed())
        st = qsc_chow_eval(chow_n, chow_expr.c_str(), fmt, &r);
    else if (inv->parsed())
        st = qsc_invariants(inv_d.c_str(), inv_g.c_str(), inv_chis.c_str(),
                            inv_chix.c_str(), fmt, &r);
    else if (scroll->parsed())
        st = solve->parsed() ? qsc_scroll_solve(solve_d.c_str(), fmt, &r)
                             : qsc_scroll_fourfold_scan(ffs_dmax, fmt, &r);
    else if (bounds->parsed())
        st = qsc_bounds_cascade(fmt, &r);
    else if (exclude->parsed())
        st = qsc_exclude_pairs(fmt, &r);
    else if (verify->parsed())
        st = vtype->parsed() ? qsc_verify_type(vtype_label.c_str(), fmt, &r)
                             : qsc_verify_presentation(vpres_spec.c_str(), fmt, &r);
    else if (table->parsed())
        st = qsc_table(table_scope.c_str(), fmt, &r);
    else if (liaison->parsed())
        st = qsc_liaison(fmt, &r);
    else if (errata->parsed())
        st = qsc_errata(fmt, &r);
    int code = emit(st, r);
    if (with_errata && !errata->parsed() && code == 0) {
        qsc_result* er = nullptr;
        qsc_status est = qsc_errata(fmt, &er);
        code = emit(est, er);
    }
    return code;
}
