// Exercises the shared library through its C surface only, including the
// golden files the CLI tests compare against (run from the tests directory).
#include "qsc/qsc.h"

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Result {
    qsc_status status = QSC_ERROR_INTERNAL;
    std::string text;
    std::string error;
};

template <class Fn>
Result run(Fn&& fn) {
    qsc_result* r = nullptr;
    Result out;
    out.status = fn(&r);
    if (r) {
        out.text = qsc_result_text(r);
        out.error = qsc_result_error(r);
        qsc_result_free(r);
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("version string") {
    CHECK(std::string(qsc_version()) == "1.0.0");
}

TEST_CASE("chow evaluation") {
    Result r = run([](qsc_result** out) {
        return qsc_chow_eval(5, "h^2 * h^3", QSC_FORMAT_TEXT, out);
    });
    CHECK(r.status == QSC_OK);
    CHECK(r.text.find("degree 2") != std::string::npos);
    Result bad = run([](qsc_result** out) {
        return qsc_chow_eval(5, "h +", QSC_FORMAT_TEXT, out);
    });
    CHECK(bad.status == QSC_ERROR_USAGE);
    CHECK_FALSE(bad.error.empty());
}

TEST_CASE("invariants endpoint") {
    Result r = run([](qsc_result** out) {
        return qsc_invariants("12", "10", "2", "2", QSC_FORMAT_JSON, out);
    });
    CHECK(r.status == QSC_OK);
    CHECK(r.text.find("\"K^3\": \"12\"") != std::string::npos);
    Result odd = run([](qsc_result** out) {
        return qsc_invariants("3", "0", "1", "1", QSC_FORMAT_TEXT, out);
    });
    CHECK(odd.status == QSC_ERROR_USAGE);
}

TEST_CASE("scroll solve endpoint and the singular degree") {
    Result r8 = run([](qsc_result** out) {
        return qsc_scroll_solve("8", QSC_FORMAT_TEXT, out);
    });
    CHECK(r8.status == QSC_OK);
    CHECK(r8.text.find("one-parameter family") != std::string::npos);
    Result r12 = run([](qsc_result** out) {
        return qsc_scroll_solve("12", QSC_FORMAT_JSON, out);
    });
    CHECK(r12.status == QSC_OK);
    CHECK(r12.text == slurp("golden/scroll_solve_12.json"));
}

TEST_CASE("fourfold scan endpoint") {
    Result r = run([](qsc_result** out) {
        return qsc_scroll_fourfold_scan(40, QSC_FORMAT_JSON, out);
    });
    CHECK(r.status == QSC_OK);
    CHECK(r.text.find("\"solvable_degrees\": [\n    4\n  ]") != std::string::npos);
}

TEST_CASE("cascade, exclusions, liaison") {
    CHECK(run([](qsc_result** out) { return qsc_bounds_cascade(QSC_FORMAT_MARKDOWN, out); })
              .status == QSC_OK);
    Result ex = run([](qsc_result** out) { return qsc_exclude_pairs(QSC_FORMAT_TEXT, out); });
    CHECK(ex.status == QSC_OK);
    CHECK(ex.text.find("survivors: 6 8 12") != std::string::npos);
    Result li = run([](qsc_result** out) { return qsc_liaison(QSC_FORMAT_JSON, out); });
    CHECK(li.status == QSC_OK);
    CHECK(li.text.find("\"all_ok\": true") != std::string::npos);
}

TEST_CASE("verify endpoints") {
    Result good = run([](qsc_result** out) {
        return qsc_verify_type("O", QSC_FORMAT_TEXT, out);
    });
    CHECK(good.status == QSC_OK);
    CHECK(good.text.find("all checks passed") != std::string::npos);
    Result unknown = run([](qsc_result** out) {
        return qsc_verify_type("J", QSC_FORMAT_TEXT, out);
    });
    CHECK(unknown.status == QSC_ERROR_USAGE);
    Result pres = run([](qsc_result** out) {
        return qsc_verify_presentation("Cv(-2) -> O^3", QSC_FORMAT_TEXT, out);
    });
    CHECK(pres.status == QSC_OK);
    CHECK(pres.text.find("d = 12") != std::string::npos);
    Result psi = run([](qsc_result** out) {
        return qsc_verify_presentation("Psi3 -> O^27", QSC_FORMAT_TEXT, out);
    });
    CHECK(psi.status == QSC_ERROR_UNSUPPORTED);
}

TEST_CASE("tables match their golden files") {
    Result scrolls = run([](qsc_result** out) {
        return qsc_table("scrolls", QSC_FORMAT_MARKDOWN, out);
    });
    CHECK(scrolls.status == QSC_OK);
    CHECK(scrolls.text == slurp("golden/table_scrolls.md"));
    Result d10 = run([](qsc_result** out) {
        return qsc_table("d10", QSC_FORMAT_MARKDOWN, out);
    });
    CHECK(d10.status == QSC_OK);
    CHECK(d10.text == slurp("golden/table_d10.md"));
    Result bad = run([](qsc_result** out) {
        return qsc_table("everything", QSC_FORMAT_TEXT, out);
    });
    CHECK(bad.status == QSC_ERROR_USAGE);
}

TEST_CASE("errata report is stable and complete") {
    Result r = run([](qsc_result** out) { return qsc_errata(QSC_FORMAT_JSON, out); });
    CHECK(r.status == QSC_OK);
    CHECK(r.text == slurp("golden/errata.json"));
    Result again = run([](qsc_result** out) { return qsc_errata(QSC_FORMAT_JSON, out); });
    CHECK(again.text == r.text);  // byte-deterministic
}
