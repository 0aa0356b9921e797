#include "qsc/classify.hpp"

#include "qsc/chern.hpp"
#include "qsc/errata.hpp"

#include <doctest.h>

#include <set>

using namespace qsc;

TEST_CASE("catalog shape") {
    const auto& cat = catalog();
    CHECK(cat.size() == 13);  // A..N without J, K, plus O
    std::set<std::string> labels;
    for (const auto& e : cat)
        labels.insert(e.label);
    for (const char* l : {"A", "B", "C", "D", "E", "F", "G", "H", "I", "L", "M", "N", "O"})
        CHECK(labels.count(l) == 1);
    CHECK_THROWS_AS(catalog_type("J"), std::invalid_argument);
}

TEST_CASE("every catalog row verifies") {
    for (const auto& e : catalog()) {
        VerifyReport r = verify_type(e);
        INFO(e.label);
        for (const auto& c : r.checks) {
            INFO(c.name << ": " << c.detail);
            CHECK(c.ok);
        }
        CHECK(r.ok());
    }
}

TEST_CASE("selected row facts") {
    CHECK(catalog_type("L").hilb.value == 35);
    CHECK(catalog_type("F").hilb.value == 20);
    CHECK(catalog_type("G").hilb.value == 30);
    CHECK(catalog_type("N").hilb.value == 60);
    CHECK(catalog_type("C").hilb.value == 15);
    CHECK(catalog_type("D").hilb.value == 15);
    CHECK(catalog_type("H").g == 9);
    CHECK(catalog_type("H").p_g == 5);
    CHECK(catalog_type("H").hilb.formula_ref() == "P(n;1,4)");
    CHECK(catalog_type("C").n == 6);
    CHECK(catalog_type("O").d == 12);
    CHECK(catalog_type("O").hilb_structure.find("unknown") != std::string::npos);
}

TEST_CASE("gamma inversion of the line-bundle presentations returns each degree") {
    const std::pair<const char*, int> rows[] = {
        {"A", 2}, {"E", 6}, {"H", 8}, {"I", 8}, {"M", 10}, {"B", 4}, {"G", 6}, {"N", 10},
        {"F", 6}, {"O", 12}, {"D", 4},
    };
    for (const auto& [label, d] : rows) {
        const TypeEntry& e = catalog_type(label);
        IdealChern ideal = ideal_chern_from_resolution(BundleSpec::parse(e.presentation_E),
                                                       BundleSpec::parse(e.presentation_F), 5);
        CHECK(gamma_invert(ideal.series, ideal.twist_l).d == Rational(d));
    }
}

TEST_CASE("liaison table closes with the stated degree and genus relations") {
    const auto& links = liaison_links();
    CHECK(links.size() == 17);
    for (const auto& l : links) {
        LiaisonCheck c = liaison_check(l);
        INFO(l.source << " (" << l.a << "," << l.b << ") " << l.target);
        CHECK(c.ok);
    }
}

TEST_CASE("specific liaison arithmetic") {
    LiaisonCheck an = liaison_check({"A", 2, 3, "N"});
    CHECK(an.d_target == Rational(10));
    CHECK(an.g_target == Rational(8));
    CHECK(an.ok);
    LiaisonCheck in = liaison_check({"I", 3, 3, "N"});
    CHECK(in.d_target == Rational(10));
    CHECK(in.ok);
    LiaisonCheck fo = liaison_check({"F", 3, 3, "O"});
    CHECK(fo.d_target == Rational(12));
    CHECK(fo.g_target == Rational(10));
    CHECK(fo.ok);
    // A wrong target fails.
    CHECK_FALSE(liaison_check({"A", 1, 3, "E"}).ok);
}

TEST_CASE("classification tables") {
    TableArtifact d10 = classification_table(TableScope::D10);
    CHECK(d10.rows.size() == 12);
    CHECK(d10.all_verified());
    TableArtifact scrolls = classification_table(TableScope::Scrolls);
    REQUIRE(scrolls.rows.size() == 5);
    const std::tuple<const char*, const char*, const char*> expect[] = {
        {"C", "6", "4"}, {"D", "5", "4"}, {"F", "5", "6"}, {"L", "5", "8"}, {"O", "5", "12"},
    };
    for (size_t i = 0; i < 5; ++i) {
        CHECK(scrolls.rows[i][0] == std::get<0>(expect[i]));
        CHECK(scrolls.rows[i][1] == std::get<1>(expect[i]));
        CHECK(scrolls.rows[i][2] == std::get<2>(expect[i]));
    }
    CHECK(scrolls.all_verified());
}

TEST_CASE("complete-intersection rows agree with both genus routes") {
    for (const auto& e : catalog()) {
        if (!e.ci)
            continue;
        auto [a, b, c] = *e.ci;
        CHECK(ci_sectional_genus(a, b, c) == e.g);
        CHECK(e.chi_s == Rational(1) - Rational(e.q) + Rational(e.p_g));
    }
}

TEST_CASE("repaired-formula report carries the five pinned entries") {
    auto entries = errata_report();
    REQUIRE(entries.size() == 5);
    const char* ids[] = {"k3-closed-form", "hilbert-t2-coefficient", "spinor-c4",
                         "ruling-pairing", "hilbert-function-counts"};
    for (size_t i = 0; i < 5; ++i) {
        CHECK(entries[i].id == ids[i]);
        CHECK_FALSE(entries[i].printed_form.empty());
        CHECK_FALSE(entries[i].corrected_form.empty());
        CHECK_FALSE(entries[i].evidence.empty());
    }
}

TEST_CASE("auxiliary constraints of the K3 scroll") {
    TypeOConstraints c = typeO_constraints();
    CHECK(c.self_checks_ok);
    CHECK(c.beta02_minus_beta12 == Rational(0));
    CHECK(c.beta03_minus_beta13 == Rational(3));
    CHECK(c.chi_spinor.eval(Rational(0)).is_zero());
    CHECK(c.chi_spinor.eval(Rational(1)) == Rational(8));  // (1/15) 1*2*3*4*5
    CHECK(c.chi_spinor_restricted.eval(Rational(1)) == Rational(9));
    CHECK(c.chi_spinor_restricted.coeff(3) == Rational(8));
    CHECK(c.sigma4_minus_sigma3 == Rational(7));
    CHECK(c.psi3_rank == 26);
    CHECK(c.beta13_max == 21);
    CHECK(c.resolution.find("S^7") != std::string::npos);
}
