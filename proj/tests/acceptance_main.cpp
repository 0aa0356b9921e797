// End-to-end acceptance suite: one line per criterion, all arithmetic exact.
#include "qsc/bounds.hpp"
#include "qsc/chern.hpp"
#include "qsc/classify.hpp"
#include "qsc/errata.hpp"
#include "qsc/hilbfn.hpp"
#include "qsc/invariants.hpp"
#include "qsc/scrolls.hpp"

#include "properties.hpp"

#include <cstdio>
#include <functional>
#include <string>

using namespace qsc;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("[%s] %2d. %s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                note.c_str());
    if (!ok)
        ++failures;
}

}  // namespace

int main() {
    criterion(1, "symbolic determinant of the surface-scroll matrix is 72 - 9d", [] {
        RatPoly det = surface_scroll_det_sym();
        return det == RatPoly::from_coeffs({Rational(72), Rational(-9)});
    });

    criterion(2, "surface-scroll solution matches the closed form; d = 12 gives "
                 "e1^2 = 18, e2 = 6, g = 10, chi = 2",
              [] {
                  auto sol = solve_linear(surface_scroll_matrix_sym(),
                                          surface_scroll_rhs_sym());
                  if (sol.kind != SolKind::Unique)
                      return false;
                  ScrollSolutionSym closed = surface_scroll_solution_sym();
                  for (size_t i = 0; i < 8; ++i)
                      if (!sol.particular[i].is_polynomial() ||
                          !(sol.particular[i].as_polynomial() == closed.v[i]))
                          return false;
                  ScrollInvariants inv = scroll_invariants(Rational(12));
                  return inv.e1_sq == Rational(18) && inv.e2_deg == Rational(6) &&
                         inv.g == Rational(10) && inv.chi == Rational(2);
              });

    criterion(3, "derived invariants (12,10,2,2) = (-6,-6,12,24); K^3 erratum carries "
                 "both oracles",
              [] {
                  DerivedInvariants d = derived_invariants(InvariantRecord(5, 12, 10, 2, 2));
                  if (!(d.KL2 == Rational(-6) && d.K2L == Rational(-6) &&
                        d.K3 == Rational(12) && d.c2L == Rational(24)))
                      return false;
                  if (!(derived_invariants(InvariantRecord(5, 6, 1, 1, 1)).K3 ==
                        Rational(-48)))
                      return false;
                  for (const auto& e : errata_report())
                      if (e.id == "k3-closed-form") {
                          bool f_oracle = false, o_oracle = false;
                          for (const auto& ev : e.evidence) {
                              f_oracle = f_oracle ||
                                         ev.find("-48") != std::string::npos;
                              o_oracle = o_oracle ||
                                         ev.find("K^3 = 12") != std::string::npos;
                          }
                          return f_oracle && o_oracle;
                      }
                  return false;
              });

    criterion(4, "ideal Hilbert polynomial of the degree-12 scroll is the stated "
                 "quintic with roots -1, 1, 2 and value 3 at t = 3",
              [] {
                  RatPoly chi = ideal_hilbert_polynomial(InvariantRecord(5, 12, 10, 2, 2));
                  RatPoly expect = RatPoly::from_coeffs(
                      {Rational(-1), Rational(59, 60), Rational(19, 24), Rational(-1),
                       Rational(5, 24), Rational(1, 60)});
                  return chi == expect && chi.eval(Rational(-1)).is_zero() &&
                         chi.eval(Rational(1)).is_zero() && chi.eval(Rational(2)).is_zero() &&
                         chi.eval(Rational(3)) == Rational(3);
              });

    criterion(5, "normal-bundle dimensions 15 (C/D), 20 (F), 30 (G), 35 (L), 60 (N)", [] {
        return chi_normal_bundle(Rational(4), Rational(0), Rational(1)) == Rational(15) &&
               chi_normal_bundle(Rational(6), Rational(1), Rational(1)) == Rational(20) &&
               chi_normal_bundle(Rational(6), Rational(2), Rational(1)) == Rational(30) &&
               chi_normal_bundle(Rational(8), Rational(4), Rational(1)) == Rational(35) &&
               chi_normal_bundle(Rational(10), Rational(8), Rational(3)) == Rational(60);
    });

    criterion(6, "exclusion eliminates exactly (18,28) (24,55) (30,91) (36,136) (42,190) "
                 "with the recomputed counts, leaving {6, 8, 12}",
              [] {
                  ExclusionReport r = exclude_all_candidates();
                  if (r.cases.size() != 5 || !(r.survivors == std::vector<int>{6, 8, 12}))
                      return false;
                  const std::pair<int, Int> expect[] = {
                      {18, 28}, {24, 55}, {30, 91}, {36, 136}, {42, 190}};
                  for (size_t i = 0; i < 5; ++i)
                      if (r.cases[i].d != expect[i].first || r.cases[i].g != expect[i].second ||
                          !r.cases[i].excluded)
                          return false;
                  return r.cases[2].computed_hc == 204 && r.cases[2].printed_hc == 140 &&
                         r.cases[3].computed_hc == 285 && r.cases[3].printed_hc == 289;
              });

    criterion(7, "the dualized-Cayley resolution gives 1 + 3h + 6h^2 + 9h^3 + 9h^4 and "
                 "degree 12",
              [] {
                  IdealChern ideal = ideal_chern_from_resolution(
                      BundleSpec::parse("Cv(-2)"), BundleSpec::parse("O^3"), 5);
                  auto g = ideal_gammas(ideal.series);
                  if (!(g[0] == Rational(3) && g[1] == Rational(6) && g[2] == Rational(9) &&
                        g[3] == Rational(9) && g[4] == Rational(0)))
                      return false;
                  return gamma_invert(ideal.series, 3).d == Rational(12);
              });

    criterion(8, "degeneracy class on Q^6 has degree 0 under the parity pairing and 4 "
                 "under the forced Kronecker pairing",
              [] {
                  ChernSeries sp = catalog(6, CatalogBundle::SpinorPrime, 1);
                  return porteous_d1(sp, 3, 4, 1).degree().is_zero() &&
                         porteous_d1(sp, 3, 4, 1, MiddlePairing::Kronecker).degree() ==
                             Rational(4);
              });

    criterion(9, "the fourfold-over-threefold system is solvable only at d = 4 among "
                 "even degrees up to 100",
              [] {
                  FourfoldScan scan = fourfold_over_threefold_scan(100);
                  return scan.solvable == std::vector<int>{4} && scan.generic_rank == 17;
              });

    criterion(10, "all 17 residuation links (16 table entries plus the Cayley cubic "
                  "link) pass the degree and genus checks",
              [] {
                  const auto& links = liaison_links();
                  if (links.size() != 17)
                      return false;
                  for (const auto& l : links)
                      if (!liaison_check(l).ok)
                          return false;
                  return true;
              });

    criterion(11, "the d = 8 family at t = 4 has deg e2 = 10 and g = 4; fiber cuts give "
                  "4 over curves and 8 for the fourfold",
              [] {
                  ScrollSolution f = d8_family(Rational(4));
                  Rational g = Rational(1) + (f.Le1sq() - f.Le1y1()) / Rational(2);
                  return f.Le2() == Rational(10) && g == Rational(4) &&
                         fiber_cut_degree(FiberCase::ThreefoldOverCurve, 5) == Rational(4) &&
                         fiber_cut_degree(FiberCase::ThreefoldOverCurve, 6) == Rational(4) &&
                         fiber_cut_degree(FiberCase::FourfoldOverSurface, 6) == Rational(8);
              });

    criterion(12, "property suites: ring laws, Whitney, twist composition, tautological "
                  "residuals, branch continuity, Hilbert complementarity",
              [] {
                  int bad = 0;
                  bad += props::chow_ring_properties(0xAC01, 20);
                  bad += props::whitney_properties(0xAC02, 10);
                  bad += props::twist_composition(0xAC03, 15);
                  bad += props::tautological_residuals(0xAC04, 20);
                  bad += props::pi_branch_continuity(12);
                  bad += props::hilbert_complementarity(0xAC05, 25);
                  bad += props::linear_algebra_properties(0xAC06, 30);
                  bad += props::poly_eval_homomorphism(0xAC07, 40);
                  return bad == 0;
              });

    if (failures == 0)
        std::printf("acceptance: all 12 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
