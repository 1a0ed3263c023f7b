#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "primeap/empirical.hpp"
#include "primeap/verifier.hpp"

using namespace primeap;
using Catch::Matchers::WithinAbs;

namespace {

inequality_def toy_parabola() {
    inequality_def def;
    def.id = "toy.parabola";
    def.domain = {{{"x", 2.0, 10.0, axis_scale::log_scale}}, 64, 64, 4};
    def.margin = [](std::span<const double> p) {
        const double t = std::log(p[0]) - 1.234;
        return t * t + 0.5;
    };
    return def;
}

}  // namespace

TEST_CASE("grid search finds the interior minimum of a smooth margin") {
    const auto rep = verify_inequality(toy_parabola());
    CHECK(rep.pass);
    CHECK_THAT(rep.min_margin, WithinAbs(0.5, 1e-9));
    CHECK_THAT(std::log(rep.argmin[0]), WithinAbs(1.234, 1e-6));
}

TEST_CASE("refinement never reports more than the coarse-grid minimum") {
    const auto def = toy_parabola();
    const auto rep = verify_inequality(def);
    double coarse = 1e300;
    for (int i = 0; i < def.domain.coarse_points_per_dim; ++i) {
        const double x = def.domain.dims[0].lo *
                         std::pow(def.domain.dims[0].hi / def.domain.dims[0].lo,
                                  static_cast<double>(i) /
                                      (def.domain.coarse_points_per_dim - 1));
        const double v = def.margin(std::vector<double>{x});
        coarse = std::min(coarse, v);
    }
    CHECK(rep.min_margin <= coarse);
}

TEST_CASE("reports are deterministic") {
    const auto a = verify_inequality("estForNegative.1");
    const auto b = verify_inequality("estForNegative.1");
    CHECK(a.min_margin == b.min_margin);
    CHECK(a.argmin == b.argmin);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("reports are bitwise identical for any thread count") {
    const auto& def = find_lemma("lemma0423loglog.1");
    const auto one = run_grid_search(def, def.domain, 1);
    const auto four = run_grid_search(def, def.domain, 4);
    CHECK(one.min_margin == four.min_margin);
    CHECK(one.argmin == four.argmin);
    CHECK(one.evaluations == four.evaluations);
}

TEST_CASE("search domain validation") {
    auto def = toy_parabola();
    def.domain.coarse_points_per_dim = 8;
    CHECK_THROWS_AS(verify_inequality(def), std::domain_error);
    def = toy_parabola();
    def.domain.dims[0].hi = def.domain.dims[0].lo;
    CHECK_THROWS_AS(verify_inequality(def), std::domain_error);
    CHECK_THROWS_AS(verify_inequality("not.a.lemma"), std::out_of_range);
}

TEST_CASE("registry contains every published inequality") {
    for (const char* id :
         {"lemma423log.1", "lemma0423loglog.1", "lemma0423.1", "lemma0432loglogDivlog.1",
          "lemmaasympt0.1", "psiInequalities.1", "psiInequalities.2", "psiInequalities.3",
          "estForNegative.1", "estForNegative.2", "estForNegative.3", "lemmaPiLowerSub.1",
          "lemmaPiLowerSub.2", "lemmaPiLowerWhole.1", "lemmaPiLowerWhole.2",
          "lemmaPiLowerWhole.3", "sumx.identity", "sumx.cap.odd", "sumx.cap.even",
          "lemmaLambdaSyt.1", "psiNonPrimitive.1", "L2tEst.1", "L2tEst.2"}) {
        CHECK_NOTHROW(find_lemma(id));
    }
}

TEST_CASE("tight lemmas pass with their known near-critical points") {
    const auto est = verify_inequality("estForNegative.1");
    CHECK(est.pass);
    // minimum near log x in [6.191, 6.192], margin about 0.0009
    CHECK(std::log(est.argmin[0]) > 6.19);
    CHECK(std::log(est.argmin[0]) < 6.193);
    CHECK(est.min_margin > 0.0005);
    CHECK(est.min_margin < 0.0015);

    const auto pow = verify_inequality("psiInequalities.1");
    CHECK(pow.pass);
    // worst point near (1/(4.778 * 0.077))^(1/0.077)
    const double xstar = std::pow(1.0 / (4.778 * 0.077), 1.0 / 0.077);
    CHECK(pow.argmin[0] > 0.9 * xstar);
    CHECK(pow.argmin[0] < 1.1 * xstar);
    CHECK(pow.min_margin > 0.0005);
    CHECK(pow.min_margin < 0.0015);
}

TEST_CASE("sumx identity margin sits at the tolerance") {
    const auto rep = verify_inequality("sumx.identity");
    CHECK(rep.pass);
    CHECK_THAT(rep.min_margin, WithinAbs(1e-10, 2e-11));
}

TEST_CASE("the falsified fixture fails") {
    const auto rep = verify_inequality(falsified_fixture());
    CHECK_FALSE(rep.pass);
    CHECK(rep.min_margin < 0.0);
}

TEST_CASE("custom domains narrow the sweep") {
    search_domain narrow{{{"x", 400.0, 600.0, axis_scale::log_scale}}, 64, 64, 4};
    const auto rep = verify_inequality("estForNegative.1", narrow);
    CHECK(rep.pass);
    CHECK(rep.argmin[0] > 400.0);
    CHECK(rep.argmin[0] < 600.0);
}

TEST_CASE("c1 range: the q = 6 carve-out is genuinely needed") {
    // at q = 6, x = 100 the extracted c1 drops below -log 6 but stays >= -2
    const double c1 = -lambda_gcd_sum(100.0, 6) / std::log(100.0);
    CHECK(c1 < -std::log(6.0));
    CHECK(c1 >= -2.0);
    CHECK(c1 <= 0.0);
}

TEST_CASE("small-x psi reports") {
    const auto reps = verify_small_x_psi();
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].pass);
    CHECK(reps[1].pass);
    // worst integer is n = 6 with a razor-thin margin
    CHECK_THAT(reps[0].argmin[0], WithinAbs(6.0, 1e-12));
    CHECK(reps[0].min_margin < 0.01);
    // the integer phase at n = 2: |psi(2) - 2| < (1/8pi) sqrt 2 log^2 2 + 1.6
    const double bound2 = std::sqrt(2.0) * std::pow(std::log(2.0), 2) /
                              (8 * std::numbers::pi) + 1.6;
    CHECK(std::abs(std::log(2.0) - 2.0) < bound2);
    CHECK_THAT(bound2, WithinAbs(1.627, 5e-4));
}

TEST_CASE("empirical bound sweep on a small domain") {
    const auto reps = verify_empirical_bounds(10, 1e5, 25);
    REQUIRE(reps.size() == 4);
    for (const auto& r : reps) {
        INFO(r.lemma_id);
        CHECK(r.pass);
        CHECK(r.min_margin > 0.0);
    }
    CHECK_THROWS_AS(verify_empirical_bounds(2, 1e5, 25), std::domain_error);
    CHECK_THROWS_AS(verify_empirical_bounds(10, 1e10, 25), std::domain_error);
}

TEST_CASE("reference constants reproduce") {
    const auto recs = reproduce_reference_constants();
    REQUIRE(recs.size() == 5);
    for (const auto& r : recs) {
        INFO(r.label << " computed " << r.computed << " reference " << r.reference);
        CHECK(r.pass);
    }
    // the two series values to five decimals
    CHECK_THAT(recs[0].computed, WithinAbs(1.30397, 5e-6));
    CHECK(recs[0].computed < 1.304);
    CHECK_THAT(recs[1].computed, WithinAbs(3.44556, 5e-6));
    CHECK(recs[1].computed < 3.446);
}

TEST_CASE("character identity suite on a reduced domain") {
    const auto reps = verify_character_identities(20, 2000.0);
    for (const auto& r : reps) {
        INFO(r.lemma_id << " min_margin " << r.min_margin);
        CHECK(r.pass);
    }
}
