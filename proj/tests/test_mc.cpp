#include <cmath>

#include "doctest.h"
#include "quatdom/mc.hpp"
#include "quatdom/oracles.hpp"
#include "quatdom/rng.hpp"

using namespace quatdom;

namespace {

bool within_sigmas(double estimate, double target, double se, double k) {
    return std::abs(estimate - target) <= k * se;
}

}  // namespace

TEST_CASE("counter-based streams are stateless and index-keyed") {
    const Philox a(42), b(42), c(43);
    double ua[4], ub[4], uc[4];
    sample_uniforms(a, 1000, ua, 4);
    sample_uniforms(b, 1000, ub, 4);
    sample_uniforms(c, 1000, uc, 4);
    for (int t = 0; t < 4; ++t) {
        CHECK(ua[t] == ub[t]);
        CHECK(ua[t] >= 0.0);
        CHECK(ua[t] < 1.0);
    }
    CHECK(ua[0] != uc[0]);

    // uniformity smoke check: mean of many draws near 1/2
    double sum = 0.0;
    double buf[8];
    for (std::uint64_t i = 0; i < 20000; ++i) {
        sample_uniforms(a, i, buf, 8);
        for (double v : buf) sum += v;
    }
    const double mean = sum / (20000.0 * 8.0);
    CHECK(std::abs(mean - 0.5) < 0.002);
}

TEST_CASE("volume estimates are bit-identical for identical inputs") {
    const DomainSpec spec = DomainSpec::make(DomainKind::RI, 1, 1);
    const MCEstimate a = mc_volume(spec, 200000, 42, 2);
    const MCEstimate b = mc_volume(spec, 200000, 42, 2);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(a.n_accepted == b.n_accepted);
}

TEST_CASE("volume estimates are worker-invariant in distribution and in value") {
    const DomainSpec spec = DomainSpec::make(DomainKind::RI, 1, 1);
    const MCEstimate w1 = mc_volume(spec, 400000, 7, 1);
    const MCEstimate w4 = mc_volume(spec, 400000, 7, 4);
    // acceptance counting is exactly partition-independent
    CHECK(w1.mean == w4.mean);
    CHECK(w1.n_accepted == w4.n_accepted);

    // weighted sums regroup across workers: statistical agreement only
    FormulaFamily fam{FamilyTag::J_rect, 1, 1, Rational(1), Rational(0)};
    const MCEstimate i1 = mc_integral(fam, 400000, 7, 1);
    const MCEstimate i4 = mc_integral(fam, 400000, 7, 4);
    CHECK(within_sigmas(i1.mean, i4.mean, std::hypot(i1.std_error, i4.std_error), 3.0));
    const MCEstimate i1b = mc_integral(fam, 400000, 7, 1);
    CHECK(i1.mean == i1b.mean);
}

TEST_CASE("the 1-D interval accepts the whole box") {
    const MCEstimate est = mc_volume(DomainSpec::make(DomainKind::RII, 1, 1), 1000000, 42, 2);
    CHECK(est.mean == 2.0);
    CHECK(est.n_accepted == est.n_samples);
    CHECK(est.std_error == 0.0);
}

TEST_CASE("volume of the scalar first domain converges to pi^2/2") {
    const MCEstimate est = mc_volume(DomainSpec::make(DomainKind::RI, 1, 1), 400000, 11, 2);
    const double target = vol_RI(1, 1).to_double();
    CHECK(within_sigmas(est.mean, target, est.std_error, 3.5));
}

TEST_CASE("weighted integral converges: J(1,1,1) = pi^2/6") {
    FormulaFamily fam{FamilyTag::J_rect, 1, 1, Rational(1), Rational(0)};
    const MCEstimate est = mc_integral(fam, 400000, 13, 2);
    CHECK(within_sigmas(est.mean, M_PI * M_PI / 6.0, est.std_error, 3.5));
}

TEST_CASE("lambda = 0 weighted integral matches the plain volume run") {
    FormulaFamily fam{FamilyTag::J_sym, 1, 1, Rational(0), Rational(0)};
    const MCEstimate vol = mc_volume(DomainSpec::make(DomainKind::Sym, 1, 1), 100000, 3, 1);
    const MCEstimate integ = mc_integral(fam, 100000, 3, 1);
    CHECK(vol.mean == integ.mean);  // indicator weight, same samples
    CHECK(vol.n_accepted == integ.n_accepted);
}

TEST_CASE("tangent substitution: 1-D decay anchor, pi/2") {
    FormulaFamily fam{FamilyTag::H_herm, 1, 1, Rational(2), Rational(0)};
    const MCEstimate est = mc_integral_unbounded(fam, 400000, 17, 2);
    CHECK(within_sigmas(est.mean, M_PI / 2.0, est.std_error, 3.5));
}

TEST_CASE("tangent substitution: scalar rectangular decay, alpha = 4") {
    FormulaFamily fam{FamilyTag::K_rect, 1, 1, Rational(4), Rational(0)};
    const MCEstimate est = mc_integral_unbounded(fam, 400000, 19, 2);
    CHECK(within_sigmas(est.mean, eval_K_rect(1, 1, Rational(4)).to_double(),
                        est.std_error, 3.5));
}

TEST_CASE("column peeling: the weighted integral factors into ball integrals") {
    // the (1,2)-shaped weighted integral equals the product of two 4-ball
    // integrals with exponents lambda and lambda + 2
    const Rational lambda(1);
    FormulaFamily fam{FamilyTag::J_rect, 1, 2, lambda, Rational(0)};
    const MCEstimate est = mc_integral(fam, 2000000, 29, 2);
    const double ball_product = ball_integral_oracle(1, 1.0 + 1.0).quad.value *
                                ball_integral_oracle(1, 1.0 + 3.0).quad.value;
    CHECK(within_sigmas(est.mean, ball_product, est.std_error, 3.0));
}

TEST_CASE("fourth domain weighted integral: L(1,1,1) = pi^2/12") {
    FormulaFamily fam{FamilyTag::L_four, 1, 1, Rational(1), Rational(1)};
    const MCEstimate est = mc_integral(fam, 400000, 23, 2);
    CHECK(within_sigmas(est.mean, M_PI * M_PI / 12.0, est.std_error, 3.5));
}

TEST_CASE("preconditions: sample floor, family routing, dimension ceiling") {
    CHECK_THROWS_AS(mc_volume(DomainSpec::make(DomainKind::RI, 1, 1), 100, 1, 1),
                    std::invalid_argument);
    FormulaFamily k{FamilyTag::K_rect, 1, 1, Rational(4), Rational(0)};
    CHECK_THROWS_AS(mc_integral(k, 100000, 1, 1), std::invalid_argument);
    FormulaFamily j{FamilyTag::J_rect, 1, 1, Rational(0), Rational(0)};
    CHECK_THROWS_AS(mc_integral_unbounded(j, 100000, 1, 1), std::invalid_argument);
    // Sym(3) has 24 real dimensions: rejection sampling refused
    CHECK_THROWS_AS(mc_volume(DomainSpec::make(DomainKind::Sym, 1, 3), 100000, 1, 1),
                    std::invalid_argument);
}

TEST_CASE("verification verdicts and the inconclusive gate") {
    // enough samples on a 4-dim domain: consistent
    const VerificationReport good =
        verify_volume(DomainSpec::make(DomainKind::RI, 1, 1), 200000, 42, 2);
    CHECK(good.verdict == Verdict::consistent);
    CHECK(std::abs(good.ratio - 1.0) < 0.05);

    // minimum legal sample count on a 16-dim shape: starved acceptance
    const VerificationReport thin =
        verify_volume(DomainSpec::make(DomainKind::RI, 2, 2), 10000, 42, 1);
    CHECK(thin.verdict == Verdict::inconclusive);

    // a deliberately wrong closed form would read inconsistent; simulate by
    // checking the z-score sign convention instead of faking a formula
    CHECK(good.z_score == (good.estimate.mean - good.comparisons.front().exact_double) /
                              good.estimate.std_error);
}

TEST_CASE("verification report serializes canonically") {
    const VerificationReport rep =
        verify_volume(DomainSpec::make(DomainKind::RI, 1, 1), 50000, 9, 1);
    const nlohmann::ordered_json j1 = report_to_json(rep);
    CHECK(j1["target"] == "RI(1,1)");
    CHECK(j1["verdict"] == "consistent");
    CHECK(j1["closed_form"]["exact"] == "1/2 * pi^(4/2)");

    // byte-identical apart from wall_time
    const VerificationReport rep2 =
        verify_volume(DomainSpec::make(DomainKind::RI, 1, 1), 50000, 9, 1);
    nlohmann::ordered_json a = report_to_json(rep);
    nlohmann::ordered_json b = report_to_json(rep2);
    a.erase("wall_time");
    b.erase("wall_time");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("variant comparisons ride along for the Hermitian decay family") {
    FormulaFamily fam{FamilyTag::H_herm, 1, 2, Rational(6), Rational(0)};
    const VerificationReport rep = verify_family(fam, 200000, 31, 2);
    REQUIRE(rep.comparisons.size() == 3);
    CHECK(rep.comparisons[0].source == FormulaSource::proof_recursion);
    // at n = 2 all variants coincide, so all z-scores match
    CHECK(rep.comparisons[0].exact_double == rep.comparisons[1].exact_double);
    CHECK(rep.comparisons[0].exact_double == rep.comparisons[2].exact_double);
}
