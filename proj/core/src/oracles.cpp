#include "quatdom/oracles.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "quatdom/mc.hpp"

namespace quatdom {

namespace {

constexpr double kPi = 3.14159265358979323846;

double lg(double x) { return std::lgamma(x); }

}  // namespace

double OracleCheck::rel_error() const {
    if (target == 0.0) return std::abs(quad.value);
    return std::abs(quad.value - target) / std::abs(target);
}

OracleCheck ball_integral_oracle(long m, double mu, double abs_tol) {
    if (mu <= 0.0) throw std::domain_error("ball_integral_oracle: need mu > 0");
    if (m < 1) throw std::domain_error("ball_integral_oracle: need m >= 1");
    const double surface = 2.0 * std::exp(2.0 * m * std::log(kPi) - lg(2.0 * m));
    // radial integral with t = 1 - r^2, putting the mu < 1 singularity at the
    // origin where the quadrature nodes keep full resolution
    OracleCheck out;
    out.quad = integrate_finite(
        [mu, m](double t) {
            return 0.5 * std::pow(t, mu - 1.0) * std::pow(1.0 - t, double(2 * m - 1));
        },
        0.0, 1.0, abs_tol);
    out.quad.value *= surface;
    out.quad.abs_error_bound *= surface;
    out.target = std::exp(2.0 * m * std::log(kPi) + lg(mu) - lg(mu + 2.0 * m));
    return out;
}

OracleCheck line_quadratic_decay_oracle(double a, double b, double c, double alpha, double abs_tol) {
    if (!(a > 0.0) || !(a * c - b * b > 0.0) || !(alpha > 0.5))
        throw std::domain_error("line_quadratic_decay_oracle: need a > 0, ac - b^2 > 0, alpha > 1/2");
    OracleCheck out;
    out.quad = integrate_real_line(
        [a, b, c, alpha](double x) {
            return std::pow(a * x * x + 2.0 * b * x + c, -alpha);
        },
        abs_tol);
    out.target = std::pow(a, alpha - 1.0) * std::pow(a * c - b * b, 0.5 - alpha) *
                 std::sqrt(kPi) * std::exp(lg(alpha - 0.5) - lg(alpha));
    return out;
}

OracleCheck quaternion_quadratic_ball_oracle(double a, const Quaternion& b, double c, double lambda,
                          double abs_tol) {
    const double bb = norm_sq(b);
    if (!(a < 0.0) || !(bb - a * c > 0.0) || !(lambda > -1.0))
        throw std::domain_error("quaternion_quadratic_ball_oracle: need a < 0, |b|^2 - ac > 0, lambda > -1");
    // Completing the square: the quadratic equals D (1 - s^2) on a 4-ball of
    // radius R around -b/a, with D = (|b|^2 - ac)/|a| and R^2 = D/|a|.
    // Radial reduction with t = 1 - s^2 keeps the lambda < 0 singularity at 0.
    const double D = (bb - a * c) / std::abs(a);
    const double R2 = D / std::abs(a);
    OracleCheck out;
    out.quad = integrate_finite(
        [D, lambda](double t) {
            return 0.5 * std::pow(D * t, lambda) * (1.0 - t);
        },
        0.0, 1.0, abs_tol);
    const double shell = 2.0 * kPi * kPi * R2 * R2;  // 4-ball radial factor, r = R s
    out.quad.value *= shell;
    out.quad.abs_error_bound *= shell;
    out.target = (1.0 / (a * a)) * std::pow(D, lambda + 2.0) * kPi * kPi /
                 ((lambda + 1.0) * (lambda + 2.0));
    return out;
}

QuarterDiskResult quarter_disk_power_oracle(double a, double b, double abs_tol) {
    if (!(0.0 < a && a < 1.0 + 1e-15) || !(b > -1.0))
        throw std::domain_error("quarter_disk_power_oracle: need 0 < a <= 1, b > -1");
    QuarterDiskResult out;
    out.quad = integrate_2d(
        [a, b](double x, double y) {
            const double base = a * a - x * x - y * y;
            if (base <= 0.0) return 0.0;
            return std::pow(base, b) * std::pow(x, 2.0 * b + 1.0) * std::pow(y, 2.0 * b + 1.0);
        },
        0.0, a, [](double) { return 0.0; },
        [a](double x) { return std::sqrt(std::max(0.0, a * a - x * x)); }, abs_tol);
    out.bracket = std::pow(a, 6.0 * b + 4.0) * std::sqrt(kPi) *
                  std::exp(2.0 * lg(b + 1.0) + lg(2.0 * b + 2.0) - lg(b + 1.5) -
                           lg(3.0 * b + 3.0));
    out.fitted_constant = out.quad.value / out.bracket;
    return out;
}

QuadResult anti_hermitian_n1_oracle(double lambda, double abs_tol) {
    if (!(lambda > -1.0)) throw std::domain_error("anti_hermitian_n1_oracle: need lambda > -1");
    // t = 1 - s^2 as in the other radial oracles
    QuadResult r = integrate_finite(
        [lambda](double t) {
            return 2.0 * kPi * std::pow(t, lambda) * std::sqrt(1.0 - t);
        },
        0.0, 1.0, abs_tol);
    return r;
}

QuadResult hermitian_decay_n2_oracle(double alpha, double rel_tol) {
    if (!(alpha > 2.5)) throw std::domain_error("hermitian_decay_n2_oracle: need alpha > 5/2");
    // Q = [[x, conj(v)], [v, h]] has eigenvalues ((x+h) +- sqrt((x-h)^2 + 4 r^2))/2
    // with r = |v|; det(I + Q^2) = (1 + l1^2)(1 + l2^2), and d^4v reduces to
    // 2 pi^2 r^3 dr. The u = r/(1+r) fold maps the radial ray onto (0, 1).
    long evals = 0;
    const auto inner_r = [&](double x, double h) {
        const QuadResult r = integrate_finite(
            [&](double u) {
                const double rad = u / (1.0 - u);
                const double jac = 1.0 / ((1.0 - u) * (1.0 - u));
                const double s = x + h;
                const double d = std::sqrt((x - h) * (x - h) + 4.0 * rad * rad);
                const double l1 = 0.5 * (s + d), l2 = 0.5 * (s - d);
                const double det = (1.0 + l1 * l1) * (1.0 + l2 * l2);
                return std::pow(det, -alpha) * 2.0 * kPi * kPi * rad * rad * rad * jac;
            },
            0.0, 1.0, rel_tol * 1e-4);
        evals += r.evaluations;
        return r.value;
    };
    const auto inner_h = [&](double x) {
        const QuadResult r = integrate_real_line(
            [&](double h) { return inner_r(x, h); }, rel_tol * 1e-2);
        evals += r.evaluations;
        return r.value;
    };
    QuadResult out = integrate_real_line(inner_h, rel_tol);
    out.evaluations = evals;
    return out;
}

OracleCheck fourth_domain_reduction_oracle(long n, const Rational& alpha, const Rational& beta,
                              double abs_tol) {
    if (n < 2) throw std::domain_error("fourth_domain_reduction_oracle: need n >= 2");
    if (!(alpha > -1) || !(beta > -(n + alpha)))
        throw std::domain_error("fourth_domain_reduction_oracle: parameter out of range");
    const double da = alpha.get_d();
    const double db = beta.get_d();
    // Reduced 2-D integral over rho + mu < 1, both nonnegative.
    OracleCheck out;
    out.quad = integrate_2d(
        [n, da, db](double mu, double rho) {
            const double sum = rho + mu;
            const double diff = rho - mu;
            return std::pow(1.0 - sum * sum, da) * std::pow(1.0 - diff * diff, db) *
                   std::pow(rho, double(n - 1)) * std::pow(mu, double(3 * n - 4));
        },
        0.0, 1.0, [](double) { return 0.0; }, [](double mu) { return 1.0 - mu; }, abs_tol);

    // Prefactor chain from the derivation: the reassembly constant between
    // the reduced 2-D integral and the full integral.
    const double s = 2.0 * n + da + db;
    const double log_chain = (4.0 - n) * std::log(2.0) + (2.0 * n + 0.5) * std::log(kPi) +
                             lg(double(n - 1)) + lg(s - 0.5) - lg(s + 1.0) -
                             2.0 * lg(0.5 * n) - lg(0.5 * (n - 1)) - lg(1.5 * (n - 1));
    const double chain = std::exp(log_chain);
    out.quad.value *= chain;
    out.quad.abs_error_bound *= chain;

    out.target = eval_L_four(n, alpha, beta).to_double();
    return out;
}

std::string RecursionCheckReport::matching_sources() const {
    std::string out;
    for (const RouteCheck& r : routes) {
        if (!r.exact_match) continue;
        if (!out.empty()) out += ",";
        out += to_string(r.source);
    }
    return out.empty() ? "none" : out;
}

RecursionCheckReport recursion_check(FamilyTag family, long n, const Rational& param) {
    if (n < 2) throw std::domain_error("recursion_check: need n >= 2");
    RecursionCheckReport report{family, n, param, {}};

    const auto add_route = [&](FormulaSource source, const ExactValue& lhs,
                               const ExactValue& rhs) {
        report.routes.push_back({source, lhs == rhs, lhs, rhs, lhs / rhs});
    };

    switch (family) {
        case FamilyTag::H_herm: {
            const ExactValue coeff = h_herm_recursion_coeff(n, param);
            const Rational shifted = param - 2;
            add_route(FormulaSource::statement,
                      eval_H_herm(n, param, FormulaSource::statement),
                      coeff * eval_H_herm(n - 1, shifted, FormulaSource::statement));
            add_route(FormulaSource::proof_product,
                      eval_H_herm(n, param, FormulaSource::proof_product),
                      coeff * eval_H_herm(n - 1, shifted, FormulaSource::proof_product));
            break;
        }
        case FamilyTag::I_herm: {
            const ExactValue coeff = i_herm_recursion_coeff(n, param);
            const Rational shifted = param + 2;
            add_route(FormulaSource::proof_recursion, eval_I_herm(n, param),
                      coeff * eval_I_herm(n - 1, shifted));
            add_route(FormulaSource::statement, eval_I_herm_printed(n, param),
                      coeff * eval_I_herm_printed(n - 1, shifted));
            break;
        }
        case FamilyTag::J_sym: {
            const ExactValue coeff = j_sym_recursion_coeff(n, param);
            const Rational shifted = param + 2;
            add_route(FormulaSource::statement, eval_J_sym_product(n, param),
                      coeff * eval_J_sym_product(n - 1, shifted));
            break;
        }
        default:
            throw std::invalid_argument("recursion_check: family has no recursion route");
    }
    return report;
}

namespace {

using json = nlohmann::ordered_json;

json route_json(const RecursionCheckReport::RouteCheck& r) {
    return {{"source", to_string(r.source)},
            {"exact_match", r.exact_match},
            {"value", r.lhs.to_string()},
            {"recursion_value", r.rhs.to_string()},
            {"ratio", r.ratio.to_string()}};
}

}  // namespace

json build_discrepancy_report(const DiscrepancyMCInputs& mc) {
    json report = json::array();

    {
        // Second product of the Hermitian decay integral: the statement and
        // the derivation's final printed line disagree from n = 3 on; the
        // recursion the derivation establishes picks the statement.
        const Rational alpha6(6);
        const RecursionCheckReport rc = recursion_check(FamilyTag::H_herm, 3, alpha6);
        const ExactValue statement = eval_H_herm(3, alpha6, FormulaSource::statement);
        const ExactValue proof = eval_H_herm(3, alpha6, FormulaSource::proof_product);
        const ExactValue recursion = eval_H_herm(3, alpha6, FormulaSource::proof_recursion);
        json entry;
        entry["claim_id"] = "hermitian_decay_second_product";
        entry["paper_location"] =
            "closed form of the Hermitian decay integral: statement product vs the "
            "derivation's final printed line (second product argument step)";
        entry["variant_values"] = {{"statement", statement.to_string()},
                                   {"proof_final_line", proof.to_string()},
                                   {"n", 3},
                                   {"alpha", "6"}};
        entry["oracle_value"] = recursion.to_string();
        entry["ratio"] = round_significant((proof / statement).to_double(), 12);
        entry["verdict"] = "recursion matches: " + rc.matching_sources();
        if (mc.h2_mean) {
            const double exact2 = eval_H_herm(2, alpha6, FormulaSource::statement).to_double();
            entry["mc_n2"] = {{"mean", round_significant(*mc.h2_mean, 12)},
                              {"std_error", round_significant(*mc.h2_std_error, 12)},
                              {"closed_form", round_significant(exact2, 12)}};
        }
        report.push_back(entry);
    }

    {
        // Leading power of two in the Hermitian decay integral: against the
        // plain product measure the printed closed form is high by exactly
        // 2^(n(n-1)). The bounded integral over the same matrix space carries
        // no such factor, so this is internal, not a global convention.
        const QuadResult quad = hermitian_decay_n2_oracle(6.0);
        const double printed = eval_H_herm(2, Rational(6), FormulaSource::statement).to_double();
        json entry;
        entry["claim_id"] = "hermitian_decay_measure_constant";
        entry["paper_location"] =
            "Hermitian decay integral: leading 2^(n(n-1)) of the closed form vs the plain "
            "product measure over matrix entries";
        json values = {{"printed_closed_form", round_significant(printed, 12)},
                       {"plain_measure_quadrature", round_significant(quad.value, 12)},
                       {"n", 2},
                       {"alpha", "6"}};
        if (mc.h2_mean) {
            values["mc_mean"] = round_significant(*mc.h2_mean, 12);
            values["mc_std_error"] = round_significant(*mc.h2_std_error, 12);
            values["mc_z_vs_quadrature"] = round_significant(
                (*mc.h2_mean - quad.value) / *mc.h2_std_error, 12);
        }
        entry["variant_values"] = values;
        entry["oracle_value"] = round_significant(quad.value, 12);
        entry["ratio"] = round_significant(printed / quad.value, 12);
        entry["verdict"] =
            "closed form = plain-measure integral * 2^(n(n-1)) (ratio 4 at n = 2); the "
            "bounded Hermitian family shows no such factor; reported, not corrected";
        report.push_back(entry);
    }

    {
        // Second product of the bounded Hermitian integral: the printed
        // statement's step-4 argument contradicts the derivation's recursion
        // (step-2); exactly the same defect class as above.
        const Rational lambda0(0);
        const RecursionCheckReport rc = recursion_check(FamilyTag::I_herm, 3, lambda0);
        const ExactValue printed = eval_I_herm_printed(3, lambda0);
        const ExactValue consistent = eval_I_herm(3, lambda0);
        json entry;
        entry["claim_id"] = "hermitian_bounded_second_product";
        entry["paper_location"] =
            "closed form of the bounded Hermitian integral: printed second product "
            "(argument step 4) vs the recursion the derivation establishes (step 2)";
        entry["variant_values"] = {{"printed_statement", printed.to_string()},
                                   {"recursion_consistent", consistent.to_string()},
                                   {"n", 3},
                                   {"lambda", "0"}};
        entry["oracle_value"] = consistent.to_string();
        entry["ratio"] = round_significant((printed / consistent).to_double(), 12);
        entry["verdict"] = "recursion matches: " + rc.matching_sources() +
                           "; production evaluator follows the recursion";
        report.push_back(entry);
    }

    {
        // Anti-Hermitian n = 1 measure constant: the closed form divided by
        // the 3-ball quadrature is constant in lambda.
        json ratios = json::array();
        double ratio0 = 0.0;
        for (int l = 0; l <= 2; ++l) {
            const QuadResult quad = anti_hermitian_n1_oracle(double(l));
            const double formula = eval_K_anti(1, Rational(l)).to_double();
            const double ratio = formula / quad.value;
            if (l == 0) ratio0 = ratio;
            ratios.push_back({{"lambda", l},
                              {"closed_form", round_significant(formula, 12)},
                              {"oracle", round_significant(quad.value, 12)},
                              {"ratio", round_significant(ratio, 12)}});
        }
        json entry;
        entry["claim_id"] = "anti_hermitian_measure_constant";
        entry["paper_location"] =
            "anti-Hermitian volume closed form, n = 1 (the reparameterization through a "
            "constrained symmetric matrix silently rescales the measure)";
        entry["variant_values"] = ratios;
        entry["oracle_value"] = round_significant(anti_hermitian_n1_oracle(0.0).value, 12);
        entry["ratio"] = round_significant(ratio0, 12);
        entry["verdict"] = "closed form = oracle * constant; constant = 1/sqrt(3) = " +
                           std::to_string(ratio0) + " (reported, not corrected)";
        report.push_back(entry);
    }

    {
        // Quarter-disk power integral: the printed denominator "2^n" names no
        // n; the fit resolves it to 2^(2b+3) (b-dependent, not a single
        // constant).
        json fits = json::array();
        for (double a : {0.5, 1.0}) {
            for (double b : {0.0, 1.0, 1.5}) {
                const QuarterDiskResult r = quarter_disk_power_oracle(a, b);
                fits.push_back({{"a", a},
                                {"b", b},
                                {"fitted_constant", round_significant(r.fitted_constant, 12)},
                                {"log2", round_significant(std::log2(r.fitted_constant), 12)}});
            }
        }
        json entry;
        entry["claim_id"] = "quarter_disk_power_constant";
        entry["paper_location"] =
            "quarter-disk auxiliary integral: unresolved power-of-two denominator";
        entry["variant_values"] = fits;
        entry["oracle_value"] = "denominator resolves to 2^(2b+3)";
        entry["ratio"] = round_significant(quarter_disk_power_oracle(1.0, 0.0).fitted_constant, 12);
        entry["verdict"] =
            "fitted constant is 2^-(2b+3) exactly: a power of 1/2 for every b and "
            "independent of a, but not a single b-independent constant";
        report.push_back(entry);
    }

    {
        // Fourth domain, n = 2: closed form vs the reduced 2-D quadrature
        // chain vs (optionally) Monte Carlo.
        const OracleCheck oc = fourth_domain_reduction_oracle(2, Rational(0), Rational(0));
        const double exact = vol_RIV(2).to_double();
        json entry;
        entry["claim_id"] = "fourth_domain_triple";
        entry["paper_location"] =
            "fourth-domain volume, n = 2: closed form vs reduced 2-D integral chain";
        json values = {{"closed_form", round_significant(exact, 12)},
                       {"closed_form_exact", vol_RIV(2).to_string()},
                       {"p_oracle", round_significant(oc.quad.value, 12)}};
        bool consistent = oc.rel_error() < 1e-6;
        if (mc.riv2_volume_mean) {
            values["mc_mean"] = round_significant(*mc.riv2_volume_mean, 12);
            values["mc_std_error"] = round_significant(*mc.riv2_volume_std_error, 12);
            const double z = (*mc.riv2_volume_mean - exact) / *mc.riv2_volume_std_error;
            values["mc_z_score"] = round_significant(z, 12);
            consistent = consistent && std::abs(z) <= 3.0;
        }
        entry["variant_values"] = values;
        entry["oracle_value"] = round_significant(oc.quad.value, 12);
        entry["ratio"] = round_significant(oc.quad.value / exact, 12);
        entry["verdict"] = consistent ? "consistent" : "inconsistent";
        report.push_back(entry);
    }

    {
        // Fourth domain, n >= 3: the printed terminating-sum formula no
        // longer matches the derivation's own reduced-integral chain, and the
        // mismatch factor depends on the parameters. Full-dimensional Monte
        // Carlo at n = 3 sides with the chain.
        json grid = json::array();
        const struct {
            long n;
            long a, b;
        } pts[] = {{3, 0, 0}, {3, 1, 0}, {3, 0, 1}, {4, 0, 0}, {4, 0, 1}};
        for (const auto& p : pts) {
            const OracleCheck oc = fourth_domain_reduction_oracle(p.n, Rational(p.a), Rational(p.b));
            grid.push_back({{"n", p.n},
                            {"alpha", p.a},
                            {"beta", p.b},
                            {"printed_sum", round_significant(oc.target, 12)},
                            {"reduction_chain", round_significant(oc.quad.value, 12)},
                            {"ratio", round_significant(oc.quad.value / oc.target, 12)}});
        }
        const OracleCheck n3 = fourth_domain_reduction_oracle(3, Rational(0), Rational(0));
        json entry;
        entry["claim_id"] = "fourth_domain_closed_form_n_ge_3";
        entry["paper_location"] =
            "fourth-domain closed form, n >= 3: printed terminating-sum formula vs the "
            "derivation's reduced 2-D integral with its printed prefactor chain";
        entry["variant_values"] = grid;
        entry["oracle_value"] = round_significant(n3.quad.value, 12);
        entry["ratio"] = round_significant(n3.quad.value / n3.target, 12);
        std::string verdict =
            "reduction chain; the printed sum is low by a parameter-dependent factor "
            "(exactly 5 at n=3, alpha=beta=0) while n=2 agrees; evaluators return the "
            "printed formula unchanged";
        if (mc.riv3_volume_mean) {
            const double z_closed =
                (*mc.riv3_volume_mean - n3.target) / *mc.riv3_volume_std_error;
            const double z_chain =
                (*mc.riv3_volume_mean - n3.quad.value) / *mc.riv3_volume_std_error;
            entry["mc_n3"] = {{"mean", round_significant(*mc.riv3_volume_mean, 12)},
                              {"std_error", round_significant(*mc.riv3_volume_std_error, 12)},
                              {"z_vs_printed", round_significant(z_closed, 12)},
                              {"z_vs_chain", round_significant(z_chain, 12)}};
            verdict += std::abs(z_chain) <= 3.0 && std::abs(z_closed) > 3.0
                           ? "; Monte Carlo confirms the chain"
                           : "; Monte Carlo evidence attached";
        }
        entry["verdict"] = verdict;
        report.push_back(entry);
    }

    return report;
}

void write_discrepancy_report(const std::string& path, const DiscrepancyMCInputs& mc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << build_discrepancy_report(mc).dump(2) << "\n";
}

}  // namespace quatdom
