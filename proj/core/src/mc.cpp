#include "quatdom/mc.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "quatdom/rng.hpp"

namespace quatdom {

namespace {

constexpr long kRejectionDimCeiling = 16;
constexpr double kInconclusiveRelError = 0.05;
constexpr double kConsistentZ = 3.0;

struct Partial {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t accepted = 0;
};

/// Runs fn(worker, begin, end) on `workers` threads over contiguous index
/// ranges and returns the per-worker partials in index order.
template <typename Fn>
std::vector<Partial> run_partitioned(std::uint64_t n_samples, int workers, Fn fn) {
    if (workers < 1) workers = 1;
    std::vector<Partial> partials(static_cast<std::size_t>(workers));
    if (workers == 1) {
        partials[0] = fn(std::uint64_t(0), n_samples);
        return partials;
    }
    std::vector<std::thread> threads;
    threads.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t begin = n_samples * std::uint64_t(w) / std::uint64_t(workers);
        const std::uint64_t end = n_samples * std::uint64_t(w + 1) / std::uint64_t(workers);
        threads.emplace_back(
            [&partials, w, begin, end, &fn] { partials[std::size_t(w)] = fn(begin, end); });
    }
    for (auto& t : threads) t.join();
    return partials;
}

MCEstimate finish_binomial(const std::vector<Partial>& partials, double box_volume,
                           std::uint64_t n_samples, std::uint64_t seed, int workers) {
    std::uint64_t accepted = 0;
    for (const Partial& p : partials) accepted += p.accepted;
    const double n = double(n_samples);
    const double p_hat = double(accepted) / n;
    MCEstimate est;
    est.mean = box_volume * p_hat;
    est.std_error = box_volume * std::sqrt(p_hat * (1.0 - p_hat) / n);
    est.n_samples = n_samples;
    est.n_accepted = accepted;
    est.seed = seed;
    est.workers = workers;
    return est;
}

MCEstimate finish_weighted(const std::vector<Partial>& partials, double scale,
                           std::uint64_t n_samples, std::uint64_t seed, int workers) {
    double sum = 0.0, sum_sq = 0.0;
    std::uint64_t accepted = 0;
    for (const Partial& p : partials) {
        sum += p.sum;
        sum_sq += p.sum_sq;
        accepted += p.accepted;
    }
    const double n = double(n_samples);
    const double mean_f = sum / n;
    const double var_f = std::max(0.0, sum_sq / n - mean_f * mean_f);
    MCEstimate est;
    est.mean = scale * mean_f;
    est.std_error = scale * std::sqrt(var_f / n);
    est.n_samples = n_samples;
    est.n_accepted = accepted;
    est.seed = seed;
    est.workers = workers;
    return est;
}

void check_rejection_feasible(const DomainSpec& spec) {
    if (spec.real_dim() > kRejectionDimCeiling)
        throw std::invalid_argument(
            spec.shape_string() + " has " + std::to_string(spec.real_dim()) +
            " real dimensions; plain rejection sampling is refused above " +
            std::to_string(kRejectionDimCeiling) + " (acceptance would be negligible)");
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::consistent: return "consistent";
        case Verdict::inconsistent: return "inconsistent";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

MCEstimate mc_volume(const DomainSpec& spec, std::uint64_t n_samples, std::uint64_t seed,
                     int workers) {
    if (n_samples < 10000) throw std::invalid_argument("mc_volume: need n_samples >= 10^4");
    check_rejection_feasible(spec);
    const auto t0 = std::chrono::steady_clock::now();
    const int dim = int(spec.real_dim());
    const Philox rng(seed);

    auto partials = run_partitioned(n_samples, workers, [&](std::uint64_t begin,
                                                            std::uint64_t end) {
        DomainEvaluator eval(spec);
        std::vector<double> u(static_cast<std::size_t>(dim)), x(static_cast<std::size_t>(dim));
        Partial part;
        for (std::uint64_t i = begin; i < end; ++i) {
            sample_uniforms(rng, i, u.data(), dim);
            for (int d = 0; d < dim; ++d) x[std::size_t(d)] = 2.0 * u[std::size_t(d)] - 1.0;
            if (eval.contains(x)) ++part.accepted;
        }
        return part;
    });

    MCEstimate est = finish_binomial(partials, spec.box_volume(), n_samples, seed, workers);
    est.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return est;
}

MCEstimate mc_integral(const FormulaFamily& family, std::uint64_t n_samples,
                       std::uint64_t seed, int workers) {
    if (family.tag == FamilyTag::K_rect || family.tag == FamilyTag::H_herm)
        throw std::invalid_argument("mc_integral: decaying family, use mc_integral_unbounded");
    const DomainSpec spec = domain_for(family);
    check_rejection_feasible(spec);
    const auto t0 = std::chrono::steady_clock::now();
    const int dim = int(spec.real_dim());
    const Philox rng(seed);

    auto partials = run_partitioned(n_samples, workers, [&](std::uint64_t begin,
                                                            std::uint64_t end) {
        DomainEvaluator eval(family);
        std::vector<double> u(static_cast<std::size_t>(dim)), x(static_cast<std::size_t>(dim));
        Partial part;
        for (std::uint64_t i = begin; i < end; ++i) {
            sample_uniforms(rng, i, u.data(), dim);
            for (int d = 0; d < dim; ++d) x[std::size_t(d)] = 2.0 * u[std::size_t(d)] - 1.0;
            const double f = eval.integrand_or_zero(x);
            if (f != 0.0) {
                ++part.accepted;
                part.sum += f;
                part.sum_sq += f * f;
            }
        }
        return part;
    });

    MCEstimate est = finish_weighted(partials, spec.box_volume(), n_samples, seed, workers);
    est.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return est;
}

MCEstimate mc_integral_unbounded(const FormulaFamily& family, std::uint64_t n_samples,
                                 std::uint64_t seed, int workers) {
    if (family.tag != FamilyTag::K_rect && family.tag != FamilyTag::H_herm)
        throw std::invalid_argument("mc_integral_unbounded: bounded family, use mc_integral");
    const DomainSpec spec = domain_for(family);
    const auto t0 = std::chrono::steady_clock::now();
    const int dim = int(spec.real_dim());
    const Philox rng(seed);
    const double pi = 3.14159265358979323846;

    auto partials = run_partitioned(n_samples, workers, [&](std::uint64_t begin,
                                                            std::uint64_t end) {
        DomainEvaluator eval(family);
        std::vector<double> u(static_cast<std::size_t>(dim)), x(static_cast<std::size_t>(dim));
        Partial part;
        for (std::uint64_t i = begin; i < end; ++i) {
            sample_uniforms(rng, i, u.data(), dim);
            double jac = 1.0;
            for (int d = 0; d < dim; ++d) {
                const double theta = pi * (u[std::size_t(d)] - 0.5);
                const double t = std::tan(theta);
                x[std::size_t(d)] = t;
                jac *= 1.0 + t * t;
            }
            const double f = eval.decay_integrand(x) * jac;
            if (std::isfinite(f) && f != 0.0) {
                ++part.accepted;
                part.sum += f;
                part.sum_sq += f * f;
            }
        }
        return part;
    });

    const double scale = std::pow(pi, double(dim));
    MCEstimate est = finish_weighted(partials, scale, n_samples, seed, workers);
    est.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return est;
}

namespace {

VerificationReport build_report(const std::string& target, const FormulaFamily& family,
                                bool is_volume, std::vector<VariantComparison> comparisons,
                                const MCEstimate& est) {
    VerificationReport rep;
    rep.target = target;
    rep.family = family;
    rep.is_volume = is_volume;
    for (VariantComparison& c : comparisons) {
        c.exact_double = c.exact.to_double();
        c.ratio = c.exact_double != 0.0 ? est.mean / c.exact_double : 0.0;
        c.z_score = est.std_error > 0.0
                        ? (est.mean - c.exact_double) / est.std_error
                        : (est.mean == c.exact_double ? 0.0 : INFINITY);
    }
    rep.comparisons = std::move(comparisons);
    rep.estimate = est;
    const VariantComparison& ref = rep.comparisons.front();
    rep.z_score = ref.z_score;
    rep.ratio = ref.ratio;
    if (est.std_error == 0.0) {
        // degenerate run: exact hit (every box point accepted) or starved
        // acceptance (nothing accepted at all)
        rep.verdict =
            est.mean == ref.exact_double ? Verdict::consistent : Verdict::inconclusive;
    } else if (est.mean == 0.0 || std::abs(est.std_error / est.mean) > kInconclusiveRelError) {
        rep.verdict = Verdict::inconclusive;
    } else if (std::abs(rep.z_score) <= kConsistentZ) {
        rep.verdict = Verdict::consistent;
    } else {
        rep.verdict = Verdict::inconsistent;
    }
    return rep;
}

}  // namespace

VerificationReport verify_volume(const DomainSpec& spec, std::uint64_t n_samples,
                                 std::uint64_t seed, int workers) {
    const MCEstimate est = mc_volume(spec, n_samples, seed, workers);
    FormulaFamily family;
    switch (spec.kind) {
        case DomainKind::RI: family.tag = FamilyTag::J_rect; break;
        case DomainKind::RII: family.tag = FamilyTag::I_herm; break;
        case DomainKind::RIII: family.tag = FamilyTag::K_anti; break;
        case DomainKind::Sym: family.tag = FamilyTag::J_sym; break;
        case DomainKind::RIV: family.tag = FamilyTag::L_four; break;
    }
    family.m = spec.m;
    family.n = spec.n;
    std::vector<VariantComparison> cmp{
        {FormulaSource::statement, domain_volume(spec), 0, 0, 0}};
    return build_report(spec.shape_string(), family, /*is_volume=*/true, std::move(cmp), est);
}

VerificationReport verify_family(const FormulaFamily& family, std::uint64_t n_samples,
                                 std::uint64_t seed, int workers) {
    const bool unbounded =
        family.tag == FamilyTag::K_rect || family.tag == FamilyTag::H_herm;
    const MCEstimate est = unbounded ? mc_integral_unbounded(family, n_samples, seed, workers)
                                     : mc_integral(family, n_samples, seed, workers);

    std::vector<VariantComparison> cmp;
    switch (family.tag) {
        case FamilyTag::J_rect:
            cmp.push_back({FormulaSource::statement,
                           eval_J_rect(family.m, family.n, family.lambda), 0, 0, 0});
            break;
        case FamilyTag::K_rect:
            cmp.push_back({FormulaSource::statement,
                           eval_K_rect(family.m, family.n, family.lambda), 0, 0, 0});
            break;
        case FamilyTag::H_herm:
            for (const FormulaVariant& v : eval_H_herm_variants(family.n, family.lambda))
                cmp.push_back({v.source, v.value, 0, 0, 0});
            break;
        case FamilyTag::I_herm:
            cmp.push_back(
                {FormulaSource::proof_recursion, eval_I_herm(family.n, family.lambda), 0, 0, 0});
            cmp.push_back({FormulaSource::statement,
                           eval_I_herm_printed(family.n, family.lambda), 0, 0, 0});
            break;
        case FamilyTag::J_sym:
            cmp.push_back(
                {FormulaSource::proof_recursion, eval_J_sym(family.n, family.lambda), 0, 0, 0});
            break;
        case FamilyTag::K_anti:
            cmp.push_back(
                {FormulaSource::statement, eval_K_anti(family.n, family.lambda), 0, 0, 0});
            break;
        case FamilyTag::L_four:
            cmp.push_back({FormulaSource::statement,
                           eval_L_four(family.n, family.lambda, family.beta), 0, 0, 0});
            break;
    }
    const std::string target = std::string(to_string(family.tag)) + "(" +
                               family.params_string() + ")";
    return build_report(target, family, /*is_volume=*/false, std::move(cmp), est);
}

double round_significant(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    const double mag = std::pow(10.0, digits - 1 - int(std::floor(std::log10(std::abs(x)))));
    return std::round(x * mag) / mag;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    using json = nlohmann::ordered_json;
    const int sig = 12;
    json j;
    j["target"] = report.target;
    j["family"] = to_string(report.family.tag);
    j["params"] = report.family.params_string();
    j["is_volume"] = report.is_volume;
    const VariantComparison& ref = report.comparisons.front();
    j["closed_form"] = {{"exact", ref.exact.to_string()},
                        {"decimal", round_significant(ref.exact_double, sig)}};
    if (report.comparisons.size() > 1) {
        json variants = json::array();
        for (const VariantComparison& c : report.comparisons) {
            variants.push_back({{"source", to_string(c.source)},
                                {"exact", c.exact.to_string()},
                                {"decimal", round_significant(c.exact_double, sig)},
                                {"z_score", round_significant(c.z_score, sig)},
                                {"ratio", round_significant(c.ratio, sig)}});
        }
        j["variants"] = std::move(variants);
    }
    j["estimate"] = {{"mean", round_significant(report.estimate.mean, sig)},
                     {"std_error", round_significant(report.estimate.std_error, sig)},
                     {"n_samples", report.estimate.n_samples},
                     {"n_accepted", report.estimate.n_accepted},
                     {"seed", report.estimate.seed},
                     {"workers", report.estimate.workers}};
    j["z_score"] = round_significant(report.z_score, sig);
    j["ratio"] = round_significant(report.ratio, sig);
    j["verdict"] = to_string(report.verdict);
    j["wall_time"] = report.estimate.wall_time;
    return j;
}

}  // namespace quatdom
