#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "quatdom/domains.hpp"

namespace quatdom {

/// A Monte Carlo estimate. Bit-exactly reproducible from
/// (seed, n_samples, workers): every sample draws from a counter-based
/// substream keyed by its global index, and per-worker accumulators are
/// merged in index order.
struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t n_accepted = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    double wall_time = 0.0;  // seconds
};

enum class Verdict { consistent, inconsistent, inconclusive };

const char* to_string(Verdict v);

struct VariantComparison {
    FormulaSource source;
    ExactValue exact;
    double exact_double = 0.0;
    double z_score = 0.0;
    double ratio = 0.0;
};

/// Closed form vs Monte Carlo comparison. `comparisons.front()` is the
/// reference route (the recursion-unrolled value where variants exist);
/// verdict and the top-level z/ratio refer to it. Inconclusive wins over
/// consistency when the relative standard error exceeds 5%.
struct VerificationReport {
    std::string target;
    FormulaFamily family{};
    bool is_volume = false;
    std::vector<VariantComparison> comparisons;
    MCEstimate estimate;
    double z_score = 0.0;
    double ratio = 0.0;
    Verdict verdict = Verdict::inconclusive;
};

/// Plain rejection volume of a bounded domain: box volume times acceptance
/// fraction, binomial standard error. Requires n_samples >= 10^4 and
/// real_dim <= 16 (beyond that the acceptance fraction is too small for
/// rejection sampling to say anything; use more structure instead).
MCEstimate mc_volume(const DomainSpec& spec, std::uint64_t n_samples, std::uint64_t seed,
                     int workers = 1);

/// Box-sampled integral of a bounded family's weight over its domain.
MCEstimate mc_integral(const FormulaFamily& family, std::uint64_t n_samples,
                       std::uint64_t seed, int workers = 1);

/// Integral of a decaying family (K_rect, H_herm) over the whole space via
/// the per-coordinate tangent substitution x = tan(theta).
MCEstimate mc_integral_unbounded(const FormulaFamily& family, std::uint64_t n_samples,
                                 std::uint64_t seed, int workers = 1);

/// Runs the matching mc_* operation and compares against the closed form(s).
VerificationReport verify_volume(const DomainSpec& spec, std::uint64_t n_samples,
                                 std::uint64_t seed, int workers = 1);
VerificationReport verify_family(const FormulaFamily& family, std::uint64_t n_samples,
                                 std::uint64_t seed, int workers = 1);

/// Canonical JSON rendering (ordered keys, decimals rounded to 12 significant
/// digits); byte-stable across reruns except for the wall_time field.
nlohmann::ordered_json report_to_json(const VerificationReport& report);

double round_significant(double x, int digits);

}  // namespace quatdom
