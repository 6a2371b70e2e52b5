// Command-line front end: exact closed-form values, Monte Carlo
// verification runs, batch tables, and the discrepancy report.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "quatdom/mc.hpp"
#include "quatdom/oracles.hpp"

using namespace quatdom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInconclusive = 3;

std::uint64_t parse_samples(const std::string& text) {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size() || !(v >= 1.0) || v > 9e18 || v != std::floor(v))
        throw std::invalid_argument("--samples: '" + text +
                                    "' is not a whole sample count");
    return std::uint64_t(v);
}

std::uint64_t parse_samples_or_zero(const std::string& text) {
    if (text == "0") return 0;
    return parse_samples(text);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QUATDOM_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed QUATDOM_SEED='" << env << "'\n";
        }
    }
    return 42;
}

struct OutputTarget {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << text;
    }
};

struct FamilyArgs {
    std::string family;
    long m = 1;
    long n = 1;
    std::string lambda = "0";
    std::string alpha;
    std::string beta = "0";

    FormulaFamily build() const {
        FormulaFamily fam;
        fam.tag = family_from_string(family);
        fam.m = m;
        fam.n = n;
        const bool uses_alpha = fam.tag == FamilyTag::K_rect ||
                                fam.tag == FamilyTag::H_herm ||
                                fam.tag == FamilyTag::L_four;
        if (uses_alpha) {
            if (alpha.empty())
                throw std::invalid_argument("--alpha is required for this family");
            fam.lambda = parse_rational(alpha);
        } else {
            fam.lambda = parse_rational(lambda);
        }
        fam.beta = parse_rational(beta);
        return fam;
    }
};

int run_volume(const std::string& domain, long m, long n, bool exact, int precision) {
    const DomainSpec spec = DomainSpec::make(domain_from_string(domain), m, n);
    const ExactValue v = domain_volume(spec);
    std::cout << (exact ? v.to_string() : v.to_decimal_string(precision)) << "\n";
    return kExitOk;
}

int run_integral(const FamilyArgs& args, int precision) {
    const FormulaFamily fam = args.build();
    if (fam.tag == FamilyTag::H_herm) {
        const auto variants = eval_H_herm_variants(fam.n, fam.lambda);
        const ExactValue& reference = variants.front().value;
        for (const FormulaVariant& v : variants) {
            std::cout << to_string(v.source) << "\t" << v.value.to_string() << "\t"
                      << v.value.to_decimal_string(precision)
                      << (v.value != reference ? "\tDIFFER" : "") << "\n";
        }
        return kExitOk;
    }
    ExactValue v;
    switch (fam.tag) {
        case FamilyTag::J_rect: v = eval_J_rect(fam.m, fam.n, fam.lambda); break;
        case FamilyTag::K_rect: v = eval_K_rect(fam.m, fam.n, fam.lambda); break;
        case FamilyTag::I_herm: v = eval_I_herm(fam.n, fam.lambda); break;
        case FamilyTag::J_sym: v = eval_J_sym(fam.n, fam.lambda); break;
        case FamilyTag::K_anti: v = eval_K_anti(fam.n, fam.lambda); break;
        case FamilyTag::L_four: v = eval_L_four(fam.n, fam.lambda, fam.beta); break;
        default: break;
    }
    std::cout << v.to_string() << "\t" << v.to_decimal_string(precision) << "\n";
    return kExitOk;
}

int run_verify(const std::string& domain, const FamilyArgs& args, std::uint64_t samples,
               std::uint64_t seed, int workers, const OutputTarget& out) {
    VerificationReport report;
    if (!domain.empty()) {
        const DomainSpec spec = DomainSpec::make(domain_from_string(domain), args.m, args.n);
        report = verify_volume(spec, samples, seed, workers);
    } else {
        report = verify_family(args.build(), samples, seed, workers);
    }
    out.write(report_to_json(report).dump(2) + "\n");
    switch (report.verdict) {
        case Verdict::consistent: return kExitOk;
        case Verdict::inconsistent: return kExitInconsistent;
        case Verdict::inconclusive: return kExitInconclusive;
    }
    return kExitOk;
}

struct TableRow {
    std::string family;
    long m;
    long n;
    std::string params;
    ExactValue exact;
    std::string variant;
    std::string oracle_status;
};

std::vector<TableRow> build_table(long max_m, long max_n) {
    std::vector<TableRow> rows;
    const Rational zero(0);
    for (long m = 1; m <= max_m; ++m)
        for (long n = 1; n <= max_n; ++n) {
            const ExactValue j = eval_J_rect(m, n, zero);
            rows.push_back({"J_rect", m, n, "lambda=0", j, "",
                            j == eval_J_rect_peeled(m, n, zero) ? "ok" : "differ"});
            const Rational alpha(2 * m + 2 * n - 1);
            rows.push_back({"K_rect", m, n, "alpha=" + alpha.get_str(),
                            eval_K_rect(m, n, alpha), "", ""});
        }
    for (long n = 1; n <= max_n; ++n) {
        const Rational alpha(2 * n);
        const ExactValue recursion = eval_H_herm(n, alpha, FormulaSource::proof_recursion);
        if (n >= 3) {
            const ExactValue st = eval_H_herm(n, alpha, FormulaSource::statement);
            const ExactValue pp = eval_H_herm(n, alpha, FormulaSource::proof_product);
            rows.push_back({"H_herm", 1, n, "alpha=" + alpha.get_str(), st, "statement",
                            st == recursion ? "matches_recursion" : "differs_from_recursion"});
            rows.push_back({"H_herm", 1, n, "alpha=" + alpha.get_str(), pp, "proof_product",
                            pp == recursion ? "matches_recursion" : "differs_from_recursion"});
        } else {
            rows.push_back({"H_herm", 1, n, "alpha=" + alpha.get_str(), recursion, "", "ok"});
        }
        const ExactValue i_val = eval_I_herm(n, zero);
        rows.push_back({"I_herm", 1, n, "lambda=0", i_val, "",
                        n >= 3 && eval_I_herm_printed(n, zero) != i_val
                            ? "printed_statement_differs"
                            : "ok"});
        const ExactValue js = eval_J_sym(n, zero);
        rows.push_back({"J_sym", 1, n, "lambda=0", js, "",
                        js == eval_J_sym_product(n, zero) ? "ok" : "differ"});
        std::string anti_status;
        if (n == 1) {
            const double ratio =
                eval_K_anti(1, zero).to_double() / anti_hermitian_n1_oracle(0.0).value;
            char buf[64];
            std::snprintf(buf, sizeof buf, "oracle_ratio=%.12g", ratio);
            anti_status = buf;
        }
        rows.push_back({"K_anti", 1, n, "lambda=0", eval_K_anti(n, zero), "", anti_status});
        std::string l_status;
        if (n >= 2) {
            const OracleCheck oc = fourth_domain_reduction_oracle(n, zero, zero);
            l_status = oc.rel_error() < 1e-6 ? "p_oracle=ok" : "p_oracle=differ";
        }
        rows.push_back(
            {"L_four", 1, n, "alpha=0;beta=0", eval_L_four(n, zero, zero), "", l_status});
    }
    return rows;
}

int run_table(long max_m, long max_n, const std::string& format, int precision,
              const OutputTarget& out) {
    const std::vector<TableRow> rows = build_table(max_m, max_n);
    std::string text;
    if (format == "csv") {
        text = "family,m,n,params,exact,decimal,variant,oracle_status\n";
        for (const TableRow& r : rows) {
            text += r.family + "," + std::to_string(r.m) + "," + std::to_string(r.n) + "," +
                    r.params + "," + r.exact.to_string() + "," +
                    r.exact.to_decimal_string(precision) + "," + r.variant + "," +
                    r.oracle_status + "\n";
        }
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const TableRow& r : rows) {
            arr.push_back({{"family", r.family},
                           {"m", r.m},
                           {"n", r.n},
                           {"params", r.params},
                           {"exact", r.exact.to_string()},
                           {"decimal", r.exact.to_decimal_string(precision)},
                           {"variant", r.variant},
                           {"oracle_status", r.oracle_status}});
        }
        text = arr.dump(2) + "\n";
    }
    out.write(text);
    return kExitOk;
}

int run_discrepancies(std::uint64_t samples, std::uint64_t seed, int workers,
                      const OutputTarget& out) {
    DiscrepancyMCInputs mc;
    if (samples > 0) {
        const MCEstimate vol = mc_volume(DomainSpec::make(DomainKind::RIV, 1, 2), samples,
                                         seed, workers);
        mc.riv2_volume_mean = vol.mean;
        mc.riv2_volume_std_error = vol.std_error;
        const MCEstimate vol3 = mc_volume(DomainSpec::make(DomainKind::RIV, 1, 3), samples,
                                          seed, workers);
        mc.riv3_volume_mean = vol3.mean;
        mc.riv3_volume_std_error = vol3.std_error;
        FormulaFamily h2{FamilyTag::H_herm, 1, 2, Rational(6), Rational(0)};
        const MCEstimate hest = mc_integral_unbounded(h2, samples, seed, workers);
        mc.h2_mean = hest.mean;
        mc.h2_std_error = hest.std_error;
    }
    out.write(build_discrepancy_report(mc).dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact volumes and integrals of the quaternionic classical domains, "
                 "with Monte Carlo and quadrature verification"};
    app.require_subcommand(1);

    std::string domain, format = "json", out_path;
    FamilyArgs fam;
    bool exact_flag = false;
    int precision = 12;
    int workers = 1;
    std::string samples_text = "1e6";
    std::uint64_t seed = default_seed();

    CLI::App* volume = app.add_subcommand("volume", "Exact volume of a classical domain");
    volume->add_option("--domain", domain, "RI, RII, RIII, SYM or RIV")->required();
    volume->add_option("--m", fam.m, "row count (RI only)");
    volume->add_option("--n", fam.n, "shape parameter")->required();
    volume->add_flag("--exact", exact_flag, "print the canonical exact form");
    volume->add_option("--precision", precision, "significant digits for decimals");

    CLI::App* integral =
        app.add_subcommand("integral", "Exact weighted integral of a formula family");
    integral->add_option("--family", fam.family, "J, K, H, I, JSYM, KANTI or L")->required();
    integral->add_option("--m", fam.m, "row count (J, K)");
    integral->add_option("--n", fam.n, "shape parameter")->required();
    integral->add_option("--lambda", fam.lambda, "exponent as a rational, e.g. 3/2");
    integral->add_option("--alpha", fam.alpha, "exponent as a rational (K, H, L)");
    integral->add_option("--beta", fam.beta, "second exponent as a rational (L)");
    integral->add_option("--precision", precision, "significant digits for decimals");

    CLI::App* verify =
        app.add_subcommand("verify", "Monte Carlo check of a closed form; JSON report");
    verify->add_option("--domain", domain, "verify a domain volume");
    verify->add_option("--family", fam.family, "verify a weighted family integral");
    verify->add_option("--m", fam.m, "row count");
    verify->add_option("--n", fam.n, "shape parameter");
    verify->add_option("--lambda", fam.lambda, "exponent (bounded families)");
    verify->add_option("--alpha", fam.alpha, "exponent (K, H, L)");
    verify->add_option("--beta", fam.beta, "second exponent (L)");
    verify->add_option("--samples", samples_text, "sample count, scientific ok (1e7)");
    verify->add_option("--seed", seed, "RNG seed (default: QUATDOM_SEED or 42)");
    verify->add_option("--workers", workers, "worker threads");
    verify->add_option("--out", out_path, "write the JSON report here");
    verify->add_option("--format", format, "json (fixed)");

    CLI::App* table = app.add_subcommand("table", "Closed forms for all families");
    long max_m = 2, max_n = 2;
    table->add_option("--max-m", max_m, "largest row count");
    table->add_option("--max-n", max_n, "largest shape parameter");
    table->add_option("--format", format, "csv or json");
    table->add_option("--out", out_path, "write here instead of stdout");
    table->add_option("--precision", precision, "significant digits for decimals");

    CLI::App* disc = app.add_subcommand(
        "discrepancies", "Machine-readable adjudication of the flagged formula defects");
    std::string disc_samples = "0";
    disc->add_option("--samples", disc_samples,
                     "fold Monte Carlo evidence in (0 = exact/quadrature only)");
    disc->add_option("--seed", seed, "RNG seed");
    disc->add_option("--workers", workers, "worker threads");
    disc->add_option("--out", out_path, "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        const OutputTarget out{out_path};
        if (volume->parsed()) return run_volume(domain, fam.m, fam.n, exact_flag, precision);
        if (integral->parsed()) return run_integral(fam, precision);
        if (verify->parsed()) {
            if (domain.empty() == fam.family.empty())
                throw std::invalid_argument("verify: pass exactly one of --domain/--family");
            return run_verify(domain, fam, parse_samples(samples_text), seed, workers, out);
        }
        if (table->parsed()) return run_table(max_m, max_n, format, precision, out);
        if (disc->parsed())
            return run_discrepancies(parse_samples_or_zero(disc_samples), seed, workers, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
