#include "quatdom/closed_forms.hpp"

#include <stdexcept>

namespace quatdom {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::domain_error(msg);
}

ExactValue pi_power(long half_power) { return ExactValue(Rational(1), half_power); }

}  // namespace

const char* to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::J_rect: return "J_rect";
        case FamilyTag::K_rect: return "K_rect";
        case FamilyTag::H_herm: return "H_herm";
        case FamilyTag::I_herm: return "I_herm";
        case FamilyTag::J_sym: return "J_sym";
        case FamilyTag::K_anti: return "K_anti";
        case FamilyTag::L_four: return "L_four";
    }
    return "?";
}

FamilyTag family_from_string(const std::string& name) {
    if (name == "J" || name == "J_rect") return FamilyTag::J_rect;
    if (name == "K" || name == "K_rect") return FamilyTag::K_rect;
    if (name == "H" || name == "H_herm") return FamilyTag::H_herm;
    if (name == "I" || name == "I_herm") return FamilyTag::I_herm;
    if (name == "JSYM" || name == "J_sym") return FamilyTag::J_sym;
    if (name == "KANTI" || name == "K_anti") return FamilyTag::K_anti;
    if (name == "L" || name == "L_four") return FamilyTag::L_four;
    throw std::invalid_argument("unknown family '" + name + "'");
}

const char* to_string(FormulaSource source) {
    switch (source) {
        case FormulaSource::statement: return "statement";
        case FormulaSource::proof_product: return "proof_product";
        case FormulaSource::proof_recursion: return "proof_recursion";
    }
    return "?";
}

std::string FormulaFamily::params_string() const {
    std::string out;
    switch (tag) {
        case FamilyTag::J_rect:
        case FamilyTag::K_rect:
            out = "m=" + std::to_string(m) + ",n=" + std::to_string(n);
            break;
        default:
            out = "n=" + std::to_string(n);
            break;
    }
    const char* pname =
        (tag == FamilyTag::K_rect || tag == FamilyTag::H_herm || tag == FamilyTag::L_four)
            ? "alpha"
            : "lambda";
    out += std::string(",") + pname + "=" + lambda.get_str();
    if (tag == FamilyTag::L_four) out += ",beta=" + beta.get_str();
    return out;
}

ExactValue eval_J_rect(long m, long n, const Rational& lambda) {
    require(m >= 1 && n >= 1, "J_rect: need m, n >= 1");
    require(lambda > -1, "J_rect: need lambda > -1");
    std::vector<Rational> num, den;
    for (long j = 1; j <= n; ++j) num.push_back(lambda + (2 * j - 1));
    for (long k = 1; k <= m; ++k) num.push_back(lambda + (2 * k - 1));
    for (long l = 1; l <= n + m; ++l) den.push_back(lambda + (2 * l - 1));
    return pi_power(4 * m * n) * gamma_product(num, den);
}

ExactValue eval_J_rect_peeled(long m, long n, const Rational& lambda) {
    require(m >= 1 && n >= 1, "J_rect: need m, n >= 1");
    require(lambda > -1, "J_rect: need lambda > -1");
    ExactValue acc(Rational(1));
    for (long j = 1; j <= n; ++j) {
        std::vector<Rational> num{lambda + (2 * j - 1)};
        std::vector<Rational> den{lambda + (2 * j + 2 * m - 1)};
        acc = acc * pi_power(4 * m) * gamma_product(num, den);
    }
    return acc;
}

ExactValue eval_K_rect(long m, long n, const Rational& alpha) {
    require(m >= 1 && n >= 1, "K_rect: need m, n >= 1");
    require(alpha > 2 * m + 2 * n - 2, "K_rect: need alpha > 2m + 2n - 2");
    std::vector<Rational> num, den;
    for (long j = 0; j <= n - 1; ++j) {
        num.push_back(alpha - 2 * j - 2 * m);
        den.push_back(alpha - 2 * j);
    }
    return pi_power(4 * m * n) * gamma_product(num, den);
}

namespace {

ExactValue h_herm_product(long n, const Rational& alpha, bool step4_second_product) {
    std::vector<Rational> num, den;
    for (long j = 0; j <= n - 1; ++j) {
        num.push_back(alpha - 2 * j - Rational(1, 2));
        den.push_back(alpha - 2 * j);
    }
    for (long k = 0; k <= n - 2; ++k) {
        num.push_back(2 * alpha - 2 * n - (step4_second_product ? 4 * k : 2 * k) + 1);
        den.push_back(2 * alpha - 4 * k - 1);
    }
    ExactValue two_pow(Rational(1));
    for (long t = 0; t < n * (n - 1); ++t) two_pow = two_pow * ExactValue(Rational(2));
    return two_pow * pi_power(n * (2 * n - 1)) * gamma_product(num, den);
}

}  // namespace

ExactValue h_herm_recursion_coeff(long n, const Rational& alpha) {
    require(n >= 2, "recursion coefficient needs n >= 2");
    ExactValue four_pow(Rational(1));
    for (long t = 0; t < n - 1; ++t) four_pow = four_pow * ExactValue(Rational(4));
    std::vector<Rational> num{2 * alpha - 2 * n + 1, alpha - Rational(1, 2)};
    std::vector<Rational> den{alpha, 2 * alpha - 1};
    return four_pow * pi_power(4 * n - 3) * gamma_product(num, den);
}

ExactValue eval_H_herm(long n, const Rational& alpha, FormulaSource source) {
    require(n >= 1, "H_herm: need n >= 1");
    require(alpha > Rational(4 * n - 3, 2), "H_herm: need alpha > 2n - 3/2");
    switch (source) {
        case FormulaSource::statement:
            return h_herm_product(n, alpha, /*step4_second_product=*/false);
        case FormulaSource::proof_product:
            return h_herm_product(n, alpha, /*step4_second_product=*/true);
        case FormulaSource::proof_recursion: {
            // base case: a 1-D decay integral, sqrt(pi) Gamma(a-1/2) / Gamma(a)
            Rational a = alpha - 2 * (n - 1);
            std::vector<Rational> num{a - Rational(1, 2)};
            std::vector<Rational> den{a};
            ExactValue acc = pi_power(1) * gamma_product(num, den);
            for (long size = 2; size <= n; ++size) {
                const Rational level_alpha = alpha - 2 * (n - size);
                acc = h_herm_recursion_coeff(size, level_alpha) * acc;
            }
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<FormulaVariant> eval_H_herm_variants(long n, const Rational& alpha) {
    std::vector<FormulaVariant> out;
    out.push_back({FormulaSource::proof_recursion,
                   eval_H_herm(n, alpha, FormulaSource::proof_recursion)});
    out.push_back({FormulaSource::statement, eval_H_herm(n, alpha, FormulaSource::statement)});
    out.push_back({FormulaSource::proof_product,
                   eval_H_herm(n, alpha, FormulaSource::proof_product)});
    return out;
}

namespace {

ExactValue i_herm_product(long n, const Rational& lambda, bool step4_second_product) {
    std::vector<Rational> num, den;
    for (long j = 0; j <= n - 1; ++j) {
        num.push_back(lambda + 2 * j + 1);
        den.push_back(lambda + 2 * j + Rational(3, 2));
    }
    for (long k = 0; k <= n - 2; ++k) {
        num.push_back(2 * lambda + 4 * k + 2);
        den.push_back(2 * lambda + 2 * n + (step4_second_product ? 4 * k : 2 * k));
    }
    return pi_power(n * (2 * n - 1)) * gamma_product(num, den);
}

}  // namespace

ExactValue i_herm_recursion_coeff(long n, const Rational& lambda) {
    require(n >= 2, "recursion coefficient needs n >= 2");
    std::vector<Rational> num{lambda + 1, 2 * lambda + 2};
    std::vector<Rational> den{lambda + Rational(3, 2), 2 * lambda + 2 * n};
    return pi_power(4 * n - 3) * gamma_product(num, den);
}

ExactValue eval_I_herm(long n, const Rational& lambda) {
    require(n >= 1, "I_herm: need n >= 1");
    require(lambda > -1, "I_herm: need lambda > -1");
    return i_herm_product(n, lambda, /*step4_second_product=*/false);
}

ExactValue eval_I_herm_printed(long n, const Rational& lambda) {
    require(n >= 1, "I_herm: need n >= 1");
    require(lambda > -1, "I_herm: need lambda > -1");
    return i_herm_product(n, lambda, /*step4_second_product=*/true);
}

ExactValue vol_RII(long n) { return eval_I_herm(n, Rational(0)); }

ExactValue j_sym_recursion_coeff(long n, const Rational& lambda) {
    require(n >= 2, "recursion coefficient needs n >= 2");
    std::vector<Rational> num{2 * lambda + 5};
    std::vector<Rational> den{2 * lambda + 2 * n + 3};
    const ExactValue poles(Rational(1) / ((lambda + 1) * (lambda + 2)));
    return pi_power(4 * n) * poles * gamma_product(num, den);
}

ExactValue eval_J_sym(long n, const Rational& lambda) {
    require(n >= 1, "J_sym: need n >= 1");
    require(lambda > -1, "J_sym: need lambda > -1");
    // base case
    Rational mu = lambda + 2 * (n - 1);
    ExactValue acc = pi_power(4) * ExactValue(Rational(1) / ((mu + 1) * (mu + 2)));
    for (long size = 2; size <= n; ++size) {
        const Rational level_lambda = lambda + 2 * (n - size);
        acc = j_sym_recursion_coeff(size, level_lambda) * acc;
    }
    return acc;
}

ExactValue eval_J_sym_product(long n, const Rational& lambda) {
    require(n >= 1, "J_sym: need n >= 1");
    require(lambda > -1, "J_sym: need lambda > -1");
    Rational poles(1);
    for (long r = 1; r <= 2 * n; ++r) poles *= lambda + r;
    std::vector<Rational> num, den;
    for (long t = 0; t <= n - 2; ++t) {
        num.push_back(2 * lambda + 5 + 4 * t);      // 2l+5, 2l+9, ..., 2l+4n-3
        den.push_back(2 * lambda + 2 * n + 3 + 2 * t);  // 2l+2n+3, ..., 2l+4n-1
    }
    return pi_power(2 * n * (n + 1)) * ExactValue(Rational(1) / poles) *
           gamma_product(num, den);
}

ExactValue vol_Sym(long n) { return eval_J_sym(n, Rational(0)); }

ExactValue eval_K_anti(long n, const Rational& lambda) {
    require(n >= 1, "K_anti: need n >= 1");
    require(lambda > -1, "K_anti: need lambda > -1");
    std::vector<Rational> num, den;
    num.push_back(lambda + 1);
    den.push_back(lambda + make_rational(3 * n, 2) + 1);
    for (long j = 1; j <= n - 1; ++j) {
        num.push_back(2 * lambda + 3 * j + 1);
        den.push_back(2 * lambda + make_rational(3 * (n + j), 2) + 1);
    }
    // (pi^3 / 3)^(n(n+1)/4): n(n+1)/2 is always an integer
    const long half = n * (n + 1) / 2;
    return ExactValue(Rational(1), 3 * half, -half) * gamma_product(num, den);
}

ExactValue vol_RIII(long n) { return eval_K_anti(n, Rational(0)); }

ExactValue eval_L_four(long n, const Rational& alpha, const Rational& beta) {
    require(n >= 1, "L_four: need n >= 1");
    require(alpha > -1, "L_four: need alpha > -1");
    require(beta > -(n + alpha), "L_four: need beta > -(n + alpha)");
    if (n == 1) {
        const Rational s = alpha + beta;
        return pi_power(4) * ExactValue(Rational(1) / ((s + 1) * (s + 2)));
    }
    std::vector<Rational> num{Rational(n), alpha + 1, 1 + n + alpha + beta};
    std::vector<Rational> den{make_rational(n, 2), make_rational(3 * (n - 1), 2),
                              alpha + n + 1, 2 * n + alpha + beta + 1, Rational(5, 2) - n};
    ExactValue prefactor = pi_power(4 * n + 2) * gamma_product(num, den);
    {
        // 2^(5-4n)
        ExactValue two_pow(Rational(1));
        for (long t = 0; t < 4 * n - 5; ++t) two_pow = two_pow * ExactValue(Rational(2));
        prefactor = prefactor / two_pow;
    }
    Rational sum(0);
    for (long i = 1; i <= n - 1; ++i) {
        const ExactValue binom = binomial_exact(2 * n - 3, 2 * i - 1);
        const ExactValue f = hyp3f2_terminating(i, Rational(n), 1 + n + alpha + beta,
                                                alpha + n + 1, Rational(5, 2) - n);
        sum += binom.coeff() * f.coeff();
    }
    return prefactor * ExactValue(sum);
}

ExactValue vol_RIV(long n) { return eval_L_four(n, Rational(0), Rational(0)); }

ExactValue vol_RI(long m, long n) { return eval_J_rect(m, n, Rational(0)); }

}  // namespace quatdom
