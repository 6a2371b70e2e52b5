#pragma once

#include <string>
#include <vector>

#include "quatdom/exact.hpp"

namespace quatdom {

/// The seven closed-form integral families. J_rect / I_herm / J_sym / K_anti /
/// L_four integrate over bounded domains; K_rect and H_herm decay over the
/// whole (matrix) space.
enum class FamilyTag { J_rect, K_rect, H_herm, I_herm, J_sym, K_anti, L_four };

const char* to_string(FamilyTag tag);
FamilyTag family_from_string(const std::string& name);

struct FormulaFamily {
    FamilyTag tag;
    long m = 1;  // used by J_rect / K_rect only
    long n = 1;
    Rational lambda = Rational(0);  // lambda, or alpha for K_rect / H_herm
    Rational beta = Rational(0);    // L_four only

    std::string params_string() const;
};

/// Which route produced a value: the printed closed form in the statement,
/// the printed final line of the derivation, or the unrolled recursion the
/// derivation itself establishes.
enum class FormulaSource { statement, proof_product, proof_recursion };

const char* to_string(FormulaSource source);

struct FormulaVariant {
    FormulaSource source;
    ExactValue value;
};

// -- Rectangular matrices ---------------------------------------------------

/// Integral of det(I - Q adj(Q))^lambda over the first domain, m x n
/// quaternionic Q. Exact for any rational lambda > -1.
ExactValue eval_J_rect(long m, long n, const Rational& lambda);

/// Same value assembled from the column-peeling product of 4m-ball integrals
/// (cross-check route; equals eval_J_rect exactly).
ExactValue eval_J_rect_peeled(long m, long n, const Rational& lambda);

/// Integral of det(I + Q adj(Q))^(-alpha) over all m x n quaternionic Q,
/// alpha > 2m + 2n - 2.
ExactValue eval_K_rect(long m, long n, const Rational& alpha);

// -- Hermitian matrices (decaying integrand) --------------------------------

/// Integral of det(I + Q^2)^(-alpha) over all n x n Hermitian quaternionic Q,
/// alpha > 2n - 3/2, alpha a half-integer. The statement product and the
/// final printed line of the derivation disagree for n >= 3; the unrolled
/// recursion adjudicates (it reproduces the statement product exactly).
ExactValue eval_H_herm(long n, const Rational& alpha, FormulaSource source);

std::vector<FormulaVariant> eval_H_herm_variants(long n, const Rational& alpha);

// -- Hermitian matrices (bounded domain) ------------------------------------

/// Integral of det(I - Q^2)^lambda over the second domain. The printed
/// statement's second product carries a step-4 argument that contradicts the
/// derivation's recursion; the recursion-consistent product (step-2) is the
/// production value, the printed form is exposed as proof_product for
/// discrepancy reporting.
ExactValue eval_I_herm(long n, const Rational& lambda);

/// The statement product exactly as printed (step-4 second product).
ExactValue eval_I_herm_printed(long n, const Rational& lambda);

ExactValue vol_RII(long n);

// -- Symmetric matrices ------------------------------------------------------

/// Integral of det(I - Q conj(Q))^lambda over symmetric quaternionic Q,
/// assembled by unrolling the derivation's recursion. The printed ellipsis
/// formula (numerator step 4, denominator step 2) reproduces it exactly.
ExactValue eval_J_sym(long n, const Rational& lambda);

/// The resolved-ellipsis closed product (cross-check route).
ExactValue eval_J_sym_product(long n, const Rational& lambda);

ExactValue vol_Sym(long n);

// -- Anti-Hermitian matrices -------------------------------------------------

/// Closed form for the third domain's weighted volume, as printed. The n = 1
/// quadrature oracle reveals a constant measure factor (ratio 1/sqrt(3));
/// the formula is reported as printed, never corrected.
ExactValue eval_K_anti(long n, const Rational& lambda);

ExactValue vol_RIII(long n);

// -- The fourth domain --------------------------------------------------------

/// Closed form for the fourth domain's two-factor integral; n = 1 is the
/// rational special case, n >= 2 uses the terminating 3F2 sum.
ExactValue eval_L_four(long n, const Rational& alpha, const Rational& beta);

ExactValue vol_RIV(long n);

ExactValue vol_RI(long m, long n);

// -- Recursion coefficients (exposed for the recursion cross-checker) --------

/// H_n(alpha) = coeff * H_{n-1}(alpha - 2).
ExactValue h_herm_recursion_coeff(long n, const Rational& alpha);

/// I_n(lambda) = coeff * I_{n-1}(lambda + 2).
ExactValue i_herm_recursion_coeff(long n, const Rational& lambda);

/// J_n(lambda) = coeff * J_{n-1}(lambda + 2)  (symmetric family).
ExactValue j_sym_recursion_coeff(long n, const Rational& lambda);

}  // namespace quatdom
