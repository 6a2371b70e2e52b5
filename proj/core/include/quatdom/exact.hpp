#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace quatdom {

using Rational = mpq_class;

/// n/2 stored as the numerator of halves; exact arithmetic and comparison.
struct HalfInt {
    long twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(long twice_value) : twice(twice_value) {}

    static constexpr HalfInt from_int(long n) { return HalfInt(2 * n); }

    bool is_integer() const { return twice % 2 == 0; }
    long integer_value() const;  // throws unless integral

    double to_double() const { return 0.5 * double(twice); }
    Rational to_rational() const;

    HalfInt operator+(HalfInt o) const { return HalfInt(twice + o.twice); }
    HalfInt operator-(HalfInt o) const { return HalfInt(twice - o.twice); }
    HalfInt operator-() const { return HalfInt(-twice); }
    auto operator<=>(const HalfInt&) const = default;

    std::string str() const;
};

/// Exact scalar of the form coeff * pi^(pi_half/2) * 3^(three_half/2) with a
/// fully reduced rational coefficient. Zero always carries both powers 0.
/// The codomain of every closed-form evaluator in this project.
class ExactValue {
public:
    ExactValue() : coeff_(0) {}
    explicit ExactValue(Rational coeff, long pi_half = 0, long three_half = 0);
    static ExactValue integer(long v) { return ExactValue(Rational(v)); }

    const Rational& coeff() const { return coeff_; }
    long pi_half_power() const { return pi_half_; }
    long three_half_power() const { return three_half_; }

    bool is_zero() const { return coeff_ == 0; }

    ExactValue operator*(const ExactValue& o) const;
    ExactValue operator/(const ExactValue& o) const;  // throws on zero divisor
    ExactValue operator-() const;

    /// Defined only for operands sharing both powers (or a zero operand).
    ExactValue operator+(const ExactValue& o) const;
    ExactValue operator-(const ExactValue& o) const;

    bool operator==(const ExactValue& o) const;
    bool operator!=(const ExactValue& o) const { return !(*this == o); }

    /// The single lossy conversion out of the exact domain.
    double to_double() const;

    /// Canonical rendering, e.g. "1/2 * pi^(4/2) * 3^(-1/2)"; factors with a
    /// zero exponent are omitted, a bare rational renders as "p/q" or "p".
    std::string to_string() const;

    /// Decimal rendering at the requested number of significant digits.
    std::string to_decimal_string(int significant_digits = 12) const;

private:
    Rational coeff_;
    long pi_half_ = 0;
    long three_half_ = 0;
};

/// Gamma at an exact half-integer argument. Integer n >= 1 gives (n-1)!;
/// half-odd arguments give rational multiples of sqrt(pi), extended to
/// negative half-odd arguments through the recurrence. Poles (nonpositive
/// integers) throw.
ExactValue gamma_exact(HalfInt x);

/// Pochhammer symbol (x)_k as an exact rational, k >= 0.
Rational pochhammer(const Rational& x, long k);

/// Product of Gamma(a) over num_args divided by the product over den_args,
/// evaluated exactly. Arguments whose difference is an integer are reduced
/// pairwise through Pochhammer ratios, so rational (non-half-integer)
/// arguments are supported whenever they cancel; leftover arguments must be
/// half-integers.
ExactValue gamma_product(const std::vector<Rational>& num_args,
                         const std::vector<Rational>& den_args);

/// Terminating 3F2(1-i, b, c; d, e; -1): the series stops after i terms
/// because the first upper parameter is the nonpositive integer 1-i.
ExactValue hyp3f2_terminating(long i, const Rational& b, const Rational& c,
                              const Rational& d, const Rational& e);

/// Exact binomial coefficient, 0 <= k <= n.
ExactValue binomial_exact(long n, long k);

/// num/den in canonical (fully reduced) form; GMP requires canonical
/// operands, and the two-argument mpq constructor does not reduce.
Rational make_rational(long num, long den);

/// Parses "p/q" or "p" into an exact rational; rejects anything else
/// (notably decimal notation, which would silently lose exactness).
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& r);

bool is_half_integer(const Rational& r);

}  // namespace quatdom
