#include "quatdom/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace quatdom {

namespace {

// 160 digits; parsed into mpf at whatever precision decimal rendering needs.
const char* kPiDigits =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164"
    "062862089986280348253421170679821480865132823066470938446095505822317253"
    "5940812848111745028";

Rational rational_floor_remainder(const Rational& x, mpz_class& floor_out) {
    mpz_fdiv_q(floor_out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Rational frac = x - Rational(floor_out);
    frac.canonicalize();
    return frac;
}

}  // namespace

long HalfInt::integer_value() const {
    if (!is_integer()) throw std::domain_error("HalfInt: not an integer");
    return twice / 2;
}

Rational HalfInt::to_rational() const { return make_rational(twice, 2); }

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

ExactValue::ExactValue(Rational coeff, long pi_half, long three_half)
    : coeff_(std::move(coeff)), pi_half_(pi_half), three_half_(three_half) {
    coeff_.canonicalize();
    if (coeff_ == 0) {
        pi_half_ = 0;
        three_half_ = 0;
    }
}

ExactValue ExactValue::operator*(const ExactValue& o) const {
    return ExactValue(coeff_ * o.coeff_, pi_half_ + o.pi_half_, three_half_ + o.three_half_);
}

ExactValue ExactValue::operator/(const ExactValue& o) const {
    if (o.is_zero()) throw std::domain_error("ExactValue: division by zero");
    return ExactValue(coeff_ / o.coeff_, pi_half_ - o.pi_half_, three_half_ - o.three_half_);
}

ExactValue ExactValue::operator-() const {
    return ExactValue(-coeff_, pi_half_, three_half_);
}

ExactValue ExactValue::operator+(const ExactValue& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (pi_half_ != o.pi_half_ || three_half_ != o.three_half_)
        throw std::domain_error("ExactValue: addition across different power factors");
    return ExactValue(coeff_ + o.coeff_, pi_half_, three_half_);
}

ExactValue ExactValue::operator-(const ExactValue& o) const { return *this + (-o); }

bool ExactValue::operator==(const ExactValue& o) const {
    return coeff_ == o.coeff_ && pi_half_ == o.pi_half_ && three_half_ == o.three_half_;
}

double ExactValue::to_double() const {
    if (is_zero()) return 0.0;
    const double base = coeff_.get_d();
    return base * std::pow(M_PI, 0.5 * double(pi_half_)) *
           std::pow(3.0, 0.5 * double(three_half_));
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string ExactValue::to_string() const {
    if (is_zero()) return "0";
    std::string out = rational_to_string(coeff_);
    if (pi_half_ != 0) out += " * pi^(" + std::to_string(pi_half_) + "/2)";
    if (three_half_ != 0) out += " * 3^(" + std::to_string(three_half_) + "/2)";
    return out;
}

std::string ExactValue::to_decimal_string(int significant_digits) const {
    if (significant_digits < 1) significant_digits = 1;
    if (is_zero()) return "0";
    const int prec_bits = std::max(128, (significant_digits + 24) * 4);
    mpf_class value(0, prec_bits);
    {
        mpf_class num(coeff_.get_num(), prec_bits);
        mpf_class den(coeff_.get_den(), prec_bits);
        value = num / den;
    }
    if (pi_half_ != 0) {
        mpf_class pi(kPiDigits, prec_bits);
        mpf_class sqrt_pi(0, prec_bits);
        mpf_sqrt(sqrt_pi.get_mpf_t(), pi.get_mpf_t());
        mpf_class factor(1, prec_bits);
        const long p = pi_half_ < 0 ? -pi_half_ : pi_half_;
        for (long t = 0; t < p; ++t) factor *= sqrt_pi;
        if (pi_half_ > 0)
            value *= factor;
        else
            value /= factor;
    }
    if (three_half_ != 0) {
        mpf_class three(3, prec_bits);
        mpf_class sqrt3(0, prec_bits);
        mpf_sqrt(sqrt3.get_mpf_t(), three.get_mpf_t());
        mpf_class factor(1, prec_bits);
        const long p = three_half_ < 0 ? -three_half_ : three_half_;
        for (long t = 0; t < p; ++t) factor *= sqrt3;
        if (three_half_ > 0)
            value *= factor;
        else
            value /= factor;
    }

    mp_exp_t exp10 = 0;
    std::string digits = value.get_str(exp10, 10, std::size_t(significant_digits));
    bool negative = false;
    if (!digits.empty() && digits[0] == '-') {
        negative = true;
        digits.erase(digits.begin());
    }
    if (digits.empty()) return "0";
    // strip trailing zeros of the mantissa
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

    std::string body;
    const long e = long(exp10);
    if (e >= 1 && e <= significant_digits + 2) {
        if (std::size_t(e) >= digits.size()) {
            body = digits + std::string(std::size_t(e) - digits.size(), '0');
        } else {
            body = digits.substr(0, std::size_t(e)) + "." + digits.substr(std::size_t(e));
        }
    } else if (e <= 0 && e > -4) {
        body = "0." + std::string(std::size_t(-e), '0') + digits;
    } else {
        body = digits.substr(0, 1);
        if (digits.size() > 1) body += "." + digits.substr(1);
        body += "e" + std::to_string(e - 1);
    }
    return negative ? "-" + body : body;
}

ExactValue gamma_exact(HalfInt x) {
    if (x.is_integer()) {
        const long n = x.integer_value();
        if (n <= 0) throw std::domain_error("gamma_exact: pole at nonpositive integer " +
                                            std::to_string(n));
        Rational acc(1);
        for (long t = 2; t < n; ++t) acc *= t;
        return ExactValue(acc);
    }
    // Half-odd argument: walk the recurrence from Gamma(1/2) = sqrt(pi).
    Rational acc(1);
    if (x.twice > 1) {
        // Gamma(x) = (x-1)(x-2)...(1/2) * Gamma(1/2)
        for (long t = x.twice - 2; t >= 1; t -= 2) acc *= Rational(t, 2);
    } else if (x.twice < 1) {
        // Gamma(x) = Gamma(1/2) / (x (x+1) ... (-1/2))
        for (long t = x.twice; t <= -1; t += 2) acc /= Rational(t, 2);
    }
    return ExactValue(acc, 1);
}

Rational pochhammer(const Rational& x, long k) {
    if (k < 0) throw std::domain_error("pochhammer: negative order");
    Rational acc(1);
    Rational term = x;
    for (long t = 0; t < k; ++t) {
        acc *= term;
        term += 1;
    }
    return acc;
}

ExactValue gamma_product(const std::vector<Rational>& num_args,
                         const std::vector<Rational>& den_args) {
    // Group arguments by fractional part; within a group Gamma ratios reduce
    // to Pochhammer symbols, which stay rational for any rational argument.
    struct Group {
        std::vector<Rational> num, den;
    };
    std::map<std::string, Group> groups;
    for (const Rational& a : num_args) {
        mpz_class fl;
        const Rational frac = rational_floor_remainder(a, fl);
        groups[frac.get_str()].num.push_back(a);
    }
    for (const Rational& a : den_args) {
        mpz_class fl;
        const Rational frac = rational_floor_remainder(a, fl);
        groups[frac.get_str()].den.push_back(a);
    }

    ExactValue result(Rational(1));
    for (auto& [key, g] : groups) {
        std::sort(g.num.begin(), g.num.end());
        std::sort(g.den.begin(), g.den.end());
        const std::size_t paired = std::min(g.num.size(), g.den.size());
        for (std::size_t t = 0; t < paired; ++t) {
            const Rational& u = g.num[t];
            const Rational& v = g.den[t];
            const Rational diff = u - v;
            const long k = std::labs(long(mpz_get_si(diff.get_num_mpz_t())));
            Rational ratio;
            if (u >= v) {
                ratio = pochhammer(v, k);  // Gamma(u)/Gamma(v) = (v)_k
            } else {
                const Rational p = pochhammer(u, k);
                if (p == 0)
                    throw std::domain_error("gamma_product: pole encountered in ratio");
                ratio = Rational(1) / p;
            }
            if (ratio == 0) throw std::domain_error("gamma_product: vanishing gamma ratio");
            result = result * ExactValue(ratio);
        }
        for (std::size_t t = paired; t < g.num.size(); ++t) {
            const Rational& a = g.num[t];
            if (!is_half_integer(a))
                throw std::domain_error(
                    "gamma_product: unpaired non-half-integer gamma argument " + a.get_str());
            result = result * gamma_exact(HalfInt(2 * long(mpz_get_si(a.get_num_mpz_t())) /
                                                  long(mpz_get_si(a.get_den_mpz_t()))));
        }
        for (std::size_t t = paired; t < g.den.size(); ++t) {
            const Rational& a = g.den[t];
            if (!is_half_integer(a))
                throw std::domain_error(
                    "gamma_product: unpaired non-half-integer gamma argument " + a.get_str());
            result = result / gamma_exact(HalfInt(2 * long(mpz_get_si(a.get_num_mpz_t())) /
                                                  long(mpz_get_si(a.get_den_mpz_t()))));
        }
    }
    return result;
}

ExactValue hyp3f2_terminating(long i, const Rational& b, const Rational& c,
                              const Rational& d, const Rational& e) {
    if (i < 1) throw std::domain_error("hyp3f2_terminating: need i >= 1");
    const Rational a1 = Rational(1 - i);
    Rational sum(0);
    Rational term(1);  // k = 0 term
    for (long k = 0; k < i; ++k) {
        sum += term;
        // advance to k+1
        const Rational dk = d + k;
        const Rational ek = e + k;
        if (dk == 0 || ek == 0)
            throw std::domain_error("hyp3f2_terminating: lower-parameter pole inside range");
        term *= (a1 + k) * (b + k) * (c + k);
        term /= dk * ek * Rational(k + 1);
        term = -term;  // argument -1
    }
    return ExactValue(sum);
}

ExactValue binomial_exact(long n, long k) {
    if (k < 0 || k > n) throw std::domain_error("binomial_exact: k out of range");
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return ExactValue(Rational(out));
}

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto ok_part = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t t = start; t < s.size(); ++t)
            if (!std::isdigit(static_cast<unsigned char>(s[t]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!ok_part(text))
            throw std::invalid_argument("'" + text + "' is not an exact rational (use p or p/q)");
        return Rational(mpz_class(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!ok_part(num) || !ok_part(den))
        throw std::invalid_argument("'" + text + "' is not an exact rational (use p or p/q)");
    const mpz_class numz(num), denz(den);
    if (denz == 0) throw std::invalid_argument("'" + text + "': zero denominator");
    Rational r(numz, denz);
    r.canonicalize();
    return r;
}

bool is_half_integer(const Rational& r) {
    return r.get_den() == 1 || r.get_den() == 2;
}

}  // namespace quatdom
