#pragma once

#include <span>
#include <string>
#include <vector>

#include "quatdom/closed_forms.hpp"
#include "quatdom/qmatrix.hpp"

namespace quatdom {

/// The five bounded integration domains. Points live in the centered unit box
/// per real coordinate; every member has all quaternion entries of norm < 1,
/// so plain rejection from the box is exact with box volume 2^real_dim.
enum class DomainKind { RI, RII, RIII, Sym, RIV };

const char* to_string(DomainKind kind);
DomainKind domain_from_string(const std::string& name);

struct DomainSpec {
    DomainKind kind;
    long m = 1;  // RI only
    long n = 1;

    long real_dim() const;
    double box_volume() const;  // 2^real_dim
    std::string shape_string() const;

    static DomainSpec make(DomainKind kind, long m, long n);
};

/// Exact volume of the domain per the closed forms (lambda = alpha = beta = 0).
ExactValue domain_volume(const DomainSpec& spec);

/// The bounded domain a family integrates over.
DomainSpec domain_for(const FormulaFamily& family);

/// Builds the structured matrix (or the 1 x n row vector for the fourth
/// domain) from the free real coordinates. Layout: diagonal entries first,
/// then the upper triangle row-major, four reals (w,x,y,z) per free
/// quaternion; structurally fixed components are omitted.
QMatrix materialize(const DomainSpec& spec, std::span<const double> coords);

/// Inverse of materialize; extraction of the free coordinates.
std::vector<double> flatten(const DomainSpec& spec, const QMatrix& q);

/// Membership through the defining positivity condition (positive definite
/// Hermitian form, or the scalar inequality for the fourth domain). Boundary
/// points within tolerance count as outside.
bool contains(const DomainSpec& spec, std::span<const double> coords);

/// The family's weight at a materialized point. Positive-power families
/// throw outside their domain (negative base under a fractional power);
/// use integrand_or_zero for sampling.
double integrand(const FormulaFamily& family, std::span<const double> coords);

/// Membership-fused weight: 0 outside the domain, det-power weight inside.
/// Allocation-free after construction; one instance per worker.
class DomainEvaluator {
public:
    explicit DomainEvaluator(const FormulaFamily& family);
    explicit DomainEvaluator(const DomainSpec& spec);  // indicator weight

    const DomainSpec& spec() const { return spec_; }

    bool contains(std::span<const double> coords);
    double integrand_or_zero(std::span<const double> coords);

    /// Weight for the decaying families (K_rect, H_herm) at an unbounded
    /// point; defined everywhere.
    double decay_integrand(std::span<const double> coords);

private:
    FormulaFamily family_;
    DomainSpec spec_;
    double exponent_;
    double beta_exponent_;
    bool indicator_only_;
    std::vector<Quaternion> q_;     // materialized matrix
    std::vector<Quaternion> form_;  // Hermitian form scratch
    std::vector<Quaternion> chol_;  // factor scratch

    void materialize_into(std::span<const double> coords);
    void build_form(double sign);
    /// det of the scratch form when positive definite, -1 otherwise
    double form_cholesky_det();
    /// det of the scratch form I + (PSD): every exact pivot is >= 1, so the
    /// computed pivots are floored there. Cancellation at extreme tangent
    /// coordinates would otherwise drive a pivot to ~0 and blow up the
    /// decaying weight.
    double form_cholesky_det_unit_floor();
    double riv_weight(std::span<const double> coords) const;
};

}  // namespace quatdom
