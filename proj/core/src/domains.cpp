#include "quatdom/domains.hpp"

#include <cmath>
#include <stdexcept>

namespace quatdom {

namespace {

constexpr double kDiscClamp = -1e-12;

bool rational_is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace

const char* to_string(DomainKind kind) {
    switch (kind) {
        case DomainKind::RI: return "RI";
        case DomainKind::RII: return "RII";
        case DomainKind::RIII: return "RIII";
        case DomainKind::Sym: return "SYM";
        case DomainKind::RIV: return "RIV";
    }
    return "?";
}

DomainKind domain_from_string(const std::string& name) {
    if (name == "RI") return DomainKind::RI;
    if (name == "RII") return DomainKind::RII;
    if (name == "RIII") return DomainKind::RIII;
    if (name == "SYM" || name == "Sym") return DomainKind::Sym;
    if (name == "RIV") return DomainKind::RIV;
    throw std::invalid_argument("unknown domain '" + name + "'");
}

DomainSpec DomainSpec::make(DomainKind kind, long m, long n) {
    if (n < 1 || (kind == DomainKind::RI && m < 1))
        throw std::invalid_argument("domain shape parameters must be >= 1");
    DomainSpec s;
    s.kind = kind;
    s.m = kind == DomainKind::RI ? m : 1;
    s.n = n;
    return s;
}

long DomainSpec::real_dim() const {
    switch (kind) {
        case DomainKind::RI: return 4 * m * n;
        case DomainKind::RII: return n * (2 * n - 1);
        case DomainKind::RIII: return n * (2 * n + 1);
        case DomainKind::Sym: return 2 * n * (n + 1);
        case DomainKind::RIV: return 4 * n;
    }
    return 0;
}

double DomainSpec::box_volume() const { return std::pow(2.0, double(real_dim())); }

std::string DomainSpec::shape_string() const {
    if (kind == DomainKind::RI)
        return std::string(to_string(kind)) + "(" + std::to_string(m) + "," +
               std::to_string(n) + ")";
    return std::string(to_string(kind)) + "(" + std::to_string(n) + ")";
}

ExactValue domain_volume(const DomainSpec& spec) {
    switch (spec.kind) {
        case DomainKind::RI: return vol_RI(spec.m, spec.n);
        case DomainKind::RII: return vol_RII(spec.n);
        case DomainKind::RIII: return vol_RIII(spec.n);
        case DomainKind::Sym: return vol_Sym(spec.n);
        case DomainKind::RIV: return vol_RIV(spec.n);
    }
    throw std::logic_error("unreachable");
}

DomainSpec domain_for(const FormulaFamily& family) {
    switch (family.tag) {
        case FamilyTag::J_rect:
        case FamilyTag::K_rect: return DomainSpec::make(DomainKind::RI, family.m, family.n);
        case FamilyTag::H_herm:
        case FamilyTag::I_herm: return DomainSpec::make(DomainKind::RII, 1, family.n);
        case FamilyTag::J_sym: return DomainSpec::make(DomainKind::Sym, 1, family.n);
        case FamilyTag::K_anti: return DomainSpec::make(DomainKind::RIII, 1, family.n);
        case FamilyTag::L_four: return DomainSpec::make(DomainKind::RIV, 1, family.n);
    }
    throw std::logic_error("unreachable");
}

namespace {

/// Writes the structured entries into `out` (row-major rows x cols for the
/// spec). Returns the matrix row count.
std::size_t materialize_entries(const DomainSpec& spec, std::span<const double> c,
                                std::vector<Quaternion>& out) {
    const std::size_t n = std::size_t(spec.n);
    std::size_t idx = 0;
    switch (spec.kind) {
        case DomainKind::RI: {
            const std::size_t m = std::size_t(spec.m);
            out.resize(m * n);
            for (std::size_t t = 0; t < m * n; ++t, idx += 4)
                out[t] = {c[idx], c[idx + 1], c[idx + 2], c[idx + 3]};
            return m;
        }
        case DomainKind::RIV: {
            out.resize(n);
            for (std::size_t t = 0; t < n; ++t, idx += 4)
                out[t] = {c[idx], c[idx + 1], c[idx + 2], c[idx + 3]};
            return 1;
        }
        case DomainKind::RII: {
            out.assign(n * n, Quaternion{});
            for (std::size_t i = 0; i < n; ++i) out[i * n + i] = Quaternion(c[idx++]);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j, idx += 4) {
                    const Quaternion q{c[idx], c[idx + 1], c[idx + 2], c[idx + 3]};
                    out[i * n + j] = q;
                    out[j * n + i] = conj(q);
                }
            return n;
        }
        case DomainKind::RIII: {
            out.assign(n * n, Quaternion{});
            for (std::size_t i = 0; i < n; ++i, idx += 3)
                out[i * n + i] = {0.0, c[idx], c[idx + 1], c[idx + 2]};
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j, idx += 4) {
                    const Quaternion q{c[idx], c[idx + 1], c[idx + 2], c[idx + 3]};
                    out[i * n + j] = q;
                    out[j * n + i] = -conj(q);
                }
            return n;
        }
        case DomainKind::Sym: {
            out.assign(n * n, Quaternion{});
            for (std::size_t i = 0; i < n; ++i, idx += 4)
                out[i * n + i] = {c[idx], c[idx + 1], c[idx + 2], c[idx + 3]};
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j, idx += 4) {
                    const Quaternion q{c[idx], c[idx + 1], c[idx + 2], c[idx + 3]};
                    out[i * n + j] = q;
                    out[j * n + i] = q;
                }
            return n;
        }
    }
    throw std::logic_error("unreachable");
}

StructureTag tag_for(DomainKind kind) {
    switch (kind) {
        case DomainKind::RI:
        case DomainKind::RIV: return StructureTag::general;
        case DomainKind::RII: return StructureTag::hermitian;
        case DomainKind::RIII: return StructureTag::anti_hermitian;
        case DomainKind::Sym: return StructureTag::symmetric;
    }
    return StructureTag::general;
}

}  // namespace

QMatrix materialize(const DomainSpec& spec, std::span<const double> coords) {
    if (long(coords.size()) != spec.real_dim())
        throw std::invalid_argument("materialize: coordinate count does not match " +
                                    spec.shape_string());
    std::vector<Quaternion> entries;
    const std::size_t rows = materialize_entries(spec, coords, entries);
    const std::size_t cols = entries.size() / rows;
    return QMatrix(rows, cols, std::move(entries), tag_for(spec.kind));
}

std::vector<double> flatten(const DomainSpec& spec, const QMatrix& q) {
    std::vector<double> c;
    c.reserve(std::size_t(spec.real_dim()));
    const auto push = [&](const Quaternion& v) {
        c.push_back(v.w);
        c.push_back(v.x);
        c.push_back(v.y);
        c.push_back(v.z);
    };
    const std::size_t n = std::size_t(spec.n);
    switch (spec.kind) {
        case DomainKind::RI:
        case DomainKind::RIV:
            for (const auto& v : q.entries()) push(v);
            break;
        case DomainKind::RII:
            for (std::size_t i = 0; i < n; ++i) c.push_back(q.at(i, i).w);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) push(q.at(i, j));
            break;
        case DomainKind::RIII:
            for (std::size_t i = 0; i < n; ++i) {
                c.push_back(q.at(i, i).x);
                c.push_back(q.at(i, i).y);
                c.push_back(q.at(i, i).z);
            }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) push(q.at(i, j));
            break;
        case DomainKind::Sym:
            for (std::size_t i = 0; i < n; ++i) push(q.at(i, i));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) push(q.at(i, j));
            break;
    }
    return c;
}

DomainEvaluator::DomainEvaluator(const FormulaFamily& family)
    : family_(family),
      spec_(domain_for(family)),
      exponent_(family.lambda.get_d()),
      beta_exponent_(family.beta.get_d()),
      indicator_only_(false) {}

DomainEvaluator::DomainEvaluator(const DomainSpec& spec)
    : family_{FamilyTag::J_rect, spec.m, spec.n, Rational(0), Rational(0)},
      spec_(spec),
      exponent_(0.0),
      beta_exponent_(0.0),
      indicator_only_(true) {}

void DomainEvaluator::materialize_into(std::span<const double> coords) {
    materialize_entries(spec_, coords, q_);
}

void DomainEvaluator::build_form(double sign) {
    // form = I + sign * Q adj(Q); lower triangle only (Hermitian).
    const std::size_t rows = spec_.kind == DomainKind::RI ? std::size_t(spec_.m)
                                                          : std::size_t(spec_.n);
    const std::size_t cols = q_.size() / rows;
    form_.assign(rows * rows, Quaternion{});
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k <= i; ++k) {
            Quaternion s{};
            for (std::size_t j = 0; j < cols; ++j) s += q_[i * cols + j] * conj(q_[k * cols + j]);
            form_[i * rows + k] = s * sign;
        }
        form_[i * rows + i] += Quaternion::one();
    }
}

double DomainEvaluator::form_cholesky_det() {
    const std::size_t rows = spec_.kind == DomainKind::RI ? std::size_t(spec_.m)
                                                          : std::size_t(spec_.n);
    const std::size_t n = rows;
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        max_diag = std::max(max_diag, std::abs(form_[i * n + i].w));
    const double tol = 1e-12 * max_diag;

    chol_.assign(n * n, Quaternion{});
    double det = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        double d = form_[j * n + j].w;
        for (std::size_t k = 0; k < j; ++k) d -= norm_sq(chol_[j * n + k]);
        if (d <= tol) return -1.0;
        det *= d;
        const double inv = 1.0 / std::sqrt(d);
        chol_[j * n + j] = Quaternion(std::sqrt(d));
        for (std::size_t i = j + 1; i < n; ++i) {
            Quaternion s = form_[i * n + j];
            for (std::size_t k = 0; k < j; ++k) s -= chol_[i * n + k] * conj(chol_[j * n + k]);
            chol_[i * n + j] = s * inv;
        }
    }
    return det;
}

double DomainEvaluator::form_cholesky_det_unit_floor() {
    const std::size_t n = spec_.kind == DomainKind::RI ? std::size_t(spec_.m)
                                                       : std::size_t(spec_.n);
    chol_.assign(n * n, Quaternion{});
    double det = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        double d = form_[j * n + j].w;
        for (std::size_t k = 0; k < j; ++k) d -= norm_sq(chol_[j * n + k]);
        if (d < 1.0) d = 1.0;
        det *= d;
        const double inv = 1.0 / std::sqrt(d);
        chol_[j * n + j] = Quaternion(std::sqrt(d));
        for (std::size_t i = j + 1; i < n; ++i) {
            Quaternion s = form_[i * n + j];
            for (std::size_t k = 0; k < j; ++k) s -= chol_[i * n + k] * conj(chol_[j * n + k]);
            chol_[i * n + j] = s * inv;
        }
    }
    return det;
}

double DomainEvaluator::riv_weight(std::span<const double> coords) const {
    double t = 0.0;
    Quaternion sq{};
    const std::size_t n = std::size_t(spec_.n);
    for (std::size_t i = 0; i < n; ++i) {
        const Quaternion q{coords[4 * i], coords[4 * i + 1], coords[4 * i + 2],
                           coords[4 * i + 3]};
        t += norm_sq(q);
        sq += q * q;
    }
    if (t >= 1.0) return 0.0;
    double disc = t * t - norm_sq(sq);
    if (disc < 0.0) {
        if (disc < kDiscClamp) return 0.0;  // outside by convention
        disc = 0.0;
    }
    const double s = std::sqrt(disc);
    if (1.0 - t <= s) return 0.0;
    if (indicator_only_ || family_.tag != FamilyTag::L_four) return 1.0;
    return std::pow(1.0 - t - s, exponent_) * std::pow(1.0 - t + s, beta_exponent_);
}

bool DomainEvaluator::contains(std::span<const double> coords) {
    if (long(coords.size()) != spec_.real_dim())
        throw std::invalid_argument("contains: coordinate count does not match " +
                                    spec_.shape_string());
    if (spec_.kind == DomainKind::RIV) return riv_weight(coords) > 0.0;
    materialize_into(coords);
    build_form(-1.0);
    return form_cholesky_det() > 0.0;
}

double DomainEvaluator::integrand_or_zero(std::span<const double> coords) {
    if (spec_.kind == DomainKind::RIV) return riv_weight(coords);
    materialize_into(coords);
    build_form(-1.0);
    const double det = form_cholesky_det();
    if (det < 0.0) return 0.0;
    if (indicator_only_ || exponent_ == 0.0) return 1.0;
    return std::pow(det, exponent_);
}

double DomainEvaluator::decay_integrand(std::span<const double> coords) {
    if (family_.tag != FamilyTag::K_rect && family_.tag != FamilyTag::H_herm)
        throw std::logic_error("decay_integrand: bounded family");
    materialize_into(coords);
    build_form(+1.0);
    const double det = form_cholesky_det_unit_floor();
    return std::pow(det, -exponent_);
}

bool contains(const DomainSpec& spec, std::span<const double> coords) {
    DomainEvaluator eval(spec);
    return eval.contains(coords);
}

double integrand(const FormulaFamily& family, std::span<const double> coords) {
    DomainEvaluator eval(family);
    if (family.tag == FamilyTag::K_rect || family.tag == FamilyTag::H_herm)
        return eval.decay_integrand(coords);
    if (eval.contains(coords)) return eval.integrand_or_zero(coords);

    // Outside the domain the defining base turns negative; only an integer
    // exponent keeps the power well defined.
    if (!rational_is_integer(family.lambda) ||
        (family.tag == FamilyTag::L_four && !rational_is_integer(family.beta)))
        throw std::domain_error("integrand: point outside the domain of " +
                                std::string(to_string(family.tag)));

    const double expo = family.lambda.get_d();
    if (family.tag == FamilyTag::L_four) {
        const DomainSpec& spec = eval.spec();
        double t = 0.0;
        Quaternion sq{};
        for (long i = 0; i < spec.n; ++i) {
            const Quaternion q{coords[4 * i], coords[4 * i + 1], coords[4 * i + 2],
                               coords[4 * i + 3]};
            t += norm_sq(q);
            sq += q * q;
        }
        const double s = std::sqrt(std::max(0.0, t * t - norm_sq(sq)));
        return std::pow(1.0 - t - s, expo) * std::pow(1.0 - t + s, family.beta.get_d());
    }
    const QMatrix q = materialize(eval.spec(), coords);
    const QMatrix form = QMatrix::identity(q.rows())
                             .subtract(q.multiply(q.adjoint()))
                             .with_tag(StructureTag::hermitian);
    return std::pow(qdet_hermitian(form), expo);
}

}  // namespace quatdom
