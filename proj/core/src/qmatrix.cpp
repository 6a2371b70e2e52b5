#include "quatdom/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace quatdom {

namespace {

constexpr double kStructureTol = 1e-12;

[[noreturn]] void throw_dim(const char* what) {
    throw std::invalid_argument(std::string("qmatrix: ") + what);
}

}  // namespace

const char* to_string(StructureTag tag) {
    switch (tag) {
        case StructureTag::general: return "general";
        case StructureTag::hermitian: return "hermitian";
        case StructureTag::anti_hermitian: return "anti_hermitian";
        case StructureTag::symmetric: return "symmetric";
    }
    return "?";
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::multiply(const ComplexMatrix& other) const {
    if (cols_ != other.rows_) throw_dim("complex multiply dimension mismatch");
    ComplexMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::complex<double> aik = at(i, k);
            for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += aik * other.at(k, j);
        }
    return out;
}

ComplexMatrix ComplexMatrix::conjugate_transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

std::complex<double> ComplexMatrix::determinant() const {
    if (rows_ != cols_) throw_dim("determinant of non-square matrix");
    const std::size_t n = rows_;
    std::vector<std::complex<double>> lu = data_;
    auto e = [&](std::size_t i, std::size_t j) -> std::complex<double>& {
        return lu[i * n + j];
    };
    std::complex<double> det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(e(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(e(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(e(pivot, j), e(col, j));
            det = -det;
        }
        det *= e(col, col);
        const std::complex<double> inv = 1.0 / e(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::complex<double> f = e(r, col) * inv;
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) e(r, j) -= f * e(col, j);
        }
    }
    return det;
}

std::vector<double> ComplexMatrix::hermitian_eigenvalues() const {
    if (rows_ != cols_) throw_dim("eigenvalues of non-square matrix");
    const std::size_t n = rows_;
    std::vector<std::complex<double>> a = data_;
    auto e = [&](std::size_t i, std::size_t j) -> std::complex<double>& {
        return a[i * n + j];
    };

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += std::norm(e(i, j));
        if (off < 1e-28 * double(n) * std::max(1.0, std::norm(e(0, 0)))) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const std::complex<double> apq = e(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;
                const double app = e(p, p).real();
                const double aqq = e(q, q).real();
                // unitary rotation annihilating the (p,q) element
                const std::complex<double> phase = apq / mag;
                const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
                const double c = std::cos(theta);
                const std::complex<double> s = std::sin(theta) * phase;
                for (std::size_t k = 0; k < n; ++k) {
                    const std::complex<double> akp = e(k, p);
                    const std::complex<double> akq = e(k, q);
                    e(k, p) = c * akp - std::conj(s) * akq;
                    e(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const std::complex<double> apk = e(p, k);
                    const std::complex<double> aqk = e(q, k);
                    e(p, k) = c * apk - s * aqk;
                    e(q, k) = std::conj(s) * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = e(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw_dim("shape mismatch in diff");
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
        m = std::max(m, std::abs(data_[i] - other.data_[i]));
    return m;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries,
                 StructureTag tag)
    : rows_(rows), cols_(cols), tag_(tag), data_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw_dim("empty shapes are rejected");
    if (data_.size() != rows_ * cols_) throw_dim("entry count does not match shape");
    validate_tag();
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, StructureTag tag)
    : QMatrix(rows, cols, std::vector<Quaternion>(rows * cols), tag) {}

QMatrix QMatrix::identity(std::size_t n) {
    std::vector<Quaternion> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Quaternion::one();
    return QMatrix(n, n, std::move(e), StructureTag::hermitian);
}

void QMatrix::validate_tag() const {
    if (tag_ == StructureTag::general) return;
    if (rows_ != cols_) throw_dim("structured matrix must be square");
    const double tol = kStructureTol * std::max(1.0, max_abs_entry());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            const Quaternion& a = at(i, j);
            const Quaternion& b = at(j, i);
            Quaternion expect{};
            switch (tag_) {
                case StructureTag::hermitian: expect = conj(a); break;
                case StructureTag::anti_hermitian: expect = -conj(a); break;
                case StructureTag::symmetric: expect = a; break;
                default: return;
            }
            const double diff = std::sqrt(norm_sq(b - expect));
            if (diff > tol)
                throw std::invalid_argument(std::string("qmatrix: entries violate the '") +
                                            to_string(tag_) + "' structure");
        }
    }
}

QMatrix QMatrix::with_tag(StructureTag tag) const {
    return QMatrix(rows_, cols_, data_, tag);
}

QMatrix QMatrix::multiply(const QMatrix& other) const {
    if (cols_ != other.rows_) throw_dim("multiply dimension mismatch");
    std::vector<Quaternion> out(rows_ * other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Quaternion& aik = at(i, k);
            if (aik == Quaternion::zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out[i * other.cols_ + j] += aik * other.at(k, j);
        }
    return QMatrix(rows_, other.cols_, std::move(out));
}

QMatrix QMatrix::adjoint() const {
    std::vector<Quaternion> out(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[j * rows_ + i] = conj(at(i, j));
    return QMatrix(cols_, rows_, std::move(out));
}

QMatrix QMatrix::transpose() const {
    std::vector<Quaternion> out(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[j * rows_ + i] = at(i, j);
    return QMatrix(cols_, rows_, std::move(out));
}

QMatrix QMatrix::conjugate() const {
    std::vector<Quaternion> out(rows_ * cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out[i] = conj(data_[i]);
    return QMatrix(rows_, cols_, std::move(out));
}

QMatrix QMatrix::add(const QMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw_dim("add shape mismatch");
    std::vector<Quaternion> out(data_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.data_[i];
    return QMatrix(rows_, cols_, std::move(out));
}

QMatrix QMatrix::subtract(const QMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw_dim("subtract shape mismatch");
    std::vector<Quaternion> out(data_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= other.data_[i];
    return QMatrix(rows_, cols_, std::move(out));
}

QMatrix QMatrix::negate() const {
    std::vector<Quaternion> out(data_.size());
    for (std::size_t i = 0; i < data_.size(); ++i) out[i] = -data_[i];
    return QMatrix(rows_, cols_, std::move(out));
}

QMatrix QMatrix::scale(double s) const {
    std::vector<Quaternion> out(data_);
    for (auto& q : out) q *= s;
    return QMatrix(rows_, cols_, std::move(out));
}

double QMatrix::max_abs_entry() const {
    double m = 0.0;
    for (const auto& q : data_) m = std::max(m, norm_sq(q));
    return std::sqrt(m);
}

double QMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& q : data_) s += norm_sq(q);
    return std::sqrt(s);
}

double QMatrix::max_abs_diff(const QMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw_dim("shape mismatch in diff");
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
        m = std::max(m, std::sqrt(norm_sq(data_[i] - other.data_[i])));
    return m;
}

QMatrix qmat_mul(const QMatrix& a, const QMatrix& b) { return a.multiply(b); }

QMatrix adjoint(const QMatrix& a) { return a.adjoint(); }

ComplexMatrix embed_matrix(const QMatrix& a) {
    ComplexMatrix out(2 * a.rows(), 2 * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const EmbeddedScalar g = embed_scalar(a.at(i, j));
            out.at(2 * i, 2 * j) = g.a;
            out.at(2 * i, 2 * j + 1) = g.b;
            out.at(2 * i + 1, 2 * j) = g.c;
            out.at(2 * i + 1, 2 * j + 1) = g.d;
        }
    return out;
}

namespace {

/// LDL^* pivots of a Hermitian quaternionic matrix (no pivoting). Fails on a
/// near-zero leading pivot; succeeds almost surely for generic input.
std::optional<std::vector<double>> ldl_pivots(const QMatrix& h) {
    const std::size_t n = h.rows();
    std::vector<Quaternion> a(h.entries());
    auto e = [&](std::size_t i, std::size_t j) -> Quaternion& { return a[i * n + j]; };
    const double scale = std::max(1.0, h.max_abs_entry());
    std::vector<double> d(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double dk = e(k, k).w;
        if (std::abs(dk) <= 1e-13 * scale) return std::nullopt;
        d[k] = dk;
        for (std::size_t i = k + 1; i < n; ++i) e(i, k) *= 1.0 / dk;  // now L(i,k)
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j <= i; ++j)
                e(i, j) -= e(i, k) * (dk * conj(e(j, k)));
    }
    return d;
}

}  // namespace

double qdet_hermitian(const QMatrix& h) {
    if (h.rows() != h.cols()) throw std::invalid_argument("qdet: matrix must be square");
    if (h.tag() != StructureTag::hermitian)
        throw std::invalid_argument("qdet: matrix must carry the hermitian tag");

    const std::complex<double> d = embed_matrix(h).determinant();
    const double scale = std::pow(std::max(1.0, h.max_abs_entry()), 2.0 * double(h.rows()));
    if (std::abs(d.imag()) > 1e-9 * std::max(scale, std::abs(d)))
        throw std::domain_error("qdet: embedded determinant has a large imaginary part");
    if (d.real() < -1e-9 * std::max(scale, std::abs(d)))
        throw std::domain_error("qdet: embedded determinant is negative");
    const double magnitude = std::sqrt(std::max(0.0, d.real()));

    // Sign from the inertia of the LDL^* pivots (Sylvester). A degenerate
    // leading minor means the determinant is ~0 or the input is on a
    // measure-zero stratum; the nonnegative branch is used there.
    double sign = 1.0;
    if (auto pivots = ldl_pivots(h)) {
        for (double p : *pivots)
            if (p < 0.0) sign = -sign;
    }
    return sign * magnitude;
}

std::optional<QMatrix> cholesky(const QMatrix& h) {
    if (h.rows() != h.cols()) throw std::invalid_argument("cholesky: matrix must be square");
    if (h.tag() != StructureTag::hermitian)
        throw std::invalid_argument("cholesky: matrix must carry the hermitian tag");
    const std::size_t n = h.rows();
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(h.at(i, i).w));
    const double tol = 1e-12 * max_diag;

    std::vector<Quaternion> l(n * n);
    auto L = [&](std::size_t i, std::size_t j) -> Quaternion& { return l[i * n + j]; };
    for (std::size_t j = 0; j < n; ++j) {
        double d = h.at(j, j).w;
        for (std::size_t k = 0; k < j; ++k) d -= norm_sq(L(j, k));
        if (d <= tol) return std::nullopt;
        const double ljj = std::sqrt(d);
        L(j, j) = Quaternion(ljj);
        const double inv = 1.0 / ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Quaternion s = h.at(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * conj(L(j, k));
            L(i, j) = s * inv;
        }
    }
    return QMatrix(n, n, std::move(l));
}

bool is_positive_definite(const QMatrix& h) { return cholesky(h).has_value(); }

std::optional<double> cholesky_det(const QMatrix& h) {
    const std::size_t n = h.rows();
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(h.at(i, i).w));
    const double tol = 1e-12 * max_diag;

    std::vector<Quaternion> l(n * n);
    auto L = [&](std::size_t i, std::size_t j) -> Quaternion& { return l[i * n + j]; };
    double det = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        double d = h.at(j, j).w;
        for (std::size_t k = 0; k < j; ++k) d -= norm_sq(L(j, k));
        if (d <= tol) return std::nullopt;
        det *= d;
        const double inv = 1.0 / std::sqrt(d);
        L(j, j) = Quaternion(std::sqrt(d));
        for (std::size_t i = j + 1; i < n; ++i) {
            Quaternion s = h.at(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * conj(L(j, k));
            L(i, j) = s * inv;
        }
    }
    return det;
}

QMatrix solve_left(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve: matrix must be square");
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: rhs row count mismatch");
    const std::size_t n = a.rows();
    const std::size_t m = b.cols();
    std::vector<Quaternion> lhs(a.entries());
    std::vector<Quaternion> rhs(b.entries());
    auto A = [&](std::size_t i, std::size_t j) -> Quaternion& { return lhs[i * n + j]; };
    auto B = [&](std::size_t i, std::size_t j) -> Quaternion& { return rhs[i * m + j]; };

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = norm_sq(A(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = norm_sq(A(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0) throw std::domain_error("solve: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(pivot, j), A(col, j));
            for (std::size_t j = 0; j < m; ++j) std::swap(B(pivot, j), B(col, j));
        }
        const Quaternion p = A(col, col);
        const Quaternion pinv = conj(p) * (1.0 / norm_sq(p));
        for (std::size_t r = col + 1; r < n; ++r) {
            const Quaternion f = A(r, col) * pinv;
            if (f == Quaternion::zero()) continue;
            for (std::size_t j = col; j < n; ++j) A(r, j) -= f * A(col, j);
            for (std::size_t j = 0; j < m; ++j) B(r, j) -= f * B(col, j);
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        const Quaternion p = A(col, col);
        const Quaternion pinv = conj(p) * (1.0 / norm_sq(p));
        for (std::size_t j = 0; j < m; ++j) {
            Quaternion s = B(col, j);
            for (std::size_t k = col + 1; k < n; ++k) s -= A(col, k) * B(k, j);
            B(col, j) = pinv * s;
        }
    }
    return QMatrix(n, m, std::move(rhs));
}

std::pair<double, double> schur_det_split(const QMatrix& m, std::size_t block_size) {
    if (m.rows() != m.cols()) throw std::invalid_argument("schur split: matrix must be square");
    if (m.tag() != StructureTag::hermitian)
        throw std::invalid_argument("schur split: matrix must carry the hermitian tag");
    const std::size_t n = m.rows();
    if (block_size + 1 != n)
        throw std::invalid_argument("schur split: corner block must be 1x1");

    std::vector<Quaternion> a_entries(block_size * block_size);
    for (std::size_t i = 0; i < block_size; ++i)
        for (std::size_t j = 0; j < block_size; ++j) a_entries[i * block_size + j] = m.at(i, j);
    const QMatrix a(block_size, block_size, std::move(a_entries), StructureTag::hermitian);

    std::vector<Quaternion> p_adj(block_size);  // column adj(P) = conj of last row
    for (std::size_t i = 0; i < block_size; ++i) p_adj[i] = m.at(i, n - 1);
    const QMatrix rhs(block_size, 1, std::move(p_adj));

    const QMatrix x = solve_left(a, rhs);  // A^{-1} adj(P)
    Quaternion corr{};
    for (std::size_t i = 0; i < block_size; ++i) corr += m.at(n - 1, i) * x.at(i, 0);
    const double l = m.at(n - 1, n - 1).w;
    const double complement = l - corr.w;
    return {qdet_hermitian(a), complement};
}

}  // namespace quatdom
