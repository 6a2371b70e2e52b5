#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "quatdom/quaternion.hpp"

namespace quatdom {

enum class StructureTag { general, hermitian, anti_hermitian, symmetric };

const char* to_string(StructureTag tag);

/// Dense 2m x 2n complex matrix, the blockwise image of a quaternionic
/// matrix under the scalar embedding (one 2x2 block per entry).
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::complex<double>& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const std::complex<double>& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    static ComplexMatrix identity(std::size_t n);

    ComplexMatrix multiply(const ComplexMatrix& other) const;
    ComplexMatrix conjugate_transpose() const;

    /// Determinant via LU with partial pivoting; square only.
    std::complex<double> determinant() const;

    /// Eigenvalues of a Hermitian matrix by cyclic Jacobi sweeps (test oracle).
    std::vector<double> hermitian_eigenvalues() const;

    double max_abs_diff(const ComplexMatrix& other) const;

private:
    std::size_t rows_, cols_;
    std::vector<std::complex<double>> data_;
};

/// Dense m x n quaternionic matrix. Immutable after construction; the
/// structure tag is validated once at construction (tolerance 1e-12 against
/// the defining relation) and trusted afterwards.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries,
            StructureTag tag = StructureTag::general);

    /// All-zero matrix with the given tag.
    QMatrix(std::size_t rows, std::size_t cols, StructureTag tag = StructureTag::general);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    StructureTag tag() const { return tag_; }

    const Quaternion& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Quaternion>& entries() const { return data_; }

    QMatrix multiply(const QMatrix& other) const;
    QMatrix adjoint() const;  // conjugate transpose
    QMatrix transpose() const;
    QMatrix conjugate() const;  // entrywise conjugation
    QMatrix add(const QMatrix& other) const;
    QMatrix subtract(const QMatrix& other) const;
    QMatrix negate() const;
    QMatrix scale(double s) const;

    /// Re-tags the matrix after validating the requested structure.
    QMatrix with_tag(StructureTag tag) const;

    double max_abs_entry() const;
    double frobenius_norm() const;
    double max_abs_diff(const QMatrix& other) const;

private:
    std::size_t rows_, cols_;
    StructureTag tag_;
    std::vector<Quaternion> data_;

    void validate_tag() const;
};

QMatrix qmat_mul(const QMatrix& a, const QMatrix& b);
QMatrix adjoint(const QMatrix& a);

/// Blockwise scalar embedding: the (i,j) quaternion entry becomes the 2x2
/// complex block at rows 2i..2i+1, cols 2j..2j+1. Multiplicative and
/// adjoint-compatible.
ComplexMatrix embed_matrix(const QMatrix& a);

/// Determinant of a Hermitian quaternionic matrix: the square root of the
/// (real, nonnegative) determinant of the complex embedding, with the sign
/// recovered from the inertia of the LDL^* pivots. Equals the real entry for
/// 1x1 input and the usual positive determinant for positive definite input.
double qdet_hermitian(const QMatrix& h);

/// Lower-triangular Gamma with Gamma * adjoint(Gamma) = h, or nullopt when a
/// pivot falls below 1e-12 relative to the largest diagonal entry.
std::optional<QMatrix> cholesky(const QMatrix& h);

bool is_positive_definite(const QMatrix& h);

/// Fused membership + determinant: product of squared Cholesky pivots when h
/// is positive definite, nullopt otherwise. Used by the sampling hot path.
std::optional<double> cholesky_det(const QMatrix& h);

/// Solves a * x = b by Gaussian elimination with partial pivoting over the
/// quaternions (row operations applied from the left).
QMatrix solve_left(const QMatrix& a, const QMatrix& b);

/// Schur complement split of Hermitian m = [[A, adj(P)], [P, l]] with a 1x1
/// corner: returns (qdet_hermitian(A), l - P A^{-1} adj(P)). The product of
/// the two outputs equals qdet_hermitian(m).
std::pair<double, double> schur_det_split(const QMatrix& m, std::size_t block_size);

}  // namespace quatdom
