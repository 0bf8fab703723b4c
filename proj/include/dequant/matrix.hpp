#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

#include "dequant/errors.hpp"

namespace dequant {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Dimension cap for tensor products and gate materialization.
// Default 2^12; override with env DEQUANTLAB_DIM_CAP or set_dim_cap().
std::size_t dim_cap();
void set_dim_cap(std::size_t cap);

struct HermitianEigenDecomposition {
    RealVector eigenvalues;      // ascending
    ComplexMatrix eigenvectors;  // columns, orthonormal
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);

// Requires |a - a^dagger|_F <= 1e-9 * max(1, |a|_F).
HermitianEigenDecomposition hermitian_eigen(const ComplexMatrix& a);

// Count of eigenvalues > tol * max(1, lambda_max); Hermitian PSD inputs.
int matrix_rank(const ComplexMatrix& a, double tol = 1e-9);

ComplexMatrix identity_matrix(Eigen::Index n);
ComplexMatrix zero_matrix(Eigen::Index n);

inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).norm() <= tol;
}

}  // namespace dequant
