#include "dequant/matrix.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace dequant {

namespace {

std::size_t initial_cap() {
    if (const char* env = std::getenv("DEQUANTLAB_DIM_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 12;
}

std::atomic<std::size_t>& cap_storage() {
    static std::atomic<std::size_t> cap{initial_cap()};
    return cap;
}

}  // namespace

std::size_t dim_cap() { return cap_storage().load(); }
void set_dim_cap(std::size_t cap) { cap_storage().store(cap); }

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("multiply: inner dimensions differ (" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + ")");
    return a * b;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t rows = static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.rows());
    const std::size_t cols = static_cast<std::size_t>(a.cols()) * static_cast<std::size_t>(b.cols());
    if (rows > dim_cap() || cols > dim_cap())
        throw CapacityError("tensor_product: result dimension " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " exceeds cap " + std::to_string(dim_cap()));
    ComplexMatrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

Complex trace(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("trace: matrix is not square");
    return a.trace();
}

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

HermitianEigenDecomposition hermitian_eigen(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("hermitian_eigen: matrix is not square");
    const double scale = std::max(1.0, a.norm());
    if ((a - a.adjoint()).norm() > 1e-9 * scale)
        throw NonHermitianError("hermitian_eigen: input is not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("hermitian_eigen: solver did not converge", 0.0);
    return {solver.eigenvalues(), solver.eigenvectors()};
}

int matrix_rank(const ComplexMatrix& a, double tol) {
    auto eig = hermitian_eigen(a);
    const double lambda_max = eig.eigenvalues.size() ? eig.eigenvalues.maxCoeff() : 0.0;
    const double threshold = tol * std::max(1.0, lambda_max);
    int r = 0;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
        if (eig.eigenvalues(i) > threshold) ++r;
    return r;
}

ComplexMatrix identity_matrix(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }
ComplexMatrix zero_matrix(Eigen::Index n) { return ComplexMatrix::Zero(n, n); }

}  // namespace dequant
