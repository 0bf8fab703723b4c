#include <doctest.h>

#include "dequant/matrix.hpp"

using namespace dequant;

namespace {

ComplexMatrix diag2(double a, double b) {
    ComplexMatrix m = zero_matrix(2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

TEST_CASE("multiply checks inner dimensions") {
    ComplexMatrix a = identity_matrix(2);
    ComplexMatrix b = identity_matrix(3);
    CHECK_THROWS_AS(multiply(a, b), DimensionError);
    CHECK(approx_equal(multiply(a, a), a, 0.0));
}

TEST_CASE("tensor product of diagonal projectors") {
    ComplexMatrix pz = diag2(1, 0);
    ComplexMatrix t = tensor_product(pz, pz);
    REQUIRE(t.rows() == 4);
    ComplexMatrix expected = zero_matrix(4);
    expected(0, 0) = 1;
    CHECK(approx_equal(t, expected, 0.0));
}

TEST_CASE("tensor product mixed-product law") {
    ComplexMatrix a(2, 2), b(2, 2), c(2, 2), d(2, 2);
    a << Complex(1, 1), 2, 0, Complex(0, -1);
    b << 0.5, Complex(0, 0.5), 1, 0;
    c << 1, 0, Complex(2, 1), 3;
    d << Complex(0, 2), 1, 0, 1;
    ComplexMatrix lhs = multiply(tensor_product(a, b), tensor_product(c, d));
    ComplexMatrix rhs = tensor_product(multiply(a, c), multiply(b, d));
    CHECK(approx_equal(lhs, rhs, 1e-12));
}

TEST_CASE("dimension cap guards tensor products") {
    const std::size_t saved = dim_cap();
    set_dim_cap(3);
    CHECK_THROWS_AS(tensor_product(identity_matrix(2), identity_matrix(2)), CapacityError);
    set_dim_cap(saved);
}

TEST_CASE("adjoint and trace") {
    ComplexMatrix a(2, 2);
    a << Complex(1, 2), Complex(3, -4), 0, Complex(0, 5);
    CHECK(approx_equal(adjoint(adjoint(a)), a, 0.0));
    CHECK(trace(diag2(1, 0)) == Complex(1, 0));
    CHECK(trace(a) == Complex(1, 7));
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
    ComplexMatrix a(2, 2);
    a << 0, 1, 0, 0;
    CHECK_THROWS_AS(hermitian_eigen(a), NonHermitianError);
}

TEST_CASE("hermitian_eigen of sigma_y/2") {
    ComplexMatrix h(2, 2);
    h << 0, Complex(0, -0.5), Complex(0, 0.5), 0;
    auto eig = hermitian_eigen(h);
    CHECK(eig.eigenvalues(0) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(eig.eigenvalues(1) == doctest::Approx(0.5).epsilon(1e-12));
    ComplexMatrix rebuilt =
        eig.eigenvectors * eig.eigenvalues.asDiagonal() * eig.eigenvectors.adjoint();
    CHECK(approx_equal(rebuilt, h, 1e-12));
}

TEST_CASE("matrix_rank on projectors") {
    CHECK(matrix_rank(diag2(1, 0)) == 1);
    CHECK(matrix_rank(identity_matrix(5)) == 5);
    CHECK(matrix_rank(zero_matrix(3)) == 0);
}

TEST_CASE("frobenius norm") {
    ComplexMatrix a(1, 2);
    a << 3, Complex(0, 4);
    CHECK(frobenius_norm(a) == doctest::Approx(5.0).epsilon(1e-15));
}
