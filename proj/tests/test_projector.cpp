#include <doctest.h>

#include <cmath>

#include "dequant/random.hpp"

using namespace dequant;

namespace {

Projector p_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, 0;
    return Projector(std::move(m));
}

Projector p_x() {
    ComplexMatrix m(2, 2);
    m << 0.5, 0.5, 0.5, 0.5;
    return Projector(std::move(m));
}

ComplexMatrix direct_power(const ComplexMatrix& m, int n) {
    ComplexMatrix out = ComplexMatrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < n; ++i) out = out * m;
    return out;
}

}  // namespace

TEST_CASE("projector validation") {
    ComplexMatrix not_idem(2, 2);
    not_idem << 0.5, 0, 0, 0.5;
    CHECK_THROWS_AS(Projector{not_idem}, Error);
    ComplexMatrix not_herm(2, 2);
    not_herm << 1, 1, 0, 0;
    CHECK_THROWS_AS(Projector{not_herm}, NonHermitianError);
}

TEST_CASE("projector from basis state and negation") {
    Projector p = projector_from_state(QuantumState::basis(2, 0));
    CHECK(approx_equal(p.matrix(), p_z().matrix(), 0.0));
    ComplexMatrix expected(2, 2);
    expected << 0, 0, 0, 1;
    CHECK(approx_equal(negate(p).matrix(), expected, 0.0));
    CHECK(p.rank() == 1);
}

TEST_CASE("raw product P_z P_x") {
    ComplexMatrix prod = p_z().matrix() * p_x().matrix();
    ComplexMatrix expected(2, 2);
    expected << 0.5, 0.5, 0, 0;
    CHECK(approx_equal(prod, expected, 0.0));
}

TEST_CASE("commuting conjunction on disjoint supports") {
    ComplexMatrix id = identity_matrix(2);
    Projector a(tensor_product(p_z().matrix(), id), false);
    Projector b(tensor_product(id, p_z().matrix()), false);
    Projector meet = commuting_conjunction(a, b);
    CHECK(approx_equal(meet.matrix(), tensor_product(p_z().matrix(), p_z().matrix()), 1e-14));
    CHECK_THROWS_AS(commuting_conjunction(p_z(), p_x()), NonCommutingError);
}

TEST_CASE("nc conjunction of P_z and P_x is the zero projector") {
    Projector meet = nc_conjunction(p_z(), p_x());
    CHECK(meet.matrix().norm() == 0.0);
    CHECK(approx_equal(intersection_oracle(p_z(), p_x()).matrix(), meet.matrix(), 0.0));
}

TEST_CASE("nc conjunction matches the commuting tensor case") {
    ComplexMatrix id = identity_matrix(2);
    Projector a(tensor_product(p_z().matrix(), id), false);
    Projector b(tensor_product(id, p_z().matrix()), false);
    CHECK(approx_equal(nc_conjunction(a, b).matrix(),
                       tensor_product(p_z().matrix(), p_z().matrix()), 1e-12));
    CHECK(approx_equal(intersection_oracle(a, b).matrix(),
                       tensor_product(p_z().matrix(), p_z().matrix()), 1e-12));
}

TEST_CASE("disjunction of P_z and P_x is their non-idempotent sum") {
    DisjunctionResult d = disjunction(p_z(), p_x());
    CHECK(approx_equal(d.projector.matrix(), p_z().matrix() + p_x().matrix(), 1e-12));
    CHECK_FALSE(d.idempotent);
}

TEST_CASE("implication ordering") {
    ComplexMatrix id = identity_matrix(2);
    Projector sub(tensor_product(p_z().matrix(), p_z().matrix()), false);
    Projector sup(tensor_product(p_z().matrix(), id), false);
    CHECK(implies(sub, sup));
    CHECK_FALSE(implies(p_z(), p_x()));
}

TEST_CASE("commutator of P_z and P_x is sigma_y/2") {
    CommutatorData c = commutator(p_z(), p_x());
    ComplexMatrix expected(2, 2);
    expected << 0, Complex(0, -0.5), Complex(0, 0.5), 0;
    CHECK(approx_equal(c.pi, expected, 1e-14));
    CHECK(c.dim_pi == 2);
    CHECK(c.rank_pi == 2);
    CHECK(c.eigen.eigenvalues(0) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(c.eigen.eigenvalues(1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(c.commuting());
}

TEST_CASE("disjoint-support projectors commute") {
    ComplexMatrix id = identity_matrix(2);
    Projector a(tensor_product(p_z().matrix(), id), false);
    Projector b(tensor_product(id, p_x().matrix()), false);
    CHECK(commutator(a, b).commuting());
}

TEST_CASE("closed-form power reproduces PQ at n = 1") {
    auto [m, terms] = product_power_closed_form(p_z(), p_x(), 1);
    CHECK(approx_equal(m, p_z().matrix() * p_x().matrix(), 1e-14));
}

TEST_CASE("closed-form power matches direct powers for n <= 4") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> dim_dist(2, 6);
        const int d = dim_dist(rng);
        std::uniform_int_distribution<int> rank_dist(1, d);
        Projector p = random_projector(rng, d, rank_dist(rng));
        Projector q = random_projector(rng, d, rank_dist(rng));
        ComplexMatrix pq = p.matrix() * q.matrix();
        for (int n = 1; n <= 4; ++n) {
            auto [m, terms] = product_power_closed_form(p, q, n);
            CHECK((m - direct_power(pq, n)).norm() <= 1e-9 * n);
        }
    }
}

TEST_CASE("closed-form power deviates from direct powers at n = 5") {
    // Even for the elementary pair P_z, P_x the parity split stops tracking
    // (PQ)^n beyond n = 4; the verification suite reports this honestly.
    auto [m, terms] = product_power_closed_form(p_z(), p_x(), 5);
    ComplexMatrix direct = direct_power(p_z().matrix() * p_x().matrix(), 5);
    CHECK((m - direct).norm() > 0.1);
}

TEST_CASE("semiclassical family at theta = pi/4") {
    // |P_z P_theta - P_theta P_z|_F = |sin 2theta| / sqrt(2)
    SemiclassicalFamily f = SemiclassicalFamily::make(M_PI / 4.0);
    CHECK(semiclassical_convergence(f, 1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(SemiclassicalFamily::make(0.0), RangeError);
    CHECK_THROWS_AS(SemiclassicalFamily::make(1.0), RangeError);
}

TEST_CASE("conjunction theorem holds for P_z, P_x at k = 3") {
    CHECK(verify_conjunction_theorem(p_z(), p_x(), 3));
}

TEST_CASE("random projectors satisfy the defining properties") {
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Projector p = random_projector(rng, 8, 3);
        CHECK(p.rank() == 3);
        CHECK((p.matrix() * p.matrix() - p.matrix()).norm() <= 1e-12);
    }
    CHECK_THROWS_AS(random_projector(rng, 4, 5), RangeError);
}
