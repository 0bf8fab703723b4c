#include <doctest.h>

#include <cmath>

#include "dequant/entropy.hpp"

using namespace dequant;

namespace {

const double kLn2 = std::log(2.0);

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

QuantumState plus_state() {
    StateVector v(2);
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return QuantumState(std::move(v));
}

}  // namespace

TEST_CASE("density matrix validation") {
    ComplexMatrix ok(2, 2);
    ok << 0.5, 0, 0, 0.5;
    CHECK_NOTHROW(DensityMatrix{ok});
    ComplexMatrix bad_trace(2, 2);
    bad_trace << 1, 0, 0, 1;
    CHECK_THROWS_AS(DensityMatrix{bad_trace}, Error);
    ComplexMatrix negative(2, 2);
    negative << 1.5, 0, 0, -0.5;
    CHECK_THROWS_AS(DensityMatrix{negative}, Error);
}

TEST_CASE("von Neumann entropy") {
    ComplexMatrix pure(2, 2);
    pure << 1, 0, 0, 0;
    CHECK(von_neumann_entropy(DensityMatrix{pure}) == 0.0);
    ComplexMatrix mixed(2, 2);
    mixed << 0.5, 0, 0, 0.5;
    CHECK(von_neumann_entropy(DensityMatrix{mixed}) == doctest::Approx(kLn2).epsilon(1e-14));
}

TEST_CASE("binary entropy endpoints, peak and range check") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(kLn2).epsilon(1e-15));
    CHECK_THROWS_AS(binary_entropy(1.5), RangeError);
}

TEST_CASE("phase fraction of P_z is one half") {
    CHECK(projector_phase_fraction(p_z()) == 0.5);
    CHECK(binary_entropy(projector_phase_fraction(p_z())) ==
          binary_entropy(projector_phase_fraction(negate(p_z()))));
}

TEST_CASE("pi-traced entropy of |+> against the P_z/P_x commutator") {
    // |+> splits evenly over the sigma_y/2 eigenbasis.
    auto step = ConjunctionStep::make(p_z(), p_x());
    CHECK(pi_traced_entropy(plus_state(), step.comm) == doctest::Approx(kLn2).epsilon(1e-12));
}

TEST_CASE("nc conjunction entropy of the P_z/P_x pair on |+>") {
    // P_meet = 0, so phi_meet = 0 and the branch terms vanish; only the
    // pi-traced ln 2 remains.
    auto step = ConjunctionStep::make(p_z(), p_x());
    CHECK_FALSE(step.commuting());
    CHECK(nc_conjunction_entropy(plus_state(), step) == doctest::Approx(kLn2).epsilon(1e-12));
}

TEST_CASE("commuting steps reduce to the plain conjunction entropy") {
    ComplexMatrix id = identity_matrix(2);
    Projector a(tensor_product(p_z().matrix(), id), false);
    Projector b(tensor_product(id, p_z().matrix()), false);
    auto step = ConjunctionStep::make(a, b);
    CHECK(step.commuting());
    StateVector v = StateVector::Zero(4);
    v(0) = 1.0;
    // rank(P_z x P_z) / 4 = 1/4
    CHECK(nc_conjunction_entropy(QuantumState(v), step) ==
          doctest::Approx(binary_entropy(0.25)).epsilon(1e-12));
}

TEST_CASE("register recurrence on the single P_z/P_x step") {
    std::vector<ConjunctionStep> steps{ConjunctionStep::make(p_z(), p_x())};
    DilBreakdown dil = register_dil(plus_state(), steps, 0, {});
    CHECK(dil.total == doctest::Approx(kLn2).epsilon(1e-12));
    CHECK(dil.total <= dil.upper_bound + 1e-12);
    // bound = (0 + 1) ln 2 + ln 2
    CHECK(dil.upper_bound == doctest::Approx(2 * kLn2).epsilon(1e-12));
}

TEST_CASE("free qubits contribute binary entropies") {
    DilBreakdown dil = register_dil(QuantumState::basis(2, 0), {}, 2, {0.5, 0.25});
    CHECK(dil.total == doctest::Approx(kLn2 + binary_entropy(0.25)).epsilon(1e-12));
    CHECK_THROWS_AS(register_dil(QuantumState::basis(2, 0), {}, 2, {0.5}), DimensionError);
}

TEST_CASE("non-commuting depth cap") {
    std::vector<ConjunctionStep> steps(9, ConjunctionStep::make(p_z(), p_x()));
    CHECK_THROWS_AS(register_dil(plus_state(), steps, 0, {}, 8), Error);
    CHECK_NOTHROW(register_dil(plus_state(), steps, 0, {}, 9));
}

TEST_CASE("upper bound accumulates ln dims") {
    CHECK(dil_upper_bound(1, 2.0, {4, 4}) ==
          doctest::Approx(3 * kLn2 + 2 * std::log(4.0)).epsilon(1e-12));
    CHECK_THROWS_AS(dil_upper_bound(0, 0.0, {0}), RangeError);
}
