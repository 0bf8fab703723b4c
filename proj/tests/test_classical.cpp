#include <doctest.h>

#include "dequant/classical.hpp"

using namespace dequant;

TEST_CASE("bit string round trip and fraction") {
    CharacteristicFunction a = from_bit_string("1010");
    CHECK(a.grid.cell_count == 4);
    CHECK(to_bit_string(a) == "1010");
    CHECK(fraction(a) == 0.5);
}

TEST_CASE("connectives act cellwise") {
    CharacteristicFunction a = from_bit_string("1100");
    CharacteristicFunction b = from_bit_string("1010");
    CHECK(to_bit_string(cl_conj(a, b)) == "1000");
    CHECK(to_bit_string(cl_disj(a, b)) == "1110");
    CHECK(to_bit_string(cl_neg(a)) == "0011");
    CHECK(cl_implies(from_bit_string("1000"), a));
    CHECK_FALSE(cl_implies(a, b));
}

TEST_CASE("De Morgan and distributivity") {
    CharacteristicFunction a = from_bit_string("110101");
    CharacteristicFunction b = from_bit_string("011011");
    CharacteristicFunction c = from_bit_string("101110");
    CHECK(to_bit_string(cl_neg(cl_conj(a, b))) ==
          to_bit_string(cl_disj(cl_neg(a), cl_neg(b))));
    CHECK(to_bit_string(cl_neg(cl_disj(a, b))) ==
          to_bit_string(cl_conj(cl_neg(a), cl_neg(b))));
    CHECK(to_bit_string(cl_conj(a, cl_disj(b, c))) ==
          to_bit_string(cl_disj(cl_conj(a, b), cl_conj(a, c))));
}

TEST_CASE("grid mismatch is rejected") {
    CHECK_THROWS_AS(cl_conj(from_bit_string("10"), from_bit_string("100")), DimensionError);
}

TEST_CASE("correspondence with diagonal projectors") {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(2, 2) = 1;
    Projector p(m);
    CharacteristicFunction chi = from_diagonal_projector(p);
    CHECK(to_bit_string(chi) == "1010");
    // Negation commutes with the correspondence map.
    CHECK(to_bit_string(from_diagonal_projector(negate(p))) == to_bit_string(cl_neg(chi)));
    CHECK(fraction(chi) == doctest::Approx(0.5));
}

TEST_CASE("non-diagonal projectors are rejected by the correspondence map") {
    ComplexMatrix px(2, 2);
    px << 0.5, 0.5, 0.5, 0.5;
    CHECK_THROWS_AS(from_diagonal_projector(Projector(px)), Error);
}
