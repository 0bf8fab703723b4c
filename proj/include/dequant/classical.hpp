#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dequant/errors.hpp"
#include "dequant/projector.hpp"

namespace dequant {

// Uniform-measure discretization of the phase space.
struct PhaseSpaceGrid {
    int cell_count;

    explicit PhaseSpaceGrid(int cells) : cell_count(cells) {
        if (cells < 1) throw RangeError("PhaseSpaceGrid: cell_count must be >= 1");
    }
    bool operator==(const PhaseSpaceGrid&) const = default;
};

// 0/1 function over the grid; a classical proposition as a subset.
struct CharacteristicFunction {
    PhaseSpaceGrid grid;
    std::vector<std::uint8_t> bits;

    CharacteristicFunction(PhaseSpaceGrid g, std::vector<std::uint8_t> b);
};

CharacteristicFunction cl_conj(const CharacteristicFunction& a, const CharacteristicFunction& b);
CharacteristicFunction cl_neg(const CharacteristicFunction& a);
CharacteristicFunction cl_disj(const CharacteristicFunction& a, const CharacteristicFunction& b);
bool cl_implies(const CharacteristicFunction& a, const CharacteristicFunction& b);

// popcount / cell_count
double fraction(const CharacteristicFunction& a);

std::string to_bit_string(const CharacteristicFunction& a);
CharacteristicFunction from_bit_string(const std::string& s);

// Canonical map for correspondence tests: diag(b_1..b_d) -> bit vector on a
// d-cell grid. Requires a diagonal 0/1 projector.
CharacteristicFunction from_diagonal_projector(const Projector& p);

}  // namespace dequant
