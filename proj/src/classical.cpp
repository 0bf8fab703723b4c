#include "dequant/classical.hpp"

#include <numeric>

namespace dequant {

namespace {

void check_same_grid(const CharacteristicFunction& a, const CharacteristicFunction& b,
                     const char* op) {
    if (!(a.grid == b.grid))
        throw DimensionError(std::string(op) + ": grid mismatch");
}

}  // namespace

CharacteristicFunction::CharacteristicFunction(PhaseSpaceGrid g, std::vector<std::uint8_t> b)
    : grid(g), bits(std::move(b)) {
    if (static_cast<int>(bits.size()) != grid.cell_count)
        throw DimensionError("CharacteristicFunction: bit count differs from cell count");
    for (auto v : bits)
        if (v > 1) throw Error("CharacteristicFunction: bits must be 0 or 1");
}

CharacteristicFunction cl_conj(const CharacteristicFunction& a, const CharacteristicFunction& b) {
    check_same_grid(a, b, "cl_conj");
    std::vector<std::uint8_t> out(a.bits.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.bits[i] & b.bits[i];
    return {a.grid, std::move(out)};
}

CharacteristicFunction cl_neg(const CharacteristicFunction& a) {
    std::vector<std::uint8_t> out(a.bits.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = 1 - a.bits[i];
    return {a.grid, std::move(out)};
}

CharacteristicFunction cl_disj(const CharacteristicFunction& a, const CharacteristicFunction& b) {
    check_same_grid(a, b, "cl_disj");
    std::vector<std::uint8_t> out(a.bits.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.bits[i] | b.bits[i];
    return {a.grid, std::move(out)};
}

bool cl_implies(const CharacteristicFunction& a, const CharacteristicFunction& b) {
    check_same_grid(a, b, "cl_implies");
    for (std::size_t i = 0; i < a.bits.size(); ++i)
        if (a.bits[i] && !b.bits[i]) return false;
    return true;
}

double fraction(const CharacteristicFunction& a) {
    const int ones = std::accumulate(a.bits.begin(), a.bits.end(), 0);
    return static_cast<double>(ones) / a.grid.cell_count;
}

std::string to_bit_string(const CharacteristicFunction& a) {
    std::string s;
    s.reserve(a.bits.size());
    for (auto v : a.bits) s.push_back(v ? '1' : '0');
    return s;
}

CharacteristicFunction from_bit_string(const std::string& s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw Error("from_bit_string: invalid character");
        bits.push_back(c == '1' ? 1 : 0);
    }
    return {PhaseSpaceGrid(static_cast<int>(bits.size())), std::move(bits)};
}

CharacteristicFunction from_diagonal_projector(const Projector& p) {
    const ComplexMatrix& m = p.matrix();
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j && std::abs(m(i, j)) > 1e-10)
                throw Error("from_diagonal_projector: projector is not diagonal");
        const double d = m(i, i).real();
        if (std::abs(d) < 1e-10)
            bits[static_cast<std::size_t>(i)] = 0;
        else if (std::abs(d - 1.0) < 1e-10)
            bits[static_cast<std::size_t>(i)] = 1;
        else
            throw Error("from_diagonal_projector: diagonal entry is not 0/1");
    }
    return {PhaseSpaceGrid(static_cast<int>(m.rows())), std::move(bits)};
}

}  // namespace dequant
