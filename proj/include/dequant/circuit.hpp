#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dequant/entropy.hpp"
#include "dequant/projector.hpp"

namespace dequant {

enum class GateKind { W, CPhase, PZ, PX, NPZ, NPX, Oracle };

struct Gate {
    GateKind kind;
    int k = -1;             // first qubit (control for CPhase)
    int s = -1;             // second qubit, CPhase only; s > k
    std::string name;       // Oracle only
};

enum class CircuitFamily { Generic, Fft, Grover };

struct CircuitIR {
    int n_qubits = 0;
    std::vector<Gate> gates;          // time order: gates[0] is applied first
    std::string name;
    std::vector<int> stage_marks;     // implication boundaries between E_I blocks

    // Builder metadata; selects the family's analytic accounting.
    CircuitFamily family = CircuitFamily::Generic;
    int family_n = 0;  // data qubits for Grover (register has family_n + 1)
};

struct ConjunctionCount {
    int q_i = 0;
    double c_i = 0.0;           // non-commuting intersections; fractional for Grover
    double commuting_c_i = 0.0; // intersections with dim Pi = 1
    int n_i = 0;
    std::vector<long long> dims;  // per non-commuting intersection, gate-level accounting
    bool heuristic = false;       // generic fallback fired outside calibrated patterns
};

struct DilReport {
    std::string circuit;
    int n_qubits = 0;
    ConjunctionCount counts;
    double dil_upper_bound_nats = 0.0;
    std::optional<double> dil_exact_nats;
    std::string closed_form;
};

// One projector-pair intersection found by the counting scan; feeds exact-mode
// analysis.
struct IntersectionEvent {
    int qubit;
    bool commuting;
    GateKind first;   // projector kind of the first factor
    GateKind second;  // projector kind of the second factor
};

// One weighted product of single-qubit projector factors.
struct ProjectorFactor {
    int qubit;
    GateKind kind;  // PZ, PX, NPZ, NPX
};
struct WeightedTerm {
    Complex coeff;
    std::vector<ProjectorFactor> factors;
};

CircuitIR parse_circuit(const std::string& text);
std::string serialize(const CircuitIR& c);

// Projector decompositions: W = sqrt(2)(P_x - P_neg_z),
// C_{k,s} = (1 - e^{i phi})(P_zs P_neg_zk + P_zk) + e^{i phi} I.
// Oracle gates are opaque and decompose to nothing.
std::vector<WeightedTerm> decompose_gate(const Gate& g);

// Qubit 0 is the most significant tensor factor.
ComplexMatrix materialize_gate(const Gate& g, int n);
ComplexMatrix materialize_circuit(const CircuitIR& c);

ConjunctionCount count_conjunctions(const CircuitIR& c);
std::vector<IntersectionEvent> scan_intersections(const CircuitIR& c,
                                                  bool* heuristic_out = nullptr);

CircuitIR build_fftq(int n);     // 1 <= n <= 20
CircuitIR build_grover(int n);   // 2 <= n <= 20; register is n data qubits + ancilla

// Grover iteration count R = round((pi/4) 2^(n/2)).
int grover_iterations(int n);

DilReport analyze_dil(const CircuitIR& c,
                      const std::optional<QuantumState>& state = std::nullopt);

// Deterministic JSON: fixed key order, floats at 10 significant digits.
std::string report_to_json(const DilReport& r, bool bits = false);

}  // namespace dequant
