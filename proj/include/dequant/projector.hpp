#pragma once

#include <utility>

#include "dequant/matrix.hpp"

namespace dequant {

// Hermitian idempotent operator; represents a quantum logical proposition.
class Projector {
  public:
    explicit Projector(ComplexMatrix m, bool validate = true);

    const ComplexMatrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    int rank() const;

    static Projector identity(Eigen::Index d);
    static Projector zero(Eigen::Index d);

  private:
    ComplexMatrix matrix_;
};

// Normalized state vector.
class QuantumState {
  public:
    explicit QuantumState(StateVector amplitudes);

    const StateVector& amplitudes() const { return amplitudes_; }
    Eigen::Index dim() const { return amplitudes_.size(); }

    static QuantumState basis(Eigen::Index d, Eigen::Index index);

  private:
    StateVector amplitudes_;
};

// [P, Q] = i*Pi with Pi Hermitian (hbar = 1 convention).
struct CommutatorData {
    ComplexMatrix pi;
    HermitianEigenDecomposition eigen;
    Eigen::Index dim_pi;  // dimension of the Hilbert space the pair acts on
    int rank_pi;          // diagnostic only; not used in bounds

    bool commuting(double tol = 1e-9) const { return pi.norm() <= tol; }
};

struct PowerFormulaTerms {
    ComplexMatrix alpha;    // C(I + C) with C = PQ - QP
    ComplexMatrix beta;     // QP + (I - P)C
    ComplexMatrix gamma_k;  // P C^2 (I + alpha)^k
};

// Pair |0><0| vs |theta><theta| in d = 2; theta -> 0 drives the commutator
// to zero, emulating the semiclassical limit.
struct SemiclassicalFamily {
    double theta;
    Projector p_fixed;
    Projector p_rotated;

    static SemiclassicalFamily make(double theta);
};

struct DisjunctionResult {
    Projector projector;
    bool idempotent;  // false when the formula leaves idempotency violated
};

Projector projector_from_state(const QuantumState& s);
Projector negate(const Projector& p);

// PQ; requires |PQ - QP|_F <= 1e-9, else NonCommutingError.
Projector commuting_conjunction(const Projector& p, const Projector& q);

// lim_{n->inf} (PQ)^n via repeated squaring; result purified to an exact
// projector through its Hermitian part.
Projector nc_conjunction(const Projector& p, const Projector& q,
                         double tol = 1e-12, int max_iter = 100000);

// Projector onto range(P) ∩ range(Q) from the eigenvalue-2 eigenspace of
// P + Q. Independent check for nc_conjunction; test/verify use only.
Projector intersection_oracle(const Projector& p, const Projector& q);

DisjunctionResult disjunction(const Projector& p, const Projector& q);
bool implies(const Projector& p, const Projector& q);
CommutatorData commutator(const Projector& p, const Projector& q);

// Closed-form (PQ)^n split by parity, evaluated with C = PQ - QP:
//   n = 2k+1:    beta (I+alpha)^k + P C alpha^k
//   n = 2(k+1):  beta [(I+alpha)^k + C alpha^k] + gamma_k
// Exact for n <= 4; see the power verification suite for the n >= 5 behavior.
std::pair<ComplexMatrix, PowerFormulaTerms>
product_power_closed_form(const Projector& p, const Projector& q, int n);

// |(P_fixed P_theta)^n - P_theta P_fixed|_F; -> 0 as theta -> 0.
double semiclassical_convergence(const SemiclassicalFamily& family, int n);

// (PQ)^k P∧ = P∧ = P∧ (PQ)^k and H_C equality through the conjunction
// subspace.
bool verify_conjunction_theorem(const Projector& p, const Projector& q, int k);

}  // namespace dequant
