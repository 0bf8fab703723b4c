#pragma once

#include <vector>

#include "dequant/projector.hpp"

namespace dequant {

class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

  private:
    ComplexMatrix matrix_;
};

// One conjunction of the register recurrence: the pair, its commutator and
// the resulting meet P∧.
struct ConjunctionStep {
    Projector p;
    Projector q;
    CommutatorData comm;
    Projector conjunction;

    static ConjunctionStep make(const Projector& p, const Projector& q);
    bool commuting() const { return comm.commuting(); }
};

struct DilBreakdown {
    double q_term = 0.0;               // sum of free-qubit H_C terms
    std::vector<double> hq_terms;      // per step, H_Q(rho_Pi) averaged over branches
    std::vector<double> branch_terms;  // per step, weighted H_C(chi_conj) sum
    double total = 0.0;
    double upper_bound = 0.0;
};

// -Tr rho ln rho in nats; eigenvalues in [-1e-10, 0) clamped to 0.
double von_neumann_entropy(const DensityMatrix& rho);

// -phi ln phi - (1-phi) ln(1-phi) in nats; 0 at the endpoints.
double binary_entropy(double phi);

// rank(P) / dim: the phase-space volume fraction of a projector.
double projector_phase_fraction(const Projector& p);

// Shannon entropy of |zeta_pi|^2 in the commutator eigenbasis.
double pi_traced_entropy(const QuantumState& state, const CommutatorData& c);

// H_Q(rho_Pi) + sum_pi |zeta_pi|^2 H_C(chi_conj); commuting steps reduce to
// the single-branch H_C(chi_conj) (dim Pi treated as 1).
double nc_conjunction_entropy(const QuantumState& state, const ConjunctionStep& step);

// Recurrent register formula: free-qubit terms plus nested branch-averaged
// conjunction entropies. Non-commuting steps beyond depth_cap are an error.
DilBreakdown register_dil(const QuantumState& state,
                          const std::vector<ConjunctionStep>& steps,
                          int q_i, const std::vector<double>& free_fractions,
                          int depth_cap = 8);

// (q_i + c_i) ln 2 + sum_k ln dims[k]
double dil_upper_bound(int q_i, double c_i, const std::vector<long long>& dims);

}  // namespace dequant
