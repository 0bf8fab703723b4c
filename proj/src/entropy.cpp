#include "dequant/entropy.hpp"

#include <cmath>

namespace dequant {

namespace {

double shannon_nats(const std::vector<double>& probs) {
    // Weights at numerical-noise level are clamped away; a single surviving
    // outcome has zero entropy exactly, even when its weight is 1 +/- ulp.
    constexpr double kNoise = 1e-10;
    int support = 0;
    for (double p : probs)
        if (p > kNoise) ++support;
    if (support <= 1) return 0.0;
    double h = 0.0;
    for (double p : probs) {
        if (p > kNoise) h -= p * std::log(p);
    }
    return h;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols())
        throw DimensionError("DensityMatrix: matrix is not square");
    const double scale = std::max(1.0, matrix_.norm());
    if ((matrix_ - matrix_.adjoint()).norm() > 1e-10 * scale)
        throw NonHermitianError("DensityMatrix: matrix is not Hermitian");
    if (std::abs(matrix_.trace().real() - 1.0) > 1e-10 ||
        std::abs(matrix_.trace().imag()) > 1e-10)
        throw Error("DensityMatrix: trace is not 1");
    auto eig = hermitian_eigen(matrix_);
    if (eig.eigenvalues.minCoeff() < -1e-10)
        throw Error("DensityMatrix: negative eigenvalue");
}

ConjunctionStep ConjunctionStep::make(const Projector& p, const Projector& q) {
    return {p, q, commutator(p, q), nc_conjunction(p, q)};
}

double von_neumann_entropy(const DensityMatrix& rho) {
    auto eig = hermitian_eigen(rho.matrix());
    std::vector<double> probs;
    probs.reserve(static_cast<std::size_t>(eig.eigenvalues.size()));
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
        probs.push_back(std::max(0.0, eig.eigenvalues(i)));
    return shannon_nats(probs);
}

double binary_entropy(double phi) {
    if (phi < 0.0 || phi > 1.0) throw RangeError("binary_entropy: phi out of [0, 1]");
    double h = 0.0;
    if (phi > 0.0) h -= phi * std::log(phi);
    if (phi < 1.0) h -= (1.0 - phi) * std::log(1.0 - phi);
    return h;
}

double projector_phase_fraction(const Projector& p) {
    return static_cast<double>(p.rank()) / static_cast<double>(p.dim());
}

double pi_traced_entropy(const QuantumState& state, const CommutatorData& c) {
    if (state.dim() != c.dim_pi)
        throw DimensionError("pi_traced_entropy: state dimension differs from dim Pi");
    StateVector coeffs = c.eigen.eigenvectors.adjoint() * state.amplitudes();
    std::vector<double> probs;
    probs.reserve(static_cast<std::size_t>(coeffs.size()));
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) probs.push_back(std::norm(coeffs(i)));
    return shannon_nats(probs);
}

double nc_conjunction_entropy(const QuantumState& state, const ConjunctionStep& step) {
    if (state.dim() != step.p.dim())
        throw DimensionError("nc_conjunction_entropy: dimension mismatch");
    const double h_conj = binary_entropy(projector_phase_fraction(step.conjunction));
    if (step.commuting()) return h_conj;  // dim Pi = 1 reduction
    double branch = 0.0;
    StateVector coeffs = step.comm.eigen.eigenvectors.adjoint() * state.amplitudes();
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
        branch += std::norm(coeffs(i)) * h_conj;
    return pi_traced_entropy(state, step.comm) + branch;
}

DilBreakdown register_dil(const QuantumState& state,
                          const std::vector<ConjunctionStep>& steps,
                          int q_i, const std::vector<double>& free_fractions,
                          int depth_cap) {
    if (q_i < 0) throw RangeError("register_dil: q_i must be non-negative");
    if (static_cast<int>(free_fractions.size()) != q_i)
        throw DimensionError("register_dil: free_fractions length differs from q_i");
    for (const auto& step : steps)
        if (step.p.dim() != state.dim())
            throw DimensionError("register_dil: step dimension differs from state");

    DilBreakdown out;
    for (double f : free_fractions) out.q_term += binary_entropy(f);

    // Branch distribution after the previous step; identical branch states
    // are merged, so the distribution stays at most dim atoms wide.
    struct Atom {
        StateVector state;
        double weight;
    };
    std::vector<Atom> dist{{state.amplitudes(), 1.0}};
    int nc_depth = 0;
    std::vector<long long> dims;
    dims.reserve(steps.size());

    for (const auto& step : steps) {
        const double h_conj = binary_entropy(projector_phase_fraction(step.conjunction));
        if (step.commuting()) {
            dims.push_back(1);
            out.hq_terms.push_back(0.0);
            out.branch_terms.push_back(h_conj);  // weights sum to 1
            continue;
        }
        if (++nc_depth > depth_cap)
            throw Error("register_dil: branch recursion depth cap exceeded");
        dims.push_back(static_cast<long long>(step.comm.dim_pi));
        const ComplexMatrix& basis = step.comm.eigen.eigenvectors;
        double hq = 0.0, branch = 0.0;
        std::vector<double> next_weights(static_cast<std::size_t>(basis.cols()), 0.0);
        for (const auto& atom : dist) {
            StateVector coeffs = basis.adjoint() * atom.state;
            std::vector<double> probs;
            probs.reserve(static_cast<std::size_t>(coeffs.size()));
            for (Eigen::Index i = 0; i < coeffs.size(); ++i) probs.push_back(std::norm(coeffs(i)));
            hq += atom.weight * shannon_nats(probs);
            for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
                branch += atom.weight * probs[static_cast<std::size_t>(i)] * h_conj;
                next_weights[static_cast<std::size_t>(i)] += atom.weight * probs[static_cast<std::size_t>(i)];
            }
        }
        out.hq_terms.push_back(hq);
        out.branch_terms.push_back(branch);
        dist.clear();
        for (Eigen::Index i = 0; i < basis.cols(); ++i) {
            if (next_weights[static_cast<std::size_t>(i)] > 1e-15)
                dist.push_back({basis.col(i), next_weights[static_cast<std::size_t>(i)]});
        }
    }

    out.total = out.q_term;
    for (double v : out.hq_terms) out.total += v;
    for (double v : out.branch_terms) out.total += v;
    out.upper_bound = dil_upper_bound(q_i, static_cast<double>(steps.size()), dims);
    return out;
}

double dil_upper_bound(int q_i, double c_i, const std::vector<long long>& dims) {
    double bound = (static_cast<double>(q_i) + c_i) * std::log(2.0);
    for (long long d : dims) {
        if (d < 1) throw RangeError("dil_upper_bound: dims must be positive");
        bound += std::log(static_cast<double>(d));
    }
    return bound;
}

}  // namespace dequant
