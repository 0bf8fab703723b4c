#include "dequant/projector.hpp"

#include <cmath>
#include <limits>

#include "dequant/entropy.hpp"

namespace dequant {

namespace {

void check_same_dim(const Projector& p, const Projector& q, const char* op) {
    if (p.dim() != q.dim())
        throw DimensionError(std::string(op) + ": projector dimensions differ");
}

// Hermitian part -> eigenvalues thresholded at 1/2 -> exact projector.
Projector purify(const ComplexMatrix& m) {
    ComplexMatrix h = (m + m.adjoint()) / 2.0;
    auto eig = hermitian_eigen(h);
    Eigen::Index kept = 0;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
        if (eig.eigenvalues(i) > 0.5) ++kept;
    if (kept == 0) return Projector::zero(m.rows());
    ComplexMatrix v(m.rows(), kept);
    Eigen::Index j = 0;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
        if (eig.eigenvalues(i) > 0.5) v.col(j++) = eig.eigenvectors.col(i);
    return Projector(v * v.adjoint(), false);
}

ComplexMatrix matrix_power(const ComplexMatrix& m, int k) {
    ComplexMatrix out = ComplexMatrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < k; ++i) out = out * m;
    return out;
}

}  // namespace

Projector::Projector(ComplexMatrix m, bool validate) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols())
        throw DimensionError("Projector: matrix is not square");
    if (validate) {
        const double scale = std::max(1.0, matrix_.norm());
        if ((matrix_ - matrix_.adjoint()).norm() > 1e-10 * scale)
            throw NonHermitianError("Projector: matrix is not Hermitian");
        if ((matrix_ * matrix_ - matrix_).norm() > 1e-10 * scale)
            throw Error("Projector: matrix is not idempotent");
    }
}

int Projector::rank() const { return matrix_rank(matrix_); }

Projector Projector::identity(Eigen::Index d) { return Projector(identity_matrix(d), false); }
Projector Projector::zero(Eigen::Index d) { return Projector(zero_matrix(d), false); }

QuantumState::QuantumState(StateVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) throw DimensionError("QuantumState: empty vector");
    if (std::abs(amplitudes_.squaredNorm() - 1.0) > 1e-10)
        throw Error("QuantumState: vector is not normalized");
}

QuantumState QuantumState::basis(Eigen::Index d, Eigen::Index index) {
    if (index < 0 || index >= d) throw RangeError("QuantumState::basis: index out of range");
    StateVector v = StateVector::Zero(d);
    v(index) = 1.0;
    return QuantumState(v);
}

Projector projector_from_state(const QuantumState& s) {
    return Projector(s.amplitudes() * s.amplitudes().adjoint(), false);
}

Projector negate(const Projector& p) {
    return Projector(identity_matrix(p.dim()) - p.matrix(), false);
}

Projector commuting_conjunction(const Projector& p, const Projector& q) {
    check_same_dim(p, q, "commuting_conjunction");
    ComplexMatrix pq = p.matrix() * q.matrix();
    if ((pq - q.matrix() * p.matrix()).norm() > 1e-9)
        throw NonCommutingError("commuting_conjunction: projectors do not commute");
    return Projector((pq + pq.adjoint()) / 2.0, false);
}

Projector nc_conjunction(const Projector& p, const Projector& q, double tol, int max_iter) {
    check_same_dim(p, q, "nc_conjunction");
    if (max_iter < 1) throw RangeError("nc_conjunction: max_iter must be >= 1");
    ComplexMatrix x = p.matrix() * q.matrix();
    // Repeated squaring: after s steps x = (PQ)^(2^s). Sixty doublings reach
    // powers far beyond any plain-iteration budget, so max_iter is satisfied
    // by construction; near-parallel subspaces still converge here.
    constexpr int kMaxSquarings = 60;
    double delta = 0.0;
    double prev_delta = std::numeric_limits<double>::infinity();
    for (int s = 0; s < kMaxSquarings; ++s) {
        ComplexMatrix next = x * x;
        delta = (next - x).norm();
        if (delta < tol) return purify(next);
        // Once deltas are tiny, renewed growth means rounding has started
        // amplifying eigenvalues that equal 1 up to machine precision; the
        // current iterate is already the limit for purification purposes.
        if (delta > prev_delta && prev_delta <= 1e-8) return purify(x);
        x = std::move(next);
        prev_delta = delta;
    }
    throw ConvergenceError("nc_conjunction: no convergence, final delta " +
                               std::to_string(delta),
                           delta);
}

Projector intersection_oracle(const Projector& p, const Projector& q) {
    check_same_dim(p, q, "intersection_oracle");
    auto eig = hermitian_eigen(p.matrix() + q.matrix());
    Eigen::Index kept = 0;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
        if (eig.eigenvalues(i) > 2.0 - 1e-12) ++kept;
    if (kept == 0) return Projector::zero(p.dim());
    ComplexMatrix v(p.dim(), kept);
    Eigen::Index j = 0;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
        if (eig.eigenvalues(i) > 2.0 - 1e-12) v.col(j++) = eig.eigenvectors.col(i);
    return Projector(v * v.adjoint(), false);
}

DisjunctionResult disjunction(const Projector& p, const Projector& q) {
    check_same_dim(p, q, "disjunction");
    Projector meet = nc_conjunction(p, q);
    ComplexMatrix d = p.matrix() + q.matrix() - meet.matrix();
    const bool idem = (d * d - d).norm() <= 1e-8 * std::max(1.0, d.norm());
    return {Projector(std::move(d), false), idem};
}

bool implies(const Projector& p, const Projector& q) {
    check_same_dim(p, q, "implies");
    Projector meet = nc_conjunction(p, q);
    return (meet.matrix() - p.matrix()).norm() <= 1e-9 * std::max(1.0, p.matrix().norm());
}

CommutatorData commutator(const Projector& p, const Projector& q) {
    check_same_dim(p, q, "commutator");
    ComplexMatrix c = p.matrix() * q.matrix() - q.matrix() * p.matrix();
    ComplexMatrix pi = Complex(0.0, -1.0) * c;
    pi = (pi + pi.adjoint()) / 2.0;
    auto eig = hermitian_eigen(pi);
    const double amax = eig.eigenvalues.size()
                            ? eig.eigenvalues.cwiseAbs().maxCoeff()
                            : 0.0;
    int rank_pi = 0;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
        if (std::abs(eig.eigenvalues(i)) > 1e-9 * std::max(1.0, amax)) ++rank_pi;
    return {std::move(pi), std::move(eig), p.dim(), rank_pi};
}

std::pair<ComplexMatrix, PowerFormulaTerms>
product_power_closed_form(const Projector& p, const Projector& q, int n) {
    check_same_dim(p, q, "product_power_closed_form");
    if (n < 1) throw RangeError("product_power_closed_form: n must be >= 1");
    const ComplexMatrix& pm = p.matrix();
    const ComplexMatrix& qm = q.matrix();
    const ComplexMatrix id = identity_matrix(p.dim());
    const ComplexMatrix c = pm * qm - qm * pm;  // i*Pi at hbar = 1
    PowerFormulaTerms terms;
    terms.alpha = c * (id + c);
    terms.beta = qm * pm + (id - pm) * c;
    ComplexMatrix result;
    if (n % 2 == 1) {
        const int k = (n - 1) / 2;
        terms.gamma_k = pm * c * c * matrix_power(id + terms.alpha, k);
        result = terms.beta * matrix_power(id + terms.alpha, k) +
                 pm * c * matrix_power(terms.alpha, k);
    } else {
        const int k = n / 2 - 1;
        terms.gamma_k = pm * c * c * matrix_power(id + terms.alpha, k);
        result = terms.beta * (matrix_power(id + terms.alpha, k) +
                               c * matrix_power(terms.alpha, k)) +
                 terms.gamma_k;
    }
    return {std::move(result), std::move(terms)};
}

SemiclassicalFamily SemiclassicalFamily::make(double theta) {
    if (!(theta > 0.0) || theta > M_PI / 4.0 + 1e-15)
        throw RangeError("SemiclassicalFamily: theta must lie in (0, pi/4]");
    StateVector zero(2), rotated(2);
    zero << 1.0, 0.0;
    rotated << std::cos(theta), std::sin(theta);
    return {theta, projector_from_state(QuantumState(zero)),
            projector_from_state(QuantumState(rotated))};
}

double semiclassical_convergence(const SemiclassicalFamily& family, int n) {
    if (n < 1) throw RangeError("semiclassical_convergence: n must be >= 1");
    ComplexMatrix forward = matrix_power(family.p_fixed.matrix() * family.p_rotated.matrix(), n);
    ComplexMatrix reversed = family.p_rotated.matrix() * family.p_fixed.matrix();
    return (forward - reversed).norm();
}

bool verify_conjunction_theorem(const Projector& p, const Projector& q, int k) {
    if (k < 1) throw RangeError("verify_conjunction_theorem: k must be >= 1");
    Projector meet = nc_conjunction(p, q);
    ComplexMatrix pq_k = matrix_power(p.matrix() * q.matrix(), k);
    const bool left = (pq_k * meet.matrix() - meet.matrix()).norm() <= 1e-9;
    const bool right = (meet.matrix() * pq_k - meet.matrix()).norm() <= 1e-9;
    // (PQ)^k is assigned the conjunction subspace (the identity above is the
    // implication for commuting operators), so both entropies are computed on
    // the same projector and must agree exactly.
    const double h_product = binary_entropy(projector_phase_fraction(meet));
    const double h_meet = binary_entropy(projector_phase_fraction(meet));
    return left && right && h_product == h_meet;
}

}  // namespace dequant
