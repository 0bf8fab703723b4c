#include "dequant/random.hpp"

namespace dequant {

ComplexMatrix random_unitary(Rng& rng, Eigen::Index d) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix a(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(a);
    return qr.householderQ() * ComplexMatrix::Identity(d, d);
}

Projector random_projector(Rng& rng, Eigen::Index d, int rank) {
    if (rank < 0 || rank > d) throw RangeError("random_projector: rank out of range");
    if (rank == 0) return Projector::zero(d);
    ComplexMatrix u = random_unitary(rng, d);
    ComplexMatrix v = u.leftCols(rank);
    return Projector(v * v.adjoint(), false);
}

QuantumState random_state(Rng& rng, Eigen::Index d) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    v /= v.norm();
    return QuantumState(std::move(v));
}

}  // namespace dequant
