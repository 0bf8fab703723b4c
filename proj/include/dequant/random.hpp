#pragma once

#include <random>

#include "dequant/projector.hpp"

namespace dequant {

using Rng = std::mt19937_64;

// QR of a complex Gaussian matrix; Haar-distributed.
ComplexMatrix random_unitary(Rng& rng, Eigen::Index d);

// Frame projector from the first r columns of a random unitary.
Projector random_projector(Rng& rng, Eigen::Index d, int rank);

QuantumState random_state(Rng& rng, Eigen::Index d);

}  // namespace dequant
