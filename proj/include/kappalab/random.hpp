#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kappalab/qstate.hpp"

namespace kappalab {

/// Stateless mix of a base seed and a task tag, so parallel tasks draw from
/// independent, scheduling-independent streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

/// Haar-random unit vector of dimension d.
Vector random_pure_vector(long d, Rng& rng);

/// Haar-random unitary (QR of a Ginibre matrix with phase fix).
Matrix random_unitary(long d, Rng& rng);

/// Ginibre-induced random density matrix of the given rank (full rank when
/// rank <= 0).
DensityMatrix random_density_matrix(SubsystemLayout layout, Rng& rng, int rank = 0);

/// A random mixture of `terms` pure product states over the layout, with
/// Dirichlet(1) weights. Returns the state; the ensemble itself is separable
/// across every bipartition by construction.
DensityMatrix random_product_mixture(const SubsystemLayout& layout, int terms, Rng& rng);

}  // namespace kappalab
