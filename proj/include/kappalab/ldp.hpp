#pragma once

#include <cstdint>
#include <vector>

#include "kappalab/qstate.hpp"

namespace kappalab {

/// Probability distribution over n-bit strings, indexed by bit mask with bit
/// 0 of the string as the most significant mask bit (matching the qubit
/// ordering of DensityMatrix diagonals).
struct OutputDistribution {
  int n = 0;
  std::vector<double> probs;

  void validate() const;
};

/// Coefficients f_hat(T) of the +/-1 character expansion of
/// f(x) = 2^n Pr(x), indexed by the subset mask T. f_hat(0) = 1 for a
/// probability distribution.
struct FourierSpectrum {
  int n = 0;
  std::vector<double> coefficients;

  double parseval_sum() const;  // sum over T of f_hat(T)^2
};

/// Diagonal of rho in the computational basis, convolved with independent
/// per-bit flips of rate q in [0, 1/2].
OutputDistribution measure_distribution(const DensityMatrix& rho, double readout_flip);

/// Exact Walsh-Hadamard transform of the distribution (n <= 16).
FourierSpectrum fourier_spectrum(const OutputDistribution& dist);

/// Inverse transform back to a (signed) function table; exact round trip.
OutputDistribution inverse_spectrum(const FourierSpectrum& spec);

struct LowDegreeMass {
  /// Share of non-constant Fourier weight at degrees 1..d; 1 by convention
  /// when there is no non-constant weight at all.
  double mass_fraction = 1.0;
  /// Same statistic with the degree-0 term included in the denominator.
  double mass_fraction_incl0 = 1.0;
  /// L2 distance between Pr and its degree-<=d truncation (the truncation
  /// may be negative pointwise; it is reported, not clipped).
  double l2_truncation_error = 0.0;
};

LowDegreeMass low_degree_mass(const FourierSpectrum& spec, int d);

/// Per-degree Fourier weights W_k = sum_{|T|=k} f_hat(T)^2, k = 0..n.
std::vector<double> degree_profile(const OutputDistribution& dist);

/// Optional shot-noise sampler (excluded from acceptance checks): empirical
/// distribution of `shots` draws.
OutputDistribution sample_shots(const OutputDistribution& dist, long shots, std::uint64_t seed);

}  // namespace kappalab
