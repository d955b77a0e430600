#include "kappalab/ldp.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace kappalab {

void OutputDistribution::validate() const {
  if (n < 0 || probs.size() != (1ull << n))
    throw std::invalid_argument("distribution: length != 2^n");
  double sum = 0;
  for (double p : probs) {
    if (p < 0) throw std::invalid_argument("distribution: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::invalid_argument("distribution: probabilities do not sum to 1");
}

double FourierSpectrum::parseval_sum() const {
  double s = 0;
  for (double c : coefficients) s += c * c;
  return s;
}

OutputDistribution measure_distribution(const DensityMatrix& rho, double readout_flip) {
  if (!rho.layout().all_qubits())
    throw std::invalid_argument("measure_distribution: qubit layouts only");
  if (!(readout_flip >= 0.0 && readout_flip <= 0.5))
    throw std::invalid_argument("measure_distribution: readout_flip out of [0, 1/2]");
  int n = rho.layout().size();
  long dim = rho.dim();
  OutputDistribution dist;
  dist.n = n;
  dist.probs.resize(static_cast<size_t>(dim));
  double sum = 0;
  for (long i = 0; i < dim; ++i) {
    double p = rho.data()(i, i).real();
    if (p < 0) p = 0;  // PSD slack can leave -1e-12 on the diagonal
    dist.probs[static_cast<size_t>(i)] = p;
    sum += p;
  }
  for (double& p : dist.probs) p /= sum;

  double q = readout_flip;
  if (q > 0) {
    // Independent per-bit binary symmetric channel, applied bit by bit.
    for (int b = 0; b < n; ++b) {
      long s = 1L << (n - 1 - b);
      for (long i = 0; i < dim; ++i) {
        if (i & s) continue;
        double p0 = dist.probs[static_cast<size_t>(i)];
        double p1 = dist.probs[static_cast<size_t>(i | s)];
        dist.probs[static_cast<size_t>(i)] = (1 - q) * p0 + q * p1;
        dist.probs[static_cast<size_t>(i | s)] = q * p0 + (1 - q) * p1;
      }
    }
  }
  dist.validate();
  return dist;
}

namespace {

// In-place Walsh-Hadamard butterfly (no normalization).
void wht(std::vector<double>& v) {
  size_t len = v.size();
  for (size_t h = 1; h < len; h <<= 1)
    for (size_t i = 0; i < len; i += h << 1)
      for (size_t j = i; j < i + h; ++j) {
        double a = v[j], b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
}

}  // namespace

FourierSpectrum fourier_spectrum(const OutputDistribution& dist) {
  if (dist.n > 16) throw std::invalid_argument("fourier_spectrum: n > 16");
  dist.validate();
  FourierSpectrum spec;
  spec.n = dist.n;
  // f_hat(T) = sum_x Pr(x) (-1)^{|T & x|} is exactly the WHT of Pr.
  spec.coefficients = dist.probs;
  wht(spec.coefficients);
  return spec;
}

OutputDistribution inverse_spectrum(const FourierSpectrum& spec) {
  OutputDistribution dist;
  dist.n = spec.n;
  dist.probs = spec.coefficients;
  wht(dist.probs);
  double scale = 1.0 / static_cast<double>(1ull << spec.n);
  for (double& p : dist.probs) p *= scale;
  return dist;
}

LowDegreeMass low_degree_mass(const FourierSpectrum& spec, int d) {
  if (d < 0 || d > spec.n) throw std::invalid_argument("low_degree_mass: d out of range");
  double low = 0, high = 0, zero = 0;
  for (size_t t = 0; t < spec.coefficients.size(); ++t) {
    double c2 = spec.coefficients[t] * spec.coefficients[t];
    int deg = std::popcount(t);
    if (deg == 0)
      zero += c2;
    else if (deg <= d)
      low += c2;
    else
      high += c2;
  }
  LowDegreeMass out;
  double nonconst = low + high;
  out.mass_fraction = nonconst > 0 ? low / nonconst : 1.0;
  double total = zero + nonconst;
  out.mass_fraction_incl0 = total > 0 ? (zero + low) / total : 1.0;
  out.l2_truncation_error = std::sqrt(high / static_cast<double>(1ull << spec.n));
  return out;
}

std::vector<double> degree_profile(const OutputDistribution& dist) {
  FourierSpectrum spec = fourier_spectrum(dist);
  std::vector<double> w(static_cast<size_t>(dist.n) + 1, 0.0);
  for (size_t t = 0; t < spec.coefficients.size(); ++t)
    w[static_cast<size_t>(std::popcount(t))] += spec.coefficients[t] * spec.coefficients[t];
  return w;
}

OutputDistribution sample_shots(const OutputDistribution& dist, long shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample_shots: need at least one shot");
  dist.validate();
  std::mt19937_64 rng(seed);
  std::discrete_distribution<long> draw(dist.probs.begin(), dist.probs.end());
  OutputDistribution out;
  out.n = dist.n;
  out.probs.assign(dist.probs.size(), 0.0);
  for (long s = 0; s < shots; ++s) out.probs[static_cast<size_t>(draw(rng))] += 1.0;
  for (double& p : out.probs) p /= static_cast<double>(shots);
  return out;
}

}  // namespace kappalab
