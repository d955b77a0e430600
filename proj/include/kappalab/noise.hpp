#pragma once

#include <vector>

#include "kappalab/circuit.hpp"
#include "kappalab/qstate.hpp"

namespace kappalab {

/// Gate-based Kraus noise: depolarizing after each gate (the 2-qubit rate is
/// applied to both targets), amplitude damping and dephasing on every qubit
/// after each layer, and readout bit flips at measurement time (consumed by
/// the distribution code, not by simulate()).
struct NoiseModel {
  double depolarizing_1q = 0.0;
  double depolarizing_2q = 0.0;
  double amplitude_damping = 0.0;
  double dephasing = 0.0;
  double readout_flip = 0.0;

  void validate() const;
  bool is_noiseless() const {
    return depolarizing_1q == 0 && depolarizing_2q == 0 && amplitude_damping == 0 &&
           dephasing == 0;
  }
};

/// Kraus operators for the standard single-qubit channels. All sets satisfy
/// sum K^dagger K = I.
std::vector<Matrix> depolarizing_kraus(double p);
std::vector<Matrix> amplitude_damping_kraus(double gamma);
std::vector<Matrix> dephasing_kraus(double lambda);

/// U rho U^dagger on the gate's targets.
DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& g);

/// sum_k K rho K^dagger on 1 or 2 targets. Kraus completeness is checked.
DensityMatrix apply_channel(const DensityMatrix& rho, const std::vector<Matrix>& kraus,
                            const std::vector<int>& targets);

/// Raw-matrix versions used in simulation loops (no invariant re-checks).
void apply_gate_raw(Matrix& rho, const Gate& g, int n);
void apply_channel_raw(Matrix& rho, const std::vector<Matrix>& kraus,
                       const std::vector<int>& targets, int n);

/// Exact density-matrix evolution: gates in order, each gate followed by its
/// depolarizing channel, each greedy layer followed by damping/dephasing on
/// all qubits. No trajectory sampling.
DensityMatrix simulate(const Circuit& c, const NoiseModel& noise);

struct FidelitySweepRow {
  int n;
  int depth;
  double fidelity;
};

struct FidelitySweepResult {
  std::vector<FidelitySweepRow> rows;
  // Least-squares fit of log(fidelity) against n.
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Prepares W_n with the given circuit style for each n and reports fidelity
/// against the ideal state.
FidelitySweepResult fidelity_sweep(const std::vector<int>& n_values, const NoiseModel& noise,
                                   WCircuitStyle style);

}  // namespace kappalab
