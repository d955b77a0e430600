#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "kappalab/qstate.hpp"

namespace kappalab {

enum class GateKind { X, Ry, CNOT, CRy };

/// One gate. For two-qubit kinds, targets = {control, target}.
struct Gate {
  GateKind kind;
  std::vector<int> targets;
  double theta = 0.0;

  int arity() const { return kind == GateKind::X || kind == GateKind::Ry ? 1 : 2; }

  static Gate x(int q) { return {GateKind::X, {q}, 0.0}; }
  static Gate ry(int q, double theta) { return {GateKind::Ry, {q}, theta}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, {control, target}, 0.0}; }
  static Gate cry(int control, int target, double theta) {
    return {GateKind::CRy, {control, target}, theta};
  }
};

/// Ordered gate list over n qubits. Depth is the greedy left-to-right
/// layering of disjoint-support gates; layers also define where per-layer
/// noise channels act in the simulator.
class Circuit {
 public:
  Circuit(int n, std::vector<Gate> gates);

  int n() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  int depth() const { return depth_; }

  /// Gate indices grouped by greedy layer, in circuit order within a layer.
  const std::vector<std::vector<int>>& layers() const { return layers_; }

 private:
  int n_;
  std::vector<Gate> gates_;
  std::vector<std::vector<int>> layers_;
  int depth_ = 0;
};

/// 2x2 / 4x4 unitary for a gate, in the {control, target} ordering for
/// two-qubit kinds.
Matrix gate_unitary(const Gate& g);

/// Noiseless statevector simulation from |0...0>.
PureState simulate_pure(const Circuit& c);

}  // namespace kappalab
