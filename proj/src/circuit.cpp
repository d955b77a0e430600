#include "kappalab/circuit.hpp"

#include <algorithm>
#include <cmath>

namespace kappalab {

Circuit::Circuit(int n, std::vector<Gate> gates) : n_(n), gates_(std::move(gates)) {
  if (n < 1) throw std::invalid_argument("circuit: need at least one qubit");
  for (const Gate& g : gates_) {
    if (static_cast<int>(g.targets.size()) != g.arity())
      throw std::invalid_argument("circuit: gate arity mismatch");
    for (int t : g.targets)
      if (t < 0 || t >= n) throw std::invalid_argument("circuit: target out of range");
    if (g.arity() == 2 && g.targets[0] == g.targets[1])
      throw std::invalid_argument("circuit: duplicate targets");
  }
  // Greedy layering: a gate lands in the first layer after every earlier
  // gate that shares a qubit with it.
  std::vector<int> qubit_free(static_cast<size_t>(n), 0);
  for (size_t gi = 0; gi < gates_.size(); ++gi) {
    int layer = 0;
    for (int t : gates_[gi].targets)
      layer = std::max(layer, qubit_free[static_cast<size_t>(t)]);
    for (int t : gates_[gi].targets) qubit_free[static_cast<size_t>(t)] = layer + 1;
    if (layer >= static_cast<int>(layers_.size())) layers_.resize(static_cast<size_t>(layer) + 1);
    layers_[static_cast<size_t>(layer)].push_back(static_cast<int>(gi));
  }
  depth_ = static_cast<int>(layers_.size());
}

Matrix gate_unitary(const Gate& g) {
  switch (g.kind) {
    case GateKind::X: {
      Matrix u(2, 2);
      u << 0, 1, 1, 0;
      return u;
    }
    case GateKind::Ry: {
      double c = std::cos(g.theta / 2), s = std::sin(g.theta / 2);
      Matrix u(2, 2);
      u << c, -s, s, c;
      return u;
    }
    case GateKind::CNOT: {
      Matrix u = Matrix::Zero(4, 4);
      u(0, 0) = u(1, 1) = 1;
      u(2, 3) = u(3, 2) = 1;
      return u;
    }
    case GateKind::CRy: {
      double c = std::cos(g.theta / 2), s = std::sin(g.theta / 2);
      Matrix u = Matrix::Zero(4, 4);
      u(0, 0) = u(1, 1) = 1;
      u(2, 2) = c;
      u(2, 3) = -s;
      u(3, 2) = s;
      u(3, 3) = c;
      return u;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// Applies a 1- or 2-qubit unitary to a statevector; qubit 0 is the most
// significant bit.
void apply_to_vector(Vector& psi, const Gate& g, int n) {
  Matrix u = gate_unitary(g);
  long dim = psi.size();
  if (g.arity() == 1) {
    long s = 1L << (n - 1 - g.targets[0]);
    for (long base = 0; base < dim; ++base) {
      if (base & s) continue;
      Complex a0 = psi(base), a1 = psi(base | s);
      psi(base) = u(0, 0) * a0 + u(0, 1) * a1;
      psi(base | s) = u(1, 0) * a0 + u(1, 1) * a1;
    }
  } else {
    long sc = 1L << (n - 1 - g.targets[0]);
    long st = 1L << (n - 1 - g.targets[1]);
    for (long base = 0; base < dim; ++base) {
      if ((base & sc) || (base & st)) continue;
      long idx[4] = {base, base | st, base | sc, base | sc | st};
      Complex a[4];
      for (int i = 0; i < 4; ++i) a[i] = psi(idx[i]);
      for (int i = 0; i < 4; ++i) {
        Complex acc = 0.0;
        for (int j = 0; j < 4; ++j) acc += u(i, j) * a[j];
        psi(idx[i]) = acc;
      }
    }
  }
}

}  // namespace

PureState simulate_pure(const Circuit& c) {
  long dim = 1L << c.n();
  Vector psi = Vector::Zero(dim);
  psi(0) = 1.0;
  for (const Gate& g : c.gates()) apply_to_vector(psi, g, c.n());
  psi /= psi.norm();
  return PureState(SubsystemLayout::qubits(c.n()), std::move(psi));
}

}  // namespace kappalab
