#include "kappalab/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "kappalab/wstates.hpp"

namespace kappalab {

namespace {

void check_rate(double v, double lo, double hi, const char* name) {
  if (!(v >= lo && v <= hi))
    throw std::invalid_argument(std::string("noise: ") + name + " out of range");
}

void check_completeness(const std::vector<Matrix>& kraus) {
  if (kraus.empty()) throw std::invalid_argument("channel: empty Kraus set");
  long d = kraus[0].rows();
  Matrix acc = Matrix::Zero(d, d);
  for (const Matrix& k : kraus) {
    if (k.rows() != d || k.cols() != d)
      throw std::invalid_argument("channel: inconsistent Kraus shapes");
    acc += k.adjoint() * k;
  }
  if ((acc - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("channel: Kraus set is not trace-preserving");
}

}  // namespace

void NoiseModel::validate() const {
  check_rate(depolarizing_1q, 0, 1, "depolarizing_1q");
  check_rate(depolarizing_2q, 0, 1, "depolarizing_2q");
  check_rate(amplitude_damping, 0, 1, "amplitude_damping");
  check_rate(dephasing, 0, 1, "dephasing");
  check_rate(readout_flip, 0, 0.5, "readout_flip");
}

std::vector<Matrix> depolarizing_kraus(double p) {
  check_rate(p, 0, 1, "depolarizing");
  Matrix id = Matrix::Identity(2, 2);
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  double w = std::sqrt(p / 4.0);
  return {std::sqrt(1.0 - 3.0 * p / 4.0) * id, w * x, w * y, w * z};
}

std::vector<Matrix> amplitude_damping_kraus(double gamma) {
  check_rate(gamma, 0, 1, "amplitude_damping");
  Matrix k0 = Matrix::Zero(2, 2), k1 = Matrix::Zero(2, 2);
  k0(0, 0) = 1;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  return {k0, k1};
}

std::vector<Matrix> dephasing_kraus(double lambda) {
  check_rate(lambda, 0, 1, "dephasing");
  Matrix k0 = std::sqrt(1.0 - lambda / 2.0) * Matrix::Identity(2, 2);
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  return {k0, std::sqrt(lambda / 2.0) * z};
}

namespace {

// One- and two-qubit conjugations on a dense density matrix, via 2x2 (4x4)
// block updates over bit strides. Qubit 0 is the most significant bit.

void conjugate_1q(Matrix& rho, const Matrix& u, int q, int n) {
  long dim = rho.rows();
  long s = 1L << (n - 1 - q);
  // Left multiply rows.
  for (long c = 0; c < dim; ++c)
    for (long r = 0; r < dim; ++r) {
      if (r & s) continue;
      Complex a0 = rho(r, c), a1 = rho(r | s, c);
      rho(r, c) = u(0, 0) * a0 + u(0, 1) * a1;
      rho(r | s, c) = u(1, 0) * a0 + u(1, 1) * a1;
    }
  // Right multiply columns by u^dagger.
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c) {
      if (c & s) continue;
      Complex a0 = rho(r, c), a1 = rho(r, c | s);
      rho(r, c) = a0 * std::conj(u(0, 0)) + a1 * std::conj(u(0, 1));
      rho(r, c | s) = a0 * std::conj(u(1, 0)) + a1 * std::conj(u(1, 1));
    }
}

void conjugate_2q(Matrix& rho, const Matrix& u, int q0, int q1, int n) {
  long dim = rho.rows();
  long s0 = 1L << (n - 1 - q0);
  long s1 = 1L << (n - 1 - q1);
  for (long c = 0; c < dim; ++c)
    for (long r = 0; r < dim; ++r) {
      if ((r & s0) || (r & s1)) continue;
      long idx[4] = {r, r | s1, r | s0, r | s0 | s1};
      Complex a[4];
      for (int i = 0; i < 4; ++i) a[i] = rho(idx[i], c);
      for (int i = 0; i < 4; ++i) {
        Complex acc = 0.0;
        for (int j = 0; j < 4; ++j) acc += u(i, j) * a[j];
        rho(idx[i], c) = acc;
      }
    }
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c) {
      if ((c & s0) || (c & s1)) continue;
      long idx[4] = {c, c | s1, c | s0, c | s0 | s1};
      Complex a[4];
      for (int i = 0; i < 4; ++i) a[i] = rho(r, idx[i]);
      for (int i = 0; i < 4; ++i) {
        Complex acc = 0.0;
        for (int j = 0; j < 4; ++j) acc += a[j] * std::conj(u(i, j));
        rho(r, idx[i]) = acc;
      }
    }
}

void kraus_1q(Matrix& rho, const std::vector<Matrix>& kraus, int q, int n) {
  long dim = rho.rows();
  Matrix out = Matrix::Zero(dim, dim);
  for (const Matrix& k : kraus) {
    Matrix term = rho;
    conjugate_1q(term, k, q, n);
    out += term;
  }
  rho = std::move(out);
}

void kraus_2q(Matrix& rho, const std::vector<Matrix>& kraus, int q0, int q1, int n) {
  long dim = rho.rows();
  Matrix out = Matrix::Zero(dim, dim);
  for (const Matrix& k : kraus) {
    Matrix term = rho;
    conjugate_2q(term, k, q0, q1, n);
    out += term;
  }
  rho = std::move(out);
}

}  // namespace

void apply_gate_raw(Matrix& rho, const Gate& g, int n) {
  Matrix u = gate_unitary(g);
  if (g.arity() == 1)
    conjugate_1q(rho, u, g.targets[0], n);
  else
    conjugate_2q(rho, u, g.targets[0], g.targets[1], n);
}

void apply_channel_raw(Matrix& rho, const std::vector<Matrix>& kraus,
                       const std::vector<int>& targets, int n) {
  if (targets.size() == 1)
    kraus_1q(rho, kraus, targets[0], n);
  else if (targets.size() == 2)
    kraus_2q(rho, kraus, targets[0], targets[1], n);
  else
    throw std::invalid_argument("channel: only 1- and 2-qubit targets supported");
}

DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& g) {
  int n = rho.layout().size();
  if (!rho.layout().all_qubits())
    throw std::invalid_argument("apply_gate: qubit layouts only");
  for (int t : g.targets)
    if (t < 0 || t >= n) throw std::invalid_argument("apply_gate: target out of range");
  Matrix m = rho.data();
  apply_gate_raw(m, g, n);
  return DensityMatrix(rho.layout(), std::move(m));
}

DensityMatrix apply_channel(const DensityMatrix& rho, const std::vector<Matrix>& kraus,
                            const std::vector<int>& targets) {
  int n = rho.layout().size();
  if (!rho.layout().all_qubits())
    throw std::invalid_argument("apply_channel: qubit layouts only");
  long want = 1L << targets.size();
  for (int t : targets)
    if (t < 0 || t >= n) throw std::invalid_argument("apply_channel: target out of range");
  for (const Matrix& k : kraus)
    if (k.rows() != want) throw std::invalid_argument("apply_channel: Kraus shape mismatch");
  check_completeness(kraus);
  Matrix m = rho.data();
  apply_channel_raw(m, kraus, targets, n);
  return DensityMatrix(rho.layout(), std::move(m));
}

DensityMatrix simulate(const Circuit& c, const NoiseModel& noise) {
  noise.validate();
  int n = c.n();
  if (n > 10) throw std::invalid_argument("simulate: n > 10 exceeds the density-matrix cap");
  long dim = 1L << n;
  Matrix rho = Matrix::Zero(dim, dim);
  rho(0, 0) = 1.0;

  std::vector<Matrix> dep1 =
      noise.depolarizing_1q > 0 ? depolarizing_kraus(noise.depolarizing_1q) : std::vector<Matrix>{};
  std::vector<Matrix> dep2 =
      noise.depolarizing_2q > 0 ? depolarizing_kraus(noise.depolarizing_2q) : std::vector<Matrix>{};
  std::vector<Matrix> damp = noise.amplitude_damping > 0
                                 ? amplitude_damping_kraus(noise.amplitude_damping)
                                 : std::vector<Matrix>{};
  std::vector<Matrix> deph =
      noise.dephasing > 0 ? dephasing_kraus(noise.dephasing) : std::vector<Matrix>{};

  for (const auto& layer : c.layers()) {
    for (int gi : layer) {
      const Gate& g = c.gates()[static_cast<size_t>(gi)];
      apply_gate_raw(rho, g, n);
      if (g.arity() == 1) {
        if (!dep1.empty()) kraus_1q(rho, dep1, g.targets[0], n);
      } else if (!dep2.empty()) {
        kraus_1q(rho, dep2, g.targets[0], n);
        kraus_1q(rho, dep2, g.targets[1], n);
      }
    }
    for (int q = 0; q < n; ++q) {
      if (!damp.empty()) kraus_1q(rho, damp, q, n);
      if (!deph.empty()) kraus_1q(rho, deph, q, n);
    }
  }
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityMatrix(SubsystemLayout::qubits(n), std::move(rho));
}

FidelitySweepResult fidelity_sweep(const std::vector<int>& n_values, const NoiseModel& noise,
                                   WCircuitStyle style) {
  FidelitySweepResult result;
  for (int n : n_values) {
    Circuit c = w_circuit(n, style);
    DensityMatrix rho = simulate(c, noise);
    result.rows.push_back({n, c.depth(), fidelity(rho, w_state(n))});
  }
  // log-fidelity vs n least squares.
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  long m = 0;
  for (const auto& r : result.rows) {
    if (r.fidelity <= 0) continue;
    double x = r.n, y = std::log(r.fidelity);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
    ++m;
  }
  if (m >= 2) {
    double denom = m * sxx - sx * sx;
    if (denom > 0) {
      result.slope = (m * sxy - sx * sy) / denom;
      result.intercept = (sy - result.slope * sx) / m;
      double ss_tot = syy - sy * sy / m;
      double ss_res = 0;
      for (const auto& r : result.rows) {
        if (r.fidelity <= 0) continue;
        double e = std::log(r.fidelity) - (result.slope * r.n + result.intercept);
        ss_res += e * e;
      }
      result.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    }
  }
  return result;
}

}  // namespace kappalab
