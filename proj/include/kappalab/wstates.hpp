#pragma once

#include <cstdint>
#include <string>

#include "kappalab/circuit.hpp"
#include "kappalab/qstate.hpp"

namespace kappalab {

/// Named state families, as addressed from experiment configs. Kind strings:
/// "w", "dicke:k", "catpairs", "zero", "product:seed", "ghz".
struct StateFamily {
  enum class Kind { W, Dicke, CatPairs, AllZero, ProductRandom, Ghz };
  Kind kind = Kind::W;
  int n = 1;           // qubit count
  int k = 0;           // Dicke excitation number
  std::uint64_t seed = 0;  // ProductRandom

  static StateFamily parse(const std::string& kind_string, int n);
  DensityMatrix realize() const;
  std::string to_string() const;
};

/// Uniform superposition over the n Hamming-weight-1 basis states.
PureState w_state(int n);

/// Uniform superposition over all C(n,k) Hamming-weight-k basis states.
PureState dicke_state(int n, int k);

/// (|0...0> + |1...1>)/sqrt(2).
PureState ghz_state(int n);

/// Reduced state of W_n on any k of its qubits, in closed form:
/// (k/n) |W_k><W_k| + (1-k/n) |0^k><0^k|. Only the k kept qubits are
/// materialized, so n may far exceed the dense cap.
DensityMatrix w_reduced(long n, int k);

/// Tensor product of m two-qubit pairs (|00>+|11>)/sqrt(2) on 2m qubits.
DensityMatrix cat_pairs_state(int m);

enum class WCircuitStyle { LinearCascade, LogDepthAttempt };

WCircuitStyle parse_wcircuit_style(const std::string& s);
std::string to_string(WCircuitStyle s);

/// Circuit over {X, Ry, CRy, CNOT} mapping |0^n> exactly to |W_n>. The
/// linear cascade walks the excitation down the register; the log-depth
/// variant splits amplitude along a binary tree so same-level splits land
/// in common layers.
Circuit w_circuit(int n, WCircuitStyle style);

}  // namespace kappalab
