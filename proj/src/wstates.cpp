#include "kappalab/wstates.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "kappalab/random.hpp"

namespace kappalab {

StateFamily StateFamily::parse(const std::string& kind_string, int n) {
  StateFamily f;
  f.n = n;
  if (kind_string == "w") {
    f.kind = Kind::W;
  } else if (kind_string.rfind("dicke:", 0) == 0) {
    f.kind = Kind::Dicke;
    f.k = std::stoi(kind_string.substr(6));
  } else if (kind_string == "catpairs") {
    f.kind = Kind::CatPairs;
  } else if (kind_string == "zero") {
    f.kind = Kind::AllZero;
  } else if (kind_string.rfind("product:", 0) == 0) {
    f.kind = Kind::ProductRandom;
    f.seed = std::stoull(kind_string.substr(8));
  } else if (kind_string == "ghz") {
    f.kind = Kind::Ghz;
  } else {
    throw std::invalid_argument("unknown state family: " + kind_string);
  }
  return f;
}

DensityMatrix StateFamily::realize() const {
  switch (kind) {
    case Kind::W:
      return DensityMatrix::from_pure(w_state(n));
    case Kind::Dicke:
      return DensityMatrix::from_pure(dicke_state(n, k));
    case Kind::CatPairs:
      if (n % 2 != 0) throw std::invalid_argument("catpairs: odd qubit count");
      return cat_pairs_state(n / 2);
    case Kind::AllZero:
      return DensityMatrix::basis_state(SubsystemLayout::qubits(n), 0);
    case Kind::ProductRandom: {
      Rng rng(seed);
      SubsystemLayout layout = SubsystemLayout::qubits(n);
      Vector prod = Vector::Ones(1);
      for (int q = 0; q < n; ++q) {
        Vector f1 = random_pure_vector(2, rng);
        Vector next(prod.size() * 2);
        for (long i = 0; i < prod.size(); ++i) next.segment(i * 2, 2) = prod(i) * f1;
        prod = std::move(next);
      }
      return DensityMatrix::from_pure(PureState(layout, std::move(prod)));
    }
    case Kind::Ghz:
      return DensityMatrix::from_pure(ghz_state(n));
  }
  throw std::logic_error("unreachable");
}

std::string StateFamily::to_string() const {
  switch (kind) {
    case Kind::W:
      return "w";
    case Kind::Dicke:
      return "dicke:" + std::to_string(k);
    case Kind::CatPairs:
      return "catpairs";
    case Kind::AllZero:
      return "zero";
    case Kind::ProductRandom:
      return "product:" + std::to_string(seed);
    case Kind::Ghz:
      return "ghz";
  }
  return "?";
}

PureState w_state(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("w_state: n out of range");
  long dim = 1L << n;
  Vector amp = Vector::Zero(dim);
  double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) amp(1L << (n - 1 - i)) = a;
  return PureState(SubsystemLayout::qubits(n), std::move(amp));
}

PureState dicke_state(int n, int k) {
  if (n < 1 || n > 12) throw std::invalid_argument("dicke_state: n out of range");
  if (k < 0 || k > n) throw std::invalid_argument("dicke_state: k out of range");
  long dim = 1L << n;
  Vector amp = Vector::Zero(dim);
  long count = 0;
  for (long b = 0; b < dim; ++b)
    if (std::popcount(static_cast<unsigned long>(b)) == k) ++count;
  double a = 1.0 / std::sqrt(static_cast<double>(count));
  for (long b = 0; b < dim; ++b)
    if (std::popcount(static_cast<unsigned long>(b)) == k) amp(b) = a;
  return PureState(SubsystemLayout::qubits(n), std::move(amp));
}

PureState ghz_state(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("ghz_state: n out of range");
  long dim = 1L << n;
  Vector amp = Vector::Zero(dim);
  amp(0) = amp(dim - 1) = 1.0 / std::sqrt(2.0);
  return PureState(SubsystemLayout::qubits(n), std::move(amp));
}

DensityMatrix w_reduced(long n, int k) {
  if (k < 1 || k > 12) throw std::invalid_argument("w_reduced: k out of range");
  if (n < k) throw std::invalid_argument("w_reduced: need n >= k");
  double t = static_cast<double>(k) / static_cast<double>(n);
  Vector wk = w_state(k).amplitudes();
  long dim = wk.size();
  Matrix m = t * (wk * wk.adjoint());
  m(0, 0) += 1.0 - t;
  return DensityMatrix(SubsystemLayout::qubits(k), std::move(m));
}

DensityMatrix cat_pairs_state(int m) {
  if (m < 1 || 2 * m > 12) throw std::invalid_argument("cat_pairs_state: cap exceeded");
  Vector bell = Vector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  DensityMatrix pair = DensityMatrix::from_pure(PureState(SubsystemLayout::qubits(2), bell));
  DensityMatrix out = pair;
  for (int i = 1; i < m; ++i) out = tensor(out, pair);
  return out;
}

WCircuitStyle parse_wcircuit_style(const std::string& s) {
  if (s == "linear_cascade") return WCircuitStyle::LinearCascade;
  if (s == "log_depth_attempt") return WCircuitStyle::LogDepthAttempt;
  throw std::invalid_argument("unknown circuit style: " + s);
}

std::string to_string(WCircuitStyle s) {
  return s == WCircuitStyle::LinearCascade ? "linear_cascade" : "log_depth_attempt";
}

namespace {

// Moves the excitation from `from` to `to` with probability p, leaving the
// complementary amplitude in place. Exact for real nonnegative amplitudes.
void emit_split(std::vector<Gate>& gates, int from, int to, double p) {
  double theta = 2.0 * std::asin(std::sqrt(p));
  gates.push_back(Gate::cry(from, to, theta));
  gates.push_back(Gate::cnot(to, from));
}

}  // namespace

Circuit w_circuit(int n, WCircuitStyle style) {
  if (n < 1 || n > 12) throw std::invalid_argument("w_circuit: n out of range");
  std::vector<Gate> gates;
  gates.push_back(Gate::x(0));
  if (n == 1) return Circuit(n, std::move(gates));

  if (style == WCircuitStyle::LinearCascade) {
    // After step i the excitation sits on qubit i+1 with the unassigned
    // amplitude; qubits 0..i already hold 1/sqrt(n) each.
    for (int i = 0; i < n - 1; ++i)
      emit_split(gates, i, i + 1, static_cast<double>(n - 1 - i) / static_cast<double>(n - i));
  } else {
    // Binary-tree splits, emitted level by level so same-level splits share
    // circuit layers.
    struct Block {
      int start;
      int size;
    };
    std::vector<Block> level = {{0, n}};
    while (true) {
      std::vector<Block> next;
      bool any = false;
      for (const Block& b : level) {
        if (b.size <= 1) continue;
        any = true;
        int right = b.size / 2;
        int left = b.size - right;
        emit_split(gates, b.start, b.start + left,
                   static_cast<double>(right) / static_cast<double>(b.size));
        next.push_back({b.start, left});
        next.push_back({b.start + left, right});
      }
      if (!any) break;
      level = std::move(next);
    }
  }
  return Circuit(n, std::move(gates));
}

}  // namespace kappalab
