#include "kappalab/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kappalab {

namespace {

void check_hermitian(const Matrix& m, double tol, const char* who) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": not square");
  if (hermiticity_defect(m) > tol)
    throw std::invalid_argument(std::string(who) + ": not Hermitian within tolerance");
}

}  // namespace

PureState::PureState(SubsystemLayout layout, Vector amplitudes)
    : layout_(std::move(layout)), amp_(std::move(amplitudes)) {
  if (amp_.size() != layout_.total_dim())
    throw std::invalid_argument("pure state: amplitude length does not match layout");
  if (std::abs(amp_.norm() - 1.0) > kUnitNormTol)
    throw std::invalid_argument("pure state: not unit norm");
}

DensityMatrix::DensityMatrix(SubsystemLayout layout, Matrix data)
    : layout_(std::move(layout)), mat_(std::move(data)) {
  if (mat_.rows() != layout_.total_dim() || mat_.cols() != layout_.total_dim())
    throw std::invalid_argument("density matrix: shape does not match layout");
  check_hermitian(mat_, kHermitianTol, "density matrix");
  if (std::abs(mat_.trace().real() - 1.0) > kTraceTol ||
      std::abs(mat_.trace().imag()) > kTraceTol)
    throw std::invalid_argument("density matrix: trace != 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdSlack)
    throw std::invalid_argument("density matrix: negative eigenvalue beyond slack");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  DensityMatrix rho;
  rho.layout_ = psi.layout();
  rho.mat_ = psi.amplitudes() * psi.amplitudes().adjoint();
  return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(SubsystemLayout layout) {
  DensityMatrix rho;
  long d = layout.total_dim();
  rho.layout_ = std::move(layout);
  rho.mat_ = Matrix::Identity(d, d) / static_cast<double>(d);
  return rho;
}

DensityMatrix DensityMatrix::basis_state(SubsystemLayout layout, long index) {
  long d = layout.total_dim();
  if (index < 0 || index >= d) throw std::invalid_argument("basis_state: index out of range");
  DensityMatrix rho;
  rho.layout_ = std::move(layout);
  rho.mat_ = Matrix::Zero(d, d);
  rho.mat_(index, index) = 1.0;
  return rho;
}

DensityMatrix DensityMatrix::with_layout(SubsystemLayout layout) const {
  if (layout.total_dim() != layout_.total_dim())
    throw std::invalid_argument("with_layout: total dimension mismatch");
  DensityMatrix rho;
  rho.layout_ = std::move(layout);
  rho.mat_ = mat_;
  return rho;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<int> dims = a.layout().dims();
  dims.insert(dims.end(), b.layout().dims().begin(), b.layout().dims().end());
  SubsystemLayout layout(std::move(dims));  // throws if the cap is exceeded

  long da = a.dim(), db = b.dim();
  Matrix out(da * db, da * db);
  for (long i = 0; i < da; ++i)
    for (long j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = a.data()(i, j) * b.data();
  return DensityMatrix(std::move(layout), std::move(out));
}

Matrix partial_trace_raw(const Matrix& m, const SubsystemLayout& layout,
                         const std::vector<int>& keep) {
  const int n = layout.size();
  std::vector<bool> kept(static_cast<size_t>(n), false);
  for (int i : keep) {
    if (i < 0 || i >= n) throw std::invalid_argument("partial_trace: index out of range");
    kept[static_cast<size_t>(i)] = true;
  }

  long d_keep = 1, d_tr = 1;
  for (int i = 0; i < n; ++i)
    (kept[static_cast<size_t>(i)] ? d_keep : d_tr) *= layout.dim(i);

  // The composite index is additive over per-subsystem digit contributions,
  // so row = base_keep[kept digits] + off_tr[traced digits].
  std::vector<long> base_keep(static_cast<size_t>(d_keep));
  std::vector<long> off_tr(static_cast<size_t>(d_tr));
  {
    std::vector<long> strides(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) strides[static_cast<size_t>(i)] = layout.stride(i);
    for (long k = 0; k < d_keep; ++k) {
      long rem = k, addr = 0;
      for (int i = n - 1; i >= 0; --i) {
        if (!kept[static_cast<size_t>(i)]) continue;
        int d = layout.dim(i);
        addr += static_cast<long>(rem % d) * strides[static_cast<size_t>(i)];
        rem /= d;
      }
      base_keep[static_cast<size_t>(k)] = addr;
    }
    for (long t = 0; t < d_tr; ++t) {
      long rem = t, addr = 0;
      for (int i = n - 1; i >= 0; --i) {
        if (kept[static_cast<size_t>(i)]) continue;
        int d = layout.dim(i);
        addr += static_cast<long>(rem % d) * strides[static_cast<size_t>(i)];
        rem /= d;
      }
      off_tr[static_cast<size_t>(t)] = addr;
    }
  }

  Matrix out = Matrix::Zero(d_keep, d_keep);
  for (long r = 0; r < d_keep; ++r)
    for (long c = 0; c < d_keep; ++c) {
      Complex acc = 0.0;
      for (long t = 0; t < d_tr; ++t)
        acc += m(base_keep[static_cast<size_t>(r)] + off_tr[static_cast<size_t>(t)],
                 base_keep[static_cast<size_t>(c)] + off_tr[static_cast<size_t>(t)]);
      out(r, c) = acc;
    }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep) {
  if (keep.size() == rho.layout().size()) return rho;
  Matrix out = partial_trace_raw(rho.data(), rho.layout(), keep.indices());
  std::vector<int> dims;
  dims.reserve(static_cast<size_t>(keep.size()));
  for (int i : keep.indices()) dims.push_back(rho.layout().dim(i));
  return DensityMatrix(SubsystemLayout(std::move(dims)), std::move(out));
}

double trace_norm(const Matrix& x) {
  double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  check_hermitian(x, 1e-9 * scale, "trace_norm");
  Matrix h = (x + x.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double fidelity(const DensityMatrix& rho, const PureState& psi) {
  if (rho.layout() != psi.layout())
    throw std::invalid_argument("fidelity: layout mismatch");
  Complex f = psi.amplitudes().dot(rho.data() * psi.amplitudes());
  return std::clamp(f.real(), 0.0, 1.0);
}

std::pair<RealVector, Matrix> hermitian_eigen(const Matrix& x) {
  check_hermitian(x, 1e-9 * std::max(1.0, x.cwiseAbs().maxCoeff()), "hermitian_eigen");
  Eigen::SelfAdjointEigenSolver<Matrix> es((x + x.adjoint()) / 2.0);
  RealVector vals = es.eigenvalues().reverse();
  Matrix vecs = es.eigenvectors().rowwise().reverse();
  return {std::move(vals), std::move(vecs)};
}

double hermiticity_defect(const Matrix& x) {
  return (x - x.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace kappalab
