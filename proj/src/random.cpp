#include "kappalab/random.hpp"

#include <cmath>

namespace kappalab {

Vector random_pure_vector(long d, Rng& rng) {
  std::normal_distribution<double> g;
  Vector v(d);
  for (long i = 0; i < d; ++i) v(i) = Complex(g(rng), g(rng));
  v /= v.norm();
  return v;
}

Matrix random_unitary(long d, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix a(d, d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) a(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long i = 0; i < d; ++i) {
    Complex ph = r(i, i) / std::abs(r(i, i));
    q.col(i) *= ph;
  }
  return q;
}

DensityMatrix random_density_matrix(SubsystemLayout layout, Rng& rng, int rank) {
  long d = layout.total_dim();
  long k = rank <= 0 ? d : std::min<long>(rank, d);
  std::normal_distribution<double> g;
  Matrix a(d, k);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < k; ++j) a(i, j) = Complex(g(rng), g(rng));
  Matrix m = a * a.adjoint();
  m /= m.trace().real();
  m = (m + m.adjoint()) / 2.0;
  return DensityMatrix(std::move(layout), std::move(m));
}

DensityMatrix random_product_mixture(const SubsystemLayout& layout, int terms, Rng& rng) {
  long d = layout.total_dim();
  std::exponential_distribution<double> expo(1.0);
  Matrix m = Matrix::Zero(d, d);
  double wsum = 0.0;
  for (int t = 0; t < terms; ++t) {
    Vector prod = Vector::Ones(1);
    for (int s = 0; s < layout.size(); ++s) {
      Vector factor = random_pure_vector(layout.dim(s), rng);
      Vector next(prod.size() * factor.size());
      for (long i = 0; i < prod.size(); ++i)
        next.segment(i * factor.size(), factor.size()) = prod(i) * factor;
      prod = std::move(next);
    }
    double w = expo(rng);
    wsum += w;
    m += w * (prod * prod.adjoint());
  }
  m /= wsum;
  m = (m + m.adjoint()) / 2.0;
  return DensityMatrix(layout, std::move(m));
}

}  // namespace kappalab
