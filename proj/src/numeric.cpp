#include "cstar/numeric.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace cstar::num {

double operator_norm(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues()(0);
}

Mat orthonormal_columns(const Mat& a, const Tolerance& tol) {
  if (a.cols() == 0) return Mat::Zero(a.rows(), 0);
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double cut = tol.cut(sv.size() ? sv(0) : 0.0);
  int rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  return svd.matrixU().leftCols(rank);
}

Mat kernel_columns(const Mat& a, const Tolerance& tol) {
  if (a.cols() == 0) return Mat::Zero(0, 0);
  if (a.rows() == 0) return Mat::Identity(a.cols(), a.cols());
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cut = tol.cut(sv.size() ? sv(0) : 0.0);
  int rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

void KernelAccumulator::add(const Mat& m) {
  if (m.cols() != cols_) throw Error("incompatible shapes");
  Mat stacked(r_.rows() + m.rows(), cols_);
  stacked.topRows(r_.rows()) = r_;
  stacked.bottomRows(m.rows()) = m;
  Eigen::HouseholderQR<Mat> qr(stacked);
  int keep = std::min<int>(stacked.rows(), cols_);
  r_ = Mat(qr.matrixQR().topRows(keep).triangularView<Eigen::Upper>());
}

Mat KernelAccumulator::kernel(const Tolerance& tol) const {
  if (r_.rows() == 0) return Mat::Identity(cols_, cols_);
  return kernel_columns(r_, tol);
}

Mat polar_unitary(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

Mat inverse_sqrt_hermitian(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  RVec vals = es.eigenvalues();
  Vec scaled(vals.size());
  for (int i = 0; i < vals.size(); ++i)
    scaled(i) = Cplx(1.0 / std::sqrt(std::max(vals(i), 1e-300)), 0.0);
  return es.eigenvectors() * scaled.asDiagonal() * es.eigenvectors().adjoint();
}

std::vector<std::vector<int>> cluster_values(const RVec& sorted_values, double gap) {
  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < sorted_values.size(); ++i) {
    if (i == 0 || sorted_values(i) - sorted_values(i - 1) > gap)
      clusters.emplace_back();
    clusters.back().push_back(i);
  }
  return clusters;
}

}  // namespace cstar::num
