#include "tubecat/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace tubecat {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  double u2 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

Vec Rng::gaussian_vector(int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = cgaussian();
  return v;
}

Mat Rng::gaussian_matrix(int rows, int cols) {
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = cgaussian();
  return m;
}

Eigen::VectorXd singular_values(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return Eigen::VectorXd(0);
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues();
}

int numerical_rank(const Mat& a, double tol) {
  const Eigen::VectorXd s = singular_values(a);
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > tol) ++r;
  return r;
}

Mat null_space(const Mat& a, double tol) {
  if (a.cols() == 0) return Mat(0, 0);
  if (a.rows() == 0) return Mat::Identity(a.cols(), a.cols());
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > tol) ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

double condition_number(const Mat& a) {
  const Eigen::VectorXd s = singular_values(a);
  if (s.size() == 0) return 0.0;
  const double smin = s(s.size() - 1);
  if (smin <= std::numeric_limits<double>::min())
    return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

HermEig hermitian_eig(const Mat& a) {
  const Mat h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  return {es.eigenvalues(), es.eigenvectors()};
}

Mat polar_unitary(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

double max_abs_diff(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

Clusters cluster_values(std::vector<double> values, double gap_tol,
                        double ambiguity_factor) {
  Clusters out;
  if (values.empty()) return out;
  std::sort(values.begin(), values.end());
  double sum = values[0];
  int count = 1;
  out.min_split_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double gap = values[i] - values[i - 1];
    if (gap > gap_tol) {
      out.centers.push_back(sum / count);
      out.sizes.push_back(count);
      sum = 0.0;
      count = 0;
      out.min_split_gap = std::min(out.min_split_gap, gap);
    } else {
      out.max_merged_gap = std::max(out.max_merged_gap, gap);
    }
    sum += values[i];
    ++count;
  }
  out.centers.push_back(sum / count);
  out.sizes.push_back(count);
  // A merged gap close to the threshold, or a split gap close to it,
  // means the clustering decision is not robust.
  if (out.max_merged_gap > gap_tol / ambiguity_factor) out.ambiguous = true;
  if (std::isfinite(out.min_split_gap) &&
      out.min_split_gap < gap_tol * ambiguity_factor)
    out.ambiguous = true;
  return out;
}

}  // namespace tubecat
