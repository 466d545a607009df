#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace tubecat {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;

/// Deterministic RNG (splitmix64 core). std::normal_distribution is
/// implementation-defined, so gaussians are produced by an explicit
/// Box-Muller transform to keep reports byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform in [0,1)
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double gaussian();
  cplx cgaussian() { return {gaussian(), gaussian()}; }

  Vec gaussian_vector(int n);
  Mat gaussian_matrix(int rows, int cols);

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Singular values in descending order.
Eigen::VectorXd singular_values(const Mat& a);

/// Numerical rank with absolute threshold on singular values.
int numerical_rank(const Mat& a, double tol);

/// Orthonormal basis of the null space of a (columns), threshold tol.
Mat null_space(const Mat& a, double tol);

/// Condition number sigma_max / sigma_min (inf if singular to machine eps).
double condition_number(const Mat& a);

/// Eigenvalues/vectors of a Hermitian matrix (input is symmetrized).
struct HermEig {
  Eigen::VectorXd values;
  Mat vectors;
};
HermEig hermitian_eig(const Mat& a);

/// Unitary polar factor of a square full-rank matrix.
Mat polar_unitary(const Mat& a);

/// max |a_ij - b_ij|
double max_abs_diff(const Mat& a, const Mat& b);

/// Cluster sorted real values by gap threshold; returns cluster means and
/// member counts. `ambiguous` is set when some inter-cluster gap is within
/// ambiguity_factor * gap_tol of the threshold (too close to call).
struct Clusters {
  std::vector<double> centers;
  std::vector<int> sizes;
  bool ambiguous = false;
  double min_split_gap = 0.0;   // smallest gap treated as a split
  double max_merged_gap = 0.0;  // largest gap treated as noise
};
Clusters cluster_values(std::vector<double> values, double gap_tol,
                        double ambiguity_factor = 10.0);

}  // namespace tubecat
