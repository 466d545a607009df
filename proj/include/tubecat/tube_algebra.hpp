#pragma once

#include <memory>

#include "tubecat/hom_calculus.hpp"

namespace tubecat {

/// Dense finite-dimensional *-algebra with a distinguished positive trace
/// functional, in structure-constant form. The generic Wedderburn machinery
/// operates on this view.
struct StarAlgebra {
  int dim = 0;
  std::vector<Mat> left_mult;  // left_mult[i](k, j) = coeff of k in b_i b_j
  Mat star;                    // antilinear: star(x) = star * conj(x)
  Vec unit;
  Vec phi;                     // phi(x) = sum_i phi_i x_i

  Vec mul(const Vec& x, const Vec& y) const;
  Vec star_of(const Vec& x) const;
  cplx phi_of(const Vec& x) const { return (phi.transpose() * x)(0); }
  /// trace form <x,y> = phi(y* x)
  cplx inner(const Vec& x, const Vec& y) const;
  double norm(const Vec& x) const;  // sqrt of trace form
  Mat lmat(const Vec& x) const;     // matrix of left multiplication
  Mat rmat(const Vec& x) const;     // matrix of right multiplication
};

/// Basis label (lambda mu | . | mu nu), t indexing the orthonormalized basis
/// of Hom(lambda mu, mu nu); (gamma, t_target, t_source) is the tree channel
/// behind position t.
struct TubeBasisIndex {
  int lam = 0, mu = 0, nu = 0;
  int t = 0;
  int gamma = 0, t_target = 0, t_source = 0;
};

/// The relative tube algebra Tube(C, D) with cached structure constants.
class TubeAlgebra {
 public:
  TubeAlgebra() = default;

  const SubcategoryView& C() const { return C_; }
  const FusionCategoryData& D() const { return *D_; }
  HomEngine& engine() const { return *engine_; }

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<TubeBasisIndex>& basis() const { return basis_; }
  const StarAlgebra& algebra() const { return alg_; }

  Vec multiply(const Vec& x, const Vec& y) const { return alg_.mul(x, y); }
  Vec star(const Vec& x) const { return alg_.star_of(x); }
  cplx phi(const Vec& x) const { return alg_.phi_of(x); }
  cplx trace_form(const Vec& x, const Vec& y) const { return alg_.inner(x, y); }
  const Vec& unit() const { return alg_.unit; }

  /// Projection (lambda 0 | 1 | 0 lambda); these sum to the unit and cut the
  /// (lambda, nu) grading out of any element.
  const Vec& corner_projection(int lam) const { return corners_[lam]; }

  /// Reconstruct the Hom(lam mu, mu nu) operator carried by x on one
  /// (lam, mu, nu) summand.
  Morphism component_operator(const Vec& x, int lam, int mu, int nu) const;

  /// Expand an operator in Hom((lam,mu),(mu,nu)) into basis coefficients
  /// (adding into x).
  void accumulate_component(Vec& x, int lam, int mu, int nu, const Morphism& op) const;

  /// Norm scale of the basis: <b_i, b_i> = d(lam) d(nu) by construction.
  Mat gram() const;

  struct AxiomReport {
    double associativity = 0;
    double unit_defect = 0;
    double star_involution = 0;
    double star_antihom = 0;
    double phi_trace = 0;
    double positivity_min = 0;  // smallest <x,x> over samples
  };
  AxiomReport check_axioms(std::uint64_t seed, int samples) const;

  friend TubeAlgebra build_tube(const SubcategoryView& C,
                                std::shared_ptr<HomEngine> engine);

 private:
  SubcategoryView C_;
  const FusionCategoryData* D_ = nullptr;
  std::shared_ptr<HomEngine> engine_;
  std::vector<TubeBasisIndex> basis_;
  std::vector<Morphism> basis_ops_;  // scaled operators
  std::vector<double> basis_scale_;  // sqrt(d_lam d_mu / d_gamma)
  std::vector<Vec> corners_;
  StarAlgebra alg_;
  // position lookup: (lam, mu, nu) -> first basis position, count
  std::map<std::array<int, 3>, std::pair<int, int>> range_;
};

/// Enumerate the basis and compute product/star structure constants via the
/// hom engine.
TubeAlgebra build_tube(const SubcategoryView& C, std::shared_ptr<HomEngine> engine);

/// dim Tube(C,D) from the fusion ring alone (cross-check).
long tube_dimension_from_ring(const SubcategoryView& C);

}  // namespace tubecat
