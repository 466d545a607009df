#include "tubecat/tube_algebra.hpp"
#include <limits>

#include <array>
#include <cmath>

namespace tubecat {

Vec StarAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec out = Vec::Zero(dim);
  for (int i = 0; i < dim; ++i)
    if (x(i) != cplx(0, 0)) out += x(i) * (left_mult[i] * y);
  return out;
}

Vec StarAlgebra::star_of(const Vec& x) const { return star * x.conjugate(); }

cplx StarAlgebra::inner(const Vec& x, const Vec& y) const {
  return phi_of(mul(star_of(y), x));
}

double StarAlgebra::norm(const Vec& x) const {
  return std::sqrt(std::max(0.0, inner(x, x).real()));
}

Mat StarAlgebra::lmat(const Vec& x) const {
  Mat m = Mat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    if (x(i) != cplx(0, 0)) m += x(i) * left_mult[i];
  return m;
}

Mat StarAlgebra::rmat(const Vec& x) const {
  // (y x)_k = sum_i y_i (b_i x)_k
  Mat m = Mat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) m.col(i) = left_mult[i] * x;
  return m;
}

long tube_dimension_from_ring(const SubcategoryView& C) {
  const FusionRing& ring = C.parent->ring;
  long total = 0;
  for (int lam = 0; lam < ring.rank; ++lam)
    for (int mu : C.members)
      for (int nu = 0; nu < ring.rank; ++nu)
        for (int g = 0; g < ring.rank; ++g)
          total += static_cast<long>(ring.mult(lam, mu, g)) * ring.mult(mu, nu, g);
  return total;
}

Morphism TubeAlgebra::component_operator(const Vec& x, int lam, int mu, int nu) const {
  Morphism op = engine_->zero(word({lam, mu}), word({mu, nu}));
  auto it = range_.find({lam, mu, nu});
  if (it == range_.end()) return op;
  const auto [first, count] = it->second;
  for (int k = 0; k < count; ++k) {
    const cplx c = x(first + k);
    if (c == cplx(0, 0)) continue;
    op = HomEngine::add(op, HomEngine::scaled(basis_ops_[first + k], c));
  }
  return op;
}

void TubeAlgebra::accumulate_component(Vec& x, int lam, int mu, int nu,
                                       const Morphism& op) const {
  auto it = range_.find({lam, mu, nu});
  if (it == range_.end()) {
    if (HomEngine::norm(op) > 1e-12)
      throw std::logic_error("accumulate_component: operator outside the tube basis");
    return;
  }
  const auto [first, count] = it->second;
  for (int k = 0; k < count; ++k) {
    const TubeBasisIndex& b = basis_[first + k];
    x(first + k) += op.blocks[b.gamma](b.t_target, b.t_source) / basis_scale_[first + k];
  }
}

TubeAlgebra build_tube(const SubcategoryView& C, std::shared_ptr<HomEngine> engine) {
  TubeAlgebra A;
  A.C_ = C;
  A.D_ = C.parent;
  A.engine_ = std::move(engine);
  HomEngine& eng = *A.engine_;
  const FusionCategoryData& D = *A.D_;
  const int rank = D.rank();

  // Basis: orthonormal (w.r.t. the phi_lam-normalized pairing) intertwiners
  // sqrt(d_lam d_mu / d_gamma) T_t T_s^* per channel gamma.
  for (int lam = 0; lam < rank; ++lam)
    for (int mu : C.members)
      for (int nu = 0; nu < rank; ++nu) {
        const WordTrees& src = eng.trees(word({lam, mu}));
        const WordTrees& dst = eng.trees(word({mu, nu}));
        const int first = A.dim();
        int t = 0;
        for (int g = 0; g < rank; ++g)
          for (int tt = 0; tt < dst.count(g); ++tt)
            for (int ts = 0; ts < src.count(g); ++ts) {
              TubeBasisIndex idx{lam, mu, nu, t++, g, tt, ts};
              const double scale =
                  std::sqrt(D.dim(lam) * D.dim(mu) / D.dim(g));
              Morphism op = HomEngine::scaled(
                  eng.compose(eng.tree_isometry(word({mu, nu}), g, tt),
                              eng.adjoint(eng.tree_isometry(word({lam, mu}), g, ts))),
                  scale);
              A.basis_.push_back(idx);
              A.basis_ops_.push_back(std::move(op));
              A.basis_scale_.push_back(scale);
            }
        if (t > 0) A.range_[{lam, mu, nu}] = {first, t};
      }

  const int n = A.dim();
  StarAlgebra& alg = A.alg_;
  alg.dim = n;
  alg.left_mult.assign(n, Mat::Zero(n, n));
  alg.star = Mat::Zero(n, n);
  alg.unit = Vec::Zero(n);
  alg.phi = Vec::Zero(n);

  // phi and unit live on the (lam, 0, lam) summands.
  for (int i = 0; i < n; ++i) {
    const TubeBasisIndex& b = A.basis_[i];
    if (b.mu == 0 && b.lam == b.nu) {
      alg.phi(i) = D.dim(b.lam) * D.dim(b.lam);
      alg.unit(i) = 1.0;
    }
  }

  // Product: (lam mu|X|mu nu)(nu mu'|Y|mu' rho) = sum_{xi, T}
  //   (lam xi | (T* x 1)(1_mu x Y)(X x 1_mu')(1_lam x T) | xi rho).
  for (int i = 0; i < n; ++i) {
    const TubeBasisIndex& bi = A.basis_[i];
    const Morphism& X = A.basis_ops_[i];
    for (int j = 0; j < n; ++j) {
      const TubeBasisIndex& bj = A.basis_[j];
      if (bi.nu != bj.lam) continue;
      const Morphism& Y = A.basis_ops_[j];
      const Morphism x_ext = eng.tensor_identity_right(X, word({bj.mu}));
      const Morphism y_ext = eng.tensor_identity_left(word({bi.mu}), Y);
      const Morphism mid = eng.compose(y_ext, x_ext);
      Vec coeffs = Vec::Zero(n);
      for (int xi : C.members) {
        const int tcount = eng.trees(word({bi.mu, bj.mu})).count(xi);
        for (int k = 0; k < tcount; ++k) {
          const Morphism T = eng.tree_isometry(word({bi.mu, bj.mu}), xi, k);
          const Morphism bot = eng.tensor(eng.identity(word({bi.lam})), T);
          const Morphism top = eng.tensor(eng.adjoint(T), eng.identity(word({bj.nu})));
          const Morphism Z = eng.compose(top, eng.compose(mid, bot));
          A.accumulate_component(coeffs, bi.lam, xi, bj.nu, Z);
        }
      }
      for (int k = 0; k < n; ++k) alg.left_mult[i](k, j) = coeffs(k);
    }
  }

  // Star: bend both mu legs with the rigidity pair of mu.
  for (int i = 0; i < n; ++i) {
    const TubeBasisIndex& b = A.basis_[i];
    const int mub = D.ring.dual[b.mu];
    const RigidityPair& rp = eng.rigidity(b.mu);
    const Morphism xadj = eng.adjoint(A.basis_ops_[i]);  // Hom((mu,nu),(lam,mu))
    const Morphism bot = eng.tensor(rp.r, eng.identity(word({b.nu, mub})));
    const Morphism mid = eng.tensor(
        eng.identity(word({mub})),
        eng.tensor_identity_right(xadj, word({mub})));
    const Morphism top = eng.tensor(eng.identity(word({mub, b.lam})),
                                    eng.adjoint(rp.rbar));
    const Morphism starOp = eng.compose(top, eng.compose(mid, bot));
    Vec coeffs = Vec::Zero(n);
    A.accumulate_component(coeffs, b.nu, mub, b.lam, starOp);
    for (int k = 0; k < n; ++k) alg.star(k, i) = coeffs(k);
  }

  // Corner projections (lam 0 | 1 | 0 lam).
  A.corners_.assign(rank, Vec::Zero(n));
  for (int i = 0; i < n; ++i) {
    const TubeBasisIndex& b = A.basis_[i];
    if (b.mu == 0 && b.lam == b.nu) A.corners_[b.lam](i) = 1.0;
  }
  return A;
}

Mat TubeAlgebra::gram() const {
  const int n = dim();
  Mat g(n, n);
  for (int j = 0; j < n; ++j) {
    Vec ej = Vec::Zero(n);
    ej(j) = 1.0;
    const Vec sj = alg_.star_of(ej);
    for (int i = 0; i < n; ++i) {
      Vec ei = Vec::Zero(n);
      ei(i) = 1.0;
      g(i, j) = alg_.phi_of(alg_.mul(sj, ei));
    }
  }
  return g.adjoint();  // <b_i, b_j> = phi(b_j^* b_i)
}

TubeAlgebra::AxiomReport TubeAlgebra::check_axioms(std::uint64_t seed,
                                                   int samples) const {
  AxiomReport rep;
  rep.positivity_min = std::numeric_limits<double>::infinity();
  Rng rng(seed);
  const int n = dim();
  auto vec_norm = [&](const Vec& v) { return v.cwiseAbs().maxCoeff(); };
  for (int s = 0; s < samples; ++s) {
    const Vec x = rng.gaussian_vector(n);
    const Vec y = rng.gaussian_vector(n);
    const Vec z = rng.gaussian_vector(n);
    rep.associativity = std::max(
        rep.associativity,
        vec_norm(alg_.mul(alg_.mul(x, y), z) - alg_.mul(x, alg_.mul(y, z))));
    rep.unit_defect = std::max(
        rep.unit_defect, std::max(vec_norm(alg_.mul(alg_.unit, x) - x),
                                  vec_norm(alg_.mul(x, alg_.unit) - x)));
    rep.star_involution =
        std::max(rep.star_involution, vec_norm(alg_.star_of(alg_.star_of(x)) - x));
    rep.star_antihom = std::max(
        rep.star_antihom, vec_norm(alg_.star_of(alg_.mul(x, y)) -
                                   alg_.mul(alg_.star_of(y), alg_.star_of(x))));
    rep.phi_trace = std::max(
        rep.phi_trace,
        std::abs(alg_.phi_of(alg_.mul(x, y)) - alg_.phi_of(alg_.mul(y, x))));
    rep.positivity_min =
        std::min(rep.positivity_min, alg_.inner(x, x).real());
  }
  return rep;
}

}  // namespace tubecat
