#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "tubecat/hom_calculus.hpp"

using namespace tubecat;

namespace {

// Seeded random morphism with the given legs.
Morphism random_morphism(HomEngine& eng, const TensorWord& src, const TensorWord& dst,
                         Rng& rng) {
  Morphism m = eng.zero(src, dst);
  for (auto& b : m.blocks)
    if (b.size() > 0) b = rng.gaussian_matrix(b.rows(), b.cols());
  return m;
}

bool is_identity(const Morphism& m, double tol = 1e-9) {
  for (const auto& b : m.blocks) {
    if (b.rows() != b.cols()) return false;
    if (b.size() > 0 &&
        (b - Mat::Identity(b.rows(), b.cols())).cwiseAbs().maxCoeff() > tol)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("tree basis counts") {
  FusionCategoryData ising = catalog_category("ising");
  HomEngine eng(ising);
  CHECK(eng.trees(word({1, 1})).count(0) == 1);      // sigma sigma -> 1
  CHECK(eng.trees(word({1})).count(1) == 1);         // identity tree
  CHECK(eng.trees(word({1, 1, 1})).count(1) == 2);   // sigma^3 -> sigma
  CHECK(eng.trees(word({})).count(0) == 1);          // empty word

  // counts agree with the fusion ring on every short word
  for (const auto& name : catalog_names()) {
    FusionCategoryData data = catalog_category(name);
    HomEngine e(data);
    std::vector<std::vector<int>> words = {{}, {0}};
    for (int a = 0; a < data.rank(); ++a)
      for (int b = 0; b < data.rank(); ++b) {
        words.push_back({a, b});
        for (int c = 0; c < data.rank(); ++c) words.push_back({a, b, c});
      }
    for (const auto& wv : words)
      for (int r = 0; r < data.rank(); ++r)
        CHECK(e.trees(word(wv)).count(r) ==
              data.ring.product_multiplicity(wv, r));
  }
}

TEST_CASE("compose and adjoint basics") {
  FusionCategoryData ising = catalog_category("ising");
  HomEngine eng(ising);
  Rng rng(7);
  const TensorWord a = word({1, 2});
  const TensorWord b = word({2, 1});
  Morphism f = random_morphism(eng, a, b, rng);
  CHECK(HomEngine::distance(eng.compose(eng.identity(b), f), f) < 1e-12);
  CHECK(HomEngine::distance(eng.compose(f, eng.identity(a)), f) < 1e-12);
  CHECK(HomEngine::distance(eng.adjoint(eng.adjoint(f)), f) < 1e-12);
}

TEST_CASE("tensor is functorial") {
  for (const auto& name : {"ising", "fibonacci", "vec_z2_twisted"}) {
    CAPTURE(name);
    FusionCategoryData data = catalog_category(name);
    HomEngine eng(data);
    Rng rng(11);
    const int x = data.rank() - 1;
    const TensorWord w1 = word({1, x});
    const TensorWord w2 = word({x});
    const TensorWord w3 = word({1});
    Morphism f = random_morphism(eng, w1, w2, rng);
    Morphism fp = random_morphism(eng, w2, w1, rng);
    Morphism g = random_morphism(eng, w3, w1, rng);
    Morphism gp = random_morphism(eng, w1, w3, rng);
    // tensor(g' o g, f' ... ) pairing: (fp o f) (x) (gp o g) = (fp (x) gp) o (f (x) g)
    Morphism lhs = eng.tensor(eng.compose(fp, f), eng.compose(gp, g));
    Morphism rhs = eng.compose(eng.tensor(fp, gp), eng.tensor(f, g));
    CHECK(HomEngine::distance(lhs, rhs) < 1e-9);

    // the two interleaving orders agree: f (x) g = (f (x) id) o (id (x) g)
    Morphism viaRight = eng.compose(eng.tensor_identity_right(f, w1),
                                    eng.tensor_identity_left(w1, g));
    CHECK(HomEngine::distance(eng.tensor(f, g), viaRight) < 1e-9);
    Morphism viaLeft = eng.compose(eng.tensor_identity_left(w2, g),
                                   eng.tensor_identity_right(f, w3));
    CHECK(HomEngine::distance(eng.tensor(f, g), viaLeft) < 1e-9);
  }
}

TEST_CASE("recoupling unitaries") {
  FusionCategoryData fib = catalog_category("fibonacci");
  HomEngine eng(fib);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;

  SUBCASE("trivial reassociation is the identity") {
    const auto& bc = eng.recoupling_unitary(word({1, 1, 1}), ParenShape::left_comb(3),
                                            ParenShape::left_comb(3));
    for (const auto& b : bc.blocks)
      if (b.size() > 0)
        CHECK((b - Mat::Identity(b.rows(), b.cols())).cwiseAbs().maxCoeff() < 1e-12);
  }

  SUBCASE("fibonacci ((tau tau) tau) -> (tau (tau tau)) at root tau is the F-matrix") {
    const auto& bc = eng.recoupling_unitary(word({1, 1, 1}), ParenShape::left_comb(3),
                                            ParenShape::right_comb(3));
    REQUIRE(bc.blocks[1].rows() == 2);
    CHECK(bc.blocks[1](0, 0).real() == doctest::Approx(1.0 / phi));
    CHECK(bc.blocks[1](0, 1).real() == doctest::Approx(1.0 / std::sqrt(phi)));
    CHECK(bc.blocks[1](1, 0).real() == doctest::Approx(1.0 / std::sqrt(phi)));
    CHECK(bc.blocks[1](1, 1).real() == doctest::Approx(-1.0 / phi));
  }

  SUBCASE("round trips and unitarity on length-4 words, all catalog categories") {
    for (const auto& name : catalog_names()) {
      CAPTURE(name);
      FusionCategoryData data = catalog_category(name);
      HomEngine e(data);
      const int x = data.rank() - 1;
      const TensorWord w = word({x, 1, x, 1});
      const ParenShape shapes[] = {
          ParenShape::left_comb(4), ParenShape::right_comb(4),
          ParenShape::pair(ParenShape::left_comb(2), ParenShape::left_comb(2)),
          ParenShape::pair(ParenShape::leaf(), ParenShape::pair(ParenShape::left_comb(2),
                                                                ParenShape::leaf()))};
      for (const auto& s1 : shapes)
        for (const auto& s2 : shapes) {
          const auto& fwd = e.recoupling_unitary(w, s1, s2);
          const auto& bwd = e.recoupling_unitary(w, s2, s1);
          for (int r = 0; r < data.rank(); ++r) {
            if (fwd.blocks[r].size() == 0) continue;
            const Mat round = bwd.blocks[r] * fwd.blocks[r];
            CHECK((round - Mat::Identity(round.rows(), round.cols()))
                      .cwiseAbs()
                      .maxCoeff() < 1e-9);
            const Mat gram = fwd.blocks[r].adjoint() * fwd.blocks[r];
            CHECK((gram - Mat::Identity(gram.rows(), gram.cols()))
                      .cwiseAbs()
                      .maxCoeff() < 1e-9);
          }
        }
    }
  }
}

TEST_CASE("rigidity pairs") {
  SUBCASE("vec_z2: r is the basis cup with scale 1") {
    FusionCategoryData z2 = catalog_category("vec_z2");
    HomEngine eng(z2);
    const RigidityPair& rp = eng.rigidity(1);
    CHECK(std::abs(HomEngine::scalar_of(eng.compose(eng.adjoint(rp.r), rp.r)) -
                   cplx(1, 0)) < 1e-12);
  }
  SUBCASE("ising sigma: r*r = sqrt(2)") {
    FusionCategoryData ising = catalog_category("ising");
    HomEngine eng(ising);
    const RigidityPair& rp = eng.rigidity(1);
    CHECK(std::abs(HomEngine::scalar_of(eng.compose(eng.adjoint(rp.r), rp.r)) -
                   cplx(std::sqrt(2.0), 0)) < 1e-9);
  }
  SUBCASE("conjugate equations hold for every catalog label") {
    for (const auto& name : catalog_names()) {
      CAPTURE(name);
      FusionCategoryData data = catalog_category(name);
      HomEngine eng(data);
      for (int l = 0; l < data.rank(); ++l) {
        const int lb = data.ring.dual[l];
        const RigidityPair& rp = eng.rigidity(l);
        const Morphism idl = eng.identity(word({l}));
        const Morphism idlb = eng.identity(word({lb}));
        // (rbar* x 1_l)(1_l x r) = 1_l
        Morphism z1 = eng.compose(eng.tensor(eng.adjoint(rp.rbar), idl),
                                  eng.tensor(idl, rp.r));
        CHECK(HomEngine::distance(z1, idl) < 1e-9);
        // (r* x 1_lb)(1_lb x rbar) = 1_lb
        Morphism z2 = eng.compose(eng.tensor(eng.adjoint(rp.r), idlb),
                                  eng.tensor(idlb, rp.rbar));
        CHECK(HomEngine::distance(z2, idlb) < 1e-9);
        // normalization r*r = rbar*rbar = d
        CHECK(std::abs(HomEngine::scalar_of(eng.compose(eng.adjoint(rp.r), rp.r)) -
                       cplx(data.dim(l), 0)) < 1e-9);
        CHECK(std::abs(HomEngine::scalar_of(eng.compose(eng.adjoint(rp.rbar), rp.rbar)) -
                       cplx(data.dim(l), 0)) < 1e-9);
        // dual pair is the swap of the original (self-dual labels reuse
        // their own pair; rbar may differ from r by the FS sign there)
        if (lb != l) {
          const RigidityPair& rq = eng.rigidity(lb);
          CHECK(HomEngine::distance(rq.r, rp.rbar) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("left inverse") {
  SUBCASE("phi_l(id_{l w}) = id_w for all catalog labels and letters") {
    for (const auto& name : catalog_names()) {
      CAPTURE(name);
      FusionCategoryData data = catalog_category(name);
      HomEngine eng(data);
      for (int l = 0; l < data.rank(); ++l)
        for (int b = 0; b < data.rank(); ++b) {
          Morphism phi = eng.left_inverse(l, eng.identity(word({l, b})));
          CHECK(is_identity(phi));
        }
    }
  }

  SUBCASE("standardness: phi_sigma(T T*) = d(psi)/(d(sigma)^2) on the psi channel") {
    FusionCategoryData ising = catalog_category("ising");
    HomEngine eng(ising);
    // T in Hom(psi, sigma sigma) isometry = canonical tree
    Morphism t = eng.tree_isometry(word({1, 1}), 2, 0);
    Morphism proj = eng.compose(t, eng.adjoint(t));  // in End(sigma sigma)
    Morphism phi = eng.left_inverse(1, proj);        // in End(sigma)
    const cplx got = phi.blocks[1](0, 0);
    CHECK(std::abs(got - cplx(1.0 / 2.0, 0)) < 1e-9);  // d(psi)/(d(sigma) d(sigma))
  }

  SUBCASE("vec_z2: phi_g is the identity on scalars") {
    FusionCategoryData z2 = catalog_category("vec_z2");
    HomEngine eng(z2);
    Rng rng(3);
    Morphism x = eng.identity(word({1, 1}));
    x.blocks[0](0, 0) = cplx(0.3, -0.7);
    Morphism phi = eng.left_inverse(1, x);
    CHECK(std::abs(phi.blocks[1](0, 0) - cplx(0.3, -0.7)) < 1e-12);
  }

  SUBCASE("positivity: X >= 0 implies phi_l(X) >= 0") {
    FusionCategoryData fib = catalog_category("fibonacci");
    HomEngine eng(fib);
    Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
      Morphism a = eng.zero(word({1, 1}), word({1, 1}));
      for (auto& b : a.blocks)
        if (b.size() > 0) b = rng.gaussian_matrix(b.rows(), b.cols());
      Morphism x = eng.compose(eng.adjoint(a), a);  // positive
      Morphism phi = eng.left_inverse(1, x);
      for (const auto& b : phi.blocks) {
        if (b.size() == 0) continue;
        HermEig eig = hermitian_eig(b);
        CHECK(eig.values.minCoeff() > -1e-9);
      }
    }
  }
}

TEST_CASE("frobenius reciprocity dimension counts") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    FusionCategoryData data = catalog_category(name);
    HomEngine eng(data);
    for (int l = 0; l < data.rank(); ++l)
      for (int m = 0; m < data.rank(); ++m)
        for (int n = 0; n < data.rank(); ++n) {
          const int lhs = eng.trees(word({l, m})).count(n);
          const int rhs = eng.trees(word({data.ring.dual[l], n})).count(m);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("braiding is natural against fused legs (hexagon through the engine)") {
  for (const auto& name : catalog_names()) {
    FusionCategoryData data = catalog_category(name);
    if (!data.has_R()) continue;
    CAPTURE(name);
    HomEngine eng(data);
    const int n = data.rank();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          // route 1: (1_b x c_{a,c}) (c_{a,b} x 1_c)
          Morphism r1 = eng.compose(eng.tensor_identity_left(word({b}), eng.braiding(a, c)),
                                    eng.tensor_identity_right(eng.braiding(a, b), word({c})));
          // route 2: braid a past the fused pair, summed over channels
          Morphism r2 = eng.zero(word({a, b, c}), word({b, c, a}));
          for (int x = 0; x < n; ++x) {
            const int cnt = data.ring.mult(b, c, x);
            for (int k = 0; k < cnt; ++k) {
              Morphism t = eng.tree_isometry(word({b, c}), x, k);
              Morphism lift = eng.compose(
                  eng.tensor(t, eng.identity(word({a}))),
                  eng.compose(eng.braiding(a, x),
                              eng.tensor(eng.identity(word({a})), eng.adjoint(t))));
              r2 = HomEngine::add(r2, lift);
            }
          }
          CHECK(HomEngine::distance(r1, r2) < 1e-9);
        }
  }
}
