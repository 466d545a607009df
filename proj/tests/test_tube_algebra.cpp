#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <memory>

#include "tubecat/tube_algebra.hpp"

using namespace tubecat;

namespace {

struct Ctx {
  FusionCategoryData data;
  std::shared_ptr<HomEngine> engine;
  TubeAlgebra A;
};

Ctx make_tube(const std::string& name, std::vector<int> members) {
  Ctx ctx{catalog_category(name), nullptr, {}};
  ctx.engine = std::make_shared<HomEngine>(ctx.data);
  ctx.A = build_tube(subcategory(ctx.data, std::move(members)), ctx.engine);
  return ctx;
}

}  // namespace

TEST_CASE("tube dimensions match the spec examples and the fusion ring") {
  auto vecIsing = make_tube("ising", {0});
  CHECK(vecIsing.A.dim() == 3);
  auto z2 = make_tube("vec_z2", {0, 1});
  CHECK(z2.A.dim() == 4);
  auto ising = make_tube("ising", {0, 1, 2});
  CHECK(ising.A.dim() == 12);
  auto isingZ2 = make_tube("ising", {0, 2});
  CHECK(isingZ2.A.dim() == 6);
  auto fib = make_tube("fibonacci", {0, 1});
  CHECK(fib.A.dim() == 7);

  for (const auto* ctx : {&vecIsing, &z2, &ising, &isingZ2, &fib})
    CHECK(ctx->A.dim() == tube_dimension_from_ring(ctx->A.C()));
}

TEST_CASE("C = Vec gives a commutative algebra of dimension |Irr(D)|") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    auto ctx = make_tube(name, {0});
    CHECK(ctx.A.dim() == ctx.data.rank());
    const int n = ctx.A.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec ei = Vec::Zero(n), ej = Vec::Zero(n);
        ei(i) = 1;
        ej(j) = 1;
        CHECK((ctx.A.multiply(ei, ej) - ctx.A.multiply(ej, ei)).cwiseAbs().maxCoeff() <
              1e-12);
      }
  }
}

TEST_CASE("*-algebra axioms hold on random elements for all catalog pairs") {
  for (const auto& name : catalog_names()) {
    FusionCategoryData data = catalog_category(name);
    for (const auto& members : all_subcategory_member_sets(data)) {
      CAPTURE(name);
      CAPTURE(members.size());
      auto engine = std::make_shared<HomEngine>(data);
      TubeAlgebra A = build_tube(subcategory(data, members), engine);
      const auto rep = A.check_axioms(1234, 40);
      CHECK(rep.associativity < 1e-8);
      CHECK(rep.unit_defect < 1e-10);
      CHECK(rep.star_involution < 1e-10);
      CHECK(rep.star_antihom < 1e-8);
      CHECK(rep.phi_trace < 1e-8);
      CHECK(rep.positivity_min > -1e-9);
    }
  }
}

TEST_CASE("phi matches Lemma 2.5(3) and kills mu != 0 summands") {
  auto ising = make_tube("ising", {0, 1, 2});
  CHECK(std::abs(ising.A.phi(ising.A.unit()) - cplx(4.0, 0)) < 1e-9);
  for (int i = 0; i < ising.A.dim(); ++i) {
    if (ising.A.basis()[i].mu == 0) continue;
    Vec e = Vec::Zero(ising.A.dim());
    e(i) = 1;
    CHECK(std::abs(ising.A.phi(e)) == 0.0);
  }
  // phi(1) = dim D for every catalog pair
  for (const auto& name : catalog_names()) {
    FusionCategoryData data = catalog_category(name);
    for (const auto& members : all_subcategory_member_sets(data)) {
      auto engine = std::make_shared<HomEngine>(data);
      TubeAlgebra A = build_tube(subcategory(data, members), engine);
      CHECK(std::abs(A.phi(A.unit()) - cplx(data.global_dimension(), 0)) < 1e-9);
    }
  }
}

TEST_CASE("trace form: unit norm, positivity and Gram spectrum") {
  auto ising = make_tube("ising", {0, 1, 2});
  CHECK(std::abs(ising.A.trace_form(ising.A.unit(), ising.A.unit()) - cplx(4, 0)) <
        1e-9);

  Rng rng(99);
  for (int k = 0; k < 1000; ++k) {
    const Vec x = rng.gaussian_vector(ising.A.dim());
    const cplx v = ising.A.trace_form(x, x);
    CHECK(v.real() > -1e-9);
    CHECK(std::abs(v.imag()) < 1e-9);
  }

  // Gram matrix is diagonal with entries d(lam) d(nu): invertible, cond = 2.
  const Mat g = ising.A.gram();
  for (int i = 0; i < g.rows(); ++i) {
    const auto& b = ising.A.basis()[i];
    CHECK(std::abs(g(i, i) - cplx(ising.data.dim(b.lam) * ising.data.dim(b.nu), 0)) <
          1e-9);
    for (int j = 0; j < g.cols(); ++j)
      if (i != j) CHECK(std::abs(g(i, j)) < 1e-9);
  }
  CHECK(condition_number(g) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("pointed tube algebra: (g g|1|g g)^2 is supported on mu = 0") {
  auto z2 = make_tube("vec_z2", {0, 1});
  int gg = -1, pg = -1;
  for (int i = 0; i < z2.A.dim(); ++i) {
    const auto& b = z2.A.basis()[i];
    if (b.lam == 1 && b.mu == 1 && b.nu == 1) gg = i;
    if (b.lam == 1 && b.mu == 0 && b.nu == 1) pg = i;
  }
  REQUIRE(gg >= 0);
  REQUIRE(pg >= 0);
  Vec x = Vec::Zero(z2.A.dim());
  x(gg) = 1;
  const Vec sq = z2.A.multiply(x, x);
  for (int i = 0; i < z2.A.dim(); ++i) {
    const cplx expect = (i == pg) ? cplx(1, 0) : cplx(0, 0);
    CHECK(std::abs(sq(i) - expect) < 1e-12);
  }
}

TEST_CASE("corner projections cut the outer grading") {
  auto ising = make_tube("ising", {0, 1, 2});
  const int n = ising.A.dim();
  Rng rng(5);
  const Vec x = rng.gaussian_vector(n);
  Vec sum = Vec::Zero(n);
  for (int lam = 0; lam < 3; ++lam) {
    const Vec& p = ising.A.corner_projection(lam);
    CHECK((ising.A.multiply(p, p) - p).cwiseAbs().maxCoeff() < 1e-12);
    for (int mu = 0; mu < 3; ++mu) {
      const Vec cut = ising.A.multiply(p, ising.A.multiply(x, ising.A.corner_projection(mu)));
      for (int i = 0; i < n; ++i) {
        const auto& b = ising.A.basis()[i];
        if (b.lam != lam || b.nu != mu) CHECK(std::abs(cut(i)) < 1e-12);
      }
      sum += cut;
    }
  }
  CHECK((sum - x).cwiseAbs().maxCoeff() < 1e-10);
}
