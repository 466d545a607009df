#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "tubecat/fusion_data.hpp"

using namespace tubecat;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

}  // namespace

TEST_CASE("ising data file loads with expected rank and qdims") {
  FusionCategoryData data = load_category_file(std::string(TUBECAT_DATA_DIR) + "/ising.json");
  CHECK(data.rank() == 3);
  CHECK(data.qdim[0] == doctest::Approx(1.0));
  CHECK(data.qdim[1] == doctest::Approx(std::sqrt(2.0)));
  CHECK(data.qdim[2] == doctest::Approx(1.0));
  CHECK(data.names[1] == "sigma");
  CHECK(validate(data).pass);
}

TEST_CASE("vec_z2 has trivial F and unit qdims") {
  FusionCategoryData data = catalog_category("vec_z2");
  CHECK(data.rank() == 2);
  CHECK(data.qdim == std::vector<double>{1.0, 1.0});
  const Mat f = data.F(1, 1, 1, 1);
  REQUIRE(f.rows() == 1);
  CHECK(f(0, 0) == cplx(1, 0));
  ValidationReport rep = validate(data);
  CHECK(rep.pass);
  CHECK(rep.pentagon_residual == 0.0);
  CHECK(rep.f_unitarity_defect == 0.0);
}

TEST_CASE("unit-law violation loads fine and is flagged by validate") {
  // spurious N(1,0,0) = 1 breaks the unit law but keeps all F entries admissible
  std::string text = R"({
    "rank": 2, "dual": [0, 1],
    "N": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,0,0,1],[1,1,0,1]],
    "qdim": [1, 1],
    "F": [[1,1,1,1,0,0,0,0,0,0,1,0]]
  })";
  FusionCategoryData data = load_category(text);  // must not throw
  ValidationReport rep = validate(data);
  CHECK(!rep.pass);
  bool unit_law_flagged = false;
  for (const auto& msg : rep.ring_failures)
    if (msg.find("unit law") != std::string::npos) unit_law_flagged = true;
  CHECK(unit_law_flagged);
}

TEST_CASE("schema violations raise ParseError with location") {
  CHECK_THROWS_AS(load_category("{"), ParseError);
  CHECK_THROWS_AS(load_category(R"({"rank":0,"dual":[],"N":[],"qdim":[],"F":[]})"),
                  ParseError);
  // label out of range
  CHECK_THROWS_WITH_AS(
      load_category(
          R"({"rank":1,"dual":[0],"N":[[0,0,5,1]],"qdim":[1],"F":[]})"),
      doctest::Contains("out of range"), ParseError);
  // unit-leg F entry
  CHECK_THROWS_WITH_AS(
      load_category(
          R"({"rank":2,"dual":[0,1],"N":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]],
              "qdim":[1,1],"F":[[0,1,1,0,1,1,0,0,0,0,1,0]]})"),
      doctest::Contains("unit-leg"), ParseError);
  // bad qdim expression
  CHECK_THROWS_AS(
      load_category(
          R"x({"rank":1,"dual":[0],"N":[[0,0,0,1]],"qdim":["cube(2)"],"F":[]})x"),
      ParseError);
}

TEST_CASE("every catalog category validates below 1e-9") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    FusionCategoryData data = catalog_category(name);
    ValidationReport rep = validate(data);
    CHECK(rep.pass);
    CHECK(rep.pentagon_residual < 1e-9);
    CHECK(rep.f_unitarity_defect < 1e-9);
    CHECK(rep.qdim_deviation < 1e-9);
    if (rep.hexagon_residual) CHECK(*rep.hexagon_residual < 1e-9);
  }
}

TEST_CASE("embedded catalog matches the shipped data files") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    CHECK(catalog_json(name) ==
          read_file(std::string(TUBECAT_DATA_DIR) + "/" + name + ".json"));
  }
}

TEST_CASE("twisted z3 test dataset exercises complex F and passes pentagon") {
  FusionCategoryData data =
      load_category_file(std::string(TUBECAT_TEST_DATA_DIR) + "/vec_z3_twisted.json");
  bool has_complex = false;
  for (int a = 1; a < 3; ++a)
    for (int b = 1; b < 3; ++b)
      for (int c = 1; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const Mat f = data.F(a, b, c, d);
          if (f.size() > 0 && std::abs(f(0, 0).imag()) > 0.1) has_complex = true;
        }
  CHECK(has_complex);
  CHECK(validate(data).pass);
}

TEST_CASE("negating one fibonacci F entry breaks the pentagon at O(1)") {
  FusionCategoryData data = catalog_category("fibonacci");
  Mat f = data.F(1, 1, 1, 1);
  f(0, 0) = -f(0, 0);
  data.set_F(1, 1, 1, 1, f);
  ValidationReport rep = validate(data);
  CHECK(!rep.pass);
  CHECK(rep.pentagon_residual > 0.1);
}

TEST_CASE("subcategory closure") {
  FusionCategoryData ising = catalog_category("ising");

  SUBCASE("{1, psi} is a valid pointed subcategory") {
    SubcategoryView v = subcategory(ising, {0, 2});
    CHECK(v.members == std::vector<int>{0, 2});
  }
  SUBCASE("{1, sigma} fails closure naming sigma x sigma -> psi") {
    try {
      subcategory(ising, {0, 1});
      FAIL("expected ClosureError");
    } catch (const ClosureError& e) {
      CHECK(e.a == 1);
      CHECK(e.b == 1);
      CHECK(e.c == 2);
    }
  }
  SUBCASE("trivial and full views are always valid") {
    for (const auto& name : catalog_names()) {
      FusionCategoryData data = catalog_category(name);
      CHECK_NOTHROW(subcategory(data, {0}));
      std::vector<int> all;
      for (int i = 0; i < data.rank(); ++i) all.push_back(i);
      CHECK_NOTHROW(subcategory(data, all));
    }
  }
  SUBCASE("missing unit is rejected") {
    CHECK_THROWS_AS(subcategory(ising, {2}), ClosureError);
  }
}

TEST_CASE("global dimensions") {
  FusionCategoryData z2 = catalog_category("vec_z2");
  FusionCategoryData ising = catalog_category("ising");
  FusionCategoryData fib = catalog_category("fibonacci");
  CHECK(global_dim(subcategory(z2, {0, 1})) == doctest::Approx(2.0));
  CHECK(global_dim(subcategory(ising, {0, 1, 2})) == doctest::Approx(4.0));
  CHECK(global_dim(subcategory(fib, {0, 1})) ==
        doctest::Approx(1.0 + kGolden * kGolden));

  SUBCASE("global_dim of the trivial view is 1, and monotone under inclusion") {
    for (const auto& name : catalog_names()) {
      FusionCategoryData data = catalog_category(name);
      CHECK(global_dim(subcategory(data, {0})) == doctest::Approx(1.0));
      const auto sets = all_subcategory_member_sets(data);
      for (const auto& a : sets)
        for (const auto& b : sets) {
          if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
            CHECK(global_dim(subcategory(data, a)) <=
                  global_dim(subcategory(data, b)) + 1e-12);
          }
        }
    }
  }
}

TEST_CASE("fusion ring multiplicity folding matches direct sums") {
  FusionCategoryData ising = catalog_category("ising");
  const std::vector<int> w{1, 1, 1};
  CHECK(ising.ring.product_multiplicity(w, 1) == 2);  // sigma^3 contains 2 sigma
  const std::vector<int> w2{1, 1};
  CHECK(ising.ring.product_multiplicity(w2, 0) == 1);
  CHECK(ising.ring.product_multiplicity(std::vector<int>{}, 0) == 1);
}
