#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tubecat/linalg.hpp"

namespace tubecat {

/// Thrown on malformed input files (bad indices, missing fields, ...).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a member set is not fusion/dual closed; carries the
/// offending triple a x b -> c.
struct ClosureError : std::runtime_error {
  ClosureError(const std::string& what, int a_, int b_, int c_)
      : std::runtime_error(what), a(a_), b(b_), c(c_) {}
  int a, b, c;
};

/// Fusion ring: rank, duality involution and multiplicity tensor N_{ab}^c.
/// Label 0 is the unit object.
class FusionRing {
 public:
  int rank = 0;
  std::vector<int> dual;

  void resize(int r) {
    rank = r;
    dual.assign(r, 0);
    mult_.assign(static_cast<std::size_t>(r) * r * r, 0);
  }

  int mult(int a, int b, int c) const {
    return mult_[(static_cast<std::size_t>(a) * rank + b) * rank + c];
  }
  void set_mult(int a, int b, int c, int n) {
    mult_[(static_cast<std::size_t>(a) * rank + b) * rank + c] = n;
  }

  /// (N_a)_{bc} = N_{ab}^c as a real matrix, for Perron-Frobenius checks.
  RMat fusion_matrix(int a) const;

  /// Multiplicity of `root` in the ordered product of `word`.
  long product_multiplicity(std::span<const int> word, int root) const;

  /// Human-readable axiom violations (unit law, duality, involution,
  /// associativity); empty means the ring is consistent.
  std::vector<std::string> axiom_failures(int max_items = 12) const;

 private:
  std::vector<int> mult_;
};

/// Skeletal data of a unitary fusion category. F-blocks are stored per
/// (a,b,c,d) with rows (e,alpha,beta) and columns (f,gamma,delta) in the
/// splitting-tree convention
///   (t^{ab}_{e,alpha} x 1_c) t^{ec}_{d,beta}
///     = sum_{f,gamma,delta} F^{abc}_d[(e,alpha,beta),(f,gamma,delta)]
///         (1_a x t^{bc}_{f,gamma}) t^{af}_{d,delta}.
/// Components with a unit leg among a,b,c are implicit (identity blocks)
/// and are rejected by the loader.
class FusionCategoryData {
 public:
  FusionRing ring;
  std::vector<std::string> names;
  std::vector<double> qdim;
  double tolerance = 1e-9;

  bool has_R() const { return has_r_; }
  int rank() const { return ring.rank; }
  double dim(int a) const { return qdim[a]; }
  double global_dimension() const;

  /// F-block row index set: tuples (e,alpha,beta).
  std::vector<std::array<int, 3>> f_rows(int a, int b, int c, int d) const;
  /// F-block column index set: tuples (f,gamma,delta).
  std::vector<std::array<int, 3>> f_cols(int a, int b, int c, int d) const;

  /// F-block; identity if a, b or c is the unit. Empty matrix when the
  /// block is inadmissible.
  Mat F(int a, int b, int c, int d) const;

  /// Braiding block: c_{a,b} t^{ab}_{c,alpha} = sum_beta
  /// R^{ab}_c[beta,alpha] t^{ba}_{c,beta}. Identity if a or b is the unit.
  Mat R(int a, int b, int c) const;

  void set_F(int a, int b, int c, int d, Mat block);
  void set_R(int a, int b, int c, Mat block);
  void mark_has_R() { has_r_ = true; }

 private:
  std::map<std::array<int, 4>, Mat> fblocks_;
  std::map<std::array<int, 3>, Mat> rblocks_;
  bool has_r_ = false;
};

/// Parse a category from JSON text / file. Schema documented in README.
/// Performs structural checks only; axiom checks live in validate().
FusionCategoryData load_category(const std::string& json_text);
FusionCategoryData load_category_file(const std::string& path);

struct ValidationReport {
  double pentagon_residual = 0.0;
  double f_unitarity_defect = 0.0;
  std::optional<double> hexagon_residual;  // present iff R data given
  double qdim_deviation = 0.0;             // vs Perron-Frobenius
  double qdim_unit_dual_defect = 0.0;      // d(0)=1, d(dual)=d
  std::vector<std::string> ring_failures;
  double tolerance = 0.0;
  bool pass = false;
};
ValidationReport validate(const FusionCategoryData& data);

/// Fusion- and dual-closed subset of labels containing the unit.
struct SubcategoryView {
  const FusionCategoryData* parent = nullptr;
  std::vector<int> members;  // ascending

  bool contains(int label) const;
};

/// Throws ClosureError when members is not closed or misses the unit.
SubcategoryView subcategory(const FusionCategoryData& data,
                            std::vector<int> members);

/// All fusion/dual-closed member sets of `data`, lexicographically sorted.
std::vector<std::vector<int>> all_subcategory_member_sets(
    const FusionCategoryData& data);

double global_dim(const SubcategoryView& view);

/// Built-in catalog: vec_z2, vec_z3, vec_z2_twisted, fibonacci, ising.
std::vector<std::string> catalog_names();
const std::string& catalog_json(const std::string& name);
FusionCategoryData catalog_category(const std::string& name);

}  // namespace tubecat
