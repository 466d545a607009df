#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tubecat/fusion_data.hpp"
#include "tubecat/linalg.hpp"

namespace tubecat {

/// Ordered tensor word of simple labels; empty word is the unit object.
struct TensorWord {
  std::vector<int> factors;
  bool operator==(const TensorWord&) const = default;
  bool operator<(const TensorWord& o) const { return factors < o.factors; }
  int size() const { return static_cast<int>(factors.size()); }
};

inline TensorWord word(std::vector<int> v) { return TensorWord{std::move(v)}; }
TensorWord concat(const TensorWord& a, const TensorWord& b);

/// Left-parenthesized fusion tree: one (intermediate, multiplicity) step per
/// letter after the first. The root is the final intermediate.
struct FusionTree {
  std::vector<std::pair<int, int>> steps;
  bool operator==(const FusionTree&) const = default;
};

/// Canonical tree bases of a word, grouped by root label.
class WordTrees {
 public:
  WordTrees() = default;
  WordTrees(const FusionRing& ring, const TensorWord& w);
  int count(int root) const { return static_cast<int>(by_root_[root].size()); }
  const std::vector<FusionTree>& trees(int root) const { return by_root_[root]; }
  int total() const;

 private:
  std::vector<std::vector<FusionTree>> by_root_;
};

/// Linear map between tensor words in left-parenthesized tree coordinates.
/// blocks[r] has one row per target tree and one column per source tree
/// with root r; morphisms never mix roots.
struct Morphism {
  TensorWord source, target;
  std::vector<Mat> blocks;
};

/// Binary parenthesization of a word. Node children: >= 0 is a node index,
/// < 0 encodes leaf ~k. For a single letter there are no nodes.
struct ParenShape {
  struct Node {
    int left, right;
  };
  std::vector<Node> nodes;  // nodes[0] is the root when non-empty
  int leaves = 0;

  static ParenShape leaf();
  static ParenShape left_comb(int n);
  static ParenShape right_comb(int n);
  /// Graft two shapes under a new root.
  static ParenShape pair(const ParenShape& l, const ParenShape& r);

  bool is_left_comb() const;
  std::string key() const;  // canonical serialization (span structure)
};

/// Solution of the conjugate equations for one label, normalized so that
/// r* r = rbar* rbar = d(label) and both zig-zags equal the identity.
struct RigidityPair {
  int label = 0;
  Morphism r;     // unit -> (dual, label)
  Morphism rbar;  // unit -> (label, dual)
};

/// Fusion-tree calculus engine for one category. All morphisms are stored
/// against the left-parenthesized basis; operations that need another
/// association recouple internally. Immutable data; the caches make the
/// engine itself non-const but all results are value types.
class HomEngine {
 public:
  /// Internal tree-labeling representation, exposed for the tensor kernel.
  struct ShapedLabeling {
    // span (lo,hi) of leaves -> (label, mult index), for internal nodes
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> assign;
    int root_label = 0;
  };
  struct ShapedBasis {
    std::vector<std::vector<ShapedLabeling>> by_root;  // indexed by root label
    int count(int r) const { return static_cast<int>(by_root[r].size()); }
  };

  explicit HomEngine(const FusionCategoryData& data) : data_(&data) {}

  const FusionCategoryData& data() const { return *data_; }
  const FusionRing& ring() const { return data_->ring; }
  int rank() const { return data_->rank(); }

  const WordTrees& trees(const TensorWord& w);

  Morphism identity(const TensorWord& w);
  Morphism zero(const TensorWord& src, const TensorWord& dst);
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism adjoint(const Morphism& f) const;
  Morphism tensor(const Morphism& f, const Morphism& g);
  Morphism tensor_identity_left(const TensorWord& w, const Morphism& f);
  Morphism tensor_identity_right(const Morphism& f, const TensorWord& w);
  static Morphism scaled(Morphism f, cplx s);
  static Morphism add(const Morphism& f, const Morphism& g);
  static Morphism sub(const Morphism& f, const Morphism& g);
  /// max absolute entry across blocks
  static double norm(const Morphism& f);
  static double distance(const Morphism& f, const Morphism& g);
  /// Hilbert-Schmidt inner product <f,g> = sum tr(g^* f) over roots.
  static cplx hs_inner(const Morphism& f, const Morphism& g);
  /// Scalar of an endomorphism known to be a multiple of the identity on a
  /// single-root word (asserts a unique 1x1-compatible block).
  static cplx scalar_of(const Morphism& f);

  /// k-th canonical tree of w with the given root, as an isometry
  /// (root)-word -> w. Unit root uses the single-letter word (0).
  Morphism tree_isometry(const TensorWord& w, int root, int k);
  /// Canonical identification Hom((), (0)): the unit as letter.
  Morphism unit_letter();

  /// Coordinate change between parenthesizations: blocks[r] maps
  /// from-coordinates to to-coordinates of Hom(r, w).
  struct BasisChange {
    TensorWord word;
    std::vector<Mat> blocks;
  };
  const BasisChange& recoupling_unitary(const TensorWord& w,
                                        const ParenShape& from,
                                        const ParenShape& to);
  /// f with both legs re-expressed in other parenthesizations.
  Morphism recouple(const Morphism& f, const ParenShape& src_from,
                    const ParenShape& src_to, const ParenShape& dst_from,
                    const ParenShape& dst_to);

  const RigidityPair& rigidity(int label);

  /// Standard left inverse: X in Hom(a.w1, a.w2) -> Hom(w1, w2),
  /// normalized so that phi_a(id) = id.
  Morphism left_inverse(int label, const Morphism& x);

  /// Braiding c_{a,b} from R data.
  Morphism braiding(int a, int b) const;

 private:
  ShapedBasis enumerate_shaped(const TensorWord& w, const ParenShape& shape) const;
  // One right-rotation toward the left comb at node p; returns the new shape
  // and fills per-root matrices mapping old coordinates to new coordinates.
  ParenShape rotate_step(const TensorWord& w, const ParenShape& shape, int node,
                         const ShapedBasis& oldBasis, ShapedBasis& newBasis,
                         std::vector<Mat>& transform) const;
  // Coordinate change shape -> left comb (product of rotation steps).
  std::vector<Mat> flatten_transform(const TensorWord& w, const ParenShape& shape);

  Morphism tensor_left_one(int a, const Morphism& f);

  const FusionCategoryData* data_;
  std::map<TensorWord, WordTrees> tree_cache_;
  std::map<std::pair<TensorWord, std::string>, std::vector<Mat>> flatten_cache_;
  std::map<std::pair<TensorWord, std::pair<std::string, std::string>>, BasisChange>
      recouple_cache_;
  std::map<int, RigidityPair> rigidity_cache_;
};

}  // namespace tubecat
