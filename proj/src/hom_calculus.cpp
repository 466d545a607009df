#include "tubecat/hom_calculus.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace tubecat {

TensorWord concat(const TensorWord& a, const TensorWord& b) {
  TensorWord out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

WordTrees::WordTrees(const FusionRing& ring, const TensorWord& w) {
  by_root_.resize(ring.rank);
  const auto& f = w.factors;
  if (f.empty()) {
    by_root_[0].push_back(FusionTree{});
    return;
  }
  if (f.size() == 1) {
    by_root_[f[0]].push_back(FusionTree{});
    return;
  }
  // DFS in ascending (intermediate, mult) order; yields lexicographic trees.
  FusionTree current;
  current.steps.reserve(f.size() - 1);
  auto rec = [&](auto&& self, int pos, int m) -> void {
    if (pos == static_cast<int>(f.size())) {
      by_root_[m].push_back(current);
      return;
    }
    for (int next = 0; next < ring.rank; ++next) {
      const int n = ring.mult(m, f[pos], next);
      for (int alpha = 0; alpha < n; ++alpha) {
        current.steps.emplace_back(next, alpha);
        self(self, pos + 1, next);
        current.steps.pop_back();
      }
    }
  };
  rec(rec, 1, f[0]);
}

int WordTrees::total() const {
  int t = 0;
  for (const auto& v : by_root_) t += static_cast<int>(v.size());
  return t;
}

ParenShape ParenShape::leaf() {
  ParenShape s;
  s.leaves = 1;
  return s;
}

ParenShape ParenShape::pair(const ParenShape& l, const ParenShape& r) {
  ParenShape s;
  s.leaves = l.leaves + r.leaves;
  const int loff = 1;
  const int roff = 1 + static_cast<int>(l.nodes.size());
  auto shift_child = [](int child, int node_off, int leaf_off) {
    return child >= 0 ? child + node_off : ~((~child) + leaf_off);
  };
  Node root;
  root.left = l.nodes.empty() ? ~0 : loff;
  root.right = r.nodes.empty() ? ~l.leaves : roff;
  s.nodes.push_back(root);
  for (const Node& n : l.nodes)
    s.nodes.push_back({shift_child(n.left, loff, 0), shift_child(n.right, loff, 0)});
  for (const Node& n : r.nodes)
    s.nodes.push_back(
        {shift_child(n.left, roff, l.leaves), shift_child(n.right, roff, l.leaves)});
  return s;
}

ParenShape ParenShape::left_comb(int n) {
  if (n < 1) throw std::invalid_argument("left_comb needs n >= 1");
  ParenShape s = leaf();
  for (int i = 1; i < n; ++i) s = pair(s, leaf());
  return s;
}

ParenShape ParenShape::right_comb(int n) {
  if (n < 1) throw std::invalid_argument("right_comb needs n >= 1");
  ParenShape s = leaf();
  for (int i = 1; i < n; ++i) s = pair(leaf(), s);
  return s;
}

namespace {

std::string shape_string(const ParenShape& s, int node) {
  if (node < 0) return std::to_string(~node);
  return "(" + shape_string(s, s.nodes[node].left) + " " +
         shape_string(s, s.nodes[node].right) + ")";
}

// Inclusive leaf span covered by a child reference.
std::pair<int, int> child_span(const ParenShape& s, int child);

std::pair<int, int> node_span(const ParenShape& s, int node) {
  const auto l = child_span(s, s.nodes[node].left);
  const auto r = child_span(s, s.nodes[node].right);
  return {l.first, r.second};
}

std::pair<int, int> child_span(const ParenShape& s, int child) {
  if (child < 0) return {~child, ~child};
  return node_span(s, child);
}

}  // namespace

std::string ParenShape::key() const {
  if (nodes.empty()) return "0";
  return shape_string(*this, 0);
}

bool ParenShape::is_left_comb() const {
  return key() == left_comb(leaves).key();
}

const WordTrees& HomEngine::trees(const TensorWord& w) {
  auto it = tree_cache_.find(w);
  if (it == tree_cache_.end())
    it = tree_cache_.emplace(w, WordTrees(ring(), w)).first;
  return it->second;
}

Morphism HomEngine::identity(const TensorWord& w) {
  Morphism m;
  m.source = m.target = w;
  const WordTrees& t = trees(w);
  m.blocks.resize(rank());
  for (int r = 0; r < rank(); ++r)
    m.blocks[r] = Mat::Identity(t.count(r), t.count(r));
  return m;
}

Morphism HomEngine::zero(const TensorWord& src, const TensorWord& dst) {
  Morphism m;
  m.source = src;
  m.target = dst;
  const WordTrees& ts = trees(src);
  const WordTrees& tt = trees(dst);
  m.blocks.resize(rank());
  for (int r = 0; r < rank(); ++r) m.blocks[r] = Mat::Zero(tt.count(r), ts.count(r));
  return m;
}

Morphism HomEngine::compose(const Morphism& g, const Morphism& f) const {
  if (!(f.target == g.source))
    throw std::invalid_argument("compose: shape mismatch (f.target != g.source)");
  Morphism m;
  m.source = f.source;
  m.target = g.target;
  m.blocks.resize(f.blocks.size());
  for (std::size_t r = 0; r < f.blocks.size(); ++r)
    m.blocks[r] = g.blocks[r] * f.blocks[r];
  return m;
}

Morphism HomEngine::adjoint(const Morphism& f) const {
  Morphism m;
  m.source = f.target;
  m.target = f.source;
  m.blocks.resize(f.blocks.size());
  for (std::size_t r = 0; r < f.blocks.size(); ++r)
    m.blocks[r] = f.blocks[r].adjoint();
  return m;
}

Morphism HomEngine::scaled(Morphism f, cplx s) {
  for (auto& b : f.blocks) b *= s;
  return f;
}

Morphism HomEngine::add(const Morphism& f, const Morphism& g) {
  if (!(f.source == g.source) || !(f.target == g.target))
    throw std::invalid_argument("add: shape mismatch");
  Morphism m = f;
  for (std::size_t r = 0; r < m.blocks.size(); ++r) m.blocks[r] += g.blocks[r];
  return m;
}

Morphism HomEngine::sub(const Morphism& f, const Morphism& g) {
  return add(f, scaled(g, cplx(-1, 0)));
}

double HomEngine::norm(const Morphism& f) {
  double n = 0.0;
  for (const auto& b : f.blocks)
    if (b.size() > 0) n = std::max(n, b.cwiseAbs().maxCoeff());
  return n;
}

double HomEngine::distance(const Morphism& f, const Morphism& g) {
  return norm(sub(f, g));
}

cplx HomEngine::hs_inner(const Morphism& f, const Morphism& g) {
  cplx s(0, 0);
  for (std::size_t r = 0; r < f.blocks.size(); ++r)
    if (f.blocks[r].size() > 0) s += (g.blocks[r].adjoint() * f.blocks[r]).trace();
  return s;
}

cplx HomEngine::scalar_of(const Morphism& f) {
  const Mat* found = nullptr;
  for (const auto& b : f.blocks) {
    if (b.rows() == 0 && b.cols() == 0) continue;
    if (b.rows() != 1 || b.cols() != 1 || found)
      throw std::invalid_argument("scalar_of: morphism is not a scalar");
    found = &b;
  }
  if (!found) throw std::invalid_argument("scalar_of: empty morphism");
  return (*found)(0, 0);
}

Morphism HomEngine::tree_isometry(const TensorWord& w, int root, int k) {
  Morphism m;
  m.source = word({root});
  m.target = w;
  const WordTrees& t = trees(w);
  if (k < 0 || k >= t.count(root))
    throw std::invalid_argument("tree_isometry: index out of range");
  m.blocks.resize(rank());
  for (int r = 0; r < rank(); ++r)
    m.blocks[r] = Mat::Zero(t.count(r), r == root ? 1 : 0);
  m.blocks[root](k, 0) = 1.0;
  return m;
}

Morphism HomEngine::unit_letter() {
  Morphism m;
  m.source = TensorWord{};
  m.target = word({0});
  m.blocks.resize(rank());
  for (int r = 0; r < rank(); ++r) m.blocks[r] = Mat::Zero(r == 0 ? 1 : 0, r == 0 ? 1 : 0);
  m.blocks[0](0, 0) = 1.0;
  return m;
}

// ---------------------------------------------------------------------------
// Shaped bases and recoupling

HomEngine::ShapedBasis HomEngine::enumerate_shaped(const TensorWord& w,
                                                   const ParenShape& shape) const {
  ShapedBasis basis;
  basis.by_root.resize(rank());
  if (static_cast<int>(w.factors.size()) != shape.leaves)
    throw std::invalid_argument("enumerate_shaped: leaf count mismatch");
  if (shape.leaves == 1) {
    basis.by_root[w.factors[0]].push_back(ShapedLabeling{{}, w.factors[0]});
    return basis;
  }
  // Post-order node sequence (children before parents).
  std::vector<int> order;
  {
    std::vector<std::pair<int, bool>> stack{{0, false}};
    while (!stack.empty()) {
      auto [n, processed] = stack.back();
      stack.pop_back();
      if (processed) {
        order.push_back(n);
        continue;
      }
      stack.push_back({n, true});
      if (shape.nodes[n].right >= 0) stack.push_back({shape.nodes[n].right, false});
      if (shape.nodes[n].left >= 0) stack.push_back({shape.nodes[n].left, false});
    }
  }
  std::vector<int> node_label(shape.nodes.size(), -1);
  std::vector<int> node_mult(shape.nodes.size(), 0);
  auto child_label = [&](int child) {
    return child < 0 ? w.factors[~child] : node_label[child];
  };
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == order.size()) {
      ShapedLabeling l;
      for (int n : order)
        l.assign.push_back({node_span(shape, n), {node_label[n], node_mult[n]}});
      std::sort(l.assign.begin(), l.assign.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      l.root_label = node_label[0];
      basis.by_root[l.root_label].push_back(std::move(l));
      return;
    }
    const int n = order[k];
    const int la = child_label(shape.nodes[n].left);
    const int lb = child_label(shape.nodes[n].right);
    for (int c = 0; c < rank(); ++c) {
      const int m = ring().mult(la, lb, c);
      for (int alpha = 0; alpha < m; ++alpha) {
        node_label[n] = c;
        node_mult[n] = alpha;
        go(k + 1);
      }
    }
    node_label[n] = -1;
  };
  go(0);
  for (auto& group : basis.by_root)
    std::sort(group.begin(), group.end(),
              [](const ShapedLabeling& a, const ShapedLabeling& b) {
                // spans agree within a group; compare (label, mult) sequences
                for (std::size_t i = 0; i < a.assign.size(); ++i)
                  if (a.assign[i].second != b.assign[i].second)
                    return a.assign[i].second < b.assign[i].second;
                return false;
              });
  return basis;
}

namespace {

// Rebuild a shape with the subtree at `node` replaced.
ParenShape extract_subshape(const ParenShape& s, int child) {
  if (child < 0) return ParenShape::leaf();
  const ParenShape l = extract_subshape(s, s.nodes[child].left);
  const ParenShape r = extract_subshape(s, s.nodes[child].right);
  return ParenShape::pair(l, r);
}

ParenShape rebuild_with(const ParenShape& s, int target_node, const ParenShape& repl,
                        int child) {
  if (child == target_node) return repl;
  if (child < 0) return ParenShape::leaf();
  return ParenShape::pair(rebuild_with(s, target_node, repl, s.nodes[child].left),
                          rebuild_with(s, target_node, repl, s.nodes[child].right));
}

}  // namespace

// One right-rotation Node(X, Node(Y, Z)) -> Node(Node(X, Y), Z) at `node`.
ParenShape HomEngine::rotate_step(const TensorWord& w, const ParenShape& shape,
                                  int node, const ShapedBasis& oldBasis,
                                  ShapedBasis& newBasis,
                                  std::vector<Mat>& transform) const {
  const int q = shape.nodes[node].right;
  if (q < 0) throw std::logic_error("rotate_step: right child is a leaf");
  const int xref = shape.nodes[node].left;
  const int yref = shape.nodes[q].left;
  const int zref = shape.nodes[q].right;
  const auto span_x = child_span(shape, xref);
  const auto span_y = child_span(shape, yref);
  const auto span_z = child_span(shape, zref);
  const auto span_p = node_span(shape, node);
  const auto span_q = node_span(shape, q);
  const auto span_new = std::make_pair(span_x.first, span_y.second);

  const ParenShape sub = ParenShape::pair(
      ParenShape::pair(extract_subshape(shape, xref), extract_subshape(shape, yref)),
      extract_subshape(shape, zref));
  const ParenShape newShape = rebuild_with(shape, node, sub, 0);

  newBasis = enumerate_shaped(w, newShape);
  transform.assign(rank(), Mat());
  // index lookup for the new basis
  std::vector<std::map<std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>, int>>
      newIndex(rank());
  for (int r = 0; r < rank(); ++r) {
    for (int i = 0; i < newBasis.count(r); ++i)
      newIndex[r][newBasis.by_root[r][i].assign] = i;
    transform[r] = Mat::Zero(newBasis.count(r), oldBasis.count(r));
  }

  auto lookup = [&](const ShapedLabeling& l, std::pair<int, int> span,
                    int leaf_label) -> std::pair<int, int> {
    if (span.first == span.second) return {leaf_label, 0};
    for (const auto& [sp, val] : l.assign)
      if (sp == span) return val;
    throw std::logic_error("rotate_step: span not found");
  };

  for (int r = 0; r < rank(); ++r) {
    for (int oldIdx = 0; oldIdx < oldBasis.count(r); ++oldIdx) {
      const ShapedLabeling& L = oldBasis.by_root[r][oldIdx];
      const int a = (span_x.first == span_x.second)
                        ? w.factors[span_x.first]
                        : lookup(L, span_x, 0).first;
      const int b = (span_y.first == span_y.second)
                        ? w.factors[span_y.first]
                        : lookup(L, span_y, 0).first;
      const int c = (span_z.first == span_z.second)
                        ? w.factors[span_z.first]
                        : lookup(L, span_z, 0).first;
      const auto [d, delta] = lookup(L, span_p, 0);
      const auto [f, gamma] = lookup(L, span_q, 0);
      const Mat fmat = data_->F(a, b, c, d);
      const auto rows = data_->f_rows(a, b, c, d);
      const auto cols = data_->f_cols(a, b, c, d);
      const auto colIt =
          std::find(cols.begin(), cols.end(), std::array<int, 3>{f, gamma, delta});
      const int colPos = static_cast<int>(colIt - cols.begin());
      for (int e = 0; e < rank(); ++e) {
        for (int alpha = 0; alpha < ring().mult(a, b, e); ++alpha)
          for (int beta = 0; beta < ring().mult(e, c, d); ++beta) {
            const auto rowIt = std::find(rows.begin(), rows.end(),
                                         std::array<int, 3>{e, alpha, beta});
            const cplx coeff = std::conj(fmat(rowIt - rows.begin(), colPos));
            if (coeff == cplx(0, 0)) continue;
            auto assign = L.assign;
            std::erase_if(assign, [&](const auto& kv) { return kv.first == span_q; });
            for (auto& kv : assign)
              if (kv.first == span_p) kv.second = {d, beta};
            assign.push_back({span_new, {e, alpha}});
            std::sort(assign.begin(), assign.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            auto it = newIndex[r].find(assign);
            if (it == newIndex[r].end())
              throw std::logic_error("rotate_step: rotated labeling missing");
            transform[r](it->second, oldIdx) += coeff;
          }
      }
    }
  }
  return newShape;
}

std::vector<Mat> HomEngine::flatten_transform(const TensorWord& w,
                                              const ParenShape& shape) {
  const auto cacheKey = std::make_pair(w, shape.key());
  auto cached = flatten_cache_.find(cacheKey);
  if (cached != flatten_cache_.end()) return cached->second;

  ShapedBasis basis = enumerate_shaped(w, shape);
  std::vector<Mat> total(rank());
  for (int r = 0; r < rank(); ++r)
    total[r] = Mat::Identity(basis.count(r), basis.count(r));
  ParenShape current = shape;
  for (;;) {
    // first node (ascending index) whose right child is internal
    int node = -1;
    for (std::size_t i = 0; i < current.nodes.size(); ++i)
      if (current.nodes[i].right >= 0) {
        node = static_cast<int>(i);
        break;
      }
    if (node < 0) break;
    ShapedBasis next;
    std::vector<Mat> step;
    current = rotate_step(w, current, node, basis, next, step);
    for (int r = 0; r < rank(); ++r) total[r] = step[r] * total[r];
    basis = std::move(next);
  }
  // sanity: final enumeration must match the canonical tree basis
  const WordTrees& t = trees(w);
  for (int r = 0; r < rank(); ++r)
    if (total[r].rows() != t.count(r))
      throw std::logic_error("flatten_transform: basis count mismatch");
  flatten_cache_.emplace(cacheKey, total);
  return total;
}

const HomEngine::BasisChange& HomEngine::recoupling_unitary(const TensorWord& w,
                                                            const ParenShape& from,
                                                            const ParenShape& to) {
  if (w.factors.empty())
    throw std::invalid_argument("recoupling_unitary: empty word");
  if (from.leaves != w.size() || to.leaves != w.size())
    throw std::invalid_argument("recoupling_unitary: leaf count mismatch");
  const auto cacheKey = std::make_pair(w, std::make_pair(from.key(), to.key()));
  auto it = recouple_cache_.find(cacheKey);
  if (it != recouple_cache_.end()) return it->second;
  const std::vector<Mat> uf = flatten_transform(w, from);
  const std::vector<Mat> ut = flatten_transform(w, to);
  BasisChange bc;
  bc.word = w;
  bc.blocks.resize(rank());
  for (int r = 0; r < rank(); ++r) bc.blocks[r] = ut[r].adjoint() * uf[r];
  return recouple_cache_.emplace(cacheKey, std::move(bc)).first->second;
}

Morphism HomEngine::recouple(const Morphism& f, const ParenShape& src_from,
                             const ParenShape& src_to, const ParenShape& dst_from,
                             const ParenShape& dst_to) {
  const BasisChange& us = recoupling_unitary(f.source, src_from, src_to);
  const BasisChange& ut = recoupling_unitary(f.target, dst_from, dst_to);
  Morphism out = f;
  for (int r = 0; r < rank(); ++r)
    out.blocks[r] = ut.blocks[r] * f.blocks[r] * us.blocks[r].adjoint();
  return out;
}

// ---------------------------------------------------------------------------
// Tensor product via the pair-shaped basis

namespace {

// Split a pair-shape labeling into comb trees of the two halves.
struct PairSplit {
  FusionTree left, right;
  int left_root, right_root;
  int top_mult;
};

PairSplit split_pair_labeling(const HomEngine::ShapedLabeling& l,
                              const TensorWord& w, int nA) {
  PairSplit out;
  const int n = w.size();
  out.top_mult = 0;
  out.left_root = w.factors.empty() ? 0 : w.factors[0];
  out.right_root = nA < n ? w.factors[nA] : 0;
  for (const auto& [span, val] : l.assign) {
    if (span == std::make_pair(0, n - 1)) {
      out.top_mult = val.second;
    } else if (span.first == 0) {
      out.left.steps.push_back(val);
      if (span.second == nA - 1) out.left_root = val.first;
    } else {
      out.right.steps.push_back(val);
      if (span.second == n - 1) out.right_root = val.first;
    }
  }
  return out;
}

int tree_position(const WordTrees& t, int root, const FusionTree& tree) {
  const auto& v = t.trees(root);
  const auto it = std::find(v.begin(), v.end(), tree);
  if (it == v.end()) throw std::logic_error("tree_position: tree not found");
  return static_cast<int>(it - v.begin());
}

// Reword helpers for unit padding/stripping: the tree bases of (0)+w and
// w+(0) are in canonical bijection with those of w, preserving order.
TensorWord pad_front(const TensorWord& w) {
  TensorWord out;
  out.factors.push_back(0);
  out.factors.insert(out.factors.end(), w.factors.begin(), w.factors.end());
  return out;
}

TensorWord pad_back(const TensorWord& w) {
  TensorWord out = w;
  out.factors.push_back(0);
  return out;
}

}  // namespace

Morphism HomEngine::tensor(const Morphism& f, const Morphism& g) {
  const bool f_scalar = f.source.factors.empty() && f.target.factors.empty();
  const bool g_scalar = g.source.factors.empty() && g.target.factors.empty();
  if (f_scalar) return scaled(g, f.blocks[0](0, 0));
  if (g_scalar) return scaled(f, g.blocks[0](0, 0));

  // Pad empty legs with an explicit unit letter so pair shapes exist.
  Morphism f2 = f, g2 = g;
  bool strip_src_front = false, strip_dst_front = false;
  bool strip_src_back = false, strip_dst_back = false;
  if (f2.source.factors.empty()) {
    f2.source = word({0});
    strip_src_front = true;
  }
  if (f2.target.factors.empty()) {
    f2.target = word({0});
    strip_dst_front = true;
  }
  if (g2.source.factors.empty()) {
    g2.source = word({0});
    strip_src_back = true;
  }
  if (g2.target.factors.empty()) {
    g2.target = word({0});
    strip_dst_back = true;
  }

  const TensorWord ws = concat(f2.source, g2.source);
  const TensorWord wt = concat(f2.target, g2.target);
  const int nsA = f2.source.size();
  const int ntA = f2.target.size();

  const ParenShape ss = ParenShape::pair(ParenShape::left_comb(nsA),
                                         ParenShape::left_comb(g2.source.size()));
  const ParenShape st = ParenShape::pair(ParenShape::left_comb(ntA),
                                         ParenShape::left_comb(g2.target.size()));
  const ShapedBasis bs = enumerate_shaped(ws, ss);
  const ShapedBasis bt = enumerate_shaped(wt, st);
  const WordTrees& tFs = trees(f2.source);
  const WordTrees& tFt = trees(f2.target);
  const WordTrees& tGs = trees(g2.source);
  const WordTrees& tGt = trees(g2.target);

  const std::vector<Mat> us = flatten_transform(ws, ss);
  const std::vector<Mat> ut = flatten_transform(wt, st);

  Morphism out;
  out.source = ws;
  out.target = wt;
  out.blocks.resize(rank());
  for (int r = 0; r < rank(); ++r) {
    Mat pairBlock = Mat::Zero(bt.count(r), bs.count(r));
    for (int col = 0; col < bs.count(r); ++col) {
      const PairSplit cs = split_pair_labeling(bs.by_root[r][col], ws, nsA);
      const int colL = tree_position(tFs, cs.left_root, cs.left);
      const int colR = tree_position(tGs, cs.right_root, cs.right);
      for (int row = 0; row < bt.count(r); ++row) {
        const PairSplit rs = split_pair_labeling(bt.by_root[r][row], wt, ntA);
        if (rs.left_root != cs.left_root || rs.right_root != cs.right_root ||
            rs.top_mult != cs.top_mult)
          continue;
        const int rowL = tree_position(tFt, rs.left_root, rs.left);
        const int rowR = tree_position(tGt, rs.right_root, rs.right);
        pairBlock(row, col) = f2.blocks[cs.left_root](rowL, colL) *
                              g2.blocks[cs.right_root](rowR, colR);
      }
    }
    out.blocks[r] = ut[r].adjoint() * pairBlock * us[r];
  }

  // Strip padded unit letters; the tree bijections are order-preserving so
  // the coordinate matrices carry over unchanged.
  if (strip_src_back) out.source = f2.source;
  if (strip_src_front)
    out.source = TensorWord{std::vector<int>(out.source.factors.begin() + 1,
                                             out.source.factors.end())};
  if (strip_dst_back) out.target = f2.target;
  if (strip_dst_front)
    out.target = TensorWord{std::vector<int>(out.target.factors.begin() + 1,
                                             out.target.factors.end())};
  return out;
}

Morphism HomEngine::tensor_identity_left(const TensorWord& w, const Morphism& f) {
  if (w.factors.empty()) return f;
  return tensor(identity(w), f);
}

Morphism HomEngine::tensor_identity_right(const Morphism& f, const TensorWord& w) {
  if (w.factors.empty()) return f;
  return tensor(f, identity(w));
}

// ---------------------------------------------------------------------------
// Rigidity and left inverses

const RigidityPair& HomEngine::rigidity(int label) {
  auto it = rigidity_cache_.find(label);
  if (it != rigidity_cache_.end()) return it->second;
  const int lb = ring().dual[label];
  if (lb < label) {
    // Build the partner first; the pair of the dual is the swapped pair.
    const RigidityPair& p = rigidity(lb);
    RigidityPair q{label, p.rbar, p.r};
    return rigidity_cache_.emplace(label, std::move(q)).first->second;
  }

  auto cup = [&](int x, int y) {
    // candidate unit -> (x, y), coefficient 1 on the unique tree
    Morphism m;
    m.source = TensorWord{};
    m.target = word({x, y});
    const WordTrees& t = trees(m.target);
    m.blocks.resize(rank());
    for (int r = 0; r < rank(); ++r) m.blocks[r] = Mat::Zero(t.count(r), r == 0 ? 1 : 0);
    m.blocks[0](0, 0) = 1.0;
    return m;
  };
  const Morphism t_r = cup(lb, label);
  const Morphism t_rb = cup(label, lb);
  const Morphism id_l = identity(word({label}));
  // zig-zag with raw cups: (t_rb^* x 1)(1 x t_r) in End(label)
  const cplx z0 = scalar_of(
      compose(tensor(adjoint(t_rb), id_l), tensor(id_l, t_r)));
  const double d = data_->dim(label);
  if (std::abs(std::abs(z0) - 1.0 / d) > 1e-6)
    throw std::runtime_error("rigidity: F data is not in a standard unitary gauge (|zigzag| != 1/d) for label " +
                             std::to_string(label));
  const cplx c = std::sqrt(d);
  const cplx cp = 1.0 / (std::sqrt(d) * std::conj(z0));
  RigidityPair pair{label, scaled(t_r, c), scaled(t_rb, cp)};
  // second conjugate equation must hold as well
  const Morphism id_lb = identity(word({lb}));
  const cplx z2 = scalar_of(
      compose(tensor(adjoint(pair.r), id_lb), tensor(id_lb, pair.rbar)));
  if (std::abs(z2 - 1.0) > 1e-8)
    throw std::runtime_error("rigidity: conjugate equations are inconsistent for label " +
                             std::to_string(label));
  return rigidity_cache_.emplace(label, std::move(pair)).first->second;
}

Morphism HomEngine::left_inverse(int label, const Morphism& x) {
  if (x.source.factors.empty() || x.source.factors[0] != label ||
      x.target.factors.empty() || x.target.factors[0] != label)
    throw std::invalid_argument("left_inverse: morphism must have a leading leg of the given label");
  const int lb = ring().dual[label];
  const RigidityPair& rp = rigidity(label);
  TensorWord w1{std::vector<int>(x.source.factors.begin() + 1, x.source.factors.end())};
  TensorWord w2{std::vector<int>(x.target.factors.begin() + 1, x.target.factors.end())};
  const Morphism bot = tensor(rp.r, identity(w1));
  const Morphism mid = tensor_identity_left(word({lb}), x);
  const Morphism top = tensor(adjoint(rp.r), identity(w2));
  return scaled(compose(top, compose(mid, bot)), 1.0 / data_->dim(label));
}

Morphism HomEngine::braiding(int a, int b) const {
  Morphism m;
  m.source = word({a, b});
  m.target = word({b, a});
  m.blocks.resize(rank());
  for (int c = 0; c < rank(); ++c) m.blocks[c] = data_->R(a, b, c);
  return m;
}

}  // namespace tubecat
