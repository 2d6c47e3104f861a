// Bound quiver algebras KQ/I with an explicit path basis.
//
// The ideal is computed by linear closure, one vertex pair at a time: the
// span of p*r*q over relations r and paths p, q, truncated at a length bound.
// The nilpotency degree L is the least length whose whole path layer lies in
// the ideal modulo longer paths; the algebra is then KQ/(I + KQ_{>=L}).
#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrep/matrix.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SparseVector = std::vector<std::pair<int, Scalar>>;

class BoundAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundAlgebra>;

inline constexpr int kDefaultMaxLength = 30;
inline constexpr std::size_t kPathBudget = 400000;

AlgebraPtr build_algebra(const Field& field, const Quiver& quiver, const std::vector<Relation>& relations,
                         int max_length = kDefaultMaxLength);
AlgebraPtr opposite(const AlgebraPtr& algebra);

class BoundAlgebra {
 public:
  BoundAlgebra(const BoundAlgebra&) = delete;
  BoundAlgebra& operator=(const BoundAlgebra&) = delete;

  const Field& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int max_length() const { return max_length_; }
  int vertex_count() const { return quiver_.vertex_count(); }

  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
  int nilpotency_degree() const { return nilpotency_degree_; }

  /// Basis indices of residues of paths from s to t, in basis order.
  const std::vector<int>& basis_between(int s, int t) const {
    return blocks_.at(static_cast<std::size_t>(s)).at(static_cast<std::size_t>(t));
  }
  int stationary(int v) const { return stationary_.at(static_cast<std::size_t>(v)); }

  std::optional<int> basis_index(const Path& p) const {
    auto it = basis_lookup_.find(key(p));
    if (it == basis_lookup_.end()) return std::nullopt;
    return it->second;
  }

  /// Coordinates of the residue class of a path.
  SparseVector normal_form_sparse(const Path& p) const {
    if (static_cast<int>(p.length()) >= nilpotency_degree_) return {};
    auto it = normal_forms_.find(key(p));
    if (it == normal_forms_.end()) throw std::logic_error("path missing from normal form table");
    return it->second;
  }

  Vector normal_form(const Path& p) const { return densify(normal_form_sparse(p)); }

  /// b_i * b_j in basis coordinates.
  const SparseVector& product(int i, int j) const {
    return products_[static_cast<std::size_t>(i) * basis_.size() + static_cast<std::size_t>(j)];
  }

  Vector multiply(const Vector& x, const Vector& y) const {
    Vector out = zero_vector(field_, basis_.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_zero()) continue;
        Scalar c = x[i] * y[j];
        for (const auto& [k, v] : product(static_cast<int>(i), static_cast<int>(j))) {
          out[static_cast<std::size_t>(k)] += c * v;
        }
      }
    }
    return out;
  }

  Vector unit() const {
    Vector out = zero_vector(field_, basis_.size());
    for (int v = 0; v < vertex_count(); ++v) out[static_cast<std::size_t>(stationary(v))] = Scalar::one(field_);
    return out;
  }

  Vector densify(const SparseVector& s) const {
    Vector out = zero_vector(field_, basis_.size());
    for (const auto& [k, v] : s) out[static_cast<std::size_t>(k)] += v;
    return out;
  }

  /// Same field, quiver and relations.
  bool same_presentation(const BoundAlgebra& o) const {
    return field_ == o.field_ && quiver_ == o.quiver_ && relations_ == o.relations_;
  }

 private:
  using PathKey = std::pair<int, std::vector<int>>;
  static PathKey key(const Path& p) { return {p.source, p.arrows}; }

  BoundAlgebra(Field field, Quiver quiver, std::vector<Relation> relations, int max_length)
      : field_(field), quiver_(std::move(quiver)), relations_(std::move(relations)), max_length_(max_length) {}

  friend AlgebraPtr build_algebra(const Field&, const Quiver&, const std::vector<Relation>&, int);
  friend AlgebraPtr opposite(const AlgebraPtr&);

  Field field_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  int max_length_;

  std::vector<Path> basis_;
  int nilpotency_degree_ = 1;
  std::vector<std::vector<std::vector<int>>> blocks_;
  std::vector<int> stationary_;
  std::map<PathKey, int> basis_lookup_;
  std::map<PathKey, SparseVector> normal_forms_;
  std::vector<SparseVector> products_;

  mutable std::mutex opposite_mutex_;
  mutable std::weak_ptr<const BoundAlgebra> opposite_of_;
  mutable std::shared_ptr<const BoundAlgebra> opposite_;
};

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && a->same_presentation(*b));
}

namespace detail {

inline void validate_relations(const Field& field, const Quiver& q, const std::vector<Relation>& relations) {
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const auto& rel = relations[r];
    const std::string where = "relation " + std::to_string(r + 1);
    if (rel.terms.empty()) throw AlgebraError(where + " has no terms");
    const Path& first = rel.terms.front().path;
    for (const auto& t : rel.terms) {
      if (t.coeff.field() != field) throw AlgebraError(where + ": coefficient outside " + field.to_string());
      if (t.path.length() < 2) throw AlgebraError(where + ": term of length < 2 (ideal would not be admissible)");
      if (t.path.source != first.source || t.path.target != first.target) {
        throw AlgebraError(where + ": terms are not parallel paths");
      }
      int at = t.path.source;
      for (int k : t.path.arrows) {
        if (k < 0 || k >= q.arrow_count() || q.arrow(k).source != at) {
          throw AlgebraError(where + ": term is not a path of the quiver");
        }
        at = q.arrow(k).target;
      }
      if (at != t.path.target) throw AlgebraError(where + ": path endpoints inconsistent");
    }
  }
}

// All paths grouped by length, generated on demand.
class PathLayers {
 public:
  explicit PathLayers(const Quiver& q) : q_(q) {
    std::vector<Path> zero;
    for (int v = 0; v < q.vertex_count(); ++v) zero.push_back(Path::stationary(v));
    layers_.push_back(std::move(zero));
    total_ = layers_.back().size();
  }

  const std::vector<Path>& layer(std::size_t len) {
    while (layers_.size() <= len) {
      std::vector<Path> next;
      for (const auto& p : layers_.back()) {
        for (int k : q_.arrows_from(p.target)) {
          Path e = p;
          e.arrows.push_back(k);
          e.target = q_.arrow(k).target;
          next.push_back(std::move(e));
        }
      }
      total_ += next.size();
      if (total_ > kPathBudget) {
        throw AlgebraError("not admissible / not finite-dimensional: path enumeration exceeded budget at length " +
                           std::to_string(layers_.size()));
      }
      layers_.push_back(std::move(next));
    }
    return layers_[len];
  }

 private:
  const Quiver& q_;
  std::deque<std::vector<Path>> layers_;  // stable references while growing
  std::size_t total_ = 0;
};

// Ideal elements p*r*q truncated to terms of length <= bound, grouped by (source, target).
using PairKey = std::pair<int, int>;
using PathCoeffs = std::map<std::pair<int, std::vector<int>>, Scalar>;

inline std::map<PairKey, std::vector<PathCoeffs>> ideal_elements(const std::vector<Relation>& relations,
                                                                  PathLayers& layers, std::size_t bound) {
  std::map<PairKey, std::vector<PathCoeffs>> out;
  layers.layer(bound);
  for (const auto& rel : relations) {
    std::size_t min_len = rel.terms.front().path.length();
    for (const auto& t : rel.terms) min_len = std::min(min_len, t.path.length());
    if (min_len > bound) continue;
    const int s = rel.terms.front().path.source;
    const int t = rel.terms.front().path.target;
    for (std::size_t lp = 0; lp + min_len <= bound; ++lp) {
      for (const auto& p : layers.layer(lp)) {
        if (p.target != s) continue;
        for (std::size_t lq = 0; lp + min_len + lq <= bound; ++lq) {
          for (const auto& suffix : layers.layer(lq)) {
            if (suffix.source != t) continue;
            PathCoeffs elem;
            for (const auto& term : rel.terms) {
              if (lp + term.path.length() + lq > bound) continue;
              std::vector<int> arrows = p.arrows;
              arrows.insert(arrows.end(), term.path.arrows.begin(), term.path.arrows.end());
              arrows.insert(arrows.end(), suffix.arrows.begin(), suffix.arrows.end());
              auto [it, inserted] = elem.try_emplace({p.source, std::move(arrows)}, term.coeff);
              if (!inserted) it->second += term.coeff;
            }
            std::erase_if(elem, [](const auto& kv) { return kv.second.is_zero(); });
            if (!elem.empty()) out[{p.source, suffix.target}].push_back(std::move(elem));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace detail

inline AlgebraPtr build_algebra(const Field& field, const Quiver& quiver, const std::vector<Relation>& relations,
                                int max_length) {
  if (max_length <= 0) throw AlgebraError("max_length must be positive");
  detail::validate_relations(field, quiver, relations);

  const int n = quiver.vertex_count();
  detail::PathLayers layers(quiver);
  auto descending = [&](const Path& a, const Path& b) { return path_less(quiver, b, a); };

  // Paths s -> t with length <= bound, largest first.
  auto group_paths = [&](int s, int t, std::size_t bound) {
    std::vector<Path> out;
    for (std::size_t len = 0; len <= bound; ++len) {
      for (const auto& p : layers.layer(len)) {
        if (p.source == s && p.target == t) out.push_back(p);
      }
    }
    std::sort(out.begin(), out.end(), descending);
    return out;
  };

  auto element_matrix = [&](const std::vector<detail::PathCoeffs>& elems, const std::vector<Path>& cols) {
    std::map<std::pair<int, std::vector<int>>, std::size_t> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c) col_of[{cols[c].source, cols[c].arrows}] = c;
    Matrix m(field, elems.size(), cols.size());
    for (std::size_t r = 0; r < elems.size(); ++r) {
      for (const auto& [k, v] : elems[r]) m(r, col_of.at(k)) = v;
    }
    return m;
  };

  // Least L such that every length-L path lies in I + KQ_{>L}.
  int degree = 0;
  for (int L = 1; L <= max_length && degree == 0; ++L) {
    const auto& top_layer = layers.layer(static_cast<std::size_t>(L));
    if (top_layer.empty()) {
      degree = L;
      break;
    }
    auto elems = detail::ideal_elements(relations, layers, static_cast<std::size_t>(L));
    bool all_inside = true;
    for (int s = 0; s < n && all_inside; ++s) {
      for (int t = 0; t < n && all_inside; ++t) {
        std::vector<Path> longest;
        for (const auto& p : top_layer) {
          if (p.source == s && p.target == t) longest.push_back(p);
        }
        if (longest.empty()) continue;
        auto it = elems.find({s, t});
        if (it == elems.end()) {
          all_inside = false;
          break;
        }
        auto cols = group_paths(s, t, static_cast<std::size_t>(L));
        Matrix g = element_matrix(it->second, cols);
        Matrix units(field, longest.size(), cols.size());
        for (std::size_t r = 0; r < longest.size(); ++r) {
          auto pos = std::find(cols.begin(), cols.end(), longest[r]) - cols.begin();
          units(r, static_cast<std::size_t>(pos)) = Scalar::one(field);
        }
        if (rank(g.vstack(units)) != rank(g)) all_inside = false;
      }
    }
    if (all_inside) degree = L;
  }
  if (degree == 0) {
    throw AlgebraError("not admissible / not finite-dimensional: no nilpotency degree <= " +
                       std::to_string(max_length));
  }

  std::shared_ptr<BoundAlgebra> alg(new BoundAlgebra(field, quiver, relations, max_length));
  alg->nilpotency_degree_ = degree;
  const std::size_t bound = static_cast<std::size_t>(degree - 1);
  auto elems = detail::ideal_elements(relations, layers, bound);

  // Per vertex pair: reduced echelon form with columns largest-first; the
  // non-pivot columns are the basis residues and every pivot path rewrites
  // in terms of them.
  struct Group {
    std::vector<Path> cols;
    std::vector<bool> is_basis;
    RowEchelon rref;
  };
  std::vector<std::vector<Group>> groups(static_cast<std::size_t>(n), std::vector<Group>(static_cast<std::size_t>(n)));
  alg->blocks_.assign(static_cast<std::size_t>(n), std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      Group& g = groups[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      g.cols = group_paths(s, t, bound);
      auto it = elems.find({s, t});
      Matrix m = it == elems.end() ? Matrix(field, 0, g.cols.size()) : element_matrix(it->second, g.cols);
      g.rref = row_echelon(std::move(m));
      g.is_basis.assign(g.cols.size(), true);
      for (auto c : g.rref.pivots) g.is_basis[c] = false;
    }
  }
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      Group& g = groups[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      for (std::size_t c = g.cols.size(); c-- > 0;) {
        if (!g.is_basis[c]) continue;
        int idx = static_cast<int>(alg->basis_.size());
        alg->basis_.push_back(g.cols[c]);
        alg->blocks_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)].push_back(idx);
        alg->basis_lookup_[{g.cols[c].source, g.cols[c].arrows}] = idx;
      }
    }
  }
  alg->stationary_.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) alg->stationary_[static_cast<std::size_t>(v)] = *alg->basis_index(Path::stationary(v));

  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      const Group& g = groups[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      std::vector<std::size_t> pivot_row(g.cols.size(), g.cols.size());
      for (std::size_t r = 0; r < g.rref.pivots.size(); ++r) pivot_row[g.rref.pivots[r]] = r;
      for (std::size_t c = 0; c < g.cols.size(); ++c) {
        SparseVector nf;
        if (g.is_basis[c]) {
          nf.emplace_back(*alg->basis_index(g.cols[c]), Scalar::one(field));
        } else {
          std::size_t r = pivot_row[c];
          for (std::size_t j = 0; j < g.cols.size(); ++j) {
            if (g.is_basis[j] && !g.rref.reduced(r, j).is_zero()) {
              nf.emplace_back(*alg->basis_index(g.cols[j]), -g.rref.reduced(r, j));
            }
          }
          std::sort(nf.begin(), nf.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        }
        alg->normal_forms_[{g.cols[c].source, g.cols[c].arrows}] = std::move(nf);
      }
    }
  }

  const std::size_t dim = alg->basis_.size();
  alg->products_.assign(dim * dim, {});
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      auto joined = compose(alg->basis_[i], alg->basis_[j]);
      if (joined) alg->products_[i * dim + j] = alg->normal_form_sparse(*joined);
    }
  }
  return alg;
}

/// The algebra of the opposite quiver with reversed relations. Cached, and
/// opposite(opposite(a)) returns `a` itself while `a` is alive.
inline AlgebraPtr opposite(const AlgebraPtr& algebra) {
  std::lock_guard lock(algebra->opposite_mutex_);
  if (auto back = algebra->opposite_of_.lock()) return back;
  if (algebra->opposite_) return algebra->opposite_;
  std::vector<Relation> rels;
  rels.reserve(algebra->relations().size());
  for (const auto& r : algebra->relations()) rels.push_back(reversed(r));
  auto op = build_algebra(algebra->field(), algebra->quiver().opposite(), rels, algebra->max_length());
  op->opposite_of_ = algebra;
  algebra->opposite_ = op;
  return op;
}

struct AdmissibilityReport {
  int nilpotency_degree = 0;
  int dimension = 0;
  std::vector<std::vector<int>> pair_counts;  // [source][target]
  std::vector<int> relation_min_lengths;
  bool relations_in_radical_squared = true;
  bool relations_vanish = true;
};

inline AdmissibilityReport admissibility_report(const BoundAlgebra& a) {
  AdmissibilityReport rep;
  rep.nilpotency_degree = a.nilpotency_degree();
  rep.dimension = a.dimension();
  const int n = a.vertex_count();
  rep.pair_counts.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      rep.pair_counts[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
          static_cast<int>(a.basis_between(s, t).size());
    }
  }
  for (const auto& r : a.relations()) {
    std::size_t min_len = r.terms.front().path.length();
    Vector value = zero_vector(a.field(), static_cast<std::size_t>(a.dimension()));
    for (const auto& t : r.terms) {
      min_len = std::min(min_len, t.path.length());
      for (const auto& [k, v] : a.normal_form_sparse(t.path)) value[static_cast<std::size_t>(k)] += t.coeff * v;
    }
    rep.relation_min_lengths.push_back(static_cast<int>(min_len));
    if (min_len < 2) rep.relations_in_radical_squared = false;
    for (const auto& x : value) {
      if (!x.is_zero()) rep.relations_vanish = false;
    }
  }
  return rep;
}

/// T(H) = H + D(H) as a structure-constant table. Basis: (b_i, 0) for
/// i < dim H, then the dual basis (0, b_i^*).
class TrivialExtension {
 public:
  explicit TrivialExtension(const BoundAlgebra& h) : field_(h.field()), half_(h.dimension()) {
    const std::size_t d = static_cast<std::size_t>(half_);
    const std::size_t dim = 2 * d;
    table_.assign(dim * dim, {});
    auto coeff = [&](int i, int j, int k) {  // coefficient of b_k in b_i b_j
      for (const auto& [idx, v] : h.product(i, j)) {
        if (idx == k) return v;
      }
      return Scalar::zero(field_);
    };
    for (int i = 0; i < half_; ++i) {
      for (int j = 0; j < half_; ++j) {
        table_[static_cast<std::size_t>(i) * dim + static_cast<std::size_t>(j)] = h.product(i, j);
        // (b_i, 0)(0, b_j^*) = (0, b_i . b_j^*), (b_i . b_j^*)(x) = b_j^*(x b_i)
        SparseVector left;
        // (0, b_i^*)(b_j, 0) = (0, b_i^* . b_j), (b_i^* . b_j)(x) = b_i^*(b_j x)
        SparseVector right;
        for (int k = 0; k < half_; ++k) {
          Scalar l = coeff(k, i, j);
          if (!l.is_zero()) left.emplace_back(half_ + k, l);
          Scalar r = coeff(j, k, i);
          if (!r.is_zero()) right.emplace_back(half_ + k, r);
        }
        table_[static_cast<std::size_t>(i) * dim + d + static_cast<std::size_t>(j)] = std::move(left);
        table_[(d + static_cast<std::size_t>(i)) * dim + static_cast<std::size_t>(j)] = std::move(right);
      }
    }
    for (int v = 0; v < h.vertex_count(); ++v) units_.push_back(h.stationary(v));
  }

  const Field& field() const { return field_; }
  int dimension() const { return 2 * half_; }

  const SparseVector& product(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dimension()) + static_cast<std::size_t>(j)];
  }

  Vector multiply(const Vector& x, const Vector& y) const {
    Vector out = zero_vector(field_, static_cast<std::size_t>(dimension()));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_zero()) continue;
        Scalar c = x[i] * y[j];
        for (const auto& [k, v] : product(static_cast<int>(i), static_cast<int>(j))) {
          out[static_cast<std::size_t>(k)] += c * v;
        }
      }
    }
    return out;
  }

  /// ((a,f),(b,g)) -> f(b) + g(a), evaluated as lambda(x y) with
  /// lambda(a, f) = f(1), so the table's bimodule actions are exercised.
  Matrix symmetric_form() const {
    const std::size_t dim = static_cast<std::size_t>(dimension());
    Matrix m(field_, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        for (const auto& [k, v] : product(static_cast<int>(i), static_cast<int>(j))) {
          if (k >= half_ && std::find(units_.begin(), units_.end(), k - half_) != units_.end()) m(i, j) += v;
        }
      }
    }
    return m;
  }

 private:
  Field field_;
  int half_;
  std::vector<SparseVector> table_;
  std::vector<int> units_;
};

inline TrivialExtension trivial_extension(const BoundAlgebra& h) { return TrivialExtension(h); }

}  // namespace qrep
