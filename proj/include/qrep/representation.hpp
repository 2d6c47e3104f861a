// Finite-dimensional right modules over a bound quiver algebra, given as
// vertex spaces and arrow matrices. The matrix of arrow a has shape
// dims[target(a)] x dims[source(a)], and a path [a, b] acts as M_b * M_a.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrep/algebra.hpp"
#include "qrep/matrix.hpp"

namespace qrep {

/// Class in the Grothendieck group: composition multiplicities per vertex.
struct DimVector {
  std::vector<int> entries;

  DimVector() = default;
  explicit DimVector(std::vector<int> e) : entries(std::move(e)) {}
  DimVector(std::initializer_list<int> e) : entries(e) {}

  std::size_t size() const { return entries.size(); }
  int operator[](std::size_t i) const { return entries.at(i); }
  int total() const { return std::accumulate(entries.begin(), entries.end(), 0); }

  friend DimVector operator+(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension vector length mismatch");
    DimVector out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out.entries[i] += b.entries[i];
    return out;
  }
  friend DimVector operator-(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension vector length mismatch");
    DimVector out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out.entries[i] -= b.entries[i];
    return out;
  }
  bool operator==(const DimVector&) const = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i > 0) s += ",";
      s += std::to_string(entries[i]);
    }
    return s + ")";
  }
};

class Representation {
 public:
  Representation(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix> matrices)
      : data_(std::make_shared<Data>(Data{std::move(algebra), std::move(dims), std::move(matrices)})) {
    const auto& alg = data_->algebra;
    if (!alg) throw std::invalid_argument("representation without an algebra");
    const Quiver& q = alg->quiver();
    if (static_cast<int>(data_->dims.size()) != q.vertex_count()) {
      throw std::invalid_argument("dims has " + std::to_string(data_->dims.size()) + " entries, quiver has " +
                                  std::to_string(q.vertex_count()) + " vertices");
    }
    for (int d : data_->dims) {
      if (d < 0) throw std::invalid_argument("negative vertex dimension");
    }
    if (static_cast<int>(data_->matrices.size()) != q.arrow_count()) {
      throw std::invalid_argument("expected one matrix per arrow");
    }
    for (int k = 0; k < q.arrow_count(); ++k) {
      const Arrow& a = q.arrow(k);
      const Matrix& m = data_->matrices[static_cast<std::size_t>(k)];
      if (m.rows() != static_cast<std::size_t>(dim(a.target)) || m.cols() != static_cast<std::size_t>(dim(a.source))) {
        throw std::invalid_argument("matrix of arrow '" + a.name + "' is " + m.shape() + ", expected " +
                                    std::to_string(dim(a.target)) + "x" + std::to_string(dim(a.source)));
      }
      if (m.field() != alg->field()) throw std::invalid_argument("matrix of arrow '" + a.name + "' in wrong field");
    }
  }

  static Representation zero(const AlgebraPtr& algebra) {
    return with_zero_maps(algebra, std::vector<int>(static_cast<std::size_t>(algebra->vertex_count()), 0));
  }

  static Representation with_zero_maps(const AlgebraPtr& algebra, std::vector<int> dims) {
    std::vector<Matrix> mats;
    for (const auto& a : algebra->quiver().arrows()) {
      mats.emplace_back(algebra->field(), static_cast<std::size_t>(dims.at(static_cast<std::size_t>(a.target))),
                        static_cast<std::size_t>(dims.at(static_cast<std::size_t>(a.source))));
    }
    return Representation(algebra, std::move(dims), std::move(mats));
  }

  /// Matrices keyed by arrow name; omitted arrows act as zero.
  static Representation from_named(const AlgebraPtr& algebra, std::vector<int> dims,
                                   const std::map<std::string, Matrix>& named) {
    Representation z = with_zero_maps(algebra, dims);
    std::vector<Matrix> mats = z.data_->matrices;
    for (const auto& [name, m] : named) {
      auto k = algebra->quiver().arrow_index(name);
      if (!k) throw std::invalid_argument("unknown arrow '" + name + "'");
      mats[static_cast<std::size_t>(*k)] = m;
    }
    return Representation(algebra, std::move(dims), std::move(mats));
  }

  const AlgebraPtr& algebra() const { return data_->algebra; }
  const Field& field() const { return data_->algebra->field(); }
  const std::vector<int>& dims() const { return data_->dims; }
  int dim(int v) const { return data_->dims.at(static_cast<std::size_t>(v)); }
  int total_dimension() const { return std::accumulate(dims().begin(), dims().end(), 0); }
  bool is_zero() const { return total_dimension() == 0; }
  int vertex_count() const { return static_cast<int>(dims().size()); }

  const std::vector<Matrix>& matrices() const { return data_->matrices; }
  const Matrix& matrix(int arrow) const { return data_->matrices.at(static_cast<std::size_t>(arrow)); }
  const Matrix& matrix(const std::string& name) const {
    auto k = algebra()->quiver().arrow_index(name);
    if (!k) throw std::invalid_argument("unknown arrow '" + name + "'");
    return matrix(*k);
  }

  /// Action of a path: M_{a_k} * ... * M_{a_1}.
  Matrix path_matrix(const Path& p) const {
    Matrix m = Matrix::identity(field(), static_cast<std::size_t>(dim(p.source)));
    for (int k : p.arrows) m = matrix(k) * m;
    return m;
  }

  /// Same data over a structurally identical algebra object.
  Representation rebind(const AlgebraPtr& other) const {
    if (!same_algebra(algebra(), other)) throw std::invalid_argument("rebind: algebras differ");
    return Representation(other, dims(), matrices());
  }

  friend bool operator==(const Representation& a, const Representation& b) {
    return same_algebra(a.algebra(), b.algebra()) && a.dims() == b.dims() && a.matrices() == b.matrices();
  }

 private:
  struct Data {
    AlgebraPtr algebra;
    std::vector<int> dims;
    std::vector<Matrix> matrices;
  };
  std::shared_ptr<const Data> data_;
};

inline DimVector dim_vector(const Representation& r) { return DimVector(r.dims()); }

struct RelationViolation {
  int relation = 0;  // index into algebra().relations()
  Matrix value;      // the nonzero evaluation
};

struct ValidationReport {
  std::vector<RelationViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Evaluates every relation on the representation. Shapes were checked at
/// construction.
inline ValidationReport validate(const Representation& r) {
  ValidationReport report;
  const auto& rels = r.algebra()->relations();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const Path& first = rels[i].terms.front().path;
    Matrix value(r.field(), static_cast<std::size_t>(r.dim(first.target)), static_cast<std::size_t>(r.dim(first.source)));
    for (const auto& t : rels[i].terms) value = value + r.path_matrix(t.path).scaled(t.coeff);
    if (!value.is_zero()) report.violations.push_back({static_cast<int>(i), value});
  }
  return report;
}

/// Invariant subspace: per-vertex column bases.
class Subspace {
 public:
  Subspace(Representation ambient, std::vector<Matrix> basis) : ambient_(std::move(ambient)), basis_(std::move(basis)) {
    const Quiver& q = ambient_.algebra()->quiver();
    if (static_cast<int>(basis_.size()) != q.vertex_count()) throw std::invalid_argument("subspace: one basis per vertex");
    for (int v = 0; v < q.vertex_count(); ++v) {
      const Matrix& b = basis_[static_cast<std::size_t>(v)];
      if (b.rows() != static_cast<std::size_t>(ambient_.dim(v))) throw std::invalid_argument("subspace: basis shape");
      if (rank(b) != b.cols()) throw std::invalid_argument("subspace: basis columns are dependent");
    }
    for (int k = 0; k < q.arrow_count(); ++k) {
      const Arrow& a = q.arrow(k);
      Matrix image = ambient_.matrix(k) * basis_[static_cast<std::size_t>(a.source)];
      const Matrix& target = basis_[static_cast<std::size_t>(a.target)];
      if (rank(target.hstack(image)) != target.cols()) {
        throw std::invalid_argument("subspace not closed under arrow '" + a.name + "'");
      }
    }
  }

  const Representation& ambient() const { return ambient_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  const Matrix& basis(int v) const { return basis_.at(static_cast<std::size_t>(v)); }

  DimVector dims() const {
    std::vector<int> d;
    for (const auto& b : basis_) d.push_back(static_cast<int>(b.cols()));
    return DimVector(std::move(d));
  }

  /// The subspace as a representation in its own basis.
  Representation as_module() const {
    const Quiver& q = ambient_.algebra()->quiver();
    std::vector<Matrix> mats;
    for (int k = 0; k < q.arrow_count(); ++k) {
      const Arrow& a = q.arrow(k);
      const Matrix& src = basis_[static_cast<std::size_t>(a.source)];
      const Matrix& dst = basis_[static_cast<std::size_t>(a.target)];
      Matrix image = ambient_.matrix(k) * src;
      Matrix m(ambient_.field(), dst.cols(), src.cols());
      for (std::size_t c = 0; c < src.cols(); ++c) {
        auto x = solve(dst, image.column(c));
        if (!x) throw std::logic_error("subspace lost closure");
        for (std::size_t r = 0; r < dst.cols(); ++r) m(r, c) = (*x)[r];
      }
      mats.push_back(std::move(m));
    }
    return Representation(ambient_.algebra(), dims().entries, std::move(mats));
  }

 private:
  Representation ambient_;
  std::vector<Matrix> basis_;
};

struct Quotient {
  Representation module;
  std::vector<Matrix> projection;  // per vertex: ambient -> quotient coordinates
};

/// Ambient / sub, with the quotient basis given by standard vectors that
/// complete the subspace basis.
inline Quotient quotient(const Subspace& sub) {
  const Representation& amb = sub.ambient();
  const Quiver& q = amb.algebra()->quiver();
  std::vector<Matrix> complements;
  std::vector<Matrix> projections;
  std::vector<int> dims;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const Matrix& b = sub.basis(v);
    Matrix comp = complement_basis(b);
    // Coordinates in [b | comp] are the inverse; keep the complement rows.
    Matrix full = b.hstack(comp);
    Matrix inv = *invert(full);
    projections.push_back(inv.block(b.cols(), 0, comp.cols(), inv.cols()));
    dims.push_back(static_cast<int>(comp.cols()));
    complements.push_back(std::move(comp));
  }
  std::vector<Matrix> mats;
  for (int k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    mats.push_back(projections[static_cast<std::size_t>(a.target)] * amb.matrix(k) *
                   complements[static_cast<std::size_t>(a.source)]);
  }
  return {Representation(amb.algebra(), std::move(dims), std::move(mats)), std::move(projections)};
}

inline Representation simple(const AlgebraPtr& a, int vertex) {
  if (vertex < 0 || vertex >= a->vertex_count()) throw std::out_of_range("vertex out of range");
  std::vector<int> dims(static_cast<std::size_t>(a->vertex_count()), 0);
  dims[static_cast<std::size_t>(vertex)] = 1;
  return Representation::with_zero_maps(a, std::move(dims));
}

/// e_i A: basis residues of paths starting at i; arrows act by
/// post-composition.
inline Representation projective(const AlgebraPtr& a, int vertex) {
  if (vertex < 0 || vertex >= a->vertex_count()) throw std::out_of_range("vertex out of range");
  const Quiver& q = a->quiver();
  std::vector<int> dims;
  for (int v = 0; v < q.vertex_count(); ++v) dims.push_back(static_cast<int>(a->basis_between(vertex, v).size()));
  std::vector<Matrix> mats;
  for (int k = 0; k < q.arrow_count(); ++k) {
    const Arrow& arr = q.arrow(k);
    const auto& src = a->basis_between(vertex, arr.source);
    const auto& dst = a->basis_between(vertex, arr.target);
    Matrix m(a->field(), dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      auto extended = compose(a->basis_path(src[c]), Path::of_arrow(q, k));
      for (const auto& [idx, val] : a->normal_form_sparse(*extended)) {
        auto pos = std::find(dst.begin(), dst.end(), idx);
        m(static_cast<std::size_t>(pos - dst.begin()), c) += val;
      }
    }
    mats.push_back(std::move(m));
  }
  return Representation(a, std::move(dims), std::move(mats));
}

/// Transposed matrices over the opposite algebra.
inline Representation dual(const Representation& r) {
  std::vector<Matrix> mats;
  for (const auto& m : r.matrices()) mats.push_back(m.transpose());
  return Representation(opposite(r.algebra()), r.dims(), std::move(mats));
}

/// I_i = D(A e_i), realised as the dual of the opposite algebra's projective at i.
inline Representation injective(const AlgebraPtr& a, int vertex) {
  return dual(projective(opposite(a), vertex)).rebind(a);
}

inline Representation direct_sum(const Representation& r, const Representation& s) {
  if (!same_algebra(r.algebra(), s.algebra())) throw std::invalid_argument("direct_sum: algebra mismatch");
  const Quiver& q = r.algebra()->quiver();
  std::vector<int> dims;
  for (int v = 0; v < q.vertex_count(); ++v) dims.push_back(r.dim(v) + s.dim(v));
  std::vector<Matrix> mats;
  for (int k = 0; k < q.arrow_count(); ++k) {
    const Matrix& a = r.matrix(k);
    const Matrix& b = s.matrix(k);
    Matrix m(r.field(), a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    mats.push_back(std::move(m));
  }
  return Representation(r.algebra(), std::move(dims), std::move(mats));
}

/// rad M: at each vertex, the span of the images of the arrows ending there.
inline Subspace radical(const Representation& r) {
  const Quiver& q = r.algebra()->quiver();
  std::vector<Matrix> basis;
  for (int v = 0; v < q.vertex_count(); ++v) {
    Matrix images(r.field(), static_cast<std::size_t>(r.dim(v)), 0);
    for (int k : q.arrows_into(v)) images = images.hstack(r.matrix(k));
    basis.push_back(column_space(images));
  }
  return Subspace(r, std::move(basis));
}

/// soc M: at each vertex, the common kernel of the arrows leaving it.
inline Subspace socle_subspace(const Representation& r) {
  const Quiver& q = r.algebra()->quiver();
  std::vector<Matrix> basis;
  for (int v = 0; v < q.vertex_count(); ++v) {
    Matrix stacked(r.field(), 0, static_cast<std::size_t>(r.dim(v)));
    for (int k : q.arrows_from(v)) stacked = stacked.vstack(r.matrix(k));
    basis.push_back(Matrix::from_columns(r.field(), static_cast<std::size_t>(r.dim(v)), nullspace_basis(stacked)));
  }
  return Subspace(r, std::move(basis));
}

inline DimVector top(const Representation& r) { return dim_vector(r) - radical(r).dims(); }
inline DimVector socle(const Representation& r) { return socle_subspace(r).dims(); }

/// Moves a representation along arrow names to another algebra on the same
/// vertices, e.g. from H to a trivial extension. Arrows missing in `r`'s
/// algebra act as zero; arrows missing in the target must act as zero in `r`.
inline Representation inflate(const Representation& r, const AlgebraPtr& target) {
  if (target->vertex_count() != r.vertex_count()) throw std::invalid_argument("inflate: vertex count differs");
  if (target->field() != r.field()) throw std::invalid_argument("inflate: field differs");
  std::map<std::string, Matrix> named;
  const Quiver& q = r.algebra()->quiver();
  for (int k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    auto tk = target->quiver().arrow_index(a.name);
    if (!tk) {
      if (!r.matrix(k).is_zero()) throw std::invalid_argument("inflate: arrow '" + a.name + "' missing in target");
      continue;
    }
    const Arrow& ta = target->quiver().arrow(*tk);
    if (ta.source != a.source || ta.target != a.target) {
      throw std::invalid_argument("inflate: arrow '" + a.name + "' has different endpoints");
    }
    named.emplace(a.name, r.matrix(k));
  }
  return Representation::from_named(target, r.dims(), named);
}

}  // namespace qrep
