// Minimal projective presentations, the transpose Tr, and the
// Auslander-Reiten translates tau = D Tr and tau^- = Tr D.
//
// Tr is computed at the level of algebra elements: the presentation map
// P1 -> P0 is a matrix with entries a_{s,g} in e_{i_s} A e_{j_g}, and
// Hom(-, A) turns it into left multiplication between the left projectives
// A e_i, i.e. a map of right A^op-modules whose cokernel is Tr M.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qrep/hom.hpp"

namespace qrep {

/// Rectangular matrix of algebra elements. Entry (s, g) lies in
/// e_{row_vertices[s]} A e_{col_vertices[g]}.
struct AlgebraMatrix {
  AlgebraPtr algebra;
  std::vector<int> row_vertices;
  std::vector<int> col_vertices;
  std::vector<std::vector<Vector>> entries;  // [row][col], basis coordinates

  const Vector& at(std::size_t s, std::size_t g) const { return entries.at(s).at(g); }

  bool well_typed() const {
    for (std::size_t s = 0; s < row_vertices.size(); ++s) {
      for (std::size_t g = 0; g < col_vertices.size(); ++g) {
        const auto& allowed = algebra->basis_between(row_vertices[s], col_vertices[g]);
        const Vector& e = at(s, g);
        for (std::size_t k = 0; k < e.size(); ++k) {
          if (!e[k].is_zero() && std::find(allowed.begin(), allowed.end(), static_cast<int>(k)) == allowed.end()) {
            return false;
          }
        }
      }
    }
    return true;
  }
};

struct Presentation {
  Representation target;
  FreeModule p0;
  FreeModule p1;
  Morphism cover;      // p0 -> target
  Morphism map;        // p1 -> p0
  AlgebraMatrix matrix;
  Representation kernel;  // Omega(target), embedded in p0 as image of map
  bool minimal = false;   // top(p1) == top(kernel)
};

/// P1 -> P0 -> M -> 0 from two projective covers.
inline Presentation minimal_presentation(const Representation& m) {
  Syzygy first = syzygy(m);
  Syzygy second = syzygy(first.kernel);
  Morphism d = compose(first.inclusion, second.surjection);

  const AlgebraPtr& a = m.algebra();
  AlgebraMatrix am{a, first.cover.summands, second.cover.summands, {}};
  // Column g: the image of the generator of P1's summand g, read off P0
  // at vertex j_g block by block.
  const std::size_t dim = static_cast<std::size_t>(a->dimension());
  am.entries.assign(am.row_vertices.size(), std::vector<Vector>(am.col_vertices.size(), zero_vector(a->field(), dim)));
  for (std::size_t g = 0; g < am.col_vertices.size(); ++g) {
    const int j = am.col_vertices[g];
    const std::size_t gen_col = second.cover.offset[static_cast<std::size_t>(j)][g];  // e_j of summand g
    Vector image = d.at(j).column(gen_col);
    for (std::size_t s = 0; s < am.row_vertices.size(); ++s) {
      const auto& paths = a->basis_between(am.row_vertices[s], j);
      const std::size_t off = first.cover.offset[static_cast<std::size_t>(j)][s];
      for (std::size_t p = 0; p < paths.size(); ++p) am.entries[s][g][static_cast<std::size_t>(paths[p])] = image[off + p];
    }
  }

  bool minimal = top(second.cover.module) == top(first.kernel);
  return {m,       std::move(first.cover), std::move(second.cover), std::move(first.surjection), std::move(d),
          std::move(am), std::move(first.kernel), minimal};
}

namespace detail {

// Left projective A e_i as a representation of the opposite quiver: at v the
// residues of paths v -> i; the reversed arrow a acts by u -> a u.
struct LeftFree {
  std::vector<int> summands;
  std::vector<std::vector<std::size_t>> offset;  // [vertex][summand]
  std::vector<int> dims;
};

inline LeftFree left_free(const BoundAlgebra& a, const std::vector<int>& summands) {
  LeftFree f{summands, {}, {}};
  for (int v = 0; v < a.vertex_count(); ++v) {
    std::vector<std::size_t> offs;
    std::size_t at = 0;
    for (int s : summands) {
      offs.push_back(at);
      at += a.basis_between(v, s).size();
    }
    f.offset.push_back(std::move(offs));
    f.dims.push_back(static_cast<int>(at));
  }
  return f;
}

inline std::vector<Matrix> left_free_action(const BoundAlgebra& a, const LeftFree& f) {
  const Quiver& q = a.quiver();
  std::vector<Matrix> mats;
  for (int k = 0; k < q.arrow_count(); ++k) {
    const Arrow& arr = q.arrow(k);
    // Opposite arrow runs arr.target -> arr.source.
    Matrix m(a.field(), static_cast<std::size_t>(f.dims[static_cast<std::size_t>(arr.source)]),
             static_cast<std::size_t>(f.dims[static_cast<std::size_t>(arr.target)]));
    for (std::size_t g = 0; g < f.summands.size(); ++g) {
      const auto& from = a.basis_between(arr.target, f.summands[g]);
      const auto& to = a.basis_between(arr.source, f.summands[g]);
      for (std::size_t c = 0; c < from.size(); ++c) {
        auto joined = compose(Path::of_arrow(q, k), a.basis_path(from[c]));
        for (const auto& [idx, val] : a.normal_form_sparse(*joined)) {
          auto pos = static_cast<std::size_t>(std::find(to.begin(), to.end(), idx) - to.begin());
          m(f.offset[static_cast<std::size_t>(arr.source)][g] + pos,
            f.offset[static_cast<std::size_t>(arr.target)][g] + c) += val;
        }
      }
    }
    mats.push_back(std::move(m));
  }
  return mats;
}

}  // namespace detail

/// Tr M over the opposite algebra: the cokernel of
/// Hom(P0, A) -> Hom(P1, A), (u_s) -> (sum_s u_s a_{s,g})_g.
inline Representation transpose(const Presentation& pres) {
  const AlgebraMatrix& am = pres.matrix;
  const BoundAlgebra& a = *am.algebra;
  AlgebraPtr op = opposite(am.algebra);
  detail::LeftFree src = detail::left_free(a, am.row_vertices);
  detail::LeftFree dst = detail::left_free(a, am.col_vertices);
  Representation target(op, dst.dims, detail::left_free_action(a, dst));
  if (am.row_vertices.empty() || am.col_vertices.empty()) {
    // Nothing to divide out (p0 = 0 or p1 = 0).
    return target;
  }

  std::vector<Matrix> images;
  for (int v = 0; v < a.vertex_count(); ++v) {
    Matrix d(a.field(), static_cast<std::size_t>(dst.dims[static_cast<std::size_t>(v)]),
             static_cast<std::size_t>(src.dims[static_cast<std::size_t>(v)]));
    for (std::size_t s = 0; s < am.row_vertices.size(); ++s) {
      const auto& us = a.basis_between(v, am.row_vertices[s]);
      for (std::size_t c = 0; c < us.size(); ++c) {
        Vector u = zero_vector(a.field(), static_cast<std::size_t>(a.dimension()));
        u[static_cast<std::size_t>(us[c])] = Scalar::one(a.field());
        for (std::size_t g = 0; g < am.col_vertices.size(); ++g) {
          Vector prod = a.multiply(u, am.at(s, g));
          const auto& out = a.basis_between(v, am.col_vertices[g]);
          for (std::size_t r = 0; r < out.size(); ++r) {
            d(dst.offset[static_cast<std::size_t>(v)][g] + r, src.offset[static_cast<std::size_t>(v)][s] + c) =
                prod[static_cast<std::size_t>(out[r])];
          }
        }
      }
    }
    images.push_back(column_space(d));
  }
  return quotient(Subspace(target, std::move(images))).module;
}

inline Representation transpose(const Representation& m) { return transpose(minimal_presentation(m)); }

/// tau M = D Tr M, over M's own algebra object.
inline Representation tau(const Representation& m) { return dual(transpose(m)).rebind(m.algebra()); }

/// tau^- M = Tr D M.
inline Representation tau_minus(const Representation& m) { return transpose(dual(m)).rebind(m.algebra()); }

struct FormulaReport {
  enum class Status { holds, fails, hypothesis_violated };
  std::string which = "i";  // "i" or "ii"
  Status status = Status::holds;
  // (i):  Hom(X,M), Hom(M,tau X), Hom(X,N), Hom(N,tau X)
  // (ii): Hom(M,X), Hom(tau^- X,M), Hom(N,X), Hom(tau^- X,N)
  int m_first = 0;
  int m_second = 0;
  int n_first = 0;
  int n_second = 0;
  int lhs = 0;
  int rhs = 0;
  bool m_brick = false;
  bool n_brick = false;
  std::string note;

  bool holds() const { return status == Status::holds; }
};

inline std::string to_string(FormulaReport::Status s) {
  switch (s) {
    case FormulaReport::Status::holds:
      return "holds";
    case FormulaReport::Status::fails:
      return "fails";
    case FormulaReport::Status::hypothesis_violated:
      return "hypothesis_violated";
  }
  return "?";
}

namespace detail {

inline FormulaReport formula_frame(const std::string& which, const Representation& m, const Representation& n) {
  FormulaReport r;
  r.which = which;
  if (dim_vector(m) != dim_vector(n)) {
    r.status = FormulaReport::Status::hypothesis_violated;
    r.note = "hypothesis [M]=[N] fails: " + dim_vector(m).to_string() + " vs " + dim_vector(n).to_string();
  }
  // Indecomposability is recorded, not required.
  r.m_brick = !m.is_zero() && is_brick(m);
  r.n_brick = !n.is_zero() && is_brick(n);
  return r;
}

inline void settle(FormulaReport& r) {
  if (r.status == FormulaReport::Status::hypothesis_violated) return;
  r.status = r.lhs == r.rhs ? FormulaReport::Status::holds : FormulaReport::Status::fails;
}

}  // namespace detail

/// |Hom(X,M)| - |Hom(M,tau X)| = |Hom(X,N)| - |Hom(N,tau X)|, given tau X.
inline FormulaReport check_formula_i(const Representation& x, const Representation& tau_x, const Representation& m,
                                     const Representation& n) {
  FormulaReport r = detail::formula_frame("i", m, n);
  if (r.status == FormulaReport::Status::hypothesis_violated) return r;
  r.m_first = hom_dim(x, m);
  r.m_second = hom_dim(m, tau_x);
  r.n_first = hom_dim(x, n);
  r.n_second = hom_dim(n, tau_x);
  r.lhs = r.m_first - r.m_second;
  r.rhs = r.n_first - r.n_second;
  detail::settle(r);
  return r;
}

inline FormulaReport check_formula_i(const Representation& x, const Representation& m, const Representation& n) {
  return check_formula_i(x, tau(x), m, n);
}

/// |Hom(M,X)| - |Hom(tau^- X,M)| = |Hom(N,X)| - |Hom(tau^- X,N)|, given tau^- X.
inline FormulaReport check_formula_ii(const Representation& x, const Representation& tau_minus_x,
                                      const Representation& m, const Representation& n) {
  FormulaReport r = detail::formula_frame("ii", m, n);
  if (r.status == FormulaReport::Status::hypothesis_violated) return r;
  r.m_first = hom_dim(m, x);
  r.m_second = hom_dim(tau_minus_x, m);
  r.n_first = hom_dim(n, x);
  r.n_second = hom_dim(tau_minus_x, n);
  r.lhs = r.m_first - r.m_second;
  r.rhs = r.n_first - r.n_second;
  detail::settle(r);
  return r;
}

inline FormulaReport check_formula_ii(const Representation& x, const Representation& m, const Representation& n) {
  return check_formula_ii(x, tau_minus(x), m, n);
}

}  // namespace qrep
