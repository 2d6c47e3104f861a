// Homomorphism spaces, bricks, isomorphism certificates, syzygies and Ext^1.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrep/representation.hpp"

namespace qrep {

/// Per-vertex linear maps f_v : M_v -> N_v.
struct Morphism {
  Representation source;
  Representation target;
  std::vector<Matrix> components;

  const Matrix& at(int v) const { return components.at(static_cast<std::size_t>(v)); }

  /// f_{t(a)} M_a == N_a f_{s(a)} for every arrow a.
  bool is_homomorphism() const {
    const Quiver& q = source.algebra()->quiver();
    for (int k = 0; k < q.arrow_count(); ++k) {
      const Arrow& a = q.arrow(k);
      if (at(a.target) * source.matrix(k) != target.matrix(k) * at(a.source)) return false;
    }
    return true;
  }

  bool is_zero() const {
    for (const auto& c : components) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  /// Every component square and invertible.
  bool is_invertible() const {
    for (const auto& c : components) {
      if (!invert(c)) return false;
    }
    return true;
  }

  static Morphism identity(const Representation& m) {
    std::vector<Matrix> comps;
    for (int d : m.dims()) comps.push_back(Matrix::identity(m.field(), static_cast<std::size_t>(d)));
    return {m, m, std::move(comps)};
  }
};

/// g after f.
inline Morphism compose(const Morphism& g, const Morphism& f) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < f.components.size(); ++v) comps.push_back(g.components[v] * f.components[v]);
  return {f.source, g.target, std::move(comps)};
}

/// Componentwise inverse; nullopt unless every component is invertible.
inline std::optional<Morphism> inverse(const Morphism& f) {
  std::vector<Matrix> comps;
  for (const auto& c : f.components) {
    auto inv = invert(c);
    if (!inv) return std::nullopt;
    comps.push_back(std::move(*inv));
  }
  return Morphism{f.target, f.source, std::move(comps)};
}

namespace detail {

// Unknowns are the entries of f_v, vertex by vertex, row-major.
struct HomLayout {
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
};

inline HomLayout hom_layout(const Representation& m, const Representation& n) {
  HomLayout l;
  for (int v = 0; v < m.vertex_count(); ++v) {
    l.offset.push_back(l.unknowns);
    l.unknowns += static_cast<std::size_t>(n.dim(v)) * static_cast<std::size_t>(m.dim(v));
  }
  return l;
}

inline Matrix intertwiner_system(const Representation& m, const Representation& n, const HomLayout& layout) {
  const Quiver& q = m.algebra()->quiver();
  std::size_t equations = 0;
  for (const auto& a : q.arrows()) {
    equations += static_cast<std::size_t>(n.dim(a.target)) * static_cast<std::size_t>(m.dim(a.source));
  }
  Matrix sys(m.field(), equations, layout.unknowns);
  std::size_t row = 0;
  for (int k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    const std::size_t dm_s = static_cast<std::size_t>(m.dim(a.source));
    const std::size_t dm_t = static_cast<std::size_t>(m.dim(a.target));
    const std::size_t dn_s = static_cast<std::size_t>(n.dim(a.source));
    const std::size_t dn_t = static_cast<std::size_t>(n.dim(a.target));
    const Matrix& ma = m.matrix(k);
    const Matrix& na = n.matrix(k);
    const std::size_t off_s = layout.offset[static_cast<std::size_t>(a.source)];
    const std::size_t off_t = layout.offset[static_cast<std::size_t>(a.target)];
    // (f_t M_a - N_a f_s)[r][c]
    for (std::size_t r = 0; r < dn_t; ++r) {
      for (std::size_t c = 0; c < dm_s; ++c, ++row) {
        for (std::size_t j = 0; j < dm_t; ++j) {
          if (!ma(j, c).is_zero()) sys(row, off_t + r * dm_t + j) += ma(j, c);
        }
        for (std::size_t j = 0; j < dn_s; ++j) {
          if (!na(r, j).is_zero()) sys(row, off_s + j * dm_s + c) -= na(r, j);
        }
      }
    }
  }
  return sys;
}

inline Morphism unflatten(const Representation& m, const Representation& n, const HomLayout& layout, const Vector& x) {
  std::vector<Matrix> comps;
  for (int v = 0; v < m.vertex_count(); ++v) {
    const std::size_t rows = static_cast<std::size_t>(n.dim(v));
    const std::size_t cols = static_cast<std::size_t>(m.dim(v));
    Matrix f(m.field(), rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) f(r, c) = x[layout.offset[static_cast<std::size_t>(v)] + r * cols + c];
    }
    comps.push_back(std::move(f));
  }
  return {m, n, std::move(comps)};
}

inline void require_same_algebra(const Representation& m, const Representation& n, const char* what) {
  if (!same_algebra(m.algebra(), n.algebra())) throw std::invalid_argument(std::string(what) + ": algebra mismatch");
}

}  // namespace detail

/// Basis of Hom(M, N): the solution space of the intertwiner equations.
inline std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
  detail::require_same_algebra(m, n, "hom_basis");
  auto layout = detail::hom_layout(m, n);
  std::vector<Morphism> out;
  for (const auto& x : nullspace_basis(detail::intertwiner_system(m, n, layout))) {
    out.push_back(detail::unflatten(m, n, layout, x));
  }
  return out;
}

inline int hom_dim(const Representation& m, const Representation& n) {
  detail::require_same_algebra(m, n, "hom_dim");
  auto layout = detail::hom_layout(m, n);
  Matrix sys = detail::intertwiner_system(m, n, layout);
  return static_cast<int>(sys.cols() - rank(sys));
}

inline bool is_brick(const Representation& m) {
  if (m.is_zero()) throw std::invalid_argument("is_brick: zero module");
  return hom_dim(m, m) == 1;
}

struct IsoVerdict {
  enum class Kind { iso, not_iso, undetermined };
  Kind kind = Kind::undetermined;
  std::optional<Morphism> witness;
  std::string reason;

  bool is_iso() const { return kind == Kind::iso; }
};

inline std::string to_string(IsoVerdict::Kind k) {
  switch (k) {
    case IsoVerdict::Kind::iso:
      return "iso";
    case IsoVerdict::Kind::not_iso:
      return "not_iso";
    case IsoVerdict::Kind::undetermined:
      return "undetermined";
  }
  return "?";
}

struct IsoOptions {
  std::uint64_t seed = 0;
  int trials = 64;
  std::uint64_t exhaustive_limit = 1ULL << 16;
};

/// not_iso verdicts are proofs (invariants differ); iso verdicts carry an
/// invertible witness. Over a finite field with |K|^hom_dim within the limit
/// the search is exhaustive, otherwise random combinations are sampled.
inline IsoVerdict are_isomorphic(const Representation& m, const Representation& n, const IsoOptions& opts = {}) {
  detail::require_same_algebra(m, n, "are_isomorphic");
  if (m.dims() != n.dims()) {
    return {IsoVerdict::Kind::not_iso, std::nullopt,
            "dimension vectors differ: " + dim_vector(m).to_string() + " vs " + dim_vector(n).to_string()};
  }
  auto mn = hom_basis(m, n);
  const int nm = hom_dim(n, m);
  if (static_cast<int>(mn.size()) != nm) {
    return {IsoVerdict::Kind::not_iso, std::nullopt,
            "dim Hom(M,N)=" + std::to_string(mn.size()) + " but dim Hom(N,M)=" + std::to_string(nm)};
  }
  const int mm = hom_dim(m, m);
  const int nn = hom_dim(n, n);
  if (mm != nn) {
    return {IsoVerdict::Kind::not_iso, std::nullopt,
            "dim End(M)=" + std::to_string(mm) + " but dim End(N)=" + std::to_string(nn)};
  }
  if (m.is_zero()) return {IsoVerdict::Kind::iso, Morphism{m, n, Morphism::identity(m).components}, "both zero"};
  if (mn.empty()) return {IsoVerdict::Kind::not_iso, std::nullopt, "Hom(M,N) = 0"};

  const Field& k = m.field();
  auto combine = [&](const std::vector<Scalar>& coeffs) {
    Morphism f{m, n, {}};
    for (std::size_t v = 0; v < mn.front().components.size(); ++v) {
      Matrix c(k, mn.front().components[v].rows(), mn.front().components[v].cols());
      for (std::size_t b = 0; b < mn.size(); ++b) {
        if (!coeffs[b].is_zero()) c = c + mn[b].components[v].scaled(coeffs[b]);
      }
      f.components.push_back(std::move(c));
    }
    return f;
  };

  auto card = k.cardinality();
  bool exhaustive = false;
  if (card) {
    unsigned __int128 total = 1;
    for (std::size_t b = 0; b < mn.size() && total <= opts.exhaustive_limit; ++b) total *= *card;
    exhaustive = total <= opts.exhaustive_limit;
  }

  if (exhaustive) {
    // Odometer over all coefficient vectors, skipping zero.
    std::vector<std::uint64_t> digits(mn.size(), 0);
    while (true) {
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == *card) digits[pos++] = 0;
      if (pos == digits.size()) break;
      std::vector<Scalar> coeffs;
      for (auto d : digits) coeffs.emplace_back(k, static_cast<long long>(d));
      Morphism f = combine(coeffs);
      if (f.is_invertible()) return {IsoVerdict::Kind::iso, std::move(f), "exhaustive search"};
    }
    return {IsoVerdict::Kind::not_iso, std::nullopt, "no invertible element in Hom(M,N) (exhaustive)"};
  }

  std::mt19937_64 rng(opts.seed);
  for (int trial = 0; trial < opts.trials; ++trial) {
    std::vector<Scalar> coeffs;
    for (std::size_t b = 0; b < mn.size(); ++b) {
      if (card) {
        coeffs.emplace_back(k, static_cast<long long>(rng() % *card));
      } else {
        coeffs.emplace_back(k, static_cast<long long>(rng() % 17) - 8);
      }
    }
    Morphism f = combine(coeffs);
    if (f.is_invertible()) return {IsoVerdict::Kind::iso, std::move(f), "random search"};
  }
  return {IsoVerdict::Kind::undetermined, std::nullopt,
          "no invertible element found in " + std::to_string(opts.trials) + " random trials"};
}

/// A direct sum of vertex projectives, with the coordinate layout needed to
/// map generators.
struct FreeModule {
  Representation module;
  std::vector<int> summands;                    // vertex of each summand, in order
  std::vector<std::vector<std::size_t>> offset;  // [vertex][summand] start of the summand's block

  DimVector multiplicities() const {
    std::vector<int> m(static_cast<std::size_t>(module.vertex_count()), 0);
    for (int s : summands) ++m[static_cast<std::size_t>(s)];
    return DimVector(std::move(m));
  }
};

inline FreeModule free_module(const AlgebraPtr& a, const std::vector<int>& summands) {
  Representation sum = Representation::zero(a);
  for (int s : summands) sum = direct_sum(sum, projective(a, s));
  FreeModule f{sum, summands, {}};
  for (int v = 0; v < a->vertex_count(); ++v) {
    std::vector<std::size_t> offs;
    std::size_t at = 0;
    for (int s : summands) {
      offs.push_back(at);
      at += a->basis_between(s, v).size();
    }
    f.offset.push_back(std::move(offs));
  }
  return f;
}

/// The module map sending the generator e_{s} of summand g to generators[g],
/// a vector of target at vertex summands[g].
inline Morphism map_from_free(const FreeModule& f, const Representation& target, const std::vector<Vector>& generators) {
  const AlgebraPtr& a = target.algebra();
  std::vector<Matrix> comps;
  for (int v = 0; v < a->vertex_count(); ++v) {
    Matrix c(target.field(), static_cast<std::size_t>(target.dim(v)), static_cast<std::size_t>(f.module.dim(v)));
    for (std::size_t g = 0; g < f.summands.size(); ++g) {
      const auto& paths = a->basis_between(f.summands[g], v);
      for (std::size_t p = 0; p < paths.size(); ++p) {
        Vector image = target.path_matrix(a->basis_path(paths[p])).apply(generators[g]);
        for (std::size_t r = 0; r < image.size(); ++r) c(r, f.offset[static_cast<std::size_t>(v)][g] + p) = image[r];
      }
    }
    comps.push_back(std::move(c));
  }
  return {f.module, target, std::move(comps)};
}

/// Vectors of M whose classes form a basis of top(M), vertex by vertex.
inline std::vector<std::pair<int, Vector>> top_generators(const Representation& m) {
  Subspace rad = radical(m);
  std::vector<std::pair<int, Vector>> out;
  for (int v = 0; v < m.vertex_count(); ++v) {
    Matrix comp = complement_basis(rad.basis(v));
    for (std::size_t c = 0; c < comp.cols(); ++c) out.emplace_back(v, comp.column(c));
  }
  return out;
}

struct Syzygy {
  FreeModule cover;
  Morphism surjection;     // cover -> M
  Representation kernel;   // Omega M in its own basis
  Morphism inclusion;      // kernel -> cover
};

/// Projective cover and first syzygy.
inline Syzygy syzygy(const Representation& m) {
  auto gens = top_generators(m);
  std::vector<int> summands;
  std::vector<Vector> vectors;
  for (auto& [v, x] : gens) {
    summands.push_back(v);
    vectors.push_back(std::move(x));
  }
  FreeModule cover = free_module(m.algebra(), summands);
  Morphism pi = map_from_free(cover, m, vectors);
  std::vector<Matrix> kernel_basis;
  for (int v = 0; v < m.vertex_count(); ++v) {
    kernel_basis.push_back(Matrix::from_columns(m.field(), static_cast<std::size_t>(cover.module.dim(v)),
                                                nullspace_basis(pi.at(v))));
  }
  Subspace sub(cover.module, kernel_basis);
  Representation kernel = sub.as_module();
  Morphism inc{kernel, cover.module, std::move(kernel_basis)};
  return {std::move(cover), std::move(pi), std::move(kernel), std::move(inc)};
}

inline bool is_projective(const Representation& m) { return syzygy(m).kernel.is_zero(); }

/// pd M <= 1, i.e. Omega M is projective.
inline bool projective_dimension_at_most_one(const Representation& m) { return is_projective(syzygy(m).kernel); }

/// dim Ext^1(M, N) = dim Hom(Omega M, N) - rank of restriction from Hom(P(M), N).
inline int ext1_dim(const Representation& m, const Representation& n) {
  detail::require_same_algebra(m, n, "ext1_dim");
  Syzygy syz = syzygy(m);
  const int hom_omega = hom_dim(syz.kernel, n);
  if (hom_omega == 0) return 0;
  auto layout = detail::hom_layout(syz.kernel, n);
  std::vector<Vector> restricted;
  for (const auto& f : hom_basis(syz.cover.module, n)) {
    Morphism r = compose(f, syz.inclusion);
    Vector flat = zero_vector(m.field(), layout.unknowns);
    for (int v = 0; v < m.vertex_count(); ++v) {
      const Matrix& c = r.at(v);
      for (std::size_t i = 0; i < c.rows(); ++i) {
        for (std::size_t j = 0; j < c.cols(); ++j) flat[layout.offset[static_cast<std::size_t>(v)] + i * c.cols() + j] = c(i, j);
      }
    }
    restricted.push_back(std::move(flat));
  }
  const int image = restricted.empty() ? 0 : static_cast<int>(rank(Matrix::from_columns(m.field(), layout.unknowns, restricted)));
  return hom_omega - image;
}

}  // namespace qrep
