// Independent reference computations for the tests. Nothing here calls the
// library's linear algebra: GF(2) work is done on plain bit arrays by
// exhaustive search, and integer oracles use hand-rolled loops.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qrep/qrep.hpp"

namespace oracle {

using IntMatrix = std::vector<std::vector<int>>;

/// Entries of a GF(2) matrix as 0/1 integers.
inline IntMatrix bits(const qrep::Matrix& m) {
  IntMatrix out(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<int>(m(i, j).residue() & 1U);
  }
  return out;
}

/// True when no nonempty subset of the chosen columns sums to zero mod 2.
inline bool columns_independent_gf2(const IntMatrix& m, const std::vector<std::size_t>& cols) {
  const std::size_t rows = m.size();
  for (std::uint32_t mask = 1; mask < (1U << cols.size()); ++mask) {
    bool zero = true;
    for (std::size_t r = 0; r < rows && zero; ++r) {
      int s = 0;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (mask & (1U << k)) s ^= m[r][cols[k]];
      }
      if (s != 0) zero = false;
    }
    if (zero) return false;
  }
  return true;
}

/// Rank over GF(2) as the largest independent column subset.
inline int rank_gf2(const IntMatrix& m, std::size_t cols) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << cols); ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t c = 0; c < cols; ++c) {
      if (mask & (1U << c)) chosen.push_back(c);
    }
    if (static_cast<int>(chosen.size()) > best && columns_independent_gf2(m, chosen)) best = static_cast<int>(chosen.size());
  }
  return best;
}

/// Number of x in GF(2)^cols with m x = 0.
inline int kernel_size_gf2(const IntMatrix& m, std::size_t cols) {
  int count = 0;
  for (std::uint32_t x = 0; x < (1U << cols); ++x) {
    bool ok = true;
    for (const auto& row : m) {
      int s = 0;
      for (std::size_t c = 0; c < cols; ++c) s ^= row[c] & static_cast<int>((x >> c) & 1U);
      if (s != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

inline qrep::Matrix random_matrix(const qrep::Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = 0,
                                  int hi = 1) {
  std::uniform_int_distribution<int> d(lo, hi);
  qrep::Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = qrep::Scalar(f, d(rng));
  }
  return m;
}

/// A three-vertex quiver with a double arrow: a, b: 1 -> 2 and c: 2 -> 3.
inline qrep::AlgebraPtr three_vertex_algebra(const qrep::Field& f) {
  qrep::Quiver q(3, {{"a", 0, 1}, {"b", 0, 1}, {"c", 1, 2}});
  return qrep::build_algebra(f, q, {});
}

inline qrep::Representation random_representation(const qrep::AlgebraPtr& a, std::mt19937_64& rng, int max_dim = 2) {
  std::uniform_int_distribution<int> dd(0, max_dim);
  std::vector<int> dims;
  for (int v = 0; v < a->vertex_count(); ++v) dims.push_back(dd(rng));
  std::vector<qrep::Matrix> mats;
  for (const auto& arr : a->quiver().arrows()) {
    mats.push_back(random_matrix(a->field(), static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.target)]),
                                 static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.source)]), rng));
  }
  return qrep::Representation(a, dims, mats);
}

namespace detail {

// Bit i of `x` read as the entry (r, c) of an rxc block starting at `offset`.
inline int entry(std::uint64_t x, std::size_t offset, std::size_t cols, std::size_t r, std::size_t c) {
  return static_cast<int>((x >> (offset + r * cols + c)) & 1U);
}

// For every tuple (f_v) of GF(2) matrices f_v: M_v -> N_v, calls visit(x)
// when it intertwines all arrow maps.
template <class Visit>
void for_each_intertwiner_gf2(const qrep::Representation& m, const qrep::Representation& n, Visit visit) {
  const auto& q = m.algebra()->quiver();
  const int nv = m.vertex_count();
  std::vector<std::size_t> offset(static_cast<std::size_t>(nv) + 1, 0);
  for (int v = 0; v < nv; ++v) {
    offset[static_cast<std::size_t>(v) + 1] =
        offset[static_cast<std::size_t>(v)] + static_cast<std::size_t>(n.dim(v) * m.dim(v));
  }
  const std::size_t total = offset.back();
  std::vector<IntMatrix> ma, na;
  for (int k = 0; k < q.arrow_count(); ++k) {
    ma.push_back(bits(m.matrix(k)));
    na.push_back(bits(n.matrix(k)));
  }
  for (std::uint64_t x = 0; x < (1ULL << total); ++x) {
    bool ok = true;
    for (int k = 0; k < q.arrow_count() && ok; ++k) {
      const auto s = static_cast<std::size_t>(q.arrow(k).source);
      const auto t = static_cast<std::size_t>(q.arrow(k).target);
      const auto ms = static_cast<std::size_t>(m.dim(static_cast<int>(s)));
      const auto mt = static_cast<std::size_t>(m.dim(static_cast<int>(t)));
      const auto ns = static_cast<std::size_t>(n.dim(static_cast<int>(s)));
      const auto nt = static_cast<std::size_t>(n.dim(static_cast<int>(t)));
      // N_a f_s == f_t M_a, both nt x ms.
      for (std::size_t r = 0; r < nt && ok; ++r) {
        for (std::size_t c = 0; c < ms && ok; ++c) {
          int lhs = 0;
          for (std::size_t j = 0; j < ns; ++j) lhs ^= na[static_cast<std::size_t>(k)][r][j] & entry(x, offset[s], ms, j, c);
          int rhs = 0;
          for (std::size_t j = 0; j < mt; ++j) rhs ^= entry(x, offset[t], mt, r, j) & ma[static_cast<std::size_t>(k)][j][c];
          if (lhs != rhs) ok = false;
        }
      }
    }
    if (ok) visit(x, offset);
  }
}

// Determinant mod 2 of a square 0/1 matrix by elimination on plain ints.
inline bool invertible_gf2(IntMatrix a) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && a[r][c] != 0) {
        for (std::size_t k = 0; k < n; ++k) a[r][k] ^= a[c][k];
      }
    }
  }
  return true;
}

}  // namespace detail

/// |Hom(M, N)| over GF(2) by enumerating every tuple of vertex maps; the
/// dimension is log2 of the count.
inline int hom_dim_gf2(const qrep::Representation& m, const qrep::Representation& n) {
  std::uint64_t count = 0;
  detail::for_each_intertwiner_gf2(m, n, [&](std::uint64_t, const std::vector<std::size_t>&) { ++count; });
  int d = 0;
  while ((1ULL << d) < count) ++d;
  return d;
}

/// Whether some intertwiner M -> N is bijective at every vertex.
inline bool isomorphic_gf2(const qrep::Representation& m, const qrep::Representation& n) {
  if (m.dims() != n.dims()) return false;
  bool found = false;
  detail::for_each_intertwiner_gf2(m, n, [&](std::uint64_t x, const std::vector<std::size_t>& offset) {
    if (found) return;
    for (int v = 0; v < m.vertex_count(); ++v) {
      const auto d = static_cast<std::size_t>(m.dim(v));
      IntMatrix f(d, std::vector<int>(d, 0));
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) f[r][c] = detail::entry(x, offset[static_cast<std::size_t>(v)], d, r, c);
      }
      if (!detail::invertible_gf2(f)) return;
    }
    found = true;
  });
  return found;
}

/// Number of paths (trivial ones included) in an acyclic quiver.
inline int path_count(const qrep::Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> from(static_cast<std::size_t>(n), -1);
  auto count = [&](auto&& self, int v) -> int {
    if (from[static_cast<std::size_t>(v)] >= 0) return from[static_cast<std::size_t>(v)];
    int c = 1;
    for (const auto& a : q.arrows()) {
      if (a.source == v) c += self(self, a.target);
    }
    return from[static_cast<std::size_t>(v)] = c;
  };
  int total = 0;
  for (int v = 0; v < n; ++v) total += count(count, v);
  return total;
}

/// Euler form <x, y> = sum x_i y_i - sum_{a: i -> j} x_i y_j of an acyclic quiver.
inline int euler_form(const qrep::Quiver& q, const std::vector<int>& x, const std::vector<int>& y) {
  int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  for (const auto& a : q.arrows()) s -= x[static_cast<std::size_t>(a.source)] * y[static_cast<std::size_t>(a.target)];
  return s;
}

/// Coxeter transformation of an acyclic quiver, Phi with <x, y> = -<y, Phi x>:
/// Phi = -E^{-1} E^T, where E = I - A and E^{-1} = I + A + A^2 + ...
inline std::vector<int> coxeter(const qrep::Quiver& q, const std::vector<int>& x) {
  const std::size_t n = static_cast<std::size_t>(q.vertex_count());
  IntMatrix adj(n, std::vector<int>(n, 0));
  for (const auto& a : q.arrows()) adj[static_cast<std::size_t>(a.source)][static_cast<std::size_t>(a.target)] += 1;
  IntMatrix inv(n, std::vector<int>(n, 0));
  IntMatrix power(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) inv[i][j] += power[i][j];
    }
    IntMatrix next(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) next[i][j] += power[i][k] * adj[k][j];
      }
    }
    power = next;
  }
  // E^T x, then -E^{-1}.
  std::vector<int> et(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) et[i] += ((i == j ? 1 : 0) - adj[j][i]) * x[j];
  }
  std::vector<int> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i] -= inv[i][j] * et[j];
  }
  return out;
}

inline std::vector<qrep::Field> fields() { return {qrep::Field::prime(2), qrep::Field::prime(5), qrep::Field::rationals()}; }

}  // namespace oracle
