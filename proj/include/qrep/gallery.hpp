// The D~_n family: the hereditary algebras H_n = K Delta_n and H_n^*, their
// trivial extension Lambda_n = K Q_n / I_n, the quasi-simple modules E_l
// and E_l^* at the mouths of the two rank n-2 tubes, and checks of every
// claim made about them.
//
// Vertex labels 1..n+1 follow the usual pictures; internally vertex k is
// index k-1. The arrow alpha: s -> t is named "a<s>_<t>" and its partner
// beta: t -> s is named "b<t>_<s>".
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/ar.hpp"

namespace qrep {

struct GalleryConfig {
  int n = 4;
  Field field = Field::rationals();

  void check() const {
    if (n < 4) throw std::invalid_argument("gallery requires n >= 4, got " + std::to_string(n));
  }
};

namespace gallery_detail {

inline std::string alpha_name(int s, int t) { return "a" + std::to_string(s) + "_" + std::to_string(t); }
inline std::string beta_name(int s, int t) { return "b" + std::to_string(s) + "_" + std::to_string(t); }

// Alpha arrows of Delta_n as (source, target) in 1-based labels.
inline std::vector<std::pair<int, int>> delta_edges(int n) {
  std::vector<std::pair<int, int>> e{{3, 1}, {3, 2}};
  // Alternating chain 3 - 4 - ... - (n-1): odd vertices are sources.
  for (int i = 3; i + 1 <= n - 1; ++i) e.push_back(i % 2 == 1 ? std::pair{i, i + 1} : std::pair{i + 1, i});
  if (n % 2 == 1) {
    e.emplace_back(n, n - 1);
    e.emplace_back(n + 1, n - 1);
  } else {
    e.emplace_back(n - 1, n);
    e.emplace_back(n - 1, n + 1);
  }
  return e;
}

inline Quiver delta_quiver(int n) {
  std::vector<Arrow> arrows;
  for (auto [s, t] : delta_edges(n)) arrows.push_back({alpha_name(s, t), s - 1, t - 1});
  return Quiver(n + 1, std::move(arrows));
}

inline Quiver delta_star_quiver(int n) {
  std::vector<Arrow> arrows;
  for (auto [s, t] : delta_edges(n)) arrows.push_back({beta_name(t, s), t - 1, s - 1});
  return Quiver(n + 1, std::move(arrows));
}

inline Quiver doubled_quiver(int n) {
  std::vector<Arrow> arrows;
  for (auto [s, t] : delta_edges(n)) {
    arrows.push_back({alpha_name(s, t), s - 1, t - 1});
    arrows.push_back({beta_name(t, s), t - 1, s - 1});
  }
  return Quiver(n + 1, std::move(arrows));
}

}  // namespace gallery_detail

inline AlgebraPtr build_delta(int n, const Field& field) {
  GalleryConfig{n, field}.check();
  return build_algebra(field, gallery_detail::delta_quiver(n), {});
}

/// Path algebra of the beta arrows, i.e. of the opposite of Delta_n.
inline AlgebraPtr build_delta_star(int n, const Field& field) {
  GalleryConfig{n, field}.check();
  return build_algebra(field, gallery_detail::delta_star_quiver(n), {});
}

/// K Q_n / I_n: every length-2 path with distinct endpoints is zero, and at
/// each vertex 3..n-1 all 2-cycles are identified.
inline AlgebraPtr build_lambda(int n, const Field& field) {
  GalleryConfig{n, field}.check();
  Quiver q = gallery_detail::doubled_quiver(n);
  const Scalar one = Scalar::one(field);
  std::vector<Relation> rels;
  for (int k = 0; k < q.arrow_count(); ++k) {
    for (int j : q.arrows_from(q.arrow(k).target)) {
      Path p{q.arrow(k).source, q.arrow(j).target, {k, j}};
      if (p.source != p.target) rels.push_back({{{one, p}}});
    }
  }
  for (int i = 3; i <= n - 1; ++i) {
    const int v = i - 1;
    std::vector<Path> cycles;
    for (int k : q.arrows_from(v)) {
      for (int j : q.arrows_from(q.arrow(k).target)) {
        if (q.arrow(j).target == v) cycles.push_back({v, v, {k, j}});
      }
    }
    for (std::size_t c = 1; c < cycles.size(); ++c) rels.push_back({{{one, cycles[0]}, {-one, cycles[c]}}});
  }
  return build_algebra(field, q, rels);
}

/// The index l of an alpha arrow s -> t with t = s +- 1, or nullopt for
/// the two unlabeled arrows.
inline std::optional<int> arrow_label(int n, int s, int t) {
  const int max_source = n % 2 == 1 ? n : n - 1;
  if (s < 3 || s > max_source) return std::nullopt;
  if (t == s + 1) return (s - 1) / 2;
  if (t == s - 1) return n - (s + 1) / 2;
  return std::nullopt;
}

class Gallery {
 public:
  explicit Gallery(GalleryConfig cfg) : cfg_(cfg) {
    cfg_.check();
    h_ = build_delta(cfg_.n, cfg_.field);
    h_star_ = build_delta_star(cfg_.n, cfg_.field);
    lambda_ = build_lambda(cfg_.n, cfg_.field);
    for (auto [s, t] : gallery_detail::delta_edges(cfg_.n)) {
      if (auto l = arrow_label(cfg_.n, s, t)) {
        if (!labels_.emplace(*l, std::pair{s, t}).second) throw std::logic_error("arrow label used twice");
      }
    }
    if (static_cast<int>(labels_.size()) != mouth_size()) throw std::logic_error("arrow labels do not cover 1..n-2");
    for (int l = 1; l <= mouth_size(); ++l) {
      e_.push_back(make_e(l));
      e_star_.push_back(make_e_star(l));
    }
  }

  const GalleryConfig& config() const { return cfg_; }
  int n() const { return cfg_.n; }
  int mouth_size() const { return cfg_.n - 2; }

  const AlgebraPtr& h() const { return h_; }
  const AlgebraPtr& h_star() const { return h_star_; }
  const AlgebraPtr& lambda() const { return lambda_; }

  /// (source, target) labels of alpha_l.
  std::pair<int, int> labeled_arrow(int l) const { return labels_.at(l); }

  const Representation& e(int l) const { return e_.at(index(l)); }
  const Representation& e_star(int l) const { return e_star_.at(index(l)); }
  Representation e_lambda(int l) const { return inflate(e(l), lambda_); }
  Representation e_star_lambda(int l) const { return inflate(e_star(l), lambda_); }

  std::vector<Representation> e_all() const { return e_; }
  std::vector<Representation> e_star_all() const { return e_star_; }

 private:
  std::size_t index(int l) const {
    if (l < 1 || l > mouth_size()) {
      throw std::out_of_range("l must lie in 1.." + std::to_string(mouth_size()) + ", got " + std::to_string(l));
    }
    return static_cast<std::size_t>(l - 1);
  }

  // Alpha arrows carrying the scalar 1 in E_l.
  std::vector<std::pair<int, int>> identity_arrows(int l) const {
    const int n = cfg_.n;
    const int fork_label = n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2;
    if (l == n - 2) return {{3, 1}, {3, 2}};
    if (l == fork_label) {
      if (n % 2 == 1) return {{n, n - 1}, {n + 1, n - 1}};
      return {{n - 1, n}, {n - 1, n + 1}};
    }
    return {labels_.at(l)};
  }

  Representation make_e(int l) const {
    std::vector<int> dims(static_cast<std::size_t>(cfg_.n + 1), 0);
    std::map<std::string, Matrix> named;
    for (auto [s, t] : identity_arrows(l)) {
      dims[static_cast<std::size_t>(s - 1)] = 1;
      dims[static_cast<std::size_t>(t - 1)] = 1;
      named.emplace(gallery_detail::alpha_name(s, t), Matrix::identity(cfg_.field, 1));
    }
    return Representation::from_named(h_, std::move(dims), named);
  }

  Representation make_e_star(int l) const {
    std::vector<int> dims(static_cast<std::size_t>(cfg_.n + 1), 0);
    std::map<std::string, Matrix> named;
    for (auto [s, t] : identity_arrows(l)) {
      dims[static_cast<std::size_t>(s - 1)] = 1;
      dims[static_cast<std::size_t>(t - 1)] = 1;
      named.emplace(gallery_detail::beta_name(t, s), Matrix::identity(cfg_.field, 1));
    }
    return Representation::from_named(h_star_, std::move(dims), named);
  }

  GalleryConfig cfg_;
  AlgebraPtr h_;
  AlgebraPtr h_star_;
  AlgebraPtr lambda_;
  std::map<int, std::pair<int, int>> labels_;
  std::vector<Representation> e_;
  std::vector<Representation> e_star_;
};

inline Representation module_E(int n, int l, const Field& field) { return Gallery({n, field}).e(l); }
inline Representation module_E_star(int n, int l, const Field& field) { return Gallery({n, field}).e_star(l); }

struct TubeReport {
  int n = 0;
  int rank_claimed = 0;
  std::vector<bool> bricks;                    // E_l, l = 1..n-2
  std::vector<std::vector<int>> hom_dims;      // dim Hom(E_r, E_p)
  std::vector<IsoVerdict> tau_orbit;           // [l-1]: tau E_{l+1} vs E_l; last: tau E_1 vs E_{n-2}
  int period = -1;                             // least k >= 1 with tau^k E_1 = E_1
  std::vector<bool> pd_at_most_one;
  std::vector<bool> star_bricks;
  std::vector<std::vector<int>> star_hom_dims;
  std::vector<IsoVerdict> star_tau_orbit;      // [l-1]: tau E*_l vs E*_{l+1}; last: tau E*_{n-2} vs E*_1
  int star_period = -1;
  std::vector<bool> star_pd_at_most_one;
  std::vector<std::string> failures;
  bool passed = false;
};

namespace gallery_detail {

inline int tau_period(const Representation& start, int bound, const IsoOptions& opts) {
  Representation x = start;
  for (int k = 1; k <= bound; ++k) {
    x = tau(x);
    if (x.is_zero()) return -1;
    if (are_isomorphic(x, start, opts).is_iso()) return k;
  }
  return -1;
}

inline void check_family(const std::vector<Representation>& mods, const std::string& name, bool forward,
                         const IsoOptions& opts, std::vector<bool>& bricks, std::vector<std::vector<int>>& homs,
                         std::vector<IsoVerdict>& orbit, int& period, std::vector<bool>& pd,
                         std::vector<std::string>& failures) {
  const int r = static_cast<int>(mods.size());
  for (int l = 1; l <= r; ++l) {
    const auto& m = mods[static_cast<std::size_t>(l - 1)];
    bool brick = !m.is_zero() && is_brick(m);
    bricks.push_back(brick);
    if (!brick) failures.push_back(name + "_" + std::to_string(l) + " is not a brick");
    bool pd1 = projective_dimension_at_most_one(m);
    pd.push_back(pd1);
    if (!pd1) failures.push_back("pd " + name + "_" + std::to_string(l) + " > 1");
  }
  for (int a = 1; a <= r; ++a) {
    std::vector<int> row;
    for (int b = 1; b <= r; ++b) {
      int d = hom_dim(mods[static_cast<std::size_t>(a - 1)], mods[static_cast<std::size_t>(b - 1)]);
      row.push_back(d);
      if (a != b && d != 0) {
        failures.push_back("Hom(" + name + "_" + std::to_string(a) + ", " + name + "_" + std::to_string(b) +
                           ") != 0");
      }
    }
    homs.push_back(std::move(row));
  }
  // forward: tau X_{l+1} = X_l.  backward: tau X_l = X_{l+1}.
  for (int l = 1; l <= r; ++l) {
    const int next = l == r ? 1 : l + 1;
    IsoVerdict v;
    std::string label;
    if (forward) {
      const int src = l == r ? 1 : l + 1;
      const int dst = l == r ? r : l;
      v = are_isomorphic(tau(mods[static_cast<std::size_t>(src - 1)]), mods[static_cast<std::size_t>(dst - 1)], opts);
      label = "tau " + name + "_" + std::to_string(src) + " ~ " + name + "_" + std::to_string(dst);
    } else {
      v = are_isomorphic(tau(mods[static_cast<std::size_t>(l - 1)]), mods[static_cast<std::size_t>(next - 1)], opts);
      label = "tau " + name + "_" + std::to_string(l) + " ~ " + name + "_" + std::to_string(next);
    }
    if (!v.is_iso()) failures.push_back(label + " fails (" + to_string(v.kind) + ": " + v.reason + ")");
    orbit.push_back(std::move(v));
  }
  period = tau_period(mods.front(), r, opts);
  if (period != r) failures.push_back(name + " tau-period is " + std::to_string(period) + ", expected " + std::to_string(r));
}

}  // namespace gallery_detail

/// Brick, orthogonality, tau-orbit, period and pd checks for given mouth
/// modules (E_l over H_n, E*_l over H_n^*).
inline TubeReport verify_tube(int n, const std::vector<Representation>& e, const std::vector<Representation>& e_star,
                              const IsoOptions& opts = {}) {
  TubeReport rep;
  rep.n = n;
  rep.rank_claimed = n - 2;
  gallery_detail::check_family(e, "E", true, opts, rep.bricks, rep.hom_dims, rep.tau_orbit, rep.period,
                               rep.pd_at_most_one, rep.failures);
  gallery_detail::check_family(e_star, "E*", false, opts, rep.star_bricks, rep.star_hom_dims, rep.star_tau_orbit,
                               rep.star_period, rep.star_pd_at_most_one, rep.failures);
  rep.passed = rep.failures.empty();
  return rep;
}

inline TubeReport verify_tube(const Gallery& g, const IsoOptions& opts = {}) {
  return verify_tube(g.n(), g.e_all(), g.e_star_all(), opts);
}

inline TubeReport verify_tube(int n, const Field& field, const IsoOptions& opts = {}) {
  return verify_tube(Gallery({n, field}), opts);
}

struct FormulaCheck {
  std::string x;  // label of X
  int l = 0;      // (M, N) = (E_l, E*_l)
  FormulaReport first;
  FormulaReport second;
};

struct ShortCycleEntry {
  int l = 0;
  DimVector class_e;
  DimVector class_e_star;
  int hom_e_to_star = 0;
  int hom_star_to_e = 0;
  DimVector top_e, socle_e, top_star, socle_star;
  bool passed = false;
};

struct ShortCycleReport {
  int n = 0;
  std::vector<ShortCycleEntry> entries;
  std::vector<FormulaCheck> formulas;
  std::vector<std::string> failures;
  bool passed = false;
};

/// The test modules X of the formula suite over Lambda_n, with labels.
inline std::vector<std::pair<std::string, Representation>> formula_test_modules(const Gallery& g) {
  std::vector<std::pair<std::string, Representation>> xs;
  const auto& lam = g.lambda();
  for (int v = 0; v < lam->vertex_count(); ++v) xs.emplace_back("S" + std::to_string(v + 1), simple(lam, v));
  for (int v = 0; v < lam->vertex_count(); ++v) xs.emplace_back("P" + std::to_string(v + 1), projective(lam, v));
  for (int k = 1; k <= g.mouth_size(); ++k) xs.emplace_back("E" + std::to_string(k), g.e_lambda(k));
  for (int k = 1; k <= g.mouth_size(); ++k) xs.emplace_back("E*" + std::to_string(k), g.e_star_lambda(k));
  return xs;
}

/// Over Lambda_n: [E_l] = [E*_l], nonzero maps both ways, top/socle
/// matching, and both length formulas for (E_l, E*_l) against every test X.
/// `ms` and `ns` are the pairs (M_l, N_l); `xs` the labeled test modules.
inline ShortCycleReport verify_short_cycle(int n, const std::vector<Representation>& ms,
                                           const std::vector<Representation>& ns,
                                           const std::vector<std::pair<std::string, Representation>>& xs) {
  ShortCycleReport rep;
  rep.n = n;
  if (ms.size() != ns.size()) throw std::invalid_argument("verify_short_cycle: unequal family sizes");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const Representation& m = ms[i];
    const Representation& s = ns[i];
    ShortCycleEntry e;
    e.l = static_cast<int>(i) + 1;
    e.class_e = dim_vector(m);
    e.class_e_star = dim_vector(s);
    e.hom_e_to_star = hom_dim(m, s);
    e.hom_star_to_e = hom_dim(s, m);
    e.top_e = top(m);
    e.socle_e = socle(m);
    e.top_star = top(s);
    e.socle_star = socle(s);
    const std::string tag = "l=" + std::to_string(e.l) + ": ";
    const std::size_t before = rep.failures.size();
    if (e.class_e != e.class_e_star) rep.failures.push_back(tag + "[E] != [E*]");
    if (e.hom_e_to_star < 1) rep.failures.push_back(tag + "Hom(E, E*) = 0");
    if (e.hom_star_to_e < 1) rep.failures.push_back(tag + "Hom(E*, E) = 0");
    if (e.top_star != e.socle_e) rep.failures.push_back(tag + "top(E*) != soc(E)");
    if (e.top_e != e.socle_star) rep.failures.push_back(tag + "top(E) != soc(E*)");
    e.passed = rep.failures.size() == before;
    rep.entries.push_back(std::move(e));
  }
  for (const auto& [label, x] : xs) {
    Representation tx = tau(x);
    Representation tmx = tau_minus(x);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const int l = static_cast<int>(i) + 1;
      FormulaCheck c{label, l, check_formula_i(x, tx, ms[i], ns[i]), check_formula_ii(x, tmx, ms[i], ns[i])};
      for (const FormulaReport* f : {&c.first, &c.second}) {
        if (f->holds()) continue;
        std::string what = f->status == FormulaReport::Status::hypothesis_violated
                               ? f->note
                               : std::to_string(f->lhs) + " != " + std::to_string(f->rhs);
        rep.failures.push_back("formula (" + f->which + ") with X=" + label + ", l=" + std::to_string(l) + ": " + what);
      }
      rep.formulas.push_back(std::move(c));
    }
  }
  rep.passed = rep.failures.empty();
  return rep;
}

inline ShortCycleReport verify_short_cycle(const Gallery& g, bool with_formulas = true) {
  std::vector<Representation> ms;
  std::vector<Representation> ns;
  for (int l = 1; l <= g.mouth_size(); ++l) {
    ms.push_back(g.e_lambda(l));
    ns.push_back(g.e_star_lambda(l));
  }
  std::vector<std::pair<std::string, Representation>> xs;
  if (with_formulas) xs = formula_test_modules(g);
  return verify_short_cycle(g.n(), ms, ns, xs);
}

inline ShortCycleReport verify_short_cycle(int n, const Field& field, bool with_formulas = true) {
  return verify_short_cycle(Gallery({n, field}), with_formulas);
}

}  // namespace qrep
