// Quivers, paths and relations.
//
// Vertices are 0-based internally; files and reports use 1-based labels.
// A path stores arrows in traversal order: [a, b] means "a, then b".
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/field.hpp"

namespace qrep {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;

  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(int vertex_count, std::vector<Arrow> arrows) : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
    if (vertex_count_ <= 0) throw std::invalid_argument("quiver needs at least one vertex");
    for (std::size_t k = 0; k < arrows_.size(); ++k) {
      const Arrow& a = arrows_[k];
      if (a.name.empty()) throw std::invalid_argument("arrow with empty name");
      if (a.source < 0 || a.source >= vertex_count_ || a.target < 0 || a.target >= vertex_count_) {
        throw std::invalid_argument("arrow '" + a.name + "' has an endpoint out of range");
      }
      if (!by_name_.emplace(a.name, static_cast<int>(k)).second) {
        throw std::invalid_argument("duplicate arrow name '" + a.name + "'");
      }
    }
  }

  int vertex_count() const { return vertex_count_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int k) const { return arrows_.at(static_cast<std::size_t>(k)); }

  std::optional<int> arrow_index(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<int> arrows_from(int v) const {
    std::vector<int> out;
    for (int k = 0; k < arrow_count(); ++k) {
      if (arrows_[static_cast<std::size_t>(k)].source == v) out.push_back(k);
    }
    return out;
  }

  std::vector<int> arrows_into(int v) const {
    std::vector<int> out;
    for (int k = 0; k < arrow_count(); ++k) {
      if (arrows_[static_cast<std::size_t>(k)].target == v) out.push_back(k);
    }
    return out;
  }

  // Same arrow names and order, every arrow reversed.
  Quiver opposite() const {
    std::vector<Arrow> reversed = arrows_;
    for (auto& a : reversed) std::swap(a.source, a.target);
    return Quiver(vertex_count_, std::move(reversed));
  }

  bool operator==(const Quiver& o) const { return vertex_count_ == o.vertex_count_ && arrows_ == o.arrows_; }

 private:
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> by_name_;
};

struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;  // arrow indices, traversal order

  static Path stationary(int v) { return Path{v, v, {}}; }
  static Path of_arrow(const Quiver& q, int k) { return Path{q.arrow(k).source, q.arrow(k).target, {k}}; }

  std::size_t length() const { return arrows.size(); }

  bool operator==(const Path&) const = default;
};

/// Builds a path from arrow names, checking that consecutive arrows compose.
inline Path make_path(const Quiver& q, const std::vector<std::string>& names) {
  if (names.empty()) throw std::invalid_argument("make_path: use Path::stationary for empty paths");
  Path p;
  for (std::size_t k = 0; k < names.size(); ++k) {
    auto idx = q.arrow_index(names[k]);
    if (!idx) throw std::invalid_argument("unknown arrow '" + names[k] + "'");
    const Arrow& a = q.arrow(*idx);
    if (k == 0) {
      p.source = a.source;
    } else if (a.source != p.target) {
      throw std::invalid_argument("arrows '" + names[k - 1] + "' and '" + names[k] + "' do not compose");
    }
    p.target = a.target;
    p.arrows.push_back(*idx);
  }
  return p;
}

/// p then q; nullopt when p does not end where q starts.
inline std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.target != q.source) return std::nullopt;
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

/// The same path read in the opposite quiver.
inline Path reversed(const Path& p) {
  Path r{p.target, p.source, p.arrows};
  std::reverse(r.arrows.begin(), r.arrows.end());
  return r;
}

inline std::vector<std::string> arrow_names(const Quiver& q, const Path& p) {
  std::vector<std::string> out;
  out.reserve(p.arrows.size());
  for (int k : p.arrows) out.push_back(q.arrow(k).name);
  return out;
}

inline std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + std::to_string(p.source + 1);
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k > 0) s += "*";
    s += q.arrow(p.arrows[k]).name;
  }
  return s;
}

/// Order by (length, arrow-name sequence, source vertex).
inline bool path_less(const Quiver& q, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t k = 0; k < a.length(); ++k) {
    const std::string& na = q.arrow(a.arrows[k]).name;
    const std::string& nb = q.arrow(b.arrows[k]).name;
    if (na != nb) return na < nb;
  }
  return a.source < b.source;
}

struct Term {
  Scalar coeff;
  Path path;

  bool operator==(const Term&) const = default;
};

struct Relation {
  std::vector<Term> terms;

  bool operator==(const Relation&) const = default;
};

inline Relation reversed(const Relation& r) {
  Relation out;
  for (const auto& t : r.terms) out.terms.push_back({t.coeff, reversed(t.path)});
  return out;
}

}  // namespace qrep
