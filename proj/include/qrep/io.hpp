// JSON files for algebras and representations, plus report helpers.
//
// Algebra:        {"field": {"kind":"gf","p":5} | {"kind":"q"}, "vertices": n,
//                  "arrows": [{"name","source","target"}], "relations":
//                  [{"terms": [{"coeff":"-1","path":["a","b"]}]}], "max_length"}
// Representation: {"algebra": "file.json" | {...}, "dims": [...],
//                  "matrices": {"a": [[...], ...]}}
// Vertices are 1-based in files. Scalars are written as strings and read
// from strings or integers.
#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/algebra.hpp"
#include "qrep/representation.hpp"

namespace qrep {

using Json = nlohmann::ordered_json;

/// A file that could not be turned into an algebra or representation.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& origin, const std::string& field, const std::string& what)
      : std::runtime_error(origin + ": field '" + field + "': " + what), origin_(origin), field_(field) {}

  const std::string& origin() const { return origin_; }
  const std::string& field() const { return field_; }

 private:
  std::string origin_;
  std::string field_;
};

namespace io_detail {

inline const Json& require(const Json& j, const char* key, const std::string& origin, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(origin, where + key, "missing");
  return j.at(key);
}

inline int require_int(const Json& j, const std::string& origin, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError(origin, field, "expected an integer");
  return j.get<int>();
}

inline Scalar read_scalar(const Field& f, const Json& j, const std::string& origin, const std::string& field) {
  try {
    if (j.is_number_integer()) return Scalar(f, j.get<long long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(origin, field, e.what());
  }
  throw ParseError(origin, field, "expected a scalar string or integer");
}

inline Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "<file>", "cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path, "<document>", e.what());
  }
}

}  // namespace io_detail

inline Json field_to_json(const Field& f) {
  if (f.is_prime_field()) return Json{{"kind", "gf"}, {"p", f.characteristic()}};
  return Json{{"kind", "q"}};
}

inline Field field_from_json(const Json& j, const std::string& origin) {
  const Json& kind = io_detail::require(j, "kind", origin, "field.");
  if (kind == "q") return Field::rationals();
  if (kind != "gf") throw ParseError(origin, "field.kind", "expected \"gf\" or \"q\"");
  const Json& p = io_detail::require(j, "p", origin, "field.");
  if (!p.is_number_unsigned()) throw ParseError(origin, "field.p", "expected a positive integer");
  try {
    return Field::prime(p.get<std::uint64_t>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(origin, "field.p", e.what());
  }
}

/// Parses field selectors such as "gf2", "gf5", "q".
inline Field parse_field_selector(const std::string& s) {
  if (s == "q" || s == "Q") return Field::rationals();
  if (s.size() > 2 && s.rfind("gf", 0) == 0) {
    std::size_t used = 0;
    unsigned long long p = std::stoull(s.substr(2), &used);
    if (used == s.size() - 2) return Field::prime(p);
  }
  throw std::invalid_argument("unknown field '" + s + "' (use gf<p> or q)");
}

inline Json algebra_to_json(const BoundAlgebra& a) {
  const Quiver& q = a.quiver();
  Json arrows = Json::array();
  for (const auto& arr : q.arrows()) {
    arrows.push_back({{"name", arr.name}, {"source", arr.source + 1}, {"target", arr.target + 1}});
  }
  Json rels = Json::array();
  for (const auto& r : a.relations()) {
    Json terms = Json::array();
    for (const auto& t : r.terms) terms.push_back({{"coeff", t.coeff.to_string()}, {"path", arrow_names(q, t.path)}});
    rels.push_back({{"terms", terms}});
  }
  return Json{{"field", field_to_json(a.field())},
              {"vertices", q.vertex_count()},
              {"arrows", arrows},
              {"relations", rels},
              {"max_length", a.max_length()}};
}

inline AlgebraPtr algebra_from_json(const Json& j, const std::string& origin) {
  if (!j.is_object()) throw ParseError(origin, "<document>", "expected an object");
  Field field = field_from_json(io_detail::require(j, "field", origin, ""), origin);
  int n = io_detail::require_int(io_detail::require(j, "vertices", origin, ""), origin, "vertices");
  if (n <= 0) throw ParseError(origin, "vertices", "must be positive");

  const Json& arrows_j = io_detail::require(j, "arrows", origin, "");
  if (!arrows_j.is_array()) throw ParseError(origin, "arrows", "expected an array");
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < arrows_j.size(); ++k) {
    const std::string at = "arrows[" + std::to_string(k) + "].";
    const Json& name = io_detail::require(arrows_j[k], "name", origin, at);
    if (!name.is_string()) throw ParseError(origin, at + "name", "expected a string");
    int s = io_detail::require_int(io_detail::require(arrows_j[k], "source", origin, at), origin, at + "source");
    int t = io_detail::require_int(io_detail::require(arrows_j[k], "target", origin, at), origin, at + "target");
    if (s < 1 || s > n) throw ParseError(origin, at + "source", "vertex out of range 1.." + std::to_string(n));
    if (t < 1 || t > n) throw ParseError(origin, at + "target", "vertex out of range 1.." + std::to_string(n));
    arrows.push_back({name.get<std::string>(), s - 1, t - 1});
  }
  std::optional<Quiver> quiver;
  try {
    quiver.emplace(n, arrows);
  } catch (const std::exception& e) {
    throw ParseError(origin, "arrows", e.what());
  }

  std::vector<Relation> relations;
  if (j.contains("relations")) {
    const Json& rels_j = j.at("relations");
    if (!rels_j.is_array()) throw ParseError(origin, "relations", "expected an array");
    for (std::size_t r = 0; r < rels_j.size(); ++r) {
      const std::string at = "relations[" + std::to_string(r) + "].";
      const Json& terms_j = io_detail::require(rels_j[r], "terms", origin, at);
      if (!terms_j.is_array() || terms_j.empty()) throw ParseError(origin, at + "terms", "expected a nonempty array");
      Relation rel;
      for (std::size_t t = 0; t < terms_j.size(); ++t) {
        const std::string tat = at + "terms[" + std::to_string(t) + "].";
        Scalar c = io_detail::read_scalar(field, io_detail::require(terms_j[t], "coeff", origin, tat), origin, tat + "coeff");
        const Json& path_j = io_detail::require(terms_j[t], "path", origin, tat);
        if (!path_j.is_array()) throw ParseError(origin, tat + "path", "expected an array of arrow names");
        try {
          rel.terms.push_back({c, make_path(*quiver, path_j.get<std::vector<std::string>>())});
        } catch (const std::exception& e) {
          throw ParseError(origin, tat + "path", e.what());
        }
      }
      relations.push_back(std::move(rel));
    }
  }
  int max_length = kDefaultMaxLength;
  if (j.contains("max_length")) max_length = io_detail::require_int(j.at("max_length"), origin, "max_length");
  try {
    return build_algebra(field, *quiver, relations, max_length);
  } catch (const std::exception& e) {
    throw ParseError(origin, "relations", e.what());
  }
}

inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

/// `algebra_ref` is stored verbatim under "algebra": a file name or an inline object.
inline Json representation_to_json(const Representation& r, Json algebra_ref) {
  Json mats = Json::object();
  const Quiver& q = r.algebra()->quiver();
  for (int k = 0; k < q.arrow_count(); ++k) {
    const Matrix& m = r.matrix(k);
    if (!m.is_zero()) mats[q.arrow(k).name] = matrix_to_json(m);
  }
  return Json{{"algebra", std::move(algebra_ref)}, {"dims", r.dims()}, {"matrices", mats}};
}

inline Json representation_to_json(const Representation& r) {
  return representation_to_json(r, algebra_to_json(*r.algebra()));
}

/// Reads algebra and representation files, sharing one algebra object per
/// algebra file.
class Loader {
 public:
  AlgebraPtr algebra(const std::string& path) {
    std::string key = std::filesystem::weakly_canonical(path).string();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    AlgebraPtr a = algebra_from_json(io_detail::read_file(path), path);
    cache_.emplace(key, a);
    return a;
  }

  /// When `given` is set it is used as the algebra; a reference inside the
  /// file must then describe the same presentation.
  Representation representation(const std::string& path, const AlgebraPtr& given = nullptr) {
    return representation_from_json(io_detail::read_file(path), path, given);
  }

  Representation representation_from_json(const Json& j, const std::string& origin, const AlgebraPtr& given = nullptr) {
    if (!j.is_object()) throw ParseError(origin, "<document>", "expected an object");
    AlgebraPtr a = given;
    if (j.contains("algebra")) {
      const Json& ref = j.at("algebra");
      AlgebraPtr named;
      if (ref.is_string()) {
        auto p = std::filesystem::path(origin).parent_path() / ref.get<std::string>();
        named = algebra(p.string());
      } else if (ref.is_object()) {
        named = algebra_from_json(ref, origin + "#algebra");
      } else {
        throw ParseError(origin, "algebra", "expected a file name or an inline algebra");
      }
      if (a && !same_algebra(a, named)) throw ParseError(origin, "algebra", "differs from the algebra given with --a");
      if (!a) a = named;
    }
    if (!a) throw ParseError(origin, "algebra", "missing (and no algebra given)");

    const Json& dims_j = io_detail::require(j, "dims", origin, "");
    if (!dims_j.is_array() || static_cast<int>(dims_j.size()) != a->vertex_count()) {
      throw ParseError(origin, "dims", "expected " + std::to_string(a->vertex_count()) + " entries");
    }
    std::vector<int> dims;
    for (std::size_t v = 0; v < dims_j.size(); ++v) {
      int d = io_detail::require_int(dims_j[v], origin, "dims[" + std::to_string(v) + "]");
      if (d < 0) throw ParseError(origin, "dims[" + std::to_string(v) + "]", "negative dimension");
      dims.push_back(d);
    }

    std::map<std::string, Matrix> named;
    if (j.contains("matrices")) {
      const Json& mats = j.at("matrices");
      if (!mats.is_object()) throw ParseError(origin, "matrices", "expected an object keyed by arrow name");
      for (const auto& [name, rows] : mats.items()) {
        const std::string at = "matrices." + name;
        auto k = a->quiver().arrow_index(name);
        if (!k) throw ParseError(origin, at, "unknown arrow");
        const Arrow& arr = a->quiver().arrow(*k);
        auto r = static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.target)]);
        auto c = static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.source)]);
        if (!rows.is_array() || rows.size() != r) {
          throw ParseError(origin, at, "expected " + std::to_string(r) + " rows (dims[target] x dims[source])");
        }
        Matrix m(a->field(), r, c);
        for (std::size_t i = 0; i < r; ++i) {
          if (!rows[i].is_array() || rows[i].size() != c) {
            throw ParseError(origin, at + "[" + std::to_string(i) + "]", "expected " + std::to_string(c) + " entries");
          }
          for (std::size_t jj = 0; jj < c; ++jj) {
            m(i, jj) = io_detail::read_scalar(a->field(), rows[i][jj], origin,
                                              at + "[" + std::to_string(i) + "][" + std::to_string(jj) + "]");
          }
        }
        named.emplace(name, std::move(m));
      }
    }
    return Representation::from_named(a, std::move(dims), named);
  }

 private:
  std::map<std::string, AlgebraPtr> cache_;
};

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

inline Json dim_vector_to_json(const DimVector& d) { return Json(d.entries); }

}  // namespace qrep
