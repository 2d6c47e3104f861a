// qrep: command-line front end.
//
// Module slots (--m, --n, --x) take a representation file or a gallery
// selector "@<algebra><n>/<module>", e.g. @lambda5/E1, @lambda5/E*1,
// @h5/E2, @hstar5/E*2, @lambda5/S3, @lambda5/P2, @lambda5/I4. Algebra
// slots (--a) take a file or "@h5", "@hstar5", "@lambda5". Gallery
// selectors use the field given by --field.
//
// Exit status: 0 success, 1 a mathematical check failed, 2 usage or input
// error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "qrep/qrep.hpp"

namespace {

using qrep::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
  std::string field = "q";
  std::string algebra;
  std::string m, n_slot, x;
  int n = 5;
  std::string which = "i";
  int corrupt = 0;
  int corrupt_star = 0;
  bool no_formulas = false;
  bool with_basis = false;
};

class Session {
 public:
  explicit Session(const Options& o) : opts_(o) {}

  qrep::Field field() const { return qrep::parse_field_selector(opts_.field); }

  const qrep::Gallery& gallery(int n) {
    auto key = std::pair{n, opts_.field};
    auto it = galleries_.find(key);
    if (it == galleries_.end()) it = galleries_.emplace(key, std::make_unique<qrep::Gallery>(qrep::GalleryConfig{n, field()})).first;
    return *it->second;
  }

  qrep::AlgebraPtr algebra(const std::string& spec) {
    if (!spec.starts_with("@")) return loader_.algebra(spec);
    static const std::regex re(R"(@(h|hstar|lambda)(\d+))");
    std::smatch mt;
    if (!std::regex_match(spec, mt, re)) throw UsageError("bad algebra selector '" + spec + "'");
    const auto& g = gallery(std::stoi(mt[2]));
    if (mt[1] == "h") return g.h();
    if (mt[1] == "hstar") return g.h_star();
    return g.lambda();
  }

  qrep::Representation module(const std::string& spec, const qrep::AlgebraPtr& given) {
    if (!spec.starts_with("@")) return loader_.representation(spec, given);
    static const std::regex re(R"(@(h|hstar|lambda)(\d+)/(E\*|E|S|P|I)(\d+))");
    std::smatch mt;
    if (!std::regex_match(spec, mt, re)) throw UsageError("bad module selector '" + spec + "'");
    const std::string alg = mt[1];
    const qrep::Gallery& g = gallery(std::stoi(mt[2]));
    const qrep::AlgebraPtr a = algebra("@" + alg + std::string(mt[2]));
    if (given && !qrep::same_algebra(given, a)) throw UsageError("selector '" + spec + "' is not over the algebra of --a");
    const std::string kind = mt[3];
    const int k = std::stoi(mt[4]);
    if (kind == "S" || kind == "P" || kind == "I") {
      if (k < 1 || k > a->vertex_count()) throw UsageError("vertex out of range in '" + spec + "'");
      if (kind == "S") return qrep::simple(a, k - 1);
      if (kind == "P") return qrep::projective(a, k - 1);
      return qrep::injective(a, k - 1);
    }
    if (kind == "E") {
      if (alg == "hstar") throw UsageError("E_l lives over h or lambda");
      return alg == "h" ? g.e(k) : g.e_lambda(k);
    }
    if (alg == "h") throw UsageError("E*_l lives over hstar or lambda");
    return alg == "hstar" ? g.e_star(k) : g.e_star_lambda(k);
  }

  qrep::AlgebraPtr given_algebra() { return opts_.algebra.empty() ? nullptr : algebra(opts_.algebra); }

  qrep::IsoOptions iso() const {
    qrep::IsoOptions io;
    io.seed = opts_.seed;
    return io;
  }

 private:
  const Options& opts_;
  qrep::Loader loader_;
  std::map<std::pair<int, std::string>, std::unique_ptr<qrep::Gallery>> galleries_;
};

Json module_json(const qrep::Representation& r) {
  Json j = qrep::representation_to_json(r, nullptr);
  j.erase("algebra");
  return j;
}

Json morphism_json(const qrep::Morphism& f) {
  Json comps = Json::array();
  for (const auto& c : f.components) comps.push_back(qrep::matrix_to_json(c));
  return comps;
}

Json verdict_json(const qrep::IsoVerdict& v) {
  Json j{{"verdict", qrep::to_string(v.kind)}, {"reason", v.reason}};
  if (v.witness) j["witness"] = morphism_json(*v.witness);
  return j;
}

Json formula_json(const qrep::FormulaReport& r) {
  Json j{{"which", r.which}, {"status", qrep::to_string(r.status)}};
  if (r.which == "i") {
    j["hom_x_m"] = r.m_first;
    j["hom_m_tau_x"] = r.m_second;
    j["hom_x_n"] = r.n_first;
    j["hom_n_tau_x"] = r.n_second;
  } else {
    j["hom_m_x"] = r.m_first;
    j["hom_tau_minus_x_m"] = r.m_second;
    j["hom_n_x"] = r.n_first;
    j["hom_tau_minus_x_n"] = r.n_second;
  }
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["m_brick"] = r.m_brick;
  j["n_brick"] = r.n_brick;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json bool_array(const std::vector<bool>& v) {
  Json a = Json::array();
  for (bool b : v) a.push_back(b);
  return a;
}

Json labeling_json(const qrep::Gallery& g) {
  Json j = Json::object();
  for (int l = 1; l <= g.mouth_size(); ++l) {
    auto [s, t] = g.labeled_arrow(l);
    j[std::to_string(l)] = std::to_string(s) + "->" + std::to_string(t);
  }
  return j;
}

struct Outcome {
  Json inputs = Json::object();
  std::string field;
  Json results = Json::object();
  bool passed = true;
  int exit_code = kOk;
};

std::string render_text(const std::string& verb, const Json& report) {
  std::ostringstream os;
  os << verb << " [" << report["field"].get<std::string>() << "]\n";
  for (const auto& [k, v] : report["inputs"].items()) os << "  input " << k << ": " << v.get<std::string>() << '\n';
  for (const auto& [k, v] : report["results"].items()) {
    os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  os << "  passed: " << (report["passed"].get<bool>() ? "yes" : "no") << '\n';
  return os.str();
}

Outcome run_verb(const std::string& verb, const Options& o, Session& s) {
  Outcome out;
  auto add_input = [&](const char* key, const std::string& v) {
    if (!v.empty()) out.inputs[key] = v;
  };
  auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(std::string("missing required option ") + flag);
    return v;
  };
  add_input("a", o.algebra);

  if (verb == "algebra-info") {
    auto a = s.algebra(need(o.algebra, "--a"));
    out.field = a->field().to_string();
    const auto& q = a->quiver();
    Json arrows = Json::array();
    for (const auto& arr : q.arrows()) {
      arrows.push_back(arr.name + ": " + std::to_string(arr.source + 1) + "->" + std::to_string(arr.target + 1));
    }
    Json basis = Json::array();
    for (const auto& p : a->basis()) basis.push_back(qrep::path_to_string(q, p));
    auto adm = qrep::admissibility_report(*a);
    out.results = Json{{"vertices", q.vertex_count()},
                       {"arrows", arrows},
                       {"relations", a->relations().size()},
                       {"dimension", a->dimension()},
                       {"nilpotency_degree", a->nilpotency_degree()},
                       {"pair_counts", adm.pair_counts},
                       {"relation_min_lengths", adm.relation_min_lengths},
                       {"relations_in_radical_squared", adm.relations_in_radical_squared},
                       {"basis", basis}};
    out.passed = adm.relations_in_radical_squared;
  } else if (verb == "rep-validate" || verb == "dimvec" || verb == "tau" || verb == "tau-minus") {
    add_input("m", o.m);
    auto m = s.module(need(o.m, "--m"), s.given_algebra());
    out.field = m.field().to_string();
    if (verb == "rep-validate") {
      auto v = qrep::validate(m);
      Json viol = Json::array();
      for (const auto& r : v.violations) viol.push_back({{"relation", r.relation + 1}, {"value", qrep::matrix_to_json(r.value)}});
      out.results = Json{{"dims", m.dims()}, {"violations", viol}};
      out.passed = v.valid();
    } else if (verb == "dimvec") {
      out.results = Json{{"dim_vector", m.dims()},
                         {"total", m.total_dimension()},
                         {"top", qrep::dim_vector_to_json(qrep::top(m))},
                         {"socle", qrep::dim_vector_to_json(qrep::socle(m))}};
    } else {
      auto r = verb == "tau" ? qrep::tau(m) : qrep::tau_minus(m);
      out.results = Json{{"dim_vector", r.dims()}, {"module", module_json(r)}};
    }
  } else if (verb == "hom" || verb == "ext1" || verb == "iso") {
    add_input("m", o.m);
    add_input("n", o.n_slot);
    auto given = s.given_algebra();
    auto m = s.module(need(o.m, "--m"), given);
    auto n = s.module(need(o.n_slot, "--n"), given ? given : m.algebra());
    out.field = m.field().to_string();
    if (verb == "hom") {
      auto basis = qrep::hom_basis(m, n);
      out.results = Json{{"dimension", basis.size()}};
      if (o.with_basis) {
        Json b = Json::array();
        for (const auto& f : basis) b.push_back(morphism_json(f));
        out.results["basis"] = b;
      }
    } else if (verb == "ext1") {
      out.results = Json{{"dimension", qrep::ext1_dim(m, n)}};
    } else {
      auto v = qrep::are_isomorphic(m, n, s.iso());
      out.results = verdict_json(v);
      out.passed = v.is_iso();
    }
  } else if (verb == "formula") {
    add_input("x", o.x);
    add_input("m", o.m);
    add_input("n", o.n_slot);
    if (o.which != "i" && o.which != "ii") throw UsageError("--which must be i or ii");
    auto given = s.given_algebra();
    auto x = s.module(need(o.x, "--x"), given);
    auto m = s.module(need(o.m, "--m"), x.algebra());
    auto n = s.module(need(o.n_slot, "--n"), x.algebra());
    out.field = x.field().to_string();
    auto r = o.which == "i" ? qrep::check_formula_i(x, m, n) : qrep::check_formula_ii(x, m, n);
    out.results = formula_json(r);
    out.passed = r.holds();
    if (r.status == qrep::FormulaReport::Status::hypothesis_violated) out.exit_code = kUsage;
  } else if (verb == "gallery-tube") {
    out.inputs["n"] = std::to_string(o.n);
    out.inputs["field"] = o.field;
    const auto& g = s.gallery(o.n);
    out.field = g.config().field.to_string();
    auto e = g.e_all();
    auto es = g.e_star_all();
    if (o.corrupt != 0) {
      out.inputs["corrupt"] = std::to_string(o.corrupt);
      e.at(static_cast<std::size_t>(o.corrupt - 1)) = qrep::Representation::with_zero_maps(g.h(), g.e(o.corrupt).dims());
    }
    if (o.corrupt_star != 0) {
      out.inputs["corrupt_star"] = std::to_string(o.corrupt_star);
      es.at(static_cast<std::size_t>(o.corrupt_star - 1)) =
          qrep::Representation::with_zero_maps(g.h_star(), g.e_star(o.corrupt_star).dims());
    }
    auto rep = qrep::verify_tube(o.n, e, es, s.iso());
    Json orbit = Json::array();
    for (const auto& v : rep.tau_orbit) orbit.push_back(verdict_json(v));
    Json star_orbit = Json::array();
    for (const auto& v : rep.star_tau_orbit) star_orbit.push_back(verdict_json(v));
    out.results = Json{{"rank", rep.rank_claimed},
                       {"labeling", labeling_json(g)},
                       {"bricks", bool_array(rep.bricks)},
                       {"hom_dims", rep.hom_dims},
                       {"tau_orbit", orbit},
                       {"period", rep.period},
                       {"pd_at_most_one", bool_array(rep.pd_at_most_one)},
                       {"star_bricks", bool_array(rep.star_bricks)},
                       {"star_hom_dims", rep.star_hom_dims},
                       {"star_tau_orbit", star_orbit},
                       {"star_period", rep.star_period},
                       {"star_pd_at_most_one", bool_array(rep.star_pd_at_most_one)},
                       {"failures", rep.failures}};
    out.passed = rep.passed;
  } else if (verb == "gallery-short-cycle") {
    out.inputs["n"] = std::to_string(o.n);
    out.inputs["field"] = o.field;
    const auto& g = s.gallery(o.n);
    out.field = g.config().field.to_string();
    std::vector<qrep::Representation> ms, ns;
    for (int l = 1; l <= g.mouth_size(); ++l) {
      ms.push_back(g.e_lambda(l));
      ns.push_back(g.e_star_lambda(l));
    }
    if (o.corrupt != 0) {
      out.inputs["corrupt"] = std::to_string(o.corrupt);
      auto& target = ns.at(static_cast<std::size_t>(o.corrupt - 1));
      target = qrep::Representation::with_zero_maps(g.lambda(), target.dims());
    }
    std::vector<std::pair<std::string, qrep::Representation>> xs;
    if (!o.no_formulas) xs = qrep::formula_test_modules(g);
    auto rep = qrep::verify_short_cycle(o.n, ms, ns, xs);
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
      entries.push_back({{"l", e.l},
                         {"class_e", qrep::dim_vector_to_json(e.class_e)},
                         {"class_e_star", qrep::dim_vector_to_json(e.class_e_star)},
                         {"hom_e_e_star", e.hom_e_to_star},
                         {"hom_e_star_e", e.hom_star_to_e},
                         {"top_e", qrep::dim_vector_to_json(e.top_e)},
                         {"socle_e", qrep::dim_vector_to_json(e.socle_e)},
                         {"top_e_star", qrep::dim_vector_to_json(e.top_star)},
                         {"socle_e_star", qrep::dim_vector_to_json(e.socle_star)},
                         {"passed", e.passed}});
    }
    Json formulas = Json::array();
    for (const auto& c : rep.formulas) {
      formulas.push_back({{"x", c.x}, {"l", c.l}, {"i", formula_json(c.first)}, {"ii", formula_json(c.second)}});
    }
    out.results = Json{{"entries", entries},
                       {"formula_triples", rep.formulas.size()},
                       {"formulas", formulas},
                       {"failures", rep.failures}};
    out.passed = rep.passed;
  } else if (verb == "export-gallery") {
    out.inputs["n"] = std::to_string(o.n);
    out.inputs["field"] = o.field;
    add_input("out", o.out);
    namespace fs = std::filesystem;
    fs::path dir = need(o.out, "--out");
    fs::create_directories(dir);
    const auto& g = s.gallery(o.n);
    out.field = g.config().field.to_string();
    const std::string n = std::to_string(o.n);
    const std::string h = "h" + n + ".json", hs = "hstar" + n + ".json", lam = "lambda" + n + ".json";
    Json files = Json::array();
    auto put = [&](const std::string& name, const Json& j) {
      qrep::write_json_file((dir / name).string(), j);
      files.push_back(name);
    };
    put(h, qrep::algebra_to_json(*g.h()));
    put(hs, qrep::algebra_to_json(*g.h_star()));
    put(lam, qrep::algebra_to_json(*g.lambda()));
    for (int l = 1; l <= g.mouth_size(); ++l) {
      const std::string ls = std::to_string(l);
      put("h" + n + "_e" + ls + ".json", qrep::representation_to_json(g.e(l), h));
      put("hstar" + n + "_e" + ls + "star.json", qrep::representation_to_json(g.e_star(l), hs));
      put("e" + ls + ".json", qrep::representation_to_json(g.e_lambda(l), lam));
      put("e" + ls + "star.json", qrep::representation_to_json(g.e_star_lambda(l), lam));
    }
    for (int v = 0; v < g.lambda()->vertex_count(); ++v) {
      const std::string vs = std::to_string(v + 1);
      put("s" + vs + ".json", qrep::representation_to_json(qrep::simple(g.lambda(), v), lam));
      put("p" + vs + ".json", qrep::representation_to_json(qrep::projective(g.lambda(), v), lam));
      put("i" + vs + ".json", qrep::representation_to_json(qrep::injective(g.lambda(), v), lam));
    }
    out.results = Json{{"directory", dir.string()}, {"files", files}};
  } else {
    throw UsageError("unknown verb '" + verb + "'");
  }
  if (out.exit_code == kOk && !out.passed) out.exit_code = kCheckFailed;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hom, Ext and Auslander-Reiten computations over bound quiver algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "seed for randomized isomorphism search");
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--field", o.field, "field for gallery selectors: gf<p> or q");
  };
  auto with_out = [&](CLI::App* sub, const char* what) { sub->add_option("--out", o.out, what); };
  const char* report_out = "write the report to this file";

  auto* info = app.add_subcommand("algebra-info", "basis, dimension and admissibility of an algebra");
  info->add_option("--a", o.algebra, "algebra file or selector")->required();

  std::vector<CLI::App*> one_module;
  for (const char* v : {"rep-validate", "dimvec", "tau", "tau-minus"}) {
    auto* sub = app.add_subcommand(v);
    sub->add_option("--m", o.m, "module file or selector")->required();
    one_module.push_back(sub);
  }
  app.get_subcommand("rep-validate")->description("check every relation on a representation");
  app.get_subcommand("dimvec")->description("dimension vector, top and socle");
  app.get_subcommand("tau")->description("Auslander-Reiten translate D Tr");
  app.get_subcommand("tau-minus")->description("inverse translate Tr D");

  for (const char* v : {"hom", "ext1", "iso"}) {
    auto* sub = app.add_subcommand(v);
    sub->add_option("--m", o.m, "first module")->required();
    sub->add_option("--n", o.n_slot, "second module")->required();
    one_module.push_back(sub);
  }
  app.get_subcommand("hom")->description("dimension of Hom(M, N)");
  app.get_subcommand("hom")->add_flag("--basis", o.with_basis, "also print a basis");
  app.get_subcommand("ext1")->description("dimension of Ext^1(M, N)");
  app.get_subcommand("iso")->description("decide M ~ N, with a witness when isomorphic");

  auto* formula = app.add_subcommand("formula", "length formula check for [M] = [N]");
  formula->add_option("--which", o.which, "i or ii")->check(CLI::IsMember({"i", "ii"}));
  formula->add_option("--x", o.x, "test module X")->required();
  formula->add_option("--m", o.m, "module M")->required();
  formula->add_option("--n", o.n_slot, "module N")->required();
  one_module.push_back(formula);

  for (auto* sub : one_module) {
    sub->add_option("--a", o.algebra, "algebra file or selector the modules live over");
    common(sub);
    with_out(sub, report_out);
  }
  common(info);
  with_out(info, report_out);

  auto* tube = app.add_subcommand("gallery-tube", "verify the tube mouth E_1..E_{n-2}");
  auto* cycle = app.add_subcommand("gallery-short-cycle", "verify the short cycles E_l -> E*_l -> E_l");
  auto* exporter = app.add_subcommand("export-gallery", "write the gallery algebras and modules as JSON");
  for (auto* sub : {tube, cycle, exporter}) {
    sub->add_option("--n", o.n, "gallery parameter, at least 4")->required();
    common(sub);
  }
  tube->add_option("--corrupt", o.corrupt, "replace E_L by its semisimple shadow");
  tube->add_option("--corrupt-star", o.corrupt_star, "replace E*_L by its semisimple shadow");
  cycle->add_option("--corrupt", o.corrupt, "replace E*_L by its semisimple shadow");
  cycle->add_flag("--no-formulas", o.no_formulas, "skip the formula suite");
  with_out(tube, report_out);
  with_out(cycle, report_out);
  exporter->add_option("--out", o.out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    if ((o.corrupt != 0 || o.corrupt_star != 0) && (o.corrupt < 0 || o.corrupt > o.n - 2 || o.corrupt_star < 0 ||
                                                   o.corrupt_star > o.n - 2)) {
      throw UsageError("--corrupt must lie in 1..n-2");
    }
    Session session(o);
    Outcome res = run_verb(verb, o, session);
    Json report{{"verb", verb},
                {"inputs", res.inputs},
                {"field", res.field},
                {"results", res.results},
                {"passed", res.passed}};
    const std::string text = o.format == "json" ? report.dump(2) + "\n" : render_text(verb, report);
    if (!o.out.empty() && verb != "export-gallery") {
      std::ofstream f(o.out);
      if (!f) throw UsageError("cannot write " + o.out);
      f << text;
    } else {
      std::cout << text;
    }
    if (res.exit_code == kUsage) {
      std::cerr << "qrep: " << res.results.value("note", std::string("hypothesis violated")) << '\n';
    }
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "qrep: " << e.what() << '\n';
    return kUsage;
  }
}
