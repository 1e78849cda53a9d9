// Scenario ingestion (versioned JSON schema), built-in worked examples,
// pipeline orchestration, and deterministic report emission in machine
// (JSON) and human renderings.

#ifndef WEYLEXT_SCENARIO_HPP_
#define WEYLEXT_SCENARIO_HPP_

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylext/base.hpp"
#include "weylext/clifford.hpp"
#include "weylext/extension.hpp"
#include "weylext/group.hpp"
#include "weylext/parabolic.hpp"
#include "weylext/rgroup.hpp"
#include "weylext/rootsys.hpp"

namespace weylext {

using json = nlohmann::json;

// Machine reports are JSON documents with sorted keys and integer payloads;
// emission is byte-stable and parse(emit(r)) == r.
struct Report {
  json doc;

  std::string machine() const { return doc.dump(2) + "\n"; }

  static Report parse(const std::string& text) {
    Report r;
    r.doc = json::parse(text);
    return r;
  }

  std::string human() const {
    std::ostringstream os;
    render(doc, os, 0, "");
    return os.str();
  }

  friend bool operator==(const Report& a, const Report& b) {
    return a.doc == b.doc;
  }

 private:
  static void render(const json& j, std::ostringstream& os, int indent,
                     const std::string& key) {
    std::string pad(size_t(indent) * 2, ' ');
    if (j.is_object()) {
      if (!key.empty()) os << pad << key << ":\n";
      for (auto it = j.begin(); it != j.end(); ++it)
        render(it.value(), os, key.empty() ? indent : indent + 1, it.key());
    } else if (j.is_array() &&
               std::any_of(j.begin(), j.end(),
                           [](const json& e) { return e.is_object(); })) {
      os << pad << key << ":\n";
      for (const auto& e : j) {
        os << pad << "  -\n";
        for (auto it = e.begin(); it != e.end(); ++it)
          render(it.value(), os, indent + 2, it.key());
      }
    } else {
      os << pad;
      if (!key.empty()) os << key << ": ";
      os << j.dump();
      os << "\n";
    }
  }
};

namespace detail {

inline const json& need(const json& j, const std::string& key,
                        const std::string& path) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(path + ": missing required key '" + key + "'");
  return j.at(key);
}

inline int need_int(const json& j, const std::string& path) {
  if (!j.is_number_integer())
    throw InputError(path + ": expected an integer");
  return j.get<int>();
}

inline std::string need_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path + ": expected a string");
  return j.get<std::string>();
}

inline std::vector<int> need_int_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(need_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline Mat need_matrix(const json& j, int dim, const std::string& path) {
  std::vector<int> flat = need_int_array(j, path);
  if (int(flat.size()) != dim * dim)
    throw InputError(path + ": expected a row-major " + std::to_string(dim) +
                     "x" + std::to_string(dim) + " matrix");
  Mat m(dim);
  m.a = std::move(flat);
  return m;
}

inline int root_index(const ExtendedWeylGroup& g, const std::vector<int>& v,
                      const std::string& path) {
  int idx = g.rs.index_of(v);
  if (idx < 0)
    throw InputError(path + ": vector " + vec_to_string(v) +
                     " is not a root of the ambient system");
  return idx;
}

// Element specs: {"reflection": [root]}, {"matrix": [...], "component":
// [...]}, {"component_only": [...]}, or {"index": i}.
inline int parse_element(const ExtendedWeylGroup& g, const json& j,
                         const std::string& path) {
  if (j.is_object() && j.contains("reflection")) {
    auto v = need_int_array(j.at("reflection"), path + ".reflection");
    int r = root_index(g, v, path + ".reflection");
    int idx = g.element_index(reflection_matrix(g.rs, r),
                              g.gamma().identity());
    if (idx < 0)
      throw InputError(path + ": reflection is not in the ambient group");
    return idx;
  }
  if (j.is_object() && j.contains("matrix")) {
    Mat m = need_matrix(j.at("matrix"), g.rs.dim, path + ".matrix");
    std::vector<int> comp =
        j.contains("component")
            ? need_int_array(j.at("component"), path + ".component")
            : std::vector<int>(g.gamma().rank(), 0);
    int cidx = g.gamma().index_of(comp);
    int idx = g.element_index(m, cidx);
    if (idx < 0)
      throw InputError(path +
                       ": (matrix, component) pair is not in the ambient "
                       "group");
    return idx;
  }
  if (j.is_object() && j.contains("component_only")) {
    auto comp = need_int_array(j.at("component_only"), path + ".component_only");
    int cidx = g.gamma().index_of(comp);
    int idx = g.element_index(g.action.matrices[cidx], cidx);
    if (idx < 0)
      throw InputError(path + ": component element not found");
    return idx;
  }
  if (j.is_object() && j.contains("index")) {
    int idx = need_int(j.at("index"), path + ".index");
    if (idx < 0 || idx >= g.order())
      throw InputError(path + ".index: out of range");
    return idx;
  }
  throw InputError(path +
                   ": element spec needs one of reflection / matrix / "
                   "component_only / index");
}

inline std::vector<int> parse_root_list(const ExtendedWeylGroup& g,
                                        const json& j,
                                        const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array of roots");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) {
    auto v = need_int_array(j[i], path + "[" + std::to_string(i) + "]");
    out.push_back(root_index(g, v, path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace detail

enum class CocycleKind { kNone, kTrivial, kValues, kCoboundary };

struct Scenario {
  std::string name;
  std::shared_ptr<ExtendedWeylGroup> ambient;

  bool has_sigma = false;
  SigmaDatum sigma;  // validated; points into *ambient
  std::optional<EwSubgroup> w_sigma0;

  CocycleKind cocycle_kind = CocycleKind::kNone;
  int cocycle_modulus = 1;
  std::vector<int> cocycle_values;      // flattened table (kValues)
  std::vector<int> coboundary_function;  // (kCoboundary)
  std::optional<int> chi_exponent;

  struct CensusSpec {
    std::vector<int> invariant_factors;
    int stabilizer_index = 1;
    int r = 1;
    int x_mod_xpi = 1;
    int orbit_size = 1;
  };
  std::optional<CensusSpec> census;

  std::vector<std::vector<int>> thetas_root_indices;  // per requested theta
  bool want_parabolic = false;

  // empty = emit every applicable block
  std::vector<std::string> outputs;
};

inline std::shared_ptr<ExtendedWeylGroup> build_ambient_from_json(
    const json& root, const std::string& path) {
  RootSystem rs;
  const json& rj = root;
  if (rj.contains("type")) {
    std::string t = detail::need_string(rj.at("type"), path + ".type");
    if (t.size() != 1)
      throw InputError(path + ".type: expected one of A/B/C/D");
    int rank = detail::need_int(detail::need(rj, "rank", path), path + ".rank");
    try {
      rs = build_root_system(t[0], rank);
    } catch (const Error& e) {
      throw InputError(path + ": " + e.what());
    }
  } else if (rj.contains("custom")) {
    const json& c = rj.at("custom");
    int dim = detail::need_int(detail::need(c, "dim", path + ".custom"),
                               path + ".custom.dim");
    auto get_vecs = [&](const char* key) {
      std::vector<std::vector<int>> out;
      if (!c.contains(key)) return out;
      const json& a = c.at(key);
      if (!a.is_array())
        throw InputError(path + ".custom." + key + ": expected an array");
      for (size_t i = 0; i < a.size(); ++i)
        out.push_back(detail::need_int_array(
            a[i], path + ".custom." + key + "[" + std::to_string(i) + "]"));
      return out;
    };
    try {
      rs = build_custom_root_system(dim, get_vecs("roots"),
                                    get_vecs("positive"), get_vecs("simple"));
    } catch (const Error& e) {
      throw InputError(path + ".custom: " + e.what());
    }
  } else {
    throw InputError(path + ": need 'type'+'rank' or 'custom'");
  }
  return std::make_shared<ExtendedWeylGroup>(
      build_extended_weyl(rs, ComponentAction::trivial(rs)));
}

inline std::shared_ptr<ExtendedWeylGroup> build_ambient_with_action(
    const json& root_system, const json* action, const std::string& path) {
  auto plain = build_ambient_from_json(root_system, path + ".root_system");
  if (!action) return plain;
  const json& aj = *action;
  auto factors = detail::need_int_array(
      detail::need(aj, "invariant_factors", path + ".component_action"),
      path + ".component_action.invariant_factors");
  const json& mats = detail::need(aj, "generator_matrices",
                                  path + ".component_action");
  if (!mats.is_array() || mats.size() != factors.size())
    throw InputError(path +
                     ".component_action.generator_matrices: need one matrix "
                     "per invariant factor");
  std::vector<Mat> gm;
  for (size_t i = 0; i < mats.size(); ++i)
    gm.push_back(detail::need_matrix(
        mats[i], plain->rs.dim,
        path + ".component_action.generator_matrices[" + std::to_string(i) +
            "]"));
  try {
    ComponentAction act = ComponentAction::from_generators(
        plain->rs, FiniteAbelianGroup(factors), gm);
    return std::make_shared<ExtendedWeylGroup>(
        build_extended_weyl(plain->rs, act));
  } catch (const ResourceError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(path + ".component_action: " + e.what());
  }
}

inline Scenario load_scenario_json(const json& j, const std::string& source) {
  Scenario sc;
  const std::string path = source;
  if (!j.is_object()) throw InputError(path + ": document must be an object");
  int schema =
      detail::need_int(detail::need(j, "schema", path), path + ".schema");
  if (schema != 1)
    throw InputError(path + ".schema: unsupported schema version " +
                     std::to_string(schema));
  sc.name = detail::need_string(detail::need(j, "name", path), path + ".name");

  if (j.contains("root_system")) {
    const json* act =
        j.contains("component_action") ? &j.at("component_action") : nullptr;
    sc.ambient = build_ambient_with_action(j.at("root_system"), act, path);
  }

  if (j.contains("sigma")) {
    if (!sc.ambient)
      throw InputError(path + ".sigma: requires a root_system");
    const ExtendedWeylGroup& g = *sc.ambient;
    const json& sj = j.at("sigma");
    const std::string spath = path + ".sigma";
    EwSubgroup ws;
    const json& wj = detail::need(sj, "w_sigma", spath);
    if (wj.is_string() && wj.get<std::string>() == "full") {
      ws = ew_whole(g);
    } else if (wj.is_object() && wj.contains("generators")) {
      std::vector<int> gens;
      const json& gl = wj.at("generators");
      for (size_t i = 0; i < gl.size(); ++i)
        gens.push_back(detail::parse_element(
            g, gl[i], spath + ".w_sigma.generators[" + std::to_string(i) + "]"));
      ws = ew_generate(g, gens);
    } else {
      throw InputError(spath + ".w_sigma: expected \"full\" or generators");
    }
    std::vector<int> phi1 =
        detail::parse_root_list(g, detail::need(sj, "phi1", spath),
                                spath + ".phi1");
    // close under negation for author convenience
    {
      std::vector<int> closed = phi1;
      for (int r : phi1) {
        std::vector<int> neg = g.rs.roots[r];
        for (int& c : neg) c = -c;
        closed.push_back(detail::root_index(g, neg, spath + ".phi1"));
      }
      phi1 = std::move(closed);
    }
    std::optional<std::vector<int>> positive;
    if (sj.contains("positive"))
      positive = detail::parse_root_list(g, sj.at("positive"),
                                         spath + ".positive");
    std::optional<EwSubgroup> inner;
    if (sj.contains("w_sigma_inner")) {
      std::vector<int> gens;
      const json& gl = detail::need(sj.at("w_sigma_inner"), "generators",
                                    spath + ".w_sigma_inner");
      for (size_t i = 0; i < gl.size(); ++i)
        gens.push_back(detail::parse_element(
            g, gl[i],
            spath + ".w_sigma_inner.generators[" + std::to_string(i) + "]"));
      inner = ew_generate(g, gens);
    }
    std::optional<CliffordInts> ci;
    if (sj.contains("clifford_ints")) {
      const json& cj = sj.at("clifford_ints");
      const std::string cpath = spath + ".clifford_ints";
      ci = CliffordInts{
          detail::need_int(detail::need(cj, "s", cpath), cpath + ".s"),
          detail::need_int(detail::need(cj, "x_mod_xsigma", cpath),
                           cpath + ".x_mod_xsigma"),
          detail::need_int(detail::need(cj, "x1_mod_xsigma", cpath),
                           cpath + ".x1_mod_xsigma")};
    }
    try {
      sc.sigma = validate_sigma_datum(
          make_sigma_datum(g, ws, phi1, positive, inner, ci));
    } catch (const InconsistentDatumError& e) {
      throw InconsistentDatumError(spath + ": " + e.what());
    } catch (const Error& e) {
      throw InputError(spath + ": " + e.what());
    }
    sc.has_sigma = true;
    if (sj.contains("w_sigma0")) {
      const json& w0 = sj.at("w_sigma0");
      if (w0.is_string() && w0.get<std::string>() == "full") {
        sc.w_sigma0 = ew_whole(g);
      } else {
        std::vector<int> gens;
        const json& gl = detail::need(w0, "generators", spath + ".w_sigma0");
        for (size_t i = 0; i < gl.size(); ++i)
          gens.push_back(detail::parse_element(
              g, gl[i],
              spath + ".w_sigma0.generators[" + std::to_string(i) + "]"));
        sc.w_sigma0 = ew_generate(g, gens);
      }
    }
  }

  if (j.contains("cocycle")) {
    const json& cj = j.at("cocycle");
    const std::string cpath = path + ".cocycle";
    if (cj.is_string() && cj.get<std::string>() == "trivial") {
      sc.cocycle_kind = CocycleKind::kTrivial;
      sc.cocycle_modulus = 1;
    } else if (cj.is_object() && cj.contains("values")) {
      sc.cocycle_kind = CocycleKind::kValues;
      sc.cocycle_modulus = detail::need_int(
          detail::need(cj, "modulus", cpath), cpath + ".modulus");
      const json& vals = cj.at("values");
      if (!vals.is_array())
        throw InputError(cpath + ".values: expected an array of rows");
      for (size_t r = 0; r < vals.size(); ++r) {
        auto row = detail::need_int_array(
            vals[r], cpath + ".values[" + std::to_string(r) + "]");
        if (row.size() != vals.size())
          throw InputError(cpath + ".values: table must be square");
        for (int v : row) sc.cocycle_values.push_back(v);
      }
    } else if (cj.is_object() && cj.contains("coboundary")) {
      sc.cocycle_kind = CocycleKind::kCoboundary;
      sc.cocycle_modulus = detail::need_int(
          detail::need(cj, "modulus", cpath), cpath + ".modulus");
      sc.coboundary_function = detail::need_int_array(
          cj.at("coboundary"), cpath + ".coboundary");
    } else {
      throw InputError(cpath + ": expected \"trivial\", values, or coboundary");
    }
  }

  if (j.contains("central_character"))
    sc.chi_exponent = detail::need_int(j.at("central_character"),
                                       path + ".central_character");

  if (j.contains("clifford_census")) {
    const json& cj = j.at("clifford_census");
    const std::string cpath = path + ".clifford_census";
    Scenario::CensusSpec cs;
    cs.invariant_factors = detail::need_int_array(
        detail::need(cj, "invariant_factors", cpath),
        cpath + ".invariant_factors");
    cs.stabilizer_index = detail::need_int(
        detail::need(cj, "stabilizer_index", cpath),
        cpath + ".stabilizer_index");
    cs.r = detail::need_int(detail::need(cj, "r", cpath), cpath + ".r");
    cs.x_mod_xpi = detail::need_int(detail::need(cj, "x_mod_xpi", cpath),
                                    cpath + ".x_mod_xpi");
    cs.orbit_size = detail::need_int(detail::need(cj, "orbit_size", cpath),
                                     cpath + ".orbit_size");
    sc.census = cs;
  }

  if (j.contains("outputs")) {
    const json& oj = j.at("outputs");
    if (!oj.is_array())
      throw InputError(path + ".outputs: expected an array of block names");
    static const std::vector<std::string> known = {
        "rgroup",   "semidirect",      "dimension", "constituents",
        "section5", "clifford_census", "parabolic"};
    for (size_t i = 0; i < oj.size(); ++i) {
      std::string name = detail::need_string(
          oj[i], path + ".outputs[" + std::to_string(i) + "]");
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw InputError(path + ".outputs[" + std::to_string(i) +
                         "]: unknown block '" + name + "'");
      sc.outputs.push_back(name);
    }
  }

  if (j.contains("parabolic")) {
    if (!sc.ambient)
      throw InputError(path + ".parabolic: requires a root_system");
    sc.want_parabolic = true;
    const json& pj = j.at("parabolic");
    if (pj.contains("thetas")) {
      const json& ts = pj.at("thetas");
      if (!ts.is_array())
        throw InputError(path + ".parabolic.thetas: expected an array");
      for (size_t i = 0; i < ts.size(); ++i)
        sc.thetas_root_indices.push_back(detail::parse_root_list(
            *sc.ambient, ts[i],
            path + ".parabolic.thetas[" + std::to_string(i) + "]"));
    }
  }
  return sc;
}

inline Scenario load_scenario_file(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) throw InputError(file_path + ": cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(file_path + ": " + e.what());
  }
  return load_scenario_json(j, file_path);
}

// --- report assembly ------------------------------------------------------

namespace detail {

inline json census_json(const std::map<int, int>& census) {
  json arr = json::array();
  for (auto& [ord, cnt] : census) arr.push_back(json::array({ord, cnt}));
  return arr;
}

inline json root_names(const ExtendedWeylGroup& g,
                       const std::vector<int>& root_indices) {
  json arr = json::array();
  for (int r : root_indices) arr.push_back(g.rs.root_name(r));
  return arr;
}

}  // namespace detail

inline Report run_scenario(const Scenario& sc) {
  Report rep;
  rep.doc["schema"] = 1;
  rep.doc["name"] = sc.name;

  if (sc.has_sigma) {
    const ExtendedWeylGroup& g = *sc.ambient;
    const SigmaDatum& d = sc.sigma;
    EwSubgroup w1 = reflection_subgroup(d);
    EwSubgroup r = r_group(d);
    GroupTable rt = ew_subgroup_table(r);
    rep.doc["w_sigma"] = {{"order", d.w_sigma.order()}};
    rep.doc["w_phi1"] = {{"order", w1.order()}};
    json rg;
    rg["order"] = r.order();
    rg["census"] = detail::census_json(order_census(rt));
    json labels = json::array();
    for (int m : r.members) labels.push_back(g.label(m));
    rg["elements"] = labels;
    rep.doc["r_group"] = rg;

    SemidirectDecomposition sd = semidirect_decompose(d);
    rep.doc["semidirect"] = {{"ok", sd.check.ok},
                             {"normal", sd.check.normal_ok},
                             {"trivial_intersection",
                              sd.check.trivial_intersection},
                             {"orders_multiply", sd.check.order_product},
                             {"covers", sd.check.covers}};

    DimensionReport dim = dim_commuting_algebra(d);
    rep.doc["dim_commuting_algebra"] = dim.dimension;
    json dj;
    dj["value"] = dim.dimension;
    dj["by_rgroup_order"] = dim.by_rgroup_order;
    dj["by_index"] = dim.by_index;
    if (dim.by_inner)
      dj["by_inner"] = *dim.by_inner;
    else
      dj["by_inner"] = nullptr;

    // constituents (cocycle defaults to trivial)
    Cocycle coc = Cocycle::trivial(rt, 1);
    if (sc.cocycle_kind == CocycleKind::kValues)
      coc = Cocycle::from_values(rt, sc.cocycle_modulus, sc.cocycle_values);
    else if (sc.cocycle_kind == CocycleKind::kCoboundary)
      coc = Cocycle::coboundary(rt, sc.cocycle_modulus,
                                sc.coboundary_function);
    int chi = sc.chi_exponent.value_or(coc.modulus == 1 ? 0 : 1);
    std::vector<Constituent> parts = parameterize_components(d, coc, chi);
    json cj = json::array();
    long long deg2 = 0;
    for (const auto& p : parts) {
      cj.push_back({{"id", p.id},
                    {"degree", p.degree},
                    {"multiplicity", p.multiplicity}});
      deg2 += (long long)p.degree * p.degree;
    }
    rep.doc["constituents"] = cj;
    dj["by_sum_deg_squared"] = deg2;
    rep.doc["dimension"] = dj;

    if (d.clifford_ints && sc.w_sigma0) {
      Section5Report s5 = section5_identity_check(d, *sc.w_sigma0);
      rep.doc["section5"] = {{"s", s5.s},
                             {"x_mod_xsigma", s5.x_mod_xsigma},
                             {"x1_mod_xsigma", s5.x1_mod_xsigma},
                             {"lhs", s5.lhs},
                             {"w_order_ratio", s5.ratio},
                             {"dim_c_sigma", s5.dim_c_sigma},
                             {"dim_c_sigma0", s5.dim_c_sigma0}};
    }
  }

  if (sc.census) {
    FiniteAbelianGroup gamma(sc.census->invariant_factors);
    CliffordInstance inst(gamma, sc.census->stabilizer_index, sc.census->r,
                          sc.census->x_mod_xpi);
    RestrictionCensus cen = restriction_census(inst, sc.census->orbit_size);
    json pairs = json::array();
    for (auto [r, x] : solve_multiplicity(gamma, inst.stabilizer_index))
      pairs.push_back(json::array({r, x}));
    rep.doc["clifford_census"] = {
        {"gamma_order", gamma.order()},
        {"stabilizer_index", cen.stabilizer_index},
        {"multiplicity", cen.multiplicity},
        {"orbit_size", cen.orbit_size},
        {"restriction_length", cen.restriction_length},
        {"induction_length", cen.induction_length},
        {"admissible_pairs", pairs}};
  }

  if (sc.want_parabolic) {
    const ExtendedWeylGroup& g = *sc.ambient;
    json pj;
    EwSubgroup base = base_normalizer(g);
    pj["base_normalizer_order"] = base.order();
    json per_theta = json::array();
    for (const auto& troots : sc.thetas_root_indices) {
      ParabolicDatum pd = ParabolicDatum::build(g, troots);
      EwSubgroup stab = theta_stabilizer(pd);
      std::vector<int> image = n_levi_component_image(pd);
      std::vector<int> cusp = cuspidal_levi_components(pd);
      json tj;
      tj["theta"] = detail::root_names(g, pd.theta);
      tj["stabilizer_order"] = stab.order();
      tj["n_levi_component_count"] = int(image.size());
      tj["cuspidal_component_count"] = int(cusp.size());
      tj["n_levi_is_cuspidal"] = is_cuspidal_levi(pd, image);
      per_theta.push_back(tj);
    }
    pj["per_theta"] = per_theta;
    json anomalies = json::array();
    for (const auto& a : containment_anomalies(g)) {
      anomalies.push_back({{"theta_small", detail::root_names(g, a.theta_small)},
                           {"theta_large", detail::root_names(g, a.theta_large)},
                           {"witness", g.label(a.witness)}});
    }
    pj["containment_anomalies"] = anomalies;
    MinimalNParabolicReport mn = minimal_nparabolic_exists(g);
    json mj;
    mj["exists"] = mn.exists;
    if (!mn.exists)
      mj["witness_theta"] = detail::root_names(g, mn.witness_theta);
    pj["minimal_nparabolic"] = mj;
    rep.doc["parabolic"] = pj;
  }

  if (!sc.outputs.empty()) {
    static const std::map<std::string, std::vector<std::string>> keys_of = {
        {"rgroup", {"w_sigma", "w_phi1", "r_group"}},
        {"semidirect", {"semidirect"}},
        {"dimension", {"dimension", "dim_commuting_algebra"}},
        {"constituents", {"constituents"}},
        {"section5", {"section5"}},
        {"clifford_census", {"clifford_census"}},
        {"parabolic", {"parabolic"}}};
    std::set<std::string> keep{"schema", "name"};
    for (const std::string& block : sc.outputs)
      for (const std::string& key : keys_of.at(block)) keep.insert(key);
    json filtered;
    for (auto it = rep.doc.begin(); it != rep.doc.end(); ++it)
      if (keep.count(it.key())) filtered[it.key()] = it.value();
    rep.doc = std::move(filtered);
  }

  return rep;
}

// --- built-ins -------------------------------------------------------------

inline std::vector<int> parse_theta_names(const ExtendedWeylGroup& g,
                                          const std::string& spec) {
  // comma-separated names like "e3-e4,e3+e4"; empty means the empty set
  std::vector<int> out;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string tok = spec.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? spec.size() : comma + 1;
    if (tok.empty()) continue;
    size_t op = tok.find_first_of("+-", 1);
    if (tok.size() < 5 || tok[0] != 'e' || op == std::string::npos)
      throw InputError("theta: expected tokens like e3-e4, got '" + tok + "'");
    int i = std::stoi(tok.substr(1, op - 1));
    if (tok[op + 1] != 'e')
      throw InputError("theta: expected tokens like e3-e4, got '" + tok + "'");
    int jj = std::stoi(tok.substr(op + 2));
    if (i < 1 || jj < 1 || i > g.rs.dim || jj > g.rs.dim)
      throw InputError("theta: coordinate out of range in '" + tok + "'");
    std::vector<int> v(g.rs.dim, 0);
    v[i - 1] = 1;
    v[jj - 1] += tok[op] == '-' ? -1 : 1;
    int idx = g.rs.index_of(v);
    if (idx < 0)
      throw InputError("theta: '" + tok + "' is not a root here");
    out.push_back(idx);
  }
  return out;
}

inline std::shared_ptr<ExtendedWeylGroup> make_even_orthogonal_shadow(int n) {
  // D_n with the one-coordinate sign change as the outer involution
  RootSystem rs = build_root_system('D', n);
  Mat c(n);
  for (int i = 0; i < n; ++i) c.at(i, i) = (i == n - 1) ? -1 : 1;
  ComponentAction act = ComponentAction::from_generators(
      rs, FiniteAbelianGroup({2}), {c});
  return std::make_shared<ExtendedWeylGroup>(build_extended_weyl(rs, act));
}

inline Report run_builtin(const std::string& name,
                          const std::map<std::string, std::string>& params) {
  auto get_param = [&](const std::string& key,
                       const std::string& fallback) -> std::string {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };

  if (name == "d8-principal") {
    // principal series of the swap-extended SL2 x SL2 shadow: the ambient
    // is A1 x A1 realized as D2, with the coordinate sign change swapping
    // the two simple roots
    Scenario sc;
    sc.name = "d8-principal";
    sc.ambient = make_even_orthogonal_shadow(2);
    sc.sigma = validate_sigma_datum(
        make_sigma_datum(*sc.ambient, ew_whole(*sc.ambient), {}));
    sc.has_sigma = true;
    sc.cocycle_kind = CocycleKind::kTrivial;
    return run_scenario(sc);
  }

  if (name == "o2n-theta") {
    int n = std::stoi(get_param("n", "4"));
    if (n < 2 || n > 6)
      throw InputError("o2n-theta: n must be between 2 and 6");
    Scenario sc;
    sc.name = "o2n-theta(n=" + std::to_string(n) + ",theta=" +
              get_param("theta", "") + ")";
    sc.ambient = make_even_orthogonal_shadow(n);
    sc.want_parabolic = true;
    sc.thetas_root_indices.push_back(
        parse_theta_names(*sc.ambient, get_param("theta", "")));
    return run_scenario(sc);
  }

  if (name == "o8-ind-counts") {
    // counting shadow for induction from the two order-8 Levi shadows:
    // the component group is Z/2, the sigma0 stabilizer meets both
    // components, and induction to the disconnected Levi splits in two
    Scenario sc;
    sc.name = "o8-ind-counts";
    Scenario::CensusSpec cs;
    cs.invariant_factors = {2};
    cs.stabilizer_index = 2;
    cs.r = 1;
    cs.x_mod_xpi = 2;
    cs.orbit_size = 1;
    sc.census = cs;
    Report rep = run_scenario(sc);
    // at the ambient-group level the two induced pieces split the induced
    // representation from the connected Levi; the pair shares constituents
    // without being equivalent
    int terms = rep.doc["clifford_census"]["induction_length"].get<int>();
    json split;
    split["terms"] = json::array();
    split["terms"].push_back("Ind(sigma2)");
    split["terms"].push_back("Ind(sigma2 x eta)");
    split["term_count"] = terms;
    split["intertwining_dimension_total"] = terms;
    split["pair"] = {{"first", "Ind from connected Levi"},
                     {"second", "Ind(sigma2)"},
                     {"nontrivial_intertwining", true},
                     {"equivalent", false}};
    rep.doc["induced_splitting"] = split;
    return rep;
  }

  if (name == "o2-cuspidality") {
    // rank-one shadow with an empty root system and the outer component
    // acting by -1: the full group is not cuspidal, the cuspidal Levi over
    // the identity component is connected
    RootSystem rs = build_custom_root_system(1, {}, {});
    Mat minus(1);
    minus.at(0, 0) = -1;
    ComponentAction act = ComponentAction::from_generators(
        rs, FiniteAbelianGroup({2}), {minus});
    auto amb = std::make_shared<ExtendedWeylGroup>(
        build_extended_weyl(rs, act));
    ParabolicDatum pd = ParabolicDatum::build(*amb, {});
    std::vector<int> cusp = cuspidal_levi_components(pd);
    std::vector<int> full;
    for (int c = 0; c < amb->gamma().order(); ++c) full.push_back(c);
    Report rep;
    rep.doc["schema"] = 1;
    rep.doc["name"] = "o2-cuspidality";
    rep.doc["cuspidality"] = {
        {"cuspidal_levi_component_count", int(cusp.size())},
        {"cuspidal_levi_connected", cusp.size() == 1},
        {"full_group_cuspidal", is_cuspidal_levi(pd, full)}};
    return rep;
  }

  throw InputError(
      "unknown builtin '" + name +
      "'; available: d8-principal, o2n-theta, o8-ind-counts, o2-cuspidality");
}

// --- group-table and double-coset reports -----------------------------------

namespace detail {

inline std::string fmt_double(double v, const char* spec) {
  char buf[64];
  if (v == 0.0) v = 0.0;  // normalize -0
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

inline std::string fmt_complex(const std::complex<double>& z) {
  char buf[80];
  double re = z.real() == 0.0 ? 0.0 : z.real();
  double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::snprintf(buf, sizeof(buf), "%.6f%+.6fi", re, im);
  return buf;
}

}  // namespace detail

inline json load_json_file(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) throw InputError(file_path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(file_path + ": " + e.what());
  }
}

inline GroupTable group_table_from_json(const json& j,
                                        const std::string& path) {
  const json& mult = detail::need(j, "mult", path);
  if (!mult.is_array()) throw InputError(path + ".mult: expected rows");
  std::vector<std::vector<int>> rows;
  for (size_t i = 0; i < mult.size(); ++i)
    rows.push_back(detail::need_int_array(
        mult[i], path + ".mult[" + std::to_string(i) + "]"));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (size_t i = 0; i < j.at("labels").size(); ++i)
      labels.push_back(detail::need_string(
          j.at("labels")[i], path + ".labels[" + std::to_string(i) + "]"));
  }
  try {
    return GroupTable::build(std::move(rows), std::move(labels));
  } catch (const ResourceError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline Report chartable_report_from_json(const json& j,
                                         const std::string& path) {
  int schema = detail::need_int(detail::need(j, "schema", path),
                                path + ".schema");
  if (schema != 1)
    throw InputError(path + ".schema: unsupported schema version");
  GroupTable g = group_table_from_json(j, path);
  CharacterTable t = character_table(g);
  Report rep;
  rep.doc["schema"] = 1;
  rep.doc["name"] = j.contains("name") ? j.at("name").get<std::string>()
                                       : std::string("chartable");
  rep.doc["group_order"] = g.order();
  rep.doc["class_count"] = int(t.classes.size());
  json sizes = json::array();
  for (int s : t.class_sizes) sizes.push_back(s);
  rep.doc["class_sizes"] = sizes;
  json reps = json::array();
  for (int r : t.representatives) reps.push_back(g.label(r));
  rep.doc["class_representatives"] = reps;
  json chars = json::array();
  for (size_t i = 0; i < t.values.size(); ++i) {
    json c;
    c["degree"] = t.degrees[i];
    json vals = json::array();
    for (const auto& z : t.values[i]) vals.push_back(detail::fmt_complex(z));
    c["values"] = vals;
    if (t.exact_values) {
      json exps = json::array();
      for (const auto& u : t.exact[i])
        exps.push_back(json::array({u.num, u.den}));
      c["exponents"] = exps;
    }
    chars.push_back(c);
  }
  rep.doc["characters"] = chars;
  rep.doc["orthogonality_residual"] =
      detail::fmt_double(t.orthogonality_residual, "%.3e");
  rep.doc["degree_residual"] = detail::fmt_double(t.degree_residual, "%.3e");
  return rep;
}

inline Report chartable_report_from_file(const std::string& file_path) {
  return chartable_report_from_json(load_json_file(file_path), file_path);
}

inline Report doublecosets_report_from_json(const json& j,
                                            const std::string& path) {
  int schema = detail::need_int(detail::need(j, "schema", path),
                                path + ".schema");
  if (schema != 1)
    throw InputError(path + ".schema: unsupported schema version");
  const json& gj = detail::need(j, "group", path);
  Report rep;
  rep.doc["schema"] = 1;
  rep.doc["name"] = j.contains("name") ? j.at("name").get<std::string>()
                                       : std::string("doublecosets");
  json parts = json::array();
  if (gj.contains("root_system")) {
    const json* act =
        gj.contains("component_action") ? &gj.at("component_action") : nullptr;
    auto amb =
        build_ambient_with_action(gj.at("root_system"), act, path + ".group");
    auto parse_side = [&](const char* key) {
      std::vector<int> gens;
      const json& side = detail::need(j, key, path);
      const json& gl = detail::need(side, "generators", path + "." + key);
      for (size_t i = 0; i < gl.size(); ++i)
        gens.push_back(detail::parse_element(
            *amb, gl[i],
            path + "." + std::string(key) + ".generators[" +
                std::to_string(i) + "]"));
      return ew_generate(*amb, gens);
    };
    EwSubgroup left = parse_side("left");
    EwSubgroup right = parse_side("right");
    auto census = double_coset_census(*amb, left, right);
    rep.doc["group_order"] = amb->order();
    rep.doc["left_order"] = left.order();
    rep.doc["right_order"] = right.order();
    for (const auto& info : census)
      parts.push_back({{"size", info.size},
                       {"representative", amb->label(info.representative)},
                       {"length_proxy", info.length_proxy}});
  } else {
    GroupTable g = group_table_from_json(gj, path + ".group");
    auto parse_side = [&](const char* key) {
      const json& side = detail::need(j, key, path);
      auto gens = detail::need_int_array(
          detail::need(side, "generators", path + "." + key),
          path + "." + std::string(key) + ".generators");
      try {
        return generate_subgroup(g, gens);
      } catch (const Error& e) {
        throw InputError(path + "." + std::string(key) + ": " + e.what());
      }
    };
    Subgroup left = parse_side("left");
    Subgroup right = parse_side("right");
    auto parts_raw = double_cosets(g, left, right);
    rep.doc["group_order"] = g.order();
    rep.doc["left_order"] = left.order();
    rep.doc["right_order"] = right.order();
    for (const auto& p : parts_raw)
      parts.push_back(
          {{"size", int(p.size())}, {"representative", g.label(p.front())}});
  }
  rep.doc["double_coset_count"] = int(parts.size());
  rep.doc["double_cosets"] = parts;
  return rep;
}

inline Report doublecosets_report_from_file(const std::string& file_path) {
  return doublecosets_report_from_json(load_json_file(file_path), file_path);
}

}  // namespace weylext

#endif  // WEYLEXT_SCENARIO_HPP_
