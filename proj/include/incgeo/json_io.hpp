#pragma once

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

#include "incgeo/flecnode.hpp"
#include "incgeo/lab.hpp"
#include "incgeo/poly_io.hpp"
#include "incgeo/projection.hpp"
#include "incgeo/surfaces.hpp"

namespace incgeo {

// Deterministic serialization: ordered keys, all rationals as strings.
using Json = nlohmann::ordered_json;

inline Json to_json(const QVec& v) {
  Json arr = Json::array();
  for (const auto& c : v) arr.push_back(to_string(c));
  return arr;
}

inline QVec qvec_from_json(const Json& j) {
  QVec out;
  for (const auto& e : j) out.push_back(parse_rational(e.get<std::string>()));
  return out;
}

inline Json to_json(const Config& cfg) {
  Json j;
  j["ambient_dim"] = cfg.ambient_dim;
  j["points"] = Json::array();
  for (const auto& p : cfg.points) j["points"].push_back(to_json(p.c));
  j["lines"] = Json::array();
  for (const auto& ell : cfg.lines) {
    Json l;
    l["base"] = to_json(ell.base.c);
    l["direction"] = to_json(ell.dir);
    if (ell.contained) l["contained"] = true;
    j["lines"].push_back(std::move(l));
  }
  if (cfg.surface) {
    Json s;
    s["f"] = to_text(cfg.surface->f);
    s["factors"] = Json::array();
    for (const auto& q : cfg.surface->factors) s["factors"].push_back(to_text(q));
    s["component_meta"] = Json::array();
    for (const auto& cm : cfg.surface->component_meta) {
      Json m;
      m["is_plane"] = cm.is_plane;
      if (cm.cone_apex) m["cone_apex"] = to_json(cm.cone_apex->c);
      if (cm.is_regulus) m["is_regulus"] = *cm.is_regulus;
      s["component_meta"].push_back(std::move(m));
    }
    j["surface"] = std::move(s);
  }
  return j;
}

inline Config config_from_json(const Json& j) {
  Config cfg;
  cfg.ambient_dim = j.at("ambient_dim").get<size_t>();
  for (const auto& p : j.at("points")) cfg.points.push_back(AffPoint{qvec_from_json(p)});
  for (const auto& l : j.at("lines")) {
    ProjLine ell = make_line(AffPoint{qvec_from_json(l.at("base"))},
                             qvec_from_json(l.at("direction")));
    ell.contained = l.value("contained", false);
    cfg.lines.push_back(std::move(ell));
  }
  if (j.contains("surface")) {
    const Json& s = j.at("surface");
    SurfaceModel sm;
    std::vector<Var> ambient = {Var::x, Var::y, Var::z};
    if (cfg.ambient_dim == 2) ambient = {Var::x, Var::y};
    if (cfg.ambient_dim == 4) ambient = {Var::x, Var::y, Var::z, Var::w};
    sm.f = parse_poly(s.at("f").get<std::string>()).with_vars(ambient);
    if (s.contains("factors"))
      for (const auto& q : s.at("factors"))
        sm.factors.push_back(parse_poly(q.get<std::string>()).with_vars(ambient));
    if (s.contains("component_meta"))
      for (const auto& m : s.at("component_meta")) {
        ComponentMeta cm;
        cm.is_plane = m.value("is_plane", false);
        if (m.contains("cone_apex")) cm.cone_apex = AffPoint{qvec_from_json(m.at("cone_apex"))};
        if (m.contains("is_regulus")) cm.is_regulus = m.at("is_regulus").get<bool>();
        sm.component_meta.push_back(std::move(cm));
      }
    cfg.surface = std::move(sm);
  }
  cfg.validate();
  return cfg;
}

inline Json to_json(const IncidenceReport& rep) {
  Json j;
  j["m"] = rep.m;
  j["n"] = rep.n;
  j["I"] = rep.I;
  Json rich;
  for (const auto& [r, count] : rep.rich) rich[std::to_string(r)] = count;
  j["rich_points"] = std::move(rich);
  j["s"] = rep.s;
  if (rep.conical_count >= 0) j["conical_count"] = rep.conical_count;
  if (rep.cross_incidences >= 0) j["cross_incidences"] = rep.cross_incidences;
  if (!rep.per_component.empty()) {
    Json rows = Json::array();
    for (const auto& row : rep.per_component) {
      Json r;
      r["component"] = row.component;
      r["points"] = row.points;
      r["lines"] = row.lines;
      rows.push_back(std::move(r));
    }
    j["per_component"] = std::move(rows);
  }
  j["bounds"] = Json::array();
  for (const auto& row : rep.bounds) {
    Json b;
    b["name"] = to_string(row.name);
    b["C"] = to_string(row.C);
    b["value_lo"] = to_string(row.value.lo);
    b["value_hi"] = to_string(row.value.hi);
    b["value"] = decimal_string((row.value.lo + row.value.hi) / 2, 6);
    b["ratio"] = row.ratio;
    b["holds"] = row.holds;
    j["bounds"].push_back(std::move(b));
  }
  return j;
}

inline Json to_json(const LemmaSuiteReport& rep) {
  Json j;
  j["generator_sums"] = Json::array();
  for (const auto& fr : rep.generator_sums) {
    Json f;
    f["component"] = fr.component;
    f["degree"] = fr.degree;
    f["probes"] = fr.probes;
    f["contained_probes"] = fr.contained_probes;
    f["max_sum"] = fr.max_sum;
    f["violations"] = fr.violations;
    j["generator_sums"].push_back(std::move(f));
  }
  Json c4;
  c4["applicable"] = rep.nonconical_degree.applicable;
  if (rep.nonconical_degree.applicable) {
    c4["bound"] = rep.nonconical_degree.bound;
    c4["max_line_degree"] = rep.nonconical_degree.max_line_degree;
    c4["violations"] = rep.nonconical_degree.violations;
    c4["pruned_points"] = rep.nonconical_degree.pruned_points;
    c4["surviving_points"] = rep.nonconical_degree.surviving_points;
  }
  j["nonconical_degree"] = std::move(c4);
  Json r2;
  r2["applicable"] = rep.rich2.applicable;
  if (rep.rich2.applicable) {
    r2["count"] = rep.rich2.count;
    r2["bound"] = rep.rich2.bound;
    r2["ok"] = rep.rich2.ok;
  } else {
    r2["excluded_reason"] = rep.rich2.excluded_reason;
  }
  j["rich2"] = std::move(r2);
  return j;
}

inline Json to_json(const GeneratorSpec& spec) {
  Json j;
  j["family"] = to_string(spec.family);
  switch (spec.family) {
    case Family::REGULUS_GRID:
    case Family::VARIETY_4D_XYZ: j["g"] = spec.g; break;
    case Family::PLANE_GRID_ELEKES:
      j["a"] = spec.a;
      j["b"] = spec.b;
      break;
    default:
      j["n"] = spec.n;
      j["m"] = spec.m;
      break;
  }
  j["seed"] = spec.seed;
  return j;
}

inline Json to_json(const ExperimentResult& res) {
  Json j;
  j["spec"] = to_json(res.spec);
  j["report"] = to_json(res.report);
  if (res.lemma) j["lemma_suite"] = to_json(*res.lemma);
  j["checks"] = Json::array();
  for (const auto& c : res.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["detail"] = c.detail;
    j["checks"].push_back(std::move(cj));
  }
  return j;
}

inline Json to_json(const ProjectionDescription& d) {
  Json j;
  j["directions"] = Json::array();
  for (const auto& w : d.directions) j["directions"].push_back(to_json(w));
  Json drops = Json::array();
  for (size_t k : d.dropped_coords) drops.push_back(k);
  j["dropped_coords"] = std::move(drops);
  return j;
}

inline Json to_json(const std::vector<FactorVerdict>& verdicts) {
  Json arr = Json::array();
  for (const auto& fv : verdicts) {
    Json j;
    j["factor"] = to_text(fv.factor);
    j["verdict"] = fv.verdict == RuledVerdict::NOT_RULED ? "NOT_RULED" : "RULED_EVIDENCE";
    if (fv.certificate) j["certificate"] = to_json(fv.certificate->c);
    j["note"] = fv.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

inline std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace incgeo
