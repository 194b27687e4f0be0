// incgeo: exact incidence-geometry workbench CLI.
//
// Subcommands: flecnode, classify, count, rich, s, assign, chain, bounds,
// and the lab group (gen / run / scale). Configs travel as JSON, polynomials
// as canonical monomial-sum text, reports as deterministic JSON/CSV.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "incgeo/json_io.hpp"

using namespace incgeo;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string first_line(const std::string& s) {
  auto pos = s.find('\n');
  return pos == std::string::npos ? s : s.substr(0, pos);
}

MultiPoly load_surface(const std::string& path) { return parse_poly(first_line(slurp(path))); }

void emit(const Json& j, const std::string& out_path) {
  std::string payload = serialize(j);
  if (out_path.empty())
    std::cout << payload;
  else
    write_file(out_path, payload);
}

std::vector<Var> ambient_vars(size_t dim) {
  std::vector<Var> vars = {Var::x, Var::y, Var::z, Var::w};
  vars.resize(dim);
  return vars;
}

GeneratorSpec spec_from_options(const std::string& family, long g, long n, long m, long a, long b,
                                std::uint64_t seed) {
  auto fam = family_from_string(family);
  if (!fam) throw CLI::ValidationError("--family", "unknown family '" + family + "'");
  GeneratorSpec spec;
  spec.family = *fam;
  spec.g = g;
  spec.n = n;
  spec.m = m;
  spec.a = a;
  spec.b = b;
  spec.seed = seed;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact incidence-geometry workbench"};
  app.require_subcommand(1);

  std::string surface_path, config_path, out_path, csv_path;
  std::vector<std::string> factor_paths;
  std::string var_name_opt = "x";
  std::string bound_name = "TH13A";
  std::string c_literal = "10";
  std::string family = "regulus-grid";
  std::string checks_csv = "bounds";
  std::string sizes_csv = "4,8,16";
  long g = 4, n = 8, m = 16, a = 2, b = 2;
  std::uint64_t seed = 1;
  int rich_r = 2;

  auto* flec = app.add_subcommand("flecnode", "flecnode polynomial and per-factor ruledness");
  flec->add_option("--surface", surface_path, "polynomial text file")->required();
  flec->add_option("--factor", factor_paths, "irreducible factor file (repeatable)");
  flec->add_option("-o,--out", out_path, "output JSON path (default stdout)");

  auto* classify = app.add_subcommand("classify", "exact real quadric classification");
  classify->add_option("--surface", surface_path, "polynomial text file")->required();
  classify->add_option("-o,--out", out_path, "output JSON path");

  auto* count = app.add_subcommand("count", "exact incidence count of a config");
  count->add_option("--config", config_path, "config JSON")->required();
  count->add_option("-o,--out", out_path, "output JSON path");

  auto* rich = app.add_subcommand("rich", "points incident to at least r lines");
  rich->add_option("--config", config_path, "config JSON")->required();
  rich->add_option("--r", rich_r, "richness threshold (>= 2)");
  rich->add_option("-o,--out", out_path, "output JSON path");

  auto* scmd = app.add_subcommand("s", "max lines in a common 2-flat");
  scmd->add_option("--config", config_path, "config JSON")->required();
  scmd->add_option("-o,--out", out_path, "output JSON path");

  auto* assign = app.add_subcommand("assign", "first-containing-component assignment");
  assign->add_option("--config", config_path, "config JSON")->required();
  assign->add_option("-o,--out", out_path, "output JSON path");

  auto* chain = app.add_subcommand("chain", "derivative-chain assignment");
  chain->add_option("--config", config_path, "config JSON")->required();
  chain->add_option("--var", var_name_opt, "differentiation variable (default x)");
  chain->add_option("-o,--out", out_path, "output JSON path");

  long q_param = -1;
  auto* bounds = app.add_subcommand("bounds", "evaluate a named incidence bound");
  bounds->add_option("--config", config_path, "config JSON")->required();
  bounds->add_option("--name", bound_name, "ST|GK3|FOCS4|TH13A|TH13B|TH14A|TH14B|CORMAINX|COR4DX");
  bounds->add_option("--C", c_literal, "explicit constant (rational literal)");
  bounds->add_option("--q", q_param, "hyperplane/quadric richness parameter (default n)");
  bounds->add_option("-o,--out", out_path, "output JSON path");
  bounds->add_option("--csv", csv_path, "CSV summary path (default stdout)");

  size_t target_dim = 3;
  auto* project = app.add_subcommand("project", "seeded generic projection to a lower dimension");
  project->add_option("--config", config_path, "config JSON")->required();
  project->add_option("--dim", target_dim, "target dimension (default 3)");
  project->add_option("--seed", seed, "seed");
  project->add_option("-o,--out", out_path, "output JSON path");

  auto* lab = app.add_subcommand("lab", "generators, experiments, scaling");
  lab->require_subcommand(1);

  auto* lab_gen = lab->add_subcommand("gen", "generate a config with known ground truth");
  lab_gen->add_option("--family", family, "family name")->required();
  lab_gen->add_option("--g", g, "grid size");
  lab_gen->add_option("--n", n, "number of lines");
  lab_gen->add_option("--m", m, "number of points");
  lab_gen->add_option("--a", a, "Elekes a");
  lab_gen->add_option("--b", b, "Elekes b");
  lab_gen->add_option("--seed", seed, "seed");
  lab_gen->add_option("-o,--out", out_path, "output config JSON");

  auto* lab_run = lab->add_subcommand("run", "run checks over a config or family");
  lab_run->add_option("--config", config_path, "config JSON (alternative to --family)");
  lab_run->add_option("--family", family, "family name");
  lab_run->add_option("--g", g, "grid size");
  lab_run->add_option("--n", n, "number of lines");
  lab_run->add_option("--m", m, "number of points");
  lab_run->add_option("--a", a, "Elekes a");
  lab_run->add_option("--b", b, "Elekes b");
  lab_run->add_option("--seed", seed, "seed");
  lab_run->add_option("--checks", checks_csv, "comma list: lemma,bounds");
  lab_run->add_option("--bound", bound_name, "bound name for the bounds check");
  lab_run->add_option("--C", c_literal, "explicit constant");
  lab_run->add_option("-o,--out", out_path, "output report JSON");

  auto* lab_scale = lab->add_subcommand("scale", "scaling trend CSV across sizes");
  lab_scale->add_option("--family", family, "family name")->required();
  lab_scale->add_option("--sizes", sizes_csv, "comma-separated sizes")->required();
  lab_scale->add_option("--bound", bound_name, "bound name");
  lab_scale->add_option("--C", c_literal, "explicit constant");
  lab_scale->add_option("--seed", seed, "seed");
  lab_scale->add_option("-o,--out", csv_path, "output CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*flec) {
      MultiPoly f = load_surface(surface_path);
      FlecnodeResult r = flecnode_poly(f);
      Json j;
      j["surface"] = to_text(f);
      j["zero"] = r.is_zero();
      if (r.is_zero()) {
        j["fl"] = "0";
      } else if (r.fl_expanded) {
        j["fl"] = to_text(*r.fl_expanded);
      } else {
        Json factors = Json::array();
        for (const auto& q : r.fl_factors) factors.push_back(to_text(q));
        j["fl_factors"] = std::move(factors);
      }
      j["true_degree_bound"] = r.true_degree_bound;
      j["construction_log"] = r.construction_log;
      if (!factor_paths.empty()) {
        std::vector<MultiPoly> factors;
        for (const auto& p : factor_paths) factors.push_back(load_surface(p));
        j["verdicts"] = to_json(cayley_salmon_test(f, factors));
      }
      emit(j, out_path);
    } else if (*classify) {
      MultiPoly f = load_surface(surface_path);
      QuadricClassification c = classify_quadric(f);
      Json j;
      j["surface"] = to_text(f);
      j["class"] = to_string(c.cls);
      j["rank"] = c.rank;
      j["signature"] = Json::array({c.positive, c.negative});
      if (c.apex) j["apex"] = to_json(c.apex->c);
      if (c.cls == QuadricClass::REGULUS) {
        // witness directions through a sampled surface point, as certificates
        MultiPoly f3 = f.with_vars({Var::x, Var::y, Var::z});
        for (long x0 = 0; x0 <= 3; ++x0) {
          bool emitted = false;
          for (long y0 = 0; y0 <= 3 && !emitted; ++y0) {
            MultiPoly slice = f3.substitute(
                {{Var::x, MultiPoly::constant(Rational(x0))},
                 {Var::y, MultiPoly::constant(Rational(y0))}});
            if (slice.is_zero() || slice.is_constant()) continue;
            for (const Rational& z0 : rational_roots(to_unipoly(slice, Var::z))) {
              AffPoint p{{Rational(x0), Rational(y0), z0}};
              auto ls = lines_through_point_exist(f3, p);
              if (ls.status == LineSearchStatus::WITNESS) {
                Json w;
                w["point"] = to_json(p.c);
                Json dirs = Json::array();
                for (const auto& d : ls.witnesses) dirs.push_back(to_json(d));
                w["directions"] = std::move(dirs);
                j["witness"] = std::move(w);
                emitted = true;
                break;
              }
            }
          }
          if (emitted) break;
        }
      }
      emit(j, out_path);
    } else if (*count) {
      Config cfg = config_from_json(read_json_file(config_path));
      Json j;
      j["m"] = cfg.points.size();
      j["n"] = cfg.lines.size();
      j["I"] = count_incidences(cfg);
      emit(j, out_path);
    } else if (*rich) {
      Config cfg = config_from_json(read_json_file(config_path));
      auto rp = rich_points(cfg, rich_r);
      Json j;
      j["r"] = rich_r;
      j["count"] = rp.size();
      Json pts = Json::array();
      for (const auto& [p, d] : rp) {
        Json e;
        e["point"] = to_json(p.c);
        e["degree"] = d;
        pts.push_back(std::move(e));
      }
      j["points"] = std::move(pts);
      emit(j, out_path);
    } else if (*scmd) {
      Config cfg = config_from_json(read_json_file(config_path));
      Json j;
      j["s"] = max_coplanar_s(cfg);
      emit(j, out_path);
    } else if (*assign) {
      Config cfg = config_from_json(read_json_file(config_path));
      auto tables = assign_components(cfg);
      Json j;
      j["point_component"] = tables.point_component;
      j["line_component"] = tables.line_component;
      j["cross_incidences"] = tables.cross_incidences;
      j["bound_nD"] = tables.bound_nD;
      j["within_bound"] = tables.within_bound;
      emit(j, out_path);
    } else if (*chain) {
      Config cfg = config_from_json(read_json_file(config_path));
      if (!cfg.surface) throw std::runtime_error("chain: config has no surface");
      auto v = var_from_name(var_name_opt);
      if (!v) throw std::runtime_error("chain: unknown variable " + var_name_opt);
      auto asg = derivative_chain_assign(cfg.surface->f, cfg, *v);
      Json j;
      Json chain_polys = Json::array();
      for (const auto& p : asg.chain) chain_polys.push_back(to_text(p));
      j["chain"] = std::move(chain_polys);
      j["point_level"] = asg.point_level;
      j["line_level"] = asg.line_level;
      j["claim_violations"] = asg.claim_violations;
      emit(j, out_path);
    } else if (*bounds) {
      Config cfg = config_from_json(read_json_file(config_path));
      auto name = bound_from_string(bound_name);
      if (!name) throw std::runtime_error("bounds: unknown bound " + bound_name);
      Rational C = parse_rational(c_literal);
      std::optional<Integer> q_opt;
      if (q_param >= 0) q_opt = Integer(q_param);
      IncidenceReport rep = incidence_report(cfg, {{*name, C}}, q_opt);
      emit(to_json(rep), out_path);
      std::ostringstream csv;
      csv << "name,C,m,n,D,s,I,bound,ratio,holds\n";
      for (const auto& row : rep.bounds) {
        Rational mid = (row.value.lo + row.value.hi) / 2;
        csv << to_string(row.name) << "," << to_string(row.C) << "," << rep.m << "," << rep.n
            << "," << (cfg.surface ? cfg.surface->f.degree() : 0) << "," << rep.s << "," << rep.I
            << "," << decimal_string(mid, 6) << "," << row.ratio << ","
            << (row.holds ? "yes" : "no") << "\n";
      }
      if (csv_path.empty())
        std::cout << csv.str();
      else
        write_file(csv_path, csv.str());
    } else if (*project) {
      Config cfg = config_from_json(read_json_file(config_path));
      auto [proj, desc] = project_generic(cfg, target_dim, seed);
      Json j;
      j["config"] = to_json(proj);
      j["projection"] = to_json(desc);
      emit(j, out_path);
    } else if (*lab_gen) {
      GeneratorSpec spec = spec_from_options(family, g, n, m, a, b, seed);
      Config cfg = gen(spec);
      emit(to_json(cfg), out_path);
    } else if (*lab_run) {
      auto t0 = std::chrono::steady_clock::now();
      std::vector<std::string> checks;
      std::stringstream ss(checks_csv);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) checks.push_back(item);
      auto name = bound_from_string(bound_name);
      if (!name) throw std::runtime_error("lab run: unknown bound " + bound_name);
      Rational C = parse_rational(c_literal);

      Json j;
      if (!config_path.empty()) {
        Config cfg = config_from_json(read_json_file(config_path));
        bool want_lemma = false, want_bounds = false;
        for (const auto& c : checks) {
          want_lemma = want_lemma || c == "lemma";
          want_bounds = want_bounds || c == "bounds";
        }
        std::vector<std::pair<BoundName, Rational>> reqs;
        if (want_bounds) reqs.emplace_back(*name, C);
        IncidenceReport rep = incidence_report(cfg, reqs);
        j["config_file"] = config_path;
        j["seed"] = seed;
        j["report"] = to_json(rep);
        if (want_lemma && cfg.surface && cfg.ambient_dim == 3)
          j["lemma_suite"] = to_json(lemma_suite(cfg, 100, seed));
      } else {
        GeneratorSpec spec = spec_from_options(family, g, n, m, a, b, seed);
        ExperimentResult res = run_experiment(spec, checks, *name, C);
        j = to_json(res);
      }
      emit(j, out_path);
      auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cerr << "lab run: " << dt << " s\n";
    } else if (*lab_scale) {
      auto fam = family_from_string(family);
      if (!fam) throw std::runtime_error("lab scale: unknown family " + family);
      auto name = bound_from_string(bound_name);
      if (!name) throw std::runtime_error("lab scale: unknown bound " + bound_name);
      std::vector<long> sizes;
      std::stringstream ss(sizes_csv);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) sizes.push_back(std::stol(item));
      ScalingReport rep = scaling_report(*fam, sizes, *name, parse_rational(c_literal), seed);
      std::string csv = scaling_csv(rep);
      if (csv_path.empty())
        std::cout << csv;
      else
        write_file(csv_path, csv);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
