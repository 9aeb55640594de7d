// Command-line front end: parses input files, runs the verdict pipelines and
// emits deterministic reports (key-value text by default, --json for machine
// output). Exit codes: 0 ok, 1 claim failure, 2 input error, 3 violated
// internal invariant.

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liefol/catalog.hpp"
#include "liefol/cohomology.hpp"
#include "liefol/diff_form.hpp"
#include "liefol/input.hpp"
#include "liefol/report.hpp"

using namespace liefol;

namespace {

struct Output {
  bool json = false;
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(Json& report) const {
    if (timing) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      report["timing_ms"] = ms;
    }
    if (json)
      std::cout << report.dump(2) << "\n";
    else
      std::cout << report_text(report);
  }
};

Json base_report(const std::string& command) {
  Json j;
  j["report_version"] = 1;
  j["command"] = command;
  return j;
}

std::vector<std::size_t> parse_index_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    const std::string tok = s.substr(pos, next - pos);
    try {
      out.push_back(std::stoul(tok));
    } catch (const std::exception&) {
      throw InputError("invalid index '" + tok + "' in list");
    }
    pos = next + 1;
  }
  if (out.empty()) throw InputError("empty index list");
  return out;
}

std::vector<ProjPoint> parse_point_list(const std::string& s, std::size_t ncoords) {
  std::vector<ProjPoint> pts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    const std::string tok = s.substr(pos, next - pos);
    QVector v;
    std::size_t cpos = 0;
    while (cpos <= tok.size()) {
      std::size_t cnext = tok.find(':', cpos);
      if (cnext == std::string::npos) cnext = tok.size();
      v.push_back(parse_rational(tok.substr(cpos, cnext - cpos)));
      cpos = cnext + 1;
    }
    if (v.size() != ncoords)
      throw InputError("point '" + tok + "' needs " + std::to_string(ncoords) + " coordinates");
    if (is_zero_vec(v)) throw InputError("zero point '" + tok + "'");
    pts.push_back(ProjPoint{std::move(v)});
    pos = next + 1;
  }
  return pts;
}

// ------------------------------------------------------- input resolution

struct StructureContext {
  LieAlgebra L;
  QMatrix rows;
};

StructureContext structure_context(const StructureInput& in, const std::string& sub_flag) {
  StructureContext ctx{in.algebra, QMatrix()};
  if (!sub_flag.empty()) {
    QMatrix rows(0, 0);
    const auto idx = parse_index_list(sub_flag);
    QMatrix r(idx.size(), in.algebra.dim());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= in.algebra.dim()) throw InputError("--subalgebra index out of range");
      r(i, idx[i]) = 1;
    }
    ctx.rows = std::move(r);
  } else if (in.subalgebra_rows) {
    ctx.rows = *in.subalgebra_rows;
  } else {
    throw InputError("no subalgebra given (use --subalgebra or the file's \"subalgebra\" field)");
  }
  return ctx;
}

struct FieldsContext {
  FieldsInput in;
  std::vector<PolyVectorField> generators;  // specialized subfamily
  std::optional<LinearFieldAlgebra> ambient;
  QMatrix g_rows;  // coordinates of the generators inside the ambient algebra
};

FieldsContext fields_context(FieldsInput in, const std::optional<Rational>& t,
                             const std::string& sub_flag, bool need_ambient) {
  FieldsContext ctx{std::move(in), {}, std::nullopt, QMatrix()};
  std::vector<PolyVectorField> all = ctx.in.fields;
  if (ctx.in.has_param) {
    if (!t) throw InputError("parameterized input: pick a fiber with --t");
    all = specialize_family(all, *t);
  }
  if (!sub_flag.empty()) {
    for (auto i : parse_index_list(sub_flag)) {
      if (i >= all.size()) throw InputError("--subalgebra index out of range");
      ctx.generators.push_back(all[i]);
    }
  } else if (ctx.in.sub_indices) {
    for (auto i : *ctx.in.sub_indices) ctx.generators.push_back(all[i]);
  } else if (ctx.in.sub_rows) {
    for (std::size_t r = 0; r < ctx.in.sub_rows->rows(); ++r) {
      PolyVectorField acc = PolyVectorField::zero(ctx.in.n, false);
      for (std::size_t k = 0; k < all.size(); ++k)
        acc = acc + all[k].scaled((*ctx.in.sub_rows)(r, k));
      ctx.generators.push_back(std::move(acc));
    }
  } else {
    ctx.generators = all;
  }
  if (need_ambient) {
    ctx.ambient = ctx.in.quadric ? linear_fields_from_matrices(so_from_form(*ctx.in.B).basis)
                                 : projective_ambient(ctx.in.n);
    ctx.g_rows = field_rows_mod_euler(*ctx.ambient, ctx.generators);
  }
  return ctx;
}

std::vector<ProjPoint> sample_points(const FieldsContext& ctx, std::size_t samples,
                                     std::uint64_t seed) {
  if (ctx.in.quadric) return quadric_points(QuadricModel{*ctx.in.B}, samples, seed);
  return random_proj_points(ctx.in.n, samples, seed);
}

// ------------------------------------------------------------ subcommands

int cmd_validate(const std::string& file, const Output& out) {
  Json rep = base_report("validate " + file);
  const auto doc = load_input(file);
  int rc = 0;
  if (std::holds_alternative<StructureInput>(doc)) {
    const auto& in = std::get<StructureInput>(doc);
    rep["kind"] = "structure";
    rep["dim"] = in.algebra.dim();
    const auto v = validate(in.algebra);
    Json issues = Json::array();
    for (const auto& issue : v.issues) {
      Json it;
      it["kind"] = issue.kind == ValidationIssue::Antisymmetry ? "antisymmetry" : "jacobi";
      std::string at = "(" + in.algebra.names()[issue.i] + ", " + in.algebra.names()[issue.j];
      if (issue.kind == ValidationIssue::Jacobi) at += ", " + in.algebra.names()[issue.k];
      it["basis_triple"] = at + ")";
      std::string res;
      for (std::size_t l = 0; l < issue.residual.size(); ++l) {
        if (issue.residual[l] == 0) continue;
        if (!res.empty()) res += " + ";
        res += issue.residual[l].str() + "*" + in.algebra.names()[l];
      }
      it["residual"] = res.empty() ? "0" : res;
      issues.push_back(std::move(it));
    }
    rep["issues"] = std::move(issues);
    rep["valid"] = v.ok();
    if (!v.ok()) rc = 1;
    if (in.subalgebra_rows) {
      const auto closure = subalgebra_closure_check(Subalgebra{in.algebra, *in.subalgebra_rows});
      rep["subalgebra_closed"] = closure.closed;
      if (!closure.closed) rc = 1;
    }
  } else {
    const auto& in = std::get<FieldsInput>(doc);
    rep["kind"] = "fields";
    rep["ambient"] = in.quadric ? "quadric in P^" + std::to_string(in.n)
                                : "P^" + std::to_string(in.n);
    rep["parameterized"] = in.has_param;
    Json fields = Json::array();
    bool ok = true;
    for (std::size_t i = 0; i < in.fields.size(); ++i) {
      Json f;
      f["name"] = in.field_names[i];
      const auto deg = in.fields[i].degree();
      f["homogeneous"] = deg.has_value();
      f["degree"] = deg ? Json(*deg) : Json("mixed");
      if (!deg) ok = false;
      fields.push_back(std::move(f));
    }
    rep["fields"] = std::move(fields);
    rep["valid"] = ok;
    if (!ok) rc = 1;
  }
  out.emit(rep);
  return rc;
}

Json rigidity_json(const RigidityReport& r) {
  Json j;
  j["dim_L"] = r.dim_L;
  j["dim_g"] = r.dim_g;
  j["dim_M"] = r.dim_M;
  j["dim_Z1"] = r.dim_Z1;
  j["dim_B1"] = r.dim_B1;
  j["dim_H1"] = r.dim_H1;
  j["dim_invariants"] = r.dim_invariants;
  j["rigid"] = r.rigid;
  return j;
}

int cmd_rigidity(const std::string& file, const std::string& sub_flag,
                 const std::optional<Rational>& t, const Output& out) {
  Json rep = base_report("rigidity " + file);
  const auto doc = load_input(file);
  RigidityReport verdict;
  if (std::holds_alternative<StructureInput>(doc)) {
    const auto ctx = structure_context(std::get<StructureInput>(doc), sub_flag);
    verdict = rigidity_verdict(Subalgebra{ctx.L, ctx.rows});
  } else {
    const auto ctx = fields_context(std::get<FieldsInput>(doc), t, sub_flag, true);
    verdict = rigidity_verdict(Subalgebra{ctx.ambient->algebra, ctx.g_rows});
  }
  rep["rigidity"] = rigidity_json(verdict);
  out.emit(rep);
  return 0;
}

int cmd_cohomology(const std::string& file, std::size_t degree, const std::string& sub_flag,
                   const std::optional<Rational>& t, const Output& out) {
  Json rep = base_report("cohomology " + file + " --degree " + std::to_string(degree));
  const auto doc = load_input(file);
  GModule M;
  std::string module_desc;
  if (std::holds_alternative<StructureInput>(doc)) {
    const auto& in = std::get<StructureInput>(doc);
    if (!sub_flag.empty() || in.subalgebra_rows) {
      const auto ctx = structure_context(in, sub_flag);
      M = quotient_module(Subalgebra{ctx.L, ctx.rows});
      module_desc = "L/g";
    } else {
      M = adjoint_module(in.algebra);
      module_desc = "adjoint";
    }
  } else {
    const auto ctx = fields_context(std::get<FieldsInput>(doc), t, sub_flag, true);
    M = quotient_module(Subalgebra{ctx.ambient->algebra, ctx.g_rows});
    module_desc = "L/g";
  }
  const auto dims = cohomology_dims(M, degree);
  rep["module"] = module_desc;
  rep["dim_module"] = M.dim;
  rep["degree"] = degree;
  rep["dim_Z"] = dims.z;
  rep["dim_B"] = dims.b;
  rep["dim_H"] = dims.h;
  out.emit(rep);
  return 0;
}

int cmd_orbit_dim(const std::string& file, std::size_t samples, std::uint64_t seed,
                  const std::string& sub_flag, const std::optional<Rational>& t,
                  const Output& out) {
  Json rep = base_report("orbit-dim " + file);
  rep["seed"] = seed;
  rep["samples"] = samples;
  const auto doc = load_input(file);
  if (!std::holds_alternative<FieldsInput>(doc))
    throw InputError("orbit-dim needs a fields input");
  const auto ctx = fields_context(std::get<FieldsInput>(doc), t, sub_flag, false);
  const auto pts = sample_points(ctx, samples, seed);
  const auto orbit = generic_orbit_dim(ctx.generators, pts);
  rep["generic_orbit_dim"] = orbit.dim;
  Json log = Json::array();
  for (const auto& s : orbit.log) {
    Json e;
    e["point"] = s.point.str();
    e["tangent_rank"] = s.rank;
    log.push_back(std::move(e));
  }
  rep["sample_log"] = std::move(log);
  out.emit(rep);
  return 0;
}

int cmd_maximality(const std::string& file, std::size_t samples, std::uint64_t seed,
                   const std::string& sub_flag, const std::optional<Rational>& t,
                   const Output& out) {
  Json rep = base_report("maximality " + file);
  rep["seed"] = seed;
  rep["samples"] = samples;
  const auto doc = load_input(file);
  if (!std::holds_alternative<FieldsInput>(doc))
    throw InputError("maximality needs a fields input");
  const auto ctx = fields_context(std::get<FieldsInput>(doc), t, sub_flag, true);
  const auto pts = sample_points(ctx, samples, seed);
  const auto res = tangent_algebra(*ctx.ambient, ctx.g_rows, pts);
  rep["dim_g"] = ctx.g_rows.rows();
  rep["dim_tangent_algebra"] = res.algebra.dim();
  rep["maximal"] = res.maximal;
  rep["verdict_kind"] =
      "probabilistic: necessary conditions at " + std::to_string(samples) + " points";
  rep["stabilized"] = res.stabilized;
  rep["closed"] = res.closure_ok;
  Json dims = Json::array();
  for (auto d : res.dim_log) dims.push_back(d);
  rep["dim_log"] = std::move(dims);
  out.emit(rep);
  return 0;
}

int cmd_family_check(const std::string& file, const std::string& sub_flag, const Output& out) {
  Json rep = base_report("family-check " + file);
  const auto doc = load_input(file);
  if (!std::holds_alternative<FieldsInput>(doc))
    throw InputError("family-check needs a fields input");
  const auto& in = std::get<FieldsInput>(doc);
  std::vector<PolyVectorField> family = in.fields;
  std::vector<std::string> names = in.field_names;
  if (!sub_flag.empty()) {
    std::vector<PolyVectorField> chosen;
    std::vector<std::string> cnames;
    for (auto i : parse_index_list(sub_flag)) {
      if (i >= family.size()) throw InputError("--subalgebra index out of range");
      chosen.push_back(family[i]);
      cnames.push_back(names[i]);
    }
    family = std::move(chosen);
    names = std::move(cnames);
  }
  const auto res = family_closure_check(family);
  rep["closed"] = res.closed;
  if (res.closed) {
    Json table = Json::array();
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        Json e;
        e["bracket"] = "[" + names[i] + ", " + names[j] + "]";
        e["value"] = liefol::detail::combo_str(res.table[i][j], names);
        table.push_back(std::move(e));
      }
    rep["table"] = std::move(table);
  } else {
    Json w;
    w["pair"] = "[" + names[res.witness_pair->first] + ", " + names[res.witness_pair->second] + "]";
    Json comps = Json::array();
    for (const auto& c : res.witness_bracket.comps) comps.push_back(c.str());
    w["bracket_components"] = std::move(comps);
    rep["witness"] = std::move(w);
  }
  out.emit(rep);
  return res.closed ? 0 : 1;
}

int cmd_form(const std::string& file, bool frobenius, const std::string& kupka,
             const std::string& sub_flag, const std::optional<Rational>& t, const Output& out) {
  Json rep = base_report("form " + file);
  const auto doc = load_input(file);
  if (!std::holds_alternative<FieldsInput>(doc)) throw InputError("form needs a fields input");
  const auto ctx = fields_context(std::get<FieldsInput>(doc), t, sub_flag, false);
  const auto form = defining_one_form(ctx.generators);
  rep["omega"] = form.omega.str();
  rep["content"] = form.content.str();
  const auto deg = form.omega.coefficient_degree();
  rep["coefficient_degree"] = deg ? Json(*deg) : Json("mixed");
  rep["euler_contraction_zero"] = form.omega.interior(euler_field(ctx.generators.front().n)).is_zero();
  bool annihilates = true;
  for (const auto& f : ctx.generators)
    if (!form.omega.interior(f).is_zero()) annihilates = false;
  rep["annihilates_generators"] = annihilates;
  rep["plucker"] = "trivially satisfied (q = 1)";
  if (frobenius) {
    const auto fr = frobenius_check(form.omega);
    rep["frobenius_integrable"] = fr.integrable;
    if (!fr.integrable) rep["frobenius_residual"] = fr.residual.str();
  }
  if (!kupka.empty()) {
    const auto pts = parse_point_list(kupka, ctx.generators.front().n + 1);
    const auto labels = kupka_classify(form.omega, pts);
    Json lj = Json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Json e;
      e["point"] = pts[i].str();
      e["class"] = point_class_name(labels[i]);
      lj.push_back(std::move(e));
    }
    rep["kupka"] = std::move(lj);
    rep["kupka_note"] =
        "pointwise classification only; the global singular-locus decomposition is not certified";
  }
  out.emit(rep);
  return 0;
}

Json claims_json(const CatalogRun& run) {
  Json entry;
  entry["name"] = run.name;
  entry["ambient"] = run.ambient;
  Json claims = Json::array();
  for (const auto& c : run.claims) {
    Json cj;
    cj["name"] = c.name;
    if (!c.expected.empty()) cj["expected"] = c.expected;
    cj["computed"] = c.computed;
    cj["provenance"] = provenance_name(c.provenance);
    cj["status"] = c.status == Claim::Status::Pass   ? "pass"
                   : c.status == Claim::Status::Fail ? "fail"
                                                     : "indeterminate";
    claims.push_back(std::move(cj));
  }
  entry["claims"] = std::move(claims);
  Json notes = Json::array();
  for (const auto& n : run.notes) notes.push_back(n);
  entry["notes"] = std::move(notes);
  return entry;
}

int cmd_catalog(const std::string& sub, const std::string& name, const CatalogParams& params,
                bool all, const Output& out) {
  if (sub == "list") {
    Json rep = base_report("catalog list");
    Json entries = Json::array();
    for (const auto& n : catalog_names()) entries.push_back(n);
    rep["entries"] = std::move(entries);
    out.emit(rep);
    return 0;
  }
  std::vector<std::string> names;
  if (all)
    names = catalog_names();
  else if (!name.empty())
    names.push_back(name);
  else
    throw InputError("catalog run needs an entry name or --all");
  Json rep = base_report(all ? "catalog run --all" : "catalog run " + name);
  rep["seed"] = params.seed;
  rep["samples"] = params.samples;
  bool ok = true;
  Json entries = Json::array();
  for (const auto& n : names) {
    const auto run = run_catalog_entry(n, params);
    ok = ok && run.all_checked_pass();
    entries.push_back(claims_json(run));
  }
  rep["entries"] = std::move(entries);
  rep["status"] = ok ? "pass" : "fail";
  out.emit(rep);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigidity of Lie subalgebras of vector fields and their foliations"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  app.add_flag("--json", out.json, "machine-readable JSON output");
  app.add_flag("--timing", out.timing, "append timing_ms (breaks byte-reproducibility)");

  std::string file, sub_flag, t_str, kupka;
  std::size_t degree = 1, samples = 25;
  std::uint64_t seed = 0;
  bool frobenius = false, all = false;

  auto add_common = [&](CLI::App* c, bool with_file = true) {
    if (with_file) c->add_option("file", file, "input document (JSON)")->required();
    c->add_option("--subalgebra", sub_flag, "comma-separated generator indices");
    c->add_option("--t", t_str, "parameter value for specializing a family");
  };

  auto* v = app.add_subcommand("validate", "structure-constant and schema audit");
  v->add_option("file", file)->required();
  auto* rg = app.add_subcommand("rigidity", "Z^1/B^1/H^1 of (g, L/g) and the rigidity verdict");
  add_common(rg);
  auto* coh = app.add_subcommand("cohomology", "Chevalley-Eilenberg dimensions in one degree");
  add_common(coh);
  coh->add_option("--degree", degree, "cohomological degree k");
  auto* od = app.add_subcommand("orbit-dim", "generic orbit dimension by seeded sampling");
  add_common(od);
  od->add_option("--samples", samples);
  od->add_option("--seed", seed);
  auto* mx = app.add_subcommand("maximality", "sampled tangent algebra and maximality verdict");
  add_common(mx);
  mx->add_option("--samples", samples);
  mx->add_option("--seed", seed);
  auto* fc = app.add_subcommand("family-check", "bracket closure of a family over Q(t)");
  fc->add_option("file", file)->required();
  fc->add_option("--subalgebra", sub_flag, "comma-separated generator indices");
  auto* fm = app.add_subcommand("form", "defining 1-form, integrability, Kupka labels");
  add_common(fm);
  fm->add_flag("--frobenius", frobenius, "check omega ^ d omega = 0");
  fm->add_option("--kupka", kupka, "points a:b:c,... to classify");
  auto* cat = app.add_subcommand("catalog", "built-in worked examples");
  std::string cat_sub, cat_name;
  cat->add_option("action", cat_sub, "list | run")->required();
  cat->add_option("name", cat_name, "entry name for run");
  CatalogParams params;
  cat->add_option("--n", params.n, "ambient/projective parameter");
  std::string cat_t;
  cat->add_option("--t", cat_t, "fiber parameter");
  cat->add_option("--samples", params.samples);
  cat->add_option("--seed", params.seed);
  cat->add_flag("--all", all, "run every entry (ordered by name)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::optional<Rational> t;
    if (!t_str.empty()) t = parse_rational(t_str);
    if (v->parsed()) return cmd_validate(file, out);
    if (rg->parsed()) return cmd_rigidity(file, sub_flag, t, out);
    if (coh->parsed()) return cmd_cohomology(file, degree, sub_flag, t, out);
    if (od->parsed()) return cmd_orbit_dim(file, samples, seed, sub_flag, t, out);
    if (mx->parsed()) return cmd_maximality(file, samples, seed, sub_flag, t, out);
    if (fc->parsed()) return cmd_family_check(file, sub_flag, out);
    if (fm->parsed()) return cmd_form(file, frobenius, kupka, sub_flag, t, out);
    if (cat->parsed()) {
      if (cat_sub != "list" && cat_sub != "run")
        throw InputError("catalog action must be 'list' or 'run'");
      if (!cat_t.empty()) params.t = parse_rational(cat_t);
      return cmd_catalog(cat_sub, cat_name, params, all, out);
    }
    throw InputError("no subcommand given");
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
