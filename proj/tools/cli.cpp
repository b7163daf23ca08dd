#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "uniso/chain_lattice.hpp"
#include "uniso/gallery.hpp"
#include "uniso/workspace.hpp"

namespace uniso::cli {

namespace {

using nlohmann::json;

struct UsageError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------- json helpers

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json morphism_json(const Intertwiner& f) {
  json out = json::array();
  const Quiver& q = f.source().quiver();
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    out.push_back({{"vertex", q.vertex_name(v)}, {"matrix", matrix_json(f.at(v))}});
  }
  return out;
}

json element_json(const Representation& r, const ModuleElement& x) {
  json out = json::array();
  for (VertexIndex v = 0; v < x.parts.size(); ++v) {
    json vec = json::array();
    for (const auto& s : x.parts[v]) vec.push_back(s.to_string());
    out.push_back({{"vertex", r.quiver().vertex_name(v)}, {"vector", std::move(vec)}});
  }
  return out;
}

json verdict_json(const IsoVerdict& v) {
  json j = {{"method", v.method},
            {"verdict", to_string(v.verdict)},
            {"reason", v.reason},
            {"hom_dim_lm", v.hom_dim_lm},
            {"hom_dim_ml", v.hom_dim_ml},
            {"examined", v.examined}};
  if (v.isomorphism) j["isomorphism"] = morphism_json(*v.isomorphism);
  if (v.obstruction) j["obstruction"] = *v.obstruction;
  if (v.raw_found) j["raw_found"] = *v.raw_found;
  if (v.exhaustion) j["exhaustion"] = {{"space", v.exhaustion->space}, {"size", v.exhaustion->size}};
  if (v.tuple) {
    json t = json::array();
    for (const auto& f : *v.tuple) t.push_back(morphism_json(f));
    j["tuple"] = std::move(t);
  }
  if (v.fixed_point) {
    j["fixed_point"] = {{"f", morphism_json(v.fixed_point->f)},
                        {"g", morphism_json(v.fixed_point->g)},
                        {"x", element_json(v.fixed_point->f.source(), v.fixed_point->x)}};
  }
  if (v.mono_epi) j["mono_epi"] = {{"mono", morphism_json(v.mono_epi->mono)}, {"epi", morphism_json(v.mono_epi->epi)}};
  return j;
}

// ---------------------------------------------------------------- text helpers

std::string dims_text(const std::vector<std::size_t>& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out + ")";
}

void write_morphism(std::ostream& os, const Intertwiner& f, const std::string& indent) {
  const Quiver& q = f.source().quiver();
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    os << indent << "at " << q.vertex_name(v) << ' ' << (f.at(v).rows() && f.at(v).cols() ? f.at(v).to_string() : "[]")
       << '\n';
  }
}

void write_verdict(std::ostream& os, const IsoVerdict& v) {
  os << v.method << ": " << to_string(v.verdict) << "  (" << v.reason << ")\n";
  os << "  dim Hom(L,M) = " << v.hom_dim_lm << ", dim Hom(M,L) = " << v.hom_dim_ml << '\n';
  if (v.exhaustion) os << "  exhausted " << v.exhaustion->space << ": " << v.exhaustion->size << '\n';
  if (v.tuple) {
    for (std::size_t i = 0; i < v.tuple->size(); ++i) {
      os << "  f" << i + 1 << ":\n";
      write_morphism(os, (*v.tuple)[i], "    ");
    }
  }
  if (v.fixed_point) {
    os << "  f:\n";
    write_morphism(os, v.fixed_point->f, "    ");
    os << "  g:\n";
    write_morphism(os, v.fixed_point->g, "    ");
  }
  if (v.mono_epi) {
    os << "  mono:\n";
    write_morphism(os, v.mono_epi->mono, "    ");
    os << "  epi:\n";
    write_morphism(os, v.mono_epi->epi, "    ");
  }
  if (v.isomorphism) {
    os << "  isomorphism:\n";
    write_morphism(os, *v.isomorphism, "    ");
  }
}

// ---------------------------------------------------------------- commands

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Workspace load(const std::string& path) { return parse_workspace(read_file(path)); }

const Representation& module_arg(const Workspace& ws, const std::string& name) {
  if (!ws.find_module(name)) throw UsageError("no module named '" + name + "'");
  return ws.module(name);
}

struct Options {
  bool json = false;
  std::uint64_t cap = kDefaultSearchCap;
};

int cmd_check(const Options& o, const std::string& path, std::ostream& out) {
  const Workspace ws = load(path);
  json items = json::array();
  std::size_t passed = 0;
  bool capped = false;
  for (const auto& a : ws.assertions) {
    const AssertionResult r = evaluate(ws, a, SearchOptions{o.cap});
    passed += r.passed;
    capped = capped || (r.cap_exceeded && !r.passed);
    if (o.json) {
      json j = {{"line", a.loc.line},
                {"assertion", a.text},
                {"passed", r.passed},
                {"cap_exceeded", r.cap_exceeded},
                {"summary", r.summary}};
      if (r.iso) j["iso"] = verdict_json(*r.iso);
      items.push_back(std::move(j));
    } else {
      out << (r.passed ? "PASS " : r.cap_exceeded ? "CAP  " : "FAIL ") << "line " << a.loc.line << ": " << a.text
          << "\n       " << r.summary << '\n';
    }
  }
  const std::size_t total = ws.assertions.size();
  if (o.json) {
    out << json{{"assertions", items}, {"passed", passed}, {"total", total}}.dump(2) << '\n';
  } else {
    out << passed << "/" << total << " assertions passed\n";
  }
  if (passed == total) return kOk;
  return capped ? kCapExceeded : kAssertionFailed;
}

int cmd_analyze(const Options& o, const std::string& path, const std::string& name, std::ostream& out) {
  const Workspace ws = load(path);
  const Representation& m = module_arg(ws, name);
  const UniserialCertificate u = is_uniserial(m);
  std::vector<std::vector<std::size_t>> rad_series;
  for (const auto& s : radical_series(m)) rad_series.push_back(s.dims());
  std::vector<std::vector<std::size_t>> soc_layers;
  for (Representation q = m; q.total_dim() > 0;) {
    const Subrepresentation s = socle(q);
    soc_layers.push_back(s.dims());
    q = quotient(q, s).module;
  }
  const std::vector<std::size_t> soc = socle(m).dims(), rad = radical(m).dims();
  if (o.json) {
    out << json{{"module", name},
                {"dims", m.dims()},
                {"length", length(m)},
                {"radical", rad},
                {"socle", soc},
                {"radical_series", rad_series},
                {"socle_layers", soc_layers},
                {"uniserial", u.uniserial},
                {"uniform", is_uniform(m)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "module " << name << "\n  dims " << dims_text(m.dims()) << "\n  length " << length(m) << "\n  radical "
      << dims_text(rad) << "\n  socle " << dims_text(soc) << "\n  radical series";
  for (const auto& d : rad_series) out << ' ' << dims_text(d);
  out << "\n  socle layers";
  for (const auto& d : soc_layers) out << ' ' << dims_text(d);
  out << "\n  uniserial " << (u.uniserial ? "yes" : "no") << "\n  uniform " << (is_uniform(m) ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_hom(const Options& o, const std::string& path, const std::string& a, const std::string& b, std::ostream& out) {
  const Workspace ws = load(path);
  const HomBasis h = hom_basis(module_arg(ws, a), module_arg(ws, b));
  if (o.json) {
    json basis = json::array();
    for (const auto& f : h.basis) basis.push_back(morphism_json(f));
    out << json{{"source", a}, {"target", b}, {"dimension", h.dimension()}, {"basis", basis}}.dump(2) << '\n';
    return kOk;
  }
  out << "dim Hom(" << a << ", " << b << ") = " << h.dimension() << '\n';
  for (std::size_t i = 0; i < h.basis.size(); ++i) {
    out << "basis " << i + 1 << ":\n";
    write_morphism(out, h.basis[i], "  ");
  }
  return kOk;
}

int cmd_iso(const Options& o, const std::string& path, const std::string& a, const std::string& b,
            const std::string& method, std::ostream& out) {
  const Workspace ws = load(path);
  const Representation& l = module_arg(ws, a);
  const Representation& m = module_arg(ws, b);
  const SearchOptions opts{o.cap};
  std::vector<IsoVerdict> verdicts;
  if (method == "all") {
    verdicts = iso_all(l, m, opts);
  } else {
    if (!is_iso_method(method)) throw UsageError("unknown method '" + method + "'");
    verdicts.push_back(run_iso_method(method, l, m, opts));
  }
  bool any_iso = false, any_not = false, capped = false;
  for (const auto& v : verdicts) {
    any_iso = any_iso || v.verdict == Verdict::Isomorphic;
    any_not = any_not || v.verdict == Verdict::NotIsomorphic;
    capped = capped || (v.verdict == Verdict::Inconclusive && ws.field->is_finite());
  }
  if (o.json) {
    json arr = json::array();
    for (const auto& v : verdicts) arr.push_back(verdict_json(v));
    out << json{{"source", a}, {"target", b}, {"verdicts", arr}}.dump(2) << '\n';
  } else {
    out << "L = " << a << ", M = " << b << '\n';
    for (const auto& v : verdicts) write_verdict(out, v);
  }
  if (any_iso && !any_not) return kOk;
  if (capped && !any_not) return kCapExceeded;
  return kAssertionFailed;
}

json triangular_json(const TriangularReport& t) {
  return {{"p", t.p},
          {"k", t.k},
          {"ring_c_dim", t.ring_c_dim},
          {"left_ideal_count", t.left_ideal_count},
          {"proper_nonzero_count", t.proper_nonzero_count},
          {"matches_family_list", t.matches_family_list},
          {"simple_ideal_count", t.simple_ideal_count},
          {"simple_ideals_minimal", t.simple_ideals_minimal},
          {"explicit_maps_isomorphisms", t.explicit_maps_isomorphisms},
          {"simple_ideals_pairwise_isomorphic", t.simple_ideals_pairwise_isomorphic},
          {"soc_p_c_dim", t.soc_p_c_dim},
          {"p_mod_soc_c_dim", t.p_mod_soc_c_dim},
          {"p_length", t.p_length},
          {"p_uniserial", t.p_uniserial}};
}

int cmd_gallery(const Options& o, const std::string& name, const std::vector<long long>& params,
                const std::string& field, const std::string& output, std::ostream& out) {
  if (name.empty()) {
    if (o.json) {
      out << json{{"entries", gallery_names()}}.dump(2) << '\n';
    } else {
      for (const auto& n : gallery_names()) out << n << '\n';
    }
    return kOk;
  }
  const auto names = gallery_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw UsageError("unknown gallery entry '" + name + "'");
  const FieldSpec* f = nullptr;
  if (!field.empty()) {
    try {
      f = &FieldSpec::parse(field);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  const GalleryEntry e = gallery(name, params, f);
  const auto failing = e.failing_facts();
  std::string text;
  json report;
  if (e.triangular) {
    report = {{"entry", name}, {"triangular", triangular_json(*e.triangular)}};
    std::ostringstream os;
    for (const auto& [k, v] : report["triangular"].items()) os << k << ' ' << v.dump() << '\n';
    text = os.str();
  } else {
    text = export_gallery(e);
    report = {{"entry", name}, {"workspace", text}};
  }
  json facts = json::array();
  for (const auto& fact : e.facts) {
    const bool ok = std::find(failing.begin(), failing.end(), fact.claim) == failing.end();
    facts.push_back({{"claim", fact.claim}, {"holds", ok}});
  }
  report["facts"] = facts;
  if (!output.empty()) {
    std::ofstream os(output, std::ios::binary);
    if (!os) throw UsageError("cannot write " + output);
    os << text;
  }
  if (o.json) {
    out << report.dump(2) << '\n';
  } else if (output.empty()) {
    out << text;
  } else {
    out << "wrote " << output << '\n';
  }
  return failing.empty() ? kOk : kAssertionFailed;
}

int cmd_lattice(const Options& o, const std::string& scenario, std::ostream& out) {
  const auto names = lattice_scenario_names();
  std::vector<std::string> run = scenario == "all" ? names : std::vector<std::string>{scenario};
  if (scenario != "all" && std::find(names.begin(), names.end(), scenario) == names.end()) {
    throw UsageError("unknown lattice scenario '" + scenario + "'");
  }
  bool ok = true;
  json arr = json::array();
  for (const auto& n : run) {
    const LatticeScenario s = run_lattice_scenario(n);
    ok = ok && s.passed;
    if (o.json) {
      arr.push_back({{"scenario", s.name}, {"passed", s.passed}, {"headline", s.headline}, {"details", s.details}});
    } else {
      out << (s.passed ? "PASS " : "FAIL ") << s.name << ": " << s.headline << '\n';
      for (const auto& d : s.details) out << "  " << d << '\n';
    }
  }
  if (o.json) out << json{{"scenarios", arr}}.dump(2) << '\n';
  return ok ? kOk : kAssertionFailed;
}

std::string located(const std::string& file, const std::string& what) { return file.empty() ? what : file + ":" + what; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"uniso: isomorphism tests for modules over quiver algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable report");
  app.add_option("--cap", o.cap, "search cap")->check(CLI::PositiveNumber);

  std::string file, a, b, method = "direct", name, field, output, scenario;
  std::vector<long long> params;

  auto* check = app.add_subcommand("check", "run every assertion in a workspace");
  check->add_option("file", file)->required();
  auto* analyze = app.add_subcommand("analyze", "dims, length, radical and socle series of a module");
  analyze->add_option("file", file)->required();
  analyze->add_option("module", a)->required();
  auto* hom = app.add_subcommand("hom", "dimension and canonical basis of Hom(A,B)");
  hom->add_option("file", file)->required();
  hom->add_option("A", a)->required();
  hom->add_option("B", b)->required();
  auto* iso = app.add_subcommand("iso", "decide A = B");
  iso->add_option("file", file)->required();
  iso->add_option("A", a)->required();
  iso->add_option("B", b)->required();
  iso->add_option("--method", method, "direct|nfold|two-morphism|mono-epi|all");
  auto* gal = app.add_subcommand("gallery", "list or export gallery entries");
  gal->add_option("name", name);
  gal->add_option("params", params);
  gal->add_option("--field", field, "override the entry's field");
  gal->add_option("-o,--output", output, "write the workspace to a file");
  auto* lat = app.add_subcommand("lattice", "run a chain-lattice scenario");
  lat->add_option("scenario", scenario, "prop-chain|prop-LM|fixpoint|gf-power|w-module|all")->required();
  for (auto* sub : {check, analyze, hom, iso, gal, lat}) sub->add_flag("--json", o.json, "machine-readable report");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, file, out);
    if (analyze->parsed()) return cmd_analyze(o, file, a, out);
    if (hom->parsed()) return cmd_hom(o, file, a, b, out);
    if (iso->parsed()) return cmd_iso(o, file, a, b, method, out);
    if (gal->parsed()) return cmd_gallery(o, name, params, field, output, out);
    if (lat->parsed()) return cmd_lattice(o, scenario, out);
  } catch (const SyntaxError& e) {
    err << located(file, std::to_string(e.location().line) + ":" + std::to_string(e.location().column)) << ": syntax error: "
        << e.detail() << (e.token().empty() ? "" : " near '" + e.token() + "'") << '\n';
    return kUsage;
  } catch (const SemanticError& e) {
    err << located(file, std::to_string(e.location().line) + ":" + std::to_string(e.location().column)) << ": error: "
        << e.detail() << '\n';
    return kSemantic;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kSemantic;
  }
  return kUsage;
}

}  // namespace uniso::cli
