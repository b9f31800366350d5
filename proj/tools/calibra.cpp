// calibra: command-line front end for the G2 / Spin(7) structure engine.
// Exit codes: 0 ok, 2 named validation error, 3 parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "calibra/g2.hpp"
#include "calibra/io.hpp"
#include "calibra/spin7.hpp"
#include "calibra/verify.hpp"

using nlohmann::json;
using namespace calibra;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("ParseError", "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail("ParseError", "cannot open " + out_path + " for writing");
  out << report.dump(2) << "\n";
}

json number_or_int(double x) {
  if (std::isfinite(x) && x == std::rint(x) && std::abs(x) <= 9.0e15)
    return json(static_cast<std::int64_t>(x));
  return json(x);
}

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(number_or_int(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json form_json(const AltForm& a) {
  return json::parse(io::FormDocument::from_form(a).to_json());
}

json base_report(const std::string& command, std::uint64_t seed) {
  json r;
  r["command"] = command;
  r["status"] = "ok";
  r["seed"] = seed;
  return r;
}

/// Either a 7-dim or an 8-dim certified structure, recovered from a form doc.
struct AnyStructure {
  std::optional<g2::CrossStructure7> s7;
  std::optional<spin7::CayleyStructure8> s8;
};

AnyStructure recover_structure(const io::FormDocument& doc) {
  AltForm a = doc.to_form();
  AnyStructure out;
  if (a.dim() == 7 && a.degree() == 3)
    out.s7 = g2::recover_metric_from_phi(a);
  else if (a.dim() == 8 && a.degree() == 4)
    out.s8 = spin7::recover_metric_from_Phi(a);
  else
    fail("UnsupportedSignature",
         "expected (dim 7, degree 3) or (dim 8, degree 4)");
  return out;
}

json decomp_json(const DecompReport& rep) {
  json out;
  json comps = json::array();
  for (const auto& c : rep.components) {
    json e;
    e["name"] = c.name;
    e["form"] = form_json(c.part);
    e["residual"] = c.residual;
    comps.push_back(e);
  }
  out["components"] = comps;
  out["recompose_residual"] = rep.recompose_residual;
  out["orthogonality_residual"] = rep.orthogonality_residual;
  return out;
}

int cmd_standard(const std::string& which, const std::string& out_path) {
  AltForm a(7, 3);
  if (which == "phi7")
    a = g2::standard_phi0();
  else if (which == "psi7")
    a = g2::standard_psi0();
  else if (which == "Phi8")
    a = spin7::standard_Phi0();
  else
    fail("ParseError", "--which must be phi7, psi7 or Phi8");
  emit(json::parse(io::FormDocument::from_form(a).to_json()), out_path);
  return 0;
}

int cmd_recover(const std::string& in_path, const std::string& out_path) {
  io::FormDocument doc = io::FormDocument::parse(slurp(in_path));
  AnyStructure st = recover_structure(doc);
  json rep = base_report("recover", 0);
  json payload;
  if (st.s7) {
    payload["dim"] = 7;
    payload["metric"] = matrix_json(st.s7->metric().matrix());
    payload["orientation_sign"] = st.s7->orientation().sign();
  } else {
    payload["dim"] = 8;
    payload["metric"] = matrix_json(st.s8->metric().matrix());
    payload["orientation_sign"] = st.s8->orientation().sign();
    payload["eps"] = st.s8->eps();
  }
  rep["payload"] = payload;
  emit(rep, out_path);
  return 0;
}

int cmd_classify(const std::string& structure_path, const std::string& basis_path,
                 const std::string& out_path) {
  io::FormDocument doc = io::FormDocument::parse(slurp(structure_path));
  AnyStructure st = recover_structure(doc);
  std::vector<Vec> basis = io::parse_vectors(slurp(basis_path));
  Subspace sub{basis};
  json rep = base_report("classify", 0);
  json payload;
  if (st.s7) {
    g2::Classification7 cls = g2::classify_subspace7(*st.s7, sub);
    payload["kind"] = cls.kind == g2::Kind7::Associative     ? "Associative"
                      : cls.kind == g2::Kind7::Coassociative ? "Coassociative"
                                                             : "Generic";
    payload["residual"] = cls.residual;
  } else {
    spin7::Classification8 cls = spin7::classify_cayley(*st.s8, sub);
    payload["kind"] = cls.kind == spin7::Kind8::Cayley ? "Cayley" : "Generic";
    payload["residual"] = cls.residual;
  }
  rep["payload"] = payload;
  emit(rep, out_path);
  return 0;
}

int cmd_decompose(const std::string& structure_path, const std::string& form_path,
                  const std::string& out_path) {
  io::FormDocument sdoc = io::FormDocument::parse(slurp(structure_path));
  AnyStructure st = recover_structure(sdoc);
  AltForm f = io::FormDocument::parse(slurp(form_path)).to_form();
  json rep = base_report("decompose", 0);
  if (st.s7) {
    if (f.degree() == 2)
      rep["payload"] = decomp_json(g2::decompose2_7(*st.s7, f));
    else if (f.degree() == 3)
      rep["payload"] = decomp_json(g2::decompose3_7(*st.s7, f));
    else
      fail("UnsupportedSignature", "dim-7 decomposition wants degree 2 or 3");
  } else {
    if (f.degree() == 2)
      rep["payload"] = decomp_json(spin7::decompose2_8(*st.s8, f));
    else if (f.degree() == 4)
      rep["payload"] = decomp_json(spin7::decompose4_8(*st.s8, f));
    else
      fail("UnsupportedSignature", "dim-8 decomposition wants degree 2 or 4");
  }
  emit(rep, out_path);
  return 0;
}

int cmd_verify(const std::string& structure_path, const std::string& suite,
               std::uint64_t seed, int trials, const std::string& out_path) {
  io::FormDocument doc = io::FormDocument::parse(slurp(structure_path));
  AnyStructure st = recover_structure(doc);
  verify::SuiteResult res =
      st.s7 ? verify::run_suite7(suite, *st.s7, seed, trials)
            : verify::run_suite8(suite, *st.s8, seed, trials);
  json rep = base_report("verify", seed);
  json payload;
  payload["suite"] = res.suite;
  payload["trials"] = res.trials;
  payload["max_residual"] = res.max_residual;
  payload["pass"] = res.pass;
  json checks = json::array();
  for (const auto& [id, residual] : res.checks) {
    json c;
    c["identity"] = id;
    c["max_residual"] = residual;
    checks.push_back(c);
  }
  payload["checks"] = checks;
  rep["payload"] = payload;
  rep["status"] = res.pass ? "ok" : "error";
  emit(rep, out_path);
  return res.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calibra: G2 / Spin(7) structure calculations"};
  app.require_subcommand(1);

  std::string which, in_path, out_path, structure_path, basis_path, form_path,
      suite;
  std::uint64_t seed = 0x5eed;
  int trials = 64;

  CLI::App* c_standard = app.add_subcommand("standard", "emit a standard form");
  c_standard->add_option("--which", which, "phi7 | psi7 | Phi8")->required();
  c_standard->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* c_recover =
      app.add_subcommand("recover", "recover the compatible metric of a form");
  c_recover->add_option("--in", in_path, "form document")->required();
  c_recover->add_option("--out", out_path, "report file (default stdout)");

  CLI::App* c_classify =
      app.add_subcommand("classify", "classify a subspace under a structure");
  c_classify->add_option("--structure", structure_path, "structure form doc")
      ->required();
  c_classify->add_option("--basis", basis_path, "basis vectors doc")->required();
  c_classify->add_option("--out", out_path, "report file (default stdout)");

  CLI::App* c_decompose =
      app.add_subcommand("decompose", "split a form into irreducible parts");
  c_decompose->add_option("--structure", structure_path, "structure form doc")
      ->required();
  c_decompose->add_option("--form", form_path, "form to decompose")->required();
  c_decompose->add_option("--out", out_path, "report file (default stdout)");

  CLI::App* c_verify =
      app.add_subcommand("verify", "run a seeded identity suite");
  c_verify->add_option("--structure", structure_path, "structure form doc")
      ->required();
  c_verify->add_option("--suite", suite, "suite name")->required();
  c_verify->add_option("--seed", seed, "RNG seed");
  c_verify->add_option("--trials", trials, "trials per identity");
  c_verify->add_option("--out", out_path, "report file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_standard->parsed()) return cmd_standard(which, out_path);
    if (c_recover->parsed()) return cmd_recover(in_path, out_path);
    if (c_classify->parsed())
      return cmd_classify(structure_path, basis_path, out_path);
    if (c_decompose->parsed())
      return cmd_decompose(structure_path, form_path, out_path);
    if (c_verify->parsed())
      return cmd_verify(structure_path, suite, seed, trials, out_path);
  } catch (const Error& e) {
    json rep;
    rep["command"] = argv[1] ? argv[1] : "";
    rep["status"] = "error";
    rep["error"] = {{"code", e.code()}, {"message", e.what()}};
    std::cout << rep.dump(2) << "\n";
    return e.code() == "ParseError" ? 3 : 2;
  }
  return 0;
}
