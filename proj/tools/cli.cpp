#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tyw/abelian_group.hpp"
#include "tyw/classify.hpp"
#include "tyw/coideals.hpp"
#include "tyw/error.hpp"
#include "tyw/ty_wha.hpp"
#include "tyw/wha_export.hpp"
#include "tyw/wha_verify.hpp"

namespace tyw::cli {

namespace {

struct Config {
  std::string group = "2";
  std::string bichar = "standard";
  std::string tau = "+";
  double tol = 1e-9;
  std::string json_path;

  std::string wha_action;
  std::string coideal_action;
  std::string classify_action;
  std::string K = "0";
  std::string Z0, Z1, builder;
  int max_mult = 2;
  bool realize = false;
  bool fault_tau = false;
  bool fault_vgm = false;
  bool fault_flip = false;
};

struct Input {
  FiniteAbelianGroup G;
  Bicharacter chi;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ArgumentError("cannot write " + path);
  f << text;
}

Input load(const Config& c) {
  if (!(c.tol > 0)) throw ArgumentError("--tol must be positive");
  auto G = FiniteAbelianGroup::parse(c.group);
  auto chi = c.bichar == "standard" ? Bicharacter::standard(G) : Bicharacter::from_json(G, read_file(c.bichar));
  if (!chi.is_nondegenerate()) throw InvariantError("bicharacter degenerate");
  return {std::move(G), std::move(chi)};
}

int tau_sign(const std::string& t) {
  if (t == "+") return 1;
  if (t == "-") return -1;
  throw ArgumentError("--tau must be + or -");
}

TYAlgebra make_algebra(const Config& c, const Input& in) {
  return TYAlgebra(TYData(in.G, in.chi, tau_sign(c.tau)), Tolerance{c.tol}, Faults{c.fault_tau});
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_elements(const FiniteAbelianGroup& G, const std::string& s, const char* what) {
  std::vector<int> out;
  for (const auto& tok : split(s, ';')) {
    if (tok.empty()) throw ArgumentError(std::string(what) + ": empty entry");
    try {
      out.push_back(G.parse_element(tok));
    } catch (const Error&) {
      throw ArgumentError(std::string(what) + ": malformed element \"" + tok + "\"");
    } catch (const std::exception&) {
      throw ArgumentError(std::string(what) + ": malformed element \"" + tok + "\"");
    }
  }
  return out;
}

// "" -> empty, "all" -> every coset, else representatives separated by ';'.
std::vector<int> parse_cosets(const FiniteAbelianGroup& G, const QuotientGroup& q, const std::string& s, const char* what) {
  if (s.empty()) return {};
  if (s == "all") {
    std::vector<int> v;
    for (int c = 0; c < q.size(); ++c) v.push_back(c);
    return v;
  }
  return cosets_from_reps(G, q, parse_elements(G, s, what));
}

// ---- group

int cmd_group(const Config& c, std::ostream& out) {
  const auto in = load(c);
  const auto& G = in.G;
  out << "factors:";
  for (int f : G.factors()) out << " " << f;
  out << "\norder: " << G.order() << "\nbicharacter: " << in.chi.to_json() << "\n";
  const auto subs = enumerate_subgroups(G);
  out << "subgroups: " << subs.size() << "\n";
  std::size_t w = 1;
  for (const auto& K : subs) w = std::max(w, K.format(G).size());
  for (const auto& K : subs) {
    const auto Kp = orthogonal(in.chi, K);
    out << "  K = " << std::left << std::setw(static_cast<int>(w)) << K.format(G) << "  K^perp = "
        << Kp.format(G) << (K == Kp ? "  [K = K^perp]" : "") << "\n";
  }
  return 0;
}

// ---- wha

int cmd_wha(const Config& c, std::ostream& out) {
  const auto in = load(c);
  const auto B = make_algebra(c, in);
  if (c.wha_action == "export") {
    write_output(c.json_path, export_wha_json(B), out);
    return 0;
  }
  const auto rep = verify_wha_axioms(B);
  out << format_report(rep);
  bool ok = rep.all_passed();
  for (int x = 0; x < B.omega_size(); ++x) {
    const auto cr = B.verify_corepresentation(x);
    const bool pass = cr.ok(c.tol);
    ok = ok && pass;
    out << "corepresentation U^" << B.omega_label(x) << ": " << (pass ? "pass" : "FAIL") << "  residuals "
        << cr.coproduct_residual << " " << cr.counit_residual << " " << cr.partial_isometry_residual << "\n";
  }
  try {
    const auto h = B.haar();
    out << "haar: unique (rank " << h.rank << ", residual " << h.max_residual << ")\n";
  } catch (const StructuralError& e) {
    ok = false;
    out << "haar: FAIL " << e.what() << "\n";
  }
  if (!c.json_path.empty()) {
    nlohmann::ordered_json j;
    j["format"] = "ty-wha-verify/1";
    j["dim"] = rep.dim;
    j["dim_bt"] = rep.dim_bt;
    j["dim_bs"] = rep.dim_bs;
    j["dim_bt_cap_bs"] = rep.dim_bt_cap_bs;
    j["dim_center"] = rep.dim_center;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& ch : rep.checks) {
      checks.push_back({{"name", ch.name}, {"cases", ch.cases}, {"max_residual", ch.max_residual},
                        {"sampled", ch.sampled}, {"passed", ch.passed}});
    }
    j["checks"] = checks;
    j["passed"] = ok;
    write_output(c.json_path, j.dump(2) + "\n", out);
  }
  return ok ? 0 : 1;
}

// ---- coideal

int cmd_coideal(const Config& c, std::ostream& out) {
  const auto in = load(c);
  const auto B = make_algebra(c, in);
  const auto& G = in.G;
  const Subgroup K = Subgroup::generated_by(G, parse_elements(G, c.K, "--K"));
  const Subgroup Kp = orthogonal(in.chi, K);
  const QuotientGroup q0(G, K), q1(G, Kp);

  std::optional<WeakCoideal> w;
  std::optional<CoidealSpec> expect;
  std::vector<int> z0, z1;
  if (!c.builder.empty()) {
    if (!c.Z0.empty() || !c.Z1.empty()) throw ArgumentError("--builder does not take --Z0/--Z1");
    if (c.builder == "I_m_K") {
      w = build_I_m_K(B, K);
    } else if (c.builder == "I_Omega_K") {
      w = build_I_Omega_K(B, K);
    } else {
      throw ArgumentError("--builder must be I_m_K or I_Omega_K");
    }
    expect = CoidealSpec{K, {0}, {}};
  } else {
    z0 = parse_cosets(G, q0, c.Z0, "--Z0");
    z1 = parse_cosets(G, q1, c.Z1, "--Z1");
    if (z0.empty() && z1.empty()) throw ArgumentError("give --Z0 and/or --Z1, or --builder");
    if (c.fault_vgm && (z0.empty() || z1.empty())) throw ArgumentError("--fault-drop-vgm needs an m-part");
    w = build_from_pair(B, K, z0, z1, BuildFaults{c.fault_vgm});
    expect = CoidealSpec{K, z0, z1};
  }

  const auto rep = verify_weak_coideal(B, *w);
  const bool verified = rep.passed();
  const bool unital = is_coideal(B, *w);
  const auto dims = w->dims();
  const auto sdims = spectral_dims(in.chi, *expect);

  nlohmann::ordered_json j;
  j["format"] = "ty-coideal/1";
  j["builder"] = w->builder;
  j["K"] = K.format(G);
  j["K_perp"] = Kp.format(G);
  if (c.builder.empty()) {
    std::vector<std::string> a, b;
    for (int x : z0) a.push_back(G.format(q0.representative(x)));
    for (int x : z1) b.push_back(G.format(q1.representative(x)));
    j["Z0"] = a;
    j["Z1"] = b;
  }
  nlohmann::ordered_json dj;
  for (int x = 0; x < B.omega_size(); ++x) dj[B.omega_label(x)] = dims[x];
  j["dims"] = dj;
  j["dim_A"] = w->dim();
  j["spectral_dims_match"] = dims == sdims;
  bool indec = false;
  if (verified) {
    const auto part = x0_partition(B, *w);
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const auto& bl : part.blocks) {
      std::vector<std::string> labels;
      for (int p : bl) labels.push_back(B.h_label(0, p));
      blocks.push_back(labels);
    }
    j["gamma_blocks"] = blocks;
    j["k0"] = part.k0;
    j["k_m"] = dims[B.m()] / 2;
    indec = is_indecomposable(B, *w);
  }
  std::vector<std::string> gamma;
  for (int a = 0; a < B.hdim(0); ++a) {
    if (std::abs(w->unit[B.unit_index(0, a, 0)]) > c.tol) gamma.push_back(B.h_label(0, a));
  }
  j["unit"] = {{"gamma", gamma}, {"form", "v^0_Gamma (x) vbar^0_Omega"}};
  j["is_coideal"] = unital;
  j["indecomposable"] = indec;
  nlohmann::ordered_json conds = nlohmann::ordered_json::array();
  double worst = 0.0;
  for (const auto& cr : rep.conditions) {
    worst = std::max(worst, cr.max_residual);
    nlohmann::ordered_json e{{"name", cr.name}, {"passed", cr.passed}, {"cases", cr.cases}, {"max_residual", cr.max_residual}};
    if (!cr.witness.empty()) e["witness"] = cr.witness;
    conds.push_back(e);
  }
  j["conditions"] = conds;
  j["max_residual"] = worst;
  j["verified"] = verified;

  if (c.coideal_action == "verify") {
    for (const auto& cr : rep.conditions) {
      out << std::left << std::setw(40) << cr.name << (cr.passed ? " pass" : " FAIL") << "  max residual "
          << cr.max_residual << (cr.witness.empty() ? "" : "  at " + cr.witness) << "\n";
    }
    out << "is_coideal " << (unital ? "true" : "false") << "  indecomposable " << (indec ? "true" : "false") << "\n";
    if (!c.json_path.empty()) write_output(c.json_path, j.dump(2) + "\n", out);
  } else {
    write_output(c.json_path, j.dump(2) + "\n", out);
  }
  return verified ? 0 : 1;
}

// ---- classify

int cmd_classify(const Config& c, std::ostream& out) {
  const auto in = load(c);
  ClassifyOptions opts;
  opts.drop_flip = c.fault_flip;
  ClassificationReport rep = c.classify_action == "g-algebras" ? g_algebra_classes(in.chi, c.max_mult, opts)
                                                                : weak_coideal_classes(in.chi, opts);
  bool ok = rep.burnside_ok();
  if (c.realize) {
    if (rep.theorem != "weak-coideals") throw ArgumentError("--realize applies to weak-coideals");
    const auto B = make_algebra(c, in);
    realize_all(B, rep);
    ok = ok && rep.all_realized_verified();
  }
  if (!c.json_path.empty() && c.json_path != "-") {
    write_output(c.json_path, to_json(in.chi, rep), out);
    out << format_text(in.chi, rep);
  } else if (c.json_path == "-") {
    out << to_json(in.chi, rep);
  } else {
    out << format_text(in.chi, rep);
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Tambara-Yamagami weak Hopf algebra toolkit", "tywha"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--group", c.group, "cyclic factors, e.g. 4 or 2,2")->capture_default_str();
  app.add_option("--bichar", c.bichar, "standard or a JSON file with a \"matrix\"")->capture_default_str();
  app.add_option("--tau", c.tau, "sign of tau: + or -")->capture_default_str();
  app.add_option("--tol", c.tol, "absolute tolerance")->capture_default_str();
  app.add_option("--json", c.json_path, "write the JSON report here (- for stdout)");

  auto* grp = app.add_subcommand("group", "describe G, chi and the subgroup lattice");
  grp->add_subcommand("describe", "subgroups with K^perp")->required();

  auto* wha = app.add_subcommand("wha", "build and check the weak Hopf algebra");
  wha->add_subcommand("verify", "run the axiom suite")->callback([&] { c.wha_action = "verify"; });
  wha->add_subcommand("export", "write ty-wha/1 structure constants")->callback([&] { c.wha_action = "export"; });
  wha->require_subcommand(1);
  wha->add_flag("--fault-flip-tau", c.fault_tau, "negate the tau coefficient in sharp")->group("");

  auto* coi = app.add_subcommand("coideal", "build or verify a weak coideal");
  coi->add_subcommand("build", "JSON report of the construction")->callback([&] { c.coideal_action = "build"; });
  coi->add_subcommand("verify", "condition table")->callback([&] { c.coideal_action = "verify"; });
  coi->require_subcommand(1);
  coi->add_option("--K", c.K, "generators of K separated by ';'")->capture_default_str();
  coi->add_option("--Z0", c.Z0, "coset representatives in G/K separated by ';', or all");
  coi->add_option("--Z1", c.Z1, "coset representatives in G/K^perp separated by ';', or all");
  coi->add_option("--builder", c.builder, "I_m_K or I_Omega_K");
  coi->add_flag("--fault-drop-vgm", c.fault_vgm, "omit one v^g_m from the m-family")->group("");
  coi->add_flag("--fault-flip-tau", c.fault_tau, "negate the tau coefficient in sharp")->group("");

  auto* cls = app.add_subcommand("classify", "enumerate isomorphism classes");
  cls->add_subcommand("weak-coideals", "subset pairs (Z0, Z1)")->callback([&] { c.classify_action = "weak-coideals"; });
  cls->add_subcommand("g-algebras", "multiplicity collections")->callback([&] { c.classify_action = "g-algebras"; });
  cls->require_subcommand(1);
  cls->add_option("--max-mult", c.max_mult, "multiplicity bound for g-algebras")->capture_default_str();
  cls->add_flag("--realize", c.realize, "build and verify every weak-coideal rep");
  cls->add_flag("--fault-drop-flip", c.fault_flip, "omit the flip from the orbit action")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "tywha: " << e.what() << "\n";
    return 2;
  }

  try {
    if (grp->parsed()) return cmd_group(c, out);
    if (wha->parsed()) return cmd_wha(c, out);
    if (coi->parsed()) return cmd_coideal(c, out);
    if (cls->parsed()) return cmd_classify(c, out);
  } catch (const StructuralError& e) {
    err << "tywha: verification failure: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "tywha: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace tyw::cli
