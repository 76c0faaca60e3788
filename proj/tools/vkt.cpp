// vkt: command-line front end for the vk library.
//
// Exit codes: 0 success or decided, 1 property violation, 2 usage or input error.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vk/acceptance.hpp"
#include "vk/dancis.hpp"
#include "vk/homology.hpp"
#include "vk/io.hpp"
#include "vk/obstruction.hpp"
#include "vk/pachner.hpp"
#include "vk/rng.hpp"
#include "vk/surgery.hpp"

namespace {

using vk::io::Json;
constexpr const char* kVersion = "0.1.0";

struct Options {
  std::string input, format = "json", manifest, output;
  // gen
  std::string kind;
  int dim = 2, n = 0, d = 1, k = 1;
  std::string face;
  // homology
  std::string coeff = "gf2";
  // obstruction
  int target_dim = -1, schedule = 0;
  bool emit_witness = false;
  std::string cochain;
  // pachner / surgery
  std::string sigma, tau, move_json, trace, witness;
  int steps = 1;
  std::uint64_t seed = 0;
  // verify
  std::vector<int> only;
};

struct Run {
  Options o;
  std::ostringstream out;
  std::map<std::string, std::string> digests;
  std::string command;

  std::string read(const std::string& path) {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
      text = vk::io::read_file(path);
    }
    digests[path] = vk::io::fnv1a_hex(text);
    return text;
  }

  vk::io::NamedComplex load(const std::string& path) {
    if (path.empty()) throw vk::Error("--input is required");
    auto c = vk::io::parse_complex(read(path));
    if (c.complex.empty()) throw vk::Error((path == "-" ? "stdin" : path) + ": no faces");
    return c;
  }

  Json load_json(const std::string& path) {
    try {
      return Json::parse(read(path));
    } catch (const Json::parse_error& e) {
      throw vk::Error(path + ": malformed JSON: " + e.what());
    }
  }

  void emit_complex(const vk::Complex& c, const std::string& name) {
    if (o.format == "text")
      out << vk::io::complex_to_text(c, name);
    else
      out << vk::io::complex_to_json(c, name).dump() << "\n";
  }

  void emit(const Json& j) { out << j.dump() << "\n"; }

  static std::size_t budget() {
    if (const char* env = std::getenv("VKT_CELL_BUDGET")) {
      try {
        return static_cast<std::size_t>(std::stoull(env));
      } catch (const std::exception&) {
        throw vk::Error(std::string("VKT_CELL_BUDGET is not a number: ") + env);
      }
    }
    return 1000000;
  }

  static void guard(const vk::Complex& c) {
    const auto cells = vk::count_deleted_product_cells(c);
    if (cells > budget())
      throw vk::Error("deleted product would have " + std::to_string(cells) +
                      " cells, over the budget of " + std::to_string(budget()) +
                      " (set VKT_CELL_BUDGET to raise it)");
  }
};

vk::Simplex parse_simplex(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ',' || c == '[' || c == ']') c = ' ';
  std::istringstream in(t);
  std::vector<vk::Vertex> vs;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      vs.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw vk::Error("bad vertex label '" + tok + "' in '" + s + "'");
    }
  }
  return vk::Simplex(vs);
}

vk::MoveDescriptor parse_move(Run& r) {
  if (!r.o.move_json.empty()) {
    Json j;
    try {
      j = Json::parse(r.o.move_json);
    } catch (const Json::parse_error& e) {
      throw vk::Error(std::string("--move: malformed JSON: ") + e.what());
    }
    auto t = vk::io::trace_from_json(j.is_array() ? j : Json::array({j}));
    if (t.size() != 1) throw vk::Error("--move must describe exactly one move");
    return t[0];
  }
  if (r.o.sigma.empty() || r.o.tau.empty()) throw vk::Error("give --move or --sigma and --tau");
  return {parse_simplex(r.o.sigma), parse_simplex(r.o.tau)};
}

Json diagnostics_json(const vk::TransportDiagnostics& d) {
  Json j;
  j["identity"] = d.identity;
  j["gamma_checked"] = d.gamma_checked;
  j["gamma_nonzero"] = d.gamma_nonzero;
  j["gamma_in_T_checked"] = d.gamma_in_T_checked;
  j["zeta_checked"] = d.zeta_checked;
  j["problematic_patched"] = d.problematic_patched;
  j["removed_cells"] = d.removed_cells;
  j["added_cells"] = d.added_cells;
  return j;
}

int cmd_gen(Run& r) {
  const auto& o = r.o;
  if (o.kind == "boundary-simplex") {
    r.emit_complex(vk::boundary_simplex(o.dim), "boundary-simplex-" + std::to_string(o.dim));
  } else if (o.kind == "vk-complex") {
    auto c = vk::skeleton(vk::Complex::full_simplex(vk::first_vertices(2 * o.d + 3)), o.d);
    r.emit_complex(c, "vk-complex-" + std::to_string(o.d));
  } else if (o.kind == "cyclic") {
    r.emit_complex(vk::cyclic_sphere(o.n, o.dim),
                   "cyclic-" + std::to_string(o.n) + "-" + std::to_string(o.dim));
  } else if (o.kind == "skeleton") {
    auto in = r.load(o.input);
    r.emit_complex(vk::skeleton(in.complex, o.k), in.name + "-skeleton-" + std::to_string(o.k));
  } else if (o.kind == "stellar") {
    auto in = r.load(o.input);
    r.emit_complex(vk::stellar_subdivide(in.complex, parse_simplex(o.face)), in.name + "-stellar");
  } else {
    throw vk::Error("unknown --kind '" + o.kind + "'");
  }
  return 0;
}

int cmd_missing(Run& r) {
  auto in = r.load(r.o.input);
  Json j = Json::array();
  for (const auto& m : vk::missing_faces(in.complex, r.o.k)) j.push_back(vk::io::to_json(m));
  r.emit(j);
  return 0;
}

int cmd_homology(Run& r) {
  auto in = r.load(r.o.input);
  Json j;
  j["coeff"] = r.o.coeff;
  j["reduced"] = true;
  Json betti = Json::array();
  if (r.o.coeff == "gf2") {
    auto b = vk::betti_gf2(in.complex);
    for (int i = 0; i <= in.complex.dim(); ++i) betti.push_back(b.at(i));
    j["betti"] = betti;
  } else if (r.o.coeff == "int") {
    auto h = vk::betti_int(in.complex);
    Json torsion = Json::array();
    for (int i = 0; i <= in.complex.dim(); ++i) {
      betti.push_back(h.free_rank(i));
      Json t = Json::array();
      for (const auto& f : h.torsion_at(i)) t.push_back(f.str());
      torsion.push_back(t);
    }
    j["betti"] = betti;
    j["torsion"] = torsion;
  } else {
    throw vk::Error("--coeff must be gf2 or int");
  }
  r.emit(j);
  return 0;
}

int cmd_obstruction(Run& r) {
  auto in = r.load(r.o.input);
  Run::guard(in.complex);
  vk::DeletedProduct dp(in.complex);
  const int target = r.o.target_dim >= 0 ? r.o.target_dim : 2 * std::max(in.complex.dim(), 0);
  auto rep = vk::obstruction(dp, target, r.o.schedule);
  if (!r.o.emit_witness) rep.witness.reset();
  r.emit(vk::io::report_to_json(rep));
  if (!r.o.cochain.empty()) {
    std::ofstream f(r.o.cochain);
    if (!f) throw vk::Error("cannot write " + r.o.cochain);
    f << vk::io::cochain_to_json(vk::moment_cochain(dp, target, rep.schedule)).dump() << "\n";
  }
  return 0;
}

int cmd_pachner(Run& r, const std::string& action) {
  if (action == "walk") {
    vk::io::NamedComplex start{"boundary-simplex-" + std::to_string(r.o.dim),
                               vk::boundary_simplex(r.o.dim)};
    if (!r.o.input.empty()) start = r.load(r.o.input);
    auto w = vk::random_walk(start.complex, r.o.steps, r.o.seed);
    Json j;
    j["rng"] = vk::kRngAlgorithm;
    j["seed"] = r.o.seed;
    j["trace"] = vk::io::trace_to_json(w.trace);
    j["result"] = vk::io::complex_to_json(w.result, start.name + "-walk");
    r.emit(j);
    return 0;
  }
  auto in = r.load(r.o.input);
  if (action == "list") {
    r.emit(vk::io::trace_to_json(vk::applicable_moves(in.complex)));
    return 0;
  }
  if (action == "apply") {
    auto m = parse_move(r);
    if (auto why = vk::move_obstacle(in.complex, m); !why.empty())
      throw vk::Error("move " + m.str() + " is not applicable: " + why, vk::Error::Kind::property);
    r.emit_complex(vk::apply_move(in.complex, m), in.name);
    return 0;
  }
  if (action == "replay") {
    auto trace = vk::io::trace_from_json(r.load_json(r.o.trace));
    r.emit_complex(vk::replay(in.complex, trace), in.name);
    return 0;
  }
  throw vk::Error("unknown pachner action '" + action + "'");
}

int cmd_surgery(Run& r, const std::string& action) {
  auto in = r.load(r.o.input);
  if (r.o.face.empty()) throw vk::Error("--face is required");
  const vk::Simplex M = parse_simplex(r.o.face);
  if (action == "verify-theorem") {
    auto trace = vk::io::trace_from_json(r.load_json(r.o.trace));
    Run::guard(vk::add_face(vk::skeleton(vk::replay(in.complex, trace), M.dim()), M));
    auto rep = vk::verify_missing_face_theorem(in.complex, trace, M, r.o.schedule);
    Json j;
    j["face"] = vk::io::to_json(M);
    j["steps"] = rep.steps;
    j["witness"] = vk::io::pair_chain_to_json(rep.witness);
    j["witness_is_cycle"] = rep.witness_is_cycle;
    j["pairing"] = rep.pairing;
    j["direct_vanishes"] = rep.direct_vanishes;
    j["agrees"] = rep.agrees;
    j["diagnostics"] = diagnostics_json(rep.diagnostics);
    r.emit(j);
    return rep.agrees ? 0 : 1;
  }
  const auto m = parse_move(r);
  const int d = in.complex.dim() / 2;
  if (action == "transport") {
    auto ctx = vk::SkeletonMoveContext::from_move(in.complex, m, d, {M});
    Run::guard(ctx.L());
    vk::PairChain omega(2 * d);
    if (!r.o.witness.empty()) {
      omega = vk::io::pair_chain_from_json(r.load_json(r.o.witness), 2 * d);
    } else {
      auto rep = vk::obstruction(ctx.K(), 2 * d, r.o.schedule);
      if (!rep.witness) throw vk::Error("obstruction of K vanishes; nothing to transport",
                                        vk::Error::Kind::property);
      omega = *rep.witness;
    }
    auto a = vk::check_assumptions(ctx);
    if (!a.ok) throw vk::Error(a.violation, vk::Error::Kind::property);
    auto t = vk::transport_witness(ctx, omega);
    const int pairing = vk::evaluate(ctx.L(), 2 * d, t.omega, r.o.schedule);
    Json j;
    j["witness"] = vk::io::pair_chain_to_json(t.omega);
    j["pairing"] = pairing;
    j["diagnostics"] = diagnostics_json(t.diagnostics);
    r.emit(j);
    return pairing == 1 ? 0 : 1;
  }
  if (action == "missing-face") {
    const vk::Vertex v0 = M.minus(m.tau).empty() ? -1 : M.minus(m.tau)[0];
    vk::SkeletonMoveContext ctx(vk::skeleton(in.complex, d),
                                vk::add_face(vk::skeleton(vk::apply_move(in.complex, m), d), M),
                                m.sigma, m.tau, d, v0, {M});
    Run::guard(ctx.L());
    auto a = vk::check_assumptions(ctx);
    if (!a.ok) throw vk::Error(a.violation, vk::Error::Kind::property);
    auto w = vk::missing_face_witness(ctx, M);
    const int pairing = vk::evaluate(ctx.L(), 2 * d, w, r.o.schedule);
    Json j;
    j["witness"] = vk::io::pair_chain_to_json(w);
    j["pairing"] = pairing;
    r.emit(j);
    return pairing == 1 ? 0 : 1;
  }
  throw vk::Error("unknown surgery action '" + action + "'");
}

int cmd_dancis(Run& r) {
  auto in = r.load(r.o.input);
  auto rec = vk::reconstruct(in.complex, r.o.d);
  r.emit_complex(rec.complex, in.name.empty() ? "reconstructed" : in.name + "-reconstructed");
  if (!rec.pure) {
    std::cerr << "vkt: reconstruction is not a pure " << 2 * r.o.d << "-complex\n";
    return 1;
  }
  const int D = 2 * r.o.d;
  const auto h = vk::betti_gf2(rec.complex);
  bool sphere = vk::skeleton(rec.complex, r.o.d) == vk::skeleton(in.complex, r.o.d);
  for (int i = -1; i <= D; ++i) sphere = sphere && h.at(i) == (i == D ? 1 : 0);
  if (!sphere) {
    std::cerr << "vkt: reconstruction is not a homology " << D << "-sphere with the given "
              << r.o.d << "-skeleton\n";
    return 1;
  }
  return 0;
}

int cmd_hvector(Run& r) {
  auto in = r.load(r.o.input);
  const int d = r.o.target_dim >= 0 ? r.o.target_dim : in.complex.dim() + 1;
  Json j = Json::array();
  for (auto h : vk::h_vector(in.complex, d)) j.push_back(h);
  r.emit(j);
  return 0;
}

int cmd_verify(Run& r) {
  vk::AcceptanceOptions opts;
  opts.only = r.o.only;
  int failed = 0;
  opts.on_result = [&](const vk::CriterionResult& c) {
    std::cerr << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << "\n";
  };
  Json j = Json::array();
  for (const auto& c : vk::run_acceptance(opts)) {
    failed += c.passed ? 0 : 1;
    Json e;
    e["id"] = c.id;
    e["title"] = c.title;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    j.push_back(std::move(e));
  }
  r.emit(j);
  return failed == 0 ? 0 : 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_replay(const std::string& path, std::ostream& out, std::ostream& err) {
  Json m;
  try {
    m = Json::parse(vk::io::read_file(path));
  } catch (const Json::parse_error& e) {
    throw vk::Error(path + ": malformed manifest: " + e.what());
  }
  if (!m.contains("argv") || !m["argv"].is_array()) throw vk::Error("manifest lacks argv");
  std::vector<std::string> args{"vkt"};
  for (const auto& a : m["argv"]) args.push_back(a.get<std::string>());
  if (m.contains("input_digests"))
    for (const auto& [file, digest] : m["input_digests"].items())
      if (file != "-" && vk::io::fnv1a_hex(vk::io::read_file(file)) != digest.get<std::string>())
        err << "vkt: warning: " << file << " changed since the manifest was written\n";
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Run r;
  auto& o = r.o;
  CLI::App app{"Z2 van Kampen obstruction and Pachner-move toolkit", "vkt"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.add_option("--manifest", o.manifest, "write the run manifest here ('-' for stderr)");
  app.add_option("--format", o.format, "complex output format")->check(CLI::IsMember({"json", "text"}));

  auto add_input = [&](CLI::App* s) { return s->add_option("-i,--input", o.input, "complex file, '-' for stdin"); };

  auto* gen = app.add_subcommand("gen", "generate a complex");
  gen->add_option("--kind", o.kind)->required()->check(
      CLI::IsMember({"boundary-simplex", "skeleton", "cyclic", "stellar", "vk-complex"}));
  gen->add_option("--dim", o.dim, "sphere dimension");
  gen->add_option("--n", o.n, "vertex count (cyclic)");
  gen->add_option("--d", o.d, "d for the van Kampen complex");
  gen->add_option("--k", o.k, "skeleton dimension");
  gen->add_option("--face", o.face, "face to subdivide, e.g. 0,1,2");
  add_input(gen);

  auto* missing = app.add_subcommand("missing", "list missing faces of a dimension");
  add_input(missing)->required();
  missing->add_option("--k", o.k, "face dimension")->required();

  auto* hom = app.add_subcommand("homology", "reduced Betti numbers");
  add_input(hom)->required();
  hom->add_option("--coeff", o.coeff)->check(CLI::IsMember({"gf2", "int"}));

  auto* obs = app.add_subcommand("obstruction", "decide the van Kampen obstruction");
  add_input(obs)->required();
  obs->add_option("--target-dim", o.target_dim, "degree r (default 2 dim)");
  obs->add_option("--schedule", o.schedule, "moment-curve schedule");
  obs->add_flag("--emit-witness", o.emit_witness);
  obs->add_option("--cochain", o.cochain, "also dump the intersection cochain here");

  auto* pach = app.add_subcommand("pachner", "bistellar moves");
  std::string pach_action;
  pach->add_option("action", pach_action)->required()->check(
      CLI::IsMember({"list", "apply", "walk", "replay"}));
  add_input(pach);
  pach->add_option("--dim", o.dim, "walk start ∂Δ^{dim+1} when no input");
  pach->add_option("--steps", o.steps);
  pach->add_option("--seed", o.seed);
  pach->add_option("--move", o.move_json, "move as JSON {\"sigma\":[..],\"tau\":[..]}");
  pach->add_option("--sigma", o.sigma);
  pach->add_option("--tau", o.tau);
  pach->add_option("--trace", o.trace, "trace JSON file");

  auto* surg = app.add_subcommand("surgery", "witness transport across moves");
  std::string surg_action;
  surg->add_option("action", surg_action)->required()->check(
      CLI::IsMember({"transport", "missing-face", "verify-theorem"}));
  add_input(surg)->required();
  surg->add_option("--face", o.face, "missing face M");
  surg->add_option("--trace", o.trace, "trace JSON file (verify-theorem)");
  surg->add_option("--move", o.move_json);
  surg->add_option("--sigma", o.sigma);
  surg->add_option("--tau", o.tau);
  surg->add_option("--witness", o.witness, "pair chain JSON to transport");
  surg->add_option("--schedule", o.schedule);

  auto* dan = app.add_subcommand("dancis", "rebuild a 2d-sphere from its d-skeleton");
  add_input(dan)->required();
  dan->add_option("--d", o.d)->required();

  auto* hv = app.add_subcommand("hvector", "h-vector of a pure complex");
  add_input(hv)->required();
  hv->add_option("--d", o.target_dim, "d (default dim + 1)");

  auto* ver = app.add_subcommand("verify", "run the acceptance suites");
  ver->add_option("--only", o.only, "criteria to run")->delimiter(',');

  auto* rep = app.add_subcommand("replay", "re-run the command recorded in a manifest");
  std::string manifest_in;
  rep->add_option("manifest", manifest_in)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream so, se;
    const int code = app.exit(e, so, se);
    out << so.str();
    err << se.str();
    return code == 0 ? 0 : 2;
  }

  int code = 0;
  try {
    if (rep->parsed()) return cmd_replay(manifest_in, out, err);
    if (gen->parsed()) code = cmd_gen(r), r.command = "gen";
    else if (missing->parsed()) code = cmd_missing(r), r.command = "missing";
    else if (hom->parsed()) code = cmd_homology(r), r.command = "homology";
    else if (obs->parsed()) code = cmd_obstruction(r), r.command = "obstruction";
    else if (pach->parsed()) code = cmd_pachner(r, pach_action), r.command = "pachner " + pach_action;
    else if (surg->parsed()) code = cmd_surgery(r, surg_action), r.command = "surgery " + surg_action;
    else if (dan->parsed()) code = cmd_dancis(r), r.command = "dancis";
    else if (hv->parsed()) code = cmd_hvector(r), r.command = "hvector";
    else if (ver->parsed()) code = cmd_verify(r), r.command = "verify";
  } catch (const vk::Error& e) {
    err << "vkt: " << e.what() << "\n";
    code = e.kind() == vk::Error::Kind::property ? 1 : 2;
  } catch (const Json::exception& e) {
    err << "vkt: bad JSON: " << e.what() << "\n";
    code = 2;
  }
  out << r.out.str();

  if (!o.manifest.empty()) {
    Json m;
    m["command"] = r.command.empty() ? args.size() > 1 ? args[1] : "" : r.command;
    Json argv_json = Json::array();
    for (std::size_t i = 1; i < args.size(); ++i) {
      if (args[i] == "--manifest") {
        ++i;
        continue;
      }
      if (args[i].rfind("--manifest=", 0) == 0) continue;
      argv_json.push_back(args[i]);
    }
    m["argv"] = argv_json;
    m["seed"] = o.seed;
    m["rng"] = vk::kRngAlgorithm;
    m["parameters"] = {{"schedule", o.schedule},
                       {"cell_budget", Run::budget()},
                       {"format", o.format}};
    m["tool_version"] = kVersion;
    m["input_digests"] = Json::object();
    for (const auto& [file, digest] : r.digests) m["input_digests"][file] = digest;
    m["exit_code"] = code;
    if (o.manifest == "-") {
      err << m.dump() << "\n";
    } else {
      std::ofstream f(o.manifest);
      if (!f) {
        err << "vkt: cannot write manifest " << o.manifest << "\n";
        return 2;
      }
      f << m.dump(2) << "\n";
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}
