// heis: command line front end. Every command builds a JSON report; the text
// output is a rendering of that report.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "heis/forms.hpp"
#include "heis/heisenberg.hpp"
#include "heis/orbits.hpp"
#include "heis/quadext.hpp"
#include "heis/quaternion.hpp"

using nlohmann::json;
using namespace heis;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kParse = 2, kDimension = 3, kDegenerate = 4, kInfinite = 5, kSplit = 6 };

struct CliError : std::runtime_error {
  int code;
  CliError(int c, const std::string& m) : std::runtime_error(m), code(c) {}
};

struct Config {
  std::string field = "q";
  std::string input;
  std::string output = "text";
  std::uint64_t budget = 5'000'000;
  std::uint64_t seed = 1;
  std::uint64_t sample = 200;
};

json header(const std::string& cmd, const Config& cfg, const Field& k) {
  return {{"schema", "v1"},
          {"command", cmd},
          {"field", k.spec()},
          {"config", {{"budget", cfg.budget}, {"seed", cfg.seed}, {"sample", cfg.sample}}}};
}

Field field_arg(const Config& cfg) {
  try {
    return make_field(cfg.field);
  } catch (const FieldError& e) {
    throw CliError(kParse, std::string("bad field spec: ") + e.what());
  }
}

Field finite_field_arg(const Config& cfg) {
  Field k = field_arg(cfg);
  if (!k.is_finite()) throw CliError(kInfinite, "this command needs a finite field, got " + k.spec());
  return k;
}

// --input is inline JSON or a path to a JSON file
json read_json(const std::string& in) {
  if (in.empty()) throw CliError(kParse, "missing --input");
  std::string text = in;
  auto first = in.find_first_not_of(" \t\n");
  if (first == std::string::npos || (in[first] != '{' && in[first] != '[')) {
    std::ifstream f(in);
    if (!f) throw CliError(kParse, "cannot read input file " + in);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw CliError(kParse, std::string("invalid JSON: ") + e.what());
  }
}

Elem scalar_arg(const Field& k, const std::string& s) {
  try {
    return k.parse(s);
  } catch (const FieldError& e) {
    throw CliError(kParse, "bad scalar '" + s + "': " + e.what());
  }
}

Subspace<Elem> kernel_input(const Config& cfg, const Field& k) {
  json j = read_json(cfg.input);
  if (j.is_object() && j.contains("kernel")) j = j["kernel"];  // algebra descriptor
  if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array()) {
    throw CliError(kParse, "subspace JSON needs a \"basis\" array");
  }
  for (auto& r : j["basis"]) {
    if (!r.is_array()) throw CliError(kParse, "basis rows must be arrays");
    if (r.size() != 6) throw CliError(kDimension, "basis rows must have 6 entries (coordinates s01..s23)");
  }
  Subspace<Elem> u;
  try {
    u = subspace_from_json(j, k);
  } catch (const ParseError& e) {
    throw CliError(kParse, e.what());
  }
  if (u.dim() == 0 || u.dim() == 6) {
    throw CliError(kDimension, "kernel must have dimension 1..5, got " + std::to_string(u.dim()));
  }
  return u;
}

json vec_json(const Vec<Elem>& v) {
  json out = json::array();
  for (auto& x : v) out.push_back(scalar_json(x));
  return out;
}

json params_json(const OrbitLabel& l) {
  json p = json::object();
  if (l.c) p["c"] = l.c->str();
  if (l.d) p["d"] = l.d->str();
  if (l.t) p["t"] = l.t->str();
  return p;
}

std::string label_summary(const OrbitLabel& l) {
  if (l.tag == Tag::Undecided) return "undecided (" + l.note + ")";
  return l.reduced() ? l.str() : l.str() + " (not reduced)";
}

Matrix<Elem> random_matrix(const Field& k, std::mt19937_64& rng) {
  Matrix<Elem> m(4, 4, k.zero());
  std::uniform_int_distribution<int> small(-3, 3);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = k.is_finite() ? k.element(rng() % k.order()) : k.from_int(small(rng));
  }
  return m;
}

// ---- commands ----------------------------------------------------------------

json cmd_classify(const Config& cfg) {
  Field k = field_arg(cfg);
  Subspace<Elem> u = kernel_input(cfg, k);
  OrbitLabel l = classify_subspace(u);
  json out = header("classify", cfg, k);
  out["label"] = l.tag == Tag::Undecided ? "undecided" : l.str();
  out["summary"] = label_summary(l);
  out["dim"] = u.dim();
  out["reduced"] = l.tag == Tag::Undecided ? json(nullptr) : json(l.reduced());
  out["params"] = params_json(l);
  out["kernel"] = subspace_to_json(u, k);
  out["witness"] = nullptr;
  if (l.tag == Tag::Undecided) out["note"] = l.note;
  if (k.is_finite() && l.tag != Tag::Undecided) {
    auto w = find_witness(u, l, cfg.budget);
    if (w) out["witness"] = matrix_to_json(*w);
  }
  return out;
}

json cmd_aut(const Config& cfg) {
  Field k = field_arg(cfg);
  Subspace<Elem> u = kernel_input(cfg, k);
  OrbitLabel l = classify_subspace(u);
  if (l.tag == Tag::Undecided) throw CliError(kFailure, "kernel type undecided: " + l.note);
  if (!l.reduced()) throw CliError(kDegenerate, l.str() + " is not reduced; no automorphism description");
  GeneratorSet gs = sigma_generators(l, k);
  Subspace<Elem> rep = representative(l, k);

  // generators for the input kernel itself when a witness A (A.rep = u) is known
  std::optional<Matrix<Elem>> w;
  if (u == rep) {
    w = Matrix<Elem>::identity(4, k.zero());
  } else if (k.is_finite()) {
    w = find_witness(u, l, cfg.budget);
  }
  json gens = json::array();
  for (auto& g : gs.gens) gens.push_back(matrix_to_json(w ? Matrix<Elem>(*w * g * *inverse(*w)) : g));

  json out = header("aut", cfg, k);
  out["label"] = l.str();
  out["predicate"] = gs.predicate;
  out["basis"] = w ? "input" : "representative";
  if (!w) out["representative"] = subspace_to_json(rep, k);
  out["generators"] = gens;
  out["order"] = nullptr;
  if (k.is_finite() && k.order() <= 3) {
    try {
      out["order"] = generate_group(gs.gens, cfg.budget).size();
    } catch (const OrbitError&) {
      out["order_note"] = "budget exceeded";
    }
  } else {
    out["order_note"] = "orders are computed over GF(2) and GF(3) only";
  }

  // predicate against direct stabilization of the representative
  std::mt19937_64 rng(cfg.seed);
  auto p = l.params(k);
  std::uint64_t mism = 0, inside = 0;
  for (std::uint64_t i = 0; i < cfg.sample; ++i) {
    Matrix<Elem> m = Matrix<Elem>::identity(4, k.zero());
    if (i % 2) {
      for (int j = 0; j < 6; ++j) m = m * gs.gens[rng() % gs.gens.size()];
    } else {
      do m = random_matrix(k, rng);
      while (det(m).is_zero());
    }
    bool st = act_subspace(m, rep) == rep;
    inside += st;
    mism += st != membership_predicate(l.tag, m, p);
  }
  out["predicate_check"] = {{"samples", cfg.sample}, {"stabilizing", inside}, {"mismatches", mism}};
  std::string ord = out["order"].is_null() ? "order not computed" : "order " + out["order"].dump();
  out["summary"] = l.str() + ": " + std::to_string(gs.gens.size()) + " generators, " + ord + ", predicate " + gs.predicate;
  if (mism > 0) throw CliError(kFailure, "membership predicate disagrees with direct stabilization");
  return out;
}

json cmd_orbits(const Config& cfg) {
  Field k = finite_field_arg(cfg);
  Subspace<Elem> u = kernel_input(cfg, k);
  OrbitLabel l = classify_subspace(u);
  if (l.tag == Tag::Undecided) throw CliError(kFailure, "kernel type undecided: " + l.note);
  if (!l.reduced()) throw CliError(kDegenerate, l.str() + " is not reduced");
  GeneratorSet gs = sigma_generators(l, k);
  Subspace<Elem> rep = representative(l, k);
  HeisAlgebra<Elem> h(rep);
  std::vector<Matrix<Elem>> zg;
  for (auto& g : gs.gens) zg.push_back(*induced_sigma_prime(g, h).map);
  OrbitReport vr, zr;
  try {
    vr = enumerate_orbits(gs.gens, 4, k.zero(), cfg.budget);
    zr = enumerate_orbits(zg, h.dim_z(), k.zero(), cfg.budget);
  } catch (const OrbitError& e) {
    throw CliError(kFailure, e.what());
  }
  json out = header("orbits", cfg, k);
  out["kernel_label"] = l.str();
  out["basis"] = "representative";
  out["representative"] = subspace_to_json(rep, k);
  json vo = json::array(), zo = json::array();
  for (std::size_t i = 0; i < vr.orbit_count(); ++i) {
    vo.push_back({{"rep", vec_json(vec_from_code(vr.reps[i], 4, k.zero()))}, {"size", vr.sizes[i]}});
  }
  for (std::size_t i = 0; i < zr.orbit_count(); ++i) {
    Tensor<Elem> z = h.lift(vec_from_code(zr.reps[i], h.dim_z(), k.zero()));
    zo.push_back({{"rep", zr.reps[i] == 0 ? std::string("0") : tensor_str(z)}, {"size", zr.sizes[i]}});
  }
  out["v_orbits"] = vo;
  out["z_orbits"] = zo;
  out["omega_v"] = vr.orbit_count() - 1;
  out["omega_z"] = zr.orbit_count() - 1;
  out["omega"] = vr.orbit_count() + zr.orbit_count() - 1;
  out["summary"] = l.str() + ": omega = " + out["omega"].dump() + " (" + out["omega_v"].dump() + " + " +
                   out["omega_z"].dump() + " + 1)";
  return out;
}

json counts_json(const OmegaCounts& c) {
  return {{"omega_v", c.omega_v}, {"omega_z", c.omega_z}, {"omega", c.omega}};
}

json cmd_verify_table(const Config& cfg, int& status) {
  Field k = finite_field_arg(cfg);
  if (k.order() > 16) throw CliError(kFailure, "table verification supports fields of order at most 16");
  TableReport r = verify_table(k);
  json out = header("verify-table", cfg, k);
  out["invariants"] = {{"r_star", r.inv.r_star}, {"r_wp", r.inv.r_wp}, {"r_plus", r.inv.r_plus}, {"hf", r.inv.hf},
                       {"r_n", r.inv.r_n}};
  json rows = json::array();
  for (auto& x : r.rows) {
    json row = {{"field", r.field}, {"kernel_label", x.kernel}, {"skipped", x.skipped}};
    if (x.skipped) {
      row["note"] = x.note;
    } else {
      row.update(counts_json(x.got));
      row["formula"] = x.formula;
      row["expected"] = counts_json(x.expected);
      row["pass"] = x.pass;
    }
    rows.push_back(row);
  }
  out["rows"] = rows;
  out["failures"] = r.failures();
  out["summary"] = std::to_string(r.rows.size()) + " rows, " + std::to_string(r.checked()) + " checked, " +
                   std::to_string(r.failures()) + " failures";
  if (r.failures() > 0) status = kFailure;
  return out;
}

struct ConjArgs {
  std::string hilbert, d, c, t, v, x, w, y;
};

json cmd_conj(const Config& cfg, const ConjArgs& a) {
  Field k = field_arg(cfg);
  std::optional<QuatAlgebra> hq;
  try {
    if (!a.hilbert.empty()) {
      auto comma = a.hilbert.find(',');
      if (comma == std::string::npos) throw CliError(kParse, "--hilbert takes a,b");
      hq = QuatAlgebra::superscript(k, scalar_arg(k, a.hilbert.substr(0, comma)), scalar_arg(k, a.hilbert.substr(comma + 1)));
    } else {
      if (a.d.empty() || a.c.empty()) throw CliError(kParse, "give --hilbert a,b or both --d and --c");
      Elem d = scalar_arg(k, a.d), c = scalar_arg(k, a.c);
      hq = a.t.empty() ? QuatAlgebra(k, d, c) : QuatAlgebra(k, d, c, scalar_arg(k, a.t));
    }
  } catch (const QuatError& e) {
    throw CliError(kParse, e.what());
  }
  const QuatAlgebra& h = *hq;
  auto quat = [&](const std::string& s) {
    try {
      return h.parse(s);
    } catch (const std::exception& e) {
      throw CliError(kParse, "bad quaternion '" + s + "': " + e.what());
    }
  };
  Quat v = quat(a.v), x = quat(a.x);
  bool pair = !a.w.empty() || !a.y.empty();
  if (pair && (a.w.empty() || a.y.empty())) throw CliError(kParse, "--w and --y go together");
  ConjResult r;
  try {
    r = pair ? pair_conjugate_solver(h, v, quat(a.w), x, quat(a.y)) : conjugate_solver(h, v, x);
  } catch (const SplitAlgebraError& e) {
    throw CliError(kSplit, e.what());
  } catch (const QuatError& e) {
    throw CliError(kFailure, e.what());
  }
  json out = header("conj", cfg, k);
  out["algebra"] = {{"d", h.d().str()}, {"c", h.c().str()}, {"t", h.t().str()}};
  out["v"] = h.str(v);
  out["x"] = h.str(x);
  if (pair) {
    out["w"] = a.w;
    out["y"] = a.y;
  }
  out["conjugate"] = r.a.has_value();
  if (r.a) {
    Quat ai = *h.inverse(*r.a);
    Quat img = h.mul(h.mul(*r.a, v), ai);
    bool ok = img == x;
    if (pair) ok = ok && h.mul(h.mul(*r.a, quat(a.w)), ai) == quat(a.y);
    out["a"] = h.str(*r.a);
    out["a_v_a_inv"] = h.str(img);
    out["verified"] = ok;
    out["summary"] = "a = " + h.str(*r.a) + (ok ? " (verified)" : " (VERIFICATION FAILED)");
    if (!ok) throw CliError(kFailure, "conjugator failed verification");
  } else {
    out["reason"] = r.reason;
    out["summary"] = "not conjugate: " + r.reason;
  }
  return out;
}

BinaryQForm binary_arg(const Field& k, const std::string& s) {
  std::vector<Elem> xs;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) xs.push_back(scalar_arg(k, part));
  if (xs.size() != 3) throw CliError(kDimension, "binary form needs three coefficients a,b,d");
  return {xs[0], xs[1], xs[2]};
}

std::string form_str(const BinaryQForm& q) { return "[" + q.a.str() + "," + q.b.str() + "," + q.d.str() + "]"; }

struct FormArgs {
  std::string form, other, ext, gram;
};

json cmd_forms_arf(const Config& cfg, const FormArgs& a) {
  Field k = field_arg(cfg);
  if (k.characteristic() != 2) throw CliError(kFailure, "Arf invariants need characteristic 2");
  BinaryQForm q = binary_arg(k, a.form);
  json out = header("forms arf", cfg, k);
  out["form"] = form_str(q);
  out["diagonalizable"] = is_diagonalizable(q);
  if (is_diagonalizable(q)) {
    out["arf"] = nullptr;
    out["summary"] = form_str(q) + ": diagonalizable, no Arf invariant";
  } else {
    ArfInvariant r = arf(q);
    out["arf"] = r.value.str();
    out["arf_rep"] = r.rep ? json(r.rep->str()) : json(nullptr);
    out["summary"] = form_str(q) + ": Arf " + r.value.str();
  }
  return out;
}

json cmd_forms_equiv(const Config& cfg, const FormArgs& a) {
  Field k = field_arg(cfg);
  if (k.characteristic() != 2) throw CliError(kFailure, "this equivalence test is for characteristic 2");
  BinaryQForm q = binary_arg(k, a.form), r = binary_arg(k, a.other);
  BinaryEquivalence e = binary_equivalent_char2(q, r);
  json out = header("forms equiv", cfg, k);
  out["form"] = form_str(q);
  out["other"] = form_str(r);
  out["equivalent"] = tri_name(e.equivalent);
  out["witness"] = e.witness ? matrix_to_json(*e.witness) : json(nullptr);
  if (!e.reason.empty()) out["reason"] = e.reason;
  out["summary"] = form_str(q) + " ~ " + form_str(r) + ": " + tri_name(e.equivalent);
  return out;
}

json cmd_forms_hermitian(const Config& cfg, const FormArgs& a) {
  Field k = field_arg(cfg);
  auto comma = a.ext.find(',');
  if (comma == std::string::npos) throw CliError(kParse, "--ext takes t,d");
  std::optional<QuadExtension> qe;
  try {
    qe.emplace(k, scalar_arg(k, a.ext.substr(0, comma)), scalar_arg(k, a.ext.substr(comma + 1)));
  } catch (const CliError&) {
    throw;
  } catch (const std::exception& e) {
    throw CliError(kFailure, e.what());
  }
  json g = read_json(a.gram);
  Matrix<Elem> m;
  try {
    m = matrix_from_json(g, qe->field());
  } catch (const ParseError& e) {
    throw CliError(kParse, e.what());
  }
  if (m.rows() != 2 || m.cols() != 2) throw CliError(kDimension, "gram matrix must be 2x2");
  std::optional<HermitianForm> hf;
  try {
    hf.emplace(*qe, m);
  } catch (const std::exception& e) {
    throw CliError(kParse, e.what());
  }
  HermitianClass c = hermitian_class(*hf);
  json out = header("forms hermitian", cfg, k);
  out["extension"] = qe->field().spec();
  out["gram"] = matrix_to_json(m);
  out["kind"] = c.kind;
  out["rep"] = matrix_to_json(c.rep);
  out["canonical"] = c.canonical;
  out["isotropic"] = tri_name(hermitian_isotropic(*hf));
  out["summary"] = c.kind + " form, class of diag(" + c.rep(0, 0).str() + ", " + c.rep(1, 1).str() + ")";
  return out;
}

json cmd_forms_ternary(const Config& cfg) {
  Field k = field_arg(cfg);
  Subspace<Elem> u = kernel_input(cfg, k);
  if (u.dim() != 3) throw CliError(kDimension, "ternary restriction needs a plane (dimension 3)");
  TernaryResult r = classify_ternary_restriction(u);
  json out = header("forms ternary", cfg, k);
  out["kernel"] = subspace_to_json(u, k);
  out["class"] = r.label ? json(to_string(*r.label)) : json(nullptr);
  out["bounded"] = r.bounded;
  out["summary"] = r.label ? to_string(*r.label) : std::string("undecided");
  return out;
}

// ---- text rendering of a report ---------------------------------------------

std::string compact(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(const json& j, std::ostream& os, const std::string& pad) {
  for (auto& [key, v] : j.items()) {
    if (key == "summary") continue;
    if (v.is_object()) {
      os << pad << key << ":\n";
      render(v, os, pad + "  ");
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      os << pad << key << ":\n";
      for (auto& e : v) {
        std::string line;
        for (auto& [k2, v2] : e.items()) line += (line.empty() ? "" : "  ") + k2 + "=" + compact(v2);
        os << pad << "  - " << line << "\n";
      }
    } else {
      os << pad << key << ": " << compact(v) << "\n";
    }
  }
}

void emit(const json& j, const Config& cfg) {
  if (cfg.output == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (j.contains("summary")) std::cout << j["summary"].get<std::string>() << "\n";
  render(j, std::cout, "");
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  if (const char* b = std::getenv("HEIS_BUDGET")) {
    try {
      cfg.budget = std::stoull(b);
    } catch (const std::exception&) {
      std::cerr << "error: HEIS_BUDGET must be a positive integer\n";
      return kParse;
    }
  }

  CLI::App app{"Heisenberg algebras with four-dimensional V: kernels, automorphisms, orbits"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "field spec: q | gf:p | gf:p^k | fp_t:p | quad:<base>:<t>,<d>");
    sub->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--budget", cfg.budget, "scan budget (default 5000000, or HEIS_BUDGET)");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--sample", cfg.sample, "number of sampled checks");
  };
  auto with_input = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--input", cfg.input, "subspace JSON {\"basis\": [[..6 entries..], ...]}, inline or a file path");
  };

  auto* classify = app.add_subcommand("classify", "orbit type of a subspace of Lambda^2");
  with_input(classify);
  auto* aut = app.add_subcommand("aut", "generators of the kernel stabilizer");
  with_input(aut);
  auto* orbits = app.add_subcommand("orbits", "orbits of the stabilizer on V and on Z (finite fields)");
  with_input(orbits);
  auto* table = app.add_subcommand("verify-table", "check the omega table over a finite field");
  common(table);

  ConjArgs ca;
  auto* conj = app.add_subcommand("conj", "conjugator a with a v a^-1 = x in a quaternion algebra");
  common(conj);
  conj->add_option("--hilbert", ca.hilbert, "a,b for H^{a,b}: h1^2 = a, h2^2 = b");
  conj->add_option("--d", ca.d, "h1^2 = -t h1 - d");
  conj->add_option("--c", ca.c, "h2^2 = -c");
  conj->add_option("--t", ca.t, "defaults to 0 (1 in characteristic 2)");
  conj->add_option("--v", ca.v, "quaternion, e.g. 1+h1-2*h3")->required();
  conj->add_option("--x", ca.x)->required();
  conj->add_option("--w", ca.w, "second pair: a w a^-1 = y");
  conj->add_option("--y", ca.y);

  FormArgs fa;
  auto* forms = app.add_subcommand("forms", "quadratic and hermitian form tools");
  forms->require_subcommand(1);
  auto* farf = forms->add_subcommand("arf", "Arf invariant of a binary form in characteristic 2");
  common(farf);
  farf->add_option("--form", fa.form, "a,b,d for a x^2 + b xy + d y^2")->required();
  auto* fequiv = forms->add_subcommand("equiv", "equivalence of binary forms in characteristic 2");
  common(fequiv);
  fequiv->add_option("--form", fa.form)->required();
  fequiv->add_option("--other", fa.other)->required();
  auto* fherm = forms->add_subcommand("hermitian", "class of a 2x2 hermitian form over L = K[u]/(u^2 - t u + d)");
  common(fherm);
  fherm->add_option("--ext", fa.ext, "t,d")->required();
  fherm->add_option("--gram", fa.gram, "2x2 JSON matrix over L, inline or a file path")->required();
  auto* ftern = forms->add_subcommand("ternary", "restriction of the Pfaffian to a plane");
  with_input(ftern);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  std::string cmd;
  int status = kOk;
  try {
    json out;
    if (*classify) {
      cmd = "classify";
      out = cmd_classify(cfg);
    } else if (*aut) {
      cmd = "aut";
      out = cmd_aut(cfg);
    } else if (*orbits) {
      cmd = "orbits";
      out = cmd_orbits(cfg);
    } else if (*table) {
      cmd = "verify-table";
      out = cmd_verify_table(cfg, status);
    } else if (*conj) {
      cmd = "conj";
      out = cmd_conj(cfg, ca);
    } else if (*farf) {
      cmd = "forms arf";
      out = cmd_forms_arf(cfg, fa);
    } else if (*fequiv) {
      cmd = "forms equiv";
      out = cmd_forms_equiv(cfg, fa);
    } else if (*fherm) {
      cmd = "forms hermitian";
      out = cmd_forms_hermitian(cfg, fa);
    } else if (*ftern) {
      cmd = "forms ternary";
      out = cmd_forms_ternary(cfg);
    }
    emit(out, cfg);
    return status;
  } catch (const CliError& e) {
    status = e.code;
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    status = kFailure;
    std::cerr << "error: " << e.what() << "\n";
  }
  if (cfg.output == "json") {
    json err = {{"schema", "v1"}, {"command", cmd}, {"error", {{"code", status}}}};
    std::cout << err.dump(2) << "\n";
  }
  return status;
}
