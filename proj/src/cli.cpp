#include "vcopy/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <sstream>

#include "vcopy/casimir_gen.hpp"
#include "vcopy/catalog.hpp"
#include "vcopy/contraction.hpp"
#include "vcopy/errors.hpp"
#include "vcopy/exterior.hpp"
#include "vcopy/invariants.hpp"
#include "vcopy/io.hpp"
#include "vcopy/virtual_copy.hpp"

namespace vcopy {

namespace {

enum class Format { json, text, latex };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "text") return Format::text;
  if (s == "latex") return Format::latex;
  throw MalformedInput("unknown format '" + s + "'");
}

struct Options {
  std::string family;
  int N = 0;
  std::string alpha;
  std::string algebra_path;
  std::string spec_path;
  std::string weights_path;
  std::vector<std::string> weight_pairs;
  std::string format;
  std::uint64_t seed = PointSampler::default_seed;
  unsigned trials = 0;
  std::string method = "bb";
  std::vector<std::string> positional;
};

// Exit code 1 carrier: the document is still emitted.
struct Outcome {
  int code = 0;
  std::string doc;
};

// Raised for a Jacobi-violating input so the violating triples reach the error document.
class InvalidAlgebra : public MalformedInput {
 public:
  InvalidAlgebra(const std::string& msg, Json details) : MalformedInput(msg), details_(std::move(details)) {}
  const Json& details() const { return details_; }

 private:
  Json details_;
};

Json lincomb_json(const LieAlgebra& a, const LinComb& c) {
  Json out = Json::object();
  for (const auto& [k, v] : c) out[a.name(k)] = to_string(v);
  return out;
}

Json validation_json(const LieAlgebra& a, const ValidationReport& r) {
  Json jac = Json::array();
  for (const auto& v : r.jacobi)
    jac.push_back({{"triple", {a.name(v.i), a.name(v.j), a.name(v.k)}}, {"residual", lincomb_json(a, v.residual)}});
  Json clo = Json::array();
  for (const auto& v : r.closure)
    clo.push_back({{"kind", v.kind == ClosureViolation::Kind::levi_not_subalgebra ? "levi-not-subalgebra"
                                                                                   : "radical-not-ideal"},
                   {"pair", {a.name(v.i), a.name(v.j)}},
                   {"offending", lincomb_json(a, v.offending)}});
  return {{"valid", r.ok()}, {"dim", a.dim()}, {"jacobi_violations", jac}, {"closure_violations", clo}};
}

struct Loaded {
  AlgebraPtr algebra;
  std::optional<VirtualCopySpec> spec;
  std::optional<int> so_rank;
  std::optional<CatalogEntry> entry;
};

Loaded load(const Options& o, bool check_axioms) {
  Loaded L;
  if (!o.family.empty() && !o.algebra_path.empty())
    throw MalformedInput("give either --family or --algebra, not both");
  if (!o.family.empty()) {
    FamilyId id{o.family, o.N, std::nullopt};
    if (!o.alpha.empty()) id.alpha = parse_rational(o.alpha);
    CatalogEntry e = build(id);
    L.algebra = e.algebra;
    L.spec = e.spec;
    L.so_rank = e.so_rank;
    L.entry = e;
  } else if (!o.algebra_path.empty()) {
    const Json doc = read_json_file(o.algebra_path);
    L.algebra = algebra_from_json(doc);
    if (o.N > 0) L.so_rank = o.N;
    // A catalog dump carries its spec inline; --spec overrides it.
    if (doc.contains("spec") && o.spec_path.empty()) L.spec = spec_from_json(L.algebra, doc.at("spec"));
  } else {
    throw MalformedInput("no algebra given (use --family or --algebra)");
  }
  if (check_axioms) {
    ValidationReport r = validate(*L.algebra);
    if (!r.ok()) throw InvalidAlgebra("algebra violates the Lie axioms", validation_json(*L.algebra, r));
  }
  if (!o.spec_path.empty()) L.spec = spec_from_json(L.algebra, read_json_file(o.spec_path));
  return L;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json pair_residuals_json(const LieAlgebra& a, const PairResiduals& r) {
  Json out = Json::array();
  for (const auto& [key, e] : r)
    out.push_back({{"pair", {a.name(key.first), a.name(key.second)}}, {"residual", pbw_to_json(e)}, {"text", e.to_text()}});
  return out;
}

Json single_residuals_json(const LieAlgebra& a, const std::map<GenIndex, PbwElement>& r) {
  Json out = Json::array();
  for (const auto& [g, e] : r)
    out.push_back({{"generator", a.name(g)}, {"residual", pbw_to_json(e)}, {"text", e.to_text()}});
  return out;
}

Json report_json(const LieAlgebra& a, const CopyVerificationReport& r) {
  return {{"passed", r.passed},
          {"f_is_radical_invariant", r.f_is_radical_invariant},
          {"f_is_g_invariant", r.f_is_g_invariant},
          {"p_transform_ok", r.p_transform_ok},
          {"factor_identity_ok", r.factor_identity_ok},
          {"bed1_residuals", pair_residuals_json(a, r.bed1_residuals)},
          {"bed2_residuals", pair_residuals_json(a, r.bed2_residuals)},
          {"f_radical_residuals", single_residuals_json(a, r.f_radical_residuals)},
          {"f_g_residuals", single_residuals_json(a, r.f_g_residuals)},
          {"p_transform_residuals", pair_residuals_json(a, r.p_transform_residuals)},
          {"factor_residuals", pair_residuals_json(a, r.factor_residuals)}};
}

std::string report_text(const LieAlgebra& a, const CopyVerificationReport& r) {
  std::ostringstream os;
  os << "passed: " << (r.passed ? "true" : "false") << "\n";
  auto pairs = [&](const char* label, const PairResiduals& res) {
    for (const auto& [key, e] : res)
      os << label << " [" << a.name(key.first) << ", " << a.name(key.second) << "]: " << e.to_text() << "\n";
  };
  pairs("bed1", r.bed1_residuals);
  pairs("bed2", r.bed2_residuals);
  for (const auto& [g, e] : r.f_g_residuals) os << "[f, " << a.name(g) << "]: " << e.to_text() << "\n";
  pairs("P-transform", r.p_transform_residuals);
  pairs("factor", r.factor_residuals);
  return os.str();
}

Outcome cmd_validate(const Options& o, Format fmt) {
  Loaded L = load(o, false);
  ValidationReport r = validate(*L.algebra);
  Outcome out{r.ok() ? 0 : 1, {}};
  if (fmt == Format::json) {
    out.doc = dump(validation_json(*L.algebra, r));
  } else {
    std::ostringstream os;
    os << "valid: " << (r.ok() ? "true" : "false") << "\n";
    for (const auto& v : r.jacobi)
      os << "jacobi (" << L.algebra->name(v.i) << ", " << L.algebra->name(v.j) << ", " << L.algebra->name(v.k)
         << ")\n";
    for (const auto& v : r.closure)
      os << (v.kind == ClosureViolation::Kind::levi_not_subalgebra ? "levi-not-subalgebra" : "radical-not-ideal")
         << " [" << L.algebra->name(v.i) << ", " << L.algebra->name(v.j) << "]\n";
    out.doc = os.str();
  }
  return out;
}

Outcome cmd_count(const Options& o, Format fmt) {
  Loaded L = load(o, true);
  const CountMethod method = parse_count_method(o.method);
  const unsigned trials = o.trials ? o.trials : (method == CountMethod::bb ? 3u : 5u);
  InvariantReport r = invariant_count(*L.algebra, trials, method, o.seed);
  Outcome out;
  if (fmt == Format::json) {
    Json w = Json::array();
    for (const auto& x : r.witness_point) w.push_back(to_string(x));
    out.doc = dump({{"count", r.count},
                    {"dim", L.algebra->dim()},
                    {"generic_rank", r.generic_rank},
                    {"method", to_string(r.method)},
                    {"trials", trials},
                    {"seed", o.seed},
                    {"witness_point", w}});
  } else if (fmt == Format::latex) {
    out.doc = "\\mathcal{N}(\\frak{g}) = " + std::to_string(r.count) + "\n";
  } else {
    out.doc = "count: " + std::to_string(r.count) + "\ndim: " + std::to_string(L.algebra->dim()) +
              "\ngeneric_rank: " + std::to_string(r.generic_rank) + "\nmethod: " + to_string(r.method) + "\n";
  }
  return out;
}

Outcome cmd_mc(const Options& o, Format fmt) {
  Loaded L = load(o, true);
  const LieAlgebra& a = *L.algebra;
  const auto d = mc_differential(a);
  const unsigned trials = o.trials ? o.trials : 5u;
  const std::size_t j0 = j0_estimate(a, trials, o.seed);
  Outcome out;
  if (fmt == Format::json) {
    Json diffs = Json::object();
    for (GenIndex k = 0; k < a.dim(); ++k) {
      Json terms = Json::array();
      for (const auto& [key, c] : d[k].terms())
        terms.push_back({{"forms", {a.name(key[0]), a.name(key[1])}}, {"coeff", to_string(c)}});
      diffs[a.name(k)] = terms;
    }
    out.doc = dump({{"differentials", diffs}, {"j0", j0}, {"count_bb1", a.dim() - 2 * j0}, {"trials", trials}, {"seed", o.seed}});
  } else {
    std::ostringstream os;
    for (GenIndex k = 0; k < a.dim(); ++k) {
      if (fmt == Format::latex)
        os << "d\\omega_{" << a.latex_name(k) << "} &= " << d[k].to_latex(a.latex_names()) << " \\\\\n";
      else
        os << "d w_" << a.name(k) << " = " << d[k].to_text(a.names()) << "\n";
    }
    os << (fmt == Format::latex ? "j_0 = " : "j0: ") << j0 << "\n";
    out.doc = os.str();
  }
  return out;
}

const VirtualCopySpec& need_spec(const Loaded& L) {
  if (!L.spec) throw MalformedInput("no virtual-copy spec available (use --spec or a family that carries one)");
  return *L.spec;
}

Outcome cmd_verify(const Options& o, Format fmt) {
  Loaded L = load(o, true);
  const VirtualCopySpec& spec = need_spec(L);
  const LieAlgebra& a = *L.algebra;
  CopyVerificationReport r = verify(L.algebra, spec);
  const auto ops = build_operators(L.algebra, spec);
  Outcome out{r.passed ? 0 : 1, {}};
  if (fmt == Format::json) {
    Json j = report_json(a, r);
    Json jo = Json::object();
    for (const auto& [i, e] : ops) jo[a.name(i)] = e.to_text();
    j["k"] = spec.k;
    j["f"] = spec.f.to_text();
    j["operators"] = jo;
    out.doc = dump(j);
  } else if (fmt == Format::latex) {
    std::ostringstream os;
    for (const auto& [i, e] : ops) os << a.latex_name(i) << "' &= " << e.to_latex() << " \\\\\n";
    os << "% passed: " << (r.passed ? "true" : "false") << "\n";
    out.doc = os.str();
  } else {
    out.doc = report_text(a, r);
  }
  return out;
}

Outcome cmd_casimirs(const Options& o, Format fmt) {
  Loaded L = load(o, true);
  const VirtualCopySpec& spec = need_spec(L);
  if (!L.so_rank) throw MalformedInput("casimirs needs an so(N) Levi part; pass --N with --algebra");
  const LieAlgebra& a = *L.algebra;
  CasimirSet cs = casimir_set(L.algebra, spec, *L.so_rank);
  Outcome out;
  if (fmt == Format::json) {
    Json coeffs = Json::object(), sym = Json::object(), checked = Json::object();
    for (const auto& [l, c] : cs.coefficients) {
      const std::string key = "C" + std::to_string(2 * l);
      coeffs[key] = {{"degree", c.degree()}, {"terms", poly_to_json(c, a.names())}, {"text", c.to_text(a.names())}};
      checked[key] = cs.commutator_checked.at(l);
    }
    for (const auto& [l, s] : cs.symmetrized) sym["C" + std::to_string(2 * l)] = s.to_text();
    out.doc = dump({{"N", cs.N}, {"coefficients", coeffs}, {"invariant", true}, {"symmetrized", sym},
                    {"commutator_checked", checked}, {"f", spec.f.to_text()}});
  } else {
    std::ostringstream os;
    for (const auto& [l, c] : cs.coefficients) {
      if (fmt == Format::latex)
        os << "C_{" << 2 * l << "} &= " << c.to_latex(a.latex_names()) << " \\\\\n";
      else
        os << "C" << 2 * l << " = " << c.to_text(a.names()) << "\n";
    }
    out.doc = os.str();
  }
  return out;
}

std::map<std::string, int> gather_weights(const Options& o) {
  std::map<std::string, int> w;
  if (!o.weights_path.empty()) w = weights_from_json(read_json_file(o.weights_path));
  for (const auto& p : o.weight_pairs) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw MalformedInput("weight '" + p + "' is not NAME=INT");
    try {
      std::size_t used = 0;
      int v = std::stoi(p.substr(eq + 1), &used);
      if (used != p.size() - eq - 1) throw std::invalid_argument("trailing");
      w[p.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw MalformedInput("weight '" + p + "' is not NAME=INT");
    }
  }
  return w;
}

Outcome cmd_contract(const Options& o, Format fmt) {
  Loaded L = load(o, true);
  const LieAlgebra& a = *L.algebra;
  ContractionWeights w = ContractionWeights::from_names(a, gather_weights(o));
  Json forced = Json::array();
  for (GenIndex g : w.forced_levi()) forced.push_back(a.name(g));
  Outcome out;
  if (!L.spec) {
    LieAlgebra c = contract_algebra(a, w);
    if (fmt == Format::json)
      out.doc = dump({{"algebra", algebra_to_json(c)}, {"forced_levi_weights", forced}});
    else
      out.doc = dump(algebra_to_json(c));
    return out;
  }
  ContractionOutcome r = contract_copy(L.algebra, *L.spec, w);
  const LieAlgebra& ap = *r.algebra_prime;
  if (fmt == Format::json) {
    Json Mi = Json::object(), Ni = Json::object(), P0 = Json::object(), ops = Json::object();
    for (const auto& [i, m] : r.Mi) Mi[a.name(i)] = m;
    for (const auto& [i, m] : r.Ni) Ni[a.name(i)] = m;
    for (const auto& [i, p] : r.P0) P0[a.name(i)] = p.to_text();
    for (const auto& [i, x] : r.operators) ops[a.name(i)] = x.to_text();
    Json j = {{"algebra", algebra_to_json(ap)}, {"M0", r.M0}, {"Mi", Mi}, {"Ni", Ni}, {"f0", r.f0.to_text()},
              {"P0", P0}, {"operators", ops}, {"copy_compatible", r.copy_compatible},
              {"forced_levi_weights", forced}};
    if (r.contracted_report) j["contracted_report"] = report_json(ap, *r.contracted_report);
    out.doc = dump(j);
  } else {
    std::ostringstream os;
    for (const auto& [i, x] : r.operators) {
      if (fmt == Format::latex)
        os << ap.latex_name(i) << "'' &= " << x.to_latex() << " \\\\\n";
      else
        os << a.name(i) << "'' = " << x.to_text() << "\n";
    }
    os << (fmt == Format::latex ? "% " : "") << "copy_compatible: " << (r.copy_compatible ? "true" : "false") << "\n";
    out.doc = os.str();
  }
  return out;
}

Outcome cmd_catalog(const Options& o, Format fmt) {
  if (o.positional.empty()) throw MalformedInput("catalog needs 'list' or 'dump <family> [N]'");
  const std::string& what = o.positional[0];
  Outcome out;
  if (what == "list") {
    if (fmt == Format::json) {
      Json list = Json::array();
      for (const auto& n : family_names()) list.push_back({{"name", n}, {"sized", family_takes_size(n)}});
      out.doc = dump({{"families", list}});
    } else {
      for (const auto& n : family_names()) out.doc += n + "\n";
    }
    return out;
  }
  if (what != "dump") throw MalformedInput("unknown catalog action '" + what + "'");
  if (o.positional.size() < 2) throw MalformedInput("catalog dump needs a family name");
  FamilyId id{o.positional[1], 0, std::nullopt};
  if (o.positional.size() > 2) {
    try {
      id.N = std::stoi(o.positional[2]);
    } catch (const std::logic_error&) {
      throw MalformedInput("size '" + o.positional[2] + "' is not an integer");
    }
  } else if (o.N > 0) {
    id.N = o.N;
  }
  if (!o.alpha.empty()) id.alpha = parse_rational(o.alpha);
  CatalogEntry e = build(id);
  Json j = algebra_to_json(*e.algebra);
  if (e.spec) j["spec"] = spec_to_json(*e.algebra, *e.spec);
  out.doc = dump(j);
  return out;
}

Json error_json(const Error& e) {
  Json err = {{"kind", e.kind()}, {"message", e.what()}};
  if (auto* inv = dynamic_cast<const InvalidAlgebra*>(&e)) {
    err["jacobi_violations"] = inv->details().at("jacobi_violations");
    err["closure_violations"] = inv->details().at("closure_violations");
  }
  return {{"error", err}};
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact virtual-copy and Casimir engine", "vcopy"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string format_flag;
  auto common = [&](CLI::App* sub, bool with_spec) {
    sub->add_option("--family", o.family, "catalog family name");
    sub->add_option("--N", o.N, "family size parameter");
    sub->add_option("--alpha", o.alpha, "boson_example parameter (rational)");
    sub->add_option("--algebra", o.algebra_path, "algebra JSON file");
    if (with_spec) sub->add_option("--spec", o.spec_path, "virtual-copy spec JSON file");
    sub->add_option("--format", format_flag, "json | text | latex");
    sub->add_option("--seed", o.seed, "seed for randomized rank probes");
    sub->add_option("--trials", o.trials, "number of random probes");
  };
  CLI::App* validate_cmd = app.add_subcommand("validate", "check Jacobi identity and Levi/radical closure");
  common(validate_cmd, false);
  CLI::App* count_cmd = app.add_subcommand("count", "number of independent invariants");
  common(count_cmd, false);
  count_cmd->add_option("--method", o.method, "bb (generic rank) or bb1 (Maurer-Cartan forms)");
  CLI::App* mc_cmd = app.add_subcommand("mc", "Maurer-Cartan equations and j0");
  common(mc_cmd, false);
  CLI::App* verify_cmd = app.add_subcommand("verify-copy", "verify a virtual-copy spec");
  common(verify_cmd, true);
  CLI::App* cas_cmd = app.add_subcommand("casimirs", "Casimir operators from the dressed rotation matrix");
  common(cas_cmd, true);
  CLI::App* con_cmd = app.add_subcommand("contract", "contract an algebra and its virtual copy");
  common(con_cmd, true);
  con_cmd->add_option("--weights", o.weights_path, "weights JSON file {name: integer}");
  con_cmd->add_option("--weight", o.weight_pairs, "NAME=INT (repeatable)");
  CLI::App* cat_cmd = app.add_subcommand("catalog", "list families or dump one as JSON");
  cat_cmd->add_option("action", o.positional, "list | dump <family> [N]");
  cat_cmd->add_option("--alpha", o.alpha, "boson_example parameter (rational)");
  cat_cmd->add_option("--N", o.N, "family size parameter");
  cat_cmd->add_option("--format", format_flag, "json | text");

  CliResult result;
  std::vector<std::string> argv_store{"vcopy"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.output = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.output = dump({{"error", {{"kind", "malformed-input"}, {"message", e.what()}}}});
    result.diagnostics = std::string(e.what()) + "\n";
    return result;
  }

  try {
    if (format_flag.empty()) {
      const char* env = std::getenv("VCOPY_FORMAT");
      format_flag = env ? env : "json";
    }
    const Format fmt = parse_format(format_flag);
    Outcome out;
    if (validate_cmd->parsed()) out = cmd_validate(o, fmt);
    else if (count_cmd->parsed()) out = cmd_count(o, fmt);
    else if (mc_cmd->parsed()) out = cmd_mc(o, fmt);
    else if (verify_cmd->parsed()) out = cmd_verify(o, fmt);
    else if (cas_cmd->parsed()) out = cmd_casimirs(o, fmt);
    else if (con_cmd->parsed()) out = cmd_contract(o, fmt);
    else out = cmd_catalog(o, fmt);
    result.exit_code = out.code;
    result.output = std::move(out.doc);
  } catch (const MalformedInput& e) {
    result.exit_code = 2;
    result.output = dump(error_json(e));
    result.diagnostics = std::string("error: ") + e.what() + "\n";
  } catch (const LimitDoesNotExist& e) {
    result.exit_code = 2;
    result.output = dump(error_json(e));
    result.diagnostics = std::string("error: ") + e.what() + "\n";
  } catch (const Error& e) {
    result.exit_code = 1;
    result.output = dump(error_json(e));
    result.diagnostics = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace vcopy
