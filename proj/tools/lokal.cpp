// lokal: command-line front end. Reads a problem file, prints one JSON document.
//
//   lokal <command> problem.json [flags]
//
// Exit status: 0 on success, 1 on a mathematical obstruction, 2 on bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lokal/division.hpp"
#include "lokal/errors.hpp"
#include "lokal/expression.hpp"
#include "lokal/oracle.hpp"
#include "lokal/sections.hpp"

using json = nlohmann::ordered_json;
using namespace lokal;

namespace {

struct Flags {
  std::string file;
  std::optional<std::uint64_t> seed;
  std::optional<long> bound;
  std::optional<unsigned> cap_level;
  std::optional<unsigned> k_max;
  std::optional<unsigned> precision;
  bool quiet = false;
  std::string g, g1, g2;
  unsigned level = 10;
  unsigned k = 1;
  unsigned b = 1;
  unsigned check_level = 12;
};

// An input error that names the offending field of the problem file.
class FieldError : public InputError {
 public:
  FieldError(const std::string& field, const std::string& what, std::optional<std::size_t> pos = std::nullopt)
      : InputError(field + ": " + what), field_(field), pos_(pos) {}
  const std::string& field() const noexcept { return field_; }
  std::optional<std::size_t> position() const noexcept { return pos_; }

 private:
  std::string field_;
  std::optional<std::size_t> pos_;
};

struct Problem {
  VariableNames vars;
  std::vector<Polynomial> generators;
  std::optional<Polynomial> g;
  std::uint64_t seed = 0;
  long bound = 997;
  unsigned cap_level = kDefaultCapLevel;
  unsigned k_max = 24;
  std::optional<unsigned> precision;

  LocalIdeal ideal() const { return LocalIdeal(generators); }
  SamuelOptions options() const {
    SamuelOptions o;
    o.seed = SampleSeed(seed, bound);
    o.cap_level = cap_level;
    if (precision) o.start_u_level = *precision;
    return o;
  }
  Polynomial expr(const std::string& text, const std::string& field) const {
    try {
      return parse(text, vars);
    } catch (const ParseError& e) {
      throw FieldError(field, e.what(), e.position());
    }
  }
  Polynomial need_g() const {
    if (!g) throw FieldError("g", "this command needs g (in the file or via --g)");
    return *g;
  }
};

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

template <class T>
T natural(const json& j, const std::string& field) {
  if (!j.is_number_unsigned()) throw FieldError(field, "expected a natural number");
  return j.get<T>();
}

Problem load(const Flags& f) {
  std::ifstream in(f.file);
  if (!in) throw InputError("cannot open " + f.file);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FieldError(f.file, e.what(), e.byte ? std::optional<std::size_t>(e.byte - 1) : std::nullopt);
  }
  if (!doc.is_object()) throw FieldError(f.file, "expected a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "vars" && key != "generators" && key != "g" && key != "options")
      throw FieldError(key, "unknown field");

  Problem p;
  if (!doc.contains("vars") || !doc["vars"].is_array() || doc["vars"].empty())
    throw FieldError("vars", "expected a nonempty list of identifiers");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < doc["vars"].size(); ++i) {
    const auto& v = doc["vars"][i];
    const std::string field = "vars[" + std::to_string(i) + "]";
    if (!v.is_string() || !is_identifier(v.get<std::string>())) throw FieldError(field, "not an identifier");
    if (!seen.insert(v.get<std::string>()).second) throw FieldError(field, "repeated variable");
    p.vars.push_back(v.get<std::string>());
  }
  if (p.vars.size() > kMaxVars) throw FieldError("vars", "at most " + std::to_string(kMaxVars) + " variables");

  if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
    throw FieldError("generators", "expected a nonempty list of expressions");
  for (std::size_t i = 0; i < doc["generators"].size(); ++i) {
    const auto& e = doc["generators"][i];
    const std::string field = "generators[" + std::to_string(i) + "]";
    if (!e.is_string()) throw FieldError(field, "expected an expression string");
    p.generators.push_back(p.expr(e.get<std::string>(), field));
  }
  if (doc.contains("g")) {
    if (!doc["g"].is_string()) throw FieldError("g", "expected an expression string");
    p.g = p.expr(doc["g"].get<std::string>(), "g");
  }
  if (doc.contains("options")) {
    const auto& o = doc["options"];
    if (!o.is_object()) throw FieldError("options", "expected an object");
    for (const auto& [key, value] : o.items()) {
      const std::string field = "options." + key;
      if (key == "seed") p.seed = natural<std::uint64_t>(value, field);
      else if (key == "bound") p.bound = natural<long>(value, field);
      else if (key == "cap_level") p.cap_level = natural<unsigned>(value, field);
      else if (key == "k_max") p.k_max = natural<unsigned>(value, field);
      else throw FieldError(field, "unknown option");
    }
  }
  if (f.seed) p.seed = *f.seed;
  if (f.bound) p.bound = *f.bound;
  if (f.cap_level) p.cap_level = *f.cap_level;
  if (f.k_max) p.k_max = *f.k_max;
  p.precision = f.precision;
  if (!f.g.empty()) p.g = p.expr(f.g, "--g");
  if (p.bound < 2) throw FieldError("bound", "must be at least 2");
  if (p.cap_level < 1) throw FieldError("cap_level", "must be at least 1");
  if (p.k_max < 1) throw FieldError("k_max", "must be at least 1");
  return p;
}

std::string rat(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return to_string(c);
}

json rats(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rat(q));
  return out;
}

json polys(const std::vector<Polynomial>& v, const VariableNames& vars) {
  json out = json::array();
  for (const auto& f : v) out.push_back(format(f, vars));
  return out;
}

json exponents(const std::vector<Exponent>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.coords());
  return out;
}

json seeds(const SampleSeed& s) { return json{{"seed", s.seed}, {"bound", s.coefficient_bound}}; }

// ---- commands ----

json cmd_parse(const Problem& p, const Flags&) {
  json out{{"vars", p.vars}, {"generators", polys(p.generators, p.vars)}};
  if (p.g) out["g"] = format(*p.g, p.vars);
  return out;
}

json cmd_diagram(const Problem& p, const Flags&) {
  const PrimaryCertificate c = diagram_of_ideal(p.ideal(), p.cap_level);
  json out{{"vertices", exponents(c.diagram.vertices())},
           {"colength", c.colength},
           {"level", c.level},
           {"complement", exponents(c.diagram.complement())}};
  if (p.vars.size() == 2) out["staircase"] = render_staircase(c.diagram);
  return out;
}

json cmd_divide(const Problem& p, const Flags& f) {
  const Polynomial F = p.need_g();
  const TruncationLevel level(f.level);
  const DivisionResult r = divide(F, p.generators, level);
  PolynomialBuilder rebuilt(F.nvars());
  for (std::size_t i = 0; i < r.quotients.size(); ++i) rebuilt.add(multiply(r.quotients[i], p.generators[i], f.level));
  rebuilt.add(r.remainder);
  const bool identity = std::move(rebuilt).build() == truncate(F, level);
  const std::string contracts = check_support_contracts(r, p.generators);
  return json{{"level", f.level},
              {"quotients", polys(r.quotients, p.vars)},
              {"remainder", format(r.remainder, p.vars)},
              {"identity", identity},
              {"support_contracts", contracts.empty() ? std::string("ok") : contracts}};
}

json cmd_mult(const Problem& p, const Flags&) {
  const SamuelOptions o = p.options();
  return json{{"e", multiplicity(p.ideal(), o.seed, p.cap_level)}, {"seeds", seeds(o.seed)}};
}

json cmd_mixed(const Problem& p, const Flags& f) {
  const SamuelOptions o = p.options();
  return json{{"k", f.k}, {"mixed", mixed_multiplicity(p.ideal(), f.k, o.seed, p.cap_level)}, {"seeds", seeds(o.seed)}};
}

json oracle_status(const Polynomial& g, const LocalIdeal& I, const Rational& value, unsigned k_max) {
  json out;
  const FeketeEstimate fe = fekete_lower(g, I, k_max);
  out["fekete"] = json{{"best", rat(fe.best)}, {"k", fe.k_best}, {"k_max", fe.k_max}, {"consistent", fe.best <= value}};
  if (I.is_monomial() && g.is_monomial() && I.nvars() <= 3) {
    const Rational nv = newton_value(I, g);
    out["newton"] = json{{"value", rat(nv)}, {"consistent", nv == value}};
  } else {
    out["newton"] = nullptr;
  }
  return out;
}

json cmd_samuel(const Problem& p, const Flags&) {
  const Polynomial g = p.need_g();
  const LocalIdeal I = p.ideal();
  const SamuelValue v = samuel_value(g, I, p.options());
  json out{{"g", format(g, p.vars)}};
  if (v.infinite) {
    out["value"] = "infinity";
    return out;
  }
  out["value"] = rat(v.value);
  out["k"] = v.k;
  out["d_k"] = v.d_k;
  out["u_level_used"] = v.u_level_used;
  out["multiplicity"] = v.multiplicity;
  out["oracles"] = oracle_status(g, I, v.value, p.k_max);
  return out;
}

json cmd_loja(const Problem& p, const Flags&) {
  const Rational nu = lojasiewicz(p.ideal(), p.options());
  return json{{"nu", rat(nu)}, {"v_m", rat(1 / nu)}};
}

json cmd_profile(const Problem& p, const Flags&) {
  const SectionProfile s = profile(p.ideal(), p.options());
  json agreement = json::array();
  for (bool a : s.agreement) agreement.push_back(a);
  return json{{"nu", rats(s.exponents)}, {"e", s.multiplicity}, {"samples", s.samples_used}, {"agreement", agreement}};
}

json cmd_verify(const Problem& p, const Flags&) {
  const InequalityReport r = verify_inequality(p.ideal(), p.options());
  return json{{"e", r.e},       {"nu", rats(r.nu)}, {"product", rat(r.product)},
              {"holds", r.holds}, {"tight", r.tight}, {"seeds", r.seeds}};
}

json cmd_prop51(const Problem& p, const Flags& f) {
  if (f.g1.empty() || f.g2.empty()) throw InputError("prop51 needs --g1 and --g2");
  const Polynomial g1 = p.expr(f.g1, "--g1"), g2 = p.expr(f.g2, "--g2");
  const Prop51Report r = prop51_check(p.ideal(), g1, g2, f.b, p.options());
  json out{{"status", r.status},
           {"resultant", rat(r.resultant)},
           {"initial_forms_coprime", r.initial_forms_coprime},
           {"containment", r.containment ? json(*r.containment) : json(nullptr)},
           {"samuel_g", rats(r.samuel_g)},
           {"e_g", r.e_g},
           {"e_I", r.e_I},
           {"multiplicity_match", r.multiplicity_match},
           {"hypotheses_hold", r.hypotheses_hold},
           {"nu", rats(r.nu)},
           {"product", rat(r.product)},
           {"conclusion", r.conclusion ? json(*r.conclusion) : json(nullptr)}};
  return out;
}

json cmd_check(const Problem& p, const Flags& f) {
  const Polynomial g = p.need_g();
  const LocalIdeal I = p.ideal();
  const SamuelOptions o = p.options();
  const SamuelValue v = samuel_value(g, I, o);
  if (v.infinite) return json{{"value", "infinity"}, {"checks", json::array()}, {"pass", true}};
  json checks = json::array();
  bool pass = true;
  const FeketeEstimate fe = fekete_lower(g, I, p.k_max);
  const bool fe_ok = fe.best <= v.value;
  pass &= fe_ok;
  checks.push_back({{"name", "fekete"},
                    {"status", fe_ok ? "pass" : "fail"},
                    {"best", rat(fe.best)},
                    {"k", fe.k_best},
                    {"attained", fe.best == v.value}});
  if (I.is_monomial() && g.is_monomial() && I.nvars() <= 3) {
    const Rational nv = newton_value(I, g);
    pass &= nv == v.value;
    checks.push_back({{"name", "newton"}, {"status", nv == v.value ? "pass" : "fail"}, {"value", rat(nv)}});
  } else {
    checks.push_back({{"name", "newton"}, {"status", "skipped"}});
  }
  const bool ch = cayley_hamilton_residual(g, I, TruncationLevel(f.check_level), o).is_zero();
  pass &= ch;
  checks.push_back({{"name", "cayley_hamilton"}, {"status", ch ? "pass" : "fail"}, {"level", f.check_level}});
  return json{{"value", rat(v.value)}, {"checks", checks}, {"pass", pass}};
}

json error_json(const std::string& kind, const std::string& message) {
  return json{{"error", kind}, {"message", message}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local algebra calculator: diagrams, multiplicities, Samuel values, section exponents."};
  app.require_subcommand(1);
  Flags f;

  using Handler = json (*)(const Problem&, const Flags&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", f.file, "problem file (JSON)")->required();
    sub->add_option("--seed", f.seed, "sampling seed (default 0)");
    sub->add_option("--bound", f.bound, "coefficient bound for random draws (default 997)");
    sub->add_option("--cap-level", f.cap_level, "give up certifying primarity beyond this degree (default 64)");
    sub->add_option("--k-max", f.k_max, "largest power tried by the Fekete oracle (default 24)");
    sub->add_option("--precision", f.precision, "starting U-level for the Samuel value");
    sub->add_flag("--quiet", f.quiet, "no diagnostics on standard error");
    commands.emplace_back(sub, h);
    return sub;
  };
  add("parse", "parse and print the problem in canonical form", cmd_parse);
  add("diagram", "diagram of initial exponents", cmd_diagram);
  add("divide", "divide g by the generators", cmd_divide)->add_option("--level", f.level, "truncation degree");
  add("mult", "multiplicity e(I)", cmd_mult);
  add("mixed", "mixed multiplicity e(I^[k], m^[d-k])", cmd_mixed)->add_option("--k", f.k, "number of copies of I");
  add("samuel", "asymptotic Samuel value of g", cmd_samuel)->add_option("--g", f.g, "element (overrides the file)");
  add("loja", "Lojasiewicz exponent", cmd_loja);
  add("profile", "section exponents nu^(1)..nu^(d)", cmd_profile);
  add("verify", "check e(I) <= nu^(1)...nu^(d)", cmd_verify);
  {
    CLI::App* sub = add("prop51", "equality criterion in two variables", cmd_prop51);
    sub->add_option("--g1", f.g1, "first element")->required();
    sub->add_option("--g2", f.g2, "second element")->required();
    sub->add_option("--b", f.b, "power of I")->required();
  }
  {
    CLI::App* sub = add("check", "run the oracles against the Samuel value of g", cmd_check);
    sub->add_option("--g", f.g, "element (overrides the file)");
    sub->add_option("--level", f.check_level, "truncation for the Cayley-Hamilton residual");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  json out;
  int code = 0;
  try {
    for (const auto& [sub, handler] : commands)
      if (sub->parsed()) out = handler(load(f), f);
  } catch (const FieldError& e) {
    out = error_json("InputError", e.what());
    out["field"] = e.field();
    if (e.position()) out["position"] = *e.position();
    code = 2;
  } catch (const InputError& e) {
    out = error_json("InputError", e.what());
    code = 2;
  } catch (const NotPrimary& e) {
    out = error_json("NotPrimary", e.what());
    out["partial_diagram"] = e.partial_diagram();
    code = 1;
  } catch (const GenericityFailure& e) {
    out = error_json("GenericityFailure", e.what());
    code = 1;
  } catch (const NonTermination& e) {
    out = error_json("NonTermination", e.what());
    code = 1;
  } catch (const MathError& e) {
    out = error_json("MathError", e.what());
    code = 1;
  }
  if (code && !f.quiet) std::cerr << "lokal: " << out["message"].get<std::string>() << "\n";
  std::cout << out.dump(2) << "\n";
  return code;
}
