#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "g2calc/errors.hpp"
#include "g2calc/g2.hpp"
#include "g2calc/hodge.hpp"
#include "g2calc/msymp.hpp"
#include "g2calc/parser.hpp"
#include "g2calc/verify.hpp"

namespace g2calc::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int dim = 7;
  bool json = false;
  std::string omega;
  std::string expr;
  std::string form;
  std::string vector;
  std::uint64_t seed = 42;
  std::size_t trials = 200;
};

/// "145" (or "1,4,5") to a multi-index, checking every axis against the dimension.
MultiIndex index_from_key(const std::string& key, int dim) {
  std::vector<int> axes;
  if (key.find(',') != std::string::npos) {
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) axes.push_back(std::stoi(part));
  } else {
    for (char c : key) {
      if (c < '0' || c > '9') throw UsageError("bad multi-index key \"" + key + "\"");
      axes.push_back(c - '0');
    }
  }
  std::vector<int> sorted = axes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.empty()) {
    throw UsageError("multi-index key \"" + key + "\" repeats or lacks axes");
  }
  for (int a : axes) {
    if (a < 1 || a > dim) throw UsageError("axis " + std::to_string(a) + " in key \"" + key + "\" outside 1.." + std::to_string(dim));
  }
  // Keys may list axes in any order; the coefficient picks up the sorting sign.
  return MultiIndex(axes);
}

int key_sign(const std::string& key) {
  std::vector<int> axes;
  if (key.find(',') != std::string::npos) {
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) axes.push_back(std::stoi(part));
  } else {
    for (char c : key) axes.push_back(c - '0');
  }
  int inversions = 0;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    for (std::size_t j = i + 1; j < axes.size(); ++j) inversions += axes[i] > axes[j];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Form load_form_file(const std::string& path, int dim) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open form file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("form file " + path + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || doc.empty()) throw UsageError("form file must be a non-empty JSON object");
  std::optional<Form> out;
  for (const auto& [key, value] : doc.items()) {
    MultiIndex index = index_from_key(key, dim);
    Rational c;
    if (value.is_string()) {
      c = parse_rational(value.get<std::string>());
    } else if (value.is_number_integer()) {
      c = Rational(value.get<long>());
    } else {
      throw UsageError("coefficient of \"" + key + "\" must be a rational string");
    }
    c *= key_sign(key);
    if (!out) out.emplace(dim, index.grade());
    if (out->grade() != index.grade()) throw UsageError("form file mixes grades");
    out->add_term(index, Polynomial::constant(dim, c));
  }
  return *out;
}

Form resolve_omega(const std::string& name, int dim) {
  if (name == "phi0" || name == "starphi0") {
    if (dim != 7) throw UsageError(name + " lives on R^7; drop --dim or use a form file");
    return name == "phi0" ? shared_context().phi() : shared_context().star_phi();
  }
  return load_form_file(name, dim);
}

Environment environment(const Options& o) {
  Environment env = Environment::standard(o.dim);
  if (!o.omega.empty()) env.names.insert_or_assign("omega", resolve_omega(o.omega, o.dim));
  return env;
}

const char* kind_of(const Value& v) {
  if (std::holds_alternative<Polynomial>(v)) return "function";
  if (std::holds_alternative<Form>(v)) return "form";
  return "multivector";
}

int grade_of(const Value& v) {
  if (const auto* f = std::get_if<Form>(&v)) return f->grade();
  if (const auto* q = std::get_if<MultiVector>(&v)) return q->grade();
  return 0;
}

int cmd_eval(const Options& o, std::ostream& out) {
  Value v = evaluate(o.expr, environment(o));
  if (o.json) {
    out << json{{"kind", kind_of(v)}, {"grade", grade_of(v)}, {"value", render(v)}}.dump() << '\n';
  } else {
    out << render(v) << '\n';
  }
  return 0;
}

json classification_json(const Classification& c, const char* key) {
  json j{{"object", c.object}, {key, c.hamiltonian}, {"witness", c.hamiltonian ? json(c.witness_text()) : json(nullptr)}};
  if (c.closed_contraction) j[std::string(key) == "rochesterian" ? "g2" : "cog2"] = *c.closed_contraction;
  if (c.projection_test) j["projection_test"] = *c.projection_test;
  return j;
}

int cmd_classify(const Options& o, std::ostream& out) {
  if (o.dim != 7) throw UsageError("classify works on R^7 only");
  if (o.form.empty() == o.vector.empty()) throw UsageError("classify needs exactly one of --form or --vector");
  const G2Context& ctx = shared_context();
  Environment env = environment(o);
  std::vector<std::pair<const char*, std::optional<Classification>>> results;
  std::string object;
  if (!o.form.empty()) {
    Form alpha = as_form(evaluate(o.form, env));
    object = to_string(alpha);
    auto attempt = [&](auto&& fn) -> std::optional<Classification> {
      try {
        return fn(ctx, alpha);
      } catch (const GradeError&) {
        return std::nullopt;
      }
    };
    results.emplace_back("rochesterian", attempt([](const G2Context& c, const Form& a) { return classify_rochesterian(c, a); }));
    results.emplace_back("corochesterian",
                         attempt([](const G2Context& c, const Form& a) { return classify_corochesterian(c, a); }));
  } else {
    MultiVector q = as_multivector(evaluate(o.vector, env));
    object = to_string(q);
    auto attempt = [&](auto&& fn) -> std::optional<Classification> {
      try {
        return fn(ctx, q);
      } catch (const GradeError&) {
        return std::nullopt;
      }
    };
    results.emplace_back("rochesterian",
                         attempt([](const G2Context& c, const MultiVector& v) { return classify_rochesterian(c, v); }));
    results.emplace_back("corochesterian",
                         attempt([](const G2Context& c, const MultiVector& v) { return classify_corochesterian(c, v); }));
  }
  if (!results[0].second && !results[1].second) throw UsageError("grade outside both classification ranges");

  if (o.json) {
    json arr = json::array();
    for (const auto& [key, c] : results) {
      if (c) arr.push_back(classification_json(*c, key));
    }
    out << arr.dump() << '\n';
    return 0;
  }
  out << "object: " << object << '\n';
  for (const auto& [key, c] : results) {
    if (!c) {
      out << key << ": n/a (grade out of range)\n";
      continue;
    }
    out << key << ": " << (c->hamiltonian ? "true" : "false") << '\n';
    if (c->closed_contraction) {
      out << "  " << (std::string(key) == "rochesterian" ? "g2" : "cog2") << ": "
          << (*c->closed_contraction ? "true" : "false") << '\n';
    }
    if (c->hamiltonian) out << "  witness: " << c->witness_text() << '\n';
  }
  return 0;
}

int cmd_solve(const Options& o, std::ostream& out) {
  if (o.form.empty()) throw UsageError("solve needs --form");
  const Form omega = resolve_omega(o.omega.empty() ? "phi0" : o.omega, o.dim);
  MsympStructure s = MsympStructure::build(omega);
  Environment env = environment(o);
  env.names.insert_or_assign("omega", omega);
  SolveResult res = solve_hamiltonian(s, as_form(evaluate(o.form, env)));
  if (o.json) {
    json kernel = json::array();
    for (const auto& k : res.kernel_basis) kernel.push_back(to_string(k));
    json j{{"status", to_string(res.status)}, {"omega", to_string(omega)}, {"kernel_dim", res.kernel_basis.size()},
           {"kernel_basis", kernel}};
    j["particular"] = res.status == SolveStatus::none ? json(nullptr) : json(to_string(res.particular));
    out << j.dump() << '\n';
    return 0;
  }
  out << "status: " << to_string(res.status) << '\n';
  if (res.status != SolveStatus::none) out << "particular: " << to_string(res.particular) << '\n';
  out << "kernel dimension: " << res.kernel_basis.size() << '\n';
  for (const auto& k : res.kernel_basis) out << "  " << to_string(k) << '\n';
  return 0;
}

int cmd_structure_info(const Options& o, std::ostream& out) {
  const std::string name = o.omega.empty() ? "phi0" : o.omega;
  const Form omega = resolve_omega(name, o.dim);
  MsympStructure s = MsympStructure::build(omega);
  json maps = json::array();
  for (int j = 1; j <= s.k(); ++j) {
    const ContractionMap& m = s.map(j);
    maps.push_back({{"grade", j},
                    {"source_dim", m.source_basis.size()},
                    {"target_dim", m.target_basis.size()},
                    {"rank", m.rank},
                    {"kernel_dim", m.kernel.size()},
                    {"injective", m.injective()},
                    {"surjective", m.surjective()}});
  }
  json facts = json::array();
  if (name == "phi0" || name == "starphi0") {
    for (const auto& f : theorem_identification_report(shared_context())) {
      facts.push_back({{"name", f.name}, {"holds", f.holds}, {"detail", f.detail}});
    }
  }
  if (o.json) {
    json j{{"omega", to_string(omega)}, {"dim", s.dim()}, {"degree", s.degree()}, {"maps", maps},
           {"linear_symmetries", s.linear_symmetries().size()}};
    if (!facts.empty()) j["identifications"] = facts;
    out << j.dump() << '\n';
    return 0;
  }
  out << "omega: " << to_string(omega) << '\n';
  out << "dimension " << s.dim() << ", degree " << s.degree() << '\n';
  for (const auto& m : maps) {
    out << "map " << m["grade"].get<int>() << ": " << m["source_dim"].get<std::size_t>() << " -> "
        << m["target_dim"].get<std::size_t>() << ", rank " << m["rank"].get<std::size_t>() << ", kernel "
        << m["kernel_dim"].get<std::size_t>() << (m["injective"].get<bool>() ? ", injective" : "")
        << (m["surjective"].get<bool>() ? ", surjective" : "") << '\n';
  }
  out << "linear symmetry algebra dimension: " << s.linear_symmetries().size() << '\n';
  for (const auto& f : facts) {
    out << (f["holds"].get<bool>() ? "holds   " : "FAILS   ") << f["name"].get<std::string>() << " ("
        << f["detail"].get<std::string>() << ")\n";
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.trials == 0) throw UsageError("--trials must be positive");
  VerifyReport report = run_verify({o.seed, o.trials});
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.passed;
  if (o.json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"anchor", c.anchor},
                        {"criterion", c.criterion},
                        {"status", c.passed ? "pass" : "fail"},
                        {"trials", c.trials},
                        {"counterexample", c.counterexample}});
    }
    out << json{{"seed", report.seed}, {"trials", report.trials}, {"passed", passed}, {"total", report.checks.size()},
                {"checks", checks}}
               .dump()
        << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << (c.criterion ? "[" + std::to_string(c.criterion) + "] " : "[-] ")
          << c.name << "  {" << c.anchor << "}";
      if (c.trials > 1) out << "  x" << c.trials;
      out << '\n';
      if (!c.passed) out << "     counterexample: " << c.counterexample << '\n';
    }
    out << passed << "/" << report.checks.size() << " checks passed (seed " << report.seed << ", " << report.trials
        << " trials)\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact exterior calculus for multisymplectic and G2 geometry", "g2calc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--dim", o.dim, "Ambient dimension n of R^n")->check(CLI::Range(1, kMaxDim));
  app.add_flag("--json", o.json, "Machine-readable output");

  auto* eval = app.add_subcommand("eval", "Evaluate an expression and print its canonical form");
  eval->add_option("expr", o.expr, "Expression, e.g. \"contract(e6^e7, starphi0)\"")->required();
  eval->add_option("--omega", o.omega, "Bind `omega` to phi0, starphi0 or a JSON form file");

  auto* classify = app.add_subcommand("classify", "Rochesterian and coRochesterian tests on R^7");
  classify->add_option("--form", o.form, "A 0-, 1- or 2-form");
  classify->add_option("--vector", o.vector, "A 1-, 2- or 3-multivector");

  auto* solve = app.add_subcommand("solve", "Solve Q⌟omega = d(alpha) for Q");
  solve->add_option("--omega", o.omega, "phi0, starphi0 or a JSON form file (default phi0)");
  solve->add_option("--form", o.form, "The form alpha")->required();

  auto* info = app.add_subcommand("structure-info", "Ranks and kernels of the contraction maps of omega");
  info->add_option("--omega", o.omega, "phi0, starphi0 or a JSON form file (default phi0)");

  auto* verify = app.add_subcommand("verify", "Replay every identity and worked value");
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--trials", o.trials, "Randomized trials per identity");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "g2calc: " << e.what() << '\n';
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (info->parsed()) return cmd_structure_info(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const std::logic_error& e) {
    // Grade, kind, dimension and degeneracy errors describe bad input; other logic errors are bugs.
    if (dynamic_cast<const std::invalid_argument*>(&e) == nullptr && dynamic_cast<const std::domain_error*>(&e) == nullptr &&
        dynamic_cast<const std::out_of_range*>(&e) == nullptr) {
      throw;
    }
    err << "g2calc: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    err << "g2calc: " << e.what() << '\n';
    return 2;
  }
  err << "g2calc: no subcommand\n";
  return 2;
}

}  // namespace g2calc::cli
