// ikit: command-line frontend for the invariant theory toolkit.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ikit/algebraic.hpp"
#include "ikit/finite_group.hpp"
#include "ikit/invariants.hpp"
#include "ikit/parallel.hpp"
#include "ikit/spec_file.hpp"

using namespace ikit;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
  bool json = false;
  int threads = 0;
  size_t cap = 100000;
  std::string spec_path;

  std::string algorithm = "king";
  std::string order = "grevlex";
  bool monic = false;
  bool verify = false;

  std::string method = "noether";
  size_t verify_samples = 0;
  std::uint64_t seed = 0;
  long bound = 10;

  unsigned degree = 12;
  std::vector<unsigned> degrees;
  unsigned max_degree = 8;

  std::vector<std::string> vars;
  std::vector<std::string> polys;
  std::string field = "QQ";
};

struct Report {
  std::string command;
  std::string digest;
  std::uint64_t seed = 0;
  ojson result = ojson::object();
  std::vector<std::string> warnings;
  std::ostringstream human;
};

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ojson poly_list(const std::vector<Poly>& ps) {
  ojson a = ojson::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::string count(size_t n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

template <class T>
std::string join_nums(const std::vector<T>& xs) {
  std::vector<std::string> s;
  for (const auto& x : xs) s.push_back(std::to_string(x));
  return join(s);
}

LoadedSpec load(const Options& o, Report& r) {
  LoadedSpec s = load_group_spec(o.spec_path);
  r.digest = fnv1a(s.text);
  for (const auto& w : s.warnings) r.warnings.push_back(w);
  return s;
}

void cmd_generators(const Options& o, Report& r) {
  LoadedSpec s = load(o, r);
  r.result["algorithm"] = o.algorithm;
  GeneratingSetResult g;
  Ring ring;
  std::optional<FiniteMatrixGroup> G;
  if (o.algorithm == "king") {
    const auto& f = s.finite();
    G = f.close(o.cap);
    ring = f.ring(MonomialOrder::from_name(o.order));
    g = king_generators(*G, ring);
    r.result["group_order"] = G->order();
  } else if (o.algorithm == "derksen") {
    const auto& a = s.algebraic();
    g = derksen_generators(a);
    ring = a.x_ring();
    if (o.order != "grevlex") {
      ring = make_ring<Scalar>(a.x_names(), MonomialOrder::from_name(o.order), a.field());
      for (auto& p : g.generators) p = p.in_ring(ring);
    }
  } else {
    throw ParseError("unknown algorithm '" + o.algorithm + "'");
  }
  std::vector<Poly> shown = g.generators;
  if (o.monic)
    for (auto& p : shown) p = p.monic();
  r.result["order"] = o.order;
  r.result["generators"] = poly_list(shown);
  r.result["degrees"] = g.degrees;
  if (o.algorithm == "king") r.result["termination_degree"] = g.termination_degree;
  r.result["minimal"] = g.minimal;
  r.human << count(g.generators.size(), "generator") << " (degrees " << join_nums(g.degrees) << ")";
  if (o.algorithm == "king") r.human << ", termination degree " << g.termination_degree;
  r.human << "\n";
  for (const auto& p : shown) r.human << "  " << p.to_string() << "\n";
  if (!o.verify) return;
  ojson v;
  if (G) {
    auto rep = verify_noether_and_hilbert(*G, g.generators, ring, static_cast<unsigned>(G->order()));
    v["degree_bound_ok"] = rep.degree_bound_ok;
    v["hilbert_monomials_ok"] = rep.hilbert_monomials_ok;
    v["subalgebra_ok"] = rep.subalgebra_ok;
    v["checked_up_to"] = rep.checked_up_to;
    v["failures"] = rep.failures;
    r.human << "verify: degree bound " << (rep.degree_bound_ok ? "ok" : "FAILED") << ", Hilbert monomials "
            << (rep.hilbert_monomials_ok ? "ok" : "FAILED") << ", subalgebra up to degree " << rep.checked_up_to
            << " " << (rep.subalgebra_ok ? "ok" : "FAILED") << "\n";
  } else {
    auto rep = verify_derksen(s.algebraic(), g.generators);
    v["invariance_ok"] = rep.invariance_ok;
    v["hilbert_ideal_ok"] = rep.hilbert_ideal_ok;
    v["failures"] = rep.failures;
    r.human << "verify: invariance " << (rep.invariance_ok ? "ok" : "FAILED") << ", Hilbert ideal "
            << (rep.hilbert_ideal_ok ? "ok" : "FAILED") << "\n";
  }
  r.result["verification"] = v;
}

void cmd_separating(const Options& o, Report& r) {
  LoadedSpec s = load(o, r);
  const auto& f = s.finite();
  auto G = f.close(o.cap);
  Ring ring = f.ring();
  auto S = noether_separating_set(G, ring);
  r.result["method"] = o.method;
  r.result["noether_size"] = S.invariants.size();
  if (o.method == "reduce") {
    S = reduce_separating_set(S.invariants, f.dimension());
    ojson alphas = ojson::array();
    for (const auto& a : S.alphas) alphas.push_back(a);
    r.result["alphas"] = alphas;
    r.result["relations"] = S.relations;
  } else if (o.method != "noether") {
    throw ParseError("unknown method '" + o.method + "'");
  }
  std::vector<unsigned> degs;
  for (const auto& p : S.invariants) degs.push_back(static_cast<unsigned>(p.total_degree()));
  r.result["size"] = S.invariants.size();
  r.result["homogeneous"] = S.homogeneous;
  r.result["invariants"] = poly_list(S.invariants);
  r.result["degrees"] = degs;
  r.human << count(S.invariants.size(), "separating invariant") << " (" << S.provenance << ")\n";
  for (const auto& p : S.invariants) r.human << "  " << p.to_string() << "\n";
  if (o.verify_samples == 0) return;
  r.seed = o.seed;
  auto rep = verify_separation_samples(S.invariants, G, o.verify_samples, o.bound, o.seed);
  ojson v;
  v["pairs"] = rep.pairs;
  v["bound"] = rep.coordinate_bound;
  v["seed"] = rep.seed;
  v["same_orbit_checked"] = rep.same_orbit_checked;
  v["same_orbit_failures"] = rep.same_orbit_failures;
  v["distinct_checked"] = rep.distinct_checked;
  v["distinct_failures"] = rep.distinct_failures;
  v["counterexamples"] = rep.counterexamples;
  v["passed"] = rep.passed();
  v["note"] = SeparationReport::note;
  r.result["verification"] = v;
  r.human << "sampled check (" << rep.same_orbit_checked << " same-orbit, " << rep.distinct_checked
          << " cross-orbit pairs): " << (rep.passed() ? "pass" : "FAIL") << "\n";
  for (const auto& c : rep.counterexamples) r.human << "  " << c << "\n";
}

void cmd_analyze(const std::string& what, const Options& o, Report& r) {
  LoadedSpec s = load(o, r);
  const auto& f = s.finite();
  auto G = f.close(o.cap);
  r.result["analysis"] = what;
  r.result["group_order"] = G.order();
  if (what == "molien") {
    auto ser = molien_series(G, o.degree);
    std::vector<std::string> cs;
    for (const auto& c : ser.coefficients) cs.push_back(c.to_string());
    r.result["degree"] = o.degree;
    r.result["coefficients"] = cs;
    r.human << "Molien series up to t^" << o.degree << ": " << join(cs) << "\n";
  } else if (what == "classify") {
    std::map<std::string, size_t> counts;
    ojson elems = ojson::array();
    for (const auto& A : G.elements()) {
      auto c = classify_element(A);
      ++counts[kind_name(c.kind)];
      elems.push_back({{"codimension", c.codimension}, {"kind", kind_name(c.kind)}, {"order", element_order(A, G.order())}});
    }
    bool refl = is_reflection_group(G), birefl = is_bireflection_group(G), cm = cm_necessary_condition(G);
    r.result["counts"] = counts;
    r.result["elements"] = elems;
    r.result["reflection_generated"] = refl;
    r.result["bireflection_generated"] = birefl;
    r.result["cm_necessary_condition"] = cm;
    for (const auto& [k, n] : counts) r.human << k << ": " << n << "\n";
    r.human << "reflection-generated: " << (refl ? "true" : "false") << "\n"
            << "bireflection-generated: " << (birefl ? "true" : "false") << "\n"
            << "CM necessary condition: " << (cm ? "true" : "false") << "\n";
  } else if (what == "primary") {
    r.seed = o.seed;
    auto p = dade_primary_invariants(G, f.ring(), o.seed);
    bool hsop = is_hsop(p.invariants, f.ring());
    r.result["invariants"] = poly_list(p.invariants);
    r.result["forms"] = poly_list(p.forms);
    r.result["degrees"] = p.degrees;
    r.result["attempts"] = p.attempts;
    r.result["hsop_verified"] = hsop;
    r.human << count(p.invariants.size(), "primary invariant") << " (degrees " << join_nums(p.degrees)
            << "), hsop verified: " << (hsop ? "true" : "false") << "\n";
    for (const auto& l : p.forms) r.human << "  orbit product of " << l.to_string() << "\n";
  } else if (what == "bounds") {
    std::vector<unsigned> degs = o.degrees;
    if (degs.empty()) {
      r.seed = o.seed;
      degs = dade_primary_invariants(G, f.ring(), o.seed).degrees;
    }
    auto b = degree_bound_report(G.order(), f.dimension(), degs, G.is_modular());
    r.result["primary_degrees"] = degs;
    r.result["symonds"] = b.symonds;
    r.result["coarse"] = b.coarse;
    r.result["noether"] = b.noether;
    r.result["noether_applies"] = b.noether_applies;
    r.human << "primary degrees " << join_nums(degs) << ": Symonds " << b.symonds << ", coarse " << b.coarse
            << ", Noether " << b.noether << (b.noether_applies ? "" : " (not applicable)") << "\n";
  }
}

void cmd_field(const Options& o, Report& r) {
  LoadedSpec s = load(o, r);
  auto res = invariant_field_generators(s.algebraic());
  std::vector<std::string> gens, basis;
  for (const auto& g : res.generators) gens.push_back(g.to_string());
  for (const auto& b : res.basis) basis.push_back(b.to_string());
  r.result["generators"] = gens;
  r.result["basis"] = basis;
  r.human << "invariant field generated by {" << join(gens) << "}\n";
}

void cmd_derksen_ideal(const Options& o, Report& r) {
  LoadedSpec s = load(o, r);
  const auto& a = s.algebraic();
  auto D = derksen_ideal(a);
  auto h = hilbert_ideal_generators(a, D);
  r.result["ring"] = D.ring->names;
  r.result["order"] = D.order;
  r.result["generators"] = poly_list(D.generators);
  r.result["hilbert_ideal"] = poly_list(h);
  r.human << "Derksen ideal {" << join(strings(D.generators)) << "}\n"
          << "Hilbert ideal {" << join(strings(h)) << "}\n";
}

void cmd_separating_variety(const Options& o, Report& r) {
  LoadedSpec s = load(o, r);
  auto res = separating_variety(s.algebraic());
  r.result["ring"] = res.ring->names;
  r.result["generators"] = poly_list(res.generators);
  r.human << "separating variety {" << join(strings(res.generators)) << "}\n";
}

void cmd_separating_subalgebra(const Options& o, Report& r) {
  LoadedSpec s = load(o, r);
  auto res = separating_subalgebra(s.algebraic(), o.max_degree);
  r.result["invariants"] = poly_list(res.invariants);
  r.result["degree_reached"] = res.degree_reached;
  r.human << count(res.invariants.size(), "separating invariant") << " up to degree " << res.degree_reached << "\n";
  for (const auto& p : res.invariants) r.human << "  " << p.to_string() << "\n";
}

Field parse_field_option(const std::string& text) {
  if (text == "QQ") return Field::rationals();
  if (text.rfind("GF(", 0) == 0 && text.back() == ')') return Field::prime(Integer(text.substr(3, text.size() - 4)));
  throw ParseError("unknown field '" + text + "' (use QQ or GF(p))");
}

void cmd_groebner(const Options& o, Report& r) {
  std::string text = join(o.vars, ",") + ";" + o.field + ";" + o.order + ";" + join(o.polys, ";");
  r.digest = fnv1a(text);
  Ring ring = make_ring<Scalar>(o.vars, MonomialOrder::from_name(o.order), parse_field_option(o.field));
  std::vector<Poly> gens;
  for (const auto& p : o.polys) gens.push_back(parse_polynomial(p, ring));
  auto B = reduced_groebner(gens, ring);
  r.result["order"] = o.order;
  r.result["basis"] = poly_list(B.generators);
  r.human << "reduced Gröbner basis {" << join(strings(B.generators)) << "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"ikit: exact invariant theory of finite and algebraic groups"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print a machine-readable JSON report");
  app.add_option("--threads", o.threads, "Worker threads (overrides IKIT_THREADS)")->check(CLI::PositiveNumber);
  app.add_option("--cap", o.cap, "Group closure cap")->check(CLI::PositiveNumber);

  auto spec_arg = [&](CLI::App* c) { c->add_option("spec", o.spec_path, "Group spec file")->required(); };
  const std::vector<std::string> orders{"grevlex", "lex", "gradedlex"};

  auto* gen = app.add_subcommand("generators", "Generating invariants (King or Derksen)");
  spec_arg(gen);
  gen->add_option("--algorithm", o.algorithm)->check(CLI::IsMember({"king", "derksen"}));
  gen->add_option("--order", o.order)->check(CLI::IsMember(orders));
  gen->add_flag("--monic", o.monic, "Rescale generators to be monic");
  gen->add_flag("--verify", o.verify, "Run the consistency checks");

  auto* sep = app.add_subcommand("separating", "Separating invariants of a finite group");
  spec_arg(sep);
  sep->add_option("--method", o.method)->check(CLI::IsMember({"noether", "reduce"}));
  sep->add_option("--verify-samples", o.verify_samples, "Sampled pairs per check");
  sep->add_option("--seed", o.seed);
  sep->add_option("--bound", o.bound, "Coordinate bound for sample points")->check(CLI::PositiveNumber);

  auto* ana = app.add_subcommand("analyze", "Molien series, classification, primary invariants, bounds");
  ana->require_subcommand(1);
  auto* molien = ana->add_subcommand("molien", "Molien series coefficients");
  spec_arg(molien);
  molien->add_option("--degree", o.degree);
  auto* classify = ana->add_subcommand("classify", "Reflection and bireflection classification");
  spec_arg(classify);
  auto* primary = ana->add_subcommand("primary", "Primary invariants by orbit products");
  spec_arg(primary);
  primary->add_option("--seed", o.seed);
  auto* bounds = ana->add_subcommand("bounds", "Degree bounds");
  spec_arg(bounds);
  bounds->add_option("--degrees", o.degrees, "Primary invariant degrees")->delimiter(',')->allow_extra_args(false);
  bounds->add_option("--seed", o.seed);

  auto* fld = app.add_subcommand("field", "Generators of the invariant field");
  spec_arg(fld);
  auto* di = app.add_subcommand("derksen-ideal", "Reduced Gröbner basis of the Derksen ideal");
  spec_arg(di);
  auto* sv = app.add_subcommand("separating-variety", "Ideal of the separating variety");
  spec_arg(sv);
  auto* ss = app.add_subcommand("separating-subalgebra", "Separating invariants by rising degree");
  spec_arg(ss);
  ss->add_option("--max-degree", o.max_degree);

  auto* gb = app.add_subcommand("groebner", "Reduced Gröbner basis of polynomials");
  gb->add_option("--vars", o.vars, "Variable names, highest first")->delimiter(',')->allow_extra_args(false)->required();
  gb->add_option("--order", o.order)->check(CLI::IsMember(orders));
  gb->add_option("--field", o.field, "QQ or GF(p)");
  gb->add_option("polys", o.polys, "Generators")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (o.threads > 0) set_thread_count(static_cast<unsigned>(o.threads));

  Report r;
  CLI::App* sub = app.get_subcommands().front();
  r.command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    if (sub == gen) cmd_generators(o, r);
    else if (sub == sep) cmd_separating(o, r);
    else if (sub == ana) {
      CLI::App* which = ana->get_subcommands().front();
      r.command += " " + which->get_name();
      cmd_analyze(which->get_name(), o, r);
    } else if (sub == fld) cmd_field(o, r);
    else if (sub == di) cmd_derksen_ideal(o, r);
    else if (sub == sv) cmd_separating_variety(o, r);
    else if (sub == ss) cmd_separating_subalgebra(o, r);
    else if (sub == gb) cmd_groebner(o, r);
  } catch (const Error& e) {
    if (o.json) {
      ojson err{{"command", r.command}, {"error", {{"name", e.name()}, {"message", e.what()}}}};
      std::cout << err.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    }
    return e.exit_code();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (o.json) {
    ojson out;
    out["command"] = r.command;
    out["input_digest"] = r.digest;
    out["seed"] = r.seed;
    out["result"] = r.result;
    out["warnings"] = r.warnings;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.human.str();
    for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", secs);
    std::cout << "[" << r.command << ", input " << r.digest << ", seed " << r.seed << ", " << buf << " s]\n";
  }
  return 0;
}
