#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nvs/definition.hpp"
#include "nvs/error.hpp"
#include "nvs/monoid_algebra.hpp"
#include "nvs/morphism.hpp"
#include "nvs/parallel.hpp"
#include "nvs/real_demo.hpp"
#include "nvs/suite.hpp"

namespace {

using namespace nvs;

struct Output {
  bool json = false;
  bool timestamp = true;
  nlohmann::json doc = nlohmann::json::object();
  std::ostringstream text;

  void header() {
    if (!timestamp) return;
    std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", std::gmtime(&now));
    if (json)
      doc["generated"] = buf;
    else
      text << "# generated " << buf << "\n";
  }

  void report(const VerificationReport& r) {
    if (json)
      doc["reports"].push_back(nlohmann::json::parse(r.to_json_string(false)));
    else
      text << r.to_text(false);
  }

  void vectors(const std::string& key, const Space& sp, const VectorSet& s) {
    if (json) {
      auto arr = nlohmann::json::array();
      for (Code c : s.codes) arr.push_back(sp.format(c));
      doc[key] = arr;
    } else {
      text << sp.format(s);
    }
  }

  void field(const std::string& key, const std::string& value) {
    if (json)
      doc[key] = value;
    else
      text << key << " = " << value << "\n";
  }

  void flush() {
    if (json)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << text.str();
  }
};

std::vector<std::pair<Code, Code>> parse_map_file(const std::string& path,
                                                  const Space& sp, bool* basis_only) {
  std::ifstream in(path);
  if (!in) fail(Errc::syntax_error, "cannot open " + path);
  std::vector<std::pair<Code, Code>> pairs;
  std::string line;
  int lineno = 0;
  *basis_only = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.find("basis-only") != std::string::npos) {
      *basis_only = line.find("true") != std::string::npos;
      continue;
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": expected '->'");
    Vector from = parse_vector_literal(line.substr(0, arrow), sp.group().order, sp.width());
    Vector to = parse_vector_literal(line.substr(arrow + 2), sp.group().order, sp.width());
    pairs.emplace_back(sp.encode(from), sp.encode(to));
  }
  return pairs;
}

LinearMap load_map(const std::string& path, const SpacePtr& sp) {
  bool basis_only = false;
  auto pairs = parse_map_file(path, *sp, &basis_only);
  if (basis_only || pairs.size() < sp->size()) return map_from_images(sp, sp, pairs);
  std::vector<Code> table(sp->size(), UINT32_MAX);
  for (auto& [v, w] : pairs) {
    std::uint32_t i = sp->local_index(v);
    if (table[i] != UINT32_MAX && table[i] != w)
      fail(Errc::inconsistent_map, "conflicting images for " + sp->format(v));
    table[i] = w;
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == UINT32_MAX)
      fail(Errc::inconsistent_map, "missing image for " + sp->format(sp->members()[i]));
  LinearMap m;
  m.domain = sp;
  m.codomain = sp;
  m.table = std::move(table);
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"near-vector space engine over finite scalar groups"};
  app.require_subcommand(1);

  std::string format = "text";
  bool no_timestamp = false;
  int threads = 0;
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-timestamp", no_timestamp, "suppress the timestamp header");
  app.add_option("--threads", threads, "OpenMP thread count (0 = default)");

  std::string deffile, set_arg, vec_arg, map_arg, gen_arg, orbit_arg, proj_arg;
  int alpha = 0, beta = 1, bound = 3;
  bool check_module = false;
  double tol = 1e-9;
  SuiteOptions opts;

  auto add_space_verb = [&](const char* name, const char* desc) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->fallthrough();  // global flags may follow the verb
    c->add_option("deffile", deffile, "space definition file")->required();
    return c;
  };

  CLI::App* verify = add_space_verb("verify", "run the full theorem suite");
  verify->add_option("--ql-cap", opts.ql_cap, "max |S| in the independence scan");
  verify->add_option("--ql-set-limit", opts.ql_set_limit, "max enumerated sets");
  verify->add_option("--dimspan-samples", opts.dimspan_samples, "sampled (v, w) pairs");
  verify->add_option("--seed", opts.seed, "sampling seed");

  CLI::App* qk = add_space_verb("qk", "print the quasi-kernel");
  CLI::App* span_cmd = add_space_verb("span", "print the span of a set");
  span_cmd->add_option("--set", set_arg, "vector list, e.g. \"(1,1) (0,1)\"")->required();
  CLI::App* dim_cmd = add_space_verb("dim", "dimension of a vector");
  dim_cmd->add_option("--vec", vec_arg, "vector literal")->required();
  CLI::App* dec_cmd = add_space_verb("decompose", "quasi-kernel decomposition of a vector");
  dec_cmd->add_option("--vec", vec_arg, "vector literal")->required();
  CLI::App* basis_cmd = add_space_verb("basis", "print a scalar basis");
  CLI::App* quot_cmd = add_space_verb("quotient", "quotient by a generated subspace");
  quot_cmd->add_option("--subspace-gen", gen_arg, "generators of the subspace")->required();
  CLI::App* fit_cmd = add_space_verb("fit", "first isomorphism theorem for a map");
  fit_cmd->add_option("--map", map_arg, "map file: lines '(x,y) -> (u,v)'")->required();
  CLI::App* alg_cmd = add_space_verb("algebra", "scalar monoid algebra checks");
  alg_cmd->add_flag("--check-module", check_module, "bounded ring and module axioms");
  alg_cmd->add_option("--orbit", orbit_arg, "orbit of a vector");
  alg_cmd->add_option("--projective", proj_arg, "projective fixed-point test");
  alg_cmd->add_option("--bound", bound, "stabilizer/axiom bound");
  CLI::App* diff_cmd = add_space_verb("check-span-diff", "span of alpha.v - beta.v");
  diff_cmd->add_option("--vec", vec_arg, "vector literal")->required();
  diff_cmd->add_option("--alpha", alpha, "first scalar")->required();
  diff_cmd->add_option("--beta", beta, "second scalar")->required();
  CLI::App* demo = app.add_subcommand("demo-r3", "floating-point twisted-action demo");
  demo->fallthrough();
  demo->add_option("--tol", tol, "componentwise tolerance");

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.json = format == "json";
  out.timestamp = !no_timestamp;
  if (threads > 0) set_threads(threads);

  bool failed = false;
  try {
    out.header();
    if (demo->parsed()) {
      VerificationReport a = check_remark_identities(tol);
      VerificationReport b = check_pairwise_nonclassical(tol);
      out.report(a);
      out.report(b);
      failed = !a.all_passed() || !b.all_passed();
      out.flush();
      return failed ? 1 : 0;
    }

    SpaceDefinition def = load_definition(deffile);
    SpacePtr sp = build_space(def);
    out.field("space", sp->group().describe() + " dim " + std::to_string(sp->width()));

    if (verify->parsed()) {
      auto reports = run_suite(sp, opts);
      for (auto& r : reports) out.report(r);
      failed = !suite_passed(reports);
      out.field("result", failed ? "FAIL" : "pass");
    } else if (qk->parsed()) {
      out.vectors("quasi-kernel", *sp, sp->quasi_kernel());
    } else if (span_cmd->parsed()) {
      std::vector<Code> codes;
      for (const Vector& v : parse_vector_list(set_arg, sp->group().order, sp->width()))
        codes.push_back(sp->encode(v));
      out.vectors("span", *sp, sp->span(VectorSet(std::move(codes))));
    } else if (dim_cmd->parsed()) {
      Code v = sp->encode(parse_vector_literal(vec_arg, sp->group().order, sp->width()));
      out.field("dim" + sp->format(v), std::to_string(sp->dim_of(v)));
    } else if (dec_cmd->parsed()) {
      Code v = sp->encode(parse_vector_literal(vec_arg, sp->group().order, sp->width()));
      ThetaDecomposition th = sp->theta_decompose(v);
      out.vectors("parts", *sp, th.parts);
      out.field("steps", std::to_string(th.trace.size()));
      for (std::size_t i = 0; i < th.trace.size(); ++i) {
        const ThetaStep& s = th.trace[i];
        out.field("step" + std::to_string(i),
                  "anchor=" + sp->format(s.anchor) + " offender=" + sp->format(s.offender) +
                      " alpha=" + std::to_string(s.alpha) + " beta=" + std::to_string(s.beta) +
                      " theta=" + sp->format(s.theta));
      }
    } else if (basis_cmd->parsed()) {
      VectorSet b = sp->scalar_basis();
      out.vectors("scalar-basis", *sp, b);
      out.field("size", std::to_string(b.size()));
    } else if (quot_cmd->parsed()) {
      std::vector<Code> codes;
      for (const Vector& v : parse_vector_list(gen_arg, sp->group().order, sp->width()))
        codes.push_back(sp->encode(v));
      VectorSet w = sp->span(VectorSet(std::move(codes)));
      QuotientSpace q = quotient(sp, w);
      out.vectors("subspace", *sp, w);
      VectorSet reps;
      reps.codes = q.space->members();
      out.vectors("representatives", *sp, reps);
      out.report(q.report);
      failed = !q.report.all_passed();
    } else if (fit_cmd->parsed()) {
      LinearMap f = load_map(map_arg, sp);
      VerificationReport lin = verify_linear(f);
      out.report(lin);
      if (lin.all_passed()) {
        FirstIsomorphism fit = first_isomorphism(f);
        out.report(fit.report);
        failed = !fit.report.all_passed();
      } else {
        failed = true;
      }
    } else if (alg_cmd->parsed()) {
      if (check_module) {
        VerificationReport r1 = verify_ring_axioms(sp->group_ptr(), 2, bound);
        VerificationReport r2 = verify_module_axioms(*sp, 2, bound);
        VerificationReport r3 = verify_orbit_span(*sp);
        out.report(r1);
        out.report(r2);
        out.report(r3);
        failed = !(r1.all_passed() && r2.all_passed() && r3.all_passed());
      }
      if (!orbit_arg.empty()) {
        Code v = sp->encode(parse_vector_literal(orbit_arg, sp->group().order, sp->width()));
        out.vectors("orbit", *sp, orbit(*sp, v));
      }
      if (!proj_arg.empty()) {
        Code v = sp->encode(parse_vector_literal(proj_arg, sp->group().order, sp->width()));
        Code wit = 0;
        bool fixed = projective_fixed_point(*sp, v, &wit);
        out.field("projective-fixed-point", fixed ? "true" : "false");
        if (!fixed) out.field("witness", sp->format(wit));
        out.field("in-quasi-kernel", sp->in_quasi_kernel(v) ? "true" : "false");
      }
    } else if (diff_cmd->parsed()) {
      Code v = sp->encode(parse_vector_literal(vec_arg, sp->group().order, sp->width()));
      VerificationReport r = sp->span_difference_check(v, Label(alpha), Label(beta));
      out.report(r);
      failed = !r.all_passed();
    }
    out.flush();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::axiom_failure ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return failed ? 1 : 0;
}
