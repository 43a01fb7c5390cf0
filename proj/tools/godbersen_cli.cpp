// Command-line front end for the godbersen library.
//
//   godbersen verify  --input K.json [--j J]
//   godbersen ak      --input K.json|S.json
//   godbersen helly   --input K.json|S.json [--cap N]
//   godbersen moment  --input K.json --w "a,b,c"
//   godbersen concave --input F.json --m M
//   godbersen gen     --kind KIND --dim N --seed S --out K.json
//   godbersen sweep   [--spec SPEC.json] --out OUT.csv [--jobs N] [--seed S] [--floats]
//
// Exit codes: 0 success, 1 usage or input error, 2 theorem violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "godbersen/ak_solver.hpp"
#include "godbersen/concave.hpp"
#include "godbersen/errors.hpp"
#include "godbersen/harness.hpp"
#include "godbersen/inclusion.hpp"
#include "godbersen/io.hpp"
#include "godbersen/mixed_volume.hpp"

namespace {

using godbersen::io::json;

godbersen::Vector parse_direction(const std::string& text) {
  godbersen::Vector w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) w.push_back(godbersen::Rat::parse(item));
  return w;
}

bool is_system(const json& j) { return j.is_object() && j.contains("rows"); }

godbersen::System system_for(const json& j) {
  return is_system(j) ? godbersen::io::system_from_json(j)
                      : godbersen::ak_system(godbersen::io::polytope_from_json(j));
}

int run_verify(const std::string& input, int only_j) {
  const auto k = godbersen::io::polytope_from_json(godbersen::io::read_json(input));
  const auto report = godbersen::godbersen_report(k);
  json out = godbersen::io::to_json(report);
  if (only_j > 0) {
    json filtered = json::array();
    for (const auto& e : out["entries"]) {
      if (e["j"].get<int>() == only_j) filtered.push_back(e);
    }
    out["entries"] = filtered;
  }
  out["inclusion_ok"] = godbersen::inclusion_in_nK(k);
  out["tightness"] = godbersen::io::to_json(godbersen::tightness_profile(k));
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_ak(const std::string& input) {
  const json j = godbersen::io::read_json(input);
  json out;
  if (is_system(j)) {
    out = godbersen::io::to_json(godbersen::fm_feasible(godbersen::io::system_from_json(j)));
  } else {
    const auto k = godbersen::io::polytope_from_json(j);
    const auto system = godbersen::ak_system(k);
    auto result = godbersen::fm_feasible(system);
    godbersen::ak_point(k);
    out = godbersen::io::to_json(result);
    out["system"] = godbersen::io::to_json(system);
    out["centroid"] = godbersen::io::to_json(k.centroid());
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_helly(const std::string& input, std::uint64_t cap) {
  const auto system = system_for(godbersen::io::read_json(input));
  const bool ok = godbersen::helly_audit(system, cap);
  std::cout << json{{"halfspaces", system.halfspaces.size()}, {"all_subsets_feasible", ok}}.dump(2) << '\n';
  return 0;
}

int run_moment(const std::string& input, const std::string& direction) {
  const auto k = godbersen::io::polytope_from_json(godbersen::io::read_json(input));
  const auto w = parse_direction(direction);
  const json out = {{"w", godbersen::io::to_json(w)},
                    {"moment", godbersen::io::to_json(godbersen::directional_moment(k, w))},
                    {"raw_moment", godbersen::io::to_json(godbersen::raw_moment(k, w))},
                    {"width", godbersen::io::to_json(godbersen::width(k, w))}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_concave(const std::string& input, unsigned m) {
  const auto f = godbersen::io::pl_concave_from_json(godbersen::io::read_json(input));
  const auto r = godbersen::concave_integral_check(f, m);
  const json out = {{"value", godbersen::io::to_json(r.value)},
                    {"nonneg", r.nonneg},
                    {"equality", r.equality},
                    {"equality_characterized", r.equality_characterized}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of Godbersen-type inequalities on rational polytopes"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  int only_j = 0;
  auto* verify = app.add_subcommand("verify", "Mixed-volume ratios and inclusion report for one body");
  verify->add_option("--input", input, "Polytope JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--j", only_j, "Only report this j");

  auto* ak = app.add_subcommand("ak", "Point of A_K (or feasibility of a halfspace system)");
  ak->add_option("--input", input, "Polytope or system JSON")->required()->check(CLI::ExistingFile);

  std::uint64_t cap = godbersen::default_subset_cap();
  auto* helly = app.add_subcommand("helly", "Audit every (n+1)-subsystem");
  helly->add_option("--input", input, "Polytope or system JSON")->required()->check(CLI::ExistingFile);
  helly->add_option("--cap", cap, "Maximum number of subsets");

  std::string direction;
  auto* moment = app.add_subcommand("moment", "Centered directional moment and width");
  moment->add_option("--input", input, "Polytope JSON")->required()->check(CLI::ExistingFile);
  moment->add_option("--w", direction, "Direction, comma separated rationals")->required();

  unsigned m = 2;
  auto* concave = app.add_subcommand("concave", "Integral inequality for a piecewise-linear concave function");
  concave->add_option("--input", input, "PLConcave JSON")->required()->check(CLI::ExistingFile);
  concave->add_option("--m", m, "Exponent parameter m >= 2");

  godbersen::GenSpec gen_spec;
  std::string kind = "simplex";
  auto* gen = app.add_subcommand("gen", "Generate a polytope");
  gen->add_option("--kind", kind, "simplex|cube|cross_polytope|random_hull|random_symmetric")->required();
  gen->add_option("--dim", gen_spec.dim, "Dimension")->required();
  gen->add_option("--seed", gen_spec.seed, "Seed");
  gen->add_option("--vertices", gen_spec.vertex_count, "Point count for random kinds");
  gen->add_option("--denominator-bound", gen_spec.denominator_bound, "Largest coordinate denominator");
  gen->add_option("--out", out_path, "Output JSON (stdout if omitted)");

  std::string spec_path;
  godbersen::SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Run every check over a corpus and write CSV rows");
  sweep->add_option("--spec", spec_path, "Body spec JSON (default corpus if omitted)")->check(CLI::ExistingFile);
  sweep->add_option("--out", out_path, "CSV output")->required();
  sweep->add_option("--jobs", sweep_opts.jobs, "Worker threads");
  sweep->add_option("--seed", sweep_opts.seed, "Seed for the default corpus and random directions");
  sweep->add_flag("--floats", sweep_opts.floats, "Add decimal approximation columns");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_verify(input, only_j);
    if (*ak) return run_ak(input);
    if (*helly) return run_helly(input, cap);
    if (*moment) return run_moment(input, direction);
    if (*concave) return run_concave(input, m);
    if (*gen) {
      gen_spec.kind = godbersen::parse_gen_kind(kind);
      if (gen_spec.vertex_count == 0) gen_spec.vertex_count = 2 * gen_spec.dim + 2;
      const json out = godbersen::io::to_json(godbersen::generate(gen_spec));
      if (out_path.empty()) {
        std::cout << out.dump(2) << '\n';
      } else {
        godbersen::io::write_json(out_path, out);
      }
      return 0;
    }
    if (*sweep) {
      const auto specs = spec_path.empty() ? godbersen::default_corpus(sweep_opts.seed)
                                           : godbersen::specs_from_json(godbersen::io::read_json(spec_path));
      std::ofstream csv(out_path, std::ios::binary);
      if (!csv) throw std::runtime_error("cannot write " + out_path);
      const auto s = godbersen::sweep(specs, csv, sweep_opts, &std::cerr);
      std::cerr << "bodies=" << s.bodies << " rows=" << s.rows << " asserted=" << s.asserted
                << " observed=" << s.observed << " violated=" << s.violated << " errors=" << s.errors << '\n';
      return s.violated == 0 ? 0 : 2;
    }
  } catch (const godbersen::TheoremViolation& e) {
    std::cerr << "VIOLATION: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
