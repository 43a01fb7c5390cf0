#include "godbersen/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "godbersen/ak_solver.hpp"
#include "godbersen/concave.hpp"
#include "godbersen/errors.hpp"
#include "godbersen/inclusion.hpp"
#include "godbersen/mixed_volume.hpp"
#include "godbersen/random.hpp"

namespace godbersen {

GenKind parse_gen_kind(const std::string& name) {
  static const std::map<std::string, GenKind> kinds{{"simplex", GenKind::Simplex},
                                                    {"cube", GenKind::Cube},
                                                    {"cross_polytope", GenKind::CrossPolytope},
                                                    {"random_hull", GenKind::RandomHull},
                                                    {"random_symmetric", GenKind::RandomSymmetric}};
  const auto it = kinds.find(name);
  if (it == kinds.end()) throw ParseError("unknown generator kind '" + name + "'");
  return it->second;
}

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Simplex: return "simplex";
    case GenKind::Cube: return "cube";
    case GenKind::CrossPolytope: return "cross_polytope";
    case GenKind::RandomHull: return "random_hull";
    case GenKind::RandomSymmetric: return "random_symmetric";
  }
  return "unknown";
}

namespace {

Point unit(std::size_t n, std::size_t i, long value = 1) {
  Point p(n, Rat(0));
  p[i] = value;
  return p;
}

std::vector<Point> random_points(Rng& rng, std::size_t count, std::size_t n, long den_bound) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < count; ++i) {
    Point p;
    for (std::size_t c = 0; c < n; ++c) p.push_back(rng.rational(4, den_bound));
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

Polytope generate(const GenSpec& spec) {
  const std::size_t n = spec.dim;
  if (n < 2) throw DegenerateInput("generate: dim must be at least 2");
  switch (spec.kind) {
    case GenKind::Simplex: {
      std::vector<Point> pts{Point(n, Rat(0))};
      for (std::size_t i = 0; i < n; ++i) pts.push_back(unit(n, i));
      return build_hull(pts);
    }
    case GenKind::Cube: {
      std::vector<Point> pts;
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Point p;
        for (std::size_t i = 0; i < n; ++i) p.emplace_back(static_cast<long>((mask >> i) & 1U));
        pts.push_back(std::move(p));
      }
      return build_hull(pts);
    }
    case GenKind::CrossPolytope: {
      std::vector<Point> pts;
      for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(unit(n, i));
        pts.push_back(unit(n, i, -1));
      }
      return build_hull(pts);
    }
    case GenKind::RandomHull:
    case GenKind::RandomSymmetric: {
      const bool symmetric = spec.kind == GenKind::RandomSymmetric;
      if (!symmetric && spec.vertex_count < n + 1) {
        throw DegenerateInput("generate: random_hull needs vertex_count >= dim + 1");
      }
      if (spec.denominator_bound < 1) throw DegenerateInput("generate: denominator_bound must be positive");
      const std::size_t draws = symmetric ? std::max<std::size_t>((spec.vertex_count + 1) / 2, 1) : spec.vertex_count;
      for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
        Rng rng(spec.seed + attempt * 0x9E3779B97F4A7C15ULL);
        std::vector<Point> pts = random_points(rng, draws, n, spec.denominator_bound);
        if (symmetric) {
          const std::size_t half = pts.size();
          for (std::size_t i = 0; i < half; ++i) pts.push_back(-pts[i]);
        }
        try {
          return build_hull(pts);
        } catch (const DegenerateInput&) {
        }
      }
      throw DegenerateInput("generate: 16 degenerate draws in a row");
    }
  }
  throw DegenerateInput("generate: unknown kind");
}

std::vector<GenSpec> specs_from_json(const nlohmann::json& j) {
  const nlohmann::json& list = j.is_object() && j.contains("bodies") ? j.at("bodies") : j;
  if (!list.is_array()) throw ParseError("sweep spec must be an array or {\"bodies\": [...]}");
  std::vector<GenSpec> specs;
  for (const auto& item : list) {
    if (!item.is_object() || !item.contains("kind") || !item.contains("dim")) {
      throw ParseError("each body spec needs 'kind' and 'dim': " + item.dump());
    }
    GenSpec s;
    s.kind = parse_gen_kind(item.at("kind").get<std::string>());
    s.dim = item.at("dim").get<std::size_t>();
    s.vertex_count = item.value("vertex_count", std::size_t{0});
    s.seed = item.value("seed", std::uint64_t{0});
    s.denominator_bound = item.value("denominator_bound", 4L);
    const std::size_t count = item.value("count", std::size_t{1});
    for (std::size_t c = 0; c < count; ++c) {
      GenSpec copy = s;
      copy.seed = s.seed + c;
      specs.push_back(copy);
    }
  }
  return specs;
}

std::vector<GenSpec> default_corpus(std::uint64_t seed) {
  std::vector<GenSpec> specs;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (auto kind : {GenKind::Simplex, GenKind::Cube, GenKind::CrossPolytope}) specs.push_back({kind, n, 0, 0, 1});
  }
  const std::size_t counts[] = {0, 0, 12, 8, 4};
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t i = 0; i < counts[n]; ++i) {
      const std::uint64_t s = seed * 1000003ULL + n * 1000 + i;
      const std::size_t verts = n + 1 + i % (n == 4 ? 4 : 8);
      specs.push_back({GenKind::RandomHull, n, verts, s, 4});
      if (i % 2 == 0) specs.push_back({GenKind::RandomSymmetric, n, 2 * n + 2 * (i % 3), s + 7, 3});
    }
  }
  return specs;
}

namespace {

struct BodyOutcome {
  std::vector<SweepRow> rows;
  std::vector<std::string> observations;
  std::size_t asserted = 0;
  std::size_t violated = 0;
  bool error = false;
};

std::string body_name(std::size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "b%05zu", index);
  return buf;
}

Vector random_direction(Rng& rng, std::size_t n) {
  while (true) {
    Vector w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(rng.rational(3, 5));
    if (!is_zero(w)) return w;
  }
}

BodyOutcome process(const GenSpec& spec, std::size_t index, const SweepOptions& opt) {
  BodyOutcome out;
  const std::string id = body_name(index);
  SweepRow base;
  base.body_id = id;
  base.kind = to_string(spec.kind);
  base.n = spec.dim;

  auto fail_row = [&](const std::string& status) {
    SweepRow r = base;
    r.status = status;
    out.rows = {r};
  };
  auto check = [&](bool ok, const std::string& what) {
    ++out.asserted;
    if (!ok) {
      ++out.violated;
      throw TheoremViolation(what);
    }
  };

  try {
    const Polytope k = generate(spec);
    const std::size_t n = k.dim();
    base.vertex_count = k.vertices().size();

    const GodbersenReport report = godbersen_report(k);
    out.asserted += 2;  // j = 1 and j = n - 1, enforced inside godbersen_report

    const FeasibilityResult ak = fm_feasible(ak_system(k));
    check(ak.feasible(), "A_K is empty");
    ak_point(k);
    if (k.is_simplex()) check(ak.unique, "A_K is not a single point for a simplex");
    else if (ak.unique) out.observations.push_back(id + ": A_K is a single point for a non-simplex");

    const bool inclusion = inclusion_in_nK(k);
    ++out.asserted;
    const TightnessProfile tight = tightness_profile(k);
    if (k.is_simplex()) check(tight.all_tight(), "simplex with a non-tight facet");
    else if (tight.all_tight()) out.observations.push_back(id + ": all facets tight for a non-simplex");
    if (tight.all_tight()) check(k.facets().size() == n + 1, "all tight but facet count != n + 1");

    bool moment_zero = true;
    const Polytope k0 = centered(k);
    for (const auto& f : k.facets()) moment_zero = moment_zero && raw_moment(k0, f.normal).is_zero();
    check(moment_zero, "nonzero directional moment at a facet normal");

    Rng rng(opt.seed ^ (spec.seed * 0x2545F4914F6CDD1DULL) ^ (index + 1));
    for (std::size_t d = 0; d < opt.random_directions; ++d) {
      const Vector w = random_direction(rng, n);
      check(slice_root_concavity(k, w, opt.concavity_samples), "section root not concave along " + to_string(w));
    }

    for (const auto& e : report.entries) {
      SweepRow r = base;
      r.j = e.j;
      r.ratio = e.ratio;
      r.tight_count = tight.tight_count();
      r.ak_unique = ak.unique;
      r.moment_zero = moment_zero;
      r.inclusion_ok = inclusion;
      if (e.ratio > Rat(1)) {
        r.status = "observation";
        out.observations.push_back(id + ": ratio " + e.ratio.str() + " > 1 at j = " + std::to_string(e.j));
      }
      if (!e.nmin_ok || !e.artstein_ok) {
        r.status = "observation";
        out.observations.push_back(id + ": classical bound failed at j = " + std::to_string(e.j));
      }
      out.rows.push_back(std::move(r));
    }
  } catch (const TheoremViolation& e) {
    if (out.violated == 0) out.violated = 1;
    fail_row(std::string("VIOLATION: ") + e.what());
  } catch (const std::exception& e) {
    out.error = true;
    fail_row(std::string("error: ") + e.what());
  }
  return out;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

SweepSummary sweep(const std::vector<GenSpec>& specs, std::ostream& csv, const SweepOptions& options,
                   std::ostream* log) {
  std::vector<std::optional<BodyOutcome>> outcomes(specs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      outcomes[i] = process(specs[i], i, options);
      if (outcomes[i]->violated > 0) stop = true;
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, specs.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  csv << kSweepHeader << '\n';
  csv << "body_id,kind,n,vertex_count,j,ratio,tight_count,ak_unique,moment_zero,inclusion_ok,status";
  if (options.floats) csv << ",ratio_approx";
  csv << '\n';

  SweepSummary summary;
  for (const auto& o : outcomes) {
    if (!o) continue;
    ++summary.bodies;
    summary.asserted += o->asserted;
    summary.violated += o->violated;
    summary.errors += o->error ? 1 : 0;
    summary.observed += o->observations.size();
    if (log) {
      for (const auto& obs : o->observations) *log << "OBSERVATION " << obs << '\n';
      if (o->violated > 0) *log << "VIOLATION " << o->rows.front().body_id << ": " << o->rows.front().status << '\n';
    }
    for (const auto& r : o->rows) {
      ++summary.rows;
      csv << r.body_id << ',' << r.kind << ',' << r.n << ',' << r.vertex_count << ',' << r.j << ','
          << r.ratio.str() << ',' << r.tight_count << ',' << (r.ak_unique ? "true" : "false") << ','
          << (r.moment_zero ? "true" : "false") << ',' << (r.inclusion_ok ? "true" : "false") << ','
          << csv_field(r.status);
      if (options.floats) {
        std::ostringstream approx;
        approx.precision(12);
        approx << r.ratio.to_double();
        csv << ',' << approx.str();
      }
      csv << '\n';
    }
  }
  return summary;
}

}  // namespace godbersen
